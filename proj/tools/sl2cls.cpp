// Command-line front end for the class-product engine and its oracle.

#include "sl2/classify.hpp"
#include "sl2/errors.hpp"
#include "sl2/notation.hpp"
#include "sl2/oracle.hpp"
#include "sl2/product.hpp"
#include "sl2/psl2.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using sl2::ClassId;
using sl2::ClassSet;
using Json = nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct RunConfig {
  std::uint64_t seed = 0;
  std::int64_t trials = 10000;
  double tol = 1e-9;
  std::int64_t snap_bound = 360;
  bool json = false;
  std::string group = "SL2";

  sl2::Tolerances tolerances() const {
    sl2::Tolerances t;
    t.det = tol;
    t.trace = tol;
    t.angle_max_den = snap_bound;
    return t;
  }
  bool psl2() const { return group == "PSL2"; }
};

Json query_json(const std::vector<ClassId>& q) {
  Json j = Json::array();
  for (const auto& c : q) j.push_back(c.to_string());
  return j;
}

std::string query_text(const std::vector<ClassId>& q) {
  std::string s;
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? " * " : "") + q[i].to_string();
  return s;
}

int cmd_product(const std::string& expr, const RunConfig& cfg) {
  const auto q = sl2::parse_product(expr);
  if (cfg.psl2()) {
    std::vector<sl2::TildeClass> t(q.begin(), q.end());
    const auto r = sl2::psl2_product(t);
    if (cfg.json)
      std::cout << Json{{"query", query_json(q)}, {"group", "PSL2"}, {"result", r.to_string()}, {"lift", sl2::to_json(r.lift())}}
                       .dump(2)
                << '\n';
    else
      std::cout << r.to_string() << '\n';
    return 0;
  }
  const ClassSet r = sl2::product_n(q);
  if (cfg.json)
    std::cout << Json{{"query", query_json(q)}, {"group", "SL2"}, {"result", sl2::format_notation(r)}, {"set", sl2::to_json(r)}}
                     .dump(2)
              << '\n';
  else
    std::cout << sl2::format_notation(r) << '\n';
  return 0;
}

sl2::Mat2 parse_matrix(const std::string& text, double det_tol) {
  std::vector<double> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::size_t b = pos, e = end;
    while (b < e && text[b] == ' ') ++b;
    while (e > b && text[e - 1] == ' ') --e;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data() + b, text.data() + e, x);
    if (b == e || ec != std::errc() || ptr != text.data() + e) throw sl2::ParseError("expected a decimal number", b);
    v.push_back(x);
    pos = end + 1;
  }
  if (v.size() != 4) throw sl2::ParseError("expected four comma-separated entries a,b,c,d", 0);
  return sl2::Mat2::from_entries(v[0], v[1], v[2], v[3], det_tol);
}

int cmd_classify(const std::string& text, const RunConfig& cfg) {
  const auto tol = cfg.tolerances();
  const sl2::Mat2 m = parse_matrix(text, tol.det);
  const ClassId id = sl2::classify(m, tol);
  const std::string name = cfg.psl2() ? sl2::TildeClass(id).rep().to_string() + "~" : id.to_string();
  if (cfg.json)
    std::cout << Json{{"matrix", {m.a(), m.b(), m.c(), m.d()}}, {"trace", m.trace()}, {"class", name}}.dump(2) << '\n';
  else
    std::cout << name << '\n';
  return 0;
}

int cmd_verify(const std::string& expr, const RunConfig& cfg) {
  if (cfg.psl2()) throw sl2::DomainError("verify samples matrices in SL2; drop --group PSL2");
  const auto q = sl2::parse_product(expr);
  sl2::OracleOptions opts;
  opts.tol = cfg.tolerances();
  const auto rep = sl2::verify_product(q, sl2::product_n(q), cfg.trials, cfg.seed, opts);
  if (cfg.json)
    std::cout << rep.to_json().dump(2) << '\n';
  else
    std::cout << rep.summary_line() << '\n';
  return rep.sound() && rep.fully_covered() ? 0 : kExitViolation;
}

int cmd_figure1(const std::string& step_text, bool signed_angles, const RunConfig& cfg) {
  const sl2::Rational step = sl2::parse_rational(step_text);
  const auto rows = signed_angles ? sl2::figure1_grid_signed(step) : sl2::figure1_grid(step);
  if (cfg.json) {
    Json j = Json::array();
    for (const auto& r : rows)
      j.push_back({sl2::to_string(r.alpha), sl2::to_string(r.beta), sl2::to_string(r.gamma), r.contains_identity});
    std::cout << j.dump() << '\n';
  } else {
    std::cout << sl2::figure1_csv(rows);
  }
  return 0;
}

int cmd_tables(const RunConfig& cfg) {
  Json j = Json::array();
  for (const auto& row : sl2::reconstructed_tables()) {
    const std::string value = sl2::format_notation(sl2::product_n(row.example));
    if (cfg.json) {
      j.push_back({{"factors", row.factors},
                   {"condition", row.condition},
                   {"formula", row.formula},
                   {"provenance", row.provenance},
                   {"example", query_text(row.example)},
                   {"value", value}});
    } else {
      std::cout << row.factors << '\t' << (row.condition.empty() ? "-" : row.condition) << '\t' << row.formula << '\t'
                << query_text(row.example) << " = " << value << '\t' << row.provenance << '\n';
    }
  }
  if (cfg.json) std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_covering(const RunConfig& cfg) {
  const auto probe = sl2::default_covering_probe();
  const auto r = sl2::covering_numbers(probe);
  if (cfg.json) {
    std::cout << Json{{"cn", r.cn}, {"ecn", r.ecn}, {"cn_witness", r.cn_witness.to_string()},
                      {"ecn_witness", query_json(r.ecn_witness)}, {"probe", query_json(probe)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "cn=" << r.cn << " ecn=" << r.ecn << '\n'
              << "cn witness: " << r.cn_witness.to_string() << '\n'
              << "ecn witness: " << query_text(r.ecn_witness) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Products of conjugacy classes in SL2(R) and PSL2(R)"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Samples per verification")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--tol", cfg.tol, "Classification tolerance, in (0, 1e-3]")
      ->check([](const std::string& s) -> std::string {
        double v = 0.0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return ec == std::errc() && p == s.data() + s.size() && v > 0.0 && v <= 1e-3 ? "" : "tol must lie in (0, 1e-3]";
      })
      ->capture_default_str();
  app.add_option("--snap-bound", cfg.snap_bound, "Largest angle denominator accepted when snapping")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--group", cfg.group, "SL2 or PSL2")->check(CLI::IsMember({"SL2", "PSL2"}))->capture_default_str();

  std::string expr, matrix, step = "1/24";
  bool signed_angles = false;
  auto* product = app.add_subcommand("product", "Class set of a product such as \"C2[++] * C3[1/3]\"");
  product->add_option("expr", expr)->required();
  auto* classify = app.add_subcommand("classify", "Class of a matrix given as a,b,c,d");
  classify->add_option("matrix", matrix)->required();
  auto* verify = app.add_subcommand("verify", "Check a product against random matrices");
  verify->add_option("expr", expr)->required();
  auto* figure1 = app.add_subcommand("figure1", "CSV of angle triples with I in the product");
  figure1->add_option("--step", step, "Grid step in pi-units")->capture_default_str();
  figure1->add_flag("--signed", signed_angles, "Angles in ]-1,1[ instead of ]0,2[");
  auto* tables = app.add_subcommand("tables", "Pair and triple product tables");
  auto* covering = app.add_subcommand("covering", "Covering numbers of PSL2(R) on the probe grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (product->parsed()) return cmd_product(expr, cfg);
    if (classify->parsed()) return cmd_classify(matrix, cfg);
    if (verify->parsed()) return cmd_verify(expr, cfg);
    if (figure1->parsed()) return cmd_figure1(step, signed_angles, cfg);
    if (tables->parsed()) return cmd_tables(cfg);
    if (covering->parsed()) return cmd_covering(cfg);
  } catch (const sl2::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const sl2::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
