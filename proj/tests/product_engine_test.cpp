#include "sl2/errors.hpp"
#include "sl2/notation.hpp"
#include "sl2/product.hpp"
#include "sl2/psl2.hpp"

#include <doctest.h>

#include <map>
#include <random>

using namespace sl2;

namespace {

ClassSet P(const char* text) { return parse_notation(text); }
ClassId C(const char* text) { return parse_class_id(text); }
ClassSet prod(const char* text) { return product_n(parse_product(text)); }
ClassSet direct(const char* text) { return product_direct(parse_product(text)); }

std::vector<ClassId> grid_classes() {
  std::vector<ClassId> out{ClassId::scalar(1), ClassId::scalar(-1)};
  for (int e : {1, -1})
    for (int d : {1, -1}) out.push_back(ClassId::parabolic(e, d));
  for (int k = 1; k < 12; ++k)
    if (k != 6) out.push_back(ClassId::elliptic(Rational(k, 6)));
  for (const Rational l : {Rational(3, 2), Rational(2), Rational(-3, 2), Rational(-2)})
    out.push_back(ClassId::hyperbolic(l));
  return out;
}

}  // namespace

TEST_CASE("pair products") {
  CHECK(product_pair(C("C2[++]"), C("C2[++]")) == P("C3[0,1]>"));
  CHECK(product_pair(C("C3[1/3]"), C("C3[1/3]")) == P("C3[2/3,1]>"));
  CHECK(product_pair(C("C3[1/2]"), C("C3[1/2]")) == P("-I | C4-"));
  CHECK(product_pair(C("C3[2/3]"), C("C3[2/3]")) == P("C3<[1,4/3]"));
  CHECK(product_pair(C("C2[++]"), C("C2[+-]")) == P("I | C2[++] | C2[+-] | C4+"));
  CHECK(product_pair(C("C2[+-]"), C("C2[+-]")) == P("C3<[1,2]"));
  CHECK(product_pair(C("C3[1/4]"), C("C2[++]")) == P("C3]1/4,1]>"));
  CHECK(product_pair(C("C3[1/4]"), C("C2[+-]")) == P("C3<[0,1/4["));
  CHECK(product_pair(C("C4[2]"), C("C4[2]")) == P("{-I}^c"));
  CHECK(product_pair(C("C4[2]"), C("C4[3]")) == P("{I | -I}^c"));
  CHECK(product_pair(C("C4[2]"), C("C2[++]")) == P("C3<[0,1]>"));
  CHECK(product_pair(C("-I"), C("C3[1/3]")) == P("C3[4/3]"));
  CHECK(product_pair(C("I"), C("C2[-+]")) == P("C2[-+]"));
}

TEST_CASE("pair products respect negation and inversion") {
  const auto g = grid_classes();
  for (const auto& x : g)
    for (const auto& y : g) {
      const ClassSet xy = product_pair(x, y);
      CHECK(product_pair(x.negated(), y) == xy.negate());
      CHECK(product_pair(y, x) == xy);
      CHECK(product_pair(y.inverted(), x.inverted()) == xy.invert());
    }
}

TEST_CASE("set times class") {
  CHECK(product_set_class(P("C3]0,1["), C("C2[+-]")) == P("C3<[0,1["));
  CHECK(product_set_class(ClassSet(), C("C2[++]")).empty());
  CHECK(product_set_class(P("C3[0,1]>"), C("C2[++]")) == P("{I}^c"));
  CHECK(product_set_class(P("I | -I"), C("C3[1/3]")) == P("C3[1/3] | C3[4/3]"));
  CHECK(product_set_class(ClassSet::whole(), C("C3[1/3]")).is_whole());
}

TEST_CASE("tuple products") {
  CHECK(prod("C2[++]^3") == P("{I}^c"));
  CHECK(prod("C3[1/3]^3") == P("-I | C3<[1,2]>"));
  CHECK(prod("C3[1/2]^4") == P("{-I}^c"));
  CHECK(prod("C3[1/2]^3") == P("C3<[1,2]>"));
  CHECK(prod("C3[1/6]^3") == P("{I | C3[0,1/2[}^c"));
  CHECK(prod("C2[++]^2 * C2[+-]") == P("{-I | C3[1,2[}^c"));
  CHECK(prod("C3[1/3] * C2[++] * C2[+-]") == P("C3<[0,1]>"));
  CHECK(prod("C4[2] * C2[++] * C2[+-]") == P("{-I}^c"));
  CHECK(prod("C4[2] * C4[3] * C3[1/5]").is_whole());
  CHECK(prod("C2[++] * C2[+-] * C3[1/3] * C4[5/2] * C3[7/4]").is_whole());
  CHECK(prod("C3[1/3] * -I * C3[1/3]") == prod("C3[1/3]^2").negate());
  CHECK(prod("I") == P("I"));
  CHECK_THROWS_AS(product_n(std::vector<ClassId>{}), DomainError);
}

TEST_CASE("fold and closed form agree") {
  const auto g = grid_classes();
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  for (int n : {2, 3, 4, 5})
    for (int t = 0; t < 400; ++t) {
      std::vector<ClassId> q;
      for (int i = 0; i < n; ++i) q.push_back(g[pick(rng)]);
      CHECK(product_n(q) == product_direct(q));
    }
  CHECK(direct("C2[++]^2 * C2[+-]") == P("{-I | C3[1,2[}^c"));
  const std::vector<ClassId> inexact(3, ClassId::elliptic(Angle(Parameter::from_float(0.25 + 1e-9))));
  CHECK_THROWS_AS(product_direct(inexact), DomainError);
}

TEST_CASE("scalar membership") {
  CHECK(scalar_membership(parse_product("C3[1/3]^3 * C2[++]"), 1));
  CHECK_FALSE(scalar_membership(parse_product("C2[++]^3"), 1));
  CHECK(scalar_membership(parse_product("C2[++]^3"), -1));
  CHECK(scalar_membership(parse_product("C3[1/3] * C3[5/3]"), 1));
  const auto q = parse_product("C2[++] * C2[+-] * C3[1/4] * C3[3/4]");
  CHECK(scalar_membership(q, 1) == product_n(q).has_I);
  CHECK(scalar_membership(q, -1) == product_n(q).has_negI);
}

TEST_CASE("identity in elliptic triples") {
  CHECK_FALSE(figure1_contains_identity(Angle(1, 2), Angle(1, 2), Angle(1, 2)));
  CHECK(figure1_contains_identity(Angle(1, 3), Angle(1, 3), Angle(4, 3)));
  CHECK_FALSE(figure1_contains_identity(Angle(1, 6), Angle(1, 6), Angle(1, 6)));
  CHECK_FALSE(figure1_contains_identity(Angle(3, 2), Angle(3, 2), Angle(3, 2)));
  CHECK(figure1_contains_identity(Angle(5, 3), Angle(5, 3), Angle(2, 3)));

  const auto rows = figure1_grid(Rational(1, 12));
  CHECK(rows.size() == 22u * 22u * 22u);
  auto key = [](const Rational& a, const Rational& b, const Rational& c) {
    return to_string(a) + "," + to_string(b) + "," + to_string(c);
  };
  std::map<std::string, bool> index;
  for (const auto& r : rows) index[key(r.alpha, r.beta, r.gamma)] = r.contains_identity;
  CHECK_FALSE(index.at("1/2,1/2,1/2"));
  for (const auto& r : rows) {
    CHECK(index.at(key(r.beta, r.alpha, r.gamma)) == r.contains_identity);
    CHECK(index.at(key(r.gamma, r.beta, r.alpha)) == r.contains_identity);
    CHECK(index.at(key(2 - r.alpha, 2 - r.beta, 2 - r.gamma)) == r.contains_identity);
  }
  const std::string csv = figure1_csv(rows);
  CHECK(csv.rfind("alpha,beta,gamma,contains_I\n", 0) == 0);
  CHECK(csv.find("\n1/2,1/2,1/2,false\n") != std::string::npos);

  const auto signed_rows = figure1_grid_signed(Rational(1, 12));
  CHECK(signed_rows.size() == rows.size());
  for (const auto& r : signed_rows) {
    CHECK(r.alpha > -1);
    CHECK(r.alpha < 1);
    CHECK(r.alpha != 0);
  }
  CHECK_THROWS_AS(figure1_grid(Rational(0)), DomainError);
}

TEST_CASE("projective products") {
  auto t = [](const char* text) {
    std::vector<TildeClass> out;
    for (const auto& id : parse_product(text)) out.emplace_back(id);
    return out;
  };
  CHECK(psl2_product(t("C2[++]^2")) == PslClassSet::whole_minus_identity());
  CHECK(psl2_product(t("C3[1/2]^3")) == PslClassSet::whole_minus_identity());
  CHECK(psl2_product(t("C3[1/100]^3")).is_whole());
  CHECK(psl2_product(t("C4[2]^2")).is_whole());
  CHECK(psl2_product(t("C2[++] * C2[-+] * C3[1/7] * C3[3/7]")).is_whole());
  CHECK(psl2_product(t("C2[++]^2")).to_string() == "G~ \\ {I~}");
  CHECK(psl2_product(t("C4[2]^2")).to_string() == "G~");
  CHECK(TildeClass(C("C3[4/3]")) == TildeClass(C("C3[1/3]")));
  CHECK(TildeClass(C("-I")).is_identity());
}

TEST_CASE("covering numbers") {
  const auto probe = default_covering_probe();
  CHECK(probe.size() == 16u);
  const CoveringResult r = covering_numbers(probe);
  CHECK(r.cn == 4);
  CHECK(r.ecn == 4);
  CHECK(r.ecn_witness.size() == 3u);
  std::vector<TildeClass> cube(3, TildeClass(r.cn_witness));
  CHECK_FALSE(psl2_product(cube).is_whole());
  std::vector<TildeClass> w;
  for (const auto& id : r.ecn_witness) w.emplace_back(id);
  CHECK_FALSE(psl2_product(w).is_whole());
  const std::vector<ClassId> hyp{C("C4[2]")};
  CHECK(covering_numbers(hyp).cn == 2);
}

TEST_CASE("reconstructed tables") {
  const auto rows = reconstructed_tables();
  CHECK(rows.size() == 36u);
  for (const auto& r : rows) {
    CAPTURE(r.factors);
    CAPTURE(r.condition);
    CHECK(product_n(r.example) == product_direct(r.example));
    CHECK((r.provenance == "lemma-derived" || r.provenance == "calculus-derived" ||
           r.provenance == "inverse-closure, oracle-checked"));
  }
}
