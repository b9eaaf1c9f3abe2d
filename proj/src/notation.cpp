#include "sl2/notation.hpp"

#include "sl2/errors.hpp"

#include <cctype>
#include <charconv>

namespace sl2 {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ClassSet parse_all() {
    ClassSet s = parse_set();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  // Raw next character, no whitespace skipping (inside tokens).
  char raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ClassSet parse_set() {
    ClassSet lhs = parse_unary();
    for (;;) {
      const char op = peek();
      if (op != '|' && op != '&' && op != '\\') return lhs;
      ++pos_;
      const ClassSet rhs = parse_unary();
      if (op == '|') lhs = lhs.unite(rhs);
      if (op == '&') lhs = lhs.intersect(rhs);
      if (op == '\\') lhs = lhs.minus(rhs);
    }
  }

  ClassSet parse_unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return parse_unary().negate();
    }
    if (c == '~') {
      ++pos_;
      return parse_unary().invert();
    }
    ClassSet s = parse_primary();
    while (peek() == '^') {
      ++pos_;
      if (raw() != 'c') fail("expected 'c' after '^'");
      ++pos_;
      s = s.complement();
    }
    return s;
  }

  ClassSet parse_primary() {
    const char c = peek();
    if (c == '{') {
      ++pos_;
      if (peek() == '}') {
        ++pos_;
        return {};
      }
      ClassSet s = parse_set();
      while (peek() == ',') {
        ++pos_;
        s = s.unite(parse_set());
      }
      expect('}');
      return s;
    }
    if (c == '(') {
      ++pos_;
      ClassSet s = parse_set();
      expect(')');
      return s;
    }
    if (c == 'I') {
      ++pos_;
      return ClassSet::singleton(ClassId::scalar(1));
    }
    if (c == 'G') {
      ++pos_;
      if (raw() == '+') {
        ++pos_;
        return ClassSet::gplus();
      }
      return ClassSet::whole();
    }
    if (c == 'C') {
      ++pos_;
      const char family = raw();
      ++pos_;
      if (family == '2') return parse_parabolic();
      if (family == '3') return parse_elliptic();
      if (family == '4') return parse_hyperbolic();
      --pos_;
      fail("expected class family 2, 3 or 4 after 'C'");
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  int parse_sign_char() {
    const char s = raw();
    if (s != '+' && s != '-') fail("expected '+' or '-'");
    ++pos_;
    return s == '+' ? 1 : -1;
  }

  ClassSet parse_parabolic() {
    if (raw() != '[') fail("expected '[' after C2");
    ++pos_;
    const int eps = parse_sign_char();
    const int delta = parse_sign_char();
    if (raw() != ']') fail("expected ']'");
    ++pos_;
    return ClassSet::singleton(ClassId::parabolic(eps, delta));
  }

  Rational parse_rat() {
    skip_ws();
    const std::size_t start = pos_;
    if (raw() == '-' || raw() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(raw())) || raw() == '/') ++pos_;
    const std::string_view token = text_.substr(start, pos_ - start);
    if (token.empty() || token == "-" || token == "+") {
      pos_ = start;
      fail("expected a rational number");
    }
    try {
      return parse_rational(token);
    } catch (const ParseError& e) {
      throw ParseError("malformed rational '" + std::string(token) + "'", start);
    }
  }

  ClassSet parse_hyperbolic() {
    const char c = raw();
    if (c == '+' || c == '-') {
      ++pos_;
      ClassSet s;
      (c == '+' ? s.hyp_pos : s.hyp_neg) = HypSet::full();
      return s;
    }
    if (c != '[') fail("expected '+', '-' or '[' after C4");
    ++pos_;
    const std::size_t at = pos_;
    const Rational lambda = parse_rat();
    if (!(lambda > 1 || lambda < -1))
      throw DomainError("hyperbolic eigenvalue " + to_string(lambda) + " at position " + std::to_string(at) +
                        " must satisfy |lambda| > 1");
    expect(']');
    return ClassSet::singleton(ClassId::hyperbolic(lambda));
  }

  ClassSet parse_elliptic() {
    // Left bracket: "<[", "[", "]", "(".
    enum class End { Open, Closed, Angle };
    End lb;
    const std::size_t lb_pos = pos_;
    const char c = raw();
    if (c == '<') {
      ++pos_;
      if (raw() != '[') fail("expected '[' after '<'");
      ++pos_;
      lb = End::Angle;
    } else if (c == '[') {
      ++pos_;
      lb = End::Closed;
    } else if (c == ']' || c == '(') {
      ++pos_;
      lb = End::Open;
    } else {
      fail("expected an interval bracket after C3");
    }
    const std::size_t lo_pos = pos_;
    const Rational lo = parse_rat();
    if (lb == End::Closed && peek() == ']') {
      ++pos_;
      if (!(lo > 0 && lo < 2 && lo != 1))
        throw DomainError("elliptic angle " + to_string(lo) + " at position " + std::to_string(lo_pos) +
                          " must lie in ]0,2[ \\ {1}");
      return ClassSet::singleton(ClassId::elliptic(lo));
    }
    expect(',');
    const std::size_t hi_pos = pos_;
    const Rational hi = parse_rat();
    skip_ws();
    End rb;
    const char r = raw();
    if (r == ']') {
      ++pos_;
      if (raw() == '>') {
        ++pos_;
        rb = End::Angle;
      } else {
        rb = End::Closed;
      }
    } else if (r == '[' || r == ')') {
      ++pos_;
      rb = End::Open;
    } else {
      fail("expected a closing interval bracket");
    }

    if (lo < 0 || hi > 2 || hi < lo) throw ParseError("interval ends must satisfy 0 <= lo <= hi <= 2", lo_pos);
    ClassSet s;
    const bool lo_special = lo == 0 || lo == 1;
    const bool hi_special = hi == 1 || hi == 2;
    if (lb == End::Angle && !lo_special) throw ParseError("'<[' is only allowed at 0 or 1", lb_pos);
    if (rb == End::Angle && !hi_special) throw ParseError("']>' is only allowed at 1 or 2", hi_pos);
    if (lb != End::Open && lo_special) {
      s.par[lo == 0 ? parabolic_index(1, 1) : parabolic_index(-1, -1)] = true;
      if (lb == End::Angle) (lo == 0 ? s.hyp_pos : s.hyp_neg) = HypSet::full();
    }
    if (rb != End::Open && hi_special) {
      s.par[hi == 1 ? parabolic_index(-1, 1) : parabolic_index(1, -1)] = true;
      if (rb == End::Angle) (hi == 1 ? s.hyp_neg : s.hyp_pos) = HypSet::full();
    }
    s.ell = EllipticSet::from_intervals({{lo, hi, lb == End::Closed, rb == End::Closed}});
    return s;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string par_name(int eps, int delta) {
  return std::string("C2[") + (eps > 0 ? '+' : '-') + (delta > 0 ? '+' : '-') + "]";
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> hyp_terms(const HypSet& h, bool full_consumed, const char* family) {
  std::vector<std::string> out;
  if (h.is_full()) {
    if (!full_consumed) out.push_back(std::string("C4") + family);
  } else if (h.is_cofinite()) {
    std::string t = std::string("{C4") + family;
    for (const auto& v : h.values()) t += " \\ C4[" + to_string(v) + "]";
    out.push_back(t + "}");
  } else {
    for (const auto& v : h.values()) out.push_back("C4[" + to_string(v) + "]");
  }
  return out;
}

std::vector<std::string> terms(const ClassSet& x) {
  std::vector<std::string> out;
  if (x.has_I) out.push_back("I");
  if (x.has_negI) out.push_back("-I");

  auto par = x.par;
  bool pos_free = x.hyp_pos.is_full();
  bool neg_free = x.hyp_neg.is_full();
  const bool pos_full = pos_free;
  const bool neg_full = neg_free;
  auto take = [&](int eps, int delta) {
    bool& f = par[parabolic_index(eps, delta)];
    const bool had = f;
    f = false;
    return had;
  };
  auto take_hyp = [](bool& free) {
    const bool had = free;
    free = false;
    return had;
  };

  for (const auto& iv : x.ell.atoms()) {
    if (iv.is_point()) {
      out.push_back("C3[" + to_string(iv.lo) + "]");
      continue;
    }
    std::string lb = iv.lo_closed ? "[" : "]";
    if (iv.lo == 0 && take(1, 1)) lb = take_hyp(pos_free) ? "<[" : "[";
    if (iv.lo == 1 && take(-1, -1)) lb = take_hyp(neg_free) ? "<[" : "[";
    std::string rb = iv.hi_closed ? "]" : "[";
    if (iv.hi == 1 && take(-1, 1)) rb = take_hyp(neg_free) ? "]>" : "]";
    if (iv.hi == 2 && take(1, -1)) rb = take_hyp(pos_free) ? "]>" : "]";
    out.push_back("C3" + lb + to_string(iv.lo) + "," + to_string(iv.hi) + rb);
  }
  for (int eps : {1, -1})
    for (int delta : {1, -1})
      if (par[parabolic_index(eps, delta)]) out.push_back(par_name(eps, delta));
  for (auto& t : hyp_terms(x.hyp_pos, pos_full && !pos_free, "+")) out.push_back(t);
  for (auto& t : hyp_terms(x.hyp_neg, neg_full && !neg_free, "-")) out.push_back(t);
  return out;
}

nlohmann::ordered_json hyp_json(const HypSet& h) {
  if (h.is_full()) return "full";
  nlohmann::ordered_json values = nlohmann::ordered_json::array();
  for (const auto& v : h.values()) values.push_back(to_string(v));
  if (h.is_cofinite()) return {{"cofinite", values}};
  return values;
}

HypSet hyp_from_json(const nlohmann::ordered_json& j) {
  auto values = [](const nlohmann::ordered_json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
    return out;
  };
  if (j.is_string()) {
    if (j.get<std::string>() != "full") throw ParseError("expected \"full\"", 0);
    return HypSet::full();
  }
  if (j.is_object()) return HypSet::cofinite(values(j.at("cofinite")));
  return HypSet::finite(values(j));
}

}  // namespace

ClassSet parse_notation(std::string_view text) { return Parser(text).parse_all(); }

std::string format_notation(const ClassSet& x) {
  if (x.is_whole()) return "G";
  if (x.empty()) return "{}";
  const auto direct = terms(x);
  const auto other = terms(x.complement());
  if (other.size() < direct.size()) return "{" + join(other, " | ") + "}^c";
  return join(direct, " | ");
}

ClassId parse_class_id(std::string_view text) {
  const ClassSet s = parse_notation(text);
  auto id = s.as_single_class();
  if (!id) throw ParseError("'" + std::string(text) + "' does not name a single conjugacy class", 0);
  return *id;
}

std::vector<ClassId> parse_product(std::string_view text) {
  std::vector<ClassId> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t star = text.find('*', start);
    const std::size_t end = star == std::string_view::npos ? text.size() : star;
    std::size_t b = start, e = end;
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    if (b == e) throw ParseError("empty factor", b);
    std::string_view factor = text.substr(b, e - b);
    long reps = 1;
    const std::size_t caret = factor.rfind('^');
    if (caret != std::string_view::npos && caret + 1 < factor.size() &&
        std::isdigit(static_cast<unsigned char>(factor[caret + 1]))) {
      const std::string_view digits = factor.substr(caret + 1);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), reps);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || reps < 1 || reps > 64)
        throw ParseError("repetition count must be an integer in [1, 64]", b + caret + 1);
      factor = factor.substr(0, caret);
    }
    try {
      const ClassId id = parse_class_id(factor);
      out.insert(out.end(), static_cast<std::size_t>(reps), id);
    } catch (const ParseError& err) {
      throw ParseError(err.message(), b + err.position());
    }
    if (star == std::string_view::npos) return out;
    start = star + 1;
  }
}

nlohmann::ordered_json to_json(const ClassSet& x) {
  nlohmann::ordered_json j;
  j["I"] = x.has_I;
  j["negI"] = x.has_negI;
  auto par = nlohmann::ordered_json::array();
  for (int eps : {1, -1})
    for (int delta : {1, -1})
      if (x.has_par(eps, delta)) par.push_back(std::string(1, eps > 0 ? '+' : '-') + (delta > 0 ? '+' : '-'));
  j["par"] = par;
  auto ell = nlohmann::ordered_json::array();
  for (const auto& iv : x.ell.atoms())
    ell.push_back({{"lo", to_string(iv.lo)},
                   {"lo_closed", iv.lo_closed},
                   {"hi", to_string(iv.hi)},
                   {"hi_closed", iv.hi_closed}});
  j["ell"] = ell;
  j["hyp_pos"] = hyp_json(x.hyp_pos);
  j["hyp_neg"] = hyp_json(x.hyp_neg);
  return j;
}

ClassSet class_set_from_json(const nlohmann::ordered_json& j) {
  ClassSet x;
  x.has_I = j.at("I").get<bool>();
  x.has_negI = j.at("negI").get<bool>();
  for (const auto& p : j.at("par")) {
    const auto s = p.get<std::string>();
    if (s.size() != 2) throw ParseError("bad parabolic flag '" + s + "'", 0);
    x.par[parabolic_index(s[0] == '+' ? 1 : -1, s[1] == '+' ? 1 : -1)] = true;
  }
  std::vector<AngleInterval> ivs;
  for (const auto& a : j.at("ell"))
    ivs.push_back({parse_rational(a.at("lo").get<std::string>()), parse_rational(a.at("hi").get<std::string>()),
                   a.at("lo_closed").get<bool>(), a.at("hi_closed").get<bool>()});
  x.ell = EllipticSet::from_intervals(std::move(ivs));
  x.hyp_pos = hyp_from_json(j.at("hyp_pos"));
  x.hyp_neg = hyp_from_json(j.at("hyp_neg"));
  return x;
}

}  // namespace sl2
