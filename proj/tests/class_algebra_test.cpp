#include "sl2/class_id.hpp"
#include "sl2/class_set.hpp"
#include "sl2/classify.hpp"
#include "sl2/errors.hpp"
#include "sl2/notation.hpp"

#include <doctest.h>

#include <random>

using namespace sl2;

namespace {

ClassSet P(const char* text) { return parse_notation(text); }

ClassId E(std::int64_t p, std::int64_t q) { return ClassId::elliptic(Rational(p, q)); }

std::vector<ClassSet> sample_sets() {
  return {P("{}"),
          P("G"),
          P("G+"),
          P("I"),
          P("-I | C4-"),
          P("C3<[0,1]"),
          P("C3[0,1]>"),
          P("C3<[1,2]>"),
          P("{I | C3[0,1/3]}^c"),
          P("C3]1/4,3/4[ | C3[5/4,7/4] | C2[--]"),
          P("C3[1/3] | C3[5/3] | C4[2] | C4[-3/2]"),
          P("{C4[2] | C4[-5/2]}^c"),
          P("C3<[0,1/2[ | C3]3/2,2]> | -I")};
}

}  // namespace

TEST_CASE("class parameters are validated") {
  CHECK_THROWS_AS(Angle(1, 1), DomainError);
  CHECK_THROWS_AS(Angle(0, 1), DomainError);
  CHECK_THROWS_AS(Angle(2, 1), DomainError);
  CHECK_NOTHROW(Angle(3, 2));
  CHECK_THROWS_AS(Lambda(1, 1), DomainError);
  CHECK_THROWS_AS(Lambda(1, 2), DomainError);
  CHECK_THROWS_AS(ClassId::parabolic(0, 1), DomainError);
  CHECK_THROWS_AS(ClassId::scalar(2), DomainError);
  CHECK(ClassId::hyperbolic(Rational(1, 2)) == ClassId::hyperbolic(Rational(2)));
  CHECK(ClassId::hyperbolic(Rational(-2, 3)) == ClassId::hyperbolic(Rational(-3, 2)));
}

TEST_CASE("class names") {
  CHECK(ClassId::scalar(-1).to_string() == "-I");
  CHECK(ClassId::parabolic(1, -1).to_string() == "C2[+-]");
  CHECK(E(1, 3).to_string() == "C3[1/3]");
  CHECK(ClassId::hyperbolic(Rational(-3, 2)).to_string() == "C4[-3/2]");
}

TEST_CASE("negate and invert on classes agree with matrices") {
  std::vector<ClassId> ids{ClassId::scalar(1), ClassId::scalar(-1)};
  for (int e : {1, -1})
    for (int d : {1, -1}) ids.push_back(ClassId::parabolic(e, d));
  for (int k = 1; k < 24; ++k)
    if (k != 12) ids.push_back(E(k, 12));
  for (const Rational l : {Rational(3, 2), Rational(-2), Rational(7, 2)}) ids.push_back(ClassId::hyperbolic(l));
  Rng rng(5);
  for (const auto& id : ids) {
    const Mat2 m = sample(id, rng);
    CHECK(classify(-m) == id.negated());
    CHECK(classify(m.inverse()) == id.inverted());
    CHECK(id.negated().negated() == id);
    CHECK(id.inverted().inverted() == id);
  }
  CHECK(E(1, 2).inverted() == E(3, 2));
  CHECK(ClassId::hyperbolic(Rational(2)).inverted() == ClassId::hyperbolic(Rational(2)));
  CHECK(ClassId::parabolic(1, 1).inverted() == ClassId::parabolic(1, -1));
  CHECK(ClassId::parabolic(1, -1).negated() == ClassId::parabolic(-1, 1));
}

TEST_CASE("normalization into G+") {
  auto n = normalize_to_gplus(E(1, 3));
  CHECK(n.id == E(1, 3));
  CHECK(n.sign == 1);
  n = normalize_to_gplus(E(4, 3));
  CHECK(n.id == E(1, 3));
  CHECK(n.sign == -1);
  n = normalize_to_gplus(ClassId::parabolic(-1, -1));
  CHECK(n.id == ClassId::parabolic(1, 1));
  CHECK(n.sign == -1);
  n = normalize_to_gplus(ClassId::hyperbolic(Rational(-5, 2)));
  CHECK(n.id == ClassId::hyperbolic(Rational(5, 2)));
  CHECK(n.sign == -1);
  CHECK(ClassSet::gplus().contains(ClassId::parabolic(1, -1)));
  CHECK_FALSE(ClassSet::gplus().contains(ClassId::parabolic(-1, 1)));
}

TEST_CASE("singletons") {
  CHECK(ClassSet::singleton(ClassId::scalar(1)).has_I);
  const ClassSet e = ClassSet::singleton(E(1, 3));
  REQUIRE(e.ell.atoms().size() == 1);
  CHECK(e.ell.atoms()[0] == AngleInterval::point(Rational(1, 3)));
  const ClassSet h = ClassSet::singleton(ClassId::hyperbolic(Rational(-3, 2)));
  CHECK(h.hyp_neg == HypSet::finite({Rational(-3, 2)}));
  CHECK(h.hyp_pos.empty());
  CHECK(e.as_single_class() == E(1, 3));
  CHECK_FALSE(P("C4+").as_single_class().has_value());
}

TEST_CASE("boolean algebra") {
  CHECK(ClassSet().complement().is_whole());
  CHECK(ClassSet().complement() == P("G"));
  CHECK(format_notation(ClassSet::singleton(ClassId::scalar(1)).complement()) == "{I}^c");
  CHECK(ClassSet::gplus().intersect(ClassSet::gplus().complement()).empty());
  CHECK(P("C3[0,1]").contains(ClassId::parabolic(-1, 1)));
  CHECK(P("C4+").contains(ClassId::hyperbolic(Rational(7, 2))));
  CHECK_FALSE(P("C3]1/3,1/2[").contains(E(1, 3)));
  CHECK(P("C3[1/3,1/2[").contains(E(1, 3)));
  for (const auto& x : sample_sets()) {
    CHECK(x.complement().complement() == x);
    CHECK(x.unite(x.complement()).is_whole());
    CHECK(x.intersect(x.complement()).empty());
    CHECK(x.negate().negate() == x);
    CHECK(x.invert().invert() == x);
    CHECK(x.minus(x).empty());
    for (const auto& y : sample_sets()) {
      CHECK(x.unite(y).complement() == x.complement().intersect(y.complement()));
      CHECK(x.unite(y) == y.unite(x));
      CHECK(x.unite(y).includes(x));
      CHECK(x.negate().unite(y.negate()) == x.unite(y).negate());
    }
  }
}

TEST_CASE("negate and invert on sets") {
  CHECK(P("C2[+-]").negate() == P("C2[-+]"));
  CHECK(P("C4+").negate() == P("C4-"));
  CHECK(P("C3[1/2]").invert() == P("C3[3/2]"));
  CHECK(P("C4[2]").invert() == P("C4[2]"));
  CHECK(P("C2[++]").invert() == P("C2[+-]"));
  CHECK(P("C3<[0,1]>").invert() == P("C3<[1,2]>"));
  CHECK(P("C3<[0,1]>").negate() == P("C3<[1,2]>"));
  CHECK(P("G+").unite(P("G+").negate()).is_whole());
}

TEST_CASE("bracket notation") {
  ClassSet s = P("C3<[0,1]");
  CHECK(s.hyp_pos.is_full());
  CHECK(s.has_par(1, 1));
  CHECK(s.has_par(-1, 1));
  CHECK_FALSE(s.has_par(-1, -1));
  CHECK(s.ell == EllipticSet::from_intervals({AngleInterval::open(0, 1)}));
  CHECK_FALSE(s.has_I);

  CHECK(P("C3[1,2]") == P("C2[--] | C3]1,2[ | C2[+-]"));
  CHECK(P("C3[0,1]>") == P("C2[++] | C3]0,1[ | C2[-+] | C4-"));
  CHECK(P("C3<[1,2]>") == P("C4- | C2[--] | C3]1,2[ | C2[+-] | C4+"));
  CHECK(P("C3(0,1)") == P("C3]0,1["));
  CHECK(P("G+") == P("C3<[0,1[ | I | C2[+-]"));
  CHECK(P("-C3[1/3]") == P("C3[4/3]"));
  CHECK(P("~C3[1/3]") == P("C3[5/3]"));
  CHECK(P("C3[0,2]") == P("C3[0,1[ | C3]1,2]"));
  CHECK(P("{C3[0,1], C4+}") == P("C3[0,1] | C4+"));
  CHECK(P("G \\ C4+") == P("C4+^c"));
  CHECK(P("C3]0,1[ & C3[1/2,3/2]") == P("C3[1/2,1["));
}

TEST_CASE("notation errors") {
  CHECK_THROWS_AS(P("C3<[1/3,1/2]"), ParseError);
  CHECK_THROWS_AS(P("C3[1/3,1/2]>"), ParseError);
  CHECK_THROWS_AS(P("C5"), ParseError);
  CHECK_THROWS_AS(P("C3[1/3"), ParseError);
  CHECK_THROWS_AS(P("I |"), ParseError);
  CHECK_THROWS_AS(P("C3[1]"), DomainError);
  CHECK_THROWS_AS(P("C4[1]"), DomainError);
  try {
    P("I | C2[+x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 4);
  }
}

TEST_CASE("formatting") {
  CHECK(format_notation(P("G")) == "G");
  CHECK(format_notation(P("{}")) == "{}");
  CHECK(format_notation(ClassSet::singleton(ClassId::scalar(-1)).complement()) == "{-I}^c");
  CHECK(format_notation(P("C2[++] | C3]0,1[ | C2[-+] | C4-")) == "C3[0,1]>");
  CHECK(format_notation(P("-I | C4-")) == "-I | C4-");
  for (const auto& x : sample_sets()) {
    CHECK(parse_notation(format_notation(x)) == x);
    CHECK(class_set_from_json(to_json(x)) == x);
  }
}

TEST_CASE("factor lists") {
  const auto q = parse_product("C2[++] * C3[1/3]^2 * -I");
  REQUIRE(q.size() == 4);
  CHECK(q[1] == E(1, 3));
  CHECK(q[2] == E(1, 3));
  CHECK(q[3] == ClassId::scalar(-1));
  CHECK_THROWS_AS(parse_product("C2[++] * "), ParseError);
  CHECK_THROWS_AS(parse_product("C2[++] * C4+"), ParseError);
  try {
    parse_product("C2[++] * C3[1/x]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 9);
  }
}

TEST_CASE("set algebra refuses float parameters") {
  const ClassId f = ClassId::elliptic(Angle(Parameter::from_float(0.123456789)));
  CHECK_THROWS_AS(ClassSet::singleton(f), DomainError);
  CHECK(P("C3]0,1/2[").contains(f));
  CHECK_THROWS_AS(P("C3]0,1/2[").contains(ClassId::elliptic(Angle(Parameter::from_float(0.5 + 1e-12)))),
                  FloatAngleUndecidable);
}
