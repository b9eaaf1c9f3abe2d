#include "sl2/classify.hpp"
#include "sl2/notation.hpp"
#include "sl2/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace sl2;

namespace {

ClassSet P(const char* text) { return parse_notation(text); }
ClassId C(const char* text) { return parse_class_id(text); }

bool covers(const VerifyReport& r, const ClassId& id) {
  for (const auto& t : r.coverage)
    if (t.target == id) return t.found;
  return false;
}

}  // namespace

TEST_CASE("triple shear product avoids the identity") {
  const auto q = parse_product("C2[++]^3");
  const VerifyReport r = verify_product(q, P("{I}^c"), 100000, 7);
  CHECK(r.trials == 100000);
  CHECK(r.sound());
  CHECK(r.fully_covered());
  CHECK(r.trace_lo < -2.0);
  CHECK(r.trace_hi > 2.0);
}

TEST_CASE("opposite rotations cover -I and negative hyperbolics") {
  const auto q = parse_product("C3[1/2]^2");
  const VerifyReport r = verify_product(q, P("-I | C4-"), 100000, 7);
  CHECK(r.sound());
  CHECK(covers(r, C("-I")));
  CHECK(covers(r, C("C4[-2]")));
  CHECK(r.fully_covered());
  CHECK(r.trace_hi <= -2.0 + 1e-9);
}

TEST_CASE("single factor is trivially sound") {
  const auto q = parse_product("C3[1/3]");
  const VerifyReport r = verify_product(q, ClassSet::singleton(C("C3[1/3]")), 1000, 1);
  CHECK(r.sound());
  CHECK(r.fully_covered());
  CHECK(r.rejections == 0);
}

TEST_CASE("wrong predictions are caught") {
  OracleOptions o;
  o.soundness_only = true;
  const VerifyReport r = verify_product(parse_product("C2[++]^2"), P("C3[0,1]"), 2000, 3, o);
  CHECK_FALSE(r.sound());
  const Violation& v = r.violations.front();
  CHECK(v.factors.size() == 2u);
  CHECK(std::abs(v.product.trace() - (v.factors[0] * v.factors[1]).trace()) < 1e-12);

  const VerifyReport missing = verify_product(parse_product("C2[++]^3"), ClassSet::whole(), 200, 3);
  CHECK(missing.sound());
  CHECK_FALSE(covers(missing, C("I")));
  CHECK_FALSE(missing.fully_covered());
}

TEST_CASE("reports are reproducible") {
  const auto q = parse_product("C3[1/4] * C2[+-] * C4[3]");
  const ClassSet pred = product_n(q);
  const VerifyReport a = verify_product(q, pred, 5000, 99);
  const VerifyReport b = verify_product(q, pred, 5000, 99);
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.summary_line() == b.summary_line());
  const VerifyReport c = verify_product(q, pred, 5000, 100);
  CHECK(a.trace_lo != c.trace_lo);
  const auto j = a.to_json();
  for (const char* key : {"query", "trials", "seed", "violations", "coverage", "trace_envelope"})
    CHECK(j.contains(key));
}

TEST_CASE("coverage probes") {
  const auto probes = coverage_probes(P("I | C3]0,1/2[ | C2[++] | C4+"));
  auto has = [&](const char* t) {
    for (const auto& p : probes)
      if (p == C(t)) return true;
    return false;
  };
  CHECK(has("I"));
  CHECK(has("C2[++]"));
  CHECK(has("C3[1/24]"));
  CHECK(has("C3[11/24]"));
  CHECK(has("C3[1/4]"));
  CHECK(has("C4[3/2]"));
  CHECK(has("C4[2]"));
  CHECK_FALSE(has("C4[-2]"));
  CHECK_FALSE(has("C3[1/2]"));
  const auto single = coverage_probes(P("C3[1/3]"));
  REQUIRE(single.size() == 1u);
  CHECK(single[0] == C("C3[1/3]"));
}

TEST_CASE("trace ranges") {
  TraceRangeReport r = trace_range_check(C("C3[1/3]"), C("C3[1/3]"), 100000, 1);
  CHECK(r.passed);
  CHECK_FALSE(r.predicted.lo_finite);
  CHECK(r.predicted.hi == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(r.observed_hi <= -1.0 + 1e-9);
  CHECK(r.hi_gap <= 1e-3);

  r = trace_range_check(C("C3[1/2]"), C("C2[++]"), 100000, 2);
  CHECK(r.passed);
  CHECK(r.observed_hi < 0.0);
  CHECK_FALSE(r.predicted.hi_closed);

  r = trace_range_check(C("C2[++]"), C("C2[+-]"), 100000, 3);
  CHECK(r.passed);
  CHECK(r.predicted.lo == doctest::Approx(2.0));
  CHECK(r.predicted.lo_closed);
  CHECK(r.constructive_ok);
  CHECK(r.observed_lo >= 2.0 - 1e-9);

  r = trace_range_check(C("C3[1/3]"), C("C3[1/6]"), 100000, 4);
  CHECK(r.passed);
  CHECK(r.predicted.hi == doctest::Approx(0.0));

  r = trace_range_check(C("C3[4/3]"), C("C3[1/3]"), 100000, 5);
  CHECK(r.passed);
  CHECK(r.predicted.lo == doctest::Approx(1.0));
}

TEST_CASE("rotation trace formula") {
  CHECK(trace_formula_check(Angle(1, 2), Angle(1, 2), 10000, 1) <= 1e-9);
  CHECK(trace_formula_check(Angle(1, 3), Angle(1, 6), 10000, 2) <= 1e-9);
  CHECK(trace_formula_check(Angle(5, 6), Angle(1, 12), 10000, 3) <= 1e-9);
}

TEST_CASE("rotation times hyperbolic keeps positive orientation") {
  const Mat2 a = Mat2::rotation(std::numbers::pi / 3);
  CHECK(classify(a * Mat2::diagonal(2.0)).in_gplus());

  const Mat2 l = Mat2::from_entries(1, 0, 1, 1);
  CHECK(classify(l * l) == ClassId::parabolic(1, 1));

  const Mat2 u = Mat2::from_entries(1, 1, 0, 1);
  CHECK((l * u).trace() == doctest::Approx(3.0));
  CHECK(classify(l * u).is_hyperbolic());

  const Lemma42Report rep = lemma42_exclusion_check(20000, 1);
  CHECK(rep.passed());
  CHECK(rep.trials == 20000);
  CHECK(rep.exceptional > 0);
}
