#pragma once

#include "sl2/class_set.hpp"
#include "sl2/classify.hpp"
#include "sl2/matrix.hpp"
#include "sl2/product.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl2 {

struct Violation {
  std::vector<Mat2> factors;
  Mat2 product = Mat2::identity();
  ClassId classified = ClassId::scalar(1);
};

struct CoverageTarget {
  ClassId target;
  bool found = false;
  std::int64_t attempts = 0;
};

struct VerifyReport {
  ProductQuery query;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  /// Samples redrawn because classification or membership sat in a tolerance band.
  std::int64_t rejections = 0;
  std::vector<Violation> violations;
  std::vector<CoverageTarget> coverage;
  double trace_lo = 0.0;
  double trace_hi = 0.0;

  bool sound() const { return violations.empty(); }
  std::size_t covered() const;
  bool fully_covered() const { return covered() == coverage.size(); }

  /// "QUERY | trials | violations | coverage k/m | trace [lo,hi]"
  std::string summary_line() const;
  nlohmann::ordered_json to_json() const;
};

struct OracleOptions {
  Tolerances tol{};
  std::int64_t max_witness_attempts = 100000;
  /// Skip the coverage search entirely.
  bool soundness_only = false;
};

/// Samples factor tuples, multiplies, classifies and checks membership in
/// `predicted`; then looks for a factorization witness of every coverage
/// probe. Deterministic in (query, predicted, trials, seed).
VerifyReport verify_product(const ProductQuery& query, const ClassSet& predicted, std::int64_t trials,
                            std::uint64_t seed, const OracleOptions& opts = {});

/// Deterministic probe classes of a set: +-I and parabolic flags when
/// present, elliptic angles 1/24 inside each atom end plus atom midpoints
/// (or the point itself), hyperbolic eigenvalues in {3/2, 2, -3/2, -2}.
std::vector<ClassId> coverage_probes(const ClassSet& predicted);

/// Attempts needed to find A_1..A_n in the query classes with product in
/// `target`, or nothing within max_attempts. The last factor is forced
/// as (A_1..A_{n-1})^-1 C and a one-parameter family of the second to
/// last factor is root-searched on its trace. Alternate attempts use
/// common-eigenbasis configurations to reach boundary-attained classes.
std::optional<std::int64_t> find_witness(const ProductQuery& query, const ClassId& target, Rng& rng,
                                         std::int64_t max_attempts, const Tolerances& tol = {});

struct TraceInterval {
  /// Infinite ends are flagged; values then unused.
  double lo = 0.0, hi = 0.0;
  bool lo_finite = false, hi_finite = false;
  bool lo_closed = false, hi_closed = false;
};

struct TraceRangeReport {
  double observed_lo = 0.0, observed_hi = 0.0;
  TraceInterval predicted;
  /// Distance from the observed extremum to each finite endpoint.
  double lo_gap = 0.0, hi_gap = 0.0;
  /// How far observations crossed a finite endpoint (0 when never).
  double lo_overshoot = 0.0, hi_overshoot = 0.0;
  /// Closed endpoints also checked on explicit attaining configurations.
  bool constructive_ok = true;
  bool passed = false;
};

/// Predicted range of tr(AB) for A in x, B in y (x, y non-scalar).
TraceInterval predicted_trace_range(const ClassId& x, const ClassId& y);

/// Compares observed extrema of tr(AB) with the predicted interval.
/// Endpoints must be approached within approach_tol and never crossed by
/// more than cross_tol.
TraceRangeReport trace_range_check(const ClassId& x, const ClassId& y, std::int64_t trials, std::uint64_t seed,
                                   double approach_tol = 1e-3, double cross_tol = 1e-9);

/// max |tr(Phi(A) Phi(B)) - (2 cos(a+b) - 4 |q|^2 sin a sin b)| over random
/// B = K R(b) K^-1 with A = R(a), q the off-diagonal entry of Phi(K).
double trace_formula_check(const Angle& alpha, const Angle& beta, std::int64_t trials, std::uint64_t seed);

struct Lemma42Report {
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  /// Hits of the excluded set explained by a common parabolic eigenvector.
  std::int64_t exceptional = 0;
  std::int64_t rejections = 0;
  bool passed() const { return violations == 0; }
};

/// Samples A in rotations by [0, pi] (with the two parabolic ends) and B in
/// the closure of the positive hyperbolic family, checks that AB avoids
/// the negative-orientation elliptic/parabolic classes and +-I, except
/// for parabolic pairs with a common eigenvector.
Lemma42Report lemma42_exclusion_check(std::int64_t trials, std::uint64_t seed);

}  // namespace sl2
