#pragma once

#include "sl2/class_id.hpp"
#include "sl2/matrix.hpp"

#include <cstdint>
#include <random>

namespace sl2 {

using Rng = std::mt19937_64;

struct Tolerances {
  double det = kDefaultDetTol;
  /// Width of the band around |trace| = 2 and around the scalar matrices.
  double trace = 1e-9;
  double angle_snap = 1e-7;
  std::int64_t angle_max_den = 360;
  double lambda_snap = 1e-7;
  std::int64_t lambda_max_den = 10000;
};

/// Conjugacy class of m.
///
/// |tr| < 2 gives an elliptic class whose angle is arccos(tr/2) or its
/// reflection, picked by the sign of c (of -b when c vanishes). |tr| > 2
/// gives the hyperbolic eigenvalue of larger modulus. Inside the band
/// around |tr| = 2 the matrix is scalar or parabolic; when the distance
/// from the scalar matrix is itself within the band, BoundaryAmbiguous is
/// thrown.
ClassId classify(const Mat2& m, const Tolerances& tol = {});

/// ((eps,0),(delta,eps)) for parabolics, the rotation by alpha, diag(lambda, 1/lambda).
Mat2 canonical_rep(const ClassId& id);

/// K = R(theta) D(e^s) N(u) with theta uniform, s and u standard normal.
Mat2 random_conjugator(Rng& rng);

/// Same shape as random_conjugator, with the spreads of s and u drawn
/// log-uniformly from [1e-5, 4]. Puts mass near commuting and near
/// degenerate configurations; used for trace-extremum probing.
Mat2 random_conjugator_wide(Rng& rng);

/// K * canonical_rep(id) * K^-1.
Mat2 sample(const ClassId& id, Rng& rng);

}  // namespace sl2
