#include "sl2/classify.hpp"

#include "sl2/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace sl2 {

namespace {

std::string describe(const Mat2& m) {
  std::ostringstream os;
  os.precision(17);
  os << m;
  return os.str();
}

Parameter snap_or_float(double x, std::int64_t max_den, double tol) {
  Rational r;
  if (snap_rational(x, max_den, tol, r)) return Parameter(r);
  return Parameter::from_float(x);
}

ClassId elliptic_from_angle(double radians, const Tolerances& tol) {
  const double units = radians / std::numbers::pi;
  Parameter p = snap_or_float(units, tol.angle_max_den, tol.angle_snap / std::numbers::pi);
  // 0, 1 and 2 are not elliptic parameters; keep the raw value instead.
  if (p.is_exact() && (p.exact() <= 0 || p.exact() >= 2 || p.exact() == 1)) p = Parameter::from_float(units);
  return ClassId::elliptic(Angle(p));
}

ClassId hyperbolic_from_eigenvalue(double lambda, const Tolerances& tol) {
  Parameter p = snap_or_float(lambda, tol.lambda_max_den, tol.lambda_snap);
  if (p.is_exact() && !(p.exact() > 1 || p.exact() < -1)) p = Parameter::from_float(lambda);
  return ClassId::hyperbolic(Lambda(p));
}

}  // namespace

ClassId classify(const Mat2& m, const Tolerances& tol) {
  const double scale = std::max({1.0, std::abs(m.a() * m.d()), std::abs(m.b() * m.c())});
  if (!(std::abs(m.det() - 1.0) <= tol.det * scale))
    throw NotUnimodular("matrix " + describe(m) + " is not in SL2(R)");

  const double t = m.trace();
  const double abs_t = std::abs(t);

  if (abs_t > 2.0 + tol.trace) {
    const double lambda = (t + std::copysign(std::sqrt(t * t - 4.0), t)) / 2.0;
    return hyperbolic_from_eigenvalue(lambda, tol);
  }
  if (abs_t < 2.0 - tol.trace) {
    const double theta = std::acos(std::clamp(t / 2.0, -1.0, 1.0));
    const double orient = m.c() != 0.0 ? m.c() : -m.b();
    return elliptic_from_angle(orient > 0 ? theta : 2.0 * std::numbers::pi - theta, tol);
  }

  // |trace| = 2 up to the band: scalar or parabolic.
  const int eps = t > 0 ? 1 : -1;
  const double dist =
      std::max({std::abs(m.a() - eps), std::abs(m.b()), std::abs(m.c()), std::abs(m.d() - eps)});
  if (dist <= tol.trace) return ClassId::scalar(eps);
  // A trace resolved only to tol cannot separate a nilpotent part of size
  // below sqrt(tol) from an elliptic or hyperbolic neighbour.
  if (dist <= std::sqrt(tol.trace))
    throw BoundaryAmbiguous("matrix " + describe(m) + " is within tolerance of both a scalar and a parabolic class");
  return ClassId::parabolic(eps, m.c() - m.b() > 0 ? 1 : -1);
}

Mat2 canonical_rep(const ClassId& id) {
  return std::visit(
      [](const auto& c) -> Mat2 {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return Mat2::unchecked(c.sign, 0.0, 0.0, c.sign);
        if constexpr (std::is_same_v<T, ParabolicClass>) return Mat2::unchecked(c.eps, 0.0, c.delta, c.eps);
        if constexpr (std::is_same_v<T, EllipticClass>) return Mat2::rotation(c.alpha.radians());
        if constexpr (std::is_same_v<T, HyperbolicClass>) return Mat2::diagonal(c.lambda.value().value());
      },
      id.get());
}

namespace {

Mat2 iwasawa(double theta, double s, double u) {
  const double es = std::exp(s);
  const Mat2 d = Mat2::unchecked(es, 0.0, 0.0, 1.0 / es);
  const Mat2 n = Mat2::unchecked(1.0, u, 0.0, 1.0);
  return Mat2::rotation(theta) * d * n;
}

}  // namespace

Mat2 random_conjugator(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double theta = angle(rng);
  const double s = normal(rng);
  const double u = normal(rng);
  return iwasawa(theta, s, u);
}

Mat2 random_conjugator_wide(Rng& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> log_spread(std::log(1e-5), std::log(4.0));
  std::normal_distribution<double> normal(0.0, 1.0);
  const double theta = angle(rng);
  const double s = normal(rng) * std::exp(log_spread(rng));
  const double u = normal(rng) * std::exp(log_spread(rng));
  return iwasawa(theta, s, u);
}

Mat2 sample(const ClassId& id, Rng& rng) {
  const Mat2 rep = canonical_rep(id);
  if (id.is_scalar()) return rep;
  const Mat2 k = random_conjugator(rng);
  return k * rep * k.inverse();
}

}  // namespace sl2
