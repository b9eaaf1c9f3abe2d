#include "sl2/matrix.hpp"

#include "sl2/errors.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace sl2 {

Mat2 Mat2::from_entries(double a, double b, double c, double d, double det_tol) {
  const double det = a * d - b * c;
  if (!(std::abs(det - 1.0) <= det_tol)) {
    std::ostringstream os;
    os << "determinant " << det << " differs from 1 by more than " << det_tol;
    throw NotUnimodular(os.str());
  }
  return Mat2{a, b, c, d};
}

Mat2 Mat2::rotation(double radians) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  return Mat2{c, -s, s, c};
}

double Mat2::distance(const Mat2& o) const {
  return std::max({std::abs(a_ - o.a_), std::abs(b_ - o.b_), std::abs(c_ - o.c_), std::abs(d_ - o.d_)});
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "((" << m.a() << "," << m.b() << "),(" << m.c() << "," << m.d() << "))";
}

CMat2 operator*(const CMat2& l, const CMat2& r) {
  const auto& x = l.e;
  const auto& y = r.e;
  return {{x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
           x[2] * y[1] + x[3] * y[3]}};
}

CMat2 CMat2::adjoint() const { return {{std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}}; }

double CMat2::distance(const CMat2& o) const {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(e[i] - o.e[i]));
  return d;
}

SU11Mat SU11Mat::from_entries(Complex a, Complex b, double det_tol) {
  const double det = std::norm(a) - std::norm(b);
  if (!(std::abs(det - 1.0) <= det_tol)) {
    std::ostringstream os;
    os << "|a|^2 - |b|^2 = " << det << " differs from 1 by more than " << det_tol;
    throw NotUnimodular(os.str());
  }
  return SU11Mat{a, b};
}

SU11Mat operator*(const SU11Mat& l, const SU11Mat& r) {
  return SU11Mat{l.a_ * r.a_ + l.b_ * std::conj(r.b_), l.a_ * r.b_ + l.b_ * std::conj(r.a_)};
}

CMat2 phi_matrix(const Mat2& m) {
  const Complex i{0.0, 1.0};
  const CMat2 p{{1.0, i, i, 1.0}};
  const CMat2 p_inv{{0.5, -0.5 * i, -0.5 * i, 0.5}};
  const CMat2 a{{m.a(), m.b(), m.c(), m.d()}};
  return p_inv * a * p;
}

SU11Mat phi(const Mat2& m) {
  const CMat2 q = phi_matrix(m);
  return SU11Mat::from_entries(q.e[0], q.e[1], kDefaultDetTol * std::max(1.0, std::norm(q.e[0])));  // relative for large entries
}

double su11_residual(const CMat2& m) {
  const CMat2 j{{1.0, 0.0, 0.0, -1.0}};
  return (m.adjoint() * j * m).distance(j);
}

}  // namespace sl2
