#pragma once

#include <array>
#include <complex>
#include <iosfwd>

namespace sl2 {

inline constexpr double kDefaultDetTol = 1e-9;

using Vec2 = std::array<double, 2>;

/// Row-major real 2x2 matrix of determinant one.
class Mat2 {
 public:
  /// Checked construction; throws NotUnimodular when |ad - bc - 1| > det_tol.
  static Mat2 from_entries(double a, double b, double c, double d, double det_tol = kDefaultDetTol);
  /// For values that are unimodular by construction (products, inverses).
  static constexpr Mat2 unchecked(double a, double b, double c, double d) { return Mat2{a, b, c, d}; }

  static constexpr Mat2 identity() { return Mat2{1.0, 0.0, 0.0, 1.0}; }
  static Mat2 rotation(double radians);
  static constexpr Mat2 diagonal(double lambda) { return Mat2{lambda, 0.0, 0.0, 1.0 / lambda}; }

  constexpr double a() const { return a_; }
  constexpr double b() const { return b_; }
  constexpr double c() const { return c_; }
  constexpr double d() const { return d_; }

  constexpr double trace() const { return a_ + d_; }
  constexpr double det() const { return a_ * d_ - b_ * c_; }
  /// Adjugate; equals the inverse for determinant one.
  constexpr Mat2 inverse() const { return Mat2{d_, -b_, -c_, a_}; }
  constexpr Mat2 operator-() const { return Mat2{-a_, -b_, -c_, -d_}; }

  constexpr Vec2 apply(const Vec2& x) const { return {a_ * x[0] + b_ * x[1], c_ * x[0] + d_ * x[1]}; }

  /// Max-abs entrywise distance.
  double distance(const Mat2& other) const;

  friend constexpr Mat2 operator*(const Mat2& l, const Mat2& r) {
    return Mat2{l.a_ * r.a_ + l.b_ * r.c_, l.a_ * r.b_ + l.b_ * r.d_, l.c_ * r.a_ + l.d_ * r.c_,
                l.c_ * r.b_ + l.d_ * r.d_};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;

 private:
  constexpr Mat2(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}
  double a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// x1*y2 - x2*y1.
constexpr double wedge(const Vec2& x, const Vec2& y) { return x[0] * y[1] - x[1] * y[0]; }

using Complex = std::complex<double>;

/// General complex 2x2, row-major.
struct CMat2 {
  std::array<Complex, 4> e{};

  friend CMat2 operator*(const CMat2& l, const CMat2& r);
  CMat2 adjoint() const;
  Complex trace() const { return e[0] + e[3]; }
  double distance(const CMat2& other) const;
};

/// Element ((a, b), (conj b, conj a)) of SU(1,1), |a|^2 - |b|^2 = 1.
class SU11Mat {
 public:
  /// Checked; throws NotUnimodular when ||a|^2 - |b|^2 - 1| > det_tol.
  static SU11Mat from_entries(Complex a, Complex b, double det_tol = kDefaultDetTol);

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  CMat2 matrix() const { return {{a_, b_, std::conj(b_), std::conj(a_)}}; }
  Complex trace() const { return a_ + std::conj(a_); }

  friend SU11Mat operator*(const SU11Mat& l, const SU11Mat& r);

 private:
  SU11Mat(Complex a, Complex b) : a_(a), b_(b) {}
  Complex a_, b_;
};

/// The conjugation A -> P^-1 A P with P = ((1, i), (i, 1)), an isomorphism onto SU(1,1).
SU11Mat phi(const Mat2& m);

/// The raw complex product P^-1 m P (no packing), for residual checks.
CMat2 phi_matrix(const Mat2& m);

/// max-abs entry of A* J A - J with J = diag(1, -1).
double su11_residual(const CMat2& m);

}  // namespace sl2
