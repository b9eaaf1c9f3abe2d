#pragma once

#include "sl2/rational.hpp"

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

namespace sl2 {

/// Comparison slack for float-backed parameters.
inline constexpr double kFloatCompareTol = 1e-9;

/// A real number held exactly as a rational, or as a float when no
/// rational snap was found.
class Parameter {
 public:
  Parameter() = default;
  Parameter(Rational exact) : exact_(exact), value_(to_double(exact)) {}  // NOLINT
  static Parameter from_float(double v) {
    Parameter p;
    p.exact_.reset();
    p.value_ = v;
    return p;
  }

  bool is_exact() const { return exact_.has_value(); }
  /// Throws DomainError for float-backed values.
  const Rational& exact() const;
  double value() const { return value_; }

  /// Exact compare when both sides are exact; otherwise tolerance-based
  /// equality and plain float ordering.
  friend bool operator==(const Parameter& l, const Parameter& r);
  friend std::partial_ordering operator<=>(const Parameter& l, const Parameter& r);

  std::string to_string() const;

 private:
  std::optional<Rational> exact_ = Rational(0);
  double value_ = 0.0;
};

/// Elliptic rotation parameter, in units of pi, inside ]0,2[ \ {1}.
class Angle {
 public:
  /// Throws DomainError outside ]0,2[ \ {1}.
  explicit Angle(Parameter units);
  Angle(std::int64_t num, std::int64_t den) : Angle(Parameter(Rational(num, den))) {}

  const Parameter& units() const { return units_; }
  double radians() const;

  friend bool operator==(const Angle&, const Angle&) = default;

 private:
  Parameter units_;
};

/// Hyperbolic eigenvalue with |lambda| > 1.
class Lambda {
 public:
  explicit Lambda(Parameter value);
  Lambda(std::int64_t num, std::int64_t den) : Lambda(Parameter(Rational(num, den))) {}

  const Parameter& value() const { return value_; }
  int sign() const { return value_.value() > 0 ? 1 : -1; }

  friend bool operator==(const Lambda&, const Lambda&) = default;

 private:
  Parameter value_;
};

struct ScalarClass {
  int sign;  // +1 for {I}, -1 for {-I}
  friend bool operator==(const ScalarClass&, const ScalarClass&) = default;
};

struct ParabolicClass {
  int eps;    // trace is 2*eps
  int delta;  // sign of c - b
  friend bool operator==(const ParabolicClass&, const ParabolicClass&) = default;
};

struct EllipticClass {
  Angle alpha;
  friend bool operator==(const EllipticClass&, const EllipticClass&) = default;
};

struct HyperbolicClass {
  Lambda lambda;
  friend bool operator==(const HyperbolicClass&, const HyperbolicClass&) = default;
};

/// One conjugacy class of SL2(R).
class ClassId {
 public:
  using Variant = std::variant<ScalarClass, ParabolicClass, EllipticClass, HyperbolicClass>;

  ClassId(Variant v);  // NOLINT

  static ClassId scalar(int sign);
  static ClassId parabolic(int eps, int delta);
  static ClassId elliptic(Rational units);
  static ClassId elliptic(Angle alpha) { return ClassId(EllipticClass{alpha}); }
  /// Accepts either lambda or 1/lambda and stores the |lambda| > 1 representative.
  static ClassId hyperbolic(Rational lambda);
  static ClassId hyperbolic(Lambda lambda) { return ClassId(HyperbolicClass{lambda}); }

  const Variant& get() const { return v_; }
  bool is_scalar() const { return std::holds_alternative<ScalarClass>(v_); }
  bool is_parabolic() const { return std::holds_alternative<ParabolicClass>(v_); }
  bool is_elliptic() const { return std::holds_alternative<EllipticClass>(v_); }
  bool is_hyperbolic() const { return std::holds_alternative<HyperbolicClass>(v_); }
  bool is_exact() const;

  /// Trace shared by every member of the class.
  double trace() const;

  /// Class of -m for m in this class.
  ClassId negated() const;
  /// Class of m^-1.
  ClassId inverted() const;

  /// True when the class lies in G+ (closure of the positive hyperbolic
  /// family together with rotations by angles in ]0, pi[).
  bool in_gplus() const;

  /// Notation string, e.g. "C2[+-]", "C3[1/3]", "C4[-3/2]", "-I".
  std::string to_string() const;

  friend bool operator==(const ClassId&, const ClassId&) = default;

 private:
  Variant v_;
};

std::ostream& operator<<(std::ostream& os, const ClassId& id);

struct Normalized {
  ClassId id;  // inside G+
  int sign;    // +1 if the input already was, -1 if it was negated
};

/// Pushes a class into G+, negating if needed.
Normalized normalize_to_gplus(const ClassId& id);

}  // namespace sl2
