#include "sl2/class_id.hpp"

#include "sl2/errors.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace sl2 {

const Rational& Parameter::exact() const {
  if (!exact_) throw DomainError("parameter " + to_string() + " is not exact");
  return *exact_;
}

bool operator==(const Parameter& l, const Parameter& r) {
  if (l.exact_ && r.exact_) return *l.exact_ == *r.exact_;
  return std::abs(l.value_ - r.value_) <= kFloatCompareTol;
}

std::partial_ordering operator<=>(const Parameter& l, const Parameter& r) {
  if (l.exact_ && r.exact_) {
    if (*l.exact_ < *r.exact_) return std::partial_ordering::less;
    if (*r.exact_ < *l.exact_) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return l.value_ <=> r.value_;
}

std::string Parameter::to_string() const {
  if (exact_) return sl2::to_string(*exact_);
  std::ostringstream os;
  os.precision(17);
  os << value_;
  return os.str();
}

Angle::Angle(Parameter units) : units_(std::move(units)) {
  const bool ok = units_.is_exact()
                      ? (units_.exact() > 0 && units_.exact() < 2 && units_.exact() != 1)
                      : (units_.value() > 0.0 && units_.value() < 2.0 && units_.value() != 1.0);
  if (!ok) throw DomainError("elliptic angle " + units_.to_string() + " is outside ]0,2[ \\ {1} (pi-units)");
}

double Angle::radians() const { return units_.value() * std::numbers::pi; }

Lambda::Lambda(Parameter value) : value_(std::move(value)) {
  const bool ok = value_.is_exact() ? (value_.exact() > 1 || value_.exact() < -1) : std::abs(value_.value()) > 1.0;
  if (!ok) throw DomainError("hyperbolic eigenvalue " + value_.to_string() + " must satisfy |lambda| > 1");
}

namespace {

void check_sign(int s, const char* what) {
  if (s != 1 && s != -1) throw DomainError(std::string(what) + " must be +1 or -1");
}

}  // namespace

ClassId::ClassId(Variant v) : v_(std::move(v)) {
  if (const auto* s = std::get_if<ScalarClass>(&v_)) check_sign(s->sign, "scalar sign");
  if (const auto* p = std::get_if<ParabolicClass>(&v_)) {
    check_sign(p->eps, "parabolic eps");
    check_sign(p->delta, "parabolic delta");
  }
}

ClassId ClassId::scalar(int sign) { return ClassId(ScalarClass{sign}); }
ClassId ClassId::parabolic(int eps, int delta) { return ClassId(ParabolicClass{eps, delta}); }
ClassId ClassId::elliptic(Rational units) { return ClassId(EllipticClass{Angle(Parameter(units))}); }

ClassId ClassId::hyperbolic(Rational lambda) {
  if (lambda != 0 && lambda > -1 && lambda < 1) lambda = 1 / lambda;
  return ClassId(HyperbolicClass{Lambda(Parameter(lambda))});
}

bool ClassId::is_exact() const {
  if (const auto* e = std::get_if<EllipticClass>(&v_)) return e->alpha.units().is_exact();
  if (const auto* h = std::get_if<HyperbolicClass>(&v_)) return h->lambda.value().is_exact();
  return true;
}

double ClassId::trace() const {
  return std::visit(
      [](const auto& c) -> double {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return 2.0 * c.sign;
        if constexpr (std::is_same_v<T, ParabolicClass>) return 2.0 * c.eps;
        if constexpr (std::is_same_v<T, EllipticClass>) return 2.0 * std::cos(c.alpha.radians());
        if constexpr (std::is_same_v<T, HyperbolicClass>) {
          const double l = c.lambda.value().value();
          return l + 1.0 / l;
        }
      },
      v_);
}

namespace {

Parameter shift_by_one(const Parameter& u) {
  if (u.is_exact()) {
    Rational r = u.exact() + 1;
    if (r >= 2) r -= 2;
    return Parameter(r);
  }
  double v = u.value() + 1.0;
  if (v >= 2.0) v -= 2.0;
  return Parameter::from_float(v);
}

Parameter reflect(const Parameter& u) {
  if (u.is_exact()) return Parameter(Rational(2) - u.exact());
  return Parameter::from_float(2.0 - u.value());
}

Parameter flip(const Parameter& v) {
  if (v.is_exact()) return Parameter(-v.exact());
  return Parameter::from_float(-v.value());
}

}  // namespace

ClassId ClassId::negated() const {
  return std::visit(
      [](const auto& c) -> ClassId {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return scalar(-c.sign);
        if constexpr (std::is_same_v<T, ParabolicClass>) return parabolic(-c.eps, -c.delta);
        if constexpr (std::is_same_v<T, EllipticClass>) return ClassId(EllipticClass{Angle(shift_by_one(c.alpha.units()))});
        if constexpr (std::is_same_v<T, HyperbolicClass>) return ClassId(HyperbolicClass{Lambda(flip(c.lambda.value()))});
      },
      v_);
}

ClassId ClassId::inverted() const {
  return std::visit(
      [this](const auto& c) -> ClassId {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ParabolicClass>) return parabolic(c.eps, -c.delta);
        if constexpr (std::is_same_v<T, EllipticClass>) return ClassId(EllipticClass{Angle(reflect(c.alpha.units()))});
        else return *this;
      },
      v_);
}

bool ClassId::in_gplus() const {
  return std::visit(
      [](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return c.sign > 0;
        if constexpr (std::is_same_v<T, ParabolicClass>) return c.eps > 0;
        if constexpr (std::is_same_v<T, EllipticClass>) return c.alpha.units().value() < 1.0;
        if constexpr (std::is_same_v<T, HyperbolicClass>) return c.lambda.sign() > 0;
      },
      v_);
}

std::string ClassId::to_string() const {
  return std::visit(
      [](const auto& c) -> std::string {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return c.sign > 0 ? "I" : "-I";
        if constexpr (std::is_same_v<T, ParabolicClass>)
          return std::string("C2[") + (c.eps > 0 ? '+' : '-') + (c.delta > 0 ? '+' : '-') + "]";
        if constexpr (std::is_same_v<T, EllipticClass>) return "C3[" + c.alpha.units().to_string() + "]";
        if constexpr (std::is_same_v<T, HyperbolicClass>) return "C4[" + c.lambda.value().to_string() + "]";
      },
      v_);
}

std::ostream& operator<<(std::ostream& os, const ClassId& id) { return os << id.to_string(); }

Normalized normalize_to_gplus(const ClassId& id) {
  if (id.in_gplus()) return {id, 1};
  return {id.negated(), -1};
}

}  // namespace sl2
