#include "sl2/rational.hpp"

#include "sl2/errors.hpp"

#include <charconv>
#include <cmath>
#include <optional>

namespace sl2 {

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t v = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || first == last)
    throw ParseError("malformed integer '" + std::string(text) + "'", offset);
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, 0));
  const auto num = parse_int(text.substr(0, slash), 0);
  const auto den = parse_int(text.substr(slash + 1), slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(num, den);
}

namespace {

struct Fraction {
  std::int64_t p, q;
};

// Smallest-denominator fraction in [lo, hi], 0 < lo <= hi; nothing once
// the denominator passes max_den.
std::optional<Fraction> simplest_in(long double lo, long double hi, std::int64_t max_den, int depth) {
  if (depth > 64) return std::nullopt;
  const long double fl = std::floor(lo);
  if (fl == lo || fl + 1 <= hi) {
    const long double c = std::ceil(lo);
    if (c > 9.0e15L) return std::nullopt;
    return Fraction{static_cast<std::int64_t>(c), 1};
  }
  // lo, hi share the integer part fl: x = fl + 1/y with y in [1/(hi-fl), 1/(lo-fl)].
  const auto rest = simplest_in(1.0L / (hi - fl), 1.0L / (lo - fl), max_den, depth + 1);
  if (!rest) return std::nullopt;
  const std::int64_t q = rest->p;
  if (q > max_den) return std::nullopt;
  return Fraction{static_cast<std::int64_t>(fl) * q + rest->q, q};
}

}  // namespace

bool snap_rational(double x, std::int64_t max_den, double tol, Rational& out) {
  if (!std::isfinite(x) || std::abs(x) > 1e12) return false;
  const long double lo = static_cast<long double>(x) - tol;
  const long double hi = static_cast<long double>(x) + tol;
  if (lo <= 0 && hi >= 0) {
    out = Rational(0);
    return true;
  }
  const bool negative = hi < 0;
  const auto f = negative ? simplest_in(-hi, -lo, max_den, 0) : simplest_in(lo, hi, max_den, 0);
  if (!f || f->q > max_den) return false;
  out = Rational(negative ? -f->p : f->p, f->q);
  return true;
}

}  // namespace sl2
