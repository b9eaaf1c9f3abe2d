#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace boost {

// Boost 1.74's mixed rational/integer equality recurses forever under the
// C++20 rewritten-comparison rules; these exact overloads win resolution.
inline bool operator==(const rational<std::int64_t>& r, int v) { return r.denominator() == 1 && r.numerator() == v; }
inline bool operator==(const rational<std::int64_t>& r, std::int64_t v) {
  return r.denominator() == 1 && r.numerator() == v;
}

}  // namespace boost

namespace sl2 {

using Rational = boost::rational<std::int64_t>;

/// "p" or "p/q" (reduced, denominator positive).
std::string to_string(const Rational& r);

/// Parses "[-]p[/q]"; throws ParseError on malformed text.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Smallest-denominator p/q (q <= max_den) with |x - p/q| <= tol, if any.
bool snap_rational(double x, std::int64_t max_den, double tol, Rational& out);

}  // namespace sl2
