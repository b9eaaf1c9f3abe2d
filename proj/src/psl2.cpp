#include "sl2/psl2.hpp"

#include "sl2/errors.hpp"
#include "sl2/notation.hpp"

#include <functional>

namespace sl2 {

PslClassSet PslClassSet::whole_minus_identity() { return PslClassSet(parse_notation("{I | -I}^c")); }

std::string PslClassSet::to_string() const {
  if (is_whole()) return "G~";
  if (*this == whole_minus_identity()) return "G~ \\ {I~}";
  return "~(" + format_notation(lift_) + ")";
}

PslClassSet psl2_project(const ClassSet& x) { return PslClassSet::project(x); }

PslClassSet psl2_product(std::span<const TildeClass> factors) {
  if (factors.empty()) throw DomainError("a product needs at least one factor");
  std::vector<ClassId> lifts;
  lifts.reserve(factors.size());
  for (const auto& f : factors) lifts.push_back(f.rep());
  return psl2_project(product_n(lifts));
}

std::vector<ClassId> default_covering_probe() {
  std::vector<ClassId> probe{ClassId::parabolic(1, 1), ClassId::parabolic(1, -1)};
  for (int k = 1; k <= 11; ++k) probe.push_back(ClassId::elliptic(Rational(k, 12)));
  probe.push_back(ClassId::elliptic(Rational(1, 100)));
  probe.push_back(ClassId::hyperbolic(Rational(3, 2)));
  probe.push_back(ClassId::hyperbolic(Rational(2)));
  return probe;
}

namespace {

bool is_whole_product(const std::vector<ClassId>& tuple) {
  std::vector<TildeClass> t;
  for (const auto& c : tuple) t.emplace_back(c);
  return psl2_product(t).is_whole();
}

// Class products commute, so multisets of probe indices suffice. Returns the
// first multiset of size n whose product is not whole, if any.
std::optional<std::vector<ClassId>> non_whole_multiset(std::span<const ClassId> probe, int n) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<ClassId> tuple;
    for (auto i : idx) tuple.push_back(probe[i]);
    if (!is_whole_product(tuple)) return tuple;
    int pos = n - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] + 1 == probe.size()) --pos;
    if (pos < 0) return std::nullopt;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
  }
}

}  // namespace

CoveringResult covering_numbers(std::span<const ClassId> probe, int max_n) {
  std::vector<ClassId> classes;
  for (const auto& c : probe)
    if (!TildeClass(c).is_identity()) classes.push_back(c);
  if (classes.empty()) throw DomainError("covering probe has no non-trivial class");

  CoveringResult res;
  for (const auto& c : classes) {
    int n = 1;
    while (!is_whole_product(std::vector<ClassId>(static_cast<std::size_t>(n), c))) {
      if (++n > max_n) throw DomainError("covering number of " + c.to_string() + " exceeds the search bound");
    }
    if (n > res.cn) {
      res.cn = n;
      res.cn_witness = c;
    }
  }

  for (int n = 1; n <= max_n; ++n) {
    auto bad = non_whole_multiset(classes, n);
    if (!bad) {
      res.ecn = n;
      return res;
    }
    res.ecn_witness = std::move(*bad);
  }
  throw DomainError("extended covering number exceeds the search bound");
}

}  // namespace sl2
