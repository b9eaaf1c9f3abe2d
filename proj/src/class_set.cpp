#include "sl2/class_set.hpp"

#include "sl2/errors.hpp"

#include <algorithm>
#include <cmath>

namespace sl2 {

bool AngleInterval::contains(const Rational& x) const {
  const bool above = lo < x || (lo == x && lo_closed);
  const bool below = x < hi || (x == hi && hi_closed);
  return above && below;
}

namespace {

bool nonempty(const AngleInterval& iv) { return iv.lo < iv.hi || (iv.lo == iv.hi && iv.lo_closed && iv.hi_closed); }

// Sorted, merged union of intervals that already avoid 0, 1, 2.
std::vector<AngleInterval> merge(std::vector<AngleInterval> ivs) {
  std::sort(ivs.begin(), ivs.end(), [](const AngleInterval& l, const AngleInterval& r) {
    if (l.lo != r.lo) return l.lo < r.lo;
    return l.lo_closed && !r.lo_closed;
  });
  std::vector<AngleInterval> out;
  for (const auto& iv : ivs) {
    if (!out.empty()) {
      auto& cur = out.back();
      const bool touches = iv.lo < cur.hi || (iv.lo == cur.hi && (iv.lo_closed || cur.hi_closed));
      if (touches) {
        if (cur.hi < iv.hi) {
          cur.hi = iv.hi;
          cur.hi_closed = iv.hi_closed;
        } else if (cur.hi == iv.hi) {
          cur.hi_closed = cur.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

}  // namespace

EllipticSet EllipticSet::from_intervals(std::vector<AngleInterval> intervals) {
  std::vector<AngleInterval> pieces;
  const Rational zero(0), one(1), two(2);
  for (auto iv : intervals) {
    if (!nonempty(iv)) continue;
    if (iv.lo <= zero) iv.lo = zero, iv.lo_closed = false;
    if (iv.hi >= two) iv.hi = two, iv.hi_closed = false;
    if (iv.lo < one && one < iv.hi) {
      pieces.push_back({iv.lo, one, iv.lo_closed, false});
      pieces.push_back({one, iv.hi, false, iv.hi_closed});
      continue;
    }
    if (iv.lo == one) iv.lo_closed = false;
    if (iv.hi == one) iv.hi_closed = false;
    pieces.push_back(iv);
  }
  std::erase_if(pieces, [](const AngleInterval& iv) { return !nonempty(iv); });
  EllipticSet s;
  s.atoms_ = merge(std::move(pieces));
  return s;
}

EllipticSet EllipticSet::full() {
  return from_intervals({AngleInterval::open(0, 1), AngleInterval::open(1, 2)});
}

bool EllipticSet::contains(const Rational& x) const {
  return std::any_of(atoms_.begin(), atoms_.end(), [&](const AngleInterval& iv) { return iv.contains(x); });
}

bool EllipticSet::contains_float(double x, double tol) const {
  bool inside = false;
  for (const auto& iv : atoms_) {
    const double lo = to_double(iv.lo);
    const double hi = to_double(iv.hi);
    if (std::abs(x - lo) <= tol || std::abs(x - hi) <= tol)
      throw FloatAngleUndecidable("float angle " + std::to_string(x) + " is within tolerance of an interval end");
    if (lo < x && x < hi) inside = true;
  }
  return inside;
}

EllipticSet EllipticSet::unite(const EllipticSet& o) const {
  std::vector<AngleInterval> all = atoms_;
  all.insert(all.end(), o.atoms_.begin(), o.atoms_.end());
  EllipticSet s;
  s.atoms_ = merge(std::move(all));
  return s;
}

EllipticSet EllipticSet::complement() const {
  std::vector<AngleInterval> gaps;
  const Rational segments[2][2] = {{Rational(0), Rational(1)}, {Rational(1), Rational(2)}};
  for (const auto& seg : segments) {
    Rational cursor = seg[0];
    bool cursor_closed = false;
    for (const auto& iv : atoms_) {
      if (iv.lo < seg[0] || iv.hi > seg[1]) continue;
      AngleInterval gap{cursor, iv.lo, cursor_closed, !iv.lo_closed};
      if (nonempty(gap)) gaps.push_back(gap);
      cursor = iv.hi;
      cursor_closed = !iv.hi_closed;
    }
    AngleInterval tail{cursor, seg[1], cursor_closed, false};
    if (nonempty(tail)) gaps.push_back(tail);
  }
  EllipticSet s;
  s.atoms_ = std::move(gaps);
  return s;
}

EllipticSet EllipticSet::intersect(const EllipticSet& o) const {
  return complement().unite(o.complement()).complement();
}

EllipticSet EllipticSet::shifted_by_pi() const {
  std::vector<AngleInterval> out;
  for (auto iv : atoms_) {
    const Rational shift = iv.hi <= 1 ? Rational(1) : Rational(-1);
    iv.lo += shift;
    iv.hi += shift;
    out.push_back(iv);
  }
  return from_intervals(std::move(out));
}

EllipticSet EllipticSet::reflected() const {
  std::vector<AngleInterval> out;
  for (const auto& iv : atoms_) out.push_back({2 - iv.hi, 2 - iv.lo, iv.hi_closed, iv.lo_closed});
  return from_intervals(std::move(out));
}

namespace {

std::vector<Rational> sorted_unique(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Rational> set_op(const std::vector<Rational>& a, const std::vector<Rational>& b, int op) {
  std::vector<Rational> out;
  if (op == 0) std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (op == 1) std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  if (op == 2) std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

HypSet HypSet::finite(std::vector<Rational> values) {
  HypSet h;
  h.values_ = sorted_unique(std::move(values));
  return h;
}

HypSet HypSet::cofinite(std::vector<Rational> excluded) {
  HypSet h;
  h.cofinite_ = true;
  h.values_ = sorted_unique(std::move(excluded));
  return h;
}

bool HypSet::contains(const Rational& v) const {
  return std::binary_search(values_.begin(), values_.end(), v) != cofinite_;
}

bool HypSet::contains_float(double v, double tol) const {
  for (const auto& x : values_)
    if (std::abs(to_double(x) - v) <= tol)
      throw FloatAngleUndecidable("float eigenvalue " + std::to_string(v) + " is within tolerance of a listed value");
  return cofinite_;
}

bool HypSet::has_member_other_than(const Rational& v) const {
  if (cofinite_) return true;
  return std::any_of(values_.begin(), values_.end(), [&](const Rational& x) { return x != v; });
}

HypSet HypSet::unite(const HypSet& o) const {
  if (!cofinite_ && !o.cofinite_) return finite(set_op(values_, o.values_, 0));
  if (cofinite_ && o.cofinite_) return cofinite(set_op(values_, o.values_, 1));
  const HypSet& c = cofinite_ ? *this : o;
  const HypSet& f = cofinite_ ? o : *this;
  return cofinite(set_op(c.values_, f.values_, 2));
}

HypSet HypSet::complement() const {
  HypSet h = *this;
  h.cofinite_ = !cofinite_;
  return h;
}

HypSet HypSet::intersect(const HypSet& o) const { return complement().unite(o.complement()).complement(); }

HypSet HypSet::mirrored() const {
  std::vector<Rational> v;
  for (const auto& x : values_) v.push_back(-x);
  HypSet h = cofinite_ ? cofinite(std::move(v)) : finite(std::move(v));
  return h;
}

ClassSet ClassSet::whole() {
  ClassSet s;
  s.has_I = s.has_negI = true;
  s.par = {true, true, true, true};
  s.ell = EllipticSet::full();
  s.hyp_pos = HypSet::full();
  s.hyp_neg = HypSet::full();
  return s;
}

ClassSet ClassSet::singleton(const ClassId& id) {
  ClassSet s;
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) (c.sign > 0 ? s.has_I : s.has_negI) = true;
        if constexpr (std::is_same_v<T, ParabolicClass>) s.par[parabolic_index(c.eps, c.delta)] = true;
        if constexpr (std::is_same_v<T, EllipticClass>) s.ell = EllipticSet::point(c.alpha.units().exact());
        if constexpr (std::is_same_v<T, HyperbolicClass>) {
          const Rational l = c.lambda.value().exact();
          (l > 0 ? s.hyp_pos : s.hyp_neg) = HypSet::finite({l});
        }
      },
      id.get());
  return s;
}

ClassSet ClassSet::gplus() {
  ClassSet s;
  s.has_I = true;
  s.par[parabolic_index(1, 1)] = true;
  s.par[parabolic_index(1, -1)] = true;
  s.ell = EllipticSet::from_intervals({AngleInterval::open(0, 1)});
  s.hyp_pos = HypSet::full();
  return s;
}

bool ClassSet::empty() const {
  return !has_I && !has_negI && std::none_of(par.begin(), par.end(), [](bool b) { return b; }) && ell.empty() &&
         hyp_pos.empty() && hyp_neg.empty();
}

bool ClassSet::contains(const ClassId& id, double float_tol) const {
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, ScalarClass>) return c.sign > 0 ? has_I : has_negI;
        if constexpr (std::is_same_v<T, ParabolicClass>) return par[parabolic_index(c.eps, c.delta)];
        if constexpr (std::is_same_v<T, EllipticClass>) {
          const auto& u = c.alpha.units();
          return u.is_exact() ? ell.contains(u.exact()) : ell.contains_float(u.value(), float_tol);
        }
        if constexpr (std::is_same_v<T, HyperbolicClass>) {
          const auto& v = c.lambda.value();
          const HypSet& h = c.lambda.sign() > 0 ? hyp_pos : hyp_neg;
          return v.is_exact() ? h.contains(v.exact()) : h.contains_float(v.value(), float_tol);
        }
      },
      id.get());
}

bool ClassSet::includes(const ClassSet& other) const { return other.minus(*this).empty(); }

ClassSet ClassSet::unite(const ClassSet& o) const {
  ClassSet s;
  s.has_I = has_I || o.has_I;
  s.has_negI = has_negI || o.has_negI;
  for (std::size_t i = 0; i < 4; ++i) s.par[i] = par[i] || o.par[i];
  s.ell = ell.unite(o.ell);
  s.hyp_pos = hyp_pos.unite(o.hyp_pos);
  s.hyp_neg = hyp_neg.unite(o.hyp_neg);
  return s;
}

ClassSet ClassSet::intersect(const ClassSet& o) const {
  ClassSet s;
  s.has_I = has_I && o.has_I;
  s.has_negI = has_negI && o.has_negI;
  for (std::size_t i = 0; i < 4; ++i) s.par[i] = par[i] && o.par[i];
  s.ell = ell.intersect(o.ell);
  s.hyp_pos = hyp_pos.intersect(o.hyp_pos);
  s.hyp_neg = hyp_neg.intersect(o.hyp_neg);
  return s;
}

ClassSet ClassSet::complement() const {
  ClassSet s;
  s.has_I = !has_I;
  s.has_negI = !has_negI;
  for (std::size_t i = 0; i < 4; ++i) s.par[i] = !par[i];
  s.ell = ell.complement();
  s.hyp_pos = hyp_pos.complement();
  s.hyp_neg = hyp_neg.complement();
  return s;
}

ClassSet ClassSet::negate() const {
  ClassSet s;
  s.has_I = has_negI;
  s.has_negI = has_I;
  for (int eps : {1, -1})
    for (int delta : {1, -1}) s.par[parabolic_index(-eps, -delta)] = par[parabolic_index(eps, delta)];
  s.ell = ell.shifted_by_pi();
  s.hyp_pos = hyp_neg.mirrored();
  s.hyp_neg = hyp_pos.mirrored();
  return s;
}

ClassSet ClassSet::invert() const {
  ClassSet s = *this;
  for (int eps : {1, -1})
    for (int delta : {1, -1}) s.par[parabolic_index(eps, -delta)] = par[parabolic_index(eps, delta)];
  s.ell = ell.reflected();
  return s;
}

std::optional<ClassId> ClassSet::as_single_class() const {
  std::vector<ClassId> found;
  if (has_I) found.push_back(ClassId::scalar(1));
  if (has_negI) found.push_back(ClassId::scalar(-1));
  for (int eps : {1, -1})
    for (int delta : {1, -1})
      if (has_par(eps, delta)) found.push_back(ClassId::parabolic(eps, delta));
  for (const auto& iv : ell.atoms()) {
    if (!iv.is_point()) return std::nullopt;
    found.push_back(ClassId::elliptic(iv.lo));
  }
  for (const HypSet* h : {&hyp_pos, &hyp_neg}) {
    if (h->is_cofinite()) return std::nullopt;
    for (const auto& v : h->values()) found.push_back(ClassId::hyperbolic(v));
  }
  if (found.size() != 1) return std::nullopt;
  return found.front();
}

ClassSet operator|(const ClassSet& l, const ClassSet& r) { return l.unite(r); }
ClassSet operator&(const ClassSet& l, const ClassSet& r) { return l.intersect(r); }

}  // namespace sl2
