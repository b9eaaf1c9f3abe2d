#pragma once

#include "sl2/class_id.hpp"
#include "sl2/rational.hpp"

#include <array>
#include <vector>

namespace sl2 {

/// Interval of elliptic angles, in pi-units. A single angle is the
/// degenerate closed interval [x, x].
struct AngleInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = false;

  static AngleInterval open(Rational lo, Rational hi) { return {lo, hi, false, false}; }
  static AngleInterval closed(Rational lo, Rational hi) { return {lo, hi, true, true}; }
  static AngleInterval point(Rational x) { return {x, x, true, true}; }

  bool is_point() const { return lo == hi; }
  bool contains(const Rational& x) const;

  friend bool operator==(const AngleInterval&, const AngleInterval&) = default;
};

/// Subset of ]0,2[ \ {1} as a canonical list of atoms: sorted, pairwise
/// disjoint, never adjacent, none straddling 1, endpoints 0, 1, 2 open.
class EllipticSet {
 public:
  EllipticSet() = default;
  /// Clips to the elliptic range, splits at 1 and merges.
  static EllipticSet from_intervals(std::vector<AngleInterval> intervals);
  static EllipticSet full();
  static EllipticSet point(Rational x) { return from_intervals({AngleInterval::point(x)}); }

  const std::vector<AngleInterval>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  bool contains(const Rational& x) const;
  /// Float angles: throws FloatAngleUndecidable within `tol` of an atom endpoint.
  bool contains_float(double x, double tol) const;

  EllipticSet unite(const EllipticSet& o) const;
  EllipticSet complement() const;
  EllipticSet intersect(const EllipticSet& o) const;
  /// x -> x + 1 mod 2
  EllipticSet shifted_by_pi() const;
  /// x -> 2 - x
  EllipticSet reflected() const;

  friend bool operator==(const EllipticSet&, const EllipticSet&) = default;

 private:
  std::vector<AngleInterval> atoms_;
};

/// Subset of one hyperbolic sign component: a finite set of eigenvalues,
/// or the whole component minus a finite set.
class HypSet {
 public:
  HypSet() = default;
  static HypSet finite(std::vector<Rational> values);
  static HypSet cofinite(std::vector<Rational> excluded);
  static HypSet full() { return cofinite({}); }

  bool is_cofinite() const { return cofinite_; }
  bool is_full() const { return cofinite_ && values_.empty(); }
  bool empty() const { return !cofinite_ && values_.empty(); }
  /// Listed values; the members when finite, the exclusions when cofinite.
  const std::vector<Rational>& values() const { return values_; }

  bool contains(const Rational& v) const;
  bool contains_float(double v, double tol) const;
  /// True when the set has a member other than v.
  bool has_member_other_than(const Rational& v) const;

  HypSet unite(const HypSet& o) const;
  HypSet complement() const;
  HypSet intersect(const HypSet& o) const;
  /// Same eigenvalues with flipped sign, for moving between components.
  HypSet mirrored() const;

  friend bool operator==(const HypSet&, const HypSet&) = default;

 private:
  bool cofinite_ = false;
  std::vector<Rational> values_;
};

/// Parabolic flag index for Cl2^{eps,delta}.
constexpr int parabolic_index(int eps, int delta) { return (eps > 0 ? 0 : 2) + (delta > 0 ? 0 : 1); }

/// Conjugation-invariant subset of SL2(R), stored canonically so that
/// structural equality is set equality.
struct ClassSet {
  bool has_I = false;
  bool has_negI = false;
  /// Indexed by parabolic_index: ++, +-, -+, --.
  std::array<bool, 4> par{};
  EllipticSet ell;
  HypSet hyp_pos;  // lambda > 1
  HypSet hyp_neg;  // lambda < -1

  static ClassSet empty_set() { return {}; }
  static ClassSet whole();
  static ClassSet singleton(const ClassId& id);
  /// closure(Cl4+) union rotations by ]0, pi[.
  static ClassSet gplus();

  bool empty() const;
  bool is_whole() const { return *this == whole(); }
  bool has_par(int eps, int delta) const { return par[parabolic_index(eps, delta)]; }

  /// Exact for exact ids; float-backed ids may throw FloatAngleUndecidable.
  bool contains(const ClassId& id, double float_tol = kFloatCompareTol) const;
  /// True when every class of `other` is in this set.
  bool includes(const ClassSet& other) const;

  ClassSet unite(const ClassSet& o) const;
  ClassSet intersect(const ClassSet& o) const;
  ClassSet complement() const;
  ClassSet minus(const ClassSet& o) const { return intersect(o.complement()); }
  /// Image under m -> -m.
  ClassSet negate() const;
  /// Image under m -> m^-1.
  ClassSet invert() const;

  /// The class when the set holds exactly one, else nothing.
  std::optional<ClassId> as_single_class() const;

  friend bool operator==(const ClassSet&, const ClassSet&) = default;
};

ClassSet operator|(const ClassSet& l, const ClassSet& r);
ClassSet operator&(const ClassSet& l, const ClassSet& r);

}  // namespace sl2
