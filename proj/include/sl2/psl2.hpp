#pragma once

#include "sl2/class_set.hpp"
#include "sl2/product.hpp"

#include <span>
#include <vector>

namespace sl2 {

/// Image of a class in PSL2(R), represented by its G+ lift.
class TildeClass {
 public:
  explicit TildeClass(const ClassId& id) : rep_(normalize_to_gplus(id).id) {}
  const ClassId& rep() const { return rep_; }
  bool is_identity() const { return rep_.is_scalar(); }
  friend bool operator==(const TildeClass&, const TildeClass&) = default;

 private:
  ClassId rep_;
};

/// Negation-invariant class set: the preimage of a subset of PSL2(R).
class PslClassSet {
 public:
  static PslClassSet project(const ClassSet& x) { return PslClassSet(x.unite(x.negate())); }
  static PslClassSet whole() { return PslClassSet(ClassSet::whole()); }
  /// Everything except the identity class.
  static PslClassSet whole_minus_identity();

  const ClassSet& lift() const { return lift_; }
  bool has_identity() const { return lift_.has_I; }
  bool is_whole() const { return lift_.is_whole(); }

  std::string to_string() const;

  friend bool operator==(const PslClassSet&, const PslClassSet&) = default;

 private:
  explicit PslClassSet(ClassSet lifted) : lift_(std::move(lifted)) {}
  ClassSet lift_;
};

PslClassSet psl2_project(const ClassSet& x);
PslClassSet psl2_product(std::span<const TildeClass> factors);

struct CoveringResult {
  int cn = 0;
  int ecn = 0;
  /// Probe class whose powers reach the whole group last.
  ClassId cn_witness = ClassId::scalar(1);
  /// Mixed tuple of length ecn-1 whose product is not the whole group.
  std::vector<ClassId> ecn_witness;
};

/// Default probe: C2[++], C2[+-], C3[k/12] for k = 1..11, C3[1/100], C4[3/2], C4[2].
std::vector<ClassId> default_covering_probe();

/// cn: least n with C^n = whole group for every probe class; ecn: least n
/// such that every n-fold product of probe classes is the whole group.
/// Searched up to max_n; throws DomainError if not reached.
CoveringResult covering_numbers(std::span<const ClassId> probe, int max_n = 8);

}  // namespace sl2
