#pragma once

#include "sl2/class_set.hpp"

#include <span>
#include <string>
#include <vector>

namespace sl2 {

using ProductQuery = std::vector<ClassId>;

/// {class of AB : A in x, B in y}.
ClassSet product_pair(const ClassId& x, const ClassId& y);

/// x * y for a conjugation-invariant set x.
ClassSet product_set_class(const ClassSet& x, const ClassId& y);

/// Left fold: scalars stripped to a sign, pairs from the pair table,
/// longer tuples folded with product_set_class.
ClassSet product_n(std::span<const ClassId> factors);

/// Closed-form route for tuples with at most four non-scalar factors:
/// triple table plus the scalar-membership rule for quadruples, and the
/// whole group beyond that. Independent of the interval-union fold.
ClassSet product_direct(std::span<const ClassId> factors);

/// sign*I in the product  <=>  sign * last^-1 in the product of the others.
bool scalar_membership(std::span<const ClassId> factors, int sign);

/// Whether I lies in Cl3^a Cl3^b Cl3^c (angles in pi-units).
bool figure1_contains_identity(const Angle& a, const Angle& b, const Angle& c);

struct Figure1Row {
  Rational alpha, beta, gamma;  // pi-units, in ]0,2[ \ {1}
  bool contains_identity;
};

/// All lattice triples k*step in ]0,2[ \ {1}, lexicographic.
std::vector<Figure1Row> figure1_grid(const Rational& step);

/// Same region in the signed parametrisation ]-1,1[ \ {0}; rows carry the
/// signed angles, membership is evaluated at angle mod 2.
std::vector<Figure1Row> figure1_grid_signed(const Rational& step);

/// "alpha,beta,gamma,contains_I" with rows.
std::string figure1_csv(const std::vector<Figure1Row>& rows);

/// One reconstructed row of the pair/triple product tables.
struct TableRow {
  std::string factors;      // e.g. "C3[a] * C3[b]"
  std::string condition;    // e.g. "a+b<1"
  std::string formula;      // symbolic result in bracket notation
  std::string provenance;   // "lemma-derived", "calculus-derived", "inverse-closure, oracle-checked"
  ProductQuery example;     // concrete instance
};

/// Every pair row and every triple row for factors in G+.
std::vector<TableRow> reconstructed_tables();

}  // namespace sl2
