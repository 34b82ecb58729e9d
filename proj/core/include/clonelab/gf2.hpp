#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "clonelab/relation.hpp"

namespace clonelab {

/* One linear equation a_1 x_1 + ... + a_n x_n = rhs over GF(2).
 * Coefficient of variable v (1-based) is bit v-1 of coeffs.  The
 * all-zero equations 0=0 and 0=1 are legal. */
struct LinearEquation {
  std::uint64_t coeffs = 0;
  int rhs = 0;

  bool operator==(const LinearEquation&) const = default;
  auto operator<=>(const LinearEquation&) const = default;
};

inline bool eq_satisfied(const LinearEquation& e, std::size_t idx, int arity) {
  int acc = e.rhs;
  std::uint64_t c = e.coeffs;
  while (c) {
    int v = std::countr_zero(c) + 1;
    c &= c - 1;
    acc ^= tuple_bit(idx, arity, v);
  }
  return acc == 0;
}

// Pivot variable (1-based) of an equation; 0 when all coefficients are 0.
inline int pivot_var(const LinearEquation& e) {
  return e.coeffs ? std::countr_zero(e.coeffs) + 1 : 0;
}

/* A system of simultaneous linear equations in reduced row echelon
 * form: rows ordered by pivot, each pivot variable appearing in no
 * other row.  An inconsistent system is the single row 0=1; the trivial
 * system has no rows. */
struct AffineSystem {
  int arity = 0;
  std::vector<LinearEquation> rows;

  bool inconsistent() const {
    return rows.size() == 1 && rows[0].coeffs == 0 && rows[0].rhs == 1;
  }
  bool operator==(const AffineSystem&) const = default;
};

// Gauss-Jordan elimination; leftmost (smallest index) pivot first.
AffineSystem rref(int arity, std::vector<LinearEquation> rows);

// Fully reduced basis (unique lowest set bit per row, absent from the
// other rows) of the span of the given coefficient vectors.
std::vector<std::uint64_t> gf2_rref_basis(const std::vector<std::uint64_t>& vecs);
bool gf2_in_span(std::uint64_t v, const std::vector<std::uint64_t>& reduced);

/* Disjunction of linear equations over sorted variables.  Zero clauses
 * denote the empty relation; the single clause 0=0 denotes the full
 * one.  Canonical instances are exactly the De Morgan duals of the
 * reduced system describing the complement. */
struct DisjunctiveForm {
  int k = 1;
  std::vector<int> sorts;
  std::vector<LinearEquation> clauses;

  int arity() const { return static_cast<int>(sorts.size()); }
  bool operator==(const DisjunctiveForm&) const = default;
};

/* Canonical form of the relation "disjunction of the given clauses":
 * complement the clauses, reduce, and dualize back. */
DisjunctiveForm canonical_form(int k, std::vector<int> sorts,
                               const std::vector<LinearEquation>& clauses);

// True iff the complement of r is an affine subspace of GF(2)^n
// (equivalently, r is a union of solution sets of linear equations).
bool is_key(const Relation& r);

// Canonical disjunctive form, or nullopt when r is not key.
std::optional<DisjunctiveForm> to_disjunctive_form(const Relation& r);

Relation materialize(const DisjunctiveForm& f);

}  // namespace clonelab
