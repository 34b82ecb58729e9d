#pragma once

#include "clonelab/gf2.hpp"
#include "clonelab/relation.hpp"

namespace clonelab {

// Appends a fresh dummy variable of the given sort at the last position.
Relation eo_dummy_append(const Relation& r, int sort);
// Removes the variable at pos (1-based); it must be dummy.
Relation eo_dummy_remove(const Relation& r, int pos);

// r'(x_1,...,x_n) = r(x_{pi(1)},...,x_{pi(n)}).
Relation eo_permute(const Relation& r, const std::vector<int>& pi);

// r'(x_1,...,x_{n-1}) = r(x_1,x_1,x_2,...,x_{n-1}); the first two
// variables must have the same sort.
Relation eo_identify(const Relation& r);

/* r'(x_2..x_n, y_2..y_m) = exists z: a(z,x_2..x_n) and b(z,y_2..y_m).
 * The first variables of a and b must share a sort and be non-dummy. */
Relation eo_compose(const Relation& a, const Relation& b);

// r'(x_2,...,x_n) = forall y: r(y,x_2,...,x_n).
Relation eo_forall(const Relation& r);

// Conjunction of two relations with identical sort vectors.
Relation eo_conjoin(const Relation& a, const Relation& b);

/* Symbolic counterparts on canonical disjunctive forms.  In a
 * canonical form at most one clause mentions variable 1, so existential
 * composition joins the two variable-1 clauses into one equation and
 * unions the rest, while universal quantification just deletes the
 * variable-1 clause.  Results are re-canonicalized. */
DisjunctiveForm compose_forms(const DisjunctiveForm& a, const DisjunctiveForm& b);
DisjunctiveForm forall_form(const DisjunctiveForm& f);

}  // namespace clonelab
