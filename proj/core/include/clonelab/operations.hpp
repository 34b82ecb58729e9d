#pragma once

#include <cstdint>
#include <vector>

#include "clonelab/relation.hpp"

namespace clonelab {

/* A k-sorted operation of arity m: one {0,1}-valued table per
 * coordinate, each indexed by the 2^m argument tuples with argument 1
 * as the most significant index bit.  Arity 0 is excluded. */
struct KOperation {
  int k = 1;
  int arity = 0;
  std::vector<std::uint64_t> tables;  // size k, low 2^arity bits used

  bool operator==(const KOperation&) const = default;
  auto operator<=>(const KOperation&) const = default;

  int value(int coord, std::size_t idx) const {
    return static_cast<int>((tables[coord - 1] >> idx) & 1u);
  }
};

// x_i^n as a k-sorted operation (same table in every coordinate).
KOperation projection(int k, int n, int i);
// The arity-1 constant c in every coordinate.
KOperation constant_op(int k, int c);

// Every coordinate table attains both values (for arity >= 1).
bool is_surjective(const KOperation& f);

// f(g_1,...,g_m) with all g_j of one common arity.
KOperation compose_ops(const KOperation& f, const std::vector<KOperation>& gs);

/* Composition closure of F together with all projections, restricted
 * to arities <= max_arity.  With surjective_only set, the generators
 * and all compositions are filtered to surjective operations. */
std::vector<KOperation> clo_generate(const std::vector<KOperation>& F, int k,
                                     int max_arity, bool surjective_only = false);

// f applied coordinatewise to rows of m tuples of r always lands in r.
bool preserves(const KOperation& f, const Relation& r);

// Enumeration guard: refuses table spaces above 2^budget_bits entries.
// The default of 20 bits can be overridden via CLONELAB_BUDGET.
int enumeration_budget_bits();

/* All (optionally: all surjective) operations of arity 1..max_arity
 * preserving every relation in S. */
std::vector<KOperation> pol_bounded(const std::vector<Relation>& S, int k,
                                    int max_arity, bool surjective_only);

// All relations of arity <= max_arity (over every sort vector)
// preserved by all of F.
std::vector<Relation> inv_bounded(const std::vector<KOperation>& F, int k,
                                  int max_arity);

/* Indicator relation of the arity-n members of F: one variable per
 * (coordinate, argument tuple) pair, sort blocks in coordinate order,
 * one tuple per operation listing its tables in input-lexicographic
 * order. */
Relation indicator(const std::vector<KOperation>& F, int k, int n);

// Smallest superset of r invariant under every f in F: the closure of
// r's tuples under coordinatewise application.
Relation least_invariant_superset(const Relation& r, const std::vector<KOperation>& F);

// Members of S preserved by the chosen uniform constants.
std::vector<Relation> adjoin_constants(const std::vector<Relation>& S,
                                       bool keep_zero, bool keep_one);

}  // namespace clonelab
