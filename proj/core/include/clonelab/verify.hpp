#pragma once

#include <string>

#include "clonelab/closure.hpp"
#include "clonelab/lattice.hpp"

namespace clonelab {

/* Self-contained verification checks.  Each returns pass/fail plus a
 * short diagnostic; on success detail may carry a summary figure. */
struct CheckResult {
  bool pass = true;
  std::string detail;
};

// is_key against the union-of-contained-equations oracle over every
// 1-sorted relation of exactly the given arity.
CheckResult check_key_oracle(int arity);

// Symbolic composition/quantification on canonical forms against the
// semantic operations, for all pairs of 1-sorted key relations of
// arity <= max_arity.
CheckResult check_symbolic_fastpath(int max_arity);

// to_disjunctive_form . materialize is the identity on key relations
// (and rejects non-key ones) up to the given k and arity.
CheckResult check_form_roundtrip(int max_k, int max_arity);

// The rearrangement/decomposition identities behind the canonical
// generation argument: both sides of each identity lie in the bounded
// closure of the other, over all instances with arities <= 4.
CheckResult check_generation_lemmas(int max_k, const ClosureConfig& cfg);

// Single-generator closures: the bounded qpp closure of each canonical
// relation of arity <= 3 meets the key relations of arity <= 3 exactly
// in the closed-form description.
CheckResult check_closure_tables(int max_k, const ClosureConfig& cfg);

// The membership sandwich decides every (1-sorted language, target)
// pair at arity <= 3, consistently with the closed-form descriptions.
CheckResult check_sandwich_complete(const ClosureConfig& cfg);

// Bounded Galois laws on random languages: invariance of the language,
// antitonicity, and sPol . Inv . sPol = sPol at arity <= 3.
CheckResult check_galois_laws(int n_langs, unsigned seed);

// Frame of the 1-sorted lattice at the given truncation: four atoms
// with the expected generators, unique top and bottom, both unary
// chains.  golden_nodes < 0 skips the node-count pin and reports it.
CheckResult check_lattice_frame(const ClosureConfig& cfg, int trunc,
                                int golden_nodes);

// Constant refinement of the 1-sorted lattice: distinct closed sets,
// each closed under the conjunction test, and stable under rederivation.
CheckResult check_constant_refinement(const ClosureConfig& cfg, int trunc);

// Footprint order-reflection on near-full relations plus stabilization
// of random downset-insert chains.
CheckResult check_footprint_order(unsigned seed);

// Slice decomposition separates distinct random bounded 2-sorted
// clones, with every slice itself composition-closed.
CheckResult check_slice_injectivity(int n_clones, unsigned seed);

}  // namespace clonelab
