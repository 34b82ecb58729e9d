#pragma once

#include <string>
#include <vector>

#include "clonelab/canonical.hpp"
#include "clonelab/closure.hpp"
#include "clonelab/operations.hpp"

namespace clonelab {

/* Finite key of a closed canonical family: its C1..C6 members plus the
 * downset in N_0^{2k} generated by the footprints of its C7 members,
 * truncated coordinatewise at trunc.  truncated is set when some
 * footprint actually exceeded the bound. */
struct Fingerprint {
  std::vector<CanonicalDescriptor> cr16;  // sorted
  Downset downset;
  bool truncated = false;

  bool operator==(const Fingerprint&) const = default;
  auto operator<=>(const Fingerprint&) const = default;
};

bool fingerprint_leq(const Fingerprint& a, const Fingerprint& b);

// Fingerprint of a canonical family (usually a closed one).
Fingerprint fingerprint(const std::vector<CanonicalDescriptor>& S, int k,
                        int trunc);

/* All canonical relations in the bounded quantifier closure of the
 * materialized generators: the classified members of the closure plus
 * the C1..C6 relations recovered by the conjunction test. */
std::vector<CanonicalDescriptor> canonical_content(
    const std::vector<CanonicalDescriptor>& gens, int k,
    const ClosureConfig& cfg);

struct LatticeNode {
  int id = 0;
  std::string label;
  std::vector<CanonicalDescriptor> content;  // sorted canonical members
  Fingerprint fp;
};

struct Lattice {
  int k = 1;
  int trunc = 4;
  std::vector<LatticeNode> nodes;
  std::vector<std::pair<int, int>> edges;  // covering pairs, lower -> upper
};

/* The lattice of one-sorted closed classes with C7 footprints
 * truncated at trunc: closures of every subset of the truncated
 * canonical pool, deduplicated by fingerprint, ordered by fingerprint
 * containment, edges reduced to covers. */
Lattice build_fig1(int trunc, const ClosureConfig& cfg);

/* One node per (closed class, admitted constants) pair: for each base
 * node the class itself and its intersections with the invariants of
 * constant 0, constant 1, and both.  Nodes are keyed by their bounded
 * key-relation content. */
struct PostNode {
  int id = 0;
  int base_id = 0;  // node of the source lattice
  bool need_zero = false, need_one = false;
  std::string label;
  std::vector<Relation> kr_content;  // canonical reps, arity <= kr_cap
};

struct PostLattice {
  int k = 1;
  int kr_cap = 4;
  std::vector<PostNode> nodes;
  std::vector<std::pair<int, int>> edges;
};

PostLattice derive_post(const Lattice& fig1, const ClosureConfig& cfg);

/* Surjective part plus the per-(coordinate, value) slices of a bounded
 * clone of 2-sorted operations, each slice projected one coordinate
 * down.  Slices are empty, a clone with projections, or become one
 * after adding them (tracked by had_projections). */
struct NuSlot {
  int coord = 0;
  int value = 0;
  bool empty = true;
  bool had_projections = false;
  std::vector<KOperation> ops;  // projected, projections added

  bool operator==(const NuSlot&) const = default;
};

struct NuDecomposition {
  std::vector<KOperation> surjective;
  std::vector<NuSlot> slots;  // (1,0),(1,1),(2,0),(2,1)

  bool operator==(const NuDecomposition&) const = default;
};

NuDecomposition nu_decompose(const std::vector<KOperation>& C, int max_arity);

std::string emit_dot(const Lattice& l);
std::string emit_json(const Lattice& l);
std::string emit_dot(const PostLattice& l);
std::string emit_json(const PostLattice& l);

}  // namespace clonelab
