#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clonelab/gf2.hpp"
#include "clonelab/relation.hpp"

namespace clonelab {

/* The dummy-free relations that generate pairwise distinct closures,
 * parameterized up to variable order:
 *   C1       x=0 or y=1                  (one sort i)
 *   C2       x=y or u=b                  (sorts i,i,j; i=j allowed)
 *   C3Cross  x=y or u=v                  (sorts i,i,j,j; i<j)
 *   C3Chain  x=y or y=z                  (one sort i)
 *   C4       x+y=1                       (one sort i)
 *   C5       x+y+u+v=0                   (sorts i,i,j,j; i<=j)
 *   C6       x_1+...+x_n=b               (n>=2 pairwise distinct sorts)
 *   C7       per-sort disjunction of x=0 resp. x=1 blocks; the
 *            complement of a single tuple. */
struct CanonicalDescriptor {
  enum class Type { C1, C2, C3Cross, C3Chain, C4, C5, C6, C7 };

  Type type = Type::C1;
  int i = 0;
  int j = 0;
  int b = 0;
  std::vector<int> sorts;   // C6: ascending, pairwise distinct
  std::vector<int> counts;  // C7: m_1,n_1,...,m_k,n_k with m_s*n_s=0

  auto operator<=>(const CanonicalDescriptor&) const = default;
  std::string to_string() const;
};

Relation materialize(const CanonicalDescriptor& d, int k);

// The unique descriptor whose materialization is similar to r, if any.
std::optional<CanonicalDescriptor> classify(const Relation& r);

// Every descriptor over sorts 1..k whose relation has arity <= max_arity.
std::vector<CanonicalDescriptor> enumerate_CR(int k, int max_arity);

// The footprint (m_1,n_1,...,m_k,n_k) of a C7 descriptor.
std::vector<int> mu(const CanonicalDescriptor& d, int k);

// Membership of r in qpp<gen> intersected with the key relations,
// decided from the closed-form description of that intersection.
class SingleGeneratorClosure {
 public:
  SingleGeneratorClosure(CanonicalDescriptor d, int k) : d_(std::move(d)), k_(k) {}
  bool contains(const Relation& query) const;

 private:
  CanonicalDescriptor d_;
  int k_;
};

// True when r is a conjunction of variable equalities, full, or empty
// (i.e. lies in the closure of the empty language).
bool is_trivial_qpp(const Relation& r);

/* Finite downset of N_0^dim kept as its antichain of maximal points. */
struct Downset {
  int dim = 0;
  std::vector<std::vector<int>> maximal;  // sorted, pairwise incomparable

  bool operator==(const Downset&) const = default;
  auto operator<=>(const Downset&) const = default;
};

bool pointwise_leq(const std::vector<int>& a, const std::vector<int>& b);
bool downset_contains(const Downset& ds, const std::vector<int>& p);
Downset downset_insert(Downset ds, const std::vector<int>& p);
// Containment of downsets (every point of a lies in b).
bool downset_leq(const Downset& a, const Downset& b);

}  // namespace clonelab
