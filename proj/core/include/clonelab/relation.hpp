#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clonelab/bits.hpp"

namespace clonelab {

/* A relation over {0,1} with variables carrying sorts 1..k.  Tuples are
 * stored as a bit vector of length 2^arity; the tuple (a_1,...,a_n) sits
 * at index sum a_i * 2^(n-i), i.e. variable 1 is the most significant
 * bit of the index. */
struct Relation {
  int k = 1;
  std::vector<int> sorts;  // size == arity, entries in 1..k
  Bits tuples;             // size == 1 << arity

  int arity() const { return static_cast<int>(sorts.size()); }
  bool operator==(const Relation&) const = default;
  auto operator<=>(const Relation&) const = default;
  std::size_t hash() const;
};

struct RelationHash {
  std::size_t operator()(const Relation& r) const { return r.hash(); }
};

// Index of the tuple (values[0],...,values[n-1]); values are 0/1.
std::size_t tuple_index(const std::vector<int>& values);

// Value of variable v (1-based) inside tuple code idx at the given arity.
inline int tuple_bit(std::size_t idx, int arity, int v) {
  return static_cast<int>((idx >> (arity - v)) & 1u);
}

Relation make_relation(int k, std::vector<int> sorts,
                       const std::vector<std::vector<int>>& tuples);
Relation empty_relation(int k, std::vector<int> sorts);
Relation full_relation(int k, std::vector<int> sorts);

// sigma_bot: the empty relation of arity 0.
Relation bottom(int k);
// The full relation of arity 0 (true under the empty assignment).
Relation top(int k);
// sigma_=^sort: the binary equality relation {00,11} on one sort.
Relation equality(int k, int sort);

bool eval(const Relation& r, const std::vector<int>& assignment);

// Variable pos (1-based) is dummy: membership never depends on it.
bool is_dummy(const Relation& r, int pos);

// Deletes every dummy variable.  Second component lists the removed
// positions (1-based, ascending, positions in the input relation).
std::pair<Relation, std::vector<int>> drop_dummies(const Relation& r);

// r(x_{pi(1)},...,x_{pi(n)}): the raw variable shuffle shared by
// eo_permute and is_similar.  pi must be a permutation of 1..arity.
Relation permute_vars(const Relation& r, const std::vector<int>& pi);

/* A permutation pi (1-based) with r1(x_{pi(1)},...,x_{pi(n)}) == r2,
 * if the relations are similar; nullopt otherwise. */
std::optional<std::vector<int>> is_similar(const Relation& r1,
                                           const Relation& r2);

}  // namespace clonelab
