#include "clonelab/relation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace clonelab {

std::size_t Relation::hash() const {
  std::size_t h = tuples.hash();
  h ^= static_cast<std::size_t>(k) * 0x2545f4914f6cdd1dull;
  for (int s : sorts) h = h * 1099511628211ull + static_cast<std::size_t>(s);
  return h;
}

std::size_t tuple_index(const std::vector<int>& values) {
  std::size_t idx = 0;
  for (int v : values) idx = (idx << 1) | static_cast<unsigned>(v & 1);
  return idx;
}

static void check_shape(int k, const std::vector<int>& sorts) {
  if (k < 1) throw std::invalid_argument("relation: k must be positive");
  for (int s : sorts)
    if (s < 1 || s > k)
      throw std::invalid_argument("relation: sort index out of range");
}

Relation make_relation(int k, std::vector<int> sorts,
                       const std::vector<std::vector<int>>& tuples) {
  check_shape(k, sorts);
  Relation r{k, std::move(sorts), Bits()};
  r.tuples = Bits(std::size_t{1} << r.sorts.size());
  for (const auto& t : tuples) {
    if (t.size() != r.sorts.size())
      throw std::invalid_argument("relation: tuple width != arity");
    r.tuples.set(tuple_index(t));
  }
  return r;
}

Relation empty_relation(int k, std::vector<int> sorts) {
  check_shape(k, sorts);
  std::size_t n = std::size_t{1} << sorts.size();
  return Relation{k, std::move(sorts), Bits(n)};
}

Relation full_relation(int k, std::vector<int> sorts) {
  check_shape(k, sorts);
  std::size_t n = std::size_t{1} << sorts.size();
  return Relation{k, std::move(sorts), Bits::ones(n)};
}

Relation bottom(int k) { return empty_relation(k, {}); }

Relation top(int k) { return full_relation(k, {}); }

Relation equality(int k, int sort) {
  return make_relation(k, {sort, sort}, {{0, 0}, {1, 1}});
}

bool eval(const Relation& r, const std::vector<int>& assignment) {
  if (static_cast<int>(assignment.size()) != r.arity())
    throw std::invalid_argument("eval: assignment width != arity");
  return r.tuples.test(tuple_index(assignment));
}

bool is_dummy(const Relation& r, int pos) {
  if (pos < 1 || pos > r.arity())
    throw std::invalid_argument("is_dummy: position out of range");
  std::size_t flip = std::size_t{1} << (r.arity() - pos);
  std::size_t total = r.tuples.size();
  for (std::size_t i = 0; i < total; ++i)
    if (r.tuples.test(i) != r.tuples.test(i ^ flip)) return false;
  return true;
}

std::pair<Relation, std::vector<int>> drop_dummies(const Relation& r) {
  std::vector<int> removed;
  std::vector<int> kept;
  for (int v = 1; v <= r.arity(); ++v)
    (is_dummy(r, v) ? removed : kept).push_back(v);

  int n = r.arity();
  int m = static_cast<int>(kept.size());
  std::vector<int> sorts;
  sorts.reserve(kept.size());
  for (int v : kept) sorts.push_back(r.sorts[v - 1]);
  Relation out{r.k, std::move(sorts), Bits(std::size_t{1} << m)};
  for (std::size_t idx = 0; idx < out.tuples.size(); ++idx) {
    // Extend by zeros on the removed positions; dummies do not matter.
    std::size_t src = 0;
    for (int j = 0; j < m; ++j)
      src |= static_cast<std::size_t>(tuple_bit(idx, m, j + 1))
             << (n - kept[j]);
    out.tuples.set(idx, r.tuples.test(src));
  }
  return {std::move(out), std::move(removed)};
}

Relation permute_vars(const Relation& r, const std::vector<int>& pi) {
  int n = r.arity();
  Relation out{r.k, std::vector<int>(n), Bits(r.tuples.size())};
  for (int j = 1; j <= n; ++j) out.sorts[pi[j - 1] - 1] = r.sorts[j - 1];
  for (std::size_t idx = 0; idx < out.tuples.size(); ++idx) {
    std::size_t src = 0;
    for (int j = 1; j <= n; ++j)
      src |= static_cast<std::size_t>(tuple_bit(idx, n, pi[j - 1]))
             << (n - j);
    out.tuples.set(idx, r.tuples.test(src));
  }
  return out;
}

std::optional<std::vector<int>> is_similar(const Relation& r1,
                                           const Relation& r2) {
  if (r1.k != r2.k || r1.arity() != r2.arity()) return std::nullopt;
  int n = r1.arity();
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    Relation p = permute_vars(r1, pi);
    if (p.sorts == r2.sorts && p.tuples == r2.tuples) return pi;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

}  // namespace clonelab
