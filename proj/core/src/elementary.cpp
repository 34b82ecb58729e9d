#include "clonelab/elementary.hpp"

#include <algorithm>
#include <stdexcept>

namespace clonelab {

Relation eo_dummy_append(const Relation& r, int sort) {
  if (sort < 1 || sort > r.k)
    throw std::invalid_argument("eo_dummy_append: sort out of range");
  std::vector<int> sorts = r.sorts;
  sorts.push_back(sort);
  Relation out{r.k, std::move(sorts), Bits(r.tuples.size() * 2)};
  for (std::size_t i = 0; i < out.tuples.size(); ++i)
    out.tuples.set(i, r.tuples.test(i >> 1));
  return out;
}

Relation eo_dummy_remove(const Relation& r, int pos) {
  if (pos < 1 || pos > r.arity())
    throw std::invalid_argument("eo_dummy_remove: position out of range");
  if (!is_dummy(r, pos))
    throw std::invalid_argument("eo_dummy_remove: variable is not dummy");
  int n = r.arity();
  std::vector<int> sorts;
  for (int v = 1; v <= n; ++v)
    if (v != pos) sorts.push_back(r.sorts[v - 1]);
  Relation out{r.k, std::move(sorts), Bits(r.tuples.size() / 2)};
  int m = n - 1;
  for (std::size_t idx = 0; idx < out.tuples.size(); ++idx) {
    std::size_t src = 0;
    int j = 1;
    for (int v = 1; v <= n; ++v) {
      if (v == pos) continue;
      src |= static_cast<std::size_t>(tuple_bit(idx, m, j)) << (n - v);
      ++j;
    }
    out.tuples.set(idx, r.tuples.test(src));
  }
  return out;
}

Relation eo_permute(const Relation& r, const std::vector<int>& pi) {
  int n = r.arity();
  if (static_cast<int>(pi.size()) != n)
    throw std::invalid_argument("eo_permute: permutation width != arity");
  std::vector<bool> seen(n + 1, false);
  for (int v : pi) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("eo_permute: not a permutation");
    seen[v] = true;
  }
  return permute_vars(r, pi);
}

Relation eo_identify(const Relation& r) {
  int n = r.arity();
  if (n < 2) throw std::invalid_argument("eo_identify: arity < 2");
  if (r.sorts[0] != r.sorts[1])
    throw std::invalid_argument("eo_identify: first two sorts differ");
  std::vector<int> sorts(r.sorts.begin() + 1, r.sorts.end());
  Relation out{r.k, std::move(sorts), Bits(r.tuples.size() / 2)};
  int m = n - 1;
  for (std::size_t idx = 0; idx < out.tuples.size(); ++idx) {
    std::size_t a1 = static_cast<std::size_t>(tuple_bit(idx, m, 1));
    out.tuples.set(idx, r.tuples.test((a1 << (n - 1)) | idx));
  }
  return out;
}

Relation eo_compose(const Relation& a, const Relation& b) {
  if (a.k != b.k) throw std::invalid_argument("eo_compose: mixed k");
  if (a.arity() < 1 || b.arity() < 1)
    throw std::invalid_argument("eo_compose: nullary operand");
  if (a.sorts[0] != b.sorts[0])
    throw std::invalid_argument("eo_compose: first sorts differ");
  if (is_dummy(a, 1) || is_dummy(b, 1))
    throw std::invalid_argument("eo_compose: first variable is dummy");
  int na = a.arity(), nb = b.arity();
  std::vector<int> sorts(a.sorts.begin() + 1, a.sorts.end());
  sorts.insert(sorts.end(), b.sorts.begin() + 1, b.sorts.end());
  int m = na - 1 + nb - 1;
  Relation out{a.k, std::move(sorts), Bits(std::size_t{1} << m)};
  std::size_t xs = std::size_t{1} << (na - 1);
  std::size_t ys = std::size_t{1} << (nb - 1);
  for (std::size_t x = 0; x < xs; ++x)
    for (std::size_t y = 0; y < ys; ++y) {
      bool in = false;
      for (std::size_t z = 0; z < 2 && !in; ++z)
        in = a.tuples.test((z << (na - 1)) | x) &&
             b.tuples.test((z << (nb - 1)) | y);
      if (in) out.tuples.set((x << (nb - 1)) | y);
    }
  return out;
}

Relation eo_forall(const Relation& r) {
  int n = r.arity();
  if (n < 1) throw std::invalid_argument("eo_forall: nullary relation");
  std::vector<int> sorts(r.sorts.begin() + 1, r.sorts.end());
  Relation out{r.k, std::move(sorts), Bits(r.tuples.size() / 2)};
  std::size_t hi = std::size_t{1} << (n - 1);
  for (std::size_t idx = 0; idx < out.tuples.size(); ++idx)
    out.tuples.set(idx, r.tuples.test(idx) && r.tuples.test(idx | hi));
  return out;
}

Relation eo_conjoin(const Relation& a, const Relation& b) {
  if (a.k != b.k || a.sorts != b.sorts)
    throw std::invalid_argument("eo_conjoin: sort vectors differ");
  return Relation{a.k, a.sorts, a.tuples & b.tuples};
}

namespace {

// The unique clause mentioning variable 1 of a canonical form, if any.
const LinearEquation* var1_clause(const DisjunctiveForm& f) {
  const LinearEquation* found = nullptr;
  for (const auto& c : f.clauses)
    if (c.coeffs & 1) {
      if (found)
        throw std::invalid_argument("symbolic op: form is not canonical");
      found = &c;
    }
  return found;
}

}  // namespace

DisjunctiveForm compose_forms(const DisjunctiveForm& a, const DisjunctiveForm& b) {
  if (a.k != b.k) throw std::invalid_argument("compose_forms: mixed k");
  if (a.arity() < 1 || b.arity() < 1)
    throw std::invalid_argument("compose_forms: nullary operand");
  if (a.sorts[0] != b.sorts[0])
    throw std::invalid_argument("compose_forms: first sorts differ");
  const LinearEquation* za = var1_clause(a);
  const LinearEquation* zb = var1_clause(b);
  if (!za || !zb)
    throw std::invalid_argument("compose_forms: first variable is dummy");
  int na = a.arity(), nb = b.arity();
  int shift = na - 1;
  std::vector<int> sorts(a.sorts.begin() + 1, a.sorts.end());
  sorts.insert(sorts.end(), b.sorts.begin() + 1, b.sorts.end());
  std::vector<LinearEquation> clauses;
  // z = alpha.x + d and z = beta.y + d' have a common solution in z
  // exactly when alpha.x + beta.y = d + d'.
  clauses.push_back({(za->coeffs >> 1) | ((zb->coeffs >> 1) << shift),
                     za->rhs ^ zb->rhs});
  for (const auto& c : a.clauses)
    if (!(c.coeffs & 1)) clauses.push_back({c.coeffs >> 1, c.rhs});
  for (const auto& c : b.clauses)
    if (!(c.coeffs & 1)) clauses.push_back({(c.coeffs >> 1) << shift, c.rhs});
  return canonical_form(a.k, std::move(sorts), clauses);
}

DisjunctiveForm forall_form(const DisjunctiveForm& f) {
  if (f.arity() < 1) throw std::invalid_argument("forall_form: nullary form");
  var1_clause(f);  // canonicality check
  std::vector<int> sorts(f.sorts.begin() + 1, f.sorts.end());
  std::vector<LinearEquation> clauses;
  for (const auto& c : f.clauses)
    if (!(c.coeffs & 1)) clauses.push_back({c.coeffs >> 1, c.rhs});
  return canonical_form(f.k, std::move(sorts), clauses);
}

}  // namespace clonelab
