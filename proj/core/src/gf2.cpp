#include "clonelab/gf2.hpp"

#include <algorithm>
#include <stdexcept>

namespace clonelab {

AffineSystem rref(int arity, std::vector<LinearEquation> rows) {
  std::vector<LinearEquation> out;
  for (int v = 1; v <= arity; ++v) {
    std::uint64_t bit = std::uint64_t{1} << (v - 1);
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const LinearEquation& r) { return r.coeffs & bit; });
    if (it == rows.end()) continue;
    LinearEquation piv = *it;
    rows.erase(it);
    for (auto& r : rows)
      if (r.coeffs & bit) {
        r.coeffs ^= piv.coeffs;
        r.rhs ^= piv.rhs;
      }
    for (auto& r : out)
      if (r.coeffs & bit) {
        r.coeffs ^= piv.coeffs;
        r.rhs ^= piv.rhs;
      }
    out.push_back(piv);
  }
  // Leftover rows have zero coefficients: 0=1 makes the system
  // inconsistent, 0=0 disappears.
  for (const auto& r : rows)
    if (r.rhs == 1) return AffineSystem{arity, {LinearEquation{0, 1}}};
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return pivot_var(a) < pivot_var(b);
  });
  return AffineSystem{arity, std::move(out)};
}

DisjunctiveForm canonical_form(int k, std::vector<int> sorts,
                               const std::vector<LinearEquation>& clauses) {
  int n = static_cast<int>(sorts.size());
  std::vector<LinearEquation> neg;
  neg.reserve(clauses.size());
  for (auto c : clauses) neg.push_back({c.coeffs, c.rhs ^ 1});
  AffineSystem sys = rref(n, std::move(neg));
  DisjunctiveForm out{k, std::move(sorts), {}};
  if (sys.inconsistent()) {
    out.clauses.push_back({0, 0});  // complement empty: full relation
    return out;
  }
  for (auto r : sys.rows) out.clauses.push_back({r.coeffs, r.rhs ^ 1});
  return out;
}

namespace {
inline std::uint64_t lowbit(std::uint64_t v) { return v & (~v + 1); }
}  // namespace

std::vector<std::uint64_t> gf2_rref_basis(const std::vector<std::uint64_t>& vecs) {
  std::vector<std::uint64_t> rows;
  for (auto v : vecs) {
    for (auto r : rows)
      if (v & lowbit(r)) v ^= r;
    if (!v) continue;
    for (auto& r : rows)
      if (r & lowbit(v)) r ^= v;
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(),
            [](std::uint64_t a, std::uint64_t b) { return lowbit(a) < lowbit(b); });
  return rows;
}

bool gf2_in_span(std::uint64_t v, const std::vector<std::uint64_t>& reduced) {
  for (auto r : reduced)
    if (v & lowbit(r)) v ^= r;
  return v == 0;
}

namespace {

// Tuple code -> coefficient mask (variable v at bit v-1).
std::uint64_t idx_to_vec(std::size_t idx, int arity) {
  std::uint64_t m = 0;
  for (int v = 1; v <= arity; ++v)
    if (tuple_bit(idx, arity, v)) m |= std::uint64_t{1} << (v - 1);
  return m;
}

struct ComplementSpan {
  bool empty = false;                // relation is full
  std::uint64_t base = 0;            // one complement point
  std::vector<std::uint64_t> basis;  // reduced difference basis
  bool affine = false;
  std::size_t size = 0;
};

ComplementSpan complement_span(const Relation& r) {
  int n = r.arity();
  if (n > 63) throw std::invalid_argument("key check: arity too large");
  ComplementSpan cs;
  std::vector<std::uint64_t> diffs;
  bool have_base = false;
  for (std::size_t i = 0; i < r.tuples.size(); ++i) {
    if (r.tuples.test(i)) continue;
    std::uint64_t v = idx_to_vec(i, n);
    if (!have_base) {
      cs.base = v;
      have_base = true;
    }
    diffs.push_back(v ^ cs.base);
    ++cs.size;
  }
  if (!have_base) {
    cs.empty = true;
    cs.affine = true;
    return cs;
  }
  cs.basis = gf2_rref_basis(diffs);
  cs.affine = cs.size == (std::size_t{1} << cs.basis.size());
  return cs;
}

}  // namespace

bool is_key(const Relation& r) { return complement_span(r).affine; }

std::optional<DisjunctiveForm> to_disjunctive_form(const Relation& r) {
  int n = r.arity();
  ComplementSpan cs = complement_span(r);
  if (!cs.affine) return std::nullopt;
  DisjunctiveForm out{r.k, r.sorts, {}};
  if (cs.empty) {  // full relation: complement system inconsistent
    out.clauses.push_back({0, 0});
    return out;
  }

  /* The complement is base + span(basis); it is cut out by the
   * equations a.x = a.base for a in the kernel of the basis matrix.
   * The kernel basis below is already in reduced form. */
  std::uint64_t pivots = 0;
  for (auto b : cs.basis) pivots |= lowbit(b);
  std::vector<LinearEquation> rows;
  for (int f = 1; f <= n; ++f) {
    std::uint64_t fbit = std::uint64_t{1} << (f - 1);
    if (pivots & fbit) continue;
    std::uint64_t a = fbit;
    for (auto b : cs.basis)
      if (b & fbit) a |= lowbit(b);
    int rhs = std::popcount(a & cs.base) & 1;
    rows.push_back({a, rhs});
  }
  AffineSystem sys = rref(n, std::move(rows));
  for (auto row : sys.rows) out.clauses.push_back({row.coeffs, row.rhs ^ 1});
  return out;
}

Relation materialize(const DisjunctiveForm& f) {
  Relation r = empty_relation(f.k, f.sorts);
  int n = f.arity();
  for (std::size_t i = 0; i < r.tuples.size(); ++i)
    for (const auto& c : f.clauses)
      if (eq_satisfied(c, i, n)) {
        r.tuples.set(i);
        break;
      }
  return r;
}

}  // namespace clonelab
