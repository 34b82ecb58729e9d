#include "clonelab/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace clonelab {

std::string CanonicalDescriptor::to_string() const {
  std::ostringstream os;
  switch (type) {
    case Type::C1:
      os << "c1(i=" << i << ")";
      break;
    case Type::C2:
      os << "c2(i=" << i << ",j=" << j << ",b=" << b << ")";
      break;
    case Type::C3Cross:
      os << "c3x(i=" << i << ",j=" << j << ")";
      break;
    case Type::C3Chain:
      os << "c3c(i=" << i << ")";
      break;
    case Type::C4:
      os << "c4(i=" << i << ")";
      break;
    case Type::C5:
      os << "c5(i=" << i << ",j=" << j << ")";
      break;
    case Type::C6: {
      os << "c6(s=";
      for (std::size_t p = 0; p < sorts.size(); ++p)
        os << (p ? "+" : "") << sorts[p];
      os << ",b=" << b << ")";
      break;
    }
    case Type::C7: {
      os << "c7(";
      for (std::size_t p = 0; p < counts.size(); ++p)
        os << (p ? "," : "") << counts[p];
      os << ")";
      break;
    }
  }
  return os.str();
}

Relation materialize(const CanonicalDescriptor& d, int k) {
  using T = CanonicalDescriptor::Type;
  auto unary = [](int var, int rhs) {
    return LinearEquation{std::uint64_t{1} << (var - 1), rhs};
  };
  auto pair_eq = [](int v1, int v2) {
    return LinearEquation{(std::uint64_t{1} << (v1 - 1)) |
                              (std::uint64_t{1} << (v2 - 1)),
                          0};
  };
  DisjunctiveForm f;
  f.k = k;
  switch (d.type) {
    case T::C1:
      f.sorts = {d.i, d.i};
      f.clauses = {unary(1, 0), unary(2, 1)};
      break;
    case T::C2:
      f.sorts = {d.i, d.i, d.j};
      f.clauses = {pair_eq(1, 2), unary(3, d.b)};
      break;
    case T::C3Cross:
      if (d.i >= d.j)
        throw std::invalid_argument("materialize: c3x needs i<j");
      f.sorts = {d.i, d.i, d.j, d.j};
      f.clauses = {pair_eq(1, 2), pair_eq(3, 4)};
      break;
    case T::C3Chain:
      f.sorts = {d.i, d.i, d.i};
      f.clauses = {pair_eq(1, 2), pair_eq(2, 3)};
      break;
    case T::C4:
      f.sorts = {d.i, d.i};
      f.clauses = {LinearEquation{0b11, 1}};
      break;
    case T::C5:
      if (d.i > d.j) throw std::invalid_argument("materialize: c5 needs i<=j");
      f.sorts = {d.i, d.i, d.j, d.j};
      f.clauses = {LinearEquation{0b1111, 0}};
      break;
    case T::C6: {
      if (d.sorts.size() < 2 ||
          !std::is_sorted(d.sorts.begin(), d.sorts.end()) ||
          std::adjacent_find(d.sorts.begin(), d.sorts.end()) != d.sorts.end())
        throw std::invalid_argument("materialize: bad c6 sorts");
      f.sorts = d.sorts;
      std::uint64_t all = (std::uint64_t{1} << d.sorts.size()) - 1;
      f.clauses = {LinearEquation{all, d.b}};
      break;
    }
    case T::C7: {
      if (static_cast<int>(d.counts.size()) != 2 * k)
        throw std::invalid_argument("materialize: c7 counts width != 2k");
      int total = 0;
      for (int s = 1; s <= k; ++s) {
        int m = d.counts[2 * (s - 1)], n = d.counts[2 * (s - 1) + 1];
        if (m < 0 || n < 0 || (m && n))
          throw std::invalid_argument("materialize: bad c7 counts");
        for (int p = 0; p < m; ++p) {
          f.sorts.push_back(s);
          f.clauses.push_back(unary(++total, 0));
        }
        for (int p = 0; p < n; ++p) {
          f.sorts.push_back(s);
          f.clauses.push_back(unary(++total, 1));
        }
      }
      if (total == 0)
        throw std::invalid_argument("materialize: empty c7 descriptor");
      break;
    }
  }
  return materialize(f);
}

std::vector<CanonicalDescriptor> enumerate_CR(int k, int max_arity) {
  using T = CanonicalDescriptor::Type;
  std::vector<CanonicalDescriptor> out;
  auto add = [&](CanonicalDescriptor d) { out.push_back(std::move(d)); };
  if (max_arity >= 2) {
    for (int i = 1; i <= k; ++i) add({T::C1, i});
    for (int i = 1; i <= k; ++i) add({T::C4, i});
  }
  if (max_arity >= 3) {
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j)
        for (int b = 0; b <= 1; ++b) add({T::C2, i, j, b});
    for (int i = 1; i <= k; ++i) add({T::C3Chain, i});
  }
  if (max_arity >= 4) {
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) add({T::C3Cross, i, j});
    for (int i = 1; i <= k; ++i)
      for (int j = i; j <= k; ++j) add({T::C5, i, j});
  }
  // C6: one variable per sort in an ascending subset of size >= 2.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    int n = std::popcount(mask);
    if (n < 2 || n > max_arity) continue;
    std::vector<int> sorts;
    for (int s = 1; s <= k; ++s)
      if (mask & (std::uint64_t{1} << (s - 1))) sorts.push_back(s);
    for (int b = 0; b <= 1; ++b) {
      CanonicalDescriptor d{T::C6};
      d.b = b;
      d.sorts = sorts;
      add(std::move(d));
    }
  }
  // C7: per-sort (m,0) or (0,n) blocks, total arity in 1..max_arity.
  std::vector<int> counts(2 * k, 0);
  auto rec = [&](auto&& self, int s, int used) -> void {
    if (s > k) {
      if (used >= 1) {
        CanonicalDescriptor d{T::C7};
        d.counts = counts;
        add(std::move(d));
      }
      return;
    }
    for (int m = 0; used + m <= max_arity; ++m) {
      counts[2 * (s - 1)] = m;
      counts[2 * (s - 1) + 1] = 0;
      self(self, s + 1, used + m);
    }
    counts[2 * (s - 1)] = 0;
    for (int n = 1; used + n <= max_arity; ++n) {
      counts[2 * (s - 1) + 1] = n;
      self(self, s + 1, used + n);
    }
    counts[2 * (s - 1) + 1] = 0;
  };
  rec(rec, 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<CanonicalDescriptor> classify(const Relation& r) {
  for (int v = 1; v <= r.arity(); ++v)
    if (is_dummy(r, v)) return std::nullopt;
  std::size_t cnt = r.tuples.count();
  for (const auto& d : enumerate_CR(r.k, r.arity())) {
    Relation m = materialize(d, r.k);
    if (m.arity() != r.arity() || m.tuples.count() != cnt) continue;
    if (is_similar(m, r)) return d;
  }
  return std::nullopt;
}

std::vector<int> mu(const CanonicalDescriptor& d, int k) {
  if (d.type != CanonicalDescriptor::Type::C7)
    throw std::invalid_argument("mu: descriptor is not c7");
  std::vector<int> out = d.counts;
  out.resize(2 * k, 0);
  return out;
}

bool is_trivial_qpp(const Relation& r) {
  if (r.tuples.none()) return true;
  if (r.tuples.all()) return true;
  int n = r.arity();
  // Candidate kernel: variables forced equal in every tuple.
  Relation cand = full_relation(r.k, r.sorts);
  for (int v = 1; v <= n; ++v)
    for (int w = v + 1; w <= n; ++w) {
      if (r.sorts[v - 1] != r.sorts[w - 1]) continue;
      bool eq = true;
      for (std::size_t t = 0; t < r.tuples.size() && eq; ++t)
        if (r.tuples.test(t))
          eq = tuple_bit(t, n, v) == tuple_bit(t, n, w);
      if (!eq) continue;
      for (std::size_t t = 0; t < cand.tuples.size(); ++t)
        if (tuple_bit(t, n, v) != tuple_bit(t, n, w)) cand.tuples.set(t, false);
    }
  return r.tuples == cand.tuples;
}

namespace {

struct ClauseView {
  std::vector<int> vars;  // 1-based support
  int rhs = 0;
};

std::vector<ClauseView> clause_views(const DisjunctiveForm& f) {
  std::vector<ClauseView> out;
  for (const auto& c : f.clauses) {
    ClauseView v;
    std::uint64_t m = c.coeffs;
    while (m) {
      v.vars.push_back(std::countr_zero(m) + 1);
      m &= m - 1;
    }
    v.rhs = c.rhs;
    out.push_back(std::move(v));
  }
  return out;
}

// All variables of the form lie in the given sort set.
bool sorts_within(const DisjunctiveForm& f, std::initializer_list<int> allowed) {
  for (int s : f.sorts)
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end())
      return false;
  return true;
}

bool all_unary(const std::vector<ClauseView>& cs) {
  for (const auto& c : cs)
    if (c.vars.size() != 1) return false;
  return true;
}

/* Row-space test: the complement system of f can be rewritten with
 * every row even-weight and single-sorted within `groups` (a list of
 * variable masks).  True iff the row space is spanned by its vectors of
 * that shape. */
bool spanned_by_even_rows(const DisjunctiveForm& f,
                          const std::vector<std::uint64_t>& groups) {
  std::vector<std::uint64_t> vecs;
  for (const auto& c : f.clauses) vecs.push_back(c.coeffs);
  auto basis = gf2_rref_basis(vecs);
  if (basis.size() > 20) return false;  // cannot happen at our arities
  std::vector<std::uint64_t> good;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << basis.size()); ++sel) {
    std::uint64_t v = 0;
    for (std::size_t p = 0; p < basis.size(); ++p)
      if (sel & (std::uint64_t{1} << p)) v ^= basis[p];
    if (!v) continue;
    for (auto g : groups)
      if ((v & ~g) == 0 && (std::popcount(v) & 1) == 0) {
        good.push_back(v);
        break;
      }
  }
  return gf2_rref_basis(good).size() == basis.size();
}

std::uint64_t sort_mask(const DisjunctiveForm& f, int sort) {
  std::uint64_t m = 0;
  for (int v = 1; v <= f.arity(); ++v)
    if (f.sorts[v - 1] == sort) m |= std::uint64_t{1} << (v - 1);
  return m;
}

}  // namespace

bool SingleGeneratorClosure::contains(const Relation& query) const {
  using T = CanonicalDescriptor::Type;
  if (!is_key(query)) return false;
  if (is_trivial_qpp(query)) return true;
  Relation r = drop_dummies(query).first;
  DisjunctiveForm f = *to_disjunctive_form(r);
  auto cs = clause_views(f);
  auto sort_of = [&](int var) { return f.sorts[var - 1]; };

  switch (d_.type) {
    case T::C1: {
      if (!sorts_within(f, {d_.i})) return false;
      if (!all_unary(cs)) return false;
      // Universally quantifying either variable of (x=0 or y=1) yields the
      // single constants x=0 and x=1, so both lie in the closure.
      if (cs.size() == 1) return true;
      if (cs.size() != 2) return false;
      return cs[0].vars[0] != cs[1].vars[0] && (cs[0].rhs ^ cs[1].rhs) == 1;
    }
    case T::C4: {
      if (!sorts_within(f, {d_.i}) || cs.size() != 1) return false;
      return cs[0].vars.size() == 2 && cs[0].rhs == 1 && f.arity() == 2;
    }
    case T::C2: {
      if (!sorts_within(f, {d_.i, d_.j})) return false;
      // Split off an optional equality clause x=y on sort i.
      std::vector<const ClauseView*> unaries;
      const ClauseView* eq = nullptr;
      for (const auto& c : cs) {
        if (c.vars.size() == 1) {
          unaries.push_back(&c);
        } else if (c.vars.size() == 2 && c.rhs == 0 && !eq &&
                   sort_of(c.vars[0]) == d_.i && sort_of(c.vars[1]) == d_.i) {
          eq = &c;
        } else {
          return false;
        }
      }
      if (unaries.empty()) return false;
      for (const auto* u : unaries)
        if (sort_of(u->vars[0]) != d_.j) return false;
      int off_count = 0;
      for (const auto* u : unaries) off_count += u->rhs != d_.b;
      if (d_.i != d_.j) return off_count == 0;
      // Same-sort generator: one flipped constant is allowed, but only
      // in the pure-disjunction family (no equality clause).
      return off_count == 0 || (off_count == 1 && !eq);
    }
    case T::C3Cross:
      if (!sorts_within(f, {d_.i, d_.j})) return false;
      return spanned_by_even_rows(f, {sort_mask(f, d_.i), sort_mask(f, d_.j)});
    case T::C3Chain:
      if (!sorts_within(f, {d_.i})) return false;
      return spanned_by_even_rows(f, {sort_mask(f, d_.i)});
    case T::C5: {
      if (!sorts_within(f, {d_.i, d_.j}) || cs.size() != 1) return false;
      if (cs[0].rhs != 0) return false;
      int ci = 0, cj = 0;
      for (int v : cs[0].vars) (sort_of(v) == d_.i ? ci : cj)++;
      if (static_cast<int>(cs[0].vars.size()) != f.arity()) return false;
      if (d_.i == d_.j)
        return ci >= 4 && ci % 2 == 0;
      return ci >= 2 && cj >= 2 && ci % 2 == 0 && cj % 2 == 0;
    }
    case T::C6: {
      if (cs.size() != 1) return false;
      if (static_cast<int>(cs[0].vars.size()) != f.arity()) return false;
      std::map<int, int> per_sort;
      for (int v : cs[0].vars) {
        int s = sort_of(v);
        if (std::find(d_.sorts.begin(), d_.sorts.end(), s) == d_.sorts.end())
          return false;
        per_sort[s]++;
      }
      if (d_.sorts.size() == 2) {
        // Two-sort generator: only the relation itself.
        return cs[0].rhs == d_.b && per_sort.size() == 2 &&
               f.arity() == 2;
      }
      bool all_odd = per_sort.size() == d_.sorts.size();
      for (auto [s, c] : per_sort) all_odd = all_odd && (c % 2 == 1);
      if (all_odd && cs[0].rhs == d_.b) return true;
      bool all_even = true;
      for (auto [s, c] : per_sort) all_even = all_even && (c % 2 == 0);
      return all_even && cs[0].rhs == 0;
    }
    case T::C7: {
      if (!all_unary(cs)) return false;
      std::vector<int> zero(k_ + 1, 0), one(k_ + 1, 0);
      for (const auto& c : cs) {
        int s = sort_of(c.vars[0]);
        (c.rhs == 0 ? zero[s] : one[s])++;
      }
      for (int s = 1; s <= k_; ++s) {
        if (zero[s] && one[s]) return false;
        if (zero[s] > d_.counts[2 * (s - 1)]) return false;
        if (one[s] > d_.counts[2 * (s - 1) + 1]) return false;
      }
      return true;
    }
  }
  return false;
}

bool pointwise_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t p = 0; p < a.size(); ++p)
    if (a[p] > b[p]) return false;
  return true;
}

bool downset_contains(const Downset& ds, const std::vector<int>& p) {
  for (const auto& m : ds.maximal)
    if (pointwise_leq(p, m)) return true;
  return false;
}

Downset downset_insert(Downset ds, const std::vector<int>& p) {
  if (static_cast<int>(p.size()) != ds.dim)
    throw std::invalid_argument("downset_insert: dimension mismatch");
  if (downset_contains(ds, p)) return ds;
  std::erase_if(ds.maximal,
                [&](const std::vector<int>& m) { return pointwise_leq(m, p); });
  ds.maximal.push_back(p);
  std::sort(ds.maximal.begin(), ds.maximal.end());
  return ds;
}

bool downset_leq(const Downset& a, const Downset& b) {
  for (const auto& m : a.maximal)
    if (!downset_contains(b, m)) return false;
  return true;
}

}  // namespace clonelab
