#include "clonelab/operations.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace clonelab {

KOperation projection(int k, int n, int i) {
  if (n < 1 || i < 1 || i > n)
    throw std::invalid_argument("projection: bad arity/index");
  std::uint64_t t = 0;
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx)
    t |= static_cast<std::uint64_t>(tuple_bit(idx, n, i)) << idx;
  return KOperation{k, n, std::vector<std::uint64_t>(k, t)};
}

KOperation constant_op(int k, int c) {
  return KOperation{k, 1, std::vector<std::uint64_t>(k, c ? 0b11u : 0u)};
}

bool is_surjective(const KOperation& f) {
  if (f.arity < 1) return false;
  std::uint64_t mask = (f.arity >= 64) ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << (1 << f.arity)) - 1;
  for (auto t : f.tables) {
    std::uint64_t v = t & mask;
    if (v == 0 || v == mask) return false;
  }
  return true;
}

KOperation compose_ops(const KOperation& f, const std::vector<KOperation>& gs) {
  if (static_cast<int>(gs.size()) != f.arity)
    throw std::invalid_argument("compose_ops: wrong number of inner operations");
  if (gs.empty()) throw std::invalid_argument("compose_ops: nullary");
  int n = gs[0].arity;
  for (const auto& g : gs)
    if (g.arity != n || g.k != f.k)
      throw std::invalid_argument("compose_ops: inner operations disagree");
  KOperation h{f.k, n, std::vector<std::uint64_t>(f.k, 0)};
  int m = f.arity;
  for (int coord = 1; coord <= f.k; ++coord)
    for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
      std::size_t fidx = 0;
      for (int j = 1; j <= m; ++j)
        fidx |= static_cast<std::size_t>(gs[j - 1].value(coord, idx))
                << (m - j);
      h.tables[coord - 1] |=
          static_cast<std::uint64_t>(f.value(coord, fidx)) << idx;
    }
  return h;
}

std::vector<KOperation> clo_generate(const std::vector<KOperation>& F, int k,
                                     int max_arity, bool surjective_only) {
  if (max_arity < 1 || max_arity > 6)
    throw std::invalid_argument("clo_generate: arity bound out of range");
  std::set<KOperation> set;
  for (int n = 1; n <= max_arity; ++n)
    for (int i = 1; i <= n; ++i) set.insert(projection(k, n, i));
  for (const auto& f : F) {
    if (f.k != k) throw std::invalid_argument("clo_generate: mixed k");
    if (f.arity > max_arity) continue;
    if (surjective_only && !is_surjective(f)) continue;
    set.insert(f);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<KOperation> snapshot(set.begin(), set.end());
    std::vector<std::vector<KOperation>> by_arity(max_arity + 1);
    for (const auto& g : snapshot) by_arity[g.arity].push_back(g);
    for (const auto& f : snapshot)
      for (int n = 1; n <= max_arity; ++n) {
        const auto& pool = by_arity[n];
        if (pool.empty()) continue;
        std::vector<std::size_t> pick(f.arity, 0);
        while (true) {
          std::vector<KOperation> gs;
          gs.reserve(f.arity);
          for (auto p : pick) gs.push_back(pool[p]);
          KOperation h = compose_ops(f, gs);
          if (!surjective_only || is_surjective(h))
            if (set.insert(h).second) grew = true;
          int d = f.arity - 1;
          while (d >= 0 && ++pick[d] == pool.size()) pick[d--] = 0;
          if (d < 0) break;
        }
      }
  }
  return {set.begin(), set.end()};
}

bool preserves(const KOperation& f, const Relation& r) {
  if (r.arity() == 0) return true;
  int n = r.arity();
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < r.tuples.size(); ++i)
    if (r.tuples.test(i)) rows.push_back(i);
  if (rows.empty()) return true;
  int m = f.arity;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::size_t res = 0;
    for (int v = 1; v <= n; ++v) {
      std::size_t fidx = 0;
      for (int j = 0; j < m; ++j)
        fidx |= static_cast<std::size_t>(tuple_bit(rows[pick[j]], n, v))
                << (m - 1 - j);
      res |= static_cast<std::size_t>(f.value(r.sorts[v - 1], fidx))
             << (n - v);
    }
    if (!r.tuples.test(res)) return false;
    int d = m - 1;
    while (d >= 0 && ++pick[d] == rows.size()) pick[d--] = 0;
    if (d < 0) return true;
  }
}

int enumeration_budget_bits() {
  static int bits = [] {
    if (const char* e = std::getenv("CLONELAB_BUDGET")) {
      int v = std::atoi(e);
      if (v >= 1 && v <= 30) return v;
    }
    return 20;
  }();
  return bits;
}

std::vector<KOperation> pol_bounded(const std::vector<Relation>& S, int k,
                                    int max_arity, bool surjective_only) {
  std::vector<KOperation> out;
  for (int m = 1; m <= max_arity; ++m) {
    long long bits = static_cast<long long>(k) << m;
    if (bits > enumeration_budget_bits())
      throw std::runtime_error(
          "pol_bounded: table space k*2^" + std::to_string(m) +
          " exceeds the enumeration budget (" +
          std::to_string(enumeration_budget_bits()) + " bits)");
    std::size_t entries = std::size_t{1} << (1 << m);
    std::uint64_t total = std::uint64_t{1} << bits;
    for (std::uint64_t code = 0; code < total; ++code) {
      KOperation f{k, m, std::vector<std::uint64_t>(k, 0)};
      std::uint64_t c = code;
      for (int coord = 0; coord < k; ++coord) {
        f.tables[coord] = c & (entries - 1);
        c >>= (1 << m);
      }
      if (surjective_only && !is_surjective(f)) continue;
      bool ok = true;
      for (const auto& r : S)
        if (!preserves(f, r)) {
          ok = false;
          break;
        }
      if (ok) out.push_back(f);
    }
  }
  return out;
}

std::vector<Relation> inv_bounded(const std::vector<KOperation>& F, int k,
                                  int max_arity) {
  if (max_arity > 4)
    throw std::runtime_error("inv_bounded: relation space exceeds the budget");
  std::vector<Relation> out;
  for (int a = 0; a <= max_arity; ++a) {
    std::vector<int> sorts(a, 1);
    while (true) {
      std::size_t nbits = std::size_t{1} << a;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << nbits); ++code) {
        Relation r = empty_relation(k, sorts);
        for (std::size_t i = 0; i < nbits; ++i)
          if (code & (std::uint64_t{1} << i)) r.tuples.set(i);
        bool ok = true;
        for (const auto& f : F)
          if (!preserves(f, r)) {
            ok = false;
            break;
          }
        if (ok) out.push_back(std::move(r));
      }
      int d = a - 1;
      while (d >= 0 && ++sorts[d] > k) sorts[d--] = 1;
      if (d < 0) break;
    }
  }
  return out;
}

Relation indicator(const std::vector<KOperation>& F, int k, int n) {
  long long width = static_cast<long long>(k) << n;
  if (width > enumeration_budget_bits())
    throw std::runtime_error("indicator: arity k*2^n exceeds the budget");
  int arity = static_cast<int>(width);
  std::vector<int> sorts;
  for (int coord = 1; coord <= k; ++coord)
    for (std::size_t t = 0; t < (std::size_t{1} << n); ++t)
      sorts.push_back(coord);
  Relation r = empty_relation(k, sorts);
  for (const auto& f : F) {
    if (f.arity != n) continue;
    std::size_t idx = 0;
    int pos = 1;
    for (int coord = 1; coord <= k; ++coord)
      for (std::size_t t = 0; t < (std::size_t{1} << n); ++t, ++pos)
        idx |= static_cast<std::size_t>(f.value(coord, t)) << (arity - pos);
    r.tuples.set(idx);
  }
  return r;
}

Relation least_invariant_superset(const Relation& r,
                                  const std::vector<KOperation>& F) {
  Relation out = r;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& f : F) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < out.tuples.size(); ++i)
        if (out.tuples.test(i)) rows.push_back(i);
      if (rows.empty()) break;
      int n = out.arity(), m = f.arity;
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        std::size_t res = 0;
        for (int v = 1; v <= n; ++v) {
          std::size_t fidx = 0;
          for (int j = 0; j < m; ++j)
            fidx |= static_cast<std::size_t>(tuple_bit(rows[pick[j]], n, v))
                    << (m - 1 - j);
          res |= static_cast<std::size_t>(f.value(out.sorts[v - 1], fidx))
                 << (n - v);
        }
        if (!out.tuples.test(res)) {
          out.tuples.set(res);
          grew = true;
        }
        int d = m - 1;
        while (d >= 0 && ++pick[d] == rows.size()) pick[d--] = 0;
        if (d < 0) break;
      }
    }
  }
  return out;
}

std::vector<Relation> adjoin_constants(const std::vector<Relation>& S,
                                       bool keep_zero, bool keep_one) {
  std::vector<Relation> out;
  for (const auto& r : S) {
    if (keep_zero && !preserves(constant_op(r.k, 0), r)) continue;
    if (keep_one && !preserves(constant_op(r.k, 1), r)) continue;
    out.push_back(r);
  }
  return out;
}

}  // namespace clonelab
