#include "clonelab/closure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "clonelab/elementary.hpp"

namespace clonelab {

namespace {

constexpr int kMaxCanonArity = 8;
constexpr std::size_t kClosureSizeGuard = 500000;

// idx -> source index tables for every permutation of n variables,
// built once per arity.
struct PermTables {
  std::vector<std::vector<int>> perms;          // the permutations (1-based)
  std::vector<std::vector<std::uint16_t>> map;  // result idx -> source idx
};

const PermTables& perm_tables(int n) {
  static std::mutex mu;
  static std::map<int, PermTables> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  PermTables t;
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    std::vector<std::uint16_t> m(std::size_t{1} << n);
    for (std::size_t idx = 0; idx < m.size(); ++idx) {
      std::size_t src = 0;
      for (int j = 1; j <= n; ++j)
        src |= static_cast<std::size_t>(tuple_bit(idx, n, pi[j - 1]))
               << (n - j);
      m[idx] = static_cast<std::uint16_t>(src);
    }
    t.perms.push_back(pi);
    t.map.push_back(std::move(m));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return cache.emplace(n, std::move(t)).first->second;
}

// x_pos moved to the front, all other variables keeping their order.
std::vector<int> front_perm(int n, int pos) {
  std::vector<int> pi(n);
  int next = 2;
  for (int v = 1; v <= n; ++v) pi[v - 1] = (v == pos) ? 1 : next++;
  return pi;
}

// x_pos1 to the front, x_pos2 second, the rest in order.
std::vector<int> front_perm2(int n, int pos1, int pos2) {
  std::vector<int> pi(n);
  int next = 3;
  for (int v = 1; v <= n; ++v)
    pi[v - 1] = (v == pos1) ? 1 : (v == pos2) ? 2 : next++;
  return pi;
}

}  // namespace

Relation canon_rep(const Relation& r) {
  Relation d = drop_dummies(r).first;
  int n = d.arity();
  if (n > kMaxCanonArity)
    throw std::runtime_error("canon_rep: arity too large to canonicalize");
  if (n <= 1) return d;
  const PermTables& pt = perm_tables(n);
  std::vector<int> best_sorts;
  Bits best_bits;
  bool have = false;
  std::vector<int> cand_sorts(n);
  for (std::size_t p = 0; p < pt.perms.size(); ++p) {
    const auto& pi = pt.perms[p];
    for (int j = 1; j <= n; ++j) cand_sorts[pi[j - 1] - 1] = d.sorts[j - 1];
    if (have && cand_sorts > best_sorts) continue;
    Bits cand(d.tuples.size());
    const auto& m = pt.map[p];
    for (std::size_t idx = 0; idx < cand.size(); ++idx)
      if (d.tuples.test(m[idx])) cand.set(idx);
    if (!have || cand_sorts < best_sorts ||
        (cand_sorts == best_sorts && cand < best_bits)) {
      best_sorts = cand_sorts;
      best_bits = std::move(cand);
      have = true;
    }
  }
  return Relation{d.k, std::move(best_sorts), std::move(best_bits)};
}

namespace {

// Derivations from one relation: identifications and (optionally)
// universal quantifications over every variable choice.
void unary_results(const Relation& r, bool with_forall,
                   std::vector<Relation>& out) {
  int n = r.arity();
  for (int i = 1; i <= n; ++i) {
    if (with_forall)
      out.push_back(eo_forall(permute_vars(r, front_perm(n, i))));
    for (int j = 1; j <= n; ++j) {
      if (j == i || r.sorts[i - 1] != r.sorts[j - 1]) continue;
      out.push_back(eo_identify(permute_vars(r, front_perm2(n, i, j))));
    }
  }
}

// Existential composition over a shared lead variable with the tails of
// both operands identified pairwise: r(x2..xn) = exists z. a(z,x2..xn) and
// b(z,x2..xn).  Equivalent to composing and then identifying tail
// variables, but stays at arity n-1 instead of passing through 2n-2.
Relation shared_compose(const Relation& a, const Relation& b) {
  int n = a.arity();
  std::size_t half = std::size_t{1} << (n - 1);
  Bits bits(half);
  for (std::size_t idx = 0; idx < half; ++idx)
    if ((a.tuples.test(idx) && b.tuples.test(idx)) ||
        (a.tuples.test(idx + half) && b.tuples.test(idx + half)))
      bits.set(idx);
  return Relation{a.k, std::vector<int>(a.sorts.begin() + 1, a.sorts.end()),
                  std::move(bits)};
}

// Compositions of a and b over every admissible pair of lead variables.
void compose_results(const Relation& a, const Relation& b, int cap,
                     std::vector<Relation>& out) {
  if (a.arity() < 1 || b.arity() < 1) return;
  if (a.sorts == b.sorts) {
    int n = a.arity();
    for (int v = 1; v <= n; ++v) {
      auto pi = front_perm(n, v);
      out.push_back(shared_compose(permute_vars(a, pi), permute_vars(b, pi)));
    }
  }
  if (a.arity() + b.arity() - 2 > cap) return;
  for (int i = 1; i <= a.arity(); ++i)
    for (int j = 1; j <= b.arity(); ++j) {
      if (a.sorts[i - 1] != b.sorts[j - 1]) continue;
      out.push_back(eo_compose(permute_vars(a, front_perm(a.arity(), i)),
                               permute_vars(b, front_perm(b.arity(), j))));
    }
}

}  // namespace

namespace {

std::vector<Relation> eo_closure_impl(
    const std::vector<Relation>& S, int k, const ClosureConfig& cfg,
    bool with_forall, const std::function<bool(const Relation&)>* sink) {
  int W = cfg.arity_cap;
  std::unordered_set<Relation, RelationHash> seen;
  std::vector<Relation> items;
  std::unordered_map<Relation, Relation, RelationHash> canon_cache;
  bool stop = false;

  auto push_canon = [&](const Relation& c) {
    if (c.arity() > W)
      throw std::runtime_error("eo_closure: arity cap below an input arity");
    if (seen.insert(c).second) {
      items.push_back(c);
      if (items.size() > kClosureSizeGuard)
        throw std::runtime_error("eo_closure: budget exceeded");
      if (sink && !(*sink)(c)) stop = true;
    }
  };
  auto push_raw = [&](const Relation& raw) {
    auto it = canon_cache.find(raw);
    if (it == canon_cache.end())
      it = canon_cache.emplace(raw, canon_rep(raw)).first;
    push_canon(it->second);
  };

  push_raw(bottom(k));
  for (int s = 1; s <= k; ++s) push_raw(equality(k, s));
  for (const auto& r : S) {
    if (r.k != k) throw std::invalid_argument("eo_closure: mixed k");
    push_raw(r);
  }

  int workers = std::max(1, cfg.threads);
  for (std::size_t p = 0; p < items.size() && !stop; ++p) {
    const Relation r = items[p];
    std::vector<Relation> raw;
    unary_results(r, with_forall, raw);
    if (workers == 1 || p < 64) {
      for (std::size_t q = 0; q <= p; ++q)
        compose_results(r, items[q], W, raw);
      for (const auto& c : raw) push_raw(c);
    } else {
      std::vector<std::vector<Relation>> parts(workers);
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t q = w; q <= p; q += workers) {
            std::vector<Relation> local;
            compose_results(r, items[q], W, local);
            for (const auto& c : local) parts[w].push_back(canon_rep(c));
          }
        });
      for (auto& t : pool) t.join();
      for (const auto& c : raw) push_raw(c);
      for (const auto& part : parts)
        for (const auto& c : part) push_canon(c);
    }
  }
  std::sort(items.begin(), items.end(), [](const Relation& a, const Relation& b) {
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    if (a.sorts != b.sorts) return a.sorts < b.sorts;
    return a.tuples < b.tuples;
  });
  return items;
}

}  // namespace

std::vector<Relation> eo_closure(const std::vector<Relation>& S, int k,
                                 const ClosureConfig& cfg, bool with_forall) {
  return eo_closure_impl(S, k, cfg, with_forall, nullptr);
}

void eo_closure_stream(const std::vector<Relation>& S, int k,
                       const ClosureConfig& cfg, bool with_forall,
                       const std::function<bool(const Relation&)>& sink) {
  eo_closure_impl(S, k, cfg, with_forall, &sink);
}

namespace {

// All relations at the given shape obtained from e by injecting its
// variables (sorts matching) and padding with dummies.
void versions_at(const Relation& e, const std::vector<int>& sorts,
                 std::vector<Bits>& out) {
  int n = static_cast<int>(sorts.size());
  int m = e.arity();
  if (m > n) return;
  std::vector<int> slot(m, 0);   // slot[j]: position of e's variable j+1
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m) {
      Bits v(std::size_t{1} << n);
      for (std::size_t idx = 0; idx < v.size(); ++idx) {
        std::size_t eidx = 0;
        for (int t = 0; t < m; ++t)
          eidx |= static_cast<std::size_t>(tuple_bit(idx, n, slot[t]))
                  << (m - 1 - t);
        if (e.tuples.test(eidx)) v.set(idx);
      }
      out.push_back(std::move(v));
      return;
    }
    for (int pos = 1; pos <= n; ++pos) {
      if (used[pos] || sorts[pos - 1] != e.sorts[j]) continue;
      used[pos] = true;
      slot[j] = pos;
      self(self, j + 1);
      used[pos] = false;
    }
  };
  rec(rec, 0);
}

std::vector<Bits> shape_versions(const std::vector<Relation>& E,
                                 const std::vector<int>& sorts) {
  std::vector<Bits> all;
  for (const auto& e : E) versions_at(e, sorts, all);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool conj_span_hits(const Relation& target, const std::vector<Bits>& versions) {
  Bits acc = Bits::ones(target.tuples.size());
  for (const auto& v : versions)
    if (target.tuples.subset_of(v)) acc = acc & v;
  return acc == target.tuples;
}

}  // namespace

bool in_conj_span(const Relation& target, const std::vector<Relation>& E) {
  return conj_span_hits(target, shape_versions(E, target.sorts));
}

std::vector<Bits> versions_at_shape(const Relation& e,
                                    const std::vector<int>& sorts) {
  std::vector<Bits> out;
  versions_at(e, sorts, out);
  return out;
}

std::vector<bool> span_hits(const std::vector<Relation>& S, int k,
                            const ClosureConfig& cfg, bool with_forall,
                            const std::vector<Relation>& targets) {
  struct Goal {
    const Relation* t;
    Bits acc;
    bool done;
  };
  std::vector<Goal> goals;
  std::size_t remaining = 0;
  for (const auto& t : targets) {
    Goal g{&t, Bits::ones(t.tuples.size()), false};
    g.done = (g.acc == t.tuples);
    if (!g.done) ++remaining;
    goals.push_back(std::move(g));
  }
  if (remaining > 0)
    eo_closure_stream(S, k, cfg, with_forall, [&](const Relation& r) -> bool {
      for (auto& g : goals) {
        if (g.done || r.arity() > g.t->arity()) continue;
        for (const Bits& v : versions_at_shape(r, g.t->sorts))
          if (g.t->tuples.subset_of(v)) g.acc = g.acc & v;
        if (g.acc == g.t->tuples) {
          g.done = true;
          --remaining;
        }
      }
      return remaining > 0;
    });
  std::vector<bool> out;
  out.reserve(goals.size());
  for (const auto& g : goals) out.push_back(g.done);
  return out;
}

bool ConjSpan::contains(const Relation& target) const {
  auto it = cache_.find(target.sorts);
  if (it == cache_.end())
    it = cache_.emplace(target.sorts, shape_versions(E_, target.sorts)).first;
  return conj_span_hits(target, it->second);
}

namespace {

std::vector<Relation> conj_layer(const std::vector<Relation>& E, int k,
                                 int conj_cap) {
  std::unordered_set<Relation, RelationHash> seen;
  std::vector<Relation> out;
  for (const auto& e : E)
    if (seen.insert(e).second) out.push_back(e);
  for (int a = 0; a <= conj_cap; ++a) {
    // Non-decreasing sort vectors only; the rest differ by a variable
    // permutation and canonicalize identically.
    std::vector<int> sorts(a, 1);
    while (true) {
      auto base = shape_versions(E, sorts);
      std::set<Bits> closed(base.begin(), base.end());
      std::vector<Bits> work(base.begin(), base.end());
      while (!work.empty()) {
        Bits cur = std::move(work.back());
        work.pop_back();
        for (const auto& b : base) {
          Bits both = cur & b;
          if (closed.insert(both).second) {
            work.push_back(both);
            if (closed.size() > kClosureSizeGuard)
              throw std::runtime_error("qpp_closure: budget exceeded");
          }
        }
      }
      for (const auto& bits : closed) {
        Relation c = canon_rep(Relation{k, sorts, bits});
        if (seen.insert(c).second) out.push_back(c);
      }
      int d = a - 1;
      while (d >= 0 && sorts[d] >= k) --d;
      if (d < 0) break;
      ++sorts[d];
      for (int t = d + 1; t < a; ++t) sorts[t] = sorts[d];
    }
  }
  std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) {
    if (x.arity() != y.arity()) return x.arity() < y.arity();
    if (x.sorts != y.sorts) return x.sorts < y.sorts;
    return x.tuples < y.tuples;
  });
  return out;
}

}  // namespace

std::vector<Relation> qpp_closure(const std::vector<Relation>& S, int k,
                                  const ClosureConfig& cfg) {
  return conj_layer(eo5_closure(S, k, cfg), k, cfg.conj_bound());
}

std::vector<Relation> pp_closure(const std::vector<Relation>& S, int k,
                                 const ClosureConfig& cfg) {
  return conj_layer(eo4_closure(S, k, cfg), k, cfg.conj_bound());
}

MembershipOracle::MembershipOracle(std::vector<Relation> S, int k,
                                   ClosureConfig cfg)
    : S_(std::move(S)), k_(k), cfg_(cfg) {}

const std::vector<Relation>& MembershipOracle::closure5() const {
  if (!closure5_ready_) {
    closure5_ = eo5_closure(S_, k_, cfg_);
    closure5_ready_ = true;
  }
  return closure5_;
}

Verdict MembershipOracle::member(const Relation& target) const {
  if (target.k != k_) throw std::invalid_argument("member: mixed k");
  // The refutation side is cheap, so run it before touching the closure.
  for (const auto& f : spol())
    if (!preserves(f, target)) return Verdict::Out;
  // Goal-directed: the streamed closure stops as soon as the target is
  // hit, so the full fixpoint is only paid on an Undecided verdict.
  if (span_hits(S_, k_, cfg_, /*with_forall=*/true, {target})[0])
    return Verdict::In;
  return Verdict::Undecided;
}

const std::vector<KOperation>& MembershipOracle::spol() const {
  if (!spol_ready_) {
    spol_ = pol_bounded(S_, k_, cfg_.pol_cap, /*surjective_only=*/true);
    spol_ready_ = true;
  }
  return spol_;
}

bool MembershipOracle::pp_member(const Relation& target) const {
  return span_hits(S_, k_, cfg_, /*with_forall=*/false, {target})[0];
}

Verdict member(const Relation& target, const std::vector<Relation>& S, int k,
               const ClosureConfig& cfg) {
  return MembershipOracle(S, k, cfg).member(target);
}

bool is_closed_canonical(const std::vector<CanonicalDescriptor>& S, int k,
                         const ClosureConfig& cfg) {
  std::vector<Relation> mats;
  std::set<CanonicalDescriptor> in_S(S.begin(), S.end());
  mats.reserve(S.size());
  for (const auto& d : S) mats.push_back(materialize(d, k));
  std::vector<Relation> E = eo5_closure(mats, k, cfg);

  std::set<CanonicalDescriptor> found;
  for (const auto& e : E)
    if (auto d = classify(e)) found.insert(*d);
  if (found != in_S) return false;

  for (const auto& d : enumerate_CR(k, std::min(cfg.arity_cap, 4))) {
    if (d.type == CanonicalDescriptor::Type::C7) continue;
    if (in_S.contains(d)) continue;
    if (in_conj_span(materialize(d, k), E)) return false;
  }
  return true;
}

}  // namespace clonelab
