#pragma once

#include <functional>
#include <map>
#include <vector>

#include "clonelab/canonical.hpp"
#include "clonelab/operations.hpp"
#include "clonelab/relation.hpp"

namespace clonelab {

struct ClosureConfig {
  int arity_cap = 6;  // W: bound on every intermediate arity
  int pol_cap = 4;    // M: bound on refuting polymorphism arity
  int conj_cap = -1;  // bound on the conjunction layer; -1 means arity_cap
  int threads = 1;

  int conj_bound() const { return conj_cap < 0 ? arity_cap : conj_cap; }
};

enum class Verdict { In, Out, Undecided };

/* Deduplication key: dummy-free and lexicographically minimal over all
 * variable permutations, comparing the sort vector first and the tuple
 * bit vector second. */
Relation canon_rep(const Relation& r);

/* Closure of S (plus the seeds sigma_bot and one equality per sort)
 * under dummies, permutation, identification, composition and -- when
 * with_forall is set -- universal quantification, every intermediate
 * kept within cfg.arity_cap.  Returns canonical representatives. */
std::vector<Relation> eo_closure(const std::vector<Relation>& S, int k,
                                 const ClosureConfig& cfg, bool with_forall);

/* Same closure, but every new member is reported to sink as soon as it
 * is found; when sink returns false the closure stops early.  Useful
 * for goal-directed membership tests that do not need the fixpoint. */
void eo_closure_stream(const std::vector<Relation>& S, int k,
                       const ClosureConfig& cfg, bool with_forall,
                       const std::function<bool(const Relation&)>& sink);

/* All tuple sets at the given shape obtained from e by injecting its
 * variables (sort-respecting, order-preserving per choice) and padding
 * the remaining positions with dummies. */
std::vector<Bits> versions_at_shape(const Relation& e,
                                    const std::vector<int>& sorts);

/* Goal-directed span test: streams the bounded closure of S and decides,
 * per target, whether it equals the intersection of its containing
 * same-shape closure versions; the closure stops as soon as every target
 * has been reached, so only negative answers pay for the fixpoint. */
std::vector<bool> span_hits(const std::vector<Relation>& S, int k,
                            const ClosureConfig& cfg, bool with_forall,
                            const std::vector<Relation>& targets);

inline std::vector<Relation> eo5_closure(const std::vector<Relation>& S, int k,
                                         const ClosureConfig& cfg) {
  return eo_closure(S, k, cfg, true);
}
inline std::vector<Relation> eo4_closure(const std::vector<Relation>& S, int k,
                                         const ClosureConfig& cfg) {
  return eo_closure(S, k, cfg, false);
}

/* target equals the conjunction of all its supersets among the
 * same-shape dummy-padded variable rearrangements of members of E.
 * With E a quantifier closure this decides membership in the
 * conjunctive closure at target's own arity. */
bool in_conj_span(const Relation& target, const std::vector<Relation>& E);

/* Same test with the per-shape version sets cached across queries. */
class ConjSpan {
 public:
  explicit ConjSpan(std::vector<Relation> E) : E_(std::move(E)) {}
  bool contains(const Relation& target) const;
  const std::vector<Relation>& base() const { return E_; }

 private:
  std::vector<Relation> E_;
  mutable std::map<std::vector<int>, std::vector<Bits>> cache_;
};

// Conjunctive closure on top of the eo5 (resp. eo4) closure, i.e. the
// bounded qpp (resp. pp) closure.  Output arity <= cfg.conj_bound().
std::vector<Relation> qpp_closure(const std::vector<Relation>& S, int k,
                                  const ClosureConfig& cfg);
std::vector<Relation> pp_closure(const std::vector<Relation>& S, int k,
                                 const ClosureConfig& cfg);

/* Sandwich decision: In when target lies in the bounded closure, Out
 * when some surjective operation of arity <= pol_cap preserves S but
 * not target, Undecided otherwise. */
class MembershipOracle {
 public:
  MembershipOracle(std::vector<Relation> S, int k, ClosureConfig cfg);

  Verdict member(const Relation& target) const;
  bool pp_member(const Relation& target) const;  // In-side only, no forall
  const std::vector<Relation>& closure5() const;
  const std::vector<KOperation>& spol() const;

 private:
  std::vector<Relation> S_;
  int k_;
  ClosureConfig cfg_;
  mutable std::vector<Relation> closure5_;
  mutable bool closure5_ready_ = false;
  mutable std::vector<KOperation> spol_;
  mutable bool spol_ready_ = false;
};

Verdict member(const Relation& target, const std::vector<Relation>& S, int k,
               const ClosureConfig& cfg);

/* Closedness of a canonical family S per the two-step criterion: the
 * canonical relations inside the quantifier closure must be exactly S,
 * and no outside canonical relation of kinds C1..C6 may coincide with
 * the conjunction of its closure supersets. */
bool is_closed_canonical(const std::vector<CanonicalDescriptor>& S, int k,
                         const ClosureConfig& cfg);

}  // namespace clonelab
