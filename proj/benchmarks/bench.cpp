#include <benchmark/benchmark.h>

#include "clonelab/closure.hpp"
#include "clonelab/gf2.hpp"

using namespace clonelab;

namespace {

Relation rel_from_code(int arity, std::uint64_t code) {
  Relation r = empty_relation(1, std::vector<int>(arity, 1));
  for (std::size_t i = 0; i < r.tuples.size(); ++i)
    if ((code >> i) & 1) r.tuples.set(i);
  return r;
}

void BM_is_key(benchmark::State& state) {
  int arity = static_cast<int>(state.range(0));
  std::vector<Relation> rels;
  for (std::uint64_t code = 0; code < 256; ++code)
    rels.push_back(rel_from_code(arity, code * 0x9e3779b97f4a7c15ull &
                                            ((1ull << (1 << arity)) - 1)));
  for (auto _ : state)
    for (const auto& r : rels) benchmark::DoNotOptimize(is_key(r));
}
BENCHMARK(BM_is_key)->Arg(3)->Arg(4);

void BM_canonical_form(benchmark::State& state) {
  Relation r = rel_from_code(4, 0x7ffe);  // key: complement of two points
  for (auto _ : state) benchmark::DoNotOptimize(to_disjunctive_form(r));
}
BENCHMARK(BM_canonical_form);

void BM_canon_rep(benchmark::State& state) {
  Relation r = rel_from_code(5, 0xdeadbeefcafeull & 0xffffffffull);
  for (auto _ : state) benchmark::DoNotOptimize(canon_rep(r));
}
BENCHMARK(BM_canon_rep);

void BM_closure_single(benchmark::State& state) {
  Relation ne = make_relation(1, {1, 1}, {{0, 1}, {1, 0}});
  ClosureConfig cfg;
  cfg.arity_cap = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(eo5_closure({ne}, 1, cfg));
}
BENCHMARK(BM_closure_single)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
