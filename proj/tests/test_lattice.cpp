#include "doctest.h"

#include <algorithm>
#include <set>

#include "clonelab/lattice.hpp"

using namespace clonelab;

namespace {

CanonicalDescriptor c7(std::vector<int> counts) {
  CanonicalDescriptor d{CanonicalDescriptor::Type::C7};
  d.counts = std::move(counts);
  return d;
}

}  // namespace

TEST_CASE("fingerprints order by content and footprint") {
  Fingerprint lo = fingerprint({c7({1, 0})}, 1, 4);
  Fingerprint hi = fingerprint({c7({2, 0})}, 1, 4);
  CHECK(fingerprint_leq(lo, hi));
  CHECK(!fingerprint_leq(hi, lo));
  CHECK(fingerprint_leq(lo, lo));
  Fingerprint other = fingerprint({c7({0, 1})}, 1, 4);
  CHECK(!fingerprint_leq(lo, other));
  CHECK(!fingerprint_leq(other, lo));
  // Beyond the bound the footprint clamps and flags.
  Fingerprint big = fingerprint({c7({7, 0})}, 1, 4);
  CHECK(big.truncated);
  CHECK(fingerprint_leq(hi, big));
}

TEST_CASE("canonical content of small generator sets") {
  ClosureConfig cfg;
  cfg.arity_cap = 4;
  auto empty = canonical_content({}, 1, cfg);
  CHECK(empty.empty());
  auto from_c4 = canonical_content({CanonicalDescriptor{CanonicalDescriptor::Type::C4, 1}}, 1, cfg);
  CHECK(from_c4.size() == 1);
  CHECK(from_c4[0].type == CanonicalDescriptor::Type::C4);
  // c7(2,0) pulls in its smaller footprint.
  auto from_c7 = canonical_content({c7({2, 0})}, 1, cfg);
  CHECK(std::find(from_c7.begin(), from_c7.end(), c7({1, 0})) != from_c7.end());
  CHECK(std::find(from_c7.begin(), from_c7.end(), c7({2, 0})) != from_c7.end());
}

TEST_CASE("small one-sorted lattice has the expected frame") {
  ClosureConfig cfg;
  cfg.arity_cap = 4;
  Lattice l = build_fig1(2, cfg);
  REQUIRE(!l.nodes.empty());

  // Exactly one bottom and one top under the fingerprint order.
  int bottoms = 0, tops = 0, atoms = 0;
  for (const auto& a : l.nodes) {
    bool has_lower = false, has_upper = false;
    for (const auto& b : l.nodes) {
      if (a.id == b.id) continue;
      if (fingerprint_leq(b.fp, a.fp)) has_lower = true;
      if (fingerprint_leq(a.fp, b.fp)) has_upper = true;
    }
    if (!has_lower) ++bottoms;
    if (!has_upper) ++tops;
  }
  CHECK(bottoms == 1);
  CHECK(tops == 1);

  // The bottom's covers are the atoms; count them from the edges.
  int bottom_id = -1;
  for (const auto& a : l.nodes) {
    bool has_lower = false;
    for (const auto& b : l.nodes)
      if (a.id != b.id && fingerprint_leq(b.fp, a.fp)) has_lower = true;
    if (!has_lower) bottom_id = a.id;
  }
  CHECK(l.nodes[bottom_id].content.empty());
  for (const auto& e : l.edges)
    if (e.first == bottom_id) ++atoms;
  CHECK(atoms == 4);

  // Edges are strict covers.
  for (const auto& e : l.edges) {
    CHECK(fingerprint_leq(l.nodes[e.first].fp, l.nodes[e.second].fp));
    CHECK(l.nodes[e.first].fp != l.nodes[e.second].fp);
  }

  // Fingerprints are distinct across nodes.
  std::set<Fingerprint> seen;
  for (const auto& n : l.nodes) CHECK(seen.insert(n.fp).second);
}

TEST_CASE("constant refinement multiplies the node count") {
  ClosureConfig cfg;
  cfg.arity_cap = 4;
  Lattice l = build_fig1(1, cfg);
  PostLattice p = derive_post(l, cfg);
  CHECK(p.nodes.size() >= l.nodes.size());
  std::set<std::vector<Relation>> keys;
  for (const auto& n : p.nodes) CHECK(keys.insert(n.kr_content).second);
  for (const auto& e : p.edges) {
    const auto& lo = p.nodes[e.first].kr_content;
    const auto& hi = p.nodes[e.second].kr_content;
    CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
  }
}

TEST_CASE("slicing a clone of two-sorted operations") {
  // Generators: the double projection to coordinate 1 forces a
  // non-surjective slice wherever coordinate 2 is constant.
  KOperation both1{2, 1, {0b10, 0b10}};  // (x1, x1) pattern: coord2 copies coord1
  auto C = clo_generate({both1}, 2, 2);
  NuDecomposition d = nu_decompose(C, 2);
  REQUIRE(d.slots.size() == 4);
  for (const auto& s : d.slots)
    CHECK((s.empty || !s.ops.empty()));
  // Projections alone decompose to all slices empty.
  auto P = clo_generate({}, 2, 2);
  NuDecomposition dp = nu_decompose(P, 2);
  for (const auto& s : dp.slots) CHECK(s.empty);
  CHECK(dp.surjective == P);
}

TEST_CASE("graph emitters produce well-formed output") {
  ClosureConfig cfg;
  cfg.arity_cap = 4;
  Lattice l = build_fig1(1, cfg);
  std::string dot = emit_dot(l);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  std::string js = emit_json(l);
  CHECK(js.find("\"nodes\"") != std::string::npos);
  CHECK(js.find("\"edges\"") != std::string::npos);
  PostLattice p = derive_post(l, cfg);
  CHECK(emit_dot(p).find("digraph") != std::string::npos);
  CHECK(emit_json(p).find("\"nodes\"") != std::string::npos);
}
