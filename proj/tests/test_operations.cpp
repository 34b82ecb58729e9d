#include "doctest.h"

#include <algorithm>

#include "clonelab/operations.hpp"

using namespace clonelab;

TEST_CASE("projections and constants") {
  KOperation p = projection(1, 2, 1);
  // idx = (x1 << 1) | x2, value is x1.
  CHECK(p.value(1, 0b00) == 0);
  CHECK(p.value(1, 0b01) == 0);
  CHECK(p.value(1, 0b10) == 1);
  CHECK(p.value(1, 0b11) == 1);
  KOperation q = projection(2, 2, 2);
  CHECK(q.value(2, 0b01) == 1);
  CHECK(q.value(1, 0b10) == 0);
  CHECK(is_surjective(p));
  CHECK(!is_surjective(constant_op(1, 0)));
  CHECK(!is_surjective(constant_op(1, 1)));
}

TEST_CASE("composition") {
  // xor(x1, x2) composed with (x2, x1) is xor again.
  KOperation x1 = projection(1, 2, 1), x2 = projection(1, 2, 2);
  KOperation xr{1, 2, {0b0110}};
  KOperation swapped = compose_ops(xr, {x2, x1});
  CHECK(swapped == xr);
  // and(x1, x1) is the arity-1 identity... as a binary table.
  KOperation andop{1, 2, {0b1000}};
  KOperation diag = compose_ops(andop, {x1, x1});
  CHECK(diag.value(1, 0b10) == 1);
  CHECK(diag.value(1, 0b11) == 1);
  CHECK(diag.value(1, 0b00) == 0);
  CHECK(diag.value(1, 0b01) == 0);
}

TEST_CASE("clone generation from xor reaches all parities") {
  KOperation xr{1, 2, {0b0110}};
  auto C = clo_generate({xr}, 1, 3);
  // x1 + x2 + x3 has table 10010110 reading idx 7..0.
  KOperation x3{1, 3, {0b10010110}};
  CHECK(std::find(C.begin(), C.end(), x3) != C.end());
  // Negation is not generated by xor and projections alone.
  KOperation neg{1, 1, {0b01}};
  CHECK(std::find(C.begin(), C.end(), neg) == C.end());
}

TEST_CASE("preservation") {
  Relation x0 = make_relation(1, {1}, {{0}});
  Relation ne = make_relation(1, {1, 1}, {{0, 1}, {1, 0}});
  KOperation andop{1, 2, {0b1000}};
  KOperation xr{1, 2, {0b0110}};
  KOperation neg{1, 1, {0b01}};
  CHECK(preserves(andop, x0));
  CHECK(!preserves(neg, x0));
  CHECK(preserves(neg, ne));
  CHECK(!preserves(andop, ne));
  // x + y + z preserves x+y=1.
  KOperation x3{1, 3, {0b10010110}};
  CHECK(preserves(x3, ne));
  // Arity-0 relations are always preserved.
  CHECK(preserves(neg, bottom(1)));
  CHECK(preserves(neg, top(1)));
}

TEST_CASE("bounded polymorphisms of x=0") {
  Relation x0 = make_relation(1, {1}, {{0}});
  auto P1 = pol_bounded({x0}, 1, 1, false);
  // Unary: identity and the constant 0.
  CHECK(P1.size() == 2);
  auto S1 = pol_bounded({x0}, 1, 1, true);
  CHECK(S1.size() == 1);
  CHECK(S1[0] == projection(1, 1, 1));
  // Binary pols of x=0: tables with the 00-entry equal to 0, 8 of them.
  auto P2 = pol_bounded({x0}, 1, 2, false);
  CHECK(P2.size() == 2 + 8);
}

TEST_CASE("bounded invariants of negation") {
  KOperation neg{1, 1, {0b01}};
  auto I = inv_bounded({neg}, 1, 1);
  // Arity <= 1, closed under flipping: bottom, top, empty and full unary.
  CHECK(I.size() == 4);
  for (const auto& r : I) CHECK(preserves(neg, r));
  CHECK(std::find(I.begin(), I.end(), make_relation(1, {1}, {{0}})) == I.end());
}

TEST_CASE("indicator of the unary operations on a point") {
  // All four unary single-sorted operations, n = 1: the indicator has
  // variables (f(0), f(1)) and one tuple per operation, i.e. is full.
  std::vector<KOperation> F;
  for (int t = 0; t < 4; ++t) F.push_back(KOperation{1, 1, {(std::uint64_t)t}});
  Relation ind = indicator(F, 1, 1);
  CHECK(ind.sorts == std::vector<int>{1, 1});
  CHECK(ind.tuples.count() == 4);
  // Only the monotone unaries: f(0) <= f(1).
  Relation ind2 = indicator({F[0], F[2], F[3]}, 1, 1);
  CHECK(eval(ind2, {0, 1}));
  CHECK(!eval(ind2, {1, 0}));
}

TEST_CASE("least invariant superset") {
  KOperation neg{1, 1, {0b01}};
  Relation x0 = make_relation(1, {1}, {{0}});
  Relation grown = least_invariant_superset(x0, {neg});
  CHECK(grown.tuples.count() == 2);
  KOperation andop{1, 2, {0b1000}};
  CHECK(least_invariant_superset(x0, {andop}) == x0);
}

TEST_CASE("adjoining constants filters by preservation") {
  Relation x0 = make_relation(1, {1}, {{0}});
  Relation x1 = make_relation(1, {1}, {{1}});
  Relation ne = make_relation(1, {1, 1}, {{0, 1}, {1, 0}});
  std::vector<Relation> S{x0, x1, ne};
  auto zero = adjoin_constants(S, true, false);
  CHECK(zero == std::vector<Relation>{x0});
  auto one = adjoin_constants(S, false, true);
  CHECK(one == std::vector<Relation>{x1});
  auto both = adjoin_constants(S, true, true);
  CHECK(both.empty());
  CHECK(adjoin_constants(S, false, false) == S);
}
