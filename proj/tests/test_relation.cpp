#include <stdexcept>

#include "doctest.h"

#include "clonelab/relation.hpp"

using namespace clonelab;

TEST_CASE("tuple indexing puts variable 1 at the most significant bit") {
  CHECK(tuple_index({1, 0}) == 2);
  CHECK(tuple_index({0, 1}) == 1);
  CHECK(tuple_index({1, 1, 0}) == 6);
  CHECK(tuple_bit(6, 3, 1) == 1);
  CHECK(tuple_bit(6, 3, 3) == 0);
}

TEST_CASE("base predicates") {
  Relation bot = bottom(2);
  CHECK(bot.arity() == 0);
  CHECK(bot.tuples.none());
  Relation t = top(2);
  CHECK(t.tuples.all());
  CHECK(eval(t, {}));

  Relation eq = equality(2, 2);
  CHECK(eq.sorts == std::vector<int>{2, 2});
  CHECK(eval(eq, {0, 0}));
  CHECK(eval(eq, {1, 1}));
  CHECK(!eval(eq, {0, 1}));
  CHECK(!eval(eq, {1, 0}));
}

TEST_CASE("make_relation validates input") {
  CHECK_THROWS_AS(make_relation(1, {1, 2}, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_relation(1, {1}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_relation(0, {}, {}), std::invalid_argument);
}

TEST_CASE("dummy detection and removal") {
  // x=0 with a dummy second variable
  Relation r = make_relation(1, {1, 1}, {{0, 0}, {0, 1}});
  CHECK(!is_dummy(r, 1));
  CHECK(is_dummy(r, 2));
  auto [d, removed] = drop_dummies(r);
  CHECK(removed == std::vector<int>{2});
  CHECK(d.arity() == 1);
  CHECK(eval(d, {0}));
  CHECK(!eval(d, {1}));

  // Everything is dummy in the full relation.
  auto [df, rf] = drop_dummies(full_relation(1, {1, 1, 1}));
  CHECK(df.arity() == 0);
  CHECK(rf == std::vector<int>{1, 2, 3});

  // The empty relation of positive arity is all-dummy too.
  auto [de, re] = drop_dummies(empty_relation(1, {1, 1}));
  CHECK(de.arity() == 0);
  CHECK(de.tuples.none());
}

TEST_CASE("similarity finds the right permutation") {
  // r1 = (x=0), padded: r1(x,y) with y free vs r2(y,x)
  Relation r1 = make_relation(1, {1, 1}, {{0, 0}, {0, 1}});
  Relation r2 = make_relation(1, {1, 1}, {{0, 0}, {1, 0}});
  auto pi = is_similar(r1, r2);
  REQUIRE(pi.has_value());
  CHECK(permute_vars(r1, *pi) == r2);

  CHECK(!is_similar(r1, make_relation(1, {1, 1}, {{0, 0}})).has_value());

  // Sorts must match under the permutation.
  Relation a = make_relation(2, {1, 2}, {{0, 1}});
  Relation b = make_relation(2, {2, 1}, {{1, 0}});
  auto pab = is_similar(a, b);
  REQUIRE(pab.has_value());
  CHECK(permute_vars(a, *pab) == b);
  CHECK(!is_similar(a, make_relation(2, {1, 1}, {{0, 1}})).has_value());
}

TEST_CASE("permute_vars matches the defining identity") {
  Relation r = make_relation(1, {1, 1, 1}, {{0, 1, 1}, {1, 0, 0}});
  std::vector<int> pi = {2, 3, 1};  // r'(x1,x2,x3) = r(x2,x3,x1)
  Relation p = permute_vars(r, pi);
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) {
        std::vector<int> x = {a, b, c};
        std::vector<int> lifted = {x[pi[0] - 1], x[pi[1] - 1], x[pi[2] - 1]};
        CHECK(eval(p, x) == eval(r, lifted));
      }
}
