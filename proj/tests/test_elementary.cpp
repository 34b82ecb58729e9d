#include <stdexcept>

#include "doctest.h"

#include "clonelab/elementary.hpp"

using namespace clonelab;

namespace {

Relation nth_relation(int n, std::uint64_t code) {
  Relation r = empty_relation(1, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < r.tuples.size(); ++i)
    if (code & (std::uint64_t{1} << i)) r.tuples.set(i);
  return r;
}

}  // namespace

TEST_CASE("dummy append and remove") {
  Relation x0 = make_relation(1, {1}, {{0}});
  Relation padded = eo_dummy_append(x0, 1);
  CHECK(padded.arity() == 2);
  CHECK(is_dummy(padded, 2));
  CHECK(eval(padded, {0, 0}));
  CHECK(eval(padded, {0, 1}));
  CHECK(!eval(padded, {1, 0}));
  CHECK(eo_dummy_remove(padded, 2) == x0);
  CHECK_THROWS_AS(eo_dummy_remove(padded, 1), std::invalid_argument);
}

TEST_CASE("identification merges the first two variables") {
  // x1=0 or x2=0; identifying gives x=0.
  Relation r = make_relation(1, {1, 1}, {{0, 0}, {0, 1}, {1, 0}});
  Relation i = eo_identify(r);
  CHECK(i.arity() == 1);
  CHECK(eval(i, {0}));
  CHECK(!eval(i, {1}));
  CHECK_THROWS_AS(eo_identify(make_relation(2, {1, 2}, {{0, 0}})),
                  std::invalid_argument);
}

TEST_CASE("composition joins on an existential first variable") {
  // a(z,x) = (z=0 or x=1), b(z,y) = (z=1 or y=1):
  // exists z both hold iff x=1 or y=1.
  Relation a = make_relation(1, {1, 1}, {{0, 0}, {0, 1}, {1, 1}});
  Relation b = make_relation(1, {1, 1}, {{1, 0}, {1, 1}, {0, 1}});
  Relation c = eo_compose(a, b);
  CHECK(c.arity() == 2);
  CHECK(!eval(c, {0, 0}));
  CHECK(eval(c, {0, 1}));
  CHECK(eval(c, {1, 0}));
  CHECK(eval(c, {1, 1}));

  // Composing on a dummy lead variable is rejected.
  CHECK_THROWS_AS(eo_compose(full_relation(1, {1, 1}), a),
                  std::invalid_argument);
}

TEST_CASE("forall keeps tuples valid under both values") {
  // forall y (y=x) is empty; forall y (y=y) keeps x free.
  CHECK(eo_forall(equality(1, 1)).tuples.none());
  Relation r = full_relation(1, {1, 1});
  CHECK(eo_forall(r) == full_relation(1, {1}));
}

TEST_CASE("conjunction requires identical shapes") {
  Relation e = equality(1, 1);
  Relation ne = make_relation(1, {1, 1}, {{0, 1}, {1, 0}});
  CHECK(eo_conjoin(e, ne).tuples.none());
  CHECK_THROWS_AS(eo_conjoin(e, make_relation(1, {1}, {{0}})),
                  std::invalid_argument);
}

TEST_CASE("symbolic compose/forall agree with semantics on key relations") {
  // All pairs of one-sorted key relations of arity <= 2 (with
  // non-dummy lead variables for compose).
  std::vector<Relation> keys;
  for (int n = 1; n <= 2; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1 << n)); ++code) {
      Relation r = nth_relation(n, code);
      if (is_key(r)) keys.push_back(r);
    }
  for (const auto& a : keys) {
    auto fa = *to_disjunctive_form(a);
    if (!is_dummy(a, 1)) {
      for (const auto& b : keys) {
        if (is_dummy(b, 1)) continue;
        auto fb = *to_disjunctive_form(b);
        Relation sem = eo_compose(a, b);
        CHECK(materialize(compose_forms(fa, fb)) == sem);
        CHECK(compose_forms(fa, fb) == *to_disjunctive_form(sem));
      }
      Relation sem = eo_forall(a);
      CHECK(materialize(forall_form(fa)) == sem);
      CHECK(forall_form(fa) == *to_disjunctive_form(sem));
    } else {
      CHECK_THROWS_AS(compose_forms(fa, fa), std::invalid_argument);
    }
  }
}

TEST_CASE("symbolic join of contradictory lead clauses") {
  // (z=0 or x=1) composed with (z=1 or y=1): the joined equation is
  // 0=1 and disappears, leaving x=1 or y=1.
  Relation a = make_relation(1, {1, 1}, {{0, 0}, {0, 1}, {1, 1}});
  Relation b = make_relation(1, {1, 1}, {{1, 0}, {1, 1}, {0, 1}});
  DisjunctiveForm c = compose_forms(*to_disjunctive_form(a),
                                    *to_disjunctive_form(b));
  REQUIRE(c.clauses.size() == 2);
  CHECK(c.clauses[0] == LinearEquation{0b01, 1});
  CHECK(c.clauses[1] == LinearEquation{0b10, 1});
}
