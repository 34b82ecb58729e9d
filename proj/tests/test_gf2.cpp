#include "doctest.h"

#include "clonelab/gf2.hpp"

using namespace clonelab;

namespace {

// Independent oracle: r is a union of solution sets of the linear
// equations contained in it.
bool key_oracle(const Relation& r) {
  int n = r.arity();
  Bits acc(r.tuples.size());
  for (std::uint64_t coeffs = 0; coeffs < (std::uint64_t{1} << n); ++coeffs)
    for (int rhs = 0; rhs <= 1; ++rhs) {
      LinearEquation e{coeffs, rhs};
      Bits sol(r.tuples.size());
      for (std::size_t i = 0; i < sol.size(); ++i)
        if (eq_satisfied(e, i, n)) sol.set(i);
      if (sol.subset_of(r.tuples)) acc = acc | sol;
    }
  return acc == r.tuples;
}

Relation nth_relation(int n, std::uint64_t code) {
  Relation r = empty_relation(1, std::vector<int>(n, 1));
  for (std::size_t i = 0; i < r.tuples.size(); ++i)
    if (code & (std::uint64_t{1} << i)) r.tuples.set(i);
  return r;
}

}  // namespace

TEST_CASE("rref normalizes and detects inconsistency") {
  // x1+x2=1, x2+x3=0, x1+x3=1 is consistent with rank 2.
  AffineSystem s = rref(3, {{0b011, 1}, {0b110, 0}, {0b101, 1}});
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0] == LinearEquation{0b101, 1});
  CHECK(s.rows[1] == LinearEquation{0b110, 0});

  AffineSystem bad = rref(2, {{0b11, 0}, {0b11, 1}});
  CHECK(bad.inconsistent());

  CHECK(rref(2, {{0, 0}}).rows.empty());
}

TEST_CASE("canonical disjunctive forms match the worked examples") {
  Relation r = make_relation(1, {1, 1}, {{0, 0}, {0, 1}, {1, 1}});
  auto f = to_disjunctive_form(r);
  REQUIRE(f.has_value());
  REQUIRE(f->clauses.size() == 2);
  CHECK(f->clauses[0] == LinearEquation{0b01, 0});  // x1 = 0
  CHECK(f->clauses[1] == LinearEquation{0b10, 1});  // x2 = 1

  Relation x = make_relation(1, {1, 1}, {{0, 1}, {1, 0}});
  auto g = to_disjunctive_form(x);
  REQUIRE(g.has_value());
  REQUIRE(g->clauses.size() == 1);
  CHECK(g->clauses[0] == LinearEquation{0b11, 1});  // x1 + x2 = 1
}

TEST_CASE("degenerate forms") {
  auto full = to_disjunctive_form(full_relation(1, {1, 1}));
  REQUIRE(full.has_value());
  REQUIRE(full->clauses.size() == 1);
  CHECK(full->clauses[0] == LinearEquation{0, 0});

  auto empty = to_disjunctive_form(empty_relation(1, {1, 1}));
  REQUIRE(empty.has_value());
  CHECK(empty->clauses.empty());

  CHECK(is_key(top(1)));
  CHECK(is_key(bottom(1)));
  auto tf = to_disjunctive_form(top(1));
  REQUIRE(tf.has_value());
  CHECK(tf->clauses.size() == 1);
}

TEST_CASE("is_key agrees with the union-of-equations oracle, arity <= 3") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1 << n)); ++code) {
      Relation r = nth_relation(n, code);
      CHECK(is_key(r) == key_oracle(r));
    }
}

TEST_CASE("to_disjunctive_form round-trips through materialize") {
  for (int n = 0; n <= 3; ++n)
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1 << n)); ++code) {
      Relation r = nth_relation(n, code);
      auto f = to_disjunctive_form(r);
      REQUIRE(f.has_value() == is_key(r));
      if (f) CHECK(materialize(*f) == r);
    }
}

TEST_CASE("canonical_form agrees with to_disjunctive_form on key relations") {
  // Feeding the raw (non-reduced) clauses of any disjunction back
  // through canonical_form must give the canonical result.
  std::vector<LinearEquation> clauses = {{0b011, 0}, {0b110, 0}};
  DisjunctiveForm f = canonical_form(1, {1, 1, 1}, clauses);
  Relation r = materialize(DisjunctiveForm{1, {1, 1, 1}, clauses});
  CHECK(f == *to_disjunctive_form(r));
}
