#include "doctest.h"

#include "clonelab/canonical.hpp"

using namespace clonelab;
using T = CanonicalDescriptor::Type;

TEST_CASE("materializations have the defining tuples") {
  CanonicalDescriptor c1{T::C1, 1};
  Relation r1 = materialize(c1, 1);
  CHECK(r1.tuples.count() == 3);
  CHECK(!eval(r1, {1, 0}));

  CanonicalDescriptor c4{T::C4, 1};
  Relation r4 = materialize(c4, 1);
  CHECK(eval(r4, {0, 1}));
  CHECK(eval(r4, {1, 0}));
  CHECK(!eval(r4, {0, 0}));

  CanonicalDescriptor c7{T::C7};
  c7.counts = {2, 0};  // x1=0 or x2=0
  Relation r7 = materialize(c7, 1);
  CHECK(r7.tuples.count() == 3);
  CHECK(!eval(r7, {1, 1}));

  CanonicalDescriptor c6{T::C6};
  c6.sorts = {1, 2};
  c6.b = 1;
  Relation r6 = materialize(c6, 2);
  CHECK(eval(r6, {0, 1}));
  CHECK(eval(r6, {1, 0}));
  CHECK(!eval(r6, {1, 1}));
}

TEST_CASE("enumeration is duplicate-free up to similarity") {
  for (int k = 1; k <= 2; ++k) {
    auto all = enumerate_CR(k, 3);
    for (std::size_t a = 0; a < all.size(); ++a)
      for (std::size_t b = a + 1; b < all.size(); ++b) {
        CAPTURE(all[a].to_string());
        CAPTURE(all[b].to_string());
        CHECK(!is_similar(materialize(all[a], k), materialize(all[b], k))
                   .has_value());
      }
  }
}

TEST_CASE("classification inverts materialization") {
  for (int k = 1; k <= 2; ++k)
    for (const auto& d : enumerate_CR(k, 4)) {
      Relation r = materialize(d, k);
      auto back = classify(r);
      REQUIRE(back.has_value());
      CHECK(*back == d);
    }
}

TEST_CASE("non-canonical relations classify to nothing") {
  CHECK(!classify(equality(1, 1)).has_value());
  CHECK(!classify(full_relation(1, {1})).has_value());
  // Complement of the point (0,1,1): mixed constants at arity 3 fit
  // neither the near-full shapes (uniform constants per sort) nor the
  // binary mixed shape.
  Relation m = full_relation(1, {1, 1, 1});
  m.tuples.set(tuple_index({0, 1, 1}), false);
  CHECK(!classify(m).has_value());
  // A relation with a dummy variable is never canonical.
  CHECK(!classify(make_relation(1, {1, 1}, {{0, 0}, {0, 1}})).has_value());
}

TEST_CASE("trivial closure membership") {
  CHECK(is_trivial_qpp(top(1)));
  CHECK(is_trivial_qpp(bottom(1)));
  CHECK(is_trivial_qpp(equality(1, 1)));
  CHECK(is_trivial_qpp(empty_relation(1, {1, 1})));
  CHECK(is_trivial_qpp(full_relation(2, {1, 2})));
  // x=y and u=v
  Relation two = make_relation(1, {1, 1, 1, 1},
                               {{0, 0, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0},
                                {1, 1, 1, 1}});
  CHECK(is_trivial_qpp(two));
  CHECK(!is_trivial_qpp(make_relation(1, {1}, {{0}})));
  CHECK(!is_trivial_qpp(materialize(CanonicalDescriptor{T::C4, 1}, 1)));
  // Different sorts cannot be identified even with equal columns.
  Relation cross = make_relation(2, {1, 2}, {{0, 0}, {1, 1}});
  CHECK(!is_trivial_qpp(cross));
}

TEST_CASE("single-generator closure honors the closed form") {
  // c7(2,0): exactly the dominated per-sort disjunctions.
  CanonicalDescriptor c7{T::C7};
  c7.counts = {2, 0};
  SingleGeneratorClosure sgc(c7, 1);
  CHECK(sgc.contains(materialize(c7, 1)));
  CHECK(sgc.contains(make_relation(1, {1}, {{0}})));         // x=0
  CHECK(!sgc.contains(make_relation(1, {1}, {{1}})));        // x=1
  CHECK(sgc.contains(equality(1, 1)));
  CHECK(sgc.contains(top(1)));
  CanonicalDescriptor c73{T::C7};
  c73.counts = {3, 0};
  CHECK(!sgc.contains(materialize(c73, 1)));

  // c4 generates only itself (plus the trivial classes).
  SingleGeneratorClosure s4(CanonicalDescriptor{T::C4, 1}, 1);
  CHECK(s4.contains(materialize(CanonicalDescriptor{T::C4, 1}, 1)));
  CHECK(!s4.contains(make_relation(1, {1}, {{0}})));
  CHECK(s4.contains(bottom(1)));

  // c1 also yields both constants: universally quantifying either
  // variable of (x=0 or y=1) leaves x=0 resp. y=1.
  SingleGeneratorClosure s1(CanonicalDescriptor{T::C1, 1}, 1);
  CHECK(s1.contains(materialize(CanonicalDescriptor{T::C1, 1}, 1)));
  CHECK(!s1.contains(materialize(CanonicalDescriptor{T::C4, 1}, 1)));
  CHECK(s1.contains(make_relation(1, {1}, {{0}})));
  CHECK(s1.contains(make_relation(1, {1}, {{1}})));
  CHECK(!s1.contains(make_relation(1, {1, 1}, {{0, 0}, {0, 1}, {1, 0}})));
}

TEST_CASE("mu footprints order c7 closures") {
  CanonicalDescriptor a{T::C7}, b{T::C7};
  a.counts = {2, 0};
  b.counts = {3, 0};
  CHECK(mu(a, 1) == std::vector<int>{2, 0});
  SingleGeneratorClosure bigger(b, 1);
  CHECK(bigger.contains(materialize(a, 1)));
  SingleGeneratorClosure smaller(a, 1);
  CHECK(!smaller.contains(materialize(b, 1)));
}

TEST_CASE("downsets as maximal antichains") {
  Downset ds{2, {}};
  ds = downset_insert(ds, {1, 0});
  ds = downset_insert(ds, {0, 2});
  CHECK(ds.maximal.size() == 2);
  CHECK(downset_contains(ds, {0, 1}));
  CHECK(!downset_contains(ds, {1, 1}));
  ds = downset_insert(ds, {2, 3});
  CHECK(ds.maximal == std::vector<std::vector<int>>{{2, 3}});
  Downset small{2, {{1, 0}}};
  CHECK(downset_leq(small, ds));
  CHECK(!downset_leq(ds, small));
}
