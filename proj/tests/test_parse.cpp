#include "doctest.h"

#include "clonelab/parse.hpp"

using namespace clonelab;

TEST_CASE("rel literals") {
  Relation r = parse_relation("rel k=1 sorts=[1,1] { 00, 01, 11 }");
  CHECK(r == make_relation(1, {1, 1}, {{0, 0}, {0, 1}, {1, 1}}));
  Relation e = parse_relation("rel k=2 sorts=[] { }");
  CHECK(e == bottom(2));
}

TEST_CASE("disj literals") {
  Relation r = parse_relation("disj k=1 sorts=[1,1] : x1+x2=1");
  CHECK(r == make_relation(1, {1, 1}, {{0, 1}, {1, 0}}));
  Relation s = parse_relation("disj k=1 sorts=[1] : x1=0 | x1=1");
  CHECK(s == make_relation(1, {1}, {{0}, {1}}));
  // Constant terms fold into the right-hand side.
  Relation t = parse_relation("disj k=1 sorts=[1] : x1+1=0");
  CHECK(t == make_relation(1, {1}, {{1}}));
  Relation full0 = parse_relation("disj k=1 sorts=[] : 0=0");
  CHECK(full0 == top(1));
  Relation none = parse_relation("disj k=1 sorts=[1] : 0=1");
  CHECK(none == empty_relation(1, {1}));
}

TEST_CASE("whitespace is free outside tokens") {
  Relation a = parse_relation("rel k=1 sorts=[ 1 , 1 ] {00,11}");
  Relation b = parse_relation("rel  k=1  sorts=[1,1]  { 00 , 11 }");
  CHECK(a == b);
}

TEST_CASE("parse errors carry one-line messages") {
  auto fails = [](const std::string& s) {
    try {
      parse_relation(s);
      return false;
    } catch (const ParseError& e) {
      std::string msg = e.what();
      return !msg.empty() && msg.find('\n') == std::string::npos;
    }
  };
  CHECK(fails("rel k=1 sorts=[1] { 00 }"));       // width mismatch
  CHECK(fails("rel k=1 sorts=[2] { 0 }"));        // sort out of range
  CHECK(fails("rel k=1 sorts=[1] { 0 } junk"));   // trailing input
  CHECK(fails("disj k=1 sorts=[1] : x2=0"));      // variable out of range
  CHECK(fails("disj k=1 sorts=[1] :"));           // missing clause
  CHECK(fails("rel k=0 sorts=[] { }"));           // bad k
  CHECK(fails("nonsense"));
}

TEST_CASE("printing round-trips") {
  Relation r = make_relation(1, {1, 1}, {{0, 1}, {1, 0}, {1, 1}});
  CHECK(parse_relation(print_relation(r)) == r);
  CHECK(parse_relation(print_relation(bottom(1))) == bottom(1));
  CHECK(parse_relation(print_relation(top(2))) == top(2));
  Relation e = empty_relation(1, {1, 1});
  CHECK(parse_relation(print_relation(e)) == e);
}

TEST_CASE("printing forms") {
  DisjunctiveForm f = *to_disjunctive_form(
      make_relation(1, {1, 1}, {{0, 1}, {1, 0}}));
  CHECK(print_form(f).find("x1+x2=1") != std::string::npos);
  DisjunctiveForm none{1, {1}, {}};
  CHECK(print_form(none).find("0=1") != std::string::npos);
}

TEST_CASE("relation lists") {
  auto rs = parse_relation_list(
      "rel k=1 sorts=[1] { 0 }\n"
      "disj k=1 sorts=[1,1] : x1+x2=1\n");
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == make_relation(1, {1}, {{0}}));
  CHECK(rs[1] == make_relation(1, {1, 1}, {{0, 1}, {1, 0}}));
  CHECK(parse_relation_list("  \n ").empty());
}
