#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clonelab/gf2.hpp"
#include "clonelab/relation.hpp"

namespace clonelab {

/* Relation literals:
 *   rel  k=<int> sorts=[<int>,...] { <bitstring>(,<bitstring>)* }
 *   disj k=<int> sorts=[<int>,...] : <clause>(|<clause>)*
 * with clause := term(+term)*=<bit> and term := x<int> | <bit>.  In a
 * bitstring, character i binds variable i.  Whitespace is insignificant
 * outside tokens.  Parse errors throw ParseError with a single-line
 * message. */
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Relation parse_relation(const std::string& text);

// A file may hold any number of whitespace-separated relation literals.
std::vector<Relation> parse_relation_list(const std::string& text);

std::string print_relation(const Relation& r);
std::string print_form(const DisjunctiveForm& f);

}  // namespace clonelab
