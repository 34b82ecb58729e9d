#include "clonelab/parse.hpp"

#include <cctype>
#include <sstream>

namespace clonelab {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool done() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c))
      throw ParseError(std::string("expected '") + c + "' at offset " +
                       std::to_string(pos));
  }

  bool try_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }

  void expect_word(const std::string& w) {
    if (!try_word(w))
      throw ParseError("expected '" + w + "' at offset " + std::to_string(pos));
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start)
      throw ParseError("expected integer at offset " + std::to_string(pos));
    return std::stoi(s.substr(start, pos - start));
  }
};

std::pair<int, std::vector<int>> parse_header(Cursor& c) {
  c.expect_word("k");
  c.expect('=');
  int k = c.parse_int();
  c.expect_word("sorts");
  c.expect('=');
  c.expect('[');
  std::vector<int> sorts;
  if (!c.try_consume(']')) {
    sorts.push_back(c.parse_int());
    while (c.try_consume(',')) sorts.push_back(c.parse_int());
    c.expect(']');
  }
  return {k, std::move(sorts)};
}

Relation parse_rel_body(Cursor& c) {
  auto [k, sorts] = parse_header(c);
  c.expect('{');
  std::vector<std::vector<int>> tuples;
  if (c.peek() != '}') {
    do {
      c.skip_ws();
      std::vector<int> t;
      while (c.pos < c.s.size() && (c.s[c.pos] == '0' || c.s[c.pos] == '1')) {
        t.push_back(c.s[c.pos] - '0');
        ++c.pos;
      }
      if (t.size() != sorts.size())
        throw ParseError("bitstring width " + std::to_string(t.size()) +
                         " != arity " + std::to_string(sorts.size()));
      tuples.push_back(std::move(t));
    } while (c.try_consume(','));
  }
  c.expect('}');
  try {
    return make_relation(k, std::move(sorts), tuples);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Relation parse_disj_body(Cursor& c) {
  auto [k, sorts] = parse_header(c);
  int n = static_cast<int>(sorts.size());
  c.expect(':');
  std::vector<LinearEquation> clauses;
  do {
    LinearEquation eq;
    int consts = 0;
    while (true) {
      if (c.try_word("x")) {
        int v = c.parse_int();
        if (v < 1 || v > n)
          throw ParseError("variable x" + std::to_string(v) +
                           " out of range for arity " + std::to_string(n));
        eq.coeffs ^= std::uint64_t{1} << (v - 1);
      } else if (c.try_consume('0')) {
        // constant 0 contributes nothing
      } else if (c.try_consume('1')) {
        consts ^= 1;
      } else {
        throw ParseError("expected term at offset " + std::to_string(c.pos));
      }
      if (!c.try_consume('+')) break;
    }
    c.expect('=');
    int rhs;
    if (c.try_consume('0'))
      rhs = 0;
    else if (c.try_consume('1'))
      rhs = 1;
    else
      throw ParseError("expected bit after '=' at offset " +
                       std::to_string(c.pos));
    eq.rhs = rhs ^ consts;
    clauses.push_back(eq);
  } while (c.try_consume('|'));
  DisjunctiveForm f{k, std::move(sorts), std::move(clauses)};
  try {
    return materialize(f);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Relation parse_one(Cursor& c) {
  if (c.try_word("rel")) return parse_rel_body(c);
  if (c.try_word("disj")) return parse_disj_body(c);
  throw ParseError("expected 'rel' or 'disj' at offset " +
                   std::to_string(c.pos));
}

}  // namespace

Relation parse_relation(const std::string& text) {
  Cursor c{text};
  Relation r = parse_one(c);
  if (!c.done())
    throw ParseError("trailing input at offset " + std::to_string(c.pos));
  return r;
}

std::vector<Relation> parse_relation_list(const std::string& text) {
  Cursor c{text};
  std::vector<Relation> out;
  while (!c.done()) out.push_back(parse_one(c));
  return out;
}

static void print_header(std::ostringstream& os, int k,
                         const std::vector<int>& sorts) {
  os << "k=" << k << " sorts=[";
  for (std::size_t i = 0; i < sorts.size(); ++i)
    os << (i ? "," : "") << sorts[i];
  os << "]";
}

std::string print_relation(const Relation& r) {
  if (r.arity() == 0 && !r.tuples.none()) {
    // The empty tuple has no bitstring; fall back to a trivial clause.
    std::ostringstream os;
    os << "disj ";
    print_header(os, r.k, r.sorts);
    os << " : 0=0";
    return os.str();
  }
  std::ostringstream os;
  os << "rel ";
  print_header(os, r.k, r.sorts);
  os << " {";
  bool first = true;
  for (std::size_t idx = 0; idx < r.tuples.size(); ++idx) {
    if (!r.tuples.test(idx)) continue;
    os << (first ? "" : ",");
    for (int v = 1; v <= r.arity(); ++v) os << tuple_bit(idx, r.arity(), v);
    first = false;
  }
  os << "}";
  return os.str();
}

std::string print_form(const DisjunctiveForm& f) {
  std::ostringstream os;
  os << "disj ";
  print_header(os, f.k, f.sorts);
  os << " : ";
  if (f.clauses.empty()) {
    os << "0=1";  // no clause is satisfiable: the empty relation
    return os.str();
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    if (i) os << " | ";
    const auto& c = f.clauses[i];
    if (c.coeffs == 0) {
      os << "0=" << c.rhs;
      continue;
    }
    bool first = true;
    std::uint64_t m = c.coeffs;
    while (m) {
      int v = std::countr_zero(m) + 1;
      m &= m - 1;
      os << (first ? "" : "+") << "x" << v;
      first = false;
    }
    os << "=" << c.rhs;
  }
  return os.str();
}

}  // namespace clonelab
