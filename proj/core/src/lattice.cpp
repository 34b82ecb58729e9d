#include "clonelab/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace clonelab {

bool fingerprint_leq(const Fingerprint& a, const Fingerprint& b) {
  if (!std::includes(b.cr16.begin(), b.cr16.end(), a.cr16.begin(),
                     a.cr16.end()))
    return false;
  return downset_leq(a.downset, b.downset);
}

Fingerprint fingerprint(const std::vector<CanonicalDescriptor>& S, int k,
                        int trunc) {
  Fingerprint fp;
  fp.downset.dim = 2 * k;
  for (const auto& d : S) {
    if (d.type != CanonicalDescriptor::Type::C7) {
      fp.cr16.push_back(d);
      continue;
    }
    std::vector<int> p = mu(d, k);
    for (auto& c : p)
      if (c > trunc) {
        c = trunc;
        fp.truncated = true;
      }
    fp.downset = downset_insert(fp.downset, p);
  }
  std::sort(fp.cr16.begin(), fp.cr16.end());
  return fp;
}

std::vector<CanonicalDescriptor> canonical_content(
    const std::vector<CanonicalDescriptor>& gens, int k,
    const ClosureConfig& cfg) {
  std::vector<Relation> mats;
  mats.reserve(gens.size());
  for (const auto& d : gens) mats.push_back(materialize(d, k));
  std::vector<Relation> E = eo5_closure(mats, k, cfg);
  std::set<CanonicalDescriptor> content;
  for (const auto& e : E)
    if (auto d = classify(e)) content.insert(*d);
  for (const auto& d : enumerate_CR(k, std::min(cfg.arity_cap, 4))) {
    if (d.type == CanonicalDescriptor::Type::C7) continue;
    if (content.contains(d)) continue;
    if (in_conj_span(materialize(d, k), E)) content.insert(d);
  }
  return {content.begin(), content.end()};
}

namespace {

std::string node_label(const Fingerprint& fp) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& d : fp.cr16) {
    os << (first ? "" : ",") << d.to_string();
    first = false;
  }
  for (const auto& p : fp.downset.maximal) {
    os << (first ? "" : ",") << "c7(";
    for (std::size_t t = 0; t < p.size(); ++t) os << (t ? "," : "") << p[t];
    os << ")";
    first = false;
  }
  os << "}";
  if (fp.truncated) os << "*";
  return os.str();
}

std::vector<std::pair<int, int>> hasse_edges(
    const std::vector<std::vector<bool>>& lt) {
  std::size_t n = lt.size();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!lt[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        cover = !(lt[a][c] && lt[c][b]);
      if (cover) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return edges;
}

}  // namespace

Lattice build_fig1(int trunc, const ClosureConfig& cfg) {
  const int k = 1;
  std::vector<CanonicalDescriptor> pool;
  for (const auto& d : enumerate_CR(k, std::min(cfg.arity_cap, 4)))
    if (d.type != CanonicalDescriptor::Type::C7) pool.push_back(d);
  for (int m = 1; m <= trunc; ++m) {
    CanonicalDescriptor d{CanonicalDescriptor::Type::C7};
    d.counts = {m, 0};
    pool.push_back(d);
    d.counts = {0, m};
    pool.push_back(d);
  }

  std::map<std::vector<CanonicalDescriptor>, std::vector<CanonicalDescriptor>>
      closure_memo;
  auto closed_content = [&](const std::vector<CanonicalDescriptor>& gens) {
    auto it = closure_memo.find(gens);
    if (it == closure_memo.end())
      it = closure_memo.emplace(gens, canonical_content(gens, k, cfg)).first;
    return it->second;
  };

  Lattice lat;
  lat.k = k;
  lat.trunc = trunc;
  std::map<Fingerprint, int> by_fp;
  std::map<std::vector<CanonicalDescriptor>, int> by_content;
  auto add_node = [&](const std::vector<CanonicalDescriptor>& gens) -> int {
    auto content = closed_content(gens);
    Fingerprint fp = fingerprint(content, k, trunc);
    if (auto it = by_fp.find(fp); it != by_fp.end()) return it->second;
    int id = static_cast<int>(lat.nodes.size());
    lat.nodes.push_back({id, node_label(fp), content, fp});
    by_fp.emplace(std::move(fp), id);
    by_content.emplace(std::move(content), id);
    return id;
  };

  add_node({});
  for (const auto& d : pool) add_node({d});

  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = lat.nodes.size();
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = a + 1; b < count; ++b) {
        std::set<CanonicalDescriptor> u(lat.nodes[a].content.begin(),
                                        lat.nodes[a].content.end());
        u.insert(lat.nodes[b].content.begin(), lat.nodes[b].content.end());
        std::vector<CanonicalDescriptor> gens(u.begin(), u.end());
        if (by_content.contains(gens)) continue;
        std::size_t before = lat.nodes.size();
        add_node(gens);
        if (lat.nodes.size() > before) grew = true;
        // Unions that merge by fingerprint need no further work either.
        if (!by_content.contains(gens)) by_content.emplace(gens, -1);
      }
  }

  std::size_t n = lat.nodes.size();
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      lt[a][b] = a != b && fingerprint_leq(lat.nodes[a].fp, lat.nodes[b].fp) &&
                 !(lat.nodes[a].fp == lat.nodes[b].fp);
  lat.edges = hasse_edges(lt);
  return lat;
}

namespace {

// Key-relation canonical representatives up to the cap (one-sorted
// candidate pool for Post node keys), computed once.
const std::vector<Relation>& key_pool(int kr_cap) {
  static std::map<int, std::vector<Relation>> cache;
  auto it = cache.find(kr_cap);
  if (it != cache.end()) return it->second;
  std::vector<Relation> out;
  std::set<std::pair<std::vector<int>, Bits>> seen;
  for (int a = 0; a <= kr_cap; ++a) {
    std::vector<int> sorts(a, 1);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (1 << a)); ++code) {
      Relation r = empty_relation(1, sorts);
      for (int i = 0; i < (1 << a); ++i)
        if (code & (std::uint64_t{1} << i)) r.tuples.set(i);
      if (!is_key(r)) continue;
      Relation c = canon_rep(r);
      if (c.arity() != a) continue;  // appears at its dummy-free arity
      if (seen.emplace(c.sorts, c.tuples).second) out.push_back(std::move(c));
    }
  }
  return cache.emplace(kr_cap, std::move(out)).first->second;
}

}  // namespace

PostLattice derive_post(const Lattice& fig1, const ClosureConfig& cfg) {
  PostLattice post;
  post.k = fig1.k;
  post.kr_cap = std::min(cfg.arity_cap, 4);
  const auto& pool = key_pool(post.kr_cap);

  std::map<std::vector<std::size_t>, int> by_key;  // indices into pool
  for (const auto& node : fig1.nodes) {
    std::vector<Relation> mats;
    for (const auto& d : node.content) mats.push_back(materialize(d, fig1.k));
    std::vector<Relation> E = eo5_closure(mats, fig1.k, cfg);
    for (int variant = 0; variant < 4; ++variant) {
      bool kz = variant & 1, ko = variant & 2;
      ConjSpan span(adjoin_constants(E, kz, ko));
      std::vector<std::size_t> key;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (span.contains(pool[i])) key.push_back(i);
      if (by_key.contains(key)) continue;
      PostNode pn;
      pn.id = static_cast<int>(post.nodes.size());
      pn.base_id = node.id;
      pn.need_zero = kz;
      pn.need_one = ko;
      pn.label = node.label + (kz && ko ? "+01" : kz ? "+0" : ko ? "+1" : "");
      for (auto i : key) pn.kr_content.push_back(pool[i]);
      by_key.emplace(std::move(key), pn.id);
      post.nodes.push_back(std::move(pn));
    }
  }

  std::size_t n = post.nodes.size();
  auto subset = [](const std::vector<Relation>& a,
                   const std::vector<Relation>& b) {
    for (const auto& r : a)
      if (std::find(b.begin(), b.end(), r) == b.end()) return false;
    return true;
  };
  std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      lt[a][b] = a != b &&
                 subset(post.nodes[a].kr_content, post.nodes[b].kr_content) &&
                 !(post.nodes[a].kr_content == post.nodes[b].kr_content);
  post.edges = hasse_edges(lt);
  return post;
}

NuDecomposition nu_decompose(const std::vector<KOperation>& C, int max_arity) {
  NuDecomposition nu;
  for (const auto& f : C) {
    if (f.k != 2) throw std::invalid_argument("nu_decompose: k must be 2");
    if (is_surjective(f)) nu.surjective.push_back(f);
  }
  std::sort(nu.surjective.begin(), nu.surjective.end());
  for (int coord = 1; coord <= 2; ++coord)
    for (int value = 0; value <= 1; ++value) {
      NuSlot slot;
      slot.coord = coord;
      slot.value = value;
      std::set<KOperation> ops;
      for (const auto& f : C) {
        std::uint64_t mask = f.arity >= 6 ? ~std::uint64_t{0}
                                          : (std::uint64_t{1} << (1 << f.arity)) - 1;
        std::uint64_t want = value ? mask : 0;
        if ((f.tables[coord - 1] & mask) != want) continue;
        ops.insert(KOperation{1, f.arity, {f.tables[2 - coord]}});
      }
      slot.empty = ops.empty();
      if (!slot.empty) {
        slot.had_projections = true;
        for (int a = 1; a <= max_arity && slot.had_projections; ++a)
          for (int i = 1; i <= a; ++i)
            if (!ops.contains(projection(1, a, i))) {
              slot.had_projections = false;
              break;
            }
        for (int a = 1; a <= max_arity; ++a)
          for (int i = 1; i <= a; ++i) ops.insert(projection(1, a, i));
        slot.ops.assign(ops.begin(), ops.end());
      }
      nu.slots.push_back(std::move(slot));
    }
  return nu;
}

std::string emit_dot(const Lattice& l) {
  std::ostringstream os;
  os << "digraph fig1 {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& n : l.nodes)
    os << "  n" << n.id << " [label=\"" << n.label << "\"];\n";
  for (const auto& [a, b] : l.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const Lattice& l) {
  nlohmann::json j;
  j["k"] = l.k;
  j["trunc"] = l.trunc;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : l.nodes) {
    nlohmann::json jn;
    jn["id"] = n.id;
    jn["label"] = n.label;
    jn["cr16"] = nlohmann::json::array();
    for (const auto& d : n.fp.cr16) jn["cr16"].push_back(d.to_string());
    jn["downset"] = nlohmann::json::array();
    for (const auto& p : n.fp.downset.maximal) jn["downset"].push_back(p);
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : l.edges)
    j["edges"].push_back(nlohmann::json::array({a, b}));
  return j.dump(2) + "\n";
}

std::string emit_dot(const PostLattice& l) {
  std::ostringstream os;
  os << "digraph post {\n  rankdir=BT;\n  node [shape=box];\n";
  for (const auto& n : l.nodes)
    os << "  n" << n.id << " [label=\"" << n.label << "\"];\n";
  for (const auto& [a, b] : l.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const PostLattice& l) {
  nlohmann::json j;
  j["k"] = l.k;
  j["kr_cap"] = l.kr_cap;
  j["nodes"] = nlohmann::json::array();
  for (const auto& n : l.nodes) {
    nlohmann::json jn;
    jn["id"] = n.id;
    jn["base_id"] = n.base_id;
    jn["constants"] =
        std::string(n.need_zero ? "0" : "") + (n.need_one ? "1" : "");
    jn["label"] = n.label;
    jn["kr_count"] = n.kr_content.size();
    j["nodes"].push_back(std::move(jn));
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : l.edges)
    j["edges"].push_back(nlohmann::json::array({a, b}));
  return j.dump(2) + "\n";
}

}  // namespace clonelab
