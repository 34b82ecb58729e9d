#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "clonelab/canonical.hpp"
#include "clonelab/closure.hpp"
#include "clonelab/lattice.hpp"
#include "clonelab/operations.hpp"
#include "clonelab/parse.hpp"
#include "clonelab/verify.hpp"

namespace {

using namespace clonelab;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Relation> load_relations(const std::string& path) {
  auto rs = parse_relation_list(slurp(path));
  if (rs.empty()) throw UsageError("no relations in file: " + path);
  for (const auto& r : rs)
    if (r.k != rs.front().k)
      throw UsageError("mixed sort counts in file: " + path);
  return rs;
}

/* Operation literals, one per line:
 *   op k=<int> arity=<int> tables=[<bits>,...]
 * with one bit string of length 2^arity per coordinate; character at
 * position idx is the value on the argument tuple with index idx
 * (argument 1 most significant). */
std::vector<KOperation> load_operations(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<KOperation> ops;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    auto bad = [&](const std::string& why) -> std::runtime_error {
      return UsageError("bad operation literal on line " +
                        std::to_string(lineno) + ": " + why);
    };
    if (word != "op") throw bad("expected 'op'");
    KOperation f;
    std::string tok;
    if (!(ls >> tok) || tok.rfind("k=", 0) != 0) throw bad("expected k=");
    f.k = std::stoi(tok.substr(2));
    if (!(ls >> tok) || tok.rfind("arity=", 0) != 0)
      throw bad("expected arity=");
    f.arity = std::stoi(tok.substr(6));
    if (f.k < 1 || f.arity < 1 || f.arity > 6) throw bad("k or arity out of range");
    if (!(ls >> tok) || tok.rfind("tables=[", 0) != 0 || tok.back() != ']')
      throw bad("expected tables=[...]");
    std::string body = tok.substr(8, tok.size() - 9);
    std::size_t want = std::size_t{1} << f.arity;
    std::istringstream bs(body);
    std::string cell;
    while (std::getline(bs, cell, ',')) {
      if (cell.size() != want) throw bad("table width != 2^arity");
      std::uint64_t tbl = 0;
      for (std::size_t i = 0; i < want; ++i) {
        if (cell[i] != '0' && cell[i] != '1') throw bad("non-bit table entry");
        if (cell[i] == '1') tbl |= std::uint64_t{1} << i;
      }
      f.tables.push_back(tbl);
    }
    if (static_cast<int>(f.tables.size()) != f.k)
      throw bad("table count != k");
    ops.push_back(std::move(f));
  }
  if (ops.empty()) throw UsageError("no operations in file: " + path);
  for (const auto& f : ops)
    if (f.k != ops.front().k)
      throw UsageError("mixed sort counts in file: " + path);
  return ops;
}

std::string print_operation(const KOperation& f) {
  std::ostringstream os;
  os << "op k=" << f.k << " arity=" << f.arity << " tables=[";
  for (int c = 0; c < f.k; ++c) {
    if (c) os << ",";
    for (std::size_t i = 0; i < (std::size_t{1} << f.arity); ++i)
      os << f.value(c + 1, i);
  }
  os << "]";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write file: " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"two-element multi-sorted relational clone workbench"};
  app.require_subcommand(1);
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  app.add_option("--threads", threads, "worker thread cap");

  std::string in_file, target_file, lang_file, mode = "qpp", which, suite;
  std::string dot_file, json_file;
  int cap = 6, pol_cap = 4, trunc = 4, kk = 1;
  unsigned seed = 1;

  auto* key_cmd = app.add_subcommand("key", "canonical disjunctive forms");
  key_cmd->add_option("file", in_file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "canonical shapes");
  classify_cmd->add_option("file", in_file)->required();

  auto* closure_cmd = app.add_subcommand("closure", "bounded definability closure");
  closure_cmd->add_option("file", in_file)->required();
  closure_cmd->add_option("--mode", mode, "pp or qpp")->check(CLI::IsMember({"pp", "qpp"}));
  closure_cmd->add_option("--cap", cap, "arity cap");

  auto* member_cmd = app.add_subcommand("member", "sandwich membership");
  member_cmd->add_option("--target", target_file)->required();
  member_cmd->add_option("--lang", lang_file)->required();
  member_cmd->add_option("--cap", cap, "closure arity cap");
  member_cmd->add_option("--pol-cap", pol_cap, "refuting operation arity cap");

  auto* galois_cmd = app.add_subcommand("galois", "pol / spol / inv");
  galois_cmd->add_option("kind", which)->required()->check(CLI::IsMember({"pol", "spol", "inv"}));
  galois_cmd->add_option("file", in_file)->required();
  galois_cmd->add_option("--cap", cap, "arity cap");

  auto* lattice_cmd = app.add_subcommand("lattice", "closed-class lattices");
  lattice_cmd->add_option("kind", which)->required()->check(CLI::IsMember({"fig1", "post"}));
  lattice_cmd->add_option("--trunc", trunc, "footprint truncation");
  lattice_cmd->add_option("--cap", cap, "closure arity cap");
  lattice_cmd->add_option("--dot", dot_file, "DOT output file");
  lattice_cmd->add_option("--json", json_file, "JSON output file");

  auto* verify_cmd = app.add_subcommand("verify", "verification suites");
  verify_cmd->add_option("--suite", suite)->required()
      ->check(CLI::IsMember({"lemmas", "galois", "canonical", "fig1"}));
  verify_cmd->add_option("--k", kk, "number of sorts");
  verify_cmd->add_option("--cap", cap, "closure arity cap");
  verify_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::cout << app.help();
      return 0;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  ClosureConfig cfg;
  cfg.arity_cap = cap;
  cfg.pol_cap = pol_cap;
  cfg.threads = threads;

  if (*key_cmd) {
    bool all_key = true;
    for (const auto& r : load_relations(in_file)) {
      auto f = to_disjunctive_form(r);
      if (f)
        std::cout << print_form(*f) << "\n";
      else
        std::cout << "NOT_KEY\n", all_key = false;
    }
    return all_key ? 0 : 1;
  }
  if (*classify_cmd) {
    bool all = true;
    for (const auto& r : load_relations(in_file)) {
      auto d = classify(r);
      if (d)
        std::cout << d->to_string() << "\n";
      else
        std::cout << "NOT_CANONICAL\n", all = false;
    }
    return all ? 0 : 1;
  }
  if (*closure_cmd) {
    auto S = load_relations(in_file);
    auto out = mode == "pp" ? pp_closure(S, S.front().k, cfg)
                            : qpp_closure(S, S.front().k, cfg);
    for (const auto& r : out) std::cout << print_relation(r) << "\n";
    return 0;
  }
  if (*member_cmd) {
    auto S = load_relations(lang_file);
    auto targets = load_relations(target_file);
    if (targets.front().k != S.front().k)
      throw UsageError("target and language disagree on the sort count");
    MembershipOracle oracle(S, S.front().k, cfg);
    for (const auto& tgt : targets) {
      Verdict v = oracle.member(tgt);
      std::cout << (v == Verdict::In ? "IN"
                    : v == Verdict::Out ? "OUT"
                                        : "UNDECIDED")
                << "\n";
    }
    return 0;
  }
  if (*galois_cmd) {
    if (which == "inv") {
      auto F = load_operations(in_file);
      for (const auto& r : inv_bounded(F, F.front().k, cap))
        std::cout << print_relation(r) << "\n";
    } else {
      auto S = load_relations(in_file);
      for (const auto& f :
           pol_bounded(S, S.front().k, cap, /*surjective_only=*/which == "spol"))
        std::cout << print_operation(f) << "\n";
    }
    return 0;
  }
  if (*lattice_cmd) {
    Lattice fig1 = build_fig1(trunc, cfg);
    if (which == "fig1") {
      if (!dot_file.empty()) write_file(dot_file, emit_dot(fig1));
      if (!json_file.empty()) write_file(json_file, emit_json(fig1));
      std::cout << "nodes=" << fig1.nodes.size()
                << " edges=" << fig1.edges.size() << "\n";
    } else {
      PostLattice post = derive_post(fig1, cfg);
      if (!dot_file.empty()) write_file(dot_file, emit_dot(post));
      if (!json_file.empty()) write_file(json_file, emit_json(post));
      std::cout << "nodes=" << post.nodes.size()
                << " edges=" << post.edges.size() << "\n";
    }
    return 0;
  }
  if (*verify_cmd) {
    std::vector<std::pair<std::string, CheckResult>> results;
    if (suite == "lemmas") {
      results.emplace_back("form-roundtrip", check_form_roundtrip(kk, 4));
      results.emplace_back("generation-identities",
                           check_generation_lemmas(kk, cfg));
    } else if (suite == "galois") {
      results.emplace_back("galois-laws", check_galois_laws(20, seed));
    } else if (suite == "canonical") {
      ClosureConfig ccfg = cfg;
      ccfg.conj_cap = 3;
      results.emplace_back("closure-tables", check_closure_tables(kk, ccfg));
    } else {
      results.emplace_back("lattice-frame",
                           check_lattice_frame(cfg, trunc, -1));
      results.emplace_back("constant-refinement",
                           check_constant_refinement(cfg, trunc));
    }
    bool ok = true;
    for (const auto& [name, res] : results) {
      std::cout << name << ": " << (res.pass ? "PASS" : "FAIL") << " ("
                << res.detail << ")\n";
      ok = ok && res.pass;
    }
    return ok ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
