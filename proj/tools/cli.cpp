#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcfl/cycle_elimination.hpp"
#include "mcfl/dyck.hpp"
#include "mcfl/engine.hpp"
#include "mcfl/errors.hpp"
#include "mcfl/gadgets.hpp"
#include "mcfl/grammar_dsl.hpp"
#include "mcfl/normal_form.hpp"
#include "mcfl/oracle.hpp"

namespace mcfl::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_file(path, text);
}

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> w;
  for (std::string t; in >> t;) w.push_back(t);
  if (w.size() == 1 && w[0] == "eps") w.clear();
  return w;
}

std::string join(const std::vector<std::string>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i];
  return s;
}

NormalGrammar load_normal(const std::string& path, std::ostream& err) {
  Grammar g = parse_grammar_file(path);
  if (is_normal_form(g)) return NormalGrammar(std::move(g));
  err << "note: grammar is not in normal form; normalizing\n";
  return normalize(g);
}

FamilyVariant parse_variant(const std::string& v) {
  if (v == "circ") return FamilyVariant::circ;
  if (v == "plus") return FamilyVariant::plus;
  throw UsageError("variant must be circ or plus");
}

/// Largest <i> among terminals spelled `open`<i> or `close`<i>.
int max_index(const Grammar& g, const std::string& open, const std::string& close) {
  int best = 0;
  for (std::size_t t = 0; t < g.terminal_count(); ++t) {
    const std::string& tok = g.token(static_cast<TerminalId>(t));
    if (tok.size() <= 2 || (tok.compare(0, 2, open) != 0 && tok.compare(0, 2, close) != 0)) continue;
    if (!std::all_of(tok.begin() + 2, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) continue;
    best = std::max(best, std::stoi(tok.substr(2)));
  }
  return best;
}

void print_stats(const EngineStats& s, const NormalGrammar& g, std::ostream& err) {
  err << "nodes\t" << s.nodes << "\n";
  err << "original_nodes\t" << s.original_nodes << "\n";
  err << "facts_inserted\t" << s.inserted << "\n";
  err << "facts_extracted\t" << s.extracted << "\n";
  err << "facts_pruned\t" << s.pruned << "\n";
  err << "early_exit\t" << (s.early_exit ? "yes" : "no") << "\n";
  for (std::size_t a = 0; a < s.per_nonterminal.size(); ++a)
    if (s.per_nonterminal[a]) err << "facts[" << g.grammar().name(static_cast<NonterminalId>(a)) << "]\t" << s.per_nonterminal[a] << "\n";
}

struct ReachArgs {
  std::string grammar;
  std::string graph;
  std::string source;
  std::string target;
  std::string base;
  bool witness = false;
  bool no_prune = false;
  bool cycle_elim = false;
  bool stats = false;
  std::uint64_t budget = 50'000'000;
};

int cmd_reach(const ReachArgs& a, std::ostream& out, std::ostream& err) {
  if (a.source.empty() != a.target.empty()) throw UsageError("--source and --target go together");
  NormalGrammar g = load_normal(a.grammar, err);
  std::vector<std::string> warnings;
  LabeledGraph graph = parse_graph_file(a.graph, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  EngineConfig cfg;
  cfg.prune_with_plain_reachability = !a.no_prune;
  cfg.fact_budget = a.budget;
  cfg.record_justifications = a.witness;
  if (a.cycle_elim) {
    cfg.cycle_elimination = true;
    if (!a.base.empty()) {
      cfg.cycle_base = std::make_shared<NormalGrammar>(load_normal(a.base, err));
    } else {
      DyckSpec spec{std::max(1, max_index(g.grammar(), "op", "cp")), std::max(1, max_index(g.grammar(), "ob", "cb"))};
      cfg.cycle_base = std::make_shared<NormalGrammar>(normalize(gen_family(1, spec, FamilyVariant::plus)));
    }
  }
  auto witness_line = [&](const ReachResult& r, NodePair p) {
    out << graph.node_name(p.source) << "\t" << graph.node_name(p.target) << "\t" << join(r.witness(p).labels()) << "\n";
  };
  if (!a.source.empty()) {
    auto s = graph.find_node(a.source);
    auto t = graph.find_node(a.target);
    if (!s || !t) throw UsageError("unknown node " + (!s ? a.source : a.target));
    cfg.target = NodePair{*s, *t};
    ReachResult r = solve(g, graph, cfg);
    if (a.stats) print_stats(r.stats(), g, err);
    if (!r.reachable(*s, *t)) {
      out << "UNREACHABLE\n";
      return 1;
    }
    out << "REACHABLE\n";
    if (a.witness) witness_line(r, {*s, *t});
    return 0;
  }
  ReachResult r = solve(g, graph, cfg);
  if (a.stats) print_stats(r.stats(), g, err);
  std::vector<std::pair<std::string, NodePair>> rows;
  for (const auto& p : r.pairs()) rows.push_back({graph.node_name(p.source) + "\t" + graph.node_name(p.target), p});
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [line, p] : rows) {
    if (a.witness)
      witness_line(r, p);
    else
      out << line << "\n";
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reachability under multiple context-free grammars"};
  app.require_subcommand(1);

  std::string grammar_path;
  std::string output;
  auto* normalize_cmd = app.add_subcommand("normalize", "Rewrite a grammar into normal form");
  normalize_cmd->add_option("--grammar", grammar_path, "grammar file")->required();
  normalize_cmd->add_option("-o,--output", output, "output file (default stdout)");

  ReachArgs ra;
  auto* reach_cmd = app.add_subcommand("reach", "Solve reachability on a labelled graph");
  reach_cmd->add_option("--grammar", ra.grammar, "grammar file")->required();
  reach_cmd->add_option("--graph", ra.graph, "graph file")->required();
  reach_cmd->add_option("--source", ra.source, "source node for a single-pair query");
  reach_cmd->add_option("--target", ra.target, "target node for a single-pair query");
  reach_cmd->add_flag("--witness", ra.witness, "print a witness path label per pair");
  reach_cmd->add_flag("--no-prune", ra.no_prune, "disable plain-reachability pruning");
  reach_cmd->add_flag("--cycle-elim", ra.cycle_elim, "contract mutually reachable nodes first");
  reach_cmd->add_option("--base", ra.base, "grammar certifying contractions (default: one-dimensional plus family)");
  reach_cmd->add_flag("--stats", ra.stats, "print counters to stderr");
  reach_cmd->add_option("--budget", ra.budget, "fact budget");

  std::string member_string;
  auto* member_cmd = app.add_subcommand("member", "Decide membership of a token string");
  member_cmd->add_option("--grammar", grammar_path, "grammar file")->required();
  member_cmd->add_option("--string", member_string, "space-separated tokens")->required();

  int dim = 1;
  int pairs = 1;
  int brackets = 0;
  std::string variant = "circ";
  auto* gen_cmd = app.add_subcommand("gen-dyck", "Emit the d-dimensional Dyck grammar family");
  gen_cmd->add_option("--dim", dim, "dimension")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--pairs", pairs, "parenthesis pairs")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--bracket-pairs", brackets, "bracket pairs (default: same as --pairs)");
  gen_cmd->add_option("--variant", variant, "circ or plus")->required();
  gen_cmd->add_option("-o,--output", output, "output file (default stdout)");

  int max_len = 0;
  int jobs = 0;
  auto* count_cmd = app.add_subcommand("count", "Count interleaved Dyck strings derived by a family grammar");
  count_cmd->add_option("--dim", dim, "dimension")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--pairs", pairs, "parenthesis pairs")->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--bracket-pairs", brackets, "bracket pairs (default: same as --pairs)");
  count_cmd->add_option("--variant", variant, "circ or plus")->required();
  count_cmd->add_option("--max-len", max_len, "largest string length")->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--jobs", jobs, "threads (default: all)");

  int k = 2;
  std::string input;
  auto* ov_cmd = app.add_subcommand("gadget-ov", "Encode an orthogonal-vectors instance");
  ov_cmd->add_option("--k", k, "number of sets (even)")->required();
  ov_cmd->add_option("--input", input, "vectors file")->required();
  ov_cmd->add_option("-o,--output", output, "output prefix")->required();

  auto* tri_cmd = app.add_subcommand("gadget-triangle", "Encode triangle detection as reachability");
  tri_cmd->add_option("--graph", input, "undirected edge list")->required();
  tri_cmd->add_option("-o,--output", output, "output prefix")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "List derivable strings by bottom-up derivation");
  oracle_cmd->add_option("--grammar", grammar_path, "grammar file")->required();
  oracle_cmd->add_option("--max-len", max_len, "largest string length")->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*normalize_cmd) {
      NormalGrammar g = normalize(parse_grammar_file(grammar_path));
      emit(output, format_grammar(g.grammar()), out);
      return 0;
    }
    if (*reach_cmd) return cmd_reach(ra, out, err);
    if (*member_cmd) {
      NormalGrammar g = load_normal(grammar_path, err);
      bool yes = member(g, split_tokens(member_string));
      out << (yes ? "MEMBER" : "NONMEMBER") << "\n";
      return yes ? 0 : 1;
    }
    DyckSpec spec{pairs, brackets > 0 ? brackets : pairs};
    if (*gen_cmd) {
      emit(output, format_grammar(gen_family(dim, spec, parse_variant(variant))), out);
      return 0;
    }
    if (*count_cmd) {
      NormalGrammar g = normalize(gen_family(dim, spec, parse_variant(variant)));
      for (int len = 2; len <= max_len; len += 2) out << len << "\t" << count_in_language(g, spec, len, jobs) << "\n";
      return 0;
    }
    if (*ov_cmd) {
      OVInstance inst = parse_ov_vectors(read_file(input), k);
      write_file(output + ".grammar", format_grammar(ov_grammar(k)));
      write_file(output + ".string", join(ov_encode(inst)) + "\n");
      return 0;
    }
    if (*tri_cmd) {
      TriangleGadget t = triangle_gadget(parse_undirected_graph(read_file(input)));
      write_file(output + ".grammar", format_grammar(t.grammar));
      write_file(output + ".graph", format_graph(t.graph));
      write_file(output + ".query", t.graph.node_name(t.source) + "\t" + t.graph.node_name(t.target) + "\n");
      return 0;
    }
    if (*oracle_cmd) {
      for (const auto& w : oracle_strings(parse_grammar_file(grammar_path), max_len))
        out << (w.empty() ? std::string("eps") : join(w)) << "\n";
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mcfl::cli
