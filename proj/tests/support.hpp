#pragma once

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcfl/dyck.hpp"
#include "mcfl/grammar.hpp"
#include "mcfl/grammar_dsl.hpp"
#include "mcfl/graph.hpp"

namespace mcfl::test {

inline std::vector<std::string> tokens(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::string join(const std::vector<std::string>& w) {
  std::string s;
  for (const auto& t : w) s += (s.empty() ? "" : " ") + t;
  return s;
}

inline std::string data_path(std::string_view name) { return std::string(MCFL_TEST_DATA) + "/" + std::string(name); }

inline std::string read_data(std::string_view name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Grammar copy_grammar() { return parse_grammar(read_data("copy.grammar")); }
inline Grammar anbn_grammar() { return parse_grammar(read_data("anbn.grammar")); }
inline LabeledGraph taint_flow() { return parse_graph(read_data("taint_flow.graph")); }
inline LabeledGraph field_cycle() { return parse_graph(read_data("field_cycle.graph")); }

// Reference checkers written against the language definitions, not the grammars.

inline bool anbn_check(const std::vector<std::string>& w) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == "0") ++i;
  std::size_t zeros = i;
  while (i < w.size() && w[i] == "1") ++i;
  return i == w.size() && zeros > 0 && 2 * zeros == w.size();
}

// u v # v u: the right half is a rotation of the left half.
inline bool copy_check(const std::vector<std::string>& w) {
  std::size_t hashes = 0, at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == "#") ++hashes, at = i;
    else if (w[i] != "0" && w[i] != "1") return false;
  }
  if (hashes != 1) return false;
  std::vector<std::string> left(w.begin(), w.begin() + at), right(w.begin() + at + 1, w.end());
  if (left.size() != right.size()) return false;
  if (left.empty()) return true;
  for (std::size_t r = 0; r < left.size(); ++r) {
    bool ok = true;
    for (std::size_t i = 0; i < left.size() && ok; ++i) ok = right[i] == left[(i + r) % left.size()];
    if (ok) return true;
  }
  return false;
}

// Balanced over pairs (open_prefix<i>, close_prefix<i>); other tokens are skipped.
inline bool stack_check(const std::vector<std::string>& w, std::string_view open, std::string_view close) {
  std::vector<std::string> stack;
  for (const auto& t : w) {
    if (t.starts_with(open)) {
      stack.push_back(t.substr(open.size()));
    } else if (t.starts_with(close)) {
      if (stack.empty() || stack.back() != t.substr(close.size())) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

inline bool dyck_check(const std::vector<std::string>& w) {
  for (const auto& t : w)
    if (!t.starts_with("op") && !t.starts_with("cp")) return false;
  return stack_check(w, "op", "cp");
}

inline void for_each_string(const std::vector<std::string>& alphabet, int max_len,
                            const std::function<void(const std::vector<std::string>&)>& visit) {
  std::vector<std::string> w;
  std::function<void()> rec = [&] {
    visit(w);
    if (static_cast<int>(w.size()) == max_len) return;
    for (const auto& a : alphabet) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

inline std::vector<std::vector<bool>> floyd_warshall(const LabeledGraph& g) {
  std::size_t n = g.node_count();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) r[v][v] = true;
  for (const auto& e : g.edges()) r[e.src][e.dst] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

struct CorpusGrammar {
  std::string name;
  Grammar grammar;
  std::vector<std::string> alphabet;
  bool interleaved = false;  ///< test strings are drawn from the interleaved Dyck universe
};

inline std::vector<CorpusGrammar> corpus() {
  std::vector<CorpusGrammar> c;
  c.push_back({"copy", copy_grammar(), {"0", "1", "#"}, false});
  c.push_back({"anbn", anbn_grammar(), {"0", "1"}, false});
  c.push_back({"dyck_cfg", gen_dyck_cfg(1), {"op1", "cp1"}, false});
  c.push_back({"circ1", gen_family(1, {}, FamilyVariant::circ), {}, true});
  c.push_back({"circ2", gen_family(2, {}, FamilyVariant::circ), {}, true});
  c.push_back({"plus1", gen_family(1, {}, FamilyVariant::plus), {}, true});
  c.push_back({"plus2", gen_family(2, {}, FamilyVariant::plus), {}, true});
  return c;
}

}  // namespace mcfl::test
