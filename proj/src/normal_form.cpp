#include "mcfl/normal_form.hpp"

#include <functional>
#include <string>
#include <unordered_map>

#include "mcfl/errors.hpp"
#include "mcfl/grammar_dsl.hpp"

namespace mcfl {
namespace {

bool is_single_var(const ArgString& s) { return s.size() == 1 && s[0].is_variable(); }

bool is_terminal_string(const ArgString& s) {
  for (const auto& it : s)
    if (it.is_variable()) return false;
  return true;
}

bool is_var_string(const ArgString& s) {
  if (s.empty()) return false;
  for (const auto& it : s)
    if (!it.is_variable()) return false;
  return true;
}

std::size_t var_count(const ArgString& s) {
  std::size_t n = 0;
  for (const auto& it : s)
    if (it.is_variable()) ++n;
  return n;
}

ArgString single(int atom, int slot) { return ArgString{Item::var(atom, slot)}; }

Atom identity_atom(NonterminalId nt, int arity, int atom_index = 0) {
  Atom a;
  a.nonterminal = nt;
  for (int j = 0; j < arity; ++j) a.vars.push_back(default_variable_name(atom_index, j));
  return a;
}

}  // namespace

std::optional<NormalRuleKind> classify_rule(const Grammar& g, const Rule& r) {
  const int k = static_cast<int>(r.args.size());
  if (r.is_basic()) {
    if (k == 1 && r.args[0].size() <= 1) {
      NormalRuleKind kind{NormalShape::terminal, -1, -1, {}};
      if (!r.args[0].empty()) kind.terminal = r.args[0][0].terminal;
      return kind;
    }
    return std::nullopt;
  }
  if (!rule_is_non_deleting(r, g) || !rule_is_non_permuting(r)) return std::nullopt;
  bool all_vars = true;
  for (const auto& s : r.args)
    if (!is_var_string(s)) all_vars = false;
  if (all_vars) {
    NormalRuleKind kind{NormalShape::merge, -1, -1, {}};
    for (const auto& s : r.args) {
      std::vector<VarRef> p;
      for (const auto& it : s) p.push_back({it.atom, it.slot});
      kind.plan.push_back(std::move(p));
    }
    return kind;
  }
  if (r.rhs.size() != 1) return std::nullopt;
  const int kb = static_cast<int>(r.rhs[0].vars.size());
  if (k == kb) {
    for (int i = 0; i < k; ++i) {
      const auto& s = r.args[i];
      if (s.size() != 2) continue;
      NormalRuleKind kind{NormalShape::prepend, -1, -1, {}};
      if (!s[0].is_variable() && s[1] == Item::var(0, i)) {
        kind.terminal = s[0].terminal;
      } else if (s[0] == Item::var(0, i) && !s[1].is_variable()) {
        kind.shape = NormalShape::append;
        kind.terminal = s[1].terminal;
      } else {
        return std::nullopt;
      }
      kind.slot = i;
      for (int j = 0; j < k; ++j)
        if (j != i && r.args[j] != single(0, j)) return std::nullopt;
      return kind;
    }
    return std::nullopt;
  }
  if (k == kb + 1) {
    for (int i = 0; i < k; ++i) {
      const auto& s = r.args[i];
      if (s.size() > 1 || (s.size() == 1 && s[0].is_variable())) continue;
      for (int j = 0; j < k; ++j)
        if (j != i && r.args[j] != single(0, j < i ? j : j - 1)) return std::nullopt;
      NormalRuleKind kind{NormalShape::insert, -1, -1, {}};
      kind.slot = i;
      if (!s.empty()) kind.terminal = s[0].terminal;
      return kind;
    }
  }
  return std::nullopt;
}

bool is_normal_form(const Grammar& g) {
  for (const auto& r : g.rules())
    if (!classify_rule(g, r)) return false;
  return true;
}

NormalGrammar::NormalGrammar(Grammar g) : grammar_(std::move(g)) {
  reverse_.resize(grammar_.nonterminal_count());
  for (std::size_t i = 0; i < grammar_.rules().size(); ++i) {
    const Rule& r = grammar_.rules()[i];
    auto kind = classify_rule(grammar_, r);
    if (!kind) throw GrammarError("rule not in normal form: " + format_rule(grammar_, r));
    kinds_.push_back(std::move(*kind));
    for (std::size_t l = 0; l < r.rhs.size(); ++l)
      reverse_[r.rhs[l].nonterminal].push_back({i, static_cast<int>(l)});
  }
}

std::span<const Occurrence> NormalGrammar::reverse_index(NonterminalId b) const {
  if (b < 0 || static_cast<std::size_t>(b) >= reverse_.size()) return {};
  return reverse_[b];
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(const Grammar& in) {
    for (std::size_t t = 0; t < in.terminal_count(); ++t) out_.intern(in.token(static_cast<TerminalId>(t)));
    for (std::size_t a = 0; a < in.nonterminal_count(); ++a) {
      auto id = static_cast<NonterminalId>(a);
      out_.declare(in.name(id), in.arity(id));
      root_.push_back(in.name(id));
    }
    out_.set_start(in.start());
    rules_ = in.rules();
  }

  Grammar run() {
    for (int step = 1; step <= 7; ++step) {
      step_ = step;
      std::vector<Rule> next;
      for (auto& r : rules_) process(std::move(r), next);
      rules_ = std::move(next);
    }
    for (auto& r : rules_) out_.add_rule(std::move(r));
    return std::move(out_);
  }

 private:
  void process(Rule r, std::vector<Rule>& sink) {
    std::vector<Rule> produced;
    if (!rewrite(r, produced)) {
      sink.push_back(std::move(r));
      return;
    }
    for (auto& p : produced) process(std::move(p), sink);
  }

  /// Returns the fresh nonterminal defined by `body`; appends the definition to `sink` when new.
  NonterminalId fresh(NonterminalId origin, int arity, Rule body, std::vector<Rule>& sink) {
    body.lhs = -1;
    auto key = std::to_string(arity) + "|" + structure_key(body);
    auto it = shared_.find(key);
    if (it != shared_.end()) return it->second;
    std::string name;
    do {
      name = root_[origin] + "__s" + std::to_string(step_) + "_" + std::to_string(counter_++);
    } while (out_.find_nonterminal(name));
    NonterminalId id = out_.declare(name, arity);
    root_.push_back(root_[origin]);
    shared_.emplace(std::move(key), id);
    body.lhs = id;
    sink.push_back(std::move(body));
    return id;
  }

  bool rewrite(const Rule& r, std::vector<Rule>& sink) {
    switch (step_) {
      case 1: return step1(r, sink);
      case 2: return step2(r, sink);
      case 3: return step3(r, sink);
      case 4: return step4(r, sink);
      case 5: return step5(r, sink);
      case 6: return step6(r, sink);
      default: return step7(r, sink);
    }
  }

  bool step1(const Rule& r, std::vector<Rule>& sink) {
    if (!r.is_basic() || r.args.size() <= 1) return false;
    Rule def;
    def.args = {r.args[0]};
    NonterminalId a = fresh(r.lhs, 1, def, sink);
    Rule rest;
    rest.lhs = r.lhs;
    rest.args.push_back(single(0, 0));
    for (std::size_t i = 1; i < r.args.size(); ++i) rest.args.push_back(r.args[i]);
    rest.rhs.push_back(identity_atom(a, 1));
    sink.push_back(std::move(rest));
    return true;
  }

  bool step2(const Rule& r, std::vector<Rule>& sink) {
    if (!r.is_basic() || r.args.size() != 1 || r.args[0].size() < 2) return false;
    Rule def;
    def.args = {ArgString{r.args[0][0]}};
    NonterminalId a = fresh(r.lhs, 1, def, sink);
    Rule rest;
    rest.lhs = r.lhs;
    ArgString s = single(0, 0);
    s.insert(s.end(), r.args[0].begin() + 1, r.args[0].end());
    rest.args.push_back(std::move(s));
    rest.rhs.push_back(identity_atom(a, 1));
    sink.push_back(std::move(rest));
    return true;
  }

  bool step3(const Rule& r, std::vector<Rule>& sink) {
    if (r.rhs.size() < 2) return false;
    const std::size_t k = r.args.size();
    for (std::size_t i = 0; i < k; ++i) {
      const ArgString& s = r.args[i];
      if (is_var_string(s)) continue;
      if (is_terminal_string(s)) {
        if (k < 2) throw GrammarError("terminal-only argument on a deleting rule");
        Rule def = r;
        def.args.erase(def.args.begin() + static_cast<std::ptrdiff_t>(i));
        NonterminalId a = fresh(r.lhs, static_cast<int>(k - 1), def, sink);
        Rule rest;
        rest.lhs = r.lhs;
        for (std::size_t j = 0; j < k; ++j) {
          if (j < i) rest.args.push_back(single(0, static_cast<int>(j)));
          if (j == i) rest.args.push_back(s);
          if (j > i) rest.args.push_back(single(0, static_cast<int>(j - 1)));
        }
        rest.rhs.push_back(identity_atom(a, static_cast<int>(k - 1)));
        sink.push_back(std::move(rest));
        return true;
      }
      // Attach a maximal terminal run to the neighbouring variable of one RHS atom.
      std::size_t var_pos = 0;
      std::size_t run_begin = 0;
      std::size_t run_end = 0;
      bool prefix = !s[0].is_variable();
      if (prefix) {
        while (!s[run_end].is_variable()) ++run_end;
        var_pos = run_end;
      } else {
        for (std::size_t t = 0; t + 1 < s.size(); ++t)
          if (s[t].is_variable() && !s[t + 1].is_variable()) {
            var_pos = t;
            break;
          }
        run_begin = var_pos + 1;
        run_end = run_begin;
        while (run_end < s.size() && !s[run_end].is_variable()) ++run_end;
      }
      const Item v = s[var_pos];
      const Atom& target = r.rhs[v.atom];
      const int kb = static_cast<int>(target.vars.size());
      Rule def;
      for (int j = 0; j < kb; ++j) {
        ArgString arg = single(0, j);
        if (j == v.slot) {
          if (prefix)
            arg.insert(arg.begin(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(run_end));
          else
            arg.insert(arg.end(), s.begin() + static_cast<std::ptrdiff_t>(run_begin),
                       s.begin() + static_cast<std::ptrdiff_t>(run_end));
        }
        def.args.push_back(std::move(arg));
      }
      def.rhs.push_back(identity_atom(target.nonterminal, kb));
      NonterminalId a = fresh(target.nonterminal, kb, def, sink);
      Rule rest = r;
      rest.rhs[v.atom].nonterminal = a;
      ArgString& mod = rest.args[i];
      if (prefix)
        mod.erase(mod.begin(), mod.begin() + static_cast<std::ptrdiff_t>(run_end));
      else
        mod.erase(mod.begin() + static_cast<std::ptrdiff_t>(run_begin), mod.begin() + static_cast<std::ptrdiff_t>(run_end));
      sink.push_back(std::move(rest));
      return true;
    }
    return false;
  }

  bool step4(const Rule& r, std::vector<Rule>& sink) {
    if (r.rhs.size() != 1) return false;
    const std::size_t k = r.args.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!is_terminal_string(r.args[i])) continue;
      bool other = false;
      for (std::size_t j = 0; j < k; ++j)
        if (j != i && !is_single_var(r.args[j])) other = true;
      if (!other) continue;
      Rule def = r;
      def.args.erase(def.args.begin() + static_cast<std::ptrdiff_t>(i));
      NonterminalId a = fresh(r.lhs, static_cast<int>(k - 1), def, sink);
      Rule rest;
      rest.lhs = r.lhs;
      for (std::size_t j = 0; j < k; ++j) {
        if (j < i) rest.args.push_back(single(0, static_cast<int>(j)));
        if (j == i) rest.args.push_back(r.args[i]);
        if (j > i) rest.args.push_back(single(0, static_cast<int>(j - 1)));
      }
      rest.rhs.push_back(identity_atom(a, static_cast<int>(k - 1)));
      sink.push_back(std::move(rest));
      return true;
    }
    return false;
  }

  bool step5(const Rule& r, std::vector<Rule>& sink) {
    if (r.rhs.size() != 1) return false;
    const std::size_t k = r.args.size();
    for (std::size_t i = 0; i < k; ++i) {
      const ArgString& s = r.args[i];
      if (var_count(s) < 2 || s.size() <= 2) continue;
      std::size_t cut = 0;
      while (!s[cut].is_variable()) ++cut;
      ++cut;
      Rule def = r;
      def.args[i] = ArgString(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut));
      def.args.insert(def.args.begin() + static_cast<std::ptrdiff_t>(i + 1),
                      ArgString(s.begin() + static_cast<std::ptrdiff_t>(cut), s.end()));
      NonterminalId a = fresh(r.lhs, static_cast<int>(k + 1), def, sink);
      Rule rest;
      rest.lhs = r.lhs;
      for (std::size_t j = 0; j < k; ++j) {
        if (j < i) rest.args.push_back(single(0, static_cast<int>(j)));
        if (j == i) rest.args.push_back(ArgString{Item::var(0, static_cast<int>(i)), Item::var(0, static_cast<int>(i + 1))});
        if (j > i) rest.args.push_back(single(0, static_cast<int>(j + 1)));
      }
      rest.rhs.push_back(identity_atom(a, static_cast<int>(k + 1)));
      sink.push_back(std::move(rest));
      return true;
    }
    return false;
  }

  bool step6(const Rule& r, std::vector<Rule>& sink) {
    if (r.rhs.size() != 1) return false;
    const std::size_t k = r.args.size();
    for (std::size_t i = 0; i < k; ++i) {
      const ArgString& s = r.args[i];
      bool two_terminals = s.size() == 2 && is_terminal_string(s);
      if (s.size() <= 2 && !two_terminals) continue;
      Rule def = r;
      Rule rest;
      rest.lhs = r.lhs;
      for (std::size_t j = 0; j < k; ++j) rest.args.push_back(single(0, static_cast<int>(j)));
      if (var_count(s) > 0 && !s.back().is_variable()) {
        def.args[i] = ArgString(s.begin(), s.end() - 1);
        rest.args[i].push_back(s.back());
      } else {
        def.args[i] = ArgString(s.begin() + 1, s.end());
        rest.args[i].insert(rest.args[i].begin(), s.front());
      }
      NonterminalId a = fresh(r.lhs, static_cast<int>(k), def, sink);
      rest.rhs.push_back(identity_atom(a, static_cast<int>(k)));
      sink.push_back(std::move(rest));
      return true;
    }
    return false;
  }

  bool step7(const Rule& r, std::vector<Rule>& sink) {
    if (r.rhs.size() != 1) return false;
    const std::size_t k = r.args.size();
    std::size_t nonsingle = 0;
    std::size_t first = k;
    for (std::size_t i = 0; i < k; ++i)
      if (!is_single_var(r.args[i])) {
        if (first == k) first = i;
        ++nonsingle;
      }
    if (nonsingle < 2) return false;
    const std::size_t i = first;
    const ArgString& s = r.args[i];
    Rule def = r;
    std::vector<ArgString> replaced;
    for (const auto& it : s)
      if (it.is_variable()) replaced.push_back(ArgString{it});
    const std::size_t p = replaced.size();
    def.args.erase(def.args.begin() + static_cast<std::ptrdiff_t>(i));
    def.args.insert(def.args.begin() + static_cast<std::ptrdiff_t>(i), replaced.begin(), replaced.end());
    const int arity = static_cast<int>(k - 1 + p);
    NonterminalId a = fresh(r.lhs, arity, def, sink);
    Rule rest;
    rest.lhs = r.lhs;
    for (std::size_t j = 0; j < k; ++j) {
      if (j < i) rest.args.push_back(single(0, static_cast<int>(j)));
      if (j > i) rest.args.push_back(single(0, static_cast<int>(j - 1 + p)));
      if (j == i) {
        ArgString mod;
        int next = static_cast<int>(i);
        for (const auto& it : s) mod.push_back(it.is_variable() ? Item::var(0, next++) : it);
        rest.args.push_back(std::move(mod));
      }
    }
    rest.rhs.push_back(identity_atom(a, arity));
    sink.push_back(std::move(rest));
    return true;
  }

  Grammar out_;
  std::vector<std::string> root_;
  std::vector<Rule> rules_;
  std::unordered_map<std::string, NonterminalId> shared_;
  int step_ = 0;
  std::size_t counter_ = 0;
};

}  // namespace

NormalGrammar normalize(const Grammar& g) {
  auto problems = validate(g, {true, true});
  if (!problems.empty()) throw GrammarError("cannot normalize: " + problems.front().message);
  return NormalGrammar(Normalizer(g).run());
}

}  // namespace mcfl
