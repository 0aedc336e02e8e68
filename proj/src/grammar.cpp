#include "mcfl/grammar.hpp"

#include <algorithm>

#include "mcfl/errors.hpp"

namespace mcfl {

std::size_t Rule::variable_count() const {
  std::size_t n = 0;
  for (const auto& a : rhs) n += a.vars.size();
  return n;
}

std::size_t Rule::terminal_count() const {
  std::size_t n = 0;
  for (const auto& s : args)
    for (const auto& it : s)
      if (!it.is_variable()) ++n;
  return n;
}

bool same_structure(const Rule& a, const Rule& b) {
  if (a.lhs != b.lhs || a.args != b.args || a.rhs.size() != b.rhs.size()) return false;
  for (std::size_t i = 0; i < a.rhs.size(); ++i)
    if (a.rhs[i].nonterminal != b.rhs[i].nonterminal) return false;
  return true;
}

std::string default_variable_name(int atom, int slot) {
  static constexpr char letters[] = "xyzwuvst";
  if (atom < 8) return std::string(1, letters[atom]) + std::to_string(slot + 1);
  return "x" + std::to_string(atom) + "_" + std::to_string(slot + 1);
}

std::string structure_key(const Rule& r) {
  std::string key = std::to_string(r.lhs);
  key += '(';
  for (const auto& s : r.args) {
    for (const auto& it : s) {
      if (it.is_variable())
        key += 'v' + std::to_string(it.atom) + '.' + std::to_string(it.slot);
      else
        key += 't' + std::to_string(it.terminal);
      key += ' ';
    }
    key += ',';
  }
  key += ")<-";
  for (const auto& a : r.rhs) {
    key += std::to_string(a.nonterminal) + '/' + std::to_string(a.vars.size());
    key += ',';
  }
  return key;
}

NonterminalId Grammar::declare(std::string_view name, int arity) {
  auto it = nonterminal_ids_.find(std::string(name));
  if (it != nonterminal_ids_.end()) {
    if (nonterminals_[it->second].arity != arity)
      throw GrammarError("arity mismatch for nonterminal " + std::string(name) + ": " +
                         std::to_string(nonterminals_[it->second].arity) + " vs " + std::to_string(arity));
    return it->second;
  }
  if (arity < 1) throw GrammarError("nonterminal " + std::string(name) + " must have arity >= 1");
  auto id = static_cast<NonterminalId>(nonterminals_.size());
  nonterminals_.push_back({std::string(name), arity});
  nonterminal_ids_.emplace(std::string(name), id);
  return id;
}

std::optional<NonterminalId> Grammar::find_nonterminal(std::string_view name) const {
  auto it = nonterminal_ids_.find(std::string(name));
  if (it == nonterminal_ids_.end()) return std::nullopt;
  return it->second;
}

TerminalId Grammar::intern(std::string_view token) {
  if (token.empty() || token == kEpsilonToken) throw GrammarError("invalid terminal token '" + std::string(token) + "'");
  auto it = terminal_ids_.find(std::string(token));
  if (it != terminal_ids_.end()) return it->second;
  auto id = static_cast<TerminalId>(terminals_.size());
  terminals_.emplace_back(token);
  terminal_ids_.emplace(std::string(token), id);
  return id;
}

std::optional<TerminalId> Grammar::find_terminal(std::string_view token) const {
  auto it = terminal_ids_.find(std::string(token));
  if (it == terminal_ids_.end()) return std::nullopt;
  return it->second;
}

bool Grammar::add_rule(Rule r) {
  auto key = structure_key(r);
  if (!rule_keys_.insert(key).second) return false;
  rules_.push_back(std::move(r));
  return true;
}

bool Grammar::add_rule(std::string_view lhs, std::vector<ArgString> args, const std::vector<std::string>& rhs) {
  Rule r;
  r.lhs = declare(lhs, static_cast<int>(args.size()));
  r.args = std::move(args);
  for (std::size_t l = 0; l < rhs.size(); ++l) {
    auto id = find_nonterminal(rhs[l]);
    if (!id) throw GrammarError("undeclared nonterminal " + rhs[l]);
    Atom a;
    a.nonterminal = *id;
    for (int j = 0; j < arity(*id); ++j) a.vars.push_back(default_variable_name(static_cast<int>(l), j));
    r.rhs.push_back(std::move(a));
  }
  return add_rule(std::move(r));
}

int Grammar::dimension() const {
  int d = has_start() ? arity(start_) : 0;
  for (const auto& r : rules_) {
    d = std::max(d, arity(r.lhs));
    for (const auto& a : r.rhs) d = std::max(d, arity(a.nonterminal));
  }
  return d;
}

int Grammar::rank() const {
  int k = 0;
  for (const auto& r : rules_) k = std::max(k, static_cast<int>(r.rhs.size()));
  return k;
}

std::size_t Grammar::size() const {
  std::size_t total = 0;
  for (const auto& r : rules_) {
    total += r.variable_count();
    for (const auto& s : r.args) total += s.size();
  }
  return total;
}

bool same_grammar(const Grammar& a, const Grammar& b) {
  if (a.has_start() != b.has_start()) return false;
  if (a.has_start() && a.name(a.start()) != b.name(b.start())) return false;
  if (a.rules().size() != b.rules().size()) return false;
  for (std::size_t i = 0; i < a.rules().size(); ++i) {
    const Rule& x = a.rules()[i];
    const Rule& y = b.rules()[i];
    if (a.name(x.lhs) != b.name(y.lhs) || x.args.size() != y.args.size() || x.rhs.size() != y.rhs.size())
      return false;
    for (std::size_t l = 0; l < x.rhs.size(); ++l)
      if (a.name(x.rhs[l].nonterminal) != b.name(y.rhs[l].nonterminal)) return false;
    for (std::size_t s = 0; s < x.args.size(); ++s) {
      if (x.args[s].size() != y.args[s].size()) return false;
      for (std::size_t t = 0; t < x.args[s].size(); ++t) {
        const Item& p = x.args[s][t];
        const Item& q = y.args[s][t];
        if (p.is_variable() != q.is_variable()) return false;
        if (p.is_variable() ? (p.atom != q.atom || p.slot != q.slot) : a.token(p.terminal) != b.token(q.terminal))
          return false;
      }
    }
  }
  return true;
}

bool rule_is_non_deleting(const Rule& r, const Grammar& g) {
  std::size_t used = 0;
  for (const auto& s : r.args)
    for (const auto& it : s)
      if (it.is_variable()) ++used;
  std::size_t declared = 0;
  for (const auto& a : r.rhs) declared += static_cast<std::size_t>(g.arity(a.nonterminal));
  return used == declared;
}

bool rule_is_non_permuting(const Rule& r) {
  std::vector<int> next(r.rhs.size(), 0);
  for (const auto& s : r.args)
    for (const auto& it : s) {
      if (!it.is_variable()) continue;
      if (it.slot < next[it.atom]) return false;
      next[it.atom] = it.slot + 1;
    }
  return true;
}

std::vector<Violation> validate(const Grammar& g, const ValidateOptions& options) {
  std::vector<Violation> out;
  if (!g.has_start()) {
    out.push_back({-1, ViolationKind::missing_start, "no start symbol"});
  } else if (g.arity(g.start()) != 1) {
    out.push_back({-1, ViolationKind::start_arity, "start symbol " + g.name(g.start()) + " must have arity 1"});
  }
  for (std::size_t i = 0; i < g.rules().size(); ++i) {
    const Rule& r = g.rules()[i];
    auto where = static_cast<std::ptrdiff_t>(i);
    auto label = "rule " + std::to_string(i + 1) + " (" + g.name(r.lhs) + ")";
    if (static_cast<int>(r.args.size()) != g.arity(r.lhs))
      out.push_back({where, ViolationKind::arity_mismatch, label + ": LHS has " + std::to_string(r.args.size()) +
                                                               " arguments, arity is " + std::to_string(g.arity(r.lhs))});
    bool shape_ok = true;
    for (const auto& a : r.rhs) {
      if (static_cast<int>(a.vars.size()) != g.arity(a.nonterminal)) {
        out.push_back({where, ViolationKind::arity_mismatch,
                       label + ": " + g.name(a.nonterminal) + " used with " + std::to_string(a.vars.size()) +
                           " variables, arity is " + std::to_string(g.arity(a.nonterminal))});
        shape_ok = false;
      }
    }
    std::unordered_set<std::string> names;
    for (const auto& a : r.rhs)
      for (const auto& v : a.vars)
        if (!names.insert(v).second)
          out.push_back({where, ViolationKind::duplicate_variable, label + ": variable " + v + " declared twice"});
    std::vector<std::vector<int>> uses(r.rhs.size());
    for (std::size_t l = 0; l < r.rhs.size(); ++l) uses[l].assign(r.rhs[l].vars.size(), 0);
    for (const auto& s : r.args)
      for (const auto& it : s) {
        if (!it.is_variable()) {
          if (it.terminal < 0 || static_cast<std::size_t>(it.terminal) >= g.terminal_count())
            out.push_back({where, ViolationKind::unknown_variable, label + ": unknown terminal id"});
          continue;
        }
        if (it.atom >= static_cast<int>(r.rhs.size()) || it.slot < 0 ||
            it.slot >= static_cast<int>(uses[it.atom].size())) {
          out.push_back({where, ViolationKind::unknown_variable, label + ": reference to an undeclared variable"});
          shape_ok = false;
          continue;
        }
        if (++uses[it.atom][it.slot] == 2)
          out.push_back({where, ViolationKind::variable_reused,
                         label + ": variable " + r.rhs[it.atom].vars[it.slot] + " used twice"});
      }
    if (!shape_ok) continue;
    if (options.require_non_deleting) {
      for (std::size_t l = 0; l < r.rhs.size(); ++l)
        for (std::size_t j = 0; j < uses[l].size(); ++j)
          if (uses[l][j] == 0)
            out.push_back({where, ViolationKind::deleting_rule,
                           label + ": variable " + r.rhs[l].vars[j] + " does not occur on the left"});
    }
    if (options.require_non_permuting && !rule_is_non_permuting(r))
      out.push_back({where, ViolationKind::permuting_rule, label + ": variables change order"});
  }
  return out;
}

GrammarFlags classify_flags(const Grammar& g) {
  GrammarFlags f;
  f.dimension = g.dimension();
  f.rank = g.rank();
  for (const auto& r : g.rules()) {
    if (!rule_is_non_deleting(r, g)) f.non_deleting = false;
    if (!rule_is_non_permuting(r)) f.non_permuting = false;
  }
  return f;
}

}  // namespace mcfl
