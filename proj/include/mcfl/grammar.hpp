#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace mcfl {

using TerminalId = std::int32_t;
using NonterminalId = std::int32_t;

/// Reserved spelling of the empty label in graph files.
inline constexpr std::string_view kEpsilonToken = "@eps";

/// One symbol of an argument string: a terminal, or slot `slot` of RHS atom `atom`.
struct Item {
  TerminalId terminal = -1;
  std::int32_t atom = -1;
  std::int32_t slot = -1;

  static Item term(TerminalId t) { return Item{t, -1, -1}; }
  static Item var(int atom, int slot) { return Item{-1, atom, slot}; }
  bool is_variable() const { return atom >= 0; }
  friend bool operator==(const Item&, const Item&) = default;
};

using ArgString = std::vector<Item>;

struct Atom {
  NonterminalId nonterminal = -1;
  std::vector<std::string> vars;  ///< variable names, one per slot
};

/// A0(s1, ..., sk) <- A1(...), ..., Al(...). Basic when `rhs` is empty.
struct Rule {
  NonterminalId lhs = -1;
  std::vector<ArgString> args;
  std::vector<Atom> rhs;

  bool is_basic() const { return rhs.empty(); }
  std::size_t variable_count() const;
  std::size_t terminal_count() const;
};

/// Structural rule equality; variable names are ignored.
bool same_structure(const Rule& a, const Rule& b);

/// Default variable name for slot `slot` of RHS atom `atom`: x1, y1, z1, ...
std::string default_variable_name(int atom, int slot);

class Grammar {
 public:
  /// Returns the id of `name`, declaring it with `arity` if new. Throws GrammarError on conflict.
  NonterminalId declare(std::string_view name, int arity);
  std::optional<NonterminalId> find_nonterminal(std::string_view name) const;

  /// Interns a terminal token. Throws GrammarError for empty tokens or the epsilon spelling.
  TerminalId intern(std::string_view token);
  std::optional<TerminalId> find_terminal(std::string_view token) const;

  /// Appends `r` unless a structurally identical rule exists. Returns whether it was added.
  bool add_rule(Rule r);

  /// Convenience form: declares `lhs` with arity args.size(); RHS names must already be declared.
  bool add_rule(std::string_view lhs, std::vector<ArgString> args, const std::vector<std::string>& rhs);

  void set_start(NonterminalId s) { start_ = s; }
  NonterminalId start() const { return start_; }
  bool has_start() const { return start_ >= 0; }

  const std::string& name(NonterminalId a) const { return nonterminals_[a].name; }
  int arity(NonterminalId a) const { return nonterminals_[a].arity; }
  const std::string& token(TerminalId t) const { return terminals_[t]; }

  std::size_t nonterminal_count() const { return nonterminals_.size(); }
  std::size_t terminal_count() const { return terminals_.size(); }
  const std::vector<Rule>& rules() const { return rules_; }

  /// Maximum arity over nonterminals that occur in some rule or as the start symbol.
  int dimension() const;
  /// Maximum number of RHS atoms over rules.
  int rank() const;
  /// Sum over rules of (number of variables + total argument length in symbols).
  std::size_t size() const;

 private:
  struct Nonterminal {
    std::string name;
    int arity;
  };
  std::vector<Nonterminal> nonterminals_;
  std::unordered_map<std::string, NonterminalId> nonterminal_ids_;
  std::vector<std::string> terminals_;
  std::unordered_map<std::string, TerminalId> terminal_ids_;
  std::vector<Rule> rules_;
  std::unordered_set<std::string> rule_keys_;
  NonterminalId start_ = -1;
};

/// Canonical key of a rule's structure, used for deduplication.
std::string structure_key(const Rule& r);

/// Structural grammar equality by names: same start, same rules in the same order.
bool same_grammar(const Grammar& a, const Grammar& b);

enum class ViolationKind {
  arity_mismatch,
  unknown_variable,
  variable_reused,
  duplicate_variable,
  deleting_rule,
  permuting_rule,
  start_arity,
  missing_start,
};

struct Violation {
  std::ptrdiff_t rule = -1;  ///< rule index, -1 for grammar-level problems
  ViolationKind kind;
  std::string message;
};

struct ValidateOptions {
  bool require_non_deleting = false;
  bool require_non_permuting = false;
};

std::vector<Violation> validate(const Grammar& g, const ValidateOptions& options = {});

struct GrammarFlags {
  bool non_deleting = true;
  bool non_permuting = true;
  int dimension = 0;
  int rank = 0;
};

bool rule_is_non_deleting(const Rule& r, const Grammar& g);
bool rule_is_non_permuting(const Rule& r);
GrammarFlags classify_flags(const Grammar& g);

}  // namespace mcfl
