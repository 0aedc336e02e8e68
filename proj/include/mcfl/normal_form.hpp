#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcfl/grammar.hpp"

namespace mcfl {

/// The five rule shapes the saturation engine consumes.
enum class NormalShape : std::uint8_t {
  terminal,  ///< A(a) with a a terminal or epsilon
  prepend,   ///< A(.., a x_i, ..) <- B(x_1..x_k)
  append,    ///< A(.., x_i a, ..) <- B(x_1..x_k)
  insert,    ///< A(x_1..x_{i-1}, a, x_i..x_k) <- B(x_1..x_k), a a terminal or epsilon
  merge,     ///< every argument a non-empty string of variables
};

struct VarRef {
  int atom;
  int slot;
  friend bool operator==(const VarRef&, const VarRef&) = default;
};

struct NormalRuleKind {
  NormalShape shape;
  int slot = -1;             ///< component for prepend/append, insertion index for insert
  TerminalId terminal = -1;  ///< -1 is epsilon
  std::vector<std::vector<VarRef>> plan;  ///< merge only: variables of each LHS argument

  /// 1 to 5 in the order of NormalShape.
  int type_number() const { return static_cast<int>(shape) + 1; }
};

std::optional<NormalRuleKind> classify_rule(const Grammar& g, const Rule& r);

/// True when the grammar is non-deleting, non-permuting and every rule classifies.
bool is_normal_form(const Grammar& g);

struct Occurrence {
  std::size_t rule;
  int position;
};

/// A grammar in normal form together with its shape table and reverse index.
class NormalGrammar {
 public:
  /// Throws GrammarError if `g` is not in normal form.
  explicit NormalGrammar(Grammar g);

  const Grammar& grammar() const { return grammar_; }
  const NormalRuleKind& kind(std::size_t rule) const { return kinds_[rule]; }
  /// Rules whose RHS mentions `b`, with the atom position. Unknown ids give an empty list.
  std::span<const Occurrence> reverse_index(NonterminalId b) const;

 private:
  Grammar grammar_;
  std::vector<NormalRuleKind> kinds_;
  std::vector<std::vector<Occurrence>> reverse_;
};

/**
 * Rewrites a valid, non-deleting, non-permuting grammar into normal form, preserving the
 * start language, dimension and rank. Fresh nonterminals are named <orig>__s<step>_<n>,
 * and are shared when their defining rule bodies coincide. Throws GrammarError.
 */
NormalGrammar normalize(const Grammar& g);

}  // namespace mcfl
