#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mcfl/grammar.hpp"

namespace mcfl {

using TokenString = std::vector<TerminalId>;
using StringTuple = std::vector<TokenString>;

struct StringTupleHash {
  std::size_t operator()(const StringTuple& t) const;
};

/// All tuples derivable for every nonterminal, truncated by total tuple length.
class DerivedTupleSet {
 public:
  const std::vector<StringTuple>& tuples(NonterminalId a) const { return tuples_[a]; }
  bool contains(NonterminalId a, const StringTuple& t) const;
  std::size_t total() const;
  int max_total_length() const { return max_len_; }

 private:
  friend DerivedTupleSet derive_oracle_impl(const Grammar&, int, std::size_t);
  std::vector<std::vector<StringTuple>> tuples_;
  std::vector<std::unordered_set<StringTuple, StringTupleHash>> index_;
  int max_len_ = 0;
};

struct OracleOptions {
  std::size_t tuple_cap = 10'000'000;
};

/**
 * Bottom-up fixpoint of all tuples whose total length is at most `max_total_len`.
 * Exact for non-deleting grammars. Throws BudgetExceeded past `tuple_cap` tuples.
 */
DerivedTupleSet derive_oracle(const Grammar& g, int max_total_len, const OracleOptions& options = {});

/// Membership by direct derivation; tokens outside the terminal alphabet are rejected.
bool oracle_member(const Grammar& g, std::span<const std::string> w);

/// Start-symbol strings of length at most `max_len`, as token vectors, sorted by printed form.
std::vector<std::vector<std::string>> oracle_strings(const Grammar& g, int max_len,
                                                     const OracleOptions& options = {});

/// Translates tokens to terminal ids, or returns false if some token is not a terminal of `g`.
bool to_terminals(const Grammar& g, std::span<const std::string> w, TokenString& out);

}  // namespace mcfl
