#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mcfl/grammar.hpp"
#include "mcfl/normal_form.hpp"

namespace mcfl {

/// Alphabet of the interleaved Dyck language: op<i>/cp<i> parentheses and ob<i>/cb<i> brackets.
struct DyckSpec {
  int parens = 1;
  int brackets = 1;
};

enum class FamilyVariant { circ, plus };

std::string open_paren(int i);
std::string close_paren(int i);
std::string open_bracket(int i);
std::string close_bracket(int i);

/// Context-free Dyck grammar over `k` parenthesis pairs, start symbol S.
Grammar gen_dyck_cfg(int k);

/**
 * The d-dimensional grammar over P^1..P^d (parentheses) and Q^1..Q^d (brackets),
 * named P1..Pd and Q1..Qd, with start S. The plus variant adds the insertion,
 * nesting and wrapping rules.
 */
Grammar gen_family(int d, const DyckSpec& spec, FamilyVariant variant);

/// Both projections balanced. Tokens outside the alphabet give false.
bool interleaved_oracle(std::span<const std::string> w, const DyckSpec& spec);

/// Visits every interleaved Dyck string of exactly `length` tokens, each once.
void for_each_interleaved(const DyckSpec& spec, int length,
                          const std::function<void(const std::vector<std::string>&)>& visit);
std::vector<std::vector<std::string>> enumerate_interleaved(const DyckSpec& spec, int length);

/// Number of interleaved Dyck strings of `length` tokens that `g` derives; strings are split across threads.
std::uint64_t count_in_language(const NormalGrammar& g, const DyckSpec& spec, int length, int threads = 0);
/// Single-threaded reference for count_in_language.
std::uint64_t count_in_language_serial(const NormalGrammar& g, const DyckSpec& spec, int length);

}  // namespace mcfl
