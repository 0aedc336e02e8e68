#pragma once

#include <string>
#include <string_view>

#include "mcfl/grammar.hpp"

namespace mcfl {

/**
 * Parses the line-oriented grammar language:
 *
 *     start S
 *     A(x1 '0', x2 '0') <- A(x1, x2)
 *     S(x1 y1 '#' y2 x2) <- A(x1, x2), A(y1, y2)   # comment
 *
 * Terminals are quoted, variables are bare identifiers, `eps` is the empty argument.
 * Arity is fixed by the first use of a nonterminal. Duplicate rules are dropped.
 * Throws ParseError.
 */
Grammar parse_grammar(std::string_view text);
Grammar parse_grammar_file(const std::string& path);

/// Inverse of parse_grammar up to whitespace and comments.
std::string format_grammar(const Grammar& g);
std::string format_rule(const Grammar& g, const Rule& r);

}  // namespace mcfl
