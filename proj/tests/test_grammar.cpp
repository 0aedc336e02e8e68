#include <gtest/gtest.h>

#include "mcfl/dyck.hpp"
#include "mcfl/errors.hpp"
#include "mcfl/grammar.hpp"
#include "mcfl/grammar_dsl.hpp"
#include "support.hpp"

using namespace mcfl;
using mcfl::test::copy_grammar;

namespace {

ParseError::Kind parse_error_kind(std::string_view text) {
  try {
    parse_grammar(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError::Kind::syntax;
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  for (const auto& x : v)
    if (x.kind == k) return true;
  return false;
}

}  // namespace

TEST(GrammarDsl, AnbnGrammar) {
  auto g = parse_grammar("start S\nS('0' x '1') <- S(x)\nS('0' '1')\n");
  EXPECT_EQ(g.dimension(), 1);
  EXPECT_EQ(g.rank(), 1);
  EXPECT_EQ(g.rules().size(), 2u);
  EXPECT_EQ(g.terminal_count(), 2u);
  EXPECT_TRUE(g.rules()[1].is_basic());
}

TEST(GrammarDsl, EpsilonGrammar) {
  auto g = parse_grammar("start S\nS(eps)\n");
  ASSERT_EQ(g.rules().size(), 1u);
  ASSERT_EQ(g.rules()[0].args.size(), 1u);
  EXPECT_TRUE(g.rules()[0].args[0].empty());
}

TEST(GrammarDsl, CopyGrammar) {
  auto g = copy_grammar();
  EXPECT_EQ(g.dimension(), 2);
  EXPECT_EQ(g.rank(), 2);
  EXPECT_EQ(g.rules().size(), 4u);
  EXPECT_EQ(g.name(g.start()), "S");
  // 0 + (2 + 4) + (2 + 4) + (4 + 5)
  EXPECT_EQ(g.size(), 21u);
}

TEST(GrammarDsl, CommentsAndWhitespace) {
  auto g = parse_grammar("# header\n\nstart S   # trailing\n  S( '0'  x '1' ) <- S( x )\nS('#')\n");
  EXPECT_EQ(g.rules().size(), 2u);
  EXPECT_TRUE(g.find_terminal("#").has_value());
}

TEST(GrammarDsl, MultiCharacterTerminals) {
  auto g = parse_grammar("start S\nS('op10' x 'cp10') <- S(x)\nS(eps)\n");
  EXPECT_TRUE(g.find_terminal("op10").has_value());
  EXPECT_TRUE(g.find_terminal("cp10").has_value());
}

TEST(GrammarDsl, DuplicateRulesDropped) {
  auto g = parse_grammar("start S\nS('0')\nS('0')\nS(x '1') <- S(x)\nS(y '1') <- S(y)\n");
  EXPECT_EQ(g.rules().size(), 2u);
}

TEST(GrammarDsl, Errors) {
  EXPECT_EQ(parse_error_kind("start S\nS(x x) <- A(x)\nA('a')\n"), ParseError::Kind::variable_reused);
  EXPECT_EQ(parse_error_kind("start S\nS(x y) <- A(x), A(x)\nA('a')\n"), ParseError::Kind::duplicate_variable);
  EXPECT_EQ(parse_error_kind("start S\nS(x z) <- A(x)\nA('a')\n"), ParseError::Kind::unknown_variable);
  EXPECT_EQ(parse_error_kind("start S\nS('a')\nS('a', 'b')\n"), ParseError::Kind::arity_mismatch);
  EXPECT_EQ(parse_error_kind("S('a')\n"), ParseError::Kind::missing_start);
  EXPECT_EQ(parse_error_kind("start S\nS('a'\n"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("start S\nS(,)\n"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("start S\nS('')\n"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("start S\nstart S\nS('a')\n"), ParseError::Kind::syntax);
  EXPECT_EQ(parse_error_kind("start S\nS(eps 'a')\n"), ParseError::Kind::syntax);
}

TEST(GrammarDsl, ErrorPosition) {
  try {
    parse_grammar("start S\nS('a')\nS(x q) <- S(x)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(GrammarDsl, RoundTripCopy) {
  auto g = copy_grammar();
  auto h = parse_grammar(format_grammar(g));
  EXPECT_TRUE(same_grammar(g, h));
  EXPECT_EQ(format_grammar(g), format_grammar(h));
}

TEST(GrammarDsl, RoundTripFamilies) {
  for (int d = 1; d <= 3; ++d)
    for (auto v : {FamilyVariant::circ, FamilyVariant::plus}) {
      auto g = gen_family(d, {2, 2}, v);
      EXPECT_TRUE(same_grammar(g, parse_grammar(format_grammar(g)))) << d;
    }
}

TEST(GrammarDsl, RoundTripEpsilon) {
  auto text = format_grammar(copy_grammar());
  EXPECT_NE(text.find("A(eps, eps)"), std::string::npos) << text;
}

TEST(Validate, FamilyGrammarsClean) {
  ValidateOptions strict{true, true};
  EXPECT_TRUE(validate(copy_grammar(), strict).empty());
  EXPECT_TRUE(validate(test::anbn_grammar(), strict).empty());
  EXPECT_TRUE(validate(gen_dyck_cfg(2), strict).empty());
  for (int d = 1; d <= 3; ++d) {
    EXPECT_TRUE(validate(gen_family(d, {}, FamilyVariant::circ), strict).empty());
    EXPECT_TRUE(validate(gen_family(d, {}, FamilyVariant::plus), strict).empty());
  }
}

TEST(Validate, VariableUsedTwice) {
  Grammar g;
  auto s = g.declare("S", 1);
  auto a = g.declare("A", 1);
  g.set_start(s);
  g.add_rule(Rule{a, {{Item::term(g.intern("a"))}}, {}});
  g.add_rule(Rule{s, {{Item::var(0, 0), Item::var(0, 0)}}, {Atom{a, {"x"}}}});
  auto v = validate(g);
  EXPECT_TRUE(has_kind(v, ViolationKind::variable_reused));
  EXPECT_EQ(v.size(), 1u);
}

TEST(Validate, DeletingRule) {
  auto g = parse_grammar("start S\nS(x) <- B(x, y)\nB('a', 'b')\n");
  EXPECT_TRUE(validate(g).empty());
  EXPECT_TRUE(has_kind(validate(g, {true, false}), ViolationKind::deleting_rule));
}

TEST(Validate, PermutingRule) {
  auto g = parse_grammar("start S\nS(x y) <- A(x, y)\nA(y, x) <- B(x, y)\nB('a', 'b')\n");
  EXPECT_TRUE(validate(g).empty());
  EXPECT_TRUE(has_kind(validate(g, {false, true}), ViolationKind::permuting_rule));
}

TEST(Validate, StartArity) {
  Grammar g;
  g.set_start(g.declare("S", 2));
  g.add_rule("S", {{Item::term(g.intern("a"))}, {}}, {});
  EXPECT_TRUE(has_kind(validate(g), ViolationKind::start_arity));
  Grammar h;
  EXPECT_TRUE(has_kind(validate(h), ViolationKind::missing_start));
}

TEST(Validate, UndeclaredVariableReference) {
  Grammar g;
  auto s = g.declare("S", 1);
  g.set_start(s);
  g.add_rule(Rule{s, {{Item::var(1, 0)}}, {Atom{s, {"x"}}}});
  EXPECT_TRUE(has_kind(validate(g), ViolationKind::unknown_variable));
}

TEST(Flags, CopyGrammar) {
  auto f = classify_flags(copy_grammar());
  EXPECT_TRUE(f.non_deleting);
  EXPECT_TRUE(f.non_permuting);
  EXPECT_EQ(f.dimension, 2);
  EXPECT_EQ(f.rank, 2);
}

TEST(Flags, Permuting) {
  auto f = classify_flags(parse_grammar("start S\nS(x y) <- A(x, y)\nA(y, x) <- B(x, y)\nB('a', 'b')\n"));
  EXPECT_TRUE(f.non_deleting);
  EXPECT_FALSE(f.non_permuting);
}

TEST(Flags, Deleting) {
  auto f = classify_flags(parse_grammar("start S\nS(x) <- B(x, y)\nB('a', 'b')\n"));
  EXPECT_FALSE(f.non_deleting);
  EXPECT_TRUE(f.non_permuting);
}

TEST(Flags, CrossAtomOrderIsFree) {
  // Only variables of the same atom must keep their order.
  auto f = classify_flags(parse_grammar("start S\nS(y1 x1) <- A(x1), A(y1)\nA('a')\n"));
  EXPECT_TRUE(f.non_permuting);
}

TEST(GrammarApi, DeclareConflicts) {
  Grammar g;
  g.declare("A", 2);
  EXPECT_EQ(g.declare("A", 2), 0);
  EXPECT_THROW(g.declare("A", 1), GrammarError);
  EXPECT_THROW(g.declare("Z", 0), GrammarError);
  EXPECT_THROW(g.intern("@eps"), GrammarError);
  EXPECT_THROW(g.intern(""), GrammarError);
  EXPECT_EQ(g.intern("a"), g.intern("a"));
}
