#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "mcfl/dyck.hpp"
#include "mcfl/errors.hpp"
#include "mcfl/gadgets.hpp"
#include "mcfl/normal_form.hpp"
#include "mcfl/oracle.hpp"
#include "support.hpp"

using namespace mcfl;

namespace {

Rule only_rule(const Grammar& g, std::string_view lhs_name) {
  for (const auto& r : g.rules())
    if (g.name(r.lhs) == lhs_name) return r;
  ADD_FAILURE() << "no rule for " << lhs_name;
  return {};
}

NormalRuleKind kind_of(std::string_view text, std::string_view lhs) {
  auto g = parse_grammar(text);
  auto k = classify_rule(g, only_rule(g, lhs));
  EXPECT_TRUE(k.has_value()) << text;
  return k.value_or(NormalRuleKind{NormalShape::terminal, -1, -1, {}});
}

std::set<std::string> start_language(const Grammar& g, int L) {
  std::set<std::string> out;
  for (const auto& w : oracle_strings(g, L)) out.insert(test::join(w));
  return out;
}

std::vector<test::CorpusGrammar> nf_corpus() {
  auto c = test::corpus();
  c.push_back({"ov2", ov_grammar(2), {}, false});
  c.push_back({"dyck_cfg2", gen_dyck_cfg(2), {}, false});
  c.push_back({"circ3", gen_family(3, {}, FamilyVariant::circ), {}, false});
  c.push_back({"plus3", gen_family(3, {}, FamilyVariant::plus), {}, false});
  c.push_back({"mixed", parse_grammar("start S\n"
                                      "S(x1 'c' y1 'd' y2 x2) <- A(x1, x2), B(y1, y2)\n"
                                      "A('a' 'a' x1, x2 'b' 'b') <- A(x1, x2)\n"
                                      "A('a', 'b')\n"
                                      "B('c' 'c', 'd')\n"
                                      "B(x1 'c' x2, 'd' x3) <- C(x1, x2, x3)\n"
                                      "C('a', 'b', 'a' 'b')\n"),
               {}, false});
  return c;
}

}  // namespace

TEST(Classify, Terminal) {
  auto k = kind_of("start A\nA(eps)\n", "A");
  EXPECT_EQ(k.shape, NormalShape::terminal);
  EXPECT_EQ(k.terminal, -1);
  EXPECT_EQ(kind_of("start A\nA('a')\n", "A").type_number(), 1);
}

TEST(Classify, Prepend) {
  auto k = kind_of("start S\nS(x1) <- A(x1, x2)\nA('0' x1, x2) <- B(x1, x2)\nB('a', 'b')\n", "A");
  EXPECT_EQ(k.shape, NormalShape::prepend);
  EXPECT_EQ(k.slot, 0);
  EXPECT_EQ(k.type_number(), 2);
}

TEST(Classify, Append) {
  auto k = kind_of("start A\nA(x1 '0') <- B(x1)\nB('a')\n", "A");
  EXPECT_EQ(k.shape, NormalShape::append);
  EXPECT_EQ(k.slot, 0);
}

TEST(Classify, Insert) {
  auto k = kind_of("start S\nS(x) <- A(x, y)\nA(x, eps) <- A1(x)\nA1(eps)\n", "A");
  EXPECT_EQ(k.shape, NormalShape::insert);
  EXPECT_EQ(k.slot, 1);
  EXPECT_EQ(k.terminal, -1);
  auto front = kind_of("start S\nS(x) <- A(x, y)\nA('a', x) <- A1(x)\nA1(eps)\n", "A");
  EXPECT_EQ(front.shape, NormalShape::insert);
  EXPECT_EQ(front.slot, 0);
}

TEST(Classify, MergePlan) {
  auto k = kind_of("start S\nS(x1 y1 y2 x2) <- A(x1, x2), A4(y1, y2)\nA('a', 'b')\nA4('c', 'd')\n", "S");
  EXPECT_EQ(k.shape, NormalShape::merge);
  ASSERT_EQ(k.plan.size(), 1u);
  EXPECT_EQ(k.plan[0], (std::vector<VarRef>{{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
}

TEST(Classify, Rejects) {
  auto g = test::copy_grammar();
  int rejected = 0;
  for (const auto& r : g.rules())
    if (!classify_rule(g, r)) ++rejected;
  // A(eps, eps) has two components, so it is not a terminal rule either.
  EXPECT_EQ(rejected, 4);
  auto h = parse_grammar("start S\nS(x 'a' 'b') <- S(x)\nS('a')\n");
  EXPECT_FALSE(classify_rule(h, h.rules()[0]));
  auto m = parse_grammar("start S\nS(x1 'a' y1) <- A(x1), A(y1)\nA('a')\n");
  EXPECT_FALSE(classify_rule(m, m.rules()[0]));
}

TEST(IsNormalForm, ReferenceGrammars) {
  EXPECT_TRUE(is_normal_form(parse_grammar(test::read_data("copy_normal.grammar"))));
  EXPECT_FALSE(is_normal_form(test::copy_grammar()));
  EXPECT_TRUE(is_normal_form(parse_grammar("start S\nS(eps)\n")));
  EXPECT_FALSE(is_normal_form(parse_grammar("start S\nS(y x) <- A(x, y)\nA('a', x) <- B(x)\nB('b')\n")));
}

TEST(Normalize, CopyGrammarMatchesReference) {
  auto n = normalize(test::copy_grammar());
  auto text = format_grammar(n.grammar());
  // Rename fresh nonterminals to the reference spelling.
  text = std::regex_replace(text, std::regex("A__s1_0"), "A1");
  text = std::regex_replace(text, std::regex("A__s7_2"), "A2");
  text = std::regex_replace(text, std::regex("A__s7_3"), "A3");
  text = std::regex_replace(text, std::regex("A__s3_1"), "A4");
  EXPECT_TRUE(same_grammar(parse_grammar(text), parse_grammar(test::read_data("copy_normal.grammar")))) << text;
}

TEST(Normalize, CopyGrammarSnapshot) {
  EXPECT_EQ(format_grammar(normalize(test::copy_grammar()).grammar()),
            "start S\n"
            "A__s1_0(eps)\n"
            "A(x1, eps) <- A__s1_0(x1)\n"
            "A__s7_2(x1, x2 '0') <- A(x1, x2)\n"
            "A(x1 '0', x2) <- A__s7_2(x1, x2)\n"
            "A__s7_3(x1, x2 '1') <- A(x1, x2)\n"
            "A(x1 '1', x2) <- A__s7_3(x1, x2)\n"
            "A__s3_1(x1 '#', x2) <- A(x1, x2)\n"
            "S(x1 y1 y2 x2) <- A(x1, x2), A__s3_1(y1, y2)\n");
}

TEST(Normalize, PreservesLanguage) {
  for (const auto& c : nf_corpus()) {
    auto n = normalize(c.grammar);
    const int L = c.name == "plus3" || c.name == "circ3" ? 6 : 8;
    EXPECT_EQ(start_language(c.grammar, L), start_language(n.grammar(), L)) << c.name;
  }
  auto copy = test::copy_grammar();
  EXPECT_EQ(start_language(copy, 9), start_language(normalize(copy).grammar(), 9));
}

TEST(Normalize, ShapeInvariants) {
  for (const auto& c : nf_corpus()) {
    auto n = normalize(c.grammar);
    const auto& g = n.grammar();
    EXPECT_TRUE(is_normal_form(g)) << c.name;
    EXPECT_TRUE(validate(g, {true, true}).empty()) << c.name;
    EXPECT_EQ(g.dimension(), c.grammar.dimension()) << c.name;
    EXPECT_EQ(g.rank(), c.grammar.rank()) << c.name;
    for (std::size_t r = 0; r < g.rules().size(); ++r) EXPECT_TRUE(classify_rule(g, g.rules()[r])) << c.name;
    const double s = static_cast<double>(c.grammar.size());
    // C = 1 suffices across the corpus.
    EXPECT_LE(static_cast<double>(g.size()), s * s * s) << c.name;
  }
}

TEST(Normalize, FreshNames) {
  std::regex fresh("[A-Za-z0-9_]+__s[1-7]_[0-9]+");
  auto g = test::copy_grammar();
  auto n = normalize(g);
  for (std::size_t a = 0; a < n.grammar().nonterminal_count(); ++a) {
    const auto& name = n.grammar().name(static_cast<NonterminalId>(a));
    if (!g.find_nonterminal(name)) EXPECT_TRUE(std::regex_match(name, fresh)) << name;
  }
}

TEST(Normalize, Deterministic) {
  auto g = gen_family(2, {}, FamilyVariant::plus);
  EXPECT_EQ(format_grammar(normalize(g).grammar()), format_grammar(normalize(g).grammar()));
}

TEST(Normalize, AlreadyNormalUnchanged) {
  auto g = parse_grammar(test::read_data("copy_normal.grammar"));
  auto n = normalize(g);
  EXPECT_TRUE(same_grammar(g, n.grammar()));
  auto e = parse_grammar("start S\nS(eps)\n");
  EXPECT_TRUE(same_grammar(e, normalize(e).grammar()));
}

TEST(Normalize, Idempotent) {
  for (const auto& c : nf_corpus()) {
    auto once = normalize(c.grammar);
    auto twice = normalize(once.grammar());
    EXPECT_TRUE(same_grammar(once.grammar(), twice.grammar())) << c.name;
  }
}

TEST(Normalize, RejectsDeletingAndPermuting) {
  EXPECT_THROW(normalize(parse_grammar("start S\nS(x) <- B(x, y)\nB('a', 'b')\n")), GrammarError);
  EXPECT_THROW(normalize(parse_grammar("start S\nS(y x) <- A(x, y)\nA('a', 'b')\n")), GrammarError);
}

TEST(NormalGrammar, RejectsNonNormal) { EXPECT_THROW(NormalGrammar(test::copy_grammar()), GrammarError); }

TEST(ReverseIndex, CopyGrammar) {
  auto n = normalize(test::copy_grammar());
  auto a = *n.grammar().find_nonterminal("A");
  bool merge_at_first = false;
  for (const auto& occ : n.reverse_index(a)) {
    const auto& r = n.grammar().rules()[occ.rule];
    EXPECT_EQ(r.rhs[occ.position].nonterminal, a);
    if (n.kind(occ.rule).shape == NormalShape::merge && occ.position == 0) merge_at_first = true;
  }
  EXPECT_TRUE(merge_at_first);
  EXPECT_TRUE(n.reverse_index(9999).empty());
  EXPECT_TRUE(n.reverse_index(-1).empty());
}

TEST(ReverseIndex, RepeatedAtom) {
  NormalGrammar n(parse_grammar("start S\nS(x1 y1) <- A(x1), A(y1)\nA('a')\n"));
  auto a = *n.grammar().find_nonterminal("A");
  auto occ = n.reverse_index(a);
  ASSERT_EQ(occ.size(), 2u);
  EXPECT_EQ(occ[0].position, 0);
  EXPECT_EQ(occ[1].position, 1);
}
