#include "mcfl/grammar_dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "mcfl/errors.hpp"

namespace mcfl {
namespace {

enum class Tok { ident, quoted, lparen, rparen, comma, arrow, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex_line(std::string_view line, std::size_t lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '(') {
      out.push_back({Tok::lparen, "(", col});
      ++i;
    } else if (c == ')') {
      out.push_back({Tok::rparen, ")", col});
      ++i;
    } else if (c == ',') {
      out.push_back({Tok::comma, ",", col});
      ++i;
    } else if (c == '<' && i + 1 < line.size() && line[i + 1] == '-') {
      out.push_back({Tok::arrow, "<-", col});
      i += 2;
    } else if (c == '\'') {
      std::size_t j = i + 1;
      while (j < line.size() && line[j] != '\'' && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j >= line.size() || line[j] != '\'') throw ParseError(ParseError::Kind::syntax, lineno, col, "unterminated terminal");
      if (j == i + 1) throw ParseError(ParseError::Kind::syntax, lineno, col, "empty terminal");
      out.push_back({Tok::quoted, std::string(line.substr(i + 1, j - i - 1)), col});
      i = j + 1;
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else {
      throw ParseError(ParseError::Kind::syntax, lineno, col, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", line.size() + 1});
  return out;
}

class LineParser {
 public:
  LineParser(Grammar& g, std::vector<Token> toks, std::size_t lineno) : g_(g), toks_(std::move(toks)), line_(lineno) {}

  /// Returns the start name when the line is a start declaration.
  std::optional<std::pair<std::string, std::size_t>> parse() {
    if (peek().kind == Tok::end) return std::nullopt;
    if (peek().kind == Tok::ident && peek().text == "start" && toks_[1].kind == Tok::ident) {
      ++pos_;
      auto name = take(Tok::ident, "nonterminal name");
      expect_end();
      return std::make_pair(name.text, name.column);
    }
    parse_rule();
    return std::nullopt;
  }

 private:
  struct PendingItem {
    bool variable;
    std::string text;
    std::size_t column;
  };

  const Token& peek() const { return toks_[pos_]; }

  Token take(Tok kind, const char* what) {
    if (peek().kind != kind) fail(ParseError::Kind::syntax, peek().column, std::string("expected ") + what);
    return toks_[pos_++];
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail(ParseError::Kind::syntax, peek().column, "unexpected '" + peek().text + "'");
  }

  [[noreturn]] void fail(ParseError::Kind k, std::size_t col, const std::string& msg) const {
    throw ParseError(k, line_, col, msg);
  }

  NonterminalId declare(const Token& name, int arity) {
    try {
      return g_.declare(name.text, arity);
    } catch (const GrammarError& e) {
      fail(ParseError::Kind::arity_mismatch, name.column, e.what());
    }
  }

  void parse_rule() {
    Token lhs = take(Tok::ident, "nonterminal name");
    take(Tok::lparen, "'('");
    std::vector<std::vector<PendingItem>> args(1);
    bool saw_eps = false;
    std::size_t arg_col = peek().column;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::quoted) {
        args.back().push_back({false, t.text, t.column});
        ++pos_;
      } else if (t.kind == Tok::ident) {
        if (t.text == "eps")
          saw_eps = true;
        else
          args.back().push_back({true, t.text, t.column});
        ++pos_;
      } else if (t.kind == Tok::comma || t.kind == Tok::rparen) {
        if (args.back().empty() && !saw_eps) fail(ParseError::Kind::syntax, arg_col, "empty argument (write eps)");
        if (saw_eps && !args.back().empty()) fail(ParseError::Kind::syntax, arg_col, "eps mixed with symbols");
        ++pos_;
        if (t.kind == Tok::rparen) break;
        args.emplace_back();
        saw_eps = false;
        arg_col = peek().column;
      } else {
        fail(ParseError::Kind::syntax, t.column, "expected argument symbol, ',' or ')'");
      }
    }
    Rule r;
    r.lhs = declare(lhs, static_cast<int>(args.size()));
    std::unordered_map<std::string, std::pair<int, int>> vars;
    if (peek().kind == Tok::arrow) {
      ++pos_;
      for (;;) {
        Token name = take(Tok::ident, "nonterminal name");
        take(Tok::lparen, "'('");
        Atom a;
        if (peek().kind != Tok::rparen) {
          for (;;) {
            Token v = take(Tok::ident, "variable name");
            if (v.text == "eps") fail(ParseError::Kind::syntax, v.column, "eps is not a variable name");
            auto where = std::make_pair(static_cast<int>(r.rhs.size()), static_cast<int>(a.vars.size()));
            if (!vars.emplace(v.text, where).second)
              fail(ParseError::Kind::duplicate_variable, v.column, "variable " + v.text + " declared twice");
            a.vars.push_back(v.text);
            if (peek().kind == Tok::comma) {
              ++pos_;
              continue;
            }
            break;
          }
        }
        take(Tok::rparen, "')'");
        a.nonterminal = declare(name, static_cast<int>(a.vars.size()));
        r.rhs.push_back(std::move(a));
        if (peek().kind == Tok::comma) {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect_end();
    std::unordered_map<std::string, int> used;
    for (const auto& arg : args) {
      ArgString s;
      for (const auto& it : arg) {
        if (!it.variable) {
          s.push_back(Item::term(g_.intern(it.text)));
          continue;
        }
        auto v = vars.find(it.text);
        if (v == vars.end()) fail(ParseError::Kind::unknown_variable, it.column, "unknown variable " + it.text);
        if (++used[it.text] > 1) fail(ParseError::Kind::variable_reused, it.column, "variable " + it.text + " used twice");
        s.push_back(Item::var(v->second.first, v->second.second));
      }
      r.args.push_back(std::move(s));
    }
    g_.add_rule(std::move(r));
  }

  Grammar& g_;
  std::vector<Token> toks_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  Grammar g;
  std::size_t lineno = 0;
  std::size_t begin = 0;
  std::optional<std::string> start;
  std::size_t start_line = 0;
  std::size_t start_col = 0;
  while (begin <= text.size()) {
    auto end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    ++lineno;
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    LineParser p(g, lex_line(line, lineno), lineno);
    if (auto s = p.parse()) {
      if (start) throw ParseError(ParseError::Kind::syntax, lineno, s->second, "duplicate start declaration");
      start = s->first;
      start_line = lineno;
      start_col = s->second;
    }
    begin = end + 1;
  }
  if (!start) throw ParseError(ParseError::Kind::missing_start, lineno, 1, "missing start declaration");
  try {
    g.set_start(g.declare(*start, 1));
  } catch (const GrammarError& e) {
    throw ParseError(ParseError::Kind::arity_mismatch, start_line, start_col, e.what());
  }
  return g;
}

Grammar parse_grammar_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(ParseError::Kind::syntax, 0, 0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grammar(ss.str());
}

std::string format_rule(const Grammar& g, const Rule& r) {
  std::string out = g.name(r.lhs) + "(";
  for (std::size_t i = 0; i < r.args.size(); ++i) {
    if (i) out += ", ";
    if (r.args[i].empty()) out += "eps";
    for (std::size_t t = 0; t < r.args[i].size(); ++t) {
      if (t) out += ' ';
      const Item& it = r.args[i][t];
      if (it.is_variable())
        out += r.rhs[it.atom].vars[it.slot];
      else
        out += "'" + g.token(it.terminal) + "'";
    }
  }
  out += ")";
  if (!r.rhs.empty()) {
    out += " <- ";
    for (std::size_t l = 0; l < r.rhs.size(); ++l) {
      if (l) out += ", ";
      out += g.name(r.rhs[l].nonterminal) + "(";
      for (std::size_t j = 0; j < r.rhs[l].vars.size(); ++j) {
        if (j) out += ", ";
        out += r.rhs[l].vars[j];
      }
      out += ")";
    }
  }
  return out;
}

std::string format_grammar(const Grammar& g) {
  std::string out;
  if (g.has_start()) out += "start " + g.name(g.start()) + "\n";
  for (const auto& r : g.rules()) out += format_rule(g, r) + "\n";
  return out;
}

}  // namespace mcfl
