#include "mcfl/dyck.hpp"

#include <omp.h>

#include <charconv>
#include <stdexcept>

#include "mcfl/engine.hpp"

namespace mcfl {

std::string open_paren(int i) { return "op" + std::to_string(i); }
std::string close_paren(int i) { return "cp" + std::to_string(i); }
std::string open_bracket(int i) { return "ob" + std::to_string(i); }
std::string close_bracket(int i) { return "cb" + std::to_string(i); }

namespace {

Item X(int atom, int slot) { return Item::var(atom, slot); }

std::string P(int c) { return "P" + std::to_string(c); }
std::string Q(int c) { return "Q" + std::to_string(c); }

/// Rules for one bracket kind; `self` is P or Q, `other` the other one.
void add_kind(Grammar& g, int d, int pairs, FamilyVariant variant, std::string (*self)(int), std::string (*other)(int),
              std::string (*open)(int), std::string (*close)(int)) {
  for (int c = 1; c <= d; ++c) g.add_rule(self(c), std::vector<ArgString>(c), {});
  for (int c = 1; c <= d; ++c)
    for (int i = 1; i <= pairs; ++i) {
      std::vector<ArgString> args;
      for (int j = 0; j < c; ++j) args.push_back({X(0, j)});
      TerminalId o = g.intern(open(i));
      TerminalId cl = g.intern(close(i));
      args.front().insert(args.front().begin(), Item::term(o));
      args.back().push_back(Item::term(cl));
      g.add_rule(self(c), std::move(args), {self(c)});
    }
  for (int c = 1; c <= d; ++c)
    for (int a = 1; a <= d; ++a) {
      int b = c + 1 - a;
      if (b < 1 || b > d) continue;
      std::vector<ArgString> args;
      for (int j = 0; j + 1 < a; ++j) args.push_back({X(0, j)});
      args.push_back({X(0, a - 1), X(1, 0)});
      for (int j = 1; j < b; ++j) args.push_back({X(1, j)});
      g.add_rule(self(c), std::move(args), {self(a), self(b)});
    }
  if (variant != FamilyVariant::plus) return;
  for (int c = 1; c <= d; ++c) {
    for (int i = 0; i < c; ++i) {
      for (int after = 0; after < 2; ++after) {
        std::vector<ArgString> args;
        for (int j = 0; j < c; ++j) args.push_back({X(0, j)});
        if (after)
          args[i].push_back(X(1, 0));
        else
          args[i].insert(args[i].begin(), X(1, 0));
        g.add_rule(self(c), std::move(args), {self(c), "S"});
      }
      if (d >= 2) {
        std::vector<ArgString> args;
        for (int j = 0; j < c; ++j) args.push_back({X(0, j)});
        args[i] = {X(1, 0), X(0, i), X(1, 1)};
        g.add_rule(self(c), std::move(args), {self(c), other(2)});
      }
    }
    if (d >= 2) {
      std::vector<ArgString> args;
      for (int j = 0; j < c; ++j) args.push_back({X(0, j)});
      args.front().insert(args.front().begin(), X(1, 0));
      args.back().push_back(X(1, 1));
      g.add_rule(self(c), std::move(args), {self(c), self(2)});
    }
  }
}

}  // namespace

Grammar gen_dyck_cfg(int k) {
  if (k < 1) throw std::invalid_argument("need at least one parenthesis pair");
  Grammar g;
  g.set_start(g.declare("S", 1));
  g.add_rule("S", {{}}, {});
  for (int i = 1; i <= k; ++i)
    g.add_rule("S", {{Item::term(g.intern(open_paren(i))), X(0, 0), Item::term(g.intern(close_paren(i)))}}, {"S"});
  g.add_rule("S", {{X(0, 0), X(1, 0)}}, {"S", "S"});
  return g;
}

Grammar gen_family(int d, const DyckSpec& spec, FamilyVariant variant) {
  if (d < 1 || spec.parens < 1 || spec.brackets < 1) throw std::invalid_argument("dimension and pair counts must be positive");
  Grammar g;
  g.set_start(g.declare("S", 1));
  for (int c = 1; c <= d; ++c) g.declare(P(c), c);
  for (int c = 1; c <= d; ++c) g.declare(Q(c), c);
  add_kind(g, d, spec.parens, variant, P, Q, open_paren, close_paren);
  add_kind(g, d, spec.brackets, variant, Q, P, open_bracket, close_bracket);
  for (int order = 0; order < 2; ++order) {
    ArgString s;
    for (int j = 0; j < d; ++j) {
      s.push_back(X(order, j));
      s.push_back(X(1 - order, j));
    }
    g.add_rule("S", {s}, {P(d), Q(d)});
  }
  return g;
}

namespace {

/// Decodes op<i>, cp<i>, ob<i>, cb<i>: kind 0 parenthesis, 1 bracket; index; opening or not.
bool decode(const std::string& tok, const DyckSpec& spec, int& kind, int& index, bool& opening) {
  if (tok.size() < 3) return false;
  std::string_view head(tok.data(), 2);
  if (head == "op" || head == "cp")
    kind = 0;
  else if (head == "ob" || head == "cb")
    kind = 1;
  else
    return false;
  opening = tok[0] == 'o';
  if (tok[2] == '0') return false;
  auto [ptr, ec] = std::from_chars(tok.data() + 2, tok.data() + tok.size(), index);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || index < 1) return false;
  return index <= (kind == 0 ? spec.parens : spec.brackets);
}

/// Dyck words as signed indices: +i opens pair i, -i closes it.
void dyck_words(int pairs, int length, std::vector<int>& cur, std::vector<int>& stack,
                std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(cur.size());
  if (n == length) {
    out.push_back(cur);
    return;
  }
  const int open_left = (length - n - static_cast<int>(stack.size())) / 2;
  if (open_left > 0)
    for (int i = 1; i <= pairs; ++i) {
      cur.push_back(i);
      stack.push_back(i);
      dyck_words(pairs, length, cur, stack, out);
      stack.pop_back();
      cur.pop_back();
    }
  if (!stack.empty()) {
    int top = stack.back();
    cur.push_back(-top);
    stack.pop_back();
    dyck_words(pairs, length, cur, stack, out);
    stack.push_back(top);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> dyck_words(int pairs, int length) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<int> stack;
  dyck_words(pairs, length, cur, stack, out);
  return out;
}

}  // namespace

bool interleaved_oracle(std::span<const std::string> w, const DyckSpec& spec) {
  std::vector<int> stacks[2];
  for (const auto& tok : w) {
    int kind = 0;
    int index = 0;
    bool opening = false;
    if (!decode(tok, spec, kind, index, opening)) return false;
    auto& st = stacks[kind];
    if (opening) {
      st.push_back(index);
    } else {
      if (st.empty() || st.back() != index) return false;
      st.pop_back();
    }
  }
  return stacks[0].empty() && stacks[1].empty();
}

void for_each_interleaved(const DyckSpec& spec, int length,
                          const std::function<void(const std::vector<std::string>&)>& visit) {
  if (length < 0 || length % 2) return;
  std::vector<std::string> w(static_cast<std::size_t>(length));
  for (int a = 0; 2 * a <= length; ++a) {
    const int b = length / 2 - a;
    auto parens = dyck_words(spec.parens, 2 * a);
    auto brackets = dyck_words(spec.brackets, 2 * b);
    std::vector<int> pos(static_cast<std::size_t>(2 * a));
    for (int i = 0; i < 2 * a; ++i) pos[i] = i;
    for (;;) {
      std::vector<bool> is_paren(static_cast<std::size_t>(length), false);
      for (int p : pos) is_paren[p] = true;
      for (const auto& pw : parens)
        for (const auto& bw : brackets) {
          std::size_t pi = 0;
          std::size_t bi = 0;
          for (int t = 0; t < length; ++t) {
            if (is_paren[t]) {
              int v = pw[pi++];
              w[t] = v > 0 ? open_paren(v) : close_paren(-v);
            } else {
              int v = bw[bi++];
              w[t] = v > 0 ? open_bracket(v) : close_bracket(-v);
            }
          }
          visit(w);
        }
      int i = 2 * a - 1;
      while (i >= 0 && pos[i] == length - 2 * a + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < 2 * a; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
}

std::vector<std::vector<std::string>> enumerate_interleaved(const DyckSpec& spec, int length) {
  std::vector<std::vector<std::string>> out;
  for_each_interleaved(spec, length, [&](const std::vector<std::string>& w) { out.push_back(w); });
  return out;
}

std::uint64_t count_in_language(const NormalGrammar& g, const DyckSpec& spec, int length, int threads) {
  const auto universe = enumerate_interleaved(spec, length);
  const auto n = static_cast<std::int64_t>(universe.size());
  if (threads <= 0) threads = omp_get_max_threads();
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : count) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i)
    if (member(g, universe[i])) ++count;
  return count;
}

std::uint64_t count_in_language_serial(const NormalGrammar& g, const DyckSpec& spec, int length) {
  std::uint64_t count = 0;
  for_each_interleaved(spec, length, [&](const std::vector<std::string>& w) {
    if (member(g, w)) ++count;
  });
  return count;
}

}  // namespace mcfl
