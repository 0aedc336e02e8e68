#include "mcfl/gadgets.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mcfl/errors.hpp"

namespace mcfl {

std::string ov_hash(int i) { return "#" + std::to_string(i); }
std::string ov_bar(int i) { return "|" + std::to_string(2 * i - 1) + std::to_string(2 * i); }

namespace {

/// Calls `f` with every tuple in choices^n.
template <typename F>
void for_each_tuple(int n, int choices, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(n), 0);
  for (;;) {
    f(t);
    int i = n - 1;
    while (i >= 0 && t[i] == choices - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

}  // namespace

Grammar ov_grammar(int k) {
  if (k < 2 || k % 2) throw std::invalid_argument("k must be even and at least 2");
  const int d = k / 2;
  Grammar g;
  g.set_start(g.declare("S", 1));
  g.declare("A", d);
  g.declare("B", d);
  g.declare("C", d);
  const TerminalId zero = g.intern("0");
  const TerminalId one = g.intern("1");
  std::vector<TerminalId> hashes;
  for (int i = 1; i <= k; ++i) hashes.push_back(g.intern(ov_hash(i)));
  std::vector<TerminalId> bars;
  for (int i = 1; i <= d; ++i) bars.push_back(g.intern(ov_bar(i)));

  // any symbol or nothing, for the free growth of A and C
  std::vector<std::optional<TerminalId>> free{std::nullopt, zero, one};
  for (auto h : hashes) free.push_back(h);
  const TerminalId bit[2] = {zero, one};

  std::vector<ArgString> base;
  for (auto b : bars) base.push_back({Item::term(b)});
  g.add_rule("A", base, {});

  auto grow = [&](const std::string& nt) {
    for_each_tuple(2 * d, static_cast<int>(free.size()), [&](const std::vector<int>& t) {
      std::vector<ArgString> args;
      for (int i = 0; i < d; ++i) {
        ArgString s;
        if (free[t[2 * i]]) s.push_back(Item::term(*free[t[2 * i]]));
        s.push_back(Item::var(0, i));
        if (free[t[2 * i + 1]]) s.push_back(Item::term(*free[t[2 * i + 1]]));
        args.push_back(std::move(s));
      }
      g.add_rule(nt, std::move(args), {nt});
    });
  };
  grow("A");

  auto coordinate = [&](bool start, const std::string& from) {
    for_each_tuple(2 * d, 2, [&](const std::vector<int>& t) {
      if (std::all_of(t.begin(), t.end(), [](int x) { return x == 1; })) return;
      std::vector<ArgString> args;
      for (int i = 0; i < d; ++i) {
        ArgString s{Item::term(bit[t[2 * i]])};
        if (start) s.push_back(Item::term(hashes[2 * i]));
        s.push_back(Item::var(0, i));
        if (start) s.push_back(Item::term(hashes[2 * i + 1]));
        s.push_back(Item::term(bit[t[2 * i + 1]]));
        args.push_back(std::move(s));
      }
      g.add_rule("B", std::move(args), {from});
    });
  };
  coordinate(true, "A");
  coordinate(false, "B");

  std::vector<ArgString> close;
  for (int i = 0; i < d; ++i) close.push_back({Item::var(0, i)});
  close[0].insert(close[0].begin(), Item::term(hashes[0]));
  g.add_rule("C", close, {"B"});
  grow("C");

  ArgString all;
  for (int i = 0; i < d; ++i) all.push_back(Item::var(0, i));
  g.add_rule("S", {all}, {"C"});
  return g;
}

std::vector<std::string> ov_encode(const OVInstance& inst) {
  std::vector<std::string> w{ov_hash(1)};
  for (int i = 1; i <= inst.k; ++i) {
    const auto& set = inst.sets[i - 1];
    if (i % 2) {
      for (const auto& vec : set) {
        for (auto it = vec.rbegin(); it != vec.rend(); ++it) w.push_back(std::to_string(*it));
        w.push_back(ov_hash(i));
      }
      w.push_back(ov_bar((i + 1) / 2));
    } else {
      for (const auto& vec : set) {
        w.push_back(ov_hash(i));
        for (int c : vec) w.push_back(std::to_string(c));
      }
    }
  }
  return w;
}

bool ov_brute(const OVInstance& inst) {
  bool found = false;
  for_each_tuple(inst.k, inst.m, [&](const std::vector<int>& pick) {
    if (found) return;
    for (int c = 0; c < inst.b; ++c) {
      bool all_one = true;
      for (int i = 0; i < inst.k; ++i)
        if (!inst.sets[i][pick[i]][c]) all_one = false;
      if (all_one) return;
    }
    found = true;
  });
  return found;
}

OVInstance random_ov(int k, int m, int b, std::mt19937_64& rng) {
  OVInstance inst{k, m, b, {}};
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> set;
    for (int j = 0; j < m; ++j) {
      std::vector<int> v;
      for (int c = 0; c < b; ++c) v.push_back(coin(rng) ? 1 : 0);
      set.push_back(std::move(v));
    }
    inst.sets.push_back(std::move(set));
  }
  return inst;
}

OVInstance parse_ov_vectors(std::string_view text, int k) {
  OVInstance inst;
  inst.k = k;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::vector<int>> cur;
  auto close_set = [&]() {
    if (!cur.empty()) inst.sets.push_back(std::move(cur));
    cur.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<int> v;
    bool any = false;
    for (std::size_t c = 0; c < line.size(); ++c) {
      char ch = line[c];
      if (ch == '0' || ch == '1') {
        v.push_back(ch - '0');
        any = true;
      } else if (ch == '#') {
        break;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw ParseError(ParseError::Kind::syntax, lineno, c + 1, "expected 0 or 1");
      }
    }
    if (!any) {
      close_set();
      continue;
    }
    cur.push_back(std::move(v));
  }
  close_set();
  if (static_cast<int>(inst.sets.size()) != k)
    throw ParseError(ParseError::Kind::syntax, lineno, 1,
                     "expected " + std::to_string(k) + " sets, found " + std::to_string(inst.sets.size()));
  inst.m = static_cast<int>(inst.sets[0].size());
  inst.b = static_cast<int>(inst.sets[0][0].size());
  for (const auto& set : inst.sets) {
    if (static_cast<int>(set.size()) != inst.m) throw ParseError(ParseError::Kind::syntax, lineno, 1, "sets differ in size");
    for (const auto& v : set)
      if (static_cast<int>(v.size()) != inst.b)
        throw ParseError(ParseError::Kind::syntax, lineno, 1, "vectors differ in length");
  }
  if (inst.b == 0) throw ParseError(ParseError::Kind::syntax, lineno, 1, "empty vectors");
  return inst;
}

TriangleGadget triangle_gadget(const TriangleInstance& inst) {
  if (inst.n < 1) throw std::invalid_argument("graph must have at least one node");
  TriangleGadget out;
  Grammar& g = out.grammar;
  g.set_start(g.declare("S", 1));
  const TerminalId zero = g.intern("0");
  const TerminalId one = g.intern("1");
  g.add_rule("S", {{Item::term(zero), Item::term(one)}}, {});
  g.add_rule("S", {{Item::term(zero), Item::var(0, 0), Item::term(one)}}, {"S"});

  LabeledGraph& h = out.graph;
  out.source = h.add_node("u");
  out.target = h.add_node("v");
  auto node = [&](char kind, int i) { return h.add_node(std::string(1, kind) + std::to_string(i + 1)); };
  for (char kind : {'u', 'v', 'y', 'z'})
    for (int i = 0; i < inst.n; ++i) node(kind, i);
  const LabelId l0 = h.intern_label("0");
  const LabelId l1 = h.intern_label("1");
  h.add_edge(out.source, l0, node('u', 0));
  for (int i = 0; i + 1 < inst.n; ++i) h.add_edge(node('u', i), l0, node('u', i + 1));
  for (auto [a, b] : inst.edges)
    for (int dir = 0; dir < 2; ++dir) {
      int i = dir ? b : a;
      int j = dir ? a : b;
      h.add_edge(node('u', i), kEpsilon, node('v', j));
      h.add_edge(node('v', i), kEpsilon, node('y', j));
      h.add_edge(node('y', i), kEpsilon, node('z', j));
    }
  for (int i = 0; i + 1 < inst.n; ++i) h.add_edge(node('z', i + 1), l1, node('z', i));
  h.add_edge(node('z', 0), l1, out.target);
  return out;
}

bool triangle_brute(const TriangleInstance& inst) {
  std::set<std::pair<int, int>> adj;
  for (auto [a, b] : inst.edges) {
    adj.insert({a, b});
    adj.insert({b, a});
  }
  for (int i = 0; i < inst.n; ++i)
    for (int j = i + 1; j < inst.n; ++j)
      for (int l = j + 1; l < inst.n; ++l)
        if (adj.count({i, j}) && adj.count({j, l}) && adj.count({i, l})) return true;
  return false;
}

TriangleInstance random_graph(int n, double p, std::mt19937_64& rng) {
  TriangleInstance inst{n, {}};
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) inst.edges.push_back({i, j});
  return inst;
}

TriangleInstance parse_undirected_graph(std::string_view text, std::vector<std::string>* names) {
  TriangleInstance inst;
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> order;
  auto id = [&](const std::string& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int v = static_cast<int>(order.size());
    ids.emplace(s, v);
    order.push_back(s);
    return v;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> f;
    for (std::string x; fields >> x;) {
      if (x[0] == '#') break;
      f.push_back(x);
    }
    if (f.empty()) continue;
    if (f.size() == 1) {
      id(f[0]);
      continue;
    }
    if (f.size() != 2) throw ParseError(ParseError::Kind::syntax, lineno, 1, "expected 'a b'");
    int a = id(f[0]);
    int b = id(f[1]);
    if (a == b) continue;
    if (seen.insert({std::min(a, b), std::max(a, b)}).second) inst.edges.push_back({a, b});
  }
  inst.n = static_cast<int>(order.size());
  if (names) *names = order;
  return inst;
}

}  // namespace mcfl
