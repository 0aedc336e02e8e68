#include "mcfl/engine.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "engine_state.hpp"
#include "mcfl/errors.hpp"

namespace mcfl {
namespace detail {

std::uint64_t hash_fact(NonterminalId a, const NodeId* nodes, std::size_t len) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(a);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= nodes[i] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return h ^ (h >> 29);
}

std::int64_t SolveState::find(NonterminalId a, const NodeId* key, std::size_t len) const {
  if (table.empty()) return -1;
  std::uint64_t i = hash_fact(a, key, len) & table_mask;
  while (table[i]) {
    std::uint32_t f = table[i] - 1;
    if (fact_nt[f] == a && arity(f) * 2 == len && std::memcmp(nodes(f), key, len * sizeof(NodeId)) == 0) return f;
    i = (i + 1) & table_mask;
  }
  return -1;
}

std::vector<std::vector<EdgeId>> SolveState::paths(std::uint32_t f) const {
  const Justification& j = just[f];
  switch (j.origin) {
    case Origin::initial:
      return {{j.edge}};
    case Origin::epsilon:
    case Origin::prepend:
    case Origin::append: {
      auto p = paths(j.parent);
      auto& c = p[j.slot];
      bool front = j.origin == Origin::prepend || (j.origin == Origin::epsilon && j.side == 0);
      if (front)
        c.insert(c.begin(), j.edge);
      else
        c.push_back(j.edge);
      return p;
    }
    case Origin::insert: {
      auto p = paths(j.parent);
      p.insert(p.begin() + j.slot, std::vector<EdgeId>{j.edge});
      return p;
    }
    case Origin::merge: {
      std::vector<std::vector<std::vector<EdgeId>>> kids;
      for (std::size_t c = 0; c < j.slot; ++c) kids.push_back(paths(children[j.parent + c]));
      std::vector<std::vector<EdgeId>> out;
      for (const auto& arg : plans[j.rule]) {
        std::vector<EdgeId> path;
        for (const auto& v : arg) {
          const auto& part = kids[v.atom][v.slot];
          path.insert(path.end(), part.begin(), part.end());
        }
        out.push_back(std::move(path));
      }
      return out;
    }
  }
  return {};
}

}  // namespace detail

namespace {

using detail::Justification;
using detail::Origin;

constexpr std::uint32_t kUnknown = std::numeric_limits<std::uint32_t>::max();

struct End {
  int atom;
  int slot;
  int side;
};

struct Check {
  End a;
  End b;
};

struct Step {
  int atom;
  int index = -1;  ///< join index to probe, or -1 to scan all visible facts
  End key{};
  std::vector<Check> checks;
};

struct JoinPlan {
  std::uint32_t rule;
  int pos;
  NonterminalId lhs;
  std::vector<NonterminalId> atom_nt;
  std::vector<Check> initial;
  std::vector<Step> steps;
  std::vector<std::pair<End, End>> ends;
};

struct JoinIndex {
  NonterminalId nt;
  int slot;
  int side;
  std::vector<std::vector<std::uint32_t>> by_node;
};

class Solver {
 public:
  Solver(const NormalGrammar& g, const LabeledGraph& input, const EngineConfig& cfg, detail::SolveState& st,
         EngineStats& stats)
      : g_(g), cfg_(cfg), st_(st), stats_(stats) {
    st_.graph = add_epsilon_selfloops(input);
    st_.start = g.grammar().start();
    n_ = st_.graph.node_count();
    prune_ = cfg.prune_with_plain_reachability && classify_flags(g.grammar()).non_permuting;
    if (prune_) reach_ = plain_reachability(st_.graph, 1);
    record_ = cfg.record_justifications;
    stats_.per_nonterminal.assign(g.grammar().nonterminal_count(), 0);
    stats_.nodes = n_;
    build_adjacency();
    build_rules();
    st_.table.assign(1u << 12, 0);
    st_.table_mask = st_.table.size() - 1;
  }

  void run() {
    const Grammar& gr = g_.grammar();
    for (std::size_t r = 0; r < gr.rules().size(); ++r) {
      const auto& kind = g_.kind(r);
      if (kind.shape != NormalShape::terminal) continue;
      std::uint32_t code = kind.terminal < 0 ? 0 : static_cast<std::uint32_t>(kind.terminal) + 1;
      for (EdgeId e : by_code_[code]) {
        const Edge& x = st_.graph.edges()[e];
        NodeId nodes[2] = {x.src, x.dst};
        insert(gr.rules()[r].lhs, nodes, 2, {Origin::initial, 0, 0, 0, e, static_cast<std::uint32_t>(r)});
      }
    }
    std::vector<NodeId> cur;
    for (std::uint32_t f = 0; f < st_.fact_nt.size(); ++f) {
      ++stats_.extracted;
      const NonterminalId a = st_.fact_nt[f];
      const std::size_t len = static_cast<std::size_t>(gr.arity(a)) * 2;
      cur.assign(st_.nodes(f), st_.nodes(f) + len);
      if (cfg_.target && a == st_.start && cur[0] == cfg_.target->source && cur[1] == cfg_.target->target) {
        stats_.early_exit = true;
        break;
      }
      make_visible(f);
      expand_epsilon(f, a, cur);
      extend(f, a, cur);
      insert_component(f, a, cur);
      for (std::size_t p : merge_by_nt_[a]) join(plans_[p], f);
    }
  }

 private:
  void build_adjacency() {
    const Grammar& gr = g_.grammar();
    const auto& edges = st_.graph.edges();
    code_.resize(edges.size());
    by_code_.assign(gr.terminal_count() + 1, {});
    for (EdgeId e = 0; e < edges.size(); ++e) {
      const LabelId l = edges[e].label;
      std::uint32_t c = kUnknown;
      if (l == kEpsilon) {
        c = 0;
      } else if (auto t = gr.find_terminal(st_.graph.label_name(l))) {
        c = static_cast<std::uint32_t>(*t) + 1;
      }
      code_[e] = c;
      if (c != kUnknown) by_code_[c].push_back(e);
    }
    auto csr = [&](bool incoming, std::vector<std::uint32_t>& off, std::vector<EdgeId>& list) {
      off.assign(n_ + 1, 0);
      for (EdgeId e = 0; e < edges.size(); ++e)
        if (code_[e] != kUnknown) ++off[(incoming ? edges[e].dst : edges[e].src) + 1];
      for (std::size_t v = 0; v < n_; ++v) off[v + 1] += off[v];
      list.resize(off[n_]);
      std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
      for (EdgeId e = 0; e < edges.size(); ++e)
        if (code_[e] != kUnknown) list[fill[incoming ? edges[e].dst : edges[e].src]++] = e;
      for (std::size_t v = 0; v < n_; ++v)
        std::sort(list.begin() + off[v], list.begin() + off[v + 1],
                  [&](EdgeId x, EdgeId y) { return code_[x] < code_[y]; });
    };
    csr(true, in_off_, in_list_);
    csr(false, out_off_, out_list_);
  }

  void build_rules() {
    const Grammar& gr = g_.grammar();
    const std::size_t nts = gr.nonterminal_count();
    prepend_.resize(nts);
    append_.resize(nts);
    insert_.resize(nts);
    merge_by_nt_.resize(nts);
    visible_.resize(nts);
    nt_indexes_.resize(nts);
    for (std::size_t a = 0; a < nts; ++a) {
      prepend_[a].resize(gr.arity(static_cast<NonterminalId>(a)));
      append_[a].resize(gr.arity(static_cast<NonterminalId>(a)));
    }
    if (record_) st_.plans.resize(gr.rules().size());
    for (std::size_t r = 0; r < gr.rules().size(); ++r) {
      const Rule& rule = gr.rules()[r];
      const auto& kind = g_.kind(r);
      const auto rid = static_cast<std::uint32_t>(r);
      std::uint32_t code = kind.terminal < 0 ? 0 : static_cast<std::uint32_t>(kind.terminal) + 1;
      switch (kind.shape) {
        case NormalShape::terminal:
          break;
        case NormalShape::prepend:
          prepend_[rule.rhs[0].nonterminal][kind.slot].push_back({code, rid});
          break;
        case NormalShape::append:
          append_[rule.rhs[0].nonterminal][kind.slot].push_back({code, rid});
          break;
        case NormalShape::insert:
          insert_[rule.rhs[0].nonterminal].push_back({rid, kind.slot, code});
          break;
        case NormalShape::merge:
          if (record_) st_.plans[r] = kind.plan;
          for (std::size_t pos = 0; pos < rule.rhs.size(); ++pos) {
            merge_by_nt_[rule.rhs[pos].nonterminal].push_back(plans_.size());
            plans_.push_back(build_plan(rid, rule, kind, static_cast<int>(pos)));
          }
          break;
      }
    }
    for (auto& per_nt : prepend_)
      for (auto& v : per_nt) std::sort(v.begin(), v.end());
    for (auto& per_nt : append_)
      for (auto& v : per_nt) std::sort(v.begin(), v.end());
    std::size_t rank = 1;
    for (const auto& rule : gr.rules()) rank = std::max(rank, rule.rhs.size());
    bound_.resize(rank);
  }

  JoinPlan build_plan(std::uint32_t rid, const Rule& rule, const NormalRuleKind& kind, int pos) {
    JoinPlan p;
    p.rule = rid;
    p.pos = pos;
    p.lhs = rule.lhs;
    for (const auto& a : rule.rhs) p.atom_nt.push_back(a.nonterminal);
    std::vector<Check> all;
    for (const auto& arg : kind.plan) {
      for (std::size_t q = 0; q + 1 < arg.size(); ++q)
        all.push_back({{arg[q].atom, arg[q].slot, 1}, {arg[q + 1].atom, arg[q + 1].slot, 0}});
      p.ends.push_back({{arg.front().atom, arg.front().slot, 0}, {arg.back().atom, arg.back().slot, 1}});
    }
    const int ell = static_cast<int>(rule.rhs.size());
    std::vector<bool> bound(ell, false);
    bound[pos] = true;
    for (const auto& c : all)
      if (c.a.atom == pos && c.b.atom == pos) p.initial.push_back(c);
    for (int placed = 1; placed < ell; ++placed) {
      Step s{-1, -1, {}, {}};
      std::ptrdiff_t probe = -1;
      for (std::size_t i = 0; i < all.size() && probe < 0; ++i) {
        const Check& c = all[i];
        if (bound[c.a.atom] && !bound[c.b.atom]) {
          s.atom = c.b.atom;
          s.key = c.a;
          s.index = index_for(p.atom_nt[c.b.atom], c.b.slot, c.b.side);
          probe = static_cast<std::ptrdiff_t>(i);
        } else if (bound[c.b.atom] && !bound[c.a.atom]) {
          s.atom = c.a.atom;
          s.key = c.b;
          s.index = index_for(p.atom_nt[c.a.atom], c.a.slot, c.a.side);
          probe = static_cast<std::ptrdiff_t>(i);
        }
      }
      if (probe < 0)
        for (int l = 0; l < ell; ++l)
          if (!bound[l]) {
            s.atom = l;
            break;
          }
      bound[s.atom] = true;
      for (std::size_t i = 0; i < all.size(); ++i) {
        if (static_cast<std::ptrdiff_t>(i) == probe) continue;
        const Check& c = all[i];
        bool touches = c.a.atom == s.atom || c.b.atom == s.atom;
        if (touches && bound[c.a.atom] && bound[c.b.atom]) s.checks.push_back(c);
      }
      p.steps.push_back(std::move(s));
    }
    return p;
  }

  int index_for(NonterminalId nt, int slot, int side) {
    for (int i : nt_indexes_[nt])
      if (indexes_[i].slot == slot && indexes_[i].side == side) return i;
    indexes_.push_back({nt, slot, side, std::vector<std::vector<std::uint32_t>>(n_)});
    nt_indexes_[nt].push_back(static_cast<int>(indexes_.size() - 1));
    return static_cast<int>(indexes_.size() - 1);
  }

  void make_visible(std::uint32_t f) {
    const NonterminalId a = st_.fact_nt[f];
    visible_[a].push_back(f);
    const NodeId* nodes = st_.nodes(f);
    for (int i : nt_indexes_[a]) {
      auto& ix = indexes_[i];
      ix.by_node[nodes[2 * ix.slot + ix.side]].push_back(f);
    }
  }

  void expand_epsilon(std::uint32_t f, NonterminalId a, std::vector<NodeId>& cur) {
    const std::size_t k = cur.size() / 2;
    for (std::size_t i = 0; i < k; ++i) {
      const NodeId u = cur[2 * i];
      for (std::uint32_t t = in_off_[u]; t < in_off_[u + 1] && code_[in_list_[t]] == 0; ++t) {
        const EdgeId e = in_list_[t];
        const NodeId x = st_.graph.edges()[e].src;
        if (x == u) continue;
        cur[2 * i] = x;
        insert(a, cur.data(), cur.size(), {Origin::epsilon, 0, static_cast<std::uint16_t>(i), f, e, 0});
      }
      cur[2 * i] = u;
      const NodeId v = cur[2 * i + 1];
      for (std::uint32_t t = out_off_[v]; t < out_off_[v + 1] && code_[out_list_[t]] == 0; ++t) {
        const EdgeId e = out_list_[t];
        const NodeId y = st_.graph.edges()[e].dst;
        if (y == v) continue;
        cur[2 * i + 1] = y;
        insert(a, cur.data(), cur.size(), {Origin::epsilon, 1, static_cast<std::uint16_t>(i), f, e, 0});
      }
      cur[2 * i + 1] = v;
    }
  }

  void extend(std::uint32_t f, NonterminalId a, std::vector<NodeId>& cur) {
    const Grammar& gr = g_.grammar();
    const std::size_t k = cur.size() / 2;
    for (std::size_t i = 0; i < k; ++i) {
      for (int side = 0; side < 2; ++side) {
        const auto& rules = side == 0 ? prepend_[a][i] : append_[a][i];
        if (rules.empty()) continue;
        const NodeId at = cur[2 * i + side];
        const auto& off = side == 0 ? in_off_ : out_off_;
        const auto& list = side == 0 ? in_list_ : out_list_;
        std::uint32_t t = off[at];
        const std::uint32_t t_end = off[at + 1];
        std::size_t r = 0;
        while (t < t_end && r < rules.size()) {
          const std::uint32_t ce = code_[list[t]];
          if (ce < rules[r].first) {
            ++t;
          } else if (ce > rules[r].first) {
            ++r;
          } else {
            std::size_t r_end = r;
            while (r_end < rules.size() && rules[r_end].first == ce) ++r_end;
            for (; t < t_end && code_[list[t]] == ce; ++t) {
              const EdgeId e = list[t];
              const Edge& x = st_.graph.edges()[e];
              cur[2 * i + side] = side == 0 ? x.src : x.dst;
              for (std::size_t q = r; q < r_end; ++q) {
                const std::uint32_t rid = rules[q].second;
                insert(gr.rules()[rid].lhs, cur.data(), cur.size(),
                       {side == 0 ? Origin::prepend : Origin::append, 0, static_cast<std::uint16_t>(i), f, e, rid});
              }
            }
            cur[2 * i + side] = at;
            r = r_end;
          }
        }
      }
    }
  }

  void insert_component(std::uint32_t f, NonterminalId a, const std::vector<NodeId>& cur) {
    const Grammar& gr = g_.grammar();
    for (const auto& ins : insert_[a]) {
      buf_.resize(cur.size() + 2);
      const std::size_t at = static_cast<std::size_t>(ins.slot) * 2;
      std::copy(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(at), buf_.begin());
      std::copy(cur.begin() + static_cast<std::ptrdiff_t>(at), cur.end(), buf_.begin() + static_cast<std::ptrdiff_t>(at) + 2);
      for (EdgeId e : by_code_[ins.code]) {
        const Edge& x = st_.graph.edges()[e];
        buf_[at] = x.src;
        buf_[at + 1] = x.dst;
        insert(gr.rules()[ins.rule].lhs, buf_.data(), buf_.size(),
               {Origin::insert, 0, static_cast<std::uint16_t>(ins.slot), f, e, ins.rule});
      }
    }
  }

  NodeId node(const End& e) const { return st_.arena[st_.fact_offset[bound_[e.atom]] + 2 * e.slot + e.side]; }

  bool checks_hold(const std::vector<Check>& cs) const {
    for (const auto& c : cs)
      if (node(c.a) != node(c.b)) return false;
    return true;
  }

  void join(const JoinPlan& p, std::uint32_t f) {
    bound_[p.pos] = f;
    if (!checks_hold(p.initial)) return;
    join_step(p, 0);
  }

  void join_step(const JoinPlan& p, std::size_t s) {
    if (s == p.steps.size()) {
      emit_merge(p);
      return;
    }
    const Step& step = p.steps[s];
    const auto& candidates =
        step.index >= 0 ? indexes_[step.index].by_node[node(step.key)] : visible_[p.atom_nt[step.atom]];
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      bound_[step.atom] = candidates[c];
      if (checks_hold(step.checks)) join_step(p, s + 1);
    }
  }

  void emit_merge(const JoinPlan& p) {
    buf_.resize(p.ends.size() * 2);
    for (std::size_t t = 0; t < p.ends.size(); ++t) {
      buf_[2 * t] = node(p.ends[t].first);
      buf_[2 * t + 1] = node(p.ends[t].second);
    }
    Justification j{Origin::merge, 0, static_cast<std::uint16_t>(p.atom_nt.size()), 0, 0, p.rule};
    insert(p.lhs, buf_.data(), buf_.size(), j, true);
  }

  void insert(NonterminalId a, const NodeId* nodes, std::size_t len, Justification j, bool merge = false) {
    if (prune_) {
      for (std::size_t i = 1; i + 1 < len; i += 2)
        if (!reach_.get(nodes[i], nodes[i + 1])) {
          ++stats_.pruned;
          return;
        }
    }
    if (st_.find(a, nodes, len) >= 0) return;
    if (stats_.inserted >= cfg_.fact_budget)
      throw BudgetExceeded("fact budget of " + std::to_string(cfg_.fact_budget) + " exhausted");
    const auto f = static_cast<std::uint32_t>(st_.fact_nt.size());
    st_.fact_nt.push_back(a);
    st_.fact_offset.push_back(static_cast<std::uint32_t>(st_.arena.size()));
    st_.arena.insert(st_.arena.end(), nodes, nodes + len);
    if (record_) {
      if (merge) {
        j.parent = static_cast<std::uint32_t>(st_.children.size());
        for (std::size_t c = 0; c < j.slot; ++c) st_.children.push_back(bound_[c]);
      }
      st_.just.push_back(j);
    }
    place(f);
    ++stats_.inserted;
    ++stats_.per_nonterminal[a];
    if (st_.fact_nt.size() * 2 > st_.table.size()) grow();
  }

  void place(std::uint32_t f) {
    std::uint64_t i = detail::hash_fact(st_.fact_nt[f], st_.nodes(f), st_.arity(f) * 2) & st_.table_mask;
    while (st_.table[i]) i = (i + 1) & st_.table_mask;
    st_.table[i] = f + 1;
  }

  void grow() {
    st_.table.assign(st_.table.size() * 2, 0);
    st_.table_mask = st_.table.size() - 1;
    for (std::uint32_t f = 0; f < st_.fact_nt.size(); ++f) place(f);
  }

  struct Insertion {
    std::uint32_t rule;
    int slot;
    std::uint32_t code;
  };

  const NormalGrammar& g_;
  const EngineConfig& cfg_;
  detail::SolveState& st_;
  EngineStats& stats_;
  std::size_t n_ = 0;
  bool prune_ = false;
  bool record_ = true;
  ReachMatrix reach_;
  std::vector<std::uint32_t> code_;
  std::vector<std::vector<EdgeId>> by_code_;
  std::vector<std::uint32_t> in_off_, out_off_;
  std::vector<EdgeId> in_list_, out_list_;
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> prepend_, append_;
  std::vector<std::vector<Insertion>> insert_;
  std::vector<JoinPlan> plans_;
  std::vector<std::vector<std::size_t>> merge_by_nt_;
  std::vector<std::vector<std::uint32_t>> visible_;
  std::vector<JoinIndex> indexes_;
  std::vector<std::vector<int>> nt_indexes_;
  std::vector<std::uint32_t> bound_;
  std::vector<NodeId> buf_;
};

PathWitness to_witness(const detail::SolveState& st, const std::vector<EdgeId>& path, NodeId s, NodeId t) {
  PathWitness w;
  w.source = s;
  w.target = t;
  for (EdgeId e : path) {
    const Edge& x = st.graph.edges()[e];
    w.edges.push_back({x.src, st.graph.label_name(x.label), x.dst});
  }
  return w;
}

}  // namespace

ReachResult::ReachResult() : state_(std::make_shared<detail::SolveState>()) {}

bool ReachResult::reachable(NodeId u, NodeId v) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), NodePair{u, v});
}

std::size_t ReachResult::fact_count() const { return state_->fact_nt.size(); }

FactView ReachResult::fact(std::size_t i) const {
  return {state_->fact_nt[i], std::span<const NodeId>(state_->nodes(i), state_->arity(i) * 2)};
}

std::optional<std::size_t> ReachResult::find_fact(NonterminalId a, std::span<const NodeId> nodes) const {
  auto f = state_->find(a, nodes.data(), nodes.size());
  if (f < 0) return std::nullopt;
  return static_cast<std::size_t>(f);
}

const LabeledGraph& ReachResult::solved_graph() const { return state_->graph; }

std::vector<PathWitness> ReachResult::fact_witness(std::size_t i) const {
  if (state_->just.size() <= i) throw std::logic_error("justifications were not recorded");
  auto paths = state_->paths(static_cast<std::uint32_t>(i));
  std::vector<PathWitness> out;
  const NodeId* nodes = state_->nodes(i);
  for (std::size_t c = 0; c < paths.size(); ++c) out.push_back(to_witness(*state_, paths[c], nodes[2 * c], nodes[2 * c + 1]));
  return out;
}

PathWitness ReachResult::witness(NodePair p) const {
  if (!reachable(p.source, p.target)) throw std::out_of_range("pair is not reachable");
  if (lifting_) return detail::lifted_witness(*lifting_, *state_, p);
  NodeId key[2] = {p.source, p.target};
  auto f = state_->find(state_->start, key, 2);
  return fact_witness(static_cast<std::size_t>(f)).front();
}

ReachResult solve(const NormalGrammar& g, const LabeledGraph& graph, const EngineConfig& config) {
  if (config.cycle_elimination) return solve_contracted(g, graph, config);
  ReachResult result;
  auto st = std::make_shared<detail::SolveState>();
  Solver solver(g, graph, config, *st, result.stats_);
  solver.run();
  result.stats_.original_nodes = graph.node_count();
  const NonterminalId s = g.grammar().start();
  for (std::size_t f = 0; f < st->fact_nt.size(); ++f)
    if (st->fact_nt[f] == s) result.pairs_.push_back({st->nodes(f)[0], st->nodes(f)[1]});
  std::sort(result.pairs_.begin(), result.pairs_.end());
  result.state_ = std::move(st);
  return result;
}

PathWitness extract_witness(const ReachResult& result, NodePair p) { return result.witness(p); }

bool member(const NormalGrammar& g, std::span<const std::string> w) {
  auto path = string_to_path_graph(w);
  EngineConfig cfg;
  cfg.target = NodePair{0, static_cast<NodeId>(w.size())};
  cfg.record_justifications = false;
  return solve(g, path, cfg).reachable(0, static_cast<NodeId>(w.size()));
}

std::optional<std::vector<NodePair>> merge_join(const NormalRuleKind& kind,
                                                std::span<const std::vector<NodePair>> children) {
  std::vector<NodePair> out;
  for (const auto& arg : kind.plan) {
    for (std::size_t q = 0; q + 1 < arg.size(); ++q)
      if (children[arg[q].atom][arg[q].slot].target != children[arg[q + 1].atom][arg[q + 1].slot].source)
        return std::nullopt;
    out.push_back({children[arg.front().atom][arg.front().slot].source, children[arg.back().atom][arg.back().slot].target});
  }
  return out;
}

bool passes_pruning(const ReachMatrix& reach, std::span<const NodePair> fact) {
  for (std::size_t i = 0; i + 1 < fact.size(); ++i)
    if (!reach.get(fact[i].target, fact[i + 1].source)) return false;
  return true;
}

}  // namespace mcfl
