#include "mcfl/oracle.hpp"

#include <algorithm>
#include <functional>

#include "mcfl/errors.hpp"

namespace mcfl {

std::size_t StringTupleHash::operator()(const StringTuple& t) const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& s : t) {
    h = (h ^ 0xff51afd7ed558ccdull) * 1099511628211ull;
    for (auto c : s) h = (h ^ static_cast<std::size_t>(c + 1)) * 1099511628211ull;
  }
  return h;
}

bool DerivedTupleSet::contains(NonterminalId a, const StringTuple& t) const {
  if (a < 0 || static_cast<std::size_t>(a) >= index_.size()) return false;
  return index_[a].count(t) > 0;
}

std::size_t DerivedTupleSet::total() const {
  std::size_t n = 0;
  for (const auto& v : tuples_) n += v.size();
  return n;
}

namespace {

std::size_t total_length(const StringTuple& t) {
  std::size_t n = 0;
  for (const auto& s : t) n += s.size();
  return n;
}

}  // namespace

DerivedTupleSet derive_oracle_impl(const Grammar& g, int max_len, std::size_t cap) {
  DerivedTupleSet out;
  const std::size_t nts = g.nonterminal_count();
  out.tuples_.resize(nts);
  out.index_.resize(nts);
  out.max_len_ = max_len;
  const auto L = static_cast<std::size_t>(std::max(max_len, 0));

  // buckets[a][len] holds indices into tuples_[a] in insertion order
  std::vector<std::vector<std::vector<std::size_t>>> buckets(nts, std::vector<std::vector<std::size_t>>(L + 1));
  std::vector<std::vector<StringTuple>> pending(nts);
  std::size_t count = 0;

  auto emit = [&](NonterminalId a, StringTuple t) {
    if (total_length(t) > L) return;
    if (!out.index_[a].insert(t).second) return;
    if (++count > cap) throw BudgetExceeded("derivation oracle exceeded " + std::to_string(cap) + " tuples");
    pending[a].push_back(std::move(t));
  };

  auto flush = [&]() {
    bool any = false;
    for (std::size_t a = 0; a < nts; ++a) {
      for (auto& t : pending[a]) {
        buckets[a][total_length(t)].push_back(out.tuples_[a].size());
        out.tuples_[a].push_back(std::move(t));
        any = true;
      }
      pending[a].clear();
    }
    return any;
  };

  for (const auto& r : g.rules()) {
    if (!r.is_basic()) continue;
    StringTuple t;
    for (const auto& s : r.args) {
      TokenString w;
      for (const auto& it : s) w.push_back(it.terminal);
      t.push_back(std::move(w));
    }
    emit(r.lhs, std::move(t));
  }

  struct RulePlan {
    const Rule* rule;
    std::size_t terminals;
    std::vector<std::vector<bool>> used;
    std::vector<bool> full;
  };
  std::vector<RulePlan> plans;
  for (const auto& r : g.rules()) {
    if (r.is_basic()) continue;
    RulePlan p{&r, r.terminal_count(), {}, {}};
    for (const auto& a : r.rhs) p.used.emplace_back(a.vars.size(), false);
    for (const auto& s : r.args)
      for (const auto& it : s)
        if (it.is_variable()) p.used[it.atom][it.slot] = true;
    for (const auto& u : p.used) p.full.push_back(std::all_of(u.begin(), u.end(), [](bool b) { return b; }));
    plans.push_back(std::move(p));
  }

  std::vector<std::size_t> old_end(nts, 0);
  std::vector<std::size_t> cur_end(nts, 0);
  while (flush()) {
    for (std::size_t a = 0; a < nts; ++a) {
      old_end[a] = cur_end[a];
      cur_end[a] = out.tuples_[a].size();
    }
    for (const auto& plan : plans) {
      const Rule& r = *plan.rule;
      if (plan.terminals > L) continue;
      const std::size_t ell = r.rhs.size();
      std::vector<const StringTuple*> chosen(ell);
      for (std::size_t p = 0; p < ell; ++p) {
        if (cur_end[r.rhs[p].nonterminal] == old_end[r.rhs[p].nonterminal]) continue;
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t l, std::size_t rem) {
          if (l == ell) {
            StringTuple t;
            for (const auto& s : r.args) {
              TokenString w;
              for (const auto& it : s) {
                if (it.is_variable()) {
                  const auto& part = (*chosen[it.atom])[it.slot];
                  w.insert(w.end(), part.begin(), part.end());
                } else {
                  w.push_back(it.terminal);
                }
              }
              t.push_back(std::move(w));
            }
            emit(r.lhs, std::move(t));
            return;
          }
          const NonterminalId b = r.rhs[l].nonterminal;
          std::size_t lo = 0;
          std::size_t hi = cur_end[b];
          if (l < p) hi = old_end[b];
          if (l == p) lo = old_end[b];
          if (lo >= hi) return;
          const std::size_t maxbucket = plan.full[l] ? rem : L;
          for (std::size_t len = 0; len <= maxbucket; ++len) {
            const auto& bucket = buckets[b][len];
            auto it = std::lower_bound(bucket.begin(), bucket.end(), lo);
            for (; it != bucket.end() && *it < hi; ++it) {
              const StringTuple& t = out.tuples_[b][*it];
              std::size_t contributed = len;
              if (!plan.full[l]) {
                contributed = 0;
                for (std::size_t j = 0; j < t.size(); ++j)
                  if (plan.used[l][j]) contributed += t[j].size();
                if (contributed > rem) continue;
              }
              chosen[l] = &t;
              rec(l + 1, rem - contributed);
            }
          }
        };
        rec(0, L - plan.terminals);
      }
    }
  }
  return out;
}

DerivedTupleSet derive_oracle(const Grammar& g, int max_total_len, const OracleOptions& options) {
  return derive_oracle_impl(g, max_total_len, options.tuple_cap);
}

bool to_terminals(const Grammar& g, std::span<const std::string> w, TokenString& out) {
  out.clear();
  for (const auto& tok : w) {
    auto t = g.find_terminal(tok);
    if (!t) return false;
    out.push_back(*t);
  }
  return true;
}

bool oracle_member(const Grammar& g, std::span<const std::string> w) {
  TokenString ids;
  if (!g.has_start() || !to_terminals(g, w, ids)) return false;
  auto set = derive_oracle(g, static_cast<int>(w.size()));
  return set.contains(g.start(), StringTuple{ids});
}

std::vector<std::vector<std::string>> oracle_strings(const Grammar& g, int max_len, const OracleOptions& options) {
  std::vector<std::vector<std::string>> out;
  if (!g.has_start()) return out;
  auto set = derive_oracle(g, max_len, options);
  for (const auto& t : set.tuples(g.start())) {
    std::vector<std::string> w;
    for (auto id : t[0]) w.push_back(g.token(id));
    out.push_back(std::move(w));
  }
  auto printed = [](const std::vector<std::string>& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + w[i];
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return printed(a) < printed(b); });
  return out;
}

}  // namespace mcfl
