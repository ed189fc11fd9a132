#pragma once

#include <queue>
#include <vector>

#include "negdep/core.hpp"

namespace negdep::dependence {

/// Dinic max-flow over an ordered field. With rational capacities the result
/// is exact; phases are bounded by the vertex count, so termination does not
/// depend on capacity values.
template <class S>
class MaxFlow {
 public:
  explicit MaxFlow(int n) : graph_(n) {}

  void add_edge(int from, int to, S cap) {
    graph_[from].push_back({to, static_cast<int>(graph_[to].size()), std::move(cap)});
    graph_[to].push_back({from, static_cast<int>(graph_[from].size()) - 1, S(0)});
  }

  S run(int source, int sink) {
    source_ = source;
    S total(0);
    while (bfs(source, sink)) {
      iter_.assign(graph_.size(), 0);
      while (true) {
        S pushed = dfs(source, sink, S(-1));
        if (pushed == S(0)) break;
        total += pushed;
      }
    }
    return total;
  }

  /// After run(): vertices reachable from the source in the residual graph
  /// (the source side of a minimum cut).
  std::vector<char> min_cut_side() const {
    std::vector<char> seen(graph_.size(), 0);
    std::queue<int> q;
    q.push(source_);
    seen[source_] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge& e : graph_[v]) {
        if (e.cap > S(0) && !seen[e.to]) {
          seen[e.to] = 1;
          q.push(e.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int rev;
    S cap;
  };

  bool bfs(int source, int sink) {
    level_.assign(graph_.size(), -1);
    std::queue<int> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Edge& e : graph_[v]) {
        if (e.cap > S(0) && level_[e.to] < 0) {
          level_[e.to] = level_[v] + 1;
          q.push(e.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  S dfs(int v, int sink, S limit) {
    if (v == sink) return limit;
    for (int& i = iter_[v]; i < static_cast<int>(graph_[v].size()); ++i) {
      Edge& e = graph_[v][i];
      if (e.cap > S(0) && level_[v] < level_[e.to]) {
        S cap = (limit < S(0) || e.cap < limit) ? e.cap : limit;
        S pushed = dfs(e.to, sink, cap);
        if (pushed > S(0)) {
          e.cap -= pushed;
          graph_[e.to][e.rev].cap += pushed;
          return pushed;
        }
      }
    }
    return S(0);
  }

  std::vector<std::vector<Edge>> graph_;
  std::vector<int> level_;
  std::vector<int> iter_;
  int source_ = 0;
};

template <class S>
struct DominanceCheck {
  bool dominates = true;
  /// When false: generating antichain of an upward-closed family that the
  /// allegedly dominated side hits more often, plus the probability excess.
  std::vector<mask_t> upset_min;
  S margin = S(0);
};

/// Decides whether hi stochastically dominates lo on the subset lattice,
/// i.e. Pr_hi[U] >= Pr_lo[U] for every upward-closed family U. Strassen's
/// theorem turns this into the feasibility of a monotone coupling, solved as
/// a max-flow; a failing instance yields a violating upset from the min cut.
template <class S>
DominanceCheck<S> stochastic_dominance(const core::Distribution<S>& hi,
                                       const core::Distribution<S>& lo) {
  require(hi.n == lo.n, Errc::dimension, "stochastic dominance requires equal ground sets");
  const S tol = scalar_traits<S>::lp_tol();

  std::vector<mask_t> supp_hi, supp_lo;
  for (mask_t m = 0; m < hi.size(); ++m)
    if (hi.pmf[m] > S(0)) supp_hi.push_back(m);
  for (mask_t m = 0; m < lo.size(); ++m)
    if (lo.pmf[m] > S(0)) supp_lo.push_back(m);

  // Nodes: 0 source, 1 sink, then lo-support, then hi-support.
  int base_lo = 2;
  int base_hi = base_lo + static_cast<int>(supp_lo.size());
  MaxFlow<S> flow(base_hi + static_cast<int>(supp_hi.size()));
  const S kInf(2);  // any cut through a pairing edge exceeds the trivial cut of 1

  for (std::size_t a = 0; a < supp_lo.size(); ++a) flow.add_edge(0, base_lo + int(a), lo.pmf[supp_lo[a]]);
  for (std::size_t b = 0; b < supp_hi.size(); ++b) flow.add_edge(base_hi + int(b), 1, hi.pmf[supp_hi[b]]);
  for (std::size_t a = 0; a < supp_lo.size(); ++a)
    for (std::size_t b = 0; b < supp_hi.size(); ++b)
      if ((supp_lo[a] & ~supp_hi[b]) == 0) flow.add_edge(base_lo + int(a), base_hi + int(b), kInf);

  S value = flow.run(0, 1);
  DominanceCheck<S> out;
  if (value >= S(1) - tol) return out;

  // The lo-support nodes on the source side of the min cut generate a
  // violating upset.
  std::vector<char> side = flow.min_cut_side();
  std::vector<mask_t> gens;
  for (std::size_t a = 0; a < supp_lo.size(); ++a)
    if (side[base_lo + int(a)]) gens.push_back(supp_lo[a]);

  // Keep the inclusion-minimal generators.
  std::vector<mask_t> minimal;
  for (mask_t g : gens) {
    bool keep = true;
    for (mask_t h : gens)
      if (h != g && (h & ~g) == 0) {
        if (h != g) {
          keep = false;
          break;
        }
      }
    if (keep) minimal.push_back(g);
  }
  // Duplicate masks cannot occur (supports are sets), so `minimal` is the
  // generating antichain.
  S pr_hi(0), pr_lo(0);
  auto in_upset = [&](mask_t m) {
    for (mask_t g : minimal)
      if ((g & ~m) == 0) return true;
    return false;
  };
  for (mask_t m = 0; m < hi.size(); ++m) {
    if (!in_upset(m)) continue;
    pr_hi += hi.pmf[m];
    pr_lo += lo.pmf[m];
  }
  out.dominates = false;
  out.upset_min = std::move(minimal);
  out.margin = pr_lo - pr_hi;
  return out;
}

}  // namespace negdep::dependence
