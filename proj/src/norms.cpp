#include "lipfree/norms.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "lipfree/error.hpp"
#include "lipfree/simplex.hpp"

namespace lipfree {

namespace {

// Shared builder for dual_norm and dist_to_subspace: maximize <mu, f> over
// the Lipschitz ball with f pinned to zero on `pinned` (always includes
// the base). Free values are split f = u - v with u, v >= 0.
SubspaceDistance lipschitz_ball_max(const FreeElement& mu,
                                    const std::vector<bool>& pinned) {
  const auto& M = *mu.space();
  const int n = M.size();

  std::vector<int> var_of(n, -1);
  std::vector<int> free_points;
  for (int i = 0; i < n; ++i)
    if (!pinned[i]) {
      var_of[i] = static_cast<int>(free_points.size());
      free_points.push_back(i);
    }
  const int k = static_cast<int>(free_points.size());

  auto make_witness = [&](const std::vector<Rat>& x) {
    std::vector<Rat> values(n, Rat(0));
    for (int i = 0; i < n; ++i)
      if (var_of[i] >= 0) values[i] = x[2 * var_of[i]] - x[2 * var_of[i] + 1];
    return LipFunction(mu.space(), std::move(values));
  };

  if (k == 0) return {Rat(0), make_witness({})};

  LinearProgram lp(2 * k);
  std::vector<Rat> objective(2 * k, Rat(0));
  for (int i = 0; i < n; ++i)
    if (var_of[i] >= 0) {
      objective[2 * var_of[i]] = mu.coeff(i);
      objective[2 * var_of[i] + 1] = -mu.coeff(i);
    }
  lp.set_objective(std::move(objective));

  // |f(x) - f(y)| <= d(x,y); pairs of pinned points impose nothing.
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (pinned[x] && pinned[y]) continue;
      std::vector<Rat> row(2 * k, Rat(0));
      if (var_of[x] >= 0) {
        row[2 * var_of[x]] = 1;
        row[2 * var_of[x] + 1] = -1;
      }
      if (var_of[y] >= 0) {
        row[2 * var_of[y]] = -1;
        row[2 * var_of[y] + 1] = 1;
      }
      lp.add_le(row, M.dist(x, y));
      for (auto& v : row) v = -v;
      lp.add_le(std::move(row), M.dist(x, y));
    }

  LpSolution sol = lp.solve();
  if (sol.status != LpStatus::Optimal)
    throw Error(ErrorKind::InvariantViolated,
                "Lipschitz ball LP must have an optimum");
  return {std::move(sol.objective), make_witness(sol.x)};
}

}  // namespace

DualNorm dual_norm_with_witness(const FreeElement& mu) {
  std::vector<bool> pinned(mu.space()->size(), false);
  pinned[mu.space()->base()] = true;
  auto r = lipschitz_ball_max(mu, pinned);
  return {std::move(r.value), std::move(r.witness)};
}

Rat dual_norm(const FreeElement& mu) {
  if (mu.is_zero()) return Rat(0);
  return dual_norm_with_witness(mu).value;
}

SubspaceDistance dist_to_subspace(const FreeElement& mu,
                                  const std::vector<int>& subset) {
  const auto& M = *mu.space();
  std::vector<bool> pinned(M.size(), false);
  for (int i : subset) {
    check_point(M, i);
    pinned[i] = true;
  }
  if (!pinned[M.base()])
    throw Error(ErrorKind::BaseNotInSubset,
                "the subset must contain the base point");
  return lipschitz_ball_max(mu, pinned);
}

namespace {

struct Arc {
  int to;
  int rev;       // index of the reverse arc in adj[to]
  Rat cap;       // residual capacity
  Rat cost;
  bool forward;  // true for an original source -> sink arc
  int src_point = -1, dst_point = -1;
};

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(nodes) {}

  void add_arc(int from, int to, Rat cap, Rat cost, int sp = -1, int dp = -1) {
    adj_[from].push_back({to, static_cast<int>(adj_[to].size()), std::move(cap),
                          cost, true, sp, dp});
    adj_[to].push_back({from, static_cast<int>(adj_[from].size()) - 1, Rat(0),
                        Rat(-cost), false, sp, dp});
  }

  // Bellman-Ford over the residual graph; deterministic tie handling via
  // strict improvement in fixed arc order.
  bool shortest_path(int src, int snk, std::vector<std::pair<int, int>>& pred) {
    const int n = static_cast<int>(adj_.size());
    std::vector<std::optional<Rat>> dist(n);
    dist[src] = Rat(0);
    pred.assign(n, {-1, -1});
    bool changed = true;
    for (int pass = 0; pass <= n && changed; ++pass) {
      changed = false;
      for (int u = 0; u < n; ++u) {
        if (!dist[u]) continue;
        for (int ai = 0; ai < static_cast<int>(adj_[u].size()); ++ai) {
          const Arc& a = adj_[u][ai];
          if (a.cap == 0) continue;
          Rat cand = *dist[u] + a.cost;
          if (!dist[a.to] || cand < *dist[a.to]) {
            dist[a.to] = std::move(cand);
            pred[a.to] = {u, ai};
            changed = true;
          }
        }
      }
    }
    if (changed)
      throw Error(ErrorKind::InvariantViolated,
                  "negative cycle in transport residual graph");
    return dist[snk].has_value();
  }

  void augment(int src, int snk, const std::vector<std::pair<int, int>>& pred) {
    Rat delta;
    bool first = true;
    for (int v = snk; v != src;) {
      auto [u, ai] = pred[v];
      const Arc& a = adj_[u][ai];
      if (first || a.cap < delta) delta = a.cap;
      first = false;
      v = u;
    }
    for (int v = snk; v != src;) {
      auto [u, ai] = pred[v];
      Arc& a = adj_[u][ai];
      a.cap -= delta;
      adj_[a.to][a.rev].cap += delta;
      v = u;
    }
  }

  // Net flow shipped on the original (forward) arcs, keyed by point pair.
  std::vector<std::pair<PointPair, Rat>> forward_flows() const {
    std::vector<std::pair<PointPair, Rat>> out;
    for (const auto& arcs : adj_)
      for (const Arc& a : arcs)
        if (!a.forward && a.src_point >= 0 && a.cap > 0)
          out.push_back({{a.src_point, a.dst_point}, a.cap});
    return out;
  }

 private:
  std::vector<std::vector<Arc>> adj_;
};

}  // namespace

PrimalNorm primal_norm(const FreeElement& mu) {
  const auto& M = *mu.space();
  const int n = M.size();
  const int base = M.base();

  // Balance: the base absorbs whatever the coefficients do not cancel.
  std::vector<Rat> balance(n, Rat(0));
  Rat total(0);
  for (int i = 0; i < n; ++i) {
    balance[i] = mu.coeff(i);
    total += mu.coeff(i);
  }
  balance[base] = -total;

  std::vector<int> sources, sinks;
  Rat supply(0);
  for (int i = 0; i < n; ++i) {
    if (balance[i] > 0) {
      sources.push_back(i);
      supply += balance[i];
    } else if (balance[i] < 0) {
      sinks.push_back(i);
    }
  }
  if (sources.empty()) return {Rat(0), {}};

  const int SRC = n, SNK = n + 1;
  FlowNetwork net(n + 2);
  for (int s : sources) net.add_arc(SRC, s, balance[s], Rat(0));
  for (int t : sinks) net.add_arc(t, SNK, -balance[t], Rat(0));
  // Direct shipping suffices: the triangle inequality makes relays
  // never cheaper.
  for (int s : sources)
    for (int t : sinks) net.add_arc(s, t, supply, M.dist(s, t), s, t);

  std::vector<std::pair<int, int>> pred;
  while (net.shortest_path(SRC, SNK, pred)) net.augment(SRC, SNK, pred);

  Representation rep;
  Rat value(0);
  for (auto& [pair, flow] : net.forward_flows()) {
    Rat weight = flow * M.dist(pair.x, pair.y);
    value += weight;
    rep.terms.push_back({std::move(weight), pair});
  }
  std::sort(rep.terms.begin(), rep.terms.end(), [](const auto& a, const auto& b) {
    return a.pair.x != b.pair.x ? a.pair.x < b.pair.x : a.pair.y < b.pair.y;
  });
  return {std::move(value), std::move(rep)};
}

}  // namespace lipfree
