#include "freelip/kr_solver.hpp"

#include <deque>
#include <stdexcept>
#include <vector>

#include "freelip/errors.hpp"

namespace freelip {

namespace {

struct BasicArc {
  int from;
  int to;
  Rational flow;
};

// Primal network simplex on the complete directed graph over the points,
// arc costs d(x,y), node balances given by the element's weights with the
// base absorbing the total. The basis is a spanning tree; entering and
// leaving arcs follow Bland's rule with ties broken by lowest pair index
// x*n + y, which makes every solve deterministic.
class NetworkSimplex {
 public:
  NetworkSimplex(const FiniteMetricSpace& space, std::vector<Rational> supply,
                 const std::set<std::pair<int, int>>& excluded)
      : space_(space),
        n_(space.size()),
        supply_(std::move(supply)),
        excluded_(excluded) {}

  // Returns the basic arcs at optimality plus the optimal node potentials
  // normalized to zero at the base.
  std::pair<std::vector<BasicArc>, std::vector<Rational>> solve() {
    build_initial_basis();
    // Finite bound on pivots, far above anything Bland's rule can need;
    // exceeding it means a bug, not a hard instance.
    const long limit = 1000L * n_ * n_ * n_ + 10000;
    for (long step = 0; step < limit; ++step) {
      compute_potentials();
      auto entering = find_entering();
      if (!entering) {
        return {basis_, potential_};
      }
      pivot(*entering);
    }
    throw std::logic_error("network simplex failed to terminate");
  }

 private:
  bool arc_excluded(int x, int y) const {
    return excluded_.count({x, y}) > 0;
  }

  // Star tree through the base. When an excluded arc touches the base, the
  // orphaned endpoint hangs off the lowest other node instead. Flows are
  // read off the tree by leaf elimination and each edge is oriented so its
  // flow is nonnegative.
  void build_initial_basis() {
    const int base = space_.base();
    int orphan = -1;
    for (const auto& [x, y] : excluded_) {
      if (x == base) orphan = y;
      if (y == base) orphan = x;
    }
    std::vector<std::pair<int, int>> edges;  // undirected tree edges
    for (int x = 0; x < n_; ++x) {
      if (x == base || x == orphan) continue;
      edges.emplace_back(x, base);
    }
    if (orphan >= 0) {
      int anchor = -1;
      for (int r = 0; r < n_; ++r) {
        if (r != base && r != orphan) {
          anchor = r;
          break;
        }
      }
      if (anchor < 0) {
        throw std::logic_error(
            "cannot exclude the only arc pair of a two-point space");
      }
      edges.emplace_back(orphan, anchor);
    }

    std::vector<std::vector<std::pair<int, int>>> nbr(n_);  // (other, edge id)
    std::vector<int> degree(n_, 0);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      auto [a, b] = edges[e];
      nbr[a].emplace_back(b, e);
      nbr[b].emplace_back(a, e);
      ++degree[a];
      ++degree[b];
    }

    std::vector<Rational> net = supply_;
    std::vector<bool> done_node(n_, false), done_edge(edges.size(), false);
    std::deque<int> leaves;
    for (int x = 0; x < n_; ++x) {
      if (x != base && degree[x] == 1) leaves.push_back(x);
    }
    basis_.clear();
    while (!leaves.empty()) {
      int x = leaves.front();
      leaves.pop_front();
      if (done_node[x] || x == base) continue;
      done_node[x] = true;
      for (auto [other, e] : nbr[x]) {
        if (done_edge[e]) continue;
        done_edge[e] = true;
        if (net[x] >= 0) {
          basis_.push_back({x, other, net[x]});
        } else {
          basis_.push_back({other, x, -net[x]});
        }
        net[other] += net[x];
        if (--degree[other] == 1 && other != base) leaves.push_back(other);
      }
    }
  }

  void compute_potentials() {
    potential_.assign(n_, Rational(0));
    std::vector<std::vector<int>> adj(n_);
    for (int b = 0; b < static_cast<int>(basis_.size()); ++b) {
      adj[basis_[b].from].push_back(b);
      adj[basis_[b].to].push_back(b);
    }
    std::vector<bool> known(n_, false);
    std::deque<int> queue{space_.base()};
    known[space_.base()] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int b : adj[x]) {
        const auto& arc = basis_[b];
        int other = arc.from == x ? arc.to : arc.from;
        if (known[other]) continue;
        // basic arcs have zero reduced cost: pi[from] - pi[to] = cost
        if (arc.from == other) {
          potential_[other] = space_.dist(arc.from, arc.to) + potential_[x];
        } else {
          potential_[other] = potential_[x] - space_.dist(arc.from, arc.to);
        }
        known[other] = true;
        queue.push_back(other);
      }
    }
  }

  std::optional<std::pair<int, int>> find_entering() const {
    for (int x = 0; x < n_; ++x) {
      for (int y = 0; y < n_; ++y) {
        if (x == y || arc_excluded(x, y)) continue;
        if (space_.dist(x, y) - potential_[x] + potential_[y] < 0) {
          return std::make_pair(x, y);
        }
      }
    }
    return std::nullopt;
  }

  void pivot(std::pair<int, int> entering) {
    auto [u, v] = entering;

    // Tree path from v back to u; together with the entering arc it is the
    // unique basis cycle, traversed in the entering arc's direction.
    std::vector<int> parent_node(n_, -1), parent_arc(n_, -1);
    std::vector<std::vector<int>> adj(n_);
    for (int b = 0; b < static_cast<int>(basis_.size()); ++b) {
      adj[basis_[b].from].push_back(b);
      adj[basis_[b].to].push_back(b);
    }
    std::deque<int> queue{u};
    std::vector<bool> seen(n_, false);
    seen[u] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int b : adj[x]) {
        const auto& arc = basis_[b];
        int other = arc.from == x ? arc.to : arc.from;
        if (seen[other]) continue;
        seen[other] = true;
        parent_node[other] = x;
        parent_arc[other] = b;
        queue.push_back(other);
      }
    }

    // Backward arcs (traversed against their direction) limit the push.
    std::optional<Rational> theta;
    int leaving = -1;
    long leaving_id = 0;
    std::vector<std::pair<int, bool>> cycle;  // (basis index, forward?)
    for (int w = v; w != u; w = parent_node[w]) {
      int b = parent_arc[w];
      const auto& arc = basis_[b];
      // traversal goes w -> parent_node[w]; the arc is forward iff it
      // points the same way
      bool forward = arc.from == w;
      cycle.emplace_back(b, forward);
      if (!forward) {
        long id = static_cast<long>(arc.from) * n_ + arc.to;
        if (!theta || arc.flow < *theta ||
            (arc.flow == *theta && id < leaving_id)) {
          theta = arc.flow;
          leaving = b;
          leaving_id = id;
        }
      }
    }
    if (!theta) {
      // A negative all-forward cycle is impossible with metric costs.
      throw std::logic_error("network simplex: unbounded pivot");
    }

    for (auto [b, forward] : cycle) {
      if (forward) {
        basis_[b].flow += *theta;
      } else {
        basis_[b].flow -= *theta;
      }
    }
    basis_[leaving] = {u, v, *theta};
  }

  const FiniteMetricSpace& space_;
  int n_;
  std::vector<Rational> supply_;
  const std::set<std::pair<int, int>>& excluded_;
  std::vector<BasicArc> basis_;
  std::vector<Rational> potential_;
};

NormSolution solve(const FreeElement& m,
                   const std::set<std::pair<int, int>>& excluded) {
  const auto& space = *m.space();
  if (m.is_zero()) {
    return {Rational(0), {}, LipschitzFunction::zero(m.space())};
  }

  std::vector<Rational> supply(space.size(), Rational(0));
  Rational total = 0;
  for (const auto& [point, w] : m.weights()) {
    supply[point] = w;
    total += w;
  }
  supply[space.base()] -= total;

  NetworkSimplex simplex(space, std::move(supply), excluded);
  auto [basis, potential] = simplex.solve();

  NormSolution out{Rational(0), {}, LipschitzFunction::from_values(
                                        m.space(), std::move(potential))};
  for (const auto& arc : basis) {
    if (arc.flow > 0) {
      out.flow[{arc.from, arc.to}] = arc.flow;
      out.value += arc.flow * space.dist(arc.from, arc.to);
    }
  }
  return out;
}

}  // namespace

NormSolution free_norm(const FreeElement& m) { return solve(m, {}); }

NormSolution free_norm_excluding(
    const FreeElement& m, const std::set<std::pair<int, int>>& excluded) {
  return solve(m, excluded);
}

bool verify_solution(const FreeElement& m, const NormSolution& s) {
  if (!(m.space() == s.witness.space() || *m.space() == *s.witness.space())) {
    throw SpaceMismatch("verify_solution: solution over a different space");
  }
  const auto& space = *m.space();

  // value = sum a_xy d(x,y) over a strictly positive flow
  Rational cost = 0;
  for (const auto& [pair, a] : s.flow) {
    auto [x, y] = pair;
    if (x < 0 || y < 0 || x >= space.size() || y >= space.size() || x == y) {
      return false;
    }
    if (a <= 0) return false;
    cost += a * space.dist(x, y);
  }
  if (cost != s.value) return false;

  // divergence(a) = m with the base absorbing the imbalance
  std::map<int, Rational> div;
  for (const auto& [pair, a] : s.flow) {
    div[pair.first] += a;
    div[pair.second] -= a;
  }
  if (!(FreeElement::from_weights(m.space(), div) == m)) return false;

  // dual feasibility and optimality
  if (lip_norm(s.witness) > 1) return false;
  if (pairing(s.witness, m) != s.value) return false;

  // complementary slackness on every atom
  for (const auto& [pair, a] : s.flow) {
    auto [x, y] = pair;
    if (s.witness.value(x) - s.witness.value(y) != space.dist(x, y)) {
      return false;
    }
  }
  return true;
}

}  // namespace freelip
