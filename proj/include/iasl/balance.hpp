#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

struct CycleSignSummary {
  std::vector<std::size_t> cycle;
  std::size_t negative_edge_count = 0;
  Sign sign_product = Sign::Positive;
};

inline std::size_t negative_edge_count(const Cycle& c, std::span<const Sign> signs) {
  std::size_t count = 0;
  for (std::size_t id : c.edges) count += signs[id] == Sign::Negative;
  return count;
}

/// Cycle-by-cycle balance over a precomputed cycle list; stops at the first
/// cycle with an odd number of negative edges.
inline bool all_cycles_balanced(std::span<const Cycle> cycles, std::span<const Sign> signs) {
  for (const Cycle& c : cycles)
    if (negative_edge_count(c, signs) % 2 == 1) return false;
  return true;
}

struct OracleBalance {
  bool balanced = true;
  std::vector<CycleSignSummary> cycles;
};

/// Balance by definition: every simple cycle carries an even number of
/// negative edges. Acyclic graphs are balanced.
inline OracleBalance is_balanced_oracle(const Graph& g, std::span<const Sign> signs,
                                        std::size_t cycle_bound = kDefaultCycleBound) {
  OracleBalance out;
  for (Cycle& c : simple_cycles(g, cycle_bound)) {
    std::size_t negatives = negative_edge_count(c, signs);
    Sign product = negatives % 2 == 0 ? Sign::Positive : Sign::Negative;
    if (product == Sign::Negative) out.balanced = false;
    out.cycles.push_back({std::move(c.vertices), negatives, product});
  }
  return out;
}

inline OracleBalance is_balanced_oracle(const SignedLabeledGraph& s, std::size_t cycle_bound = kDefaultCycleBound) {
  return is_balanced_oracle(s.graph(), s.signs(), cycle_bound);
}

struct FastBalance {
  bool balanced = true;
  // Two camps with every negative edge crossing and every positive edge inside a camp.
  std::optional<Bipartition> camps;
};

/// Balance via camp propagation: positive edges keep the camp, negative edges
/// switch it; a contradiction means some cycle has an odd negative count.
inline FastBalance is_balanced_fast(const Graph& g, std::span<const Sign> signs) {
  const std::size_t n = g.vertex_count();
  std::vector<signed char> camp(n, -1);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t root = 0; root < n; ++root) {
    if (camp[root] != -1) continue;
    camp[root] = 0;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      auto nbrs = g.neighbors(x);
      auto ids = g.incident_edges(x);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        signed char want = static_cast<signed char>(camp[x] ^ (signs[ids[i]] == Sign::Negative ? 1 : 0));
        if (camp[nbrs[i]] == -1) {
          camp[nbrs[i]] = want;
          queue.push_back(nbrs[i]);
        } else if (camp[nbrs[i]] != want) {
          return {false, std::nullopt};
        }
      }
    }
  }
  Bipartition camps;
  for (std::size_t v = 0; v < n; ++v) (camp[v] == 0 ? camps.left : camps.right).push_back(v);
  return {true, std::move(camps)};
}

inline FastBalance is_balanced_fast(const SignedLabeledGraph& s) { return is_balanced_fast(s.graph(), s.signs()); }

struct Clusterability {
  bool clusterable = true;
  // Components of the positive-edge subgraph, each sorted, ordered by smallest vertex.
  std::vector<std::vector<std::size_t>> clusters;
  // On failure: a cycle whose only negative edge is the closing one.
  std::optional<Cycle> violating_cycle;
};

/// Clusterable iff no negative edge joins two vertices of the same positive
/// component, i.e. no cycle has exactly one negative edge.
inline Clusterability is_clusterable(const Graph& g, std::span<const Sign> signs) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cluster(n, unset);
  Clusterability out;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (cluster[root] != unset) continue;
    cluster[root] = out.clusters.size();
    out.clusters.push_back({});
    stack.assign(1, root);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      out.clusters.back().push_back(x);
      auto nbrs = g.neighbors(x);
      auto ids = g.incident_edges(x);
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (signs[ids[i]] == Sign::Positive && cluster[nbrs[i]] == unset) {
          cluster[nbrs[i]] = cluster[root];
          stack.push_back(nbrs[i]);
        }
    }
    std::sort(out.clusters.back().begin(), out.clusters.back().end());
  }

  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (signs[id] != Sign::Negative || cluster[e.u] != cluster[e.v]) continue;
    out.clusterable = false;
    // Shortest positive path u -> v closes with the negative edge into a
    // simple cycle (length >= 3 since the graph has no parallel edges).
    std::vector<std::size_t> parent(n, unset), parent_edge(n, unset);
    std::deque<std::size_t> queue{e.u};
    parent[e.u] = e.u;
    while (!queue.empty() && parent[e.v] == unset) {
      std::size_t x = queue.front();
      queue.pop_front();
      auto nbrs = g.neighbors(x);
      auto ids = g.incident_edges(x);
      for (std::size_t i = 0; i < nbrs.size(); ++i)
        if (signs[ids[i]] == Sign::Positive && parent[nbrs[i]] == unset) {
          parent[nbrs[i]] = x;
          parent_edge[nbrs[i]] = ids[i];
          queue.push_back(nbrs[i]);
        }
    }
    Cycle c;
    for (std::size_t x = e.v; x != e.u; x = parent[x]) {
      c.vertices.push_back(x);
      c.edges.push_back(parent_edge[x]);
    }
    c.vertices.push_back(e.u);
    std::reverse(c.vertices.begin(), c.vertices.end());
    std::reverse(c.edges.begin(), c.edges.end());
    c.edges.push_back(id);
    out.violating_cycle = std::move(c);
    break;
  }
  return out;
}

inline Clusterability is_clusterable(const SignedLabeledGraph& s) { return is_clusterable(s.graph(), s.signs()); }

}  // namespace iasl
