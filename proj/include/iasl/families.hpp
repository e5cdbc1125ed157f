#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/graph.hpp"

namespace iasl {

inline constexpr std::size_t kMaxConnectedFamily = 7;
inline constexpr std::size_t kMaxCompleteFamily = 5;
inline constexpr std::size_t kMaxBipartiteFamily = 8;
// Adjacency codes below use one bit per vertex pair.
inline constexpr std::size_t kMaxCodedVertices = 8;

namespace detail {

using AdjacencyCode = std::uint32_t;

constexpr std::size_t pair_bit(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j - 1) / 2 + i;
}

inline AdjacencyCode relabel(std::size_t n, AdjacencyCode code, const std::vector<std::size_t>& to) {
  AdjacencyCode out = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code >> pair_bit(i, j) & 1u) out |= AdjacencyCode{1} << pair_bit(to[i], to[j]);
  return out;
}

/// Smallest relabelled code over all vertex permutations that respect an
/// isomorphism-invariant ordering (degree, then sorted neighbour degrees).
/// Restricting to invariant-respecting permutations keeps the minimum canonical.
inline AdjacencyCode canonical_code(std::size_t n, AdjacencyCode code) {
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code >> pair_bit(i, j) & 1u) ++degree[i], ++degree[j];
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> invariant(n);
  for (std::size_t v = 0; v < n; ++v) {
    invariant[v].first = degree[v];
    for (std::size_t w = 0; w < n; ++w)
      if (w != v && (code >> pair_bit(v, w) & 1u)) invariant[v].second.push_back(degree[w]);
    std::sort(invariant[v].second.begin(), invariant[v].second.end());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return invariant[a] < invariant[b]; });

  // Cells of equal invariant occupy consecutive target positions.
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // [begin, end) into order
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && invariant[order[j]] == invariant[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  for (auto [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);

  AdjacencyCode best = ~AdjacencyCode{0};
  std::vector<std::size_t> to(n);
  auto search = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      for (std::size_t pos = 0; pos < n; ++pos) to[order[pos]] = pos;
      best = std::min(best, relabel(n, code, to));
      return;
    }
    auto [b, e] = cells[cell];
    do {
      self(self, cell + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  search(search, 0);
  return best;
}

inline bool code_connected(std::size_t n, AdjacencyCode code) {
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (std::size_t y = 0; y < n; ++y)
      if (y != x && !seen[y] && (code >> pair_bit(x, y) & 1u)) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == n;
}

inline Graph graph_from_code(std::size_t n, AdjacencyCode code) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code >> pair_bit(i, j) & 1u) edges.emplace_back(i, j);
  return Graph::from_indices(n, edges);
}

inline AdjacencyCode code_of(const Graph& g) {
  AdjacencyCode code = 0;
  for (const Edge& e : g.edges()) code |= AdjacencyCode{1} << pair_bit(e.u, e.v);
  return code;
}

/// Canonical codes of all connected graphs on exactly n vertices, sorted by
/// (edge count, code). Generated edge by edge from the empty graph, keeping
/// one representative per isomorphism class at each edge count.
inline const std::vector<AdjacencyCode>& connected_codes(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<AdjacencyCode>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const std::size_t pairs = n * (n - 1) / 2;
  std::set<AdjacencyCode> level{0};
  std::vector<AdjacencyCode> connected;
  for (std::size_t m = 0; m <= pairs; ++m) {
    std::vector<AdjacencyCode> sorted(level.begin(), level.end());
    for (AdjacencyCode c : sorted)
      if (code_connected(n, c)) connected.push_back(c);
    std::set<AdjacencyCode> next;
    for (AdjacencyCode c : sorted)
      for (std::size_t bit = 0; bit < pairs; ++bit)
        if (!(c >> bit & 1u)) next.insert(canonical_code(n, c | AdjacencyCode{1} << bit));
    level = std::move(next);
  }
  return cache.emplace(n, std::move(connected)).first->second;
}

}  // namespace detail

/// All connected graphs on exactly n vertices, one per isomorphism class.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxConnectedFamily)
    throw Error(ErrorCode::BoundExceeded, "connected graph family supports 1.." + std::to_string(kMaxConnectedFamily) +
                                              " vertices");
  std::vector<Graph> out;
  for (auto code : detail::connected_codes(n)) out.push_back(detail::graph_from_code(n, code));
  return out;
}

/// Connected graphs with 2..max_vertices vertices (no isolated vertices).
inline std::vector<Graph> connected_graphs_up_to(std::size_t max_vertices) {
  std::vector<Graph> out;
  for (std::size_t n = 2; n <= max_vertices; ++n)
    for (auto& g : connected_graphs(n)) out.push_back(std::move(g));
  return out;
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_indices(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidGraph, "a cycle needs at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_indices(n, edges);
}

/// Star with `leaves` leaves; vertex 0 is the centre.
inline Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_indices(leaves + 1, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph::from_indices(n, edges);
}

inline Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) edges.emplace_back(i, m + j);
  return Graph::from_indices(m + n, edges);
}

/// Every shipped family restricted to graphs with at most max_vertices
/// vertices, de-duplicated up to isomorphism, ordered by (vertices, edges, code).
inline std::vector<Graph> shipped_family(std::size_t max_vertices) {
  std::vector<Graph> candidates;
  for (std::size_t n = 2; n <= max_vertices; ++n) candidates.push_back(path_graph(n));
  for (std::size_t n = 3; n <= max_vertices; ++n) candidates.push_back(cycle_graph(n));
  for (std::size_t l = 1; l + 1 <= max_vertices; ++l) candidates.push_back(star_graph(l));
  for (std::size_t n = 2; n <= std::min(max_vertices, kMaxCompleteFamily); ++n) candidates.push_back(complete_graph(n));
  for (std::size_t m = 1; m <= max_vertices; ++m)
    for (std::size_t n = m; m + n <= std::min(max_vertices, kMaxBipartiteFamily); ++n)
      candidates.push_back(complete_bipartite_graph(m, n));
  for (auto& g : connected_graphs_up_to(std::min(max_vertices, kMaxConnectedFamily)))
    candidates.push_back(std::move(g));

  std::map<std::tuple<std::size_t, std::size_t, detail::AdjacencyCode>, Graph> unique;
  for (auto& g : candidates) {
    if (g.vertex_count() > kMaxCodedVertices) continue;
    auto key = std::tuple(g.vertex_count(), g.edge_count(), detail::canonical_code(g.vertex_count(), detail::code_of(g)));
    unique.try_emplace(key, detail::graph_from_code(g.vertex_count(), std::get<2>(key)));
  }
  std::vector<Graph> out;
  for (auto& [key, g] : unique) out.push_back(std::move(g));
  return out;
}

}  // namespace iasl
