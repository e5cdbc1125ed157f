#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasl/error.hpp"

namespace iasl {

inline constexpr std::size_t kDefaultCycleBound = 12;

/// Undirected edge between vertex indices, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  std::size_t other(std::size_t w) const noexcept { return w == u ? v : u; }
  auto operator<=>(const Edge&) const = default;
};

struct Bipartition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  bool operator==(const Bipartition&) const = default;
};

/// A simple cycle as a closed vertex walk v0 v1 ... v(k-1) (v0 implied at the
/// end) together with the edge ids in walk order, the last one closing the loop.
struct Cycle {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
  bool operator==(const Cycle&) const = default;
};

inline bool valid_vertex_name(std::string_view name) {
  if (name.empty() || name.front() == '#') return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ':' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '{' || c == '}' || c == ',';
  });
}

/// Simple undirected graph with opaque string vertex ids. Vertices are
/// indexed in lexicographic order of their ids and edges in lexicographic
/// order of their (smaller, larger) endpoint indices, so every traversal below
/// is deterministic. Immutable once constructed.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> vertices, std::span<const std::pair<std::string, std::string>> edges) {
    for (const auto& [a, b] : edges) {
      vertices.push_back(a);
      vertices.push_back(b);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (const auto& name : vertices)
      if (!valid_vertex_name(name)) throw Error(ErrorCode::InvalidGraph, "bad vertex id '" + name + "'");
    names_ = std::move(vertices);

    std::vector<Edge> indexed;
    indexed.reserve(edges.size());
    for (const auto& [a, b] : edges) {
      if (a == b) throw Error(ErrorCode::InvalidGraph, "self-loop at '" + a + "'");
      std::size_t x = *find_vertex(a), y = *find_vertex(b);
      indexed.push_back(Edge{std::min(x, y), std::max(x, y)});
    }
    build(std::move(indexed));
  }

  Graph(std::initializer_list<std::pair<std::string, std::string>> edges)
      : Graph({}, std::span<const std::pair<std::string, std::string>>(edges.begin(), edges.size())) {}

  /// Graph on vertices named v0, v1, ... (zero-padded so names sort numerically).
  static Graph from_indices(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> edges) {
    Graph g;
    const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
    for (std::size_t i = 0; i < n; ++i) {
      std::string digits = std::to_string(i);
      g.names_.push_back("v" + std::string(width - digits.size(), '0') + digits);
    }
    std::vector<Edge> indexed;
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) throw Error(ErrorCode::UnknownVertex, "index out of range");
      if (a == b) throw Error(ErrorCode::InvalidGraph, "self-loop");
      indexed.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    g.build(std::move(indexed));
    return g;
  }

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }

  std::optional<std::size_t> find_vertex(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  std::size_t vertex(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw Error(ErrorCode::UnknownVertex, "'" + std::string(name) + "'");
  }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_.at(id); }

  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  std::size_t edge_between(std::string_view a, std::string_view b) const {
    auto x = find_vertex(a), y = find_vertex(b);
    if (x && y)
      if (auto e = find_edge(*x, *y)) return *e;
    throw Error(ErrorCode::UnknownEdge, "'" + std::string(a) + " " + std::string(b) + "'");
  }

  bool adjacent(std::size_t a, std::size_t b) const { return find_edge(a, b).has_value(); }

  std::span<const std::size_t> neighbors(std::size_t v) const { return neighbors_.at(v); }
  /// Edge ids parallel to neighbors(v).
  std::span<const std::size_t> incident_edges(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return neighbors_.at(v).size(); }

  std::vector<std::size_t> isolated_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
      if (neighbors_[v].empty()) out.push_back(v);
    return out;
  }

  std::string edge_name(std::size_t id) const {
    const Edge& e = edge(id);
    return names_[e.u] + " " + names_[e.v];
  }

  bool operator==(const Graph& other) const { return names_ == other.names_ && edges_ == other.edges_; }

 private:
  void build(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
      throw Error(ErrorCode::InvalidGraph, "parallel edge '" + names_[dup->u] + " " + names_[dup->v] + "'");
    edges_ = std::move(edges);
    neighbors_.assign(names_.size(), {});
    incident_.assign(names_.size(), {});
    // Edges are sorted, so each adjacency list comes out sorted by neighbor
    // once the two passes below are merged.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(names_.size());
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      adj[edges_[id].u].emplace_back(edges_[id].v, id);
      adj[edges_[id].v].emplace_back(edges_[id].u, id);
    }
    for (std::size_t v = 0; v < names_.size(); ++v) {
      std::sort(adj[v].begin(), adj[v].end());
      for (auto [w, id] : adj[v]) {
        neighbors_[v].push_back(w);
        incident_[v].push_back(id);
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Two-colouring by BFS; nullopt when an odd cycle exists. Each component's
/// smallest vertex goes to `left`.
inline std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t y : g.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

/// Component index per vertex, components numbered by their smallest vertex.
inline std::vector<std::size_t> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != unset) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : g.neighbors(x))
        if (comp[y] == unset) {
          comp[y] = next;
          stack.push_back(y);
        }
    }
    ++next;
  }
  return comp;
}

inline bool is_connected(const Graph& g) {
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

/// Bridges (edges on no cycle) by Tarjan's low-link DFS, as sorted edge ids.
inline std::vector<std::size_t> cut_edges(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<std::size_t> bridges;
  std::size_t timer = 0;

  // Iterative DFS: frame = (vertex, edge used to enter it, next neighbour slot).
  struct Frame {
    std::size_t v, via, slot;
  };
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root]) continue;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, none, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.slot < nbrs.size()) {
        std::size_t w = nbrs[f.slot];
        std::size_t id = g.incident_edges(f.v)[f.slot];
        ++f.slot;
        if (id == f.via) continue;
        if (disc[w]) {
          low[f.v] = std::min(low[f.v], disc[w]);
        } else {
          disc[w] = low[w] = ++timer;
          stack.push_back({w, id, 0});
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        std::size_t parent = stack.back().v;
        low[parent] = std::min(low[parent], low[done.v]);
        if (low[done.v] > disc[parent]) bridges.push_back(done.via);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

/// True iff two neighbours of v are adjacent.
inline bool in_triangle(const Graph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "index " + std::to_string(v));
  auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (g.adjacent(nbrs[i], nbrs[j])) return true;
  return false;
}

inline bool in_triangle(const Graph& g, std::string_view v) { return in_triangle(g, g.vertex(v)); }

/// A vertex lies on a cycle iff one of its incident edges is not a bridge.
inline bool on_some_cycle(const Graph& g, std::size_t v, std::span<const std::size_t> bridges) {
  for (std::size_t id : g.incident_edges(v))
    if (!std::binary_search(bridges.begin(), bridges.end(), id)) return true;
  return false;
}

/// Every simple cycle exactly once. Each cycle starts at its smallest vertex
/// and is oriented so that its second vertex is smaller than its last.
inline std::vector<Cycle> simple_cycles(const Graph& g, std::size_t vertex_bound = kDefaultCycleBound) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_bound)
    throw Error(ErrorCode::BoundExceeded, "cycle enumeration limited to " + std::to_string(vertex_bound) +
                                              " vertices, graph has " + std::to_string(n));
  std::vector<Cycle> cycles;
  std::vector<std::size_t> path, path_edges;
  std::vector<char> on_path(n, 0);

  auto extend = [&](auto&& self, std::size_t start, std::size_t x) -> void {
    auto nbrs = g.neighbors(x);
    auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      std::size_t y = nbrs[i];
      if (y == start) {
        if (path.size() >= 3 && path[1] < path.back()) {
          Cycle c{path, path_edges};
          c.edges.push_back(ids[i]);
          cycles.push_back(std::move(c));
        }
      } else if (y > start && !on_path[y]) {
        on_path[y] = 1;
        path.push_back(y);
        path_edges.push_back(ids[i]);
        self(self, start, y);
        path.pop_back();
        path_edges.pop_back();
        on_path[y] = 0;
      }
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    path_edges.clear();
    on_path[s] = 1;
    extend(extend, s, s);
    on_path[s] = 0;
  }
  return cycles;
}

}  // namespace iasl
