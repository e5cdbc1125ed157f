#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasl/graph.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

enum class LabelSource {
  Carried,            // element of the original graph, label unchanged
  SumsetOfEndpoints,  // new edge, label f(u) + f(w)
  InheritedFromEdge,  // new vertex replacing an edge, label of that edge
};

constexpr std::string_view to_string(LabelSource s) {
  switch (s) {
    case LabelSource::Carried: return "carried";
    case LabelSource::SumsetOfEndpoints: return "sumset-of-endpoints";
    case LabelSource::InheritedFromEdge: return "inherited-from-edge";
  }
  return "unknown";
}

struct InducedLabelNote {
  std::string element;  // "u" for a vertex, "u v" for an edge
  bool is_edge = false;
  LabelSource source = LabelSource::Carried;
  std::optional<std::string> origin;  // the replaced edge, for inherited labels
};

struct Provenance {
  std::vector<std::string> added_vertices;
  std::vector<std::string> removed_vertices;
  std::vector<std::pair<std::string, std::string>> added_edges;
  std::vector<std::pair<std::string, std::string>> removed_edges;
};

struct TransformOutcome {
  SignedLabeledGraph result;
  Provenance provenance;
  std::vector<InducedLabelNote> notes;
  // Admissibility of the induced labeling; new sumset edges may break it.
  AiaslReport admissibility;
  // Only set by spanned_subgraph.
  std::size_t removed_negative_edges = 0;
};

namespace detail {

using NamedEdge = std::pair<std::string, std::string>;

inline NamedEdge named(const Graph& g, std::size_t id) { return {g.name(g.edge(id).u), g.name(g.edge(id).v)}; }

/// Rebuilds a signed labeled graph from names and a name -> label lookup, then
/// fills the induced-label notes: anything in `fresh_edges` or
/// `fresh_vertices` gets the given source, everything else is carried.
inline TransformOutcome rebuild(const SignedLabeledGraph& source, std::vector<std::string> vertices,
                                const std::vector<NamedEdge>& edges, const std::vector<IntegerSet>& labels,
                                Provenance provenance,
                                const std::vector<std::pair<std::string, std::string>>& inherited = {}) {
  auto g = std::make_shared<const Graph>(vertices, edges);
  // Graph sorts its vertices; reorder labels to match.
  std::vector<IntegerSet> ordered;
  ordered.reserve(vertices.size());
  for (const auto& name : g->names()) {
    auto at = std::find(vertices.begin(), vertices.end(), name) - vertices.begin();
    ordered.push_back(labels[static_cast<std::size_t>(at)]);
  }

  TransformOutcome out{derive(g, std::move(ordered), source.universe_max(), {source.strict_universe()}),
                       std::move(provenance), {}, {}, 0};
  const auto& added_v = out.provenance.added_vertices;
  const auto& added_e = out.provenance.added_edges;
  for (const auto& name : g->names()) {
    InducedLabelNote note{name, false, LabelSource::Carried, std::nullopt};
    if (std::find(added_v.begin(), added_v.end(), name) != added_v.end()) {
      note.source = LabelSource::InheritedFromEdge;
      for (const auto& [vertex, edge] : inherited)
        if (vertex == name) note.origin = edge;
    }
    out.notes.push_back(std::move(note));
  }
  for (std::size_t id = 0; id < g->edge_count(); ++id) {
    NamedEdge e = named(*g, id);
    bool fresh = std::any_of(added_e.begin(), added_e.end(), [&](const NamedEdge& a) {
      return a == e || (a.first == e.second && a.second == e.first);
    });
    out.notes.push_back({e.first + " " + e.second, true, fresh ? LabelSource::SumsetOfEndpoints : LabelSource::Carried,
                         std::nullopt});
  }
  out.admissibility = validate_aiasl(out.result);
  return out;
}

inline std::vector<std::string> names_except(const Graph& g, std::size_t skip) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != skip) out.push_back(g.name(v));
  return out;
}

inline std::vector<IntegerSet> labels_except(const SignedLabeledGraph& s, std::size_t skip) {
  std::vector<IntegerSet> out;
  for (std::size_t v = 0; v < s.graph().vertex_count(); ++v)
    if (v != skip) out.push_back(s.label(v));
  return out;
}

}  // namespace detail

/// Sigma - v: v and its incident edges go, everything else keeps its label.
inline TransformOutcome delete_vertex(const SignedLabeledGraph& s, std::string_view vertex) {
  const Graph& g = s.graph();
  const std::size_t v = g.vertex(vertex);
  Provenance prov;
  prov.removed_vertices.push_back(g.name(v));
  std::vector<detail::NamedEdge> edges;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    (e.u == v || e.v == v ? prov.removed_edges : edges).push_back(detail::named(g, id));
  }
  return detail::rebuild(s, detail::names_except(g, v), edges, detail::labels_except(s, v), std::move(prov));
}

/// Signature-preserving spanning subgraph keeping exactly `keep_edges`.
/// Reports how many negative edges were dropped.
inline TransformOutcome spanned_subgraph(const SignedLabeledGraph& s,
                                         std::span<const std::pair<std::string, std::string>> keep_edges) {
  const Graph& g = s.graph();
  std::vector<char> keep(g.edge_count(), 0);
  for (const auto& [a, b] : keep_edges) keep[g.edge_between(a, b)] = 1;
  Provenance prov;
  std::vector<detail::NamedEdge> edges;
  std::size_t removed_negative = 0;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    if (keep[id]) {
      edges.push_back(detail::named(g, id));
    } else {
      prov.removed_edges.push_back(detail::named(g, id));
      removed_negative += s.sign(id) == Sign::Negative;
    }
  }
  std::vector<IntegerSet> labels(s.vertex_labels().begin(), s.vertex_labels().end());
  auto out = detail::rebuild(s, g.names(), edges, labels, std::move(prov));
  out.removed_negative_edges = removed_negative;
  return out;
}

/// Default id for the vertex subdividing u v: "u~v", with a numeric suffix if taken.
inline std::string subdivision_vertex_name(const Graph& g, std::string_view u, std::string_view v) {
  std::string base = std::string(u) + "~" + std::string(v);
  std::string name = base;
  for (int i = 2; g.find_vertex(name); ++i) name = base + "~" + std::to_string(i);
  return name;
}

/// Replaces edge u v by a vertex w labeled f+(uv) and edges u w, w v.
inline TransformOutcome subdivide_edge(const SignedLabeledGraph& s, std::string_view u, std::string_view v,
                                       std::optional<std::string> new_vertex = std::nullopt) {
  const Graph& g = s.graph();
  const std::size_t target = g.edge_between(u, v);
  const IntegerSet& inherited = s.edge_label(target);
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    if (s.label(x) == inherited)
      throw Error(ErrorCode::InjectivityCollision,
                  "label " + to_string(inherited) + " of edge " + g.edge_name(target) + " already labels '" +
                      g.name(x) + "'");
  const Edge& e = g.edge(target);
  std::string w = new_vertex ? *new_vertex : subdivision_vertex_name(g, g.name(e.u), g.name(e.v));
  if (g.find_vertex(w)) throw Error(ErrorCode::InvalidGraph, "vertex '" + w + "' already exists");

  Provenance prov;
  prov.added_vertices.push_back(w);
  prov.removed_edges.push_back(detail::named(g, target));
  prov.added_edges.push_back({g.name(e.u), w});
  prov.added_edges.push_back({w, g.name(e.v)});

  std::vector<std::string> vertices = g.names();
  std::vector<IntegerSet> labels(s.vertex_labels().begin(), s.vertex_labels().end());
  vertices.push_back(w);
  labels.push_back(inherited);
  std::vector<detail::NamedEdge> edges;
  for (std::size_t id = 0; id < g.edge_count(); ++id)
    if (id != target) edges.push_back(detail::named(g, id));
  edges.insert(edges.end(), prov.added_edges.begin(), prov.added_edges.end());
  return detail::rebuild(s, std::move(vertices), edges, labels, std::move(prov), {{w, g.edge_name(target)}});
}

/// Removes a triangle-free degree-2 vertex v and joins its neighbours.
inline TransformOutcome elementary_transformation(const SignedLabeledGraph& s, std::string_view vertex) {
  const Graph& g = s.graph();
  const std::size_t v = g.vertex(vertex);
  if (g.degree(v) != 2)
    throw Error(ErrorCode::DegreeNotTwo, "'" + g.name(v) + "' has degree " + std::to_string(g.degree(v)));
  if (in_triangle(g, v)) throw Error(ErrorCode::VertexInTriangle, "'" + g.name(v) + "'");
  const std::size_t a = g.neighbors(v)[0], b = g.neighbors(v)[1];
  if (g.adjacent(a, b)) throw Error(ErrorCode::EdgeExists, "'" + g.name(a) + " " + g.name(b) + "'");

  Provenance prov;
  prov.removed_vertices.push_back(g.name(v));
  std::vector<detail::NamedEdge> edges;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    (e.u == v || e.v == v ? prov.removed_edges : edges).push_back(detail::named(g, id));
  }
  prov.added_edges.push_back({g.name(a), g.name(b)});
  edges.push_back(prov.added_edges.back());
  return detail::rebuild(s, detail::names_except(g, v), edges, detail::labels_except(s, v), std::move(prov));
}

}  // namespace iasl
