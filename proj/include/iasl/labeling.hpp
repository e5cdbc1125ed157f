#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/graph.hpp"
#include "iasl/integer_set.hpp"

namespace iasl {

enum class Sign { Positive, Negative };

constexpr char sign_symbol(Sign s) { return s == Sign::Positive ? '+' : '-'; }
constexpr std::string_view to_string(Sign s) { return s == Sign::Positive ? "POSITIVE" : "NEGATIVE"; }

/// (-1)^cardinality.
constexpr Sign sign_of_cardinality(std::size_t cardinality) {
  return cardinality % 2 == 0 ? Sign::Positive : Sign::Negative;
}

/// Vertex labeling f over the universe X = {0..universe_max}.
struct Labeling {
  Value universe_max = 0;
  std::map<std::string, IntegerSet> assignment;

  bool operator==(const Labeling&) const = default;
};

struct DeriveOptions {
  // Require vertex and edge labels to lie inside X.
  bool strict_universe = false;
};

/// A graph, an injective vertex labeling (indexed like the graph's vertices),
/// and the derived edge labels f+(uv) = f(u) + f(v) with signs (-1)^|f+(uv)|.
class SignedLabeledGraph {
 public:
  const Graph& graph() const noexcept { return *graph_; }
  std::shared_ptr<const Graph> shared_graph() const noexcept { return graph_; }
  Value universe_max() const noexcept { return universe_max_; }
  bool strict_universe() const noexcept { return strict_; }

  std::span<const IntegerSet> vertex_labels() const noexcept { return vertex_labels_; }
  const IntegerSet& label(std::size_t v) const { return vertex_labels_.at(v); }
  const IntegerSet& label(std::string_view v) const { return label(graph_->vertex(v)); }

  std::span<const IntegerSet> edge_labels() const noexcept { return edge_labels_; }
  const IntegerSet& edge_label(std::size_t e) const { return edge_labels_.at(e); }

  std::span<const Sign> signs() const noexcept { return signs_; }
  Sign sign(std::size_t e) const { return signs_.at(e); }

  Labeling labeling() const {
    Labeling f{universe_max_, {}};
    for (std::size_t v = 0; v < vertex_labels_.size(); ++v) f.assignment.emplace(graph_->name(v), vertex_labels_[v]);
    return f;
  }

 private:
  friend SignedLabeledGraph derive(std::shared_ptr<const Graph>, std::vector<IntegerSet>, Value, DeriveOptions);

  std::shared_ptr<const Graph> graph_;
  Value universe_max_ = 0;
  bool strict_ = false;
  std::vector<IntegerSet> vertex_labels_;
  std::vector<IntegerSet> edge_labels_;
  std::vector<Sign> signs_;
};

inline SignedLabeledGraph derive(std::shared_ptr<const Graph> g, std::vector<IntegerSet> labels, Value universe_max,
                                 DeriveOptions options = {}) {
  if (labels.size() != g->vertex_count())
    throw Error(ErrorCode::MissingLabel, "expected " + std::to_string(g->vertex_count()) + " labels, got " +
                                             std::to_string(labels.size()));
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (labels[order[i]] == labels[order[i - 1]])
      throw Error(ErrorCode::DuplicateLabel, "'" + g->name(std::min(order[i], order[i - 1])) + "' and '" +
                                                 g->name(std::max(order[i], order[i - 1])) + "' share " +
                                                 to_string(labels[order[i]]));
  if (options.strict_universe)
    for (std::size_t v = 0; v < labels.size(); ++v)
      if (labels[v].max() > universe_max)
        throw Error(ErrorCode::LabelOutsideUniverse,
                    "vertex '" + g->name(v) + "' label exceeds universe_max " + std::to_string(universe_max));

  SignedLabeledGraph s;
  s.edge_labels_.reserve(g->edge_count());
  s.signs_.reserve(g->edge_count());
  for (std::size_t id = 0; id < g->edge_count(); ++id) {
    const Edge& e = g->edge(id);
    IntegerSet label = sumset(labels[e.u], labels[e.v]);
    if (options.strict_universe && label.max() > universe_max)
      throw Error(ErrorCode::LabelOutsideUniverse,
                  "edge '" + g->edge_name(id) + "' label exceeds universe_max " + std::to_string(universe_max));
    s.signs_.push_back(sign_of_cardinality(label.size()));
    s.edge_labels_.push_back(std::move(label));
  }
  s.graph_ = std::move(g);
  s.universe_max_ = universe_max;
  s.strict_ = options.strict_universe;
  s.vertex_labels_ = std::move(labels);
  return s;
}

inline SignedLabeledGraph derive(const Graph& g, const Labeling& f, DeriveOptions options = {}) {
  for (const auto& [name, set] : f.assignment)
    if (!g.find_vertex(name)) throw Error(ErrorCode::UnknownVertex, "labeling names '" + name + "'");
  std::vector<IntegerSet> labels;
  labels.reserve(g.vertex_count());
  for (const auto& name : g.names()) {
    auto it = f.assignment.find(name);
    if (it == f.assignment.end()) throw Error(ErrorCode::MissingLabel, "vertex '" + name + "' has no label");
    labels.push_back(it->second);
  }
  return derive(std::make_shared<const Graph>(g), std::move(labels), f.universe_max, options);
}

/// First pair of edges (by id) sharing a label, if any.
inline std::optional<std::pair<std::size_t, std::size_t>> edge_label_collision(const SignedLabeledGraph& s) {
  std::map<IntegerSet, std::size_t> seen;
  std::optional<std::pair<std::size_t, std::size_t>> first;
  for (std::size_t id = 0; id < s.edge_labels().size(); ++id) {
    auto [it, inserted] = seen.emplace(s.edge_label(id), id);
    if (!inserted && (!first || std::pair(it->second, id) < *first)) first = std::pair(it->second, id);
  }
  return first;
}

/// IASI condition: the induced edge labeling is injective.
inline bool validate_iasi(const SignedLabeledGraph& s) { return !edge_label_collision(s).has_value(); }

// ---------------------------------------------------------------------------
// Arithmetic labelings

struct Rational {
  Value num = 1;
  Value den = 1;

  static Rational reduced(Value num, Value den) {
    Value g = std::gcd(num, den);
    return {num / g, den / g};
  }
  bool is_integer() const noexcept { return den == 1; }
  bool operator==(const Rational&) const = default;
};

inline std::string to_string(const Rational& r) {
  return r.is_integer() ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

/// Orientation of an edge whose endpoint labels are APs: which endpoint has
/// the smaller common difference, and the ratio between the differences.
/// Singletons and equal differences give ratio 1, with the smaller-cardinality
/// endpoint (then the first argument) taken as the minimum-difference end.
struct EdgeGeometry {
  bool first_is_min = true;
  Rational ratio;
};

inline EdgeGeometry edge_geometry(const ApProfile& a, const ApProfile& b) {
  if (a.is_singleton() || b.is_singleton() || *a.diff == *b.diff) return {a.length <= b.length, Rational{}};
  if (*a.diff < *b.diff) return {true, Rational::reduced(*b.diff, *a.diff)};
  return {false, Rational::reduced(*a.diff, *b.diff)};
}

enum class AiaslClause { VertexNotAp, NonIntegerRatio, RatioExceedsLength };

constexpr std::string_view to_string(AiaslClause c) {
  switch (c) {
    case AiaslClause::VertexNotAp: return "VERTEX_NOT_AP";
    case AiaslClause::NonIntegerRatio: return "NON_INTEGER_RATIO";
    case AiaslClause::RatioExceedsLength: return "RATIO_EXCEEDS_LENGTH";
  }
  return "UNKNOWN";
}

/// The admissibility condition for one edge with AP endpoint labels: the
/// ratio is an integer no larger than the length of the minimum-difference end.
inline std::optional<AiaslClause> edge_admissibility(const ApProfile& a, const ApProfile& b) {
  EdgeGeometry geo = edge_geometry(a, b);
  if (!geo.ratio.is_integer()) return AiaslClause::NonIntegerRatio;
  const std::size_t min_length = geo.first_is_min ? a.length : b.length;
  if (geo.ratio.num > min_length) return AiaslClause::RatioExceedsLength;
  return std::nullopt;
}

/// Sign predicted from cardinality parities alone. Odd ratio: positive iff the
/// endpoint parities differ. Even ratio: positive iff the minimum-difference
/// endpoint has even parity.
inline Sign predicted_sign(const ApProfile& a, const ApProfile& b) {
  if (edge_admissibility(a, b)) throw Error(ErrorCode::AdmissibilityViolation, "edge is not AIASL-admissible");
  EdgeGeometry geo = edge_geometry(a, b);
  if (geo.ratio.num % 2 == 1) return (a.length % 2) != (b.length % 2) ? Sign::Positive : Sign::Negative;
  const std::size_t min_length = geo.first_is_min ? a.length : b.length;
  return min_length % 2 == 0 ? Sign::Positive : Sign::Negative;
}

struct AiaslDiagnostic {
  std::optional<std::size_t> vertex;
  std::optional<std::size_t> edge;
  AiaslClause clause;
  std::string message;
};

struct AiaslReport {
  bool valid = true;
  std::vector<AiaslDiagnostic> diagnostics;
};

inline AiaslReport validate_aiasl(const SignedLabeledGraph& s) {
  const Graph& g = s.graph();
  AiaslReport report;
  std::vector<std::optional<ApProfile>> profiles;
  profiles.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    profiles.push_back(ap_profile(s.label(v)));
    if (!profiles.back())
      report.diagnostics.push_back({v, std::nullopt, AiaslClause::VertexNotAp,
                                    "vertex " + g.name(v) + " label " + to_string(s.label(v)) + " is not an AP"});
  }
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (!profiles[e.u] || !profiles[e.v]) continue;
    if (auto clause = edge_admissibility(*profiles[e.u], *profiles[e.v])) {
      EdgeGeometry geo = edge_geometry(*profiles[e.u], *profiles[e.v]);
      std::size_t min_end = geo.first_is_min ? e.u : e.v;
      std::string why = *clause == AiaslClause::NonIntegerRatio
                            ? "ratio " + to_string(geo.ratio) + " is not an integer"
                            : "ratio " + to_string(geo.ratio) + " exceeds |f(" + g.name(min_end) +
                                  ")| = " + std::to_string(s.label(min_end).size());
      report.diagnostics.push_back({std::nullopt, id, *clause, "edge " + g.edge_name(id) + ": " + why});
    }
  }
  report.valid = report.diagnostics.empty();
  return report;
}

inline std::pair<ApProfile, ApProfile> endpoint_profiles(const SignedLabeledGraph& s, std::size_t edge) {
  const Edge& e = s.graph().edge(edge);
  auto a = ap_profile(s.label(e.u));
  auto b = ap_profile(s.label(e.v));
  if (!a || !b) throw Error(ErrorCode::NotApLabel, "edge " + s.graph().edge_name(edge) + " has a non-AP endpoint");
  return {*a, *b};
}

/// max(d_u, d_v) / min(d_u, d_v); 1 when either end is a singleton.
inline Rational deterministic_ratio(const SignedLabeledGraph& s, std::size_t edge) {
  auto [a, b] = endpoint_profiles(s, edge);
  return edge_geometry(a, b).ratio;
}

inline Sign predicted_sign(const SignedLabeledGraph& s, std::size_t edge) {
  const Edge& e = s.graph().edge(edge);
  auto a = ap_profile(s.label(e.u));
  auto b = ap_profile(s.label(e.v));
  if (!a || !b)
    throw Error(ErrorCode::AdmissibilityViolation, "edge " + s.graph().edge_name(edge) + " has a non-AP endpoint");
  return predicted_sign(*a, *b);
}

}  // namespace iasl
