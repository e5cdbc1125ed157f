#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "iasl/error.hpp"
#include "iasl/graph.hpp"
#include "iasl/integer_set.hpp"
#include "iasl/labeling.hpp"

namespace iasl {

struct SearchBounds {
  Value universe_max = 8;
  std::size_t max_label_size = 3;
  std::size_t max_vertices = kDefaultCycleBound;
  bool require_strict_universe = false;
};

inline std::string to_string(const SearchBounds& b) {
  return "universe_max=" + std::to_string(b.universe_max) + " max_label_size=" + std::to_string(b.max_label_size) +
         " max_vertices=" + std::to_string(b.max_vertices) +
         " strict=" + (b.require_strict_universe ? "true" : "false");
}

struct EnumerateOptions {
  // Reject partial assignments as soon as an edge fails; off = filter complete ones.
  bool prune = true;
  // Keep only labelings whose every edge has an odd deterministic ratio.
  bool odd_ratio_only = false;
};

namespace detail {

inline void check_bounds(const Graph& g, const SearchBounds& b) {
  if (b.max_label_size == 0 || b.max_vertices == 0)
    throw Error(ErrorCode::BoundExceeded, "search bounds must be positive");
  if (g.vertex_count() > b.max_vertices)
    throw Error(ErrorCode::BoundExceeded, "graph has " + std::to_string(g.vertex_count()) +
                                              " vertices, bound is " + std::to_string(b.max_vertices));
}

inline bool edge_accepted(const ApProfile& a, const ApProfile& b, bool odd_ratio_only) {
  if (edge_admissibility(a, b)) return false;
  return !odd_ratio_only || edge_geometry(a, b).ratio.num % 2 == 1;
}

}  // namespace detail

/// All AP subsets of {0..universe_max} with at most max_label_size elements,
/// in lexicographic order of their elements.
inline std::vector<IntegerSet> ap_candidates(const SearchBounds& b) {
  std::vector<IntegerSet> out;
  for (Value first = 0; first <= b.universe_max; ++first) out.push_back(IntegerSet{first});
  for (std::size_t len = 2; len <= b.max_label_size; ++len)
    for (Value diff = 1; diff * (len - 1) <= b.universe_max; ++diff)
      for (Value first = 0; first + diff * (len - 1) <= b.universe_max; ++first) out.push_back(make_ap(first, diff, len));
  std::sort(out.begin(), out.end());
  return out;
}

/// Backtracking enumeration of injective AP labelings with admissible edges.
/// Vertices are assigned in index order; a candidate is rejected as soon as
/// it breaks an edge to an already-assigned neighbour. Labelings come out in
/// lexicographic order of their candidate-index tuples.
class AiaslEnumerator {
 public:
  AiaslEnumerator(const Graph& g, const SearchBounds& bounds, EnumerateOptions options = {})
      : graph_(&g), bounds_(bounds), options_(options), candidates_(ap_candidates(bounds)) {
    detail::check_bounds(g, bounds);
    const std::size_t c = candidates_.size();
    for (const auto& s : candidates_) profiles_.push_back(*ap_profile(s));
    compatible_.assign(c * c, 0);
    signs_.assign(c * c, Sign::Positive);
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        bool ok = detail::edge_accepted(profiles_[i], profiles_[j], options.odd_ratio_only);
        if (ok && bounds.require_strict_universe) ok = candidates_[i].max() + candidates_[j].max() <= bounds.universe_max;
        compatible_[i * c + j] = ok;
        signs_[i * c + j] = sign_of_cardinality(sumset(candidates_[i], candidates_[j]).size());
      }
  }

  const Graph& graph() const noexcept { return *graph_; }
  const SearchBounds& bounds() const noexcept { return bounds_; }
  std::span<const IntegerSet> candidates() const noexcept { return candidates_; }
  const ApProfile& profile(std::size_t c) const { return profiles_[c]; }
  bool compatible(std::size_t a, std::size_t b) const { return compatible_[a * candidates_.size() + b]; }
  Sign sign(std::size_t a, std::size_t b) const { return signs_[a * candidates_.size() + b]; }

  /// Work splits by the label of vertex 0.
  std::size_t partitions() const noexcept { return graph_->vertex_count() == 0 ? 1 : candidates_.size(); }

  template <class Visit>
  void for_each_in_partition(std::size_t partition, Visit&& visit) const {
    const std::size_t n = graph_->vertex_count();
    std::vector<std::size_t> assigned(n);
    std::vector<char> used(candidates_.size(), 0);
    if (n == 0) {
      visit(std::span<const std::size_t>(assigned));
      return;
    }
    if (options_.prune) {
      assigned[0] = partition;
      used[partition] = 1;
      extend(1, assigned, used, visit);
    } else {
      unpruned(partition, visit);
    }
  }

  template <class Visit>
  void for_each(Visit&& visit) const {
    for (std::size_t p = 0; p < partitions(); ++p) for_each_in_partition(p, visit);
  }

  std::vector<IntegerSet> labels(std::span<const std::size_t> assignment) const {
    std::vector<IntegerSet> out;
    out.reserve(assignment.size());
    for (std::size_t c : assignment) out.push_back(candidates_[c]);
    return out;
  }

  Labeling labeling(std::span<const std::size_t> assignment) const {
    Labeling f{bounds_.universe_max, {}};
    for (std::size_t v = 0; v < assignment.size(); ++v) f.assignment.emplace(graph_->name(v), candidates_[assignment[v]]);
    return f;
  }

 private:
  template <class Visit>
  void extend(std::size_t v, std::vector<std::size_t>& assigned, std::vector<char>& used, Visit& visit) const {
    if (v == graph_->vertex_count()) {
      visit(std::span<const std::size_t>(assigned));
      return;
    }
    const auto nbrs = graph_->neighbors(v);
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t w : nbrs) {
        if (w >= v) break;  // neighbours are sorted
        if (!compatible(assigned[w], c)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned[v] = c;
      used[c] = 1;
      extend(v + 1, assigned, used, visit);
      used[c] = 0;
    }
  }

  // Filter-based reference path: every tuple is derived from scratch and
  // checked with the labeling module's validators; nothing is shared with the
  // pruning tables above.
  template <class Visit>
  void unpruned(std::size_t first, Visit& visit) const {
    const std::size_t n = graph_->vertex_count();
    const std::size_t c = candidates_.size();
    auto shared = std::make_shared<const Graph>(*graph_);
    std::vector<std::size_t> tuple(n, 0);
    tuple[0] = first;
    while (true) {
      if (accepted_unpruned(shared, tuple)) visit(std::span<const std::size_t>(tuple));
      std::size_t pos = n;
      while (pos > 1) {
        --pos;
        if (++tuple[pos] < c) break;
        tuple[pos] = 0;
        if (pos == 1) return;
      }
      if (n == 1) return;
    }
  }

  bool accepted_unpruned(const std::shared_ptr<const Graph>& g, std::span<const std::size_t> tuple) const {
    try {
      auto s = derive(g, labels(tuple), bounds_.universe_max, {bounds_.require_strict_universe});
      if (!validate_aiasl(s).valid) return false;
      if (options_.odd_ratio_only)
        for (std::size_t id = 0; id < g->edge_count(); ++id)
          if (deterministic_ratio(s, id).num % 2 == 0) return false;
      return true;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::DuplicateLabel || e.code() == ErrorCode::LabelOutsideUniverse) return false;
      throw;
    }
  }

  const Graph* graph_;
  SearchBounds bounds_;
  EnumerateOptions options_;
  std::vector<IntegerSet> candidates_;
  std::vector<ApProfile> profiles_;
  std::vector<char> compatible_;
  std::vector<Sign> signs_;
};

/// Streams every admissible AP labeling of g within the bounds.
template <class Visit>
void enumerate_aiasl(const Graph& g, const SearchBounds& bounds, Visit&& visit, EnumerateOptions options = {}) {
  AiaslEnumerator en(g, bounds, options);
  en.for_each([&](std::span<const std::size_t> assignment) { visit(en.labeling(assignment)); });
}

inline std::vector<Labeling> collect_aiasl(const Graph& g, const SearchBounds& bounds, EnumerateOptions options = {}) {
  std::vector<Labeling> out;
  enumerate_aiasl(g, bounds, [&](Labeling f) { out.push_back(std::move(f)); }, options);
  return out;
}

// ---------------------------------------------------------------------------
// Shape quotient

/// (length, common difference) of an AP label; difference 0 for singletons.
/// Sumset cardinality, AP-ness and admissibility are translation invariant,
/// so every sign-level property of a labeling depends only on its shapes.
struct LabelShape {
  std::size_t length = 1;
  Value diff = 0;
  bool operator==(const LabelShape&) const = default;
};

struct ShapeClass {
  LabelShape shape;
  std::uint64_t available = 0;  // AP subsets of X with this shape
};

inline std::vector<ShapeClass> shape_catalog(const SearchBounds& b) {
  std::vector<ShapeClass> out;
  out.push_back({{1, 0}, b.universe_max + 1});
  for (std::size_t len = 2; len <= b.max_label_size; ++len)
    for (Value diff = 1; diff * (len - 1) <= b.universe_max; ++diff)
      out.push_back({{len, diff}, b.universe_max - diff * (len - 1) + 1});
  return out;
}

/// Enumerates shape assignments (vertex -> shape) that some injective
/// admissible labeling realises, with the exact number of labelings realising
/// each. Only valid without the strict-universe requirement, which depends
/// on actual values.
class ShapeEnumerator {
 public:
  ShapeEnumerator(const Graph& g, const SearchBounds& bounds, EnumerateOptions options = {})
      : graph_(&g), bounds_(bounds), classes_(shape_catalog(bounds)) {
    detail::check_bounds(g, bounds);
    if (bounds.require_strict_universe)
      throw std::logic_error("shape quotient does not apply under the strict universe requirement");
    const std::size_t k = classes_.size();
    compatible_.assign(k * k, 0);
    signs_.assign(k * k, Sign::Positive);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        IntegerSet a = representative(i, 0), b = representative(j, 0);
        compatible_[i * k + j] = detail::edge_accepted(*ap_profile(a), *ap_profile(b), options.odd_ratio_only);
        signs_[i * k + j] = sign_of_cardinality(sumset(a, b).size());
      }
  }

  std::span<const ShapeClass> classes() const noexcept { return classes_; }
  bool compatible(std::size_t a, std::size_t b) const { return compatible_[a * classes_.size() + b]; }
  Sign sign(std::size_t a, std::size_t b) const { return signs_[a * classes_.size() + b]; }
  std::size_t partitions() const noexcept { return graph_->vertex_count() == 0 ? 1 : classes_.size(); }

  IntegerSet representative(std::size_t cls, Value first) const {
    return make_ap(first, classes_[cls].shape.diff, classes_[cls].shape.length);
  }

  /// Smallest-mass labeling with the given shapes: the i-th vertex (in index
  /// order) of a shape starts at i.
  std::vector<IntegerSet> materialize(std::span<const std::size_t> shapes) const {
    std::vector<Value> next(classes_.size(), 0);
    std::vector<IntegerSet> out;
    for (std::size_t cls : shapes) out.push_back(representative(cls, next[cls]++));
    return out;
  }

  /// visit(shapes, multiplicity)
  template <class Visit>
  void for_each_in_partition(std::size_t partition, Visit&& visit) const {
    const std::size_t n = graph_->vertex_count();
    std::vector<std::size_t> assigned(n);
    std::vector<std::uint64_t> used(classes_.size(), 0);
    if (n == 0) {
      visit(std::span<const std::size_t>(assigned), std::uint64_t{1});
      return;
    }
    assigned[0] = partition;
    used[partition] = 1;
    extend(1, assigned, used, classes_[partition].available, visit);
  }

  template <class Visit>
  void for_each(Visit&& visit) const {
    for (std::size_t p = 0; p < partitions(); ++p) for_each_in_partition(p, visit);
  }

 private:
  template <class Visit>
  void extend(std::size_t v, std::vector<std::size_t>& assigned, std::vector<std::uint64_t>& used,
              std::uint64_t multiplicity, Visit& visit) const {
    if (v == graph_->vertex_count()) {
      visit(std::span<const std::size_t>(assigned), multiplicity);
      return;
    }
    const auto nbrs = graph_->neighbors(v);
    for (std::size_t cls = 0; cls < classes_.size(); ++cls) {
      if (used[cls] >= classes_[cls].available) continue;
      bool ok = true;
      for (std::size_t w : nbrs) {
        if (w >= v) break;
        if (!compatible(assigned[w], cls)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      assigned[v] = cls;
      // Falling factorial: the k-th vertex of a shape has (available - k) choices.
      std::uint64_t choices = classes_[cls].available - used[cls];
      ++used[cls];
      extend(v + 1, assigned, used, multiplicity * choices, visit);
      --used[cls];
    }
  }

  const Graph* graph_;
  SearchBounds bounds_;
  std::vector<ShapeClass> classes_;
  std::vector<char> compatible_;
  std::vector<Sign> signs_;
};

}  // namespace iasl
