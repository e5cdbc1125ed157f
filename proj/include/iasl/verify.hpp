#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "iasl/balance.hpp"
#include "iasl/enumerate.hpp"
#include "iasl/error.hpp"
#include "iasl/families.hpp"
#include "iasl/graph.hpp"
#include "iasl/io.hpp"
#include "iasl/labeling.hpp"
#include "iasl/transforms.hpp"

namespace iasl {

// ---------------------------------------------------------------------------
// Constructive labeling for bipartite graphs

/// One side gets distinct singletons {0}, {1}, ... and the other distinct
/// two-element runs {0,1}, {1,2}, ...: every difference is 1 (or undefined),
/// every edge joins an odd and an even cardinality, so all edges are positive.
inline Labeling construct_balanced_bipartite_labeling(const Graph& g) {
  auto parts = is_bipartite(g);
  if (!parts) throw Error(ErrorCode::NotBipartite, "graph has an odd cycle");
  Labeling f;
  Value next = 0;
  for (std::size_t v : parts->left) f.assignment.emplace(g.name(v), IntegerSet{next++});
  f.universe_max = next == 0 ? 0 : next - 1;
  next = 0;
  for (std::size_t v : parts->right) {
    f.assignment.emplace(g.name(v), IntegerSet{next, next + 1});
    f.universe_max = std::max(f.universe_max, next + 1);
    ++next;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Theorem tags and families

enum class TheoremId {
  PositiveEdge,
  Cardinality,
  BalanceBipartiteFwd,
  BalanceBipartiteRev,
  Subdivision,
  Homeomorphism,
  IasiInjectivity,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::PositiveEdge,        TheoremId::Cardinality,   TheoremId::BalanceBipartiteFwd,
    TheoremId::BalanceBipartiteRev, TheoremId::Subdivision,   TheoremId::Homeomorphism,
    TheoremId::IasiInjectivity,
};

constexpr std::string_view to_string(TheoremId t) {
  switch (t) {
    case TheoremId::PositiveEdge: return "POSITIVE_EDGE";
    case TheoremId::Cardinality: return "CARDINALITY";
    case TheoremId::BalanceBipartiteFwd: return "BALANCE_BIPARTITE_FWD";
    case TheoremId::BalanceBipartiteRev: return "BALANCE_BIPARTITE_REV";
    case TheoremId::Subdivision: return "SUBDIVISION";
    case TheoremId::Homeomorphism: return "HOMEOMORPHISM";
    case TheoremId::IasiInjectivity: return "IASI_INJECTIVITY";
  }
  return "UNKNOWN";
}

inline TheoremId parse_theorem(std::string_view tag) {
  for (TheoremId t : kAllTheorems)
    if (to_string(t) == tag) return t;
  throw Error(ErrorCode::UnknownTheorem, "'" + std::string(tag) + "'");
}

/// Clauses a theorem's violations are filed under.
inline std::vector<std::string> theorem_clauses(TheoremId t) {
  switch (t) {
    case TheoremId::PositiveEdge: return {"sign"};
    case TheoremId::Cardinality: return {"cardinality"};
    case TheoremId::BalanceBipartiteFwd: return {"constructive", "universal"};
    case TheoremId::BalanceBipartiteRev: return {"universal"};
    case TheoremId::Subdivision:
    case TheoremId::Homeomorphism: return {"if", "only_if"};
    case TheoremId::IasiInjectivity: return {"injective"};
  }
  return {};
}

/// All ordered pairs of distinct APs with first <= max_first, difference
/// <= max_diff and length <= max_length.
struct ApPairFamily {
  Value max_first = 0;
  Value max_diff = 1;
  std::size_t max_length = 1;
};

struct Family {
  std::string spec;
  std::variant<std::vector<Graph>, ApPairFamily> members;
};

namespace detail {

inline std::vector<std::size_t> parse_counts(std::string_view args, std::size_t expected, std::string_view spec) {
  std::vector<std::size_t> out;
  while (true) {
    std::size_t comma = args.find(',');
    std::string_view token = args.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw Error(ErrorCode::UnknownFamily, "bad number in '" + std::string(spec) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    args = args.substr(comma + 1);
  }
  if (out.size() != expected)
    throw Error(ErrorCode::UnknownFamily, "'" + std::string(spec) + "' expects " + std::to_string(expected) + " numbers");
  return out;
}

inline std::vector<Graph> parse_graph_family(std::string_view spec) {
  if (spec == "triangle") return {cycle_graph(3)};
  std::size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error(ErrorCode::UnknownFamily, "'" + std::string(spec) + "'");
  std::string_view kind = spec.substr(0, colon), args = spec.substr(colon + 1);
  if (kind == "file") {
    std::ifstream in{std::string(args)};
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + std::string(args) + "'");
    std::stringstream text;
    text << in.rdbuf();
    return {parse_edge_list(text.str())};
  }
  if (kind == "complete-bipartite") {
    auto mn = parse_counts(args, 2, spec);
    if (mn[0] == 0 || mn[1] == 0 || mn[0] + mn[1] > kMaxBipartiteFamily)
      throw Error(ErrorCode::BoundExceeded, "complete-bipartite needs 1 <= m, n and m + n <= 8");
    return {complete_bipartite_graph(mn[0], mn[1])};
  }
  const std::size_t n = parse_counts(args, 1, spec)[0];
  if (kind == "connected") return connected_graphs_up_to(n);
  if (kind == "shipped") return shipped_family(n);
  if (kind == "path") {
    if (n < 2) throw Error(ErrorCode::UnknownFamily, "path needs at least 2 vertices");
    return {path_graph(n)};
  }
  if (kind == "cycle") return {cycle_graph(n)};
  if (kind == "star") {
    if (n < 1) throw Error(ErrorCode::UnknownFamily, "star needs at least 1 leaf");
    return {star_graph(n)};
  }
  if (kind == "complete") {
    if (n < 2 || n > kMaxCompleteFamily) throw Error(ErrorCode::BoundExceeded, "complete needs 2 <= n <= 5");
    return {complete_graph(n)};
  }
  throw Error(ErrorCode::UnknownFamily, "'" + std::string(spec) + "'");
}

}  // namespace detail

/// Family grammar: `ap-pairs:F,D,L`, or graph families joined by '+':
/// `connected:N`, `shipped:N`, `path:N`, `cycle:N`, `star:N` (leaves),
/// `complete:N`, `complete-bipartite:M,N`, `triangle`, `file:PATH`.
inline Family parse_family(std::string_view spec) {
  if (spec.starts_with("ap-pairs:")) {
    auto v = detail::parse_counts(spec.substr(9), 3, spec);
    if (v[1] == 0 || v[2] == 0) throw Error(ErrorCode::UnknownFamily, "ap-pairs needs positive difference and length");
    return {std::string(spec), ApPairFamily{v[0], v[1], v[2]}};
  }
  std::vector<Graph> graphs;
  std::string_view rest = spec;
  while (true) {
    std::size_t plus = rest.find('+');
    for (auto& g : detail::parse_graph_family(rest.substr(0, plus))) graphs.push_back(std::move(g));
    if (plus == std::string_view::npos) break;
    rest = rest.substr(plus + 1);
  }
  return {std::string(spec), std::move(graphs)};
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { ConfirmedWithinBounds, CounterexampleFound };

constexpr std::string_view to_string(Verdict v) {
  return v == Verdict::ConfirmedWithinBounds ? "CONFIRMED_WITHIN_BOUNDS" : "COUNTEREXAMPLE_FOUND";
}

struct Counterexample {
  Graph graph;
  Labeling labeling;
  std::string clause;
  std::string subject;  // edge "u v", vertex "v", or "-"
  std::string explanation;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::PositiveEdge;
  std::string family;
  SearchBounds bounds;
  bool odd_ratio_only = false;
  std::string method;
  std::uint64_t instances = 0;  // labelings (or AP pairs) examined
  std::uint64_t cases = 0;      // predicate evaluations
  std::uint64_t skipped = 0;    // transforms refused for injectivity
  Verdict verdict = Verdict::ConfirmedWithinBounds;
  std::uint64_t counterexample_count = 0;
  std::map<std::string, std::uint64_t> violations;
  // The smallest counterexamples by (vertex count, label mass, ...).
  std::vector<Counterexample> counterexamples;
};

struct VerifyOptions {
  bool odd_ratio_only = false;
  std::size_t max_counterexamples = 16;
  // 0 = hardware concurrency. Output does not depend on it.
  unsigned threads = 0;
};

namespace detail {

using CounterexampleKey = std::tuple<std::size_t, Value, std::vector<IntegerSet>, std::vector<Edge>, std::string>;

struct Kept {
  CounterexampleKey key;
  Counterexample example;
};

struct Partial {
  std::uint64_t instances = 0, cases = 0, skipped = 0, count = 0;
  std::map<std::string, std::uint64_t> violations;
  std::vector<Kept> kept;
  std::size_t cap = 16;

  /// Records a violation; `make` builds the example only if it will be kept.
  template <class Make>
  void offer(const Graph& g, std::vector<IntegerSet> labels, const std::string& clause, const std::string& subject,
             std::uint64_t multiplicity, Make&& make) {
    count += multiplicity;
    violations[clause] += multiplicity;
    if (cap == 0) return;
    Value mass = 0;
    for (const auto& s : labels) mass += s.mass();
    if (kept.size() >= cap) {
      const auto& worst = kept.back().key;
      if (std::pair(g.vertex_count(), mass) > std::pair(std::get<0>(worst), std::get<1>(worst))) return;
    }
    CounterexampleKey key{g.vertex_count(), mass, std::move(labels),
                          std::vector<Edge>(g.edges().begin(), g.edges().end()), clause + "|" + subject};
    if (kept.size() >= cap && !(key < kept.back().key)) return;
    auto at = std::upper_bound(kept.begin(), kept.end(), key, [](const auto& k, const Kept& e) { return k < e.key; });
    kept.insert(at, Kept{std::move(key), make()});
    if (kept.size() > cap) kept.pop_back();
  }

  void merge(Partial&& other) {
    instances += other.instances;
    cases += other.cases;
    skipped += other.skipped;
    count += other.count;
    for (auto& [k, v] : other.violations) violations[k] += v;
    for (auto& e : other.kept) kept.push_back(std::move(e));
    std::stable_sort(kept.begin(), kept.end(), [](const Kept& a, const Kept& b) { return a.key < b.key; });
    if (kept.size() > cap) kept.resize(cap);
  }
};

inline Labeling named_labeling(const Graph& g, std::span<const IntegerSet> labels, Value universe_max) {
  Labeling f{universe_max, {}};
  for (std::size_t v = 0; v < labels.size(); ++v) f.assignment.emplace(g.name(v), labels[v]);
  return f;
}

inline std::string signs_text(const Graph& g, std::span<const Sign> signs) {
  std::string out;
  for (std::size_t id = 0; id < g.edge_count(); ++id) {
    if (id) out += ", ";
    out += g.edge_name(id) + " " + sign_symbol(signs[id]);
  }
  return out;
}

/// Per-graph facts shared by every labeling of that graph.
struct GraphFacts {
  std::shared_ptr<const Graph> graph;
  bool bipartite = false;
  std::vector<char> is_bridge;
  std::vector<char> on_cycle;
  std::vector<std::size_t> homeo_eligible;  // degree 2, in no triangle

  explicit GraphFacts(const Graph& g) : graph(std::make_shared<const Graph>(g)) {
    bipartite = is_bipartite(g).has_value();
    auto bridges = cut_edges(g);
    is_bridge.assign(g.edge_count(), 0);
    for (std::size_t id : bridges) is_bridge[id] = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      on_cycle.push_back(on_some_cycle(g, v, bridges));
      if (g.degree(v) == 2 && !in_triangle(g, v)) homeo_eligible.push_back(v);
    }
  }
};

template <class Task>
std::vector<Partial> run_tasks(std::size_t count, unsigned threads, std::size_t cap, Task&& task) {
  std::vector<Partial> results(count);
  for (auto& r : results) r.cap = cap;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i, results[i]);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t)
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i, results[i]);
    });
  workers.clear();
  return results;
}

/// Checks the sign law and the cardinality formula on one edge; returns an
/// explanation when violated.
inline std::optional<std::string> pair_violation(TheoremId theorem, const IntegerSet& a, const IntegerSet& b,
                                                 const ApProfile& pa, const ApProfile& pb) {
  IntegerSet label = sumset(a, b);
  if (theorem == TheoremId::PositiveEdge) {
    Sign predicted = predicted_sign(pa, pb), actual = sign_of_cardinality(label.size());
    if (predicted == actual) return std::nullopt;
    return "predicted " + std::string(to_string(predicted)) + " but |" + to_string(label) +
           "| = " + std::to_string(label.size());
  }
  EdgeGeometry geo = edge_geometry(pa, pb);
  const std::size_t m = geo.first_is_min ? pa.length : pb.length, n = geo.first_is_min ? pb.length : pa.length;
  const std::size_t formula = ap_sumset_cardinality(m, n, geo.ratio.num);
  if (formula == label.size()) return std::nullopt;
  return "formula gives " + std::to_string(formula) + " but |" + to_string(label) + "| = " + std::to_string(label.size());
}

}  // namespace detail

/// Re-derives a counterexample from scratch (balance through the cycle
/// oracle) and reports whether it still violates the theorem's claim.
inline bool replay_counterexample(TheoremId theorem, const Counterexample& ce,
                                  std::size_t cycle_bound = kDefaultCycleBound) {
  auto s = derive(ce.graph, ce.labeling);
  auto balanced = [&](const SignedLabeledGraph& x) { return is_balanced_oracle(x, cycle_bound).balanced; };
  auto split_edge = [&](const Graph& g) -> std::size_t {
    auto tokens = detail::split_ws(ce.subject);
    if (tokens.size() != 2) throw Error(ErrorCode::UnknownEdge, "'" + ce.subject + "'");
    return g.edge_between(tokens[0], tokens[1]);
  };
  const Graph& g = s.graph();
  switch (theorem) {
    case TheoremId::PositiveEdge: {
      std::size_t id = split_edge(g);
      return predicted_sign(s, id) != s.sign(id);
    }
    case TheoremId::Cardinality: {
      std::size_t id = split_edge(g);
      auto [a, b] = endpoint_profiles(s, id);
      return detail::pair_violation(theorem, s.label(g.edge(id).u), s.label(g.edge(id).v), a, b).has_value();
    }
    case TheoremId::BalanceBipartiteFwd:
      if (ce.clause == "constructive") return !validate_aiasl(s).valid || !balanced(s);
      return is_bipartite(g).has_value() && !balanced(s);
    case TheoremId::BalanceBipartiteRev: return !is_bipartite(g).has_value() && balanced(s);
    case TheoremId::Subdivision: {
      if (!balanced(s)) return false;
      std::size_t id = split_edge(g);
      auto bridges = cut_edges(g);
      bool cut = std::binary_search(bridges.begin(), bridges.end(), id);
      auto t = subdivide_edge(s, g.name(g.edge(id).u), g.name(g.edge(id).v));
      bool after = balanced(t.result);
      return ce.clause == "if" ? cut && !after : !cut && after;
    }
    case TheoremId::Homeomorphism: {
      if (!balanced(s)) return false;
      std::size_t v = g.vertex(ce.subject);
      bool cyclic = on_some_cycle(g, v, cut_edges(g));
      bool after = balanced(elementary_transformation(s, ce.subject).result);
      return ce.clause == "if" ? !cyclic && !after : cyclic && after;
    }
    case TheoremId::IasiInjectivity: return !validate_iasi(s);
  }
  return false;
}

namespace detail {

inline VerificationReport verify_pairs(TheoremId theorem, const std::string& spec, const ApPairFamily& fam,
                                       const SearchBounds& bounds, const VerifyOptions& options) {
  std::vector<IntegerSet> aps;
  for (Value first = 0; first <= fam.max_first; ++first) {
    aps.push_back(IntegerSet{first});
    for (std::size_t len = 2; len <= fam.max_length; ++len)
      for (Value diff = 1; diff <= fam.max_diff; ++diff) aps.push_back(make_ap(first, diff, len));
  }
  std::sort(aps.begin(), aps.end());
  std::vector<ApProfile> profiles;
  for (const auto& s : aps) profiles.push_back(*ap_profile(s));
  const Graph k2{{"u", "v"}};

  auto partials = run_tasks(aps.size(), options.threads, options.max_counterexamples, [&](std::size_t i, Partial& out) {
    for (std::size_t j = 0; j < aps.size(); ++j) {
      if (i == j || !edge_accepted(profiles[i], profiles[j], options.odd_ratio_only)) continue;
      ++out.instances;
      ++out.cases;
      if (auto why = pair_violation(theorem, aps[i], aps[j], profiles[i], profiles[j])) {
        std::vector<IntegerSet> labels{aps[i], aps[j]};
        std::string clause = theorem_clauses(theorem).front();
        out.offer(k2, labels, clause, "u v", 1, [&] {
          return Counterexample{k2, named_labeling(k2, labels, std::max(aps[i].max(), aps[j].max())), clause, "u v",
                                *why};
        });
      }
    }
  });
  Partial total;
  total.cap = options.max_counterexamples;
  for (auto& p : partials) total.merge(std::move(p));

  VerificationReport r;
  r.theorem = theorem;
  r.family = spec;
  r.bounds = bounds;
  r.odd_ratio_only = options.odd_ratio_only;
  r.method = "ap-pairs";
  r.instances = total.instances;
  r.cases = total.cases;
  for (const auto& c : theorem_clauses(theorem)) r.violations[c] = total.violations[c];
  r.counterexample_count = total.count;
  for (auto& k : total.kept) r.counterexamples.push_back(std::move(k.example));
  r.verdict = r.counterexample_count ? Verdict::CounterexampleFound : Verdict::ConfirmedWithinBounds;
  return r;
}

/// Balance-vs-bipartite predicates over one labeling given its edge signs.
template <class Offer>
void check_balance_theorem(TheoremId theorem, const GraphFacts& facts, std::span<const Sign> signs,
                           std::uint64_t multiplicity, Partial& out, Offer&& offer) {
  out.instances += multiplicity;
  out.cases += multiplicity;
  const bool balanced = is_balanced_fast(*facts.graph, signs).balanced;
  if (theorem == TheoremId::BalanceBipartiteFwd && facts.bipartite && !balanced)
    offer("universal", "-", "bipartite underlying graph but unbalanced; signs: " + signs_text(*facts.graph, signs));
  if (theorem == TheoremId::BalanceBipartiteRev && !facts.bipartite && balanced)
    offer("universal", "-", "balanced but underlying graph is not bipartite; signs: " + signs_text(*facts.graph, signs));
}

inline void check_constructive(const GraphFacts& facts, Partial& out) {
  if (!facts.bipartite) return;
  ++out.cases;
  const Graph& g = *facts.graph;
  Labeling f = construct_balanced_bipartite_labeling(g);
  auto s = derive(g, f);
  if (validate_aiasl(s).valid && is_balanced_fast(s).balanced) return;
  std::vector<IntegerSet> labels(s.vertex_labels().begin(), s.vertex_labels().end());
  out.offer(g, labels, "constructive", "-", 1, [&] {
    return Counterexample{g, f, "constructive", "-", "constructed labeling is not a balanced AIASL"};
  });
}

/// Evaluates one concrete labeling of a graph for the given theorem.
inline void check_direct(TheoremId theorem, const GraphFacts& facts, const AiaslEnumerator& en,
                         std::span<const std::size_t> assignment, std::vector<Sign>& signs, Partial& out) {
  const Graph& g = *facts.graph;
  const Value universe = en.bounds().universe_max;
  for (std::size_t id = 0; id < g.edge_count(); ++id)
    signs[id] = en.sign(assignment[g.edge(id).u], assignment[g.edge(id).v]);
  auto offer_with = [&](const std::string& clause, const std::string& subject, const std::string& why) {
    auto labels = en.labels(assignment);
    out.offer(g, labels, clause, subject, 1, [&] {
      return Counterexample{g, named_labeling(g, labels, universe), clause, subject, why};
    });
  };

  switch (theorem) {
    case TheoremId::PositiveEdge:
    case TheoremId::Cardinality: {
      ++out.instances;
      for (std::size_t id = 0; id < g.edge_count(); ++id) {
        ++out.cases;
        std::size_t a = assignment[g.edge(id).u], b = assignment[g.edge(id).v];
        if (auto why = pair_violation(theorem, en.candidates()[a], en.candidates()[b], en.profile(a), en.profile(b)))
          offer_with(theorem_clauses(theorem).front(), g.edge_name(id), *why);
      }
      return;
    }
    case TheoremId::BalanceBipartiteFwd:
    case TheoremId::BalanceBipartiteRev:
      check_balance_theorem(theorem, facts, signs, 1, out,
                            [&](const std::string& c, const std::string& s, const std::string& w) { offer_with(c, s, w); });
      return;
    case TheoremId::IasiInjectivity: {
      ++out.instances;
      ++out.cases;
      std::map<IntegerSet, std::size_t> seen;
      for (std::size_t id = 0; id < g.edge_count(); ++id) {
        auto label = sumset(en.candidates()[assignment[g.edge(id).u]], en.candidates()[assignment[g.edge(id).v]]);
        auto [it, inserted] = seen.emplace(label, id);
        if (!inserted) {
          offer_with("injective", g.edge_name(it->second) + " / " + g.edge_name(id),
                     "edges " + g.edge_name(it->second) + " and " + g.edge_name(id) + " both labeled " +
                         to_string(label));
          return;
        }
      }
      return;
    }
    case TheoremId::Subdivision:
    case TheoremId::Homeomorphism: {
      ++out.instances;
      if (!is_balanced_fast(g, signs).balanced) return;  // outside the hypothesis
      auto s = derive(facts.graph, en.labels(assignment), universe, {en.bounds().require_strict_universe});
      if (theorem == TheoremId::Subdivision) {
        for (std::size_t id = 0; id < g.edge_count(); ++id) {
          std::optional<TransformOutcome> t;
          try {
            t = subdivide_edge(s, g.name(g.edge(id).u), g.name(g.edge(id).v));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::InjectivityCollision && e.code() != ErrorCode::LabelOutsideUniverse) throw;
            ++out.skipped;
            continue;
          }
          ++out.cases;
          const bool after = is_balanced_fast(t->result).balanced;
          const bool cut = facts.is_bridge[id];
          if (cut && !after) offer_with("if", g.edge_name(id), "subdividing cut edge " + g.edge_name(id) + " breaks balance");
          if (!cut && after)
            offer_with("only_if", g.edge_name(id),
                       "subdividing non-cut edge " + g.edge_name(id) + " keeps balance; signs after: " +
                           signs_text(t->result.graph(), t->result.signs()));
        }
      } else {
        for (std::size_t v : facts.homeo_eligible) {
          std::optional<TransformOutcome> t;
          try {
            t = elementary_transformation(s, g.name(v));
          } catch (const Error& e) {
            if (e.code() != ErrorCode::LabelOutsideUniverse) throw;
            ++out.skipped;
            continue;
          }
          ++out.cases;
          const bool after = is_balanced_fast(t->result).balanced;
          const bool cyclic = facts.on_cycle[v];
          if (!cyclic && !after)
            offer_with("if", g.name(v), "transformation at acyclic vertex " + g.name(v) + " breaks balance");
          if (cyclic && after)
            offer_with("only_if", g.name(v),
                       "transformation at cycle vertex " + g.name(v) + " keeps balance; signs after: " +
                           signs_text(t->result.graph(), t->result.signs()));
        }
      }
      return;
    }
  }
}

}  // namespace detail

/// Checks every (graph, labeling) instance of the family against the
/// theorem's claim. Balance-vs-bipartite theorems run on the shape quotient
/// (exact: every labeling is counted with multiplicity) unless the strict
/// universe is required; everything else enumerates concrete labelings.
inline VerificationReport verify_theorem(TheoremId theorem, const Family& family, const SearchBounds& bounds,
                                         const VerifyOptions& options = {}) {
  if (const auto* pairs = std::get_if<ApPairFamily>(&family.members)) {
    if (theorem != TheoremId::PositiveEdge && theorem != TheoremId::Cardinality)
      throw Error(ErrorCode::UnknownFamily, std::string(to_string(theorem)) + " needs a graph family");
    return detail::verify_pairs(theorem, family.spec, *pairs, bounds, options);
  }
  const auto& graphs = std::get<std::vector<Graph>>(family.members);
  const bool balance_theorem =
      theorem == TheoremId::BalanceBipartiteFwd || theorem == TheoremId::BalanceBipartiteRev;
  const bool quotient = balance_theorem && !bounds.require_strict_universe;
  EnumerateOptions enum_options{true, options.odd_ratio_only};

  // Tasks: (graph, partition of its labeling space).
  std::vector<detail::GraphFacts> facts;
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  std::vector<std::unique_ptr<AiaslEnumerator>> direct;
  std::vector<std::unique_ptr<ShapeEnumerator>> shaped;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    facts.emplace_back(graphs[gi]);
    std::size_t parts = 0;
    if (quotient) {
      shaped.push_back(std::make_unique<ShapeEnumerator>(*facts.back().graph, bounds, enum_options));
      parts = shaped.back()->partitions();
    } else {
      direct.push_back(std::make_unique<AiaslEnumerator>(*facts.back().graph, bounds, enum_options));
      parts = direct.back()->partitions();
    }
    for (std::size_t p = 0; p < parts; ++p) tasks.emplace_back(gi, p);
  }

  auto partials = detail::run_tasks(tasks.size(), options.threads, options.max_counterexamples,
                                    [&](std::size_t t, detail::Partial& out) {
    const auto [gi, part] = tasks[t];
    const auto& f = facts[gi];
    const Graph& g = *f.graph;
    std::vector<Sign> signs(g.edge_count());
    if (theorem == TheoremId::BalanceBipartiteFwd && part == 0) detail::check_constructive(f, out);
    if (quotient) {
      const ShapeEnumerator& en = *shaped[gi];
      en.for_each_in_partition(part, [&](std::span<const std::size_t> shapes, std::uint64_t mult) {
        for (std::size_t id = 0; id < g.edge_count(); ++id)
          signs[id] = en.sign(shapes[g.edge(id).u], shapes[g.edge(id).v]);
        detail::check_balance_theorem(theorem, f, signs, mult, out,
                                      [&](const std::string& c, const std::string& s, const std::string& w) {
          auto labels = en.materialize(shapes);
          out.offer(g, labels, c, s, mult, [&] {
            return Counterexample{g, detail::named_labeling(g, labels, bounds.universe_max), c, s, w};
          });
        });
      });
    } else {
      const AiaslEnumerator& en = *direct[gi];
      en.for_each_in_partition(part, [&](std::span<const std::size_t> assignment) {
        detail::check_direct(theorem, f, en, assignment, signs, out);
      });
    }
  });

  detail::Partial total;
  total.cap = options.max_counterexamples;
  for (auto& p : partials) total.merge(std::move(p));

  VerificationReport r;
  r.theorem = theorem;
  r.family = family.spec;
  r.bounds = bounds;
  r.odd_ratio_only = options.odd_ratio_only;
  r.method = quotient ? "shape-quotient" : "direct";
  r.instances = total.instances;
  r.cases = total.cases;
  r.skipped = total.skipped;
  for (const auto& c : theorem_clauses(theorem)) r.violations[c] = total.violations[c];
  r.counterexample_count = total.count;
  for (auto& k : total.kept) r.counterexamples.push_back(std::move(k.example));
  r.verdict = r.counterexample_count ? Verdict::CounterexampleFound : Verdict::ConfirmedWithinBounds;
  return r;
}

inline VerificationReport verify_theorem(TheoremId theorem, std::string_view family_spec, const SearchBounds& bounds,
                                         const VerifyOptions& options = {}) {
  return verify_theorem(theorem, parse_family(family_spec), bounds, options);
}

inline std::string format_report(const VerificationReport& r) {
  std::string out;
  out += "theorem = " + std::string(to_string(r.theorem)) + "\n";
  out += "family = " + r.family + "\n";
  out += "bounds = " + to_string(r.bounds) + "\n";
  out += std::string("odd_ratio_only = ") + (r.odd_ratio_only ? "true" : "false") + "\n";
  out += "method = " + r.method + "\n";
  out += "instances = " + std::to_string(r.instances) + "\n";
  out += "cases = " + std::to_string(r.cases) + "\n";
  out += "skipped = " + std::to_string(r.skipped) + "\n";
  out += "verdict = " + std::string(to_string(r.verdict)) + "\n";
  out += "counterexamples = " + std::to_string(r.counterexample_count) + "\n";
  for (const auto& [clause, n] : r.violations) out += "violations." + clause + " = " + std::to_string(n) + "\n";
  out += "shown = " + std::to_string(r.counterexamples.size()) + "\n";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    const auto& ce = r.counterexamples[i];
    out += "\n# counterexample " + std::to_string(i + 1) + "\n";
    out += "# clause " + ce.clause + "\n";
    out += "# subject " + ce.subject + "\n";
    out += "# explanation " + ce.explanation + "\n";
    out += "# graph\n" + format_edge_list(ce.graph);
    out += "# labeling\n" + format_labeling(ce.labeling);
  }
  return out;
}

/// Counterexample blocks back out of a formatted report.
inline std::vector<Counterexample> read_counterexamples(std::string_view report) {
  std::vector<Counterexample> out;
  const std::string_view marker = "\n# counterexample ";
  std::size_t pos = report.find(marker);
  while (pos != std::string_view::npos) {
    std::size_t next = report.find(marker, pos + 1);
    std::string_view block = report.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    auto field = [&](std::string_view key) {
      std::string tag = "\n# " + std::string(key) + " ";
      std::size_t at = block.find(tag);
      if (at == std::string_view::npos) throw Error(ErrorCode::ParseError, "counterexample block lacks '" + std::string(key) + "'");
      std::size_t start = at + tag.size();
      return std::string(block.substr(start, block.find('\n', start) - start));
    };
    Bundle b = parse_bundle(block);
    out.push_back({std::move(b.graph), std::move(b.labeling), field("clause"), field("subject"), field("explanation")});
    pos = next;
  }
  return out;
}

}  // namespace iasl
