#pragma once

#include <cctype>
#include <charconv>
#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iasl/balance.hpp"
#include "iasl/error.hpp"
#include "iasl/graph.hpp"
#include "iasl/integer_set.hpp"
#include "iasl/labeling.hpp"
#include "iasl/transforms.hpp"

// Plain-text formats:
//   set literal   {0,2,4}             whitespace anywhere is ignored
//   edge list     u v                 one edge per line
//                 vertex u            declares a (possibly isolated) vertex
//   labeling      universe_max = 8    optional header
//                 u: {0,1}            one vertex per line
// Lines starting with '#' are comments in both files.

namespace iasl {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string at_line(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

inline Value parse_value(std::string_view token, std::size_t line) {
  token = trim(token);
  Value v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
    throw Error(ErrorCode::ParseError, at_line(line, "expected a non-negative integer, got '" + std::string(token) + "'"));
  return v;
}

template <class LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    std::size_t nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    std::string_view body = trim(raw);
    if (body.empty() || body.front() == '#') continue;
    fn(body, line);
  }
}

}  // namespace detail

inline IntegerSet parse_set_literal(std::string_view text, std::size_t line = 1) {
  std::string_view s = detail::trim(text);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw Error(ErrorCode::ParseError, detail::at_line(line, "expected a set literal like {0,2,4}, got '" +
                                                                 std::string(text) + "'"));
  s = detail::trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw Error(ErrorCode::EmptyLabel, detail::at_line(line, "set-label {} is empty"));
  std::vector<Value> values;
  while (true) {
    std::size_t comma = s.find(',');
    values.push_back(detail::parse_value(s.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return IntegerSet(std::move(values));
}

inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::size_t> edge_lines;
  detail::for_each_line(text, [&](std::string_view body, std::size_t line) {
    auto tokens = detail::split_ws(body);
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      vertices.emplace_back(tokens[1]);
    } else if (tokens.size() == 2) {
      edges.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
      edge_lines.push_back(line);
    } else {
      throw Error(ErrorCode::ParseError, detail::at_line(line, "expected 'u v' or 'vertex u'"));
    }
  });
  try {
    return Graph(std::move(vertices), edges);
  } catch (const Error& err) {
    // Re-run edge by edge to point at the offending line.
    if (err.code() == ErrorCode::InvalidGraph) {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i].first == edges[i].second || !valid_vertex_name(edges[i].first) ||
            !valid_vertex_name(edges[i].second))
          throw Error(ErrorCode::InvalidGraph, detail::at_line(edge_lines[i], err.what()));
        for (std::size_t j = 0; j < i; ++j)
          if ((edges[j].first == edges[i].first && edges[j].second == edges[i].second) ||
              (edges[j].first == edges[i].second && edges[j].second == edges[i].first))
            throw Error(ErrorCode::InvalidGraph, detail::at_line(edge_lines[i], "parallel edge"));
      }
    }
    throw;
  }
}

inline std::string format_edge_list(const Graph& g) {
  std::string out;
  for (std::size_t v : g.isolated_vertices()) out += "vertex " + g.name(v) + "\n";
  for (std::size_t id = 0; id < g.edge_count(); ++id) out += g.edge_name(id) + "\n";
  return out;
}

inline Labeling parse_labeling(std::string_view text) {
  Labeling f;
  bool have_universe = false;
  detail::for_each_line(text, [&](std::string_view body, std::size_t line) {
    if (body.starts_with("universe_max")) {
      std::size_t eq = body.find('=');
      if (eq == std::string_view::npos || detail::trim(body.substr(0, eq)) != "universe_max")
        throw Error(ErrorCode::ParseError, detail::at_line(line, "expected 'universe_max = N'"));
      f.universe_max = detail::parse_value(body.substr(eq + 1), line);
      have_universe = true;
      return;
    }
    std::size_t colon = body.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::ParseError, detail::at_line(line, "expected 'vertex: {a,b,...}'"));
    std::string name(detail::trim(body.substr(0, colon)));
    if (!valid_vertex_name(name))
      throw Error(ErrorCode::ParseError, detail::at_line(line, "bad vertex id '" + name + "'"));
    IntegerSet set = parse_set_literal(body.substr(colon + 1), line);
    if (!f.assignment.emplace(name, std::move(set)).second)
      throw Error(ErrorCode::ParseError, detail::at_line(line, "vertex '" + name + "' labeled twice"));
  });
  if (!have_universe)
    for (const auto& [name, set] : f.assignment) f.universe_max = std::max(f.universe_max, set.max());
  return f;
}

inline std::string format_labeling(const Labeling& f) {
  std::string out = "universe_max = " + std::to_string(f.universe_max) + "\n";
  for (const auto& [name, set] : f.assignment) out += name + ": " + to_string(set) + "\n";
  return out;
}

/// One row per edge: `u v : {label} +`.
inline std::string format_derive_table(const SignedLabeledGraph& s) {
  std::string out;
  std::size_t positive = 0;
  for (std::size_t id = 0; id < s.graph().edge_count(); ++id) {
    out += s.graph().edge_name(id) + " : " + to_string(s.edge_label(id)) + " " + sign_symbol(s.sign(id)) + "\n";
    positive += s.sign(id) == Sign::Positive;
  }
  out += "EDGES=" + std::to_string(s.graph().edge_count()) + "\n";
  out += "POSITIVE=" + std::to_string(positive) + "\n";
  out += "NEGATIVE=" + std::to_string(s.graph().edge_count() - positive) + "\n";
  return out;
}

inline std::string format_vertex_walk(const Graph& g, std::span<const std::size_t> walk) {
  std::string out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i) out += ' ';
    out += g.name(walk[i]);
  }
  return out;
}

/// One cycle per line with its negative-edge count, then `BALANCED=...`.
inline std::string format_balance_report(const Graph& g, const OracleBalance& b) {
  std::string out;
  for (const auto& c : b.cycles)
    out += "cycle " + format_vertex_walk(g, c.cycle) + " : negative=" + std::to_string(c.negative_edge_count) + " " +
           sign_symbol(c.sign_product) + "\n";
  out += "CYCLES=" + std::to_string(b.cycles.size()) + "\n";
  out += std::string("BALANCED=") + (b.balanced ? "true" : "false") + "\n";
  return out;
}

/// Transform result: provenance as comments, then the graph and labeling in
/// their file formats, each section introduced by a marker comment.
inline std::string format_transform_outcome(const TransformOutcome& t) {
  const Graph& g = t.result.graph();
  std::string out;
  for (const auto& v : t.provenance.added_vertices) out += "# added_vertex " + v + "\n";
  for (const auto& v : t.provenance.removed_vertices) out += "# removed_vertex " + v + "\n";
  for (const auto& [a, b] : t.provenance.added_edges) out += "# added_edge " + a + " " + b + "\n";
  for (const auto& [a, b] : t.provenance.removed_edges) out += "# removed_edge " + a + " " + b + "\n";
  for (const auto& note : t.notes)
    if (note.source != LabelSource::Carried)
      out += "# induced " + note.element + " " + std::string(to_string(note.source)) +
             (note.origin ? " from " + *note.origin : "") + "\n";
  out += "# removed_negative_edges " + std::to_string(t.removed_negative_edges) + "\n";
  out += std::string("# aiasl ") + (t.admissibility.valid ? "valid" : "invalid") + "\n";
  for (const auto& d : t.admissibility.diagnostics)
    out += "# diagnostic " + std::string(to_string(d.clause)) + " " + d.message + "\n";
  out += "# balanced " + std::string(is_balanced_fast(t.result).balanced ? "true" : "false") + "\n";
  out += "# graph\n" + format_edge_list(g);
  out += "# labeling\n" + format_labeling(t.result.labeling());
  return out;
}

struct Bundle {
  Graph graph;
  Labeling labeling;
};

/// Reads text containing `# graph` and `# labeling` sections, as written by
/// format_transform_outcome and in verification reports.
inline Bundle parse_bundle(std::string_view text) {
  std::string graph_text, labeling_text;
  std::string* current = nullptr;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    std::string_view body = detail::trim(line);
    if (body == "# graph") {
      current = &graph_text;
    } else if (body == "# labeling") {
      current = &labeling_text;
    } else if (current) {
      *current += std::string(line) + "\n";
    }
  }
  return {parse_edge_list(graph_text), parse_labeling(labeling_text)};
}

}  // namespace iasl
