// iasl: command-line front end for integer additive set-labeled signed graphs.
//
// Exit codes: 0 success / property holds, 1 property fails, 2 input error,
// 3 bound exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iasl/iasl.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;
constexpr int kBoundExceeded = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw iasl::Error(iasl::ErrorCode::ParseError, "cannot read '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw iasl::Error(iasl::ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::pair<std::string, std::string> split_edge_arg(const std::string& arg) {
  auto colon = arg.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == arg.size())
    throw iasl::Error(iasl::ErrorCode::ParseError, "edge argument '" + arg + "' must look like u:v");
  return {arg.substr(0, colon), arg.substr(colon + 1)};
}

std::size_t default_cycle_bound() {
  if (const char* env = std::getenv("IASL_CYCLE_BOUND")) {
    try {
      return std::stoul(env);
    } catch (const std::exception&) {
      throw iasl::Error(iasl::ErrorCode::ParseError, "IASL_CYCLE_BOUND must be a positive integer");
    }
  }
  return iasl::kDefaultCycleBound;
}

struct Inputs {
  std::string graph_path;
  std::string labeling_path;
  bool strict = false;

  iasl::SignedLabeledGraph load() const {
    iasl::Graph g = iasl::parse_edge_list(read_file(graph_path));
    iasl::Labeling f = iasl::parse_labeling(read_file(labeling_path));
    return iasl::derive(g, f, {strict});
  }
};

void add_inputs(CLI::App* cmd, Inputs& in) {
  cmd->add_option("-g,--graph", in.graph_path, "edge-list file")->required();
  cmd->add_option("-l,--labeling", in.labeling_path, "labeling file")->required();
  cmd->add_flag("--strict", in.strict, "require vertex and edge labels inside X");
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer additive set-labeled signed graphs"};
  app.require_subcommand(1);
  std::string output_path;
  app.add_option("-o,--output", output_path, "write the main output here instead of stdout");

  Inputs inputs;
  std::optional<std::size_t> cycle_bound_flag;

  auto* derive_cmd = app.add_subcommand("derive", "edge labels and signs");
  add_inputs(derive_cmd, inputs);

  std::string property;
  bool fast = false;
  auto* check_cmd = app.add_subcommand("check", "check aiasl | iasi | balance | cluster");
  check_cmd->add_option("property", property)->required()->check(CLI::IsMember({"aiasl", "iasi", "balance", "cluster"}));
  add_inputs(check_cmd, inputs);
  check_cmd->add_option("--cycle-bound", cycle_bound_flag, "vertex bound for cycle enumeration");
  check_cmd->add_flag("--fast", fast, "balance by camp propagation instead of cycle enumeration");

  std::string op;
  std::vector<std::string> edge_args;
  std::string vertex_arg, new_vertex, graph_out, labeling_out;
  auto* transform_cmd = app.add_subcommand("transform", "subdivide | homeo | delete-vertex | span");
  transform_cmd->add_option("op", op)->required()->check(CLI::IsMember({"subdivide", "homeo", "delete-vertex", "span"}));
  add_inputs(transform_cmd, inputs);
  transform_cmd->add_option("--edge", edge_args, "edge as u:v (span: repeat for each kept edge)");
  transform_cmd->add_option("--vertex", vertex_arg, "vertex for homeo / delete-vertex");
  transform_cmd->add_option("--new-vertex", new_vertex, "id for the subdivision vertex");
  transform_cmd->add_option("--graph-out", graph_out, "write the resulting edge list here");
  transform_cmd->add_option("--labeling-out", labeling_out, "write the resulting labeling here");

  std::string enum_graph;
  iasl::SearchBounds bounds;
  bool no_prune = false, odd_only = false;
  std::size_t limit = static_cast<std::size_t>(-1);
  auto* enum_cmd = app.add_subcommand("enumerate", "all admissible AP labelings of a graph");
  enum_cmd->add_option("-g,--graph", enum_graph, "edge-list file")->required();
  enum_cmd->add_option("--universe-max", bounds.universe_max);
  enum_cmd->add_option("--max-label-size", bounds.max_label_size);
  enum_cmd->add_option("--max-vertices", bounds.max_vertices);
  enum_cmd->add_flag("--strict", bounds.require_strict_universe);
  enum_cmd->add_flag("--no-prune", no_prune, "filter complete assignments instead of pruning");
  enum_cmd->add_flag("--odd-ratio-only", odd_only);
  enum_cmd->add_option("--limit", limit, "print at most this many labelings");

  std::string theorem_tag, family_spec;
  iasl::VerifyOptions verify_options;
  auto* verify_cmd = app.add_subcommand("verify", "exhaustive theorem check");
  verify_cmd->add_option("--theorem", theorem_tag)->required();
  verify_cmd->add_option("--family", family_spec)->required();
  verify_cmd->add_option("--universe-max", bounds.universe_max);
  verify_cmd->add_option("--max-label-size", bounds.max_label_size);
  verify_cmd->add_option("--max-vertices", bounds.max_vertices);
  verify_cmd->add_flag("--strict", bounds.require_strict_universe);
  verify_cmd->add_flag("--odd-ratio-only", verify_options.odd_ratio_only);
  verify_cmd->add_option("--max-counterexamples", verify_options.max_counterexamples);
  verify_cmd->add_option("--threads", verify_options.threads);

  std::string construct_graph;
  auto* construct_cmd = app.add_subcommand("construct", "balanced AIASL for a bipartite graph");
  construct_cmd->add_option("-g,--graph", construct_graph, "edge-list file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::ostringstream out;
  int status = kHolds;
  try {
    const std::size_t cycle_bound = cycle_bound_flag ? *cycle_bound_flag : default_cycle_bound();

    if (*derive_cmd) {
      out << iasl::format_derive_table(inputs.load());
    } else if (*check_cmd) {
      auto s = inputs.load();
      const iasl::Graph& g = s.graph();
      if (property == "aiasl") {
        auto report = iasl::validate_aiasl(s);
        for (const auto& d : report.diagnostics) out << iasl::to_string(d.clause) << " " << d.message << "\n";
        out << "AIASL=" << bool_text(report.valid) << "\n";
        status = report.valid ? kHolds : kFails;
      } else if (property == "iasi") {
        auto collision = iasl::edge_label_collision(s);
        if (collision)
          out << "collision " << g.edge_name(collision->first) << " / " << g.edge_name(collision->second) << " : "
              << iasl::to_string(s.edge_label(collision->first)) << "\n";
        out << "IASI=" << bool_text(!collision) << "\n";
        status = collision ? kFails : kHolds;
      } else if (property == "balance") {
        bool balanced = false;
        if (fast) {
          auto b = iasl::is_balanced_fast(s);
          if (b.camps) {
            out << "camp0 " << iasl::format_vertex_walk(g, b.camps->left) << "\n";
            out << "camp1 " << iasl::format_vertex_walk(g, b.camps->right) << "\n";
          }
          out << "METHOD=fast\nBALANCED=" << bool_text(b.balanced) << "\n";
          balanced = b.balanced;
        } else {
          auto b = iasl::is_balanced_oracle(s, cycle_bound);
          out << "METHOD=oracle\n" << iasl::format_balance_report(g, b);
          balanced = b.balanced;
        }
        status = balanced ? kHolds : kFails;
      } else {
        auto c = iasl::is_clusterable(s);
        for (const auto& cluster : c.clusters) out << "cluster " << iasl::format_vertex_walk(g, cluster) << "\n";
        if (c.violating_cycle) out << "violating_cycle " << iasl::format_vertex_walk(g, c.violating_cycle->vertices) << "\n";
        out << "CLUSTERABLE=" << bool_text(c.clusterable) << "\n";
        status = c.clusterable ? kHolds : kFails;
      }
    } else if (*transform_cmd) {
      auto s = inputs.load();
      auto one_edge = [&] {
        if (edge_args.size() != 1) throw iasl::Error(iasl::ErrorCode::ParseError, op + " needs exactly one --edge u:v");
        return split_edge_arg(edge_args.front());
      };
      auto need_vertex = [&] {
        if (vertex_arg.empty()) throw iasl::Error(iasl::ErrorCode::ParseError, op + " needs --vertex");
        return vertex_arg;
      };
      std::optional<iasl::TransformOutcome> t;
      if (op == "subdivide") {
        auto [u, v] = one_edge();
        t = iasl::subdivide_edge(s, u, v, new_vertex.empty() ? std::nullopt : std::optional<std::string>(new_vertex));
      } else if (op == "homeo") {
        t = iasl::elementary_transformation(s, need_vertex());
      } else if (op == "delete-vertex") {
        t = iasl::delete_vertex(s, need_vertex());
      } else {
        std::vector<std::pair<std::string, std::string>> keep;
        for (const auto& arg : edge_args) keep.push_back(split_edge_arg(arg));
        t = iasl::spanned_subgraph(s, keep);
      }
      out << iasl::format_transform_outcome(*t);
      if (!graph_out.empty()) write_file(graph_out, iasl::format_edge_list(t->result.graph()));
      if (!labeling_out.empty()) write_file(labeling_out, iasl::format_labeling(t->result.labeling()));
    } else if (*enum_cmd) {
      iasl::Graph g = iasl::parse_edge_list(read_file(enum_graph));
      iasl::AiaslEnumerator en(g, bounds, {!no_prune, odd_only});
      std::size_t count = 0;
      en.for_each([&](std::span<const std::size_t> assignment) {
        if (count++ >= limit) return;
        for (std::size_t v = 0; v < assignment.size(); ++v)
          out << (v ? " " : "") << g.name(v) << "=" << iasl::to_string(en.candidates()[assignment[v]]);
        out << "\n";
      });
      out << "COUNT=" << count << "\n";
    } else if (*verify_cmd) {
      auto report = iasl::verify_theorem(iasl::parse_theorem(theorem_tag), family_spec, bounds, verify_options);
      out << iasl::format_report(report);
      status = report.verdict == iasl::Verdict::ConfirmedWithinBounds ? kHolds : kFails;
    } else if (*construct_cmd) {
      iasl::Graph g = iasl::parse_edge_list(read_file(construct_graph));
      out << iasl::format_labeling(iasl::construct_balanced_bipartite_labeling(g));
    }
  } catch (const iasl::Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == iasl::ErrorCode::BoundExceeded) return kBoundExceeded;
    if (e.code() == iasl::ErrorCode::NotBipartite) return kFails;
    return kInputError;
  }

  try {
    if (output_path.empty())
      std::cout << out.str();
    else
      write_file(output_path, out.str());
  } catch (const iasl::Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
  return status;
}
