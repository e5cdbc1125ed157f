#include <gtest/gtest.h>

#include <algorithm>

#include "iasl/verify.hpp"
#include "test_support.hpp"

namespace iasl {
namespace {

template <class Fn>
ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

Value mass(const Labeling& f) {
  Value m = 0;
  for (const auto& [name, s] : f.assignment) m += s.mass();
  return m;
}

TEST(ConstructTest, Examples) {
  Graph c4 = cycle_graph(4);
  auto s = derive(c4, construct_balanced_bipartite_labeling(c4));
  EXPECT_TRUE(validate_aiasl(s).valid);
  EXPECT_TRUE(std::all_of(s.signs().begin(), s.signs().end(), [&](Sign x) { return x == s.sign(0); }));
  EXPECT_TRUE(is_balanced_oracle(s).balanced);

  Graph k2{{"u", "v"}};
  auto t = derive(k2, construct_balanced_bipartite_labeling(k2));
  EXPECT_NE(set_parity(t.label("u")), set_parity(t.label("v")));
  EXPECT_EQ(t.edge_label(0).size(), 2u);
  EXPECT_EQ(t.sign(0), Sign::Positive);

  EXPECT_EQ(error_of([] { construct_balanced_bipartite_labeling(cycle_graph(3)); }), ErrorCode::NotBipartite);
}

TEST(ConstructTest, DisconnectedBipartite) {
  std::vector<std::pair<std::string, std::string>> edges{{"a", "b"}, {"c", "d"}};
  Graph g({"z"}, edges);
  auto s = derive(g, construct_balanced_bipartite_labeling(g));
  EXPECT_TRUE(validate_aiasl(s).valid);
  EXPECT_TRUE(is_balanced_fast(s).balanced);
}

TEST(TheoremTagTest, RoundTripAndUnknown) {
  for (TheoremId t : kAllTheorems) EXPECT_EQ(parse_theorem(to_string(t)), t);
  EXPECT_EQ(error_of([] { parse_theorem("FERMAT"); }), ErrorCode::UnknownTheorem);
}

TEST(FamilyTest, Grammar) {
  EXPECT_EQ(std::get<std::vector<Graph>>(parse_family("triangle+path:3").members).size(), 2u);
  EXPECT_EQ(std::get<std::vector<Graph>>(parse_family("connected:4").members).size(), 9u);
  auto pairs = std::get<ApPairFamily>(parse_family("ap-pairs:6,4,5").members);
  EXPECT_EQ(pairs.max_first, 6u);
  EXPECT_EQ(pairs.max_diff, 4u);
  EXPECT_EQ(pairs.max_length, 5u);
  EXPECT_EQ(error_of([] { parse_family("wheel:5"); }), ErrorCode::UnknownFamily);
  EXPECT_EQ(error_of([] { parse_family("nonsense"); }), ErrorCode::UnknownFamily);
  EXPECT_EQ(error_of([] { parse_family("complete:6"); }), ErrorCode::BoundExceeded);
  EXPECT_EQ(error_of([] { parse_family("connected:9"); }), ErrorCode::BoundExceeded);
  EXPECT_EQ(error_of([] { verify_theorem(TheoremId::Subdivision, "ap-pairs:2,2,2", {}); }), ErrorCode::UnknownFamily);
}

TEST(VerifyTest, PairTheoremsConfirmed) {
  auto pos = verify_theorem(TheoremId::PositiveEdge, "ap-pairs:6,4,5", {});
  EXPECT_EQ(pos.verdict, Verdict::ConfirmedWithinBounds);
  EXPECT_GT(pos.cases, 0u);
  EXPECT_TRUE(pos.counterexamples.empty());
  auto card = verify_theorem(TheoremId::Cardinality, "ap-pairs:8,3,4", {});
  EXPECT_EQ(card.verdict, Verdict::ConfirmedWithinBounds);
}

TEST(VerifyTest, ReverseBalanceOnTriangleFindsReplayableCounterexample) {
  SearchBounds b{8, 3, 12, false};
  auto r = verify_theorem(TheoremId::BalanceBipartiteRev, "triangle", b);
  ASSERT_EQ(r.verdict, Verdict::CounterexampleFound);
  ASSERT_FALSE(r.counterexamples.empty());
  EXPECT_EQ(r.counterexample_count, r.violations.at("universal"));
  for (const auto& ce : r.counterexamples) EXPECT_TRUE(replay_counterexample(r.theorem, ce));
  // Reported first is no larger than the all-positive {0,1},{0,2},{0,2,4} instance.
  Labeling reference = testing::make_labeling({{"v0", {0, 1}}, {"v1", {0, 2}}, {"v2", {0, 2, 4}}}, 8);
  EXPECT_LE(mass(r.counterexamples.front().labeling), mass(reference));
  Counterexample ref{cycle_graph(3), reference, "universal", "-", ""};
  EXPECT_TRUE(replay_counterexample(r.theorem, ref));
  // Sorted by (vertex count, mass).
  for (std::size_t i = 1; i < r.counterexamples.size(); ++i)
    EXPECT_LE(mass(r.counterexamples[i - 1].labeling), mass(r.counterexamples[i].labeling));
}

TEST(VerifyTest, ReverseBalanceOddRatioOnlyConfirmed) {
  SearchBounds b{8, 3, 12, false};
  auto r = verify_theorem(TheoremId::BalanceBipartiteRev, "triangle", b, {true, 16, 1});
  EXPECT_EQ(r.verdict, Verdict::ConfirmedWithinBounds);
  EXPECT_GT(r.instances, 0u);
}

TEST(VerifyTest, QuotientInstanceCountMatchesDirectEnumeration) {
  SearchBounds b{5, 3, 12, false};
  auto quotient = verify_theorem(TheoremId::BalanceBipartiteFwd, "connected:4", b);
  std::uint64_t direct = 0;
  for (const Graph& g : connected_graphs_up_to(4)) direct += collect_aiasl(g, b).size();
  EXPECT_EQ(quotient.method, "shape-quotient");
  EXPECT_EQ(quotient.instances, direct);

  b.require_strict_universe = true;
  auto strict = verify_theorem(TheoremId::BalanceBipartiteFwd, "connected:3", b);
  EXPECT_EQ(strict.method, "direct");
}

TEST(VerifyTest, ForwardConstructiveClauseHolds) {
  auto r = verify_theorem(TheoremId::BalanceBipartiteFwd, "shipped:6", SearchBounds{4, 2, 12, false});
  EXPECT_EQ(r.violations.at("constructive"), 0u);
  for (const auto& ce : r.counterexamples) EXPECT_TRUE(replay_counterexample(r.theorem, ce));
}

TEST(VerifyTest, SubdivisionAndHomeomorphismIfDirections) {
  SearchBounds b{4, 2, 12, false};
  auto sub = verify_theorem(TheoremId::Subdivision, "connected:4", b);
  EXPECT_EQ(sub.violations.at("if"), 0u);
  EXPECT_GT(sub.cases, 0u);
  for (const auto& ce : sub.counterexamples) EXPECT_TRUE(replay_counterexample(sub.theorem, ce));

  auto homeo = verify_theorem(TheoremId::Homeomorphism, "connected:4", b);
  EXPECT_EQ(homeo.violations.at("if"), 0u);
  EXPECT_GT(homeo.cases, 0u);
  for (const auto& ce : homeo.counterexamples) EXPECT_TRUE(replay_counterexample(homeo.theorem, ce));
}

TEST(VerifyTest, IasiInjectivityCounterexampleByEnumeration) {
  auto r = verify_theorem(TheoremId::IasiInjectivity, "path:3", SearchBounds{4, 3, 12, false});
  ASSERT_EQ(r.verdict, Verdict::CounterexampleFound);
  const auto& ce = r.counterexamples.front();
  EXPECT_TRUE(replay_counterexample(r.theorem, ce));
  auto s = derive(ce.graph, ce.labeling);
  EXPECT_EQ(s.edge_label(0), s.edge_label(1));
}

TEST(VerifyTest, ReportIsIndependentOfThreadCountAndReadsBack) {
  for (TheoremId t : {TheoremId::BalanceBipartiteRev, TheoremId::Subdivision}) {
    SearchBounds b = t == TheoremId::Subdivision ? SearchBounds{4, 2, 12, false} : SearchBounds{6, 3, 12, false};
    auto one = format_report(verify_theorem(t, "connected:4", b, {false, 5, 1}));
    auto three = format_report(verify_theorem(t, "connected:4", b, {false, 5, 3}));
    EXPECT_EQ(one, three);
    auto r = verify_theorem(t, "connected:4", b, {false, 5, 2});
    auto back = read_counterexamples(format_report(r));
    ASSERT_EQ(back.size(), r.counterexamples.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      EXPECT_EQ(back[i].graph, r.counterexamples[i].graph);
      EXPECT_EQ(back[i].labeling, r.counterexamples[i].labeling);
      EXPECT_EQ(back[i].clause, r.counterexamples[i].clause);
      EXPECT_EQ(back[i].subject, r.counterexamples[i].subject);
      EXPECT_TRUE(replay_counterexample(t, back[i]));
    }
  }
}

TEST(VerifyTest, ReportHeader) {
  auto text = format_report(verify_theorem(TheoremId::BalanceBipartiteRev, "triangle", SearchBounds{8, 3, 12, false}, {false, 1, 1}));
  EXPECT_EQ(text.rfind("theorem = BALANCE_BIPARTITE_REV\n", 0), 0u);
  EXPECT_NE(text.find("\nverdict = COUNTEREXAMPLE_FOUND\n"), std::string::npos);
  EXPECT_NE(text.find("\ncases = "), std::string::npos);
  EXPECT_NE(text.find("\nbounds = "), std::string::npos);
  EXPECT_NE(text.find("\nshown = 1\n"), std::string::npos);
}

}  // namespace
}  // namespace iasl
