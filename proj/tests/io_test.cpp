#include <gtest/gtest.h>

#include <string>

#include "iasl/io.hpp"
#include "test_support.hpp"

namespace iasl {
namespace {

template <class Fn>
Error error_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "no error thrown";
  return Error(ErrorCode::ParseError, "none");
}

TEST(SetLiteralTest, Parses) {
  EXPECT_EQ(parse_set_literal("{0,2,4}"), (IntegerSet{0, 2, 4}));
  EXPECT_EQ(parse_set_literal("  { 4 , 0 ,2 } "), (IntegerSet{0, 2, 4}));
  EXPECT_EQ(parse_set_literal("{7}"), (IntegerSet{7}));
}

TEST(SetLiteralTest, Errors) {
  EXPECT_EQ(error_of([] { parse_set_literal("{}"); }).code(), ErrorCode::EmptyLabel);
  EXPECT_EQ(error_of([] { parse_set_literal("{ }"); }).code(), ErrorCode::EmptyLabel);
  EXPECT_EQ(error_of([] { parse_set_literal("0,1"); }).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_set_literal("{1,,2}"); }).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_set_literal("{-1}"); }).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_set_literal("{a}"); }).code(), ErrorCode::ParseError);
}

TEST(EdgeListTest, Parses) {
  Graph g = parse_edge_list("# triangle plus a loner\nu v\n\n  v   w\nw u\nvertex z\n");
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.isolated_vertices().size(), 1u);
  EXPECT_EQ(format_edge_list(g), "vertex z\nu v\nu w\nv w\n");
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  auto malformed = error_of([] { parse_edge_list("a b\nb c d\n"); });
  EXPECT_EQ(malformed.code(), ErrorCode::ParseError);
  EXPECT_NE(std::string(malformed.what()).find("line 2"), std::string::npos);

  auto loop = error_of([] { parse_edge_list("a b\n# x\nc c\n"); });
  EXPECT_EQ(loop.code(), ErrorCode::InvalidGraph);
  EXPECT_NE(std::string(loop.what()).find("line 3"), std::string::npos);

  auto parallel = error_of([] { parse_edge_list("a b\nb a\n"); });
  EXPECT_EQ(parallel.code(), ErrorCode::InvalidGraph);
  EXPECT_NE(std::string(parallel.what()).find("line 2"), std::string::npos);
}

TEST(LabelingFileTest, Parses) {
  Labeling f = parse_labeling("universe_max = 8\n# comment\nu: {0,1}\nv:{0, 2}\n");
  EXPECT_EQ(f.universe_max, 8u);
  EXPECT_EQ(f.assignment.at("u"), (IntegerSet{0, 1}));
  EXPECT_EQ(f.assignment.at("v"), (IntegerSet{0, 2}));
  EXPECT_EQ(parse_labeling(format_labeling(f)), f);

  Labeling g = parse_labeling("a: {3}\nb: {1,5}\n");
  EXPECT_EQ(g.universe_max, 5u);
}

TEST(LabelingFileTest, Errors) {
  auto empty = error_of([] { parse_labeling("a: {0}\nu: {}\n"); });
  EXPECT_EQ(empty.code(), ErrorCode::EmptyLabel);
  EXPECT_NE(std::string(empty.what()).find("EMPTY_LABEL"), std::string::npos);
  EXPECT_NE(std::string(empty.what()).find("line 2"), std::string::npos);
  EXPECT_EQ(error_of([] { parse_labeling("a {0}\n"); }).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_labeling("a: {0}\na: {1}\n"); }).code(), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_labeling("universe_max 8\n"); }).code(), ErrorCode::ParseError);
}

TEST(FormatTest, DeriveTableRow) {
  auto s = derive(Graph{{"u", "v"}}, testing::make_labeling({{"u", {0, 1}}, {"v", {0, 2}}}));
  EXPECT_EQ(format_derive_table(s), "u v : {0,1,2,3} +\nEDGES=1\nPOSITIVE=1\nNEGATIVE=0\n");
}

TEST(FormatTest, BalanceReport) {
  auto s = derive(Graph{{"u", "v"}, {"v", "w"}, {"u", "w"}},
                  testing::make_labeling({{"u", {0}}, {"v", {1}}, {"w", {0, 1}}}));
  EXPECT_EQ(format_balance_report(s.graph(), is_balanced_oracle(s)),
            "cycle u v w : negative=1 -\nCYCLES=1\nBALANCED=false\n");
}

TEST(FormatTest, TransformOutcomeRoundTrips) {
  auto s = derive(Graph{{"u", "v"}, {"v", "w"}, {"u", "w"}},
                  testing::make_labeling({{"u", {0, 1}}, {"v", {0, 2}}, {"w", {0, 2, 4}}}, 8));
  auto t = subdivide_edge(s, "u", "v");
  std::string text = format_transform_outcome(t);
  EXPECT_NE(text.find("# added_vertex u~v\n"), std::string::npos);
  EXPECT_NE(text.find("# induced u~v inherited-from-edge from u v\n"), std::string::npos);
  EXPECT_NE(text.find("# balanced false\n"), std::string::npos);
  Bundle b = parse_bundle(text);
  EXPECT_EQ(b.graph, t.result.graph());
  EXPECT_EQ(b.labeling, t.result.labeling());
}

}  // namespace
}  // namespace iasl
