#include <gtest/gtest.h>

#include "ptn.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace ptn;
using namespace ptn::testing;

TEST(Degree, TriangleAverage) {
  auto r = degree_report(complete_k(3));
  EXPECT_DOUBLE_EQ(r.average, 2.0);
  EXPECT_EQ(r.max, 2u);
  EXPECT_EQ(r.max_node, "a");
}

TEST(Degree, ThreeLinePSpace) {
  auto r = degree_report(build_p_space(three_line_feed()));
  EXPECT_DOUBLE_EQ(r.average, 6.4);
  EXPECT_EQ(r.max, 9u);
  EXPECT_EQ(r.max_node, "3");
  const std::map<std::string, std::size_t> expected{{"1", 4}, {"10", 5}, {"2", 7}, {"3", 9}, {"4", 7},
                                                    {"5", 9}, {"6", 5},  {"7", 5}, {"8", 8}, {"9", 5}};
  EXPECT_EQ(r.per_node, expected);
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::size_t>{{0, 10}}));
}

TEST(Degree, HistogramBuckets) {
  auto r = degree_report(build_p_space(three_line_feed()), 5);
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::size_t>{{0, 1}, {5, 9}}));
  EXPECT_THROW(degree_report(complete_k(3), 0), Error);
}

TEST(Degree, ThreeLineBSpacePartitions) {
  auto r = degree_report(build_b_space(three_line_feed()));
  EXPECT_DOUBLE_EQ(r.routes.average, 17.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.stops.average, 1.7);
  EXPECT_DOUBLE_EQ(r.average, 2.0 * 17 / 13);
  EXPECT_EQ(r.routes.max, 6u);
  EXPECT_EQ(r.routes.max_node, "B");
  EXPECT_EQ(r.stops.max, 3u);
  EXPECT_EQ(r.stops.max_node, "3");
  std::size_t route_sum = 0, stop_sum = 0;
  for (auto& [k, d] : r.routes.per_node) route_sum += d;
  for (auto& [k, d] : r.stops.per_node) stop_sum += d;
  EXPECT_EQ(route_sum, 17u);
  EXPECT_EQ(stop_sum, 17u);
}

TEST(Degree, EmptyGraph) {
  try {
    degree_report(Graph{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyGraph);
  }
}

TEST(Components, ThreeLineConnected) {
  auto r = giant_component(build_p_space(three_line_feed()));
  EXPECT_EQ(r.component_count, 1u);
  EXPECT_DOUBLE_EQ(r.giant_fraction, 1.0);
}

TEST(Components, TieGoesToSmallestLabel) {
  auto g = labelled_graph({"d", "c", "b", "a"}, {{"c", "d"}, {"a", "b"}});
  auto r = giant_component(g);
  EXPECT_EQ(r.component_count, 2u);
  EXPECT_DOUBLE_EQ(r.giant_fraction, 0.5);
  EXPECT_EQ(r.giant_nodes, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.component_id.at("a"), 0u);
  EXPECT_EQ(r.component_id.at("d"), 1u);
}

TEST(Components, FiveLineCs3) {
  auto r = giant_component(threshold_c_space(build_c_space(five_line_feed()), 3));
  EXPECT_EQ(r.giant_nodes, (std::vector<std::string>{"A", "D"}));
  EXPECT_DOUBLE_EQ(r.giant_fraction, 0.4);
  EXPECT_EQ(r.component_count, 4u);
}

TEST(Components, LargestBeatsEarlierLabel) {
  auto g = labelled_graph({"a", "x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  EXPECT_EQ(giant_component(g).giant_nodes, (std::vector<std::string>{"x", "y", "z"}));
}

TEST(Distance, ThreeLinePSpace) {
  auto r = distance_report(build_p_space(three_line_feed()));
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::uint64_t>{{1, 32}, {2, 13}}));
  EXPECT_DOUBLE_EQ(r.average, 58.0 / 45.0);
  EXPECT_EQ(r.diameter, 2u);
  EXPECT_DOUBLE_EQ(r.cumulative_fraction.at(1), 32.0 / 45.0);
  EXPECT_DOUBLE_EQ(r.cumulative_fraction.at(2), 1.0);
  EXPECT_EQ(r.unreachable_pair_count, 0u);
}

TEST(Distance, PathAndComplete) {
  auto path = distance_report(path_abc());
  EXPECT_EQ(path.histogram, (std::map<std::size_t, std::uint64_t>{{1, 2}, {2, 1}}));
  EXPECT_EQ(path.diameter, 2u);
  EXPECT_DOUBLE_EQ(path.average, 4.0 / 3.0);
  auto k4 = distance_report(complete_k(4));
  EXPECT_EQ(k4.histogram, (std::map<std::size_t, std::uint64_t>{{1, 6}}));
  EXPECT_EQ(k4.diameter, 1u);
  EXPECT_DOUBLE_EQ(k4.average, 1.0);
}

TEST(Distance, DisconnectedAndGiantScope) {
  auto g = labelled_graph({"a", "b", "c", "x", "y", "lonely"}, {{"a", "b"}, {"b", "c"}, {"x", "y"}});
  auto all = distance_report(g);
  EXPECT_EQ(all.reachable_pair_count, 4u);
  EXPECT_EQ(all.unreachable_pair_count, 11u);
  EXPECT_DOUBLE_EQ(all.average, 5.0 / 4.0);
  auto giant = distance_report(g, DistanceScope::GiantOnly);
  EXPECT_EQ(giant.node_count, 3u);
  EXPECT_EQ(giant.histogram, (std::map<std::size_t, std::uint64_t>{{1, 2}, {2, 1}}));
  EXPECT_EQ(giant.unreachable_pair_count, 0u);
}

TEST(Distance, Edgeless) {
  auto r = distance_report(Graph::from_edges({"a", "b"}, {}, false));
  EXPECT_TRUE(r.histogram.empty());
  EXPECT_EQ(r.diameter, 0u);
  EXPECT_EQ(r.average, 0.0);
  EXPECT_EQ(r.unreachable_pair_count, 1u);
}

TEST(Distance, WeightsIgnored) {
  auto c = build_c_space(five_line_feed());
  auto r = distance_report(c);
  EXPECT_EQ(r.histogram, (std::map<std::size_t, std::uint64_t>{{1, 10}}));
}

TEST(Closeness, StarPathAndThreeLine) {
  auto star = closeness(star_c3());
  EXPECT_DOUBLE_EQ(star.at("c"), 1.0);
  EXPECT_DOUBLE_EQ(star.at("l1"), 0.6);
  auto path = closeness(path_abc());
  EXPECT_DOUBLE_EQ(path.at("b"), 1.0);
  EXPECT_DOUBLE_EQ(path.at("a"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(closeness(build_p_space(three_line_feed())).at("3"), 1.0);
}

TEST(Closeness, ComponentLocalAndIsolated) {
  auto g = labelled_graph({"a", "b", "c", "x", "y", "lonely"}, {{"a", "b"}, {"b", "c"}, {"x", "y"}});
  auto c = closeness(g);
  EXPECT_DOUBLE_EQ(c.at("a"), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(c.at("x"), 1.0);
  EXPECT_DOUBLE_EQ(c.at("lonely"), 0.0);
}

TEST(Betweenness, ClosedForms) {
  auto path = betweenness(path_abc());
  EXPECT_DOUBLE_EQ(path.at("b"), 1.0);
  EXPECT_DOUBLE_EQ(path.at("a"), 0.0);
  EXPECT_DOUBLE_EQ(path.at("c"), 0.0);
  auto star = betweenness(star_c3());
  EXPECT_DOUBLE_EQ(star.at("c"), 1.0);
  EXPECT_DOUBLE_EQ(star.at("l2"), 0.0);
  for (const auto& [node, value] : betweenness(cycle_wxyz())) EXPECT_DOUBLE_EQ(value, 1.0 / 6.0) << node;
}

TEST(Betweenness, SmallGraphsAreZero) {
  auto r = betweenness(labelled_graph({"a", "b"}, {{"a", "b"}}));
  EXPECT_EQ(r, (std::map<std::string, double>{{"a", 0.0}, {"b", 0.0}}));
  EXPECT_THROW(betweenness(Graph{}), Error);
}

TEST(Betweenness, UsesWholeGraphNormalization) {
  // path a-b-c plus an isolated node: raw b(b) = 1, n = 4 -> 1 / 3
  auto g = labelled_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}});
  EXPECT_DOUBLE_EQ(betweenness(g).at("b"), 1.0 / 3.0);
}

class OracleEquivalence : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(OracleEquivalence, MatchesBruteForce) {
  const auto seed = GetParam();
  const std::size_t n = 5 + seed * 7 % 80;
  const double p = 0.02 + static_cast<double>(seed % 9) * 0.05;
  auto g = random_graph(n, p, seed);
  oracle::PathOracle ref(g);

  auto dist = distance_report(g);
  EXPECT_EQ(dist.histogram, ref.histogram());

  auto close = closeness(g);
  auto refc = ref.closeness();
  auto betw = betweenness(g);
  auto refb = ref.betweenness();
  for (NodeId v = 0; v < n; ++v) {
    EXPECT_NEAR(close.at(g.label(v)), refc[v], 1e-9);
    EXPECT_NEAR(betw.at(g.label(v)), refb[v], 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(RandomGraphs, OracleEquivalence, ::testing::Range<std::uint64_t>(1, 31));

TEST(Determinism, WorkerCountDoesNotChangeResults) {
  auto g = random_graph(300, 0.03, 99);
  auto d1 = distance_report(g, DistanceScope::All, {1});
  auto b1 = betweenness(g, {1});
  auto c1 = closeness(g, {1});
  for (unsigned workers : {2u, 3u, 8u}) {
    auto d = distance_report(g, DistanceScope::All, {workers});
    EXPECT_EQ(d.histogram, d1.histogram);
    EXPECT_EQ(d.average, d1.average);
    EXPECT_EQ(betweenness(g, {workers}), b1);  // bitwise equal doubles
    EXPECT_EQ(closeness(g, {workers}), c1);
  }
}

TEST(TopK, TiesByLabel) {
  auto degrees = degree_report(build_p_space(three_line_feed())).per_node;
  auto top = top_k(degrees, 2);
  ASSERT_EQ(top.size(), 2u);
  EXPECT_EQ(top[0], (std::pair<std::string, std::size_t>{"3", 9}));
  EXPECT_EQ(top[1], (std::pair<std::string, std::size_t>{"5", 9}));
  EXPECT_TRUE(top_k(degrees, 0).empty());
  EXPECT_EQ(top_k(degrees, 100).size(), 10u);
}

TEST(TopK, ThresholdIsStrictAndOverridesK) {
  std::map<std::string, double> values{{"a", 0.6}, {"b", 1.0}, {"c", 0.59}};
  auto out = top_k(values, 0, 0.59);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].first, "b");
  EXPECT_EQ(out[1].first, "a");
}
