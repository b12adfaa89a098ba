#include <gtest/gtest.h>

#include "ptn.hpp"
#include "support/fixtures.hpp"

using namespace ptn;
using namespace ptn::testing;

namespace {

/// `routes` pairwise disjoint routes splitting `stops` stops as evenly as possible.
Feed counted_feed(std::size_t routes, std::size_t stops, const std::string& label) {
  std::map<std::string, std::set<std::string>> defs;
  std::size_t next_stop = 0;
  for (std::size_t r = 0; r < routes; ++r) {
    auto& set = defs["r" + std::to_string(r)];
    const std::size_t size = stops / routes + (r < stops % routes ? 1 : 0);
    for (std::size_t k = 0; k < size; ++k) set.insert("s" + std::to_string(next_stop++));
  }
  return make_feed(defs, label);
}

}  // namespace

TEST(GiantShare, FiveLine) {
  auto c = build_c_space(five_line_feed());
  auto s3 = giant_share(c, 3);
  EXPECT_EQ(s3.size, 2u);
  EXPECT_DOUBLE_EQ(s3.fraction, 0.4);
  auto s1 = giant_share(c, 1);
  EXPECT_EQ(s1.size, 5u);
  EXPECT_DOUBLE_EQ(s1.fraction, 1.0);
  auto s4 = giant_share(c, 4);
  EXPECT_EQ(s4.size, 1u);
  EXPECT_DOUBLE_EQ(s4.fraction, 0.2);
  EXPECT_EQ(giant_component(threshold_c_space(c, 4)).giant_nodes, (std::vector<std::string>{"A"}));
  EXPECT_THROW(giant_share(c, 0), Error);
}

TEST(Compare, CountedFeedsHitTheirTargets) {
  auto feed = counted_feed(488, 7020, "a");
  EXPECT_EQ(feed.routes.size(), 488u);
  EXPECT_EQ(served_stop_ids(feed).size(), 7020u);
}

TEST(Compare, RouteAndStopReductions) {
  CompareOptions options;
  options.thresholds = {1, 50, 100};
  auto report = compare_feeds(counted_feed(488, 7020, "2014"), counted_feed(377, 6656, "2016"), options);
  const auto* routes = report.find("routes");
  ASSERT_NE(routes, nullptr);
  EXPECT_EQ(routes->value_a, 488);
  EXPECT_EQ(routes->value_b, 377);
  EXPECT_NEAR(*routes->percent_change, -22.75, 0.005);
  EXPECT_EQ(routes->direction, Direction::Down);
  const auto* stops = report.find("stops");
  EXPECT_NEAR(*stops->percent_change, -5.19, 0.005);
  for (const char* name : {"cs1.giant_nodes", "cs50.giant_nodes", "cs100.giant_nodes"})
    EXPECT_NE(report.find(name), nullptr) << name;
}

TEST(Compare, IdenticalFeedsAreFlat) {
  auto report = compare_feeds(three_line_feed(), three_line_feed());
  ASSERT_FALSE(report.quantities.empty());
  for (const auto& q : report.quantities) {
    EXPECT_EQ(q.delta, 0.0) << q.name;
    EXPECT_EQ(q.direction, Direction::Flat) << q.name;
    EXPECT_EQ(q.percent_change, 0.0) << q.name;
  }
}

TEST(Compare, Antisymmetry) {
  CompareOptions options;
  options.thresholds = {1, 2, 3};
  auto ab = compare_feeds(three_line_feed(), five_line_feed(), options);
  auto ba = compare_feeds(five_line_feed(), three_line_feed(), options);
  ASSERT_EQ(ab.quantities.size(), ba.quantities.size());
  for (std::size_t i = 0; i < ab.quantities.size(); ++i) {
    EXPECT_EQ(ab.quantities[i].name, ba.quantities[i].name);
    EXPECT_EQ(ab.quantities[i].delta, -ba.quantities[i].delta) << ab.quantities[i].name;
  }
}

TEST(Compare, ValuesMatchStandaloneMetrics) {
  auto three_line = three_line_feed(), five_line = five_line_feed();
  CompareOptions options;
  options.thresholds = {3};
  auto report = compare_feeds(three_line, five_line, options);
  auto value_b = [&](const char* name) { return report.find(name)->value_b; };
  auto value_a = [&](const char* name) { return report.find(name)->value_a; };

  auto p3 = build_p_space(five_line);
  EXPECT_EQ(value_b("p_space.nodes"), p3.node_count());
  EXPECT_EQ(value_b("p_space.edges"), p3.edge_count());
  EXPECT_EQ(value_b("p_space.avg_distance"), distance_report(p3).average);
  EXPECT_EQ(value_b("p_space.diameter"), distance_report(p3).diameter);
  EXPECT_EQ(value_b("stops"), 8);
  EXPECT_EQ(value_b("b_space.avg_degree_routes"), degree_report(build_b_space(five_line)).routes.average);
  EXPECT_EQ(value_b("cs3.giant_nodes"), 2);
  EXPECT_EQ(value_b("cs3.giant_fraction"), 0.4);
  EXPECT_EQ(value_a("c_space.edges"), 3);
  EXPECT_EQ(value_a("p_space.avg_degree"), 6.4);
  EXPECT_EQ(value_a("b_space.avg_degree_stops"), 1.7);
  EXPECT_EQ(value_a("p_space.giant_fraction"), 1.0);

  for (const auto& q : report.quantities) {
    if (q.percent_change) {
      EXPECT_NEAR(*q.percent_change, 100.0 * (q.value_b - q.value_a) / q.value_a, 0.01);
    }
  }
}

TEST(Compare, PercentAgainstZeroBase) {
  CompareOptions options;
  auto q = make_quantity("x", true, 0, 5, options);
  EXPECT_FALSE(q.percent_change.has_value());
  EXPECT_EQ(q.direction, Direction::Up);
  auto r = make_quantity("y", false, 1.0, 1.0 + 1e-12, options);
  EXPECT_EQ(r.direction, Direction::Flat);
}

TEST(Compare, TableRows) {
  CompareOptions options;
  options.thresholds = {1, 50, 100};
  auto report = compare_feeds(counted_feed(488, 7020, "2014"), counted_feed(377, 6656, "2016"), options);
  auto table = render_table(report);
  EXPECT_NE(table.find("\nroutes 488 377 −22.75% ↓\n"), std::string::npos) << table;
  EXPECT_NE(table.find("\nstops 7020 6656 −5.19% ↓\n"), std::string::npos);
  EXPECT_NE(table.find("\ncs100.giant_nodes "), std::string::npos);

  auto flat = render_table(compare_feeds(three_line_feed(), three_line_feed()));
  std::size_t rows = 0;
  for (std::size_t pos = flat.find('\n') + 1; pos < flat.size(); pos = flat.find('\n', pos) + 1) {
    auto line = flat.substr(pos, flat.find('\n', pos) - pos);
    EXPECT_EQ(line.substr(line.size() - 3), "−") << line;
    ++rows;
  }
  EXPECT_EQ(rows, report.quantities.size() - 4);  // three thresholds vs the default one
}

TEST(Compare, PaperPercentageArithmetic) {
  CompareOptions options;
  EXPECT_NEAR(*make_quantity("routes", true, 488, 377, options).percent_change, -22.75, 0.005);
  EXPECT_NEAR(*make_quantity("stops", true, 7020, 6656, options).percent_change, -5.19, 0.005);
  EXPECT_NEAR(100.0 * 53 / 488, 10.86, 0.005);
  EXPECT_NEAR(100.0 * 25 / 377, 6.63, 0.005);
}

TEST(Compare, InvalidThreshold) {
  CompareOptions options;
  options.thresholds = {0};
  EXPECT_THROW(compare_feeds(three_line_feed(), three_line_feed(), options), Error);
}
