#pragma once

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ptn/error.hpp"
#include "ptn/feed.hpp"
#include "ptn/graph.hpp"
#include "ptn/metrics.hpp"
#include "ptn/spaces.hpp"

namespace ptn {

struct GiantShare {
  std::size_t size = 0;
  double fraction = 0.0;
};

/// Giant component of Cs^n. An edgeless graph still has single-node
/// components, so this never fails on a non-empty graph.
inline GiantShare giant_share(const Graph& cs, long long min_shared) {
  auto report = giant_component(threshold_c_space(cs, min_shared));
  return {report.giant_nodes.size(), report.giant_fraction};
}

enum class Direction { Up, Down, Flat };

struct Quantity {
  std::string name;
  bool integral = false;
  double value_a = 0.0;
  double value_b = 0.0;
  double delta = 0.0;
  /// 100 * delta / value_a; empty when value_a is 0 and delta is not.
  std::optional<double> percent_change;
  Direction direction = Direction::Flat;
};

struct CompareOptions {
  std::vector<long long> thresholds{1};
  MetricOptions metrics;
  double integer_epsilon = 0.0;
  double real_epsilon = 1e-9;
};

struct ComparisonReport {
  std::string label_a;
  std::string label_b;
  std::vector<Quantity> quantities;

  const Quantity* find(const std::string& name) const {
    for (const auto& q : quantities)
      if (q.name == name) return &q;
    return nullptr;
  }
};

/// Every scalar the comparison tracks for one snapshot, in report order.
struct SnapshotSummary {
  struct Value {
    std::string name;
    bool integral;
    double value;
  };
  std::vector<Value> values;
};

inline SnapshotSummary summarize_snapshot(const Feed& feed, const std::vector<long long>& thresholds,
                                          MetricOptions options = {}) {
  SnapshotSummary out;
  auto add_int = [&](std::string name, std::size_t v) { out.values.push_back({std::move(name), true, static_cast<double>(v)}); };
  auto add_real = [&](std::string name, double v) { out.values.push_back({std::move(name), false, v}); };

  auto b = build_b_space(feed);
  auto p = build_p_space(feed);
  auto c = build_c_space(feed);

  add_int("routes", b.route_nodes.size());
  add_int("stops", b.stop_nodes.size());

  auto b_graph = as_graph(b);
  auto b_deg = degree_report(b);
  auto b_giant = giant_component(b_graph);
  auto b_dist = distance_report(b_graph, DistanceScope::All, options);
  add_int("b_space.nodes", b.node_count());
  add_int("b_space.edges", b.edge_count());
  add_real("b_space.avg_degree_routes", b_deg.routes.average);
  add_real("b_space.avg_degree_stops", b_deg.stops.average);
  add_int("b_space.giant_nodes", b_giant.giant_nodes.size());
  add_real("b_space.giant_fraction", b_giant.giant_fraction);
  add_real("b_space.avg_distance", b_dist.average);
  add_int("b_space.diameter", b_dist.diameter);

  for (auto [prefix, graph] : {std::pair<const char*, const Graph*>{"p_space", &p}, {"c_space", &c}}) {
    const std::string pre = prefix;
    auto deg = degree_report(*graph);
    auto giant = giant_component(*graph);
    auto dist = distance_report(*graph, DistanceScope::All, options);
    add_int(pre + ".nodes", graph->node_count());
    add_int(pre + ".edges", graph->edge_count());
    add_real(pre + ".avg_degree", deg.average);
    add_int(pre + ".giant_nodes", giant.giant_nodes.size());
    add_real(pre + ".giant_fraction", giant.giant_fraction);
    add_real(pre + ".avg_distance", dist.average);
    add_int(pre + ".diameter", dist.diameter);
  }

  for (auto n : thresholds) {
    auto share = giant_share(c, n);
    add_int("cs" + std::to_string(n) + ".giant_nodes", share.size);
    add_real("cs" + std::to_string(n) + ".giant_fraction", share.fraction);
  }
  return out;
}

inline Quantity make_quantity(std::string name, bool integral, double a, double b, const CompareOptions& options) {
  Quantity q;
  q.name = std::move(name);
  q.integral = integral;
  q.value_a = a;
  q.value_b = b;
  q.delta = b - a;
  if (a != 0.0)
    q.percent_change = 100.0 * q.delta / a;
  else if (q.delta == 0.0)
    q.percent_change = 0.0;
  const double eps = integral ? options.integer_epsilon : options.real_epsilon;
  q.direction = std::abs(q.delta) <= eps ? Direction::Flat : (q.delta > 0 ? Direction::Up : Direction::Down);
  return q;
}

namespace detail {

inline SnapshotSummary summarize_attributed(const Feed& feed, const char* which, const CompareOptions& options) {
  try {
    return summarize_snapshot(feed, options.thresholds, options.metrics);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("snapshot ") + which + " '" + feed.label + "': " + e.message());
  }
}

}  // namespace detail

/// Builds every space and metric for both snapshots and pairs them up.
/// Percent changes are relative to `a`.
inline ComparisonReport compare_feeds(const Feed& a, const Feed& b, const CompareOptions& options = {}) {
  for (auto n : options.thresholds)
    if (n < 1) throw Error(ErrorCode::InvalidThreshold, "threshold must be >= 1, got " + std::to_string(n));
  auto sa = detail::summarize_attributed(a, "a", options);
  auto sb = detail::summarize_attributed(b, "b", options);
  ComparisonReport report;
  report.label_a = a.label;
  report.label_b = b.label;
  for (std::size_t i = 0; i < sa.values.size(); ++i)
    report.quantities.push_back(
        make_quantity(sa.values[i].name, sa.values[i].integral, sa.values[i].value, sb.values[i].value, options));
  return report;
}

// ---------------------------------------------------------------------------
// Text rendering
// ---------------------------------------------------------------------------

inline const char* arrow(Direction d) {
  switch (d) {
    case Direction::Up: return "↑";
    case Direction::Down: return "↓";
    case Direction::Flat: return "−";
  }
  return "?";
}

inline std::string format_value(double v, bool integral) {
  char buf[64];
  if (integral)
    std::snprintf(buf, sizeof buf, "%.0f", v);
  else
    std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

/// "−22.75%", "+3.10%", "0.00%", or "n/a". Uses U+2212 for the minus sign.
inline std::string format_percent(const std::optional<double>& pct) {
  if (!pct) return "n/a";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f%%", std::abs(*pct));
  std::string body = buf;
  if (body == "0.00%") return body;
  return (*pct < 0 ? "−" : "+") + body;
}

/// One row per quantity: "name value_a value_b change arrow".
inline std::string render_table(const ComparisonReport& report) {
  std::string out = "quantity " + report.label_a + " " + report.label_b + " change trend\n";
  for (const auto& q : report.quantities) {
    out += q.name + " " + format_value(q.value_a, q.integral) + " " + format_value(q.value_b, q.integral) + " " +
           format_percent(q.percent_change) + " " + arrow(q.direction) + "\n";
  }
  return out;
}

}  // namespace ptn
