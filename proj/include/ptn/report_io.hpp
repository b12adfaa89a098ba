#pragma once

#include <charconv>
#include <map>
#include <string>

#include <json.hpp>

#include "ptn/compare.hpp"
#include "ptn/metrics.hpp"

namespace ptn {

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

template <class T>
std::string values_csv(const std::map<std::string, T>& values, const std::string& header = "node,value") {
  std::string out = header + "\n";
  for (const auto& [label, value] : values) {
    bool quote = label.find_first_of(",\"\r\n") != std::string::npos;
    if (quote) {
      out += '"';
      for (char c : label) {
        if (c == '"') out += '"';
        out += c;
      }
      out += '"';
    } else {
      out += label;
    }
    out += ',';
    if constexpr (std::is_floating_point_v<T>)
      out += format_number(value);
    else
      out += std::to_string(value);
    out += '\n';
  }
  return out;
}

inline nlohmann::ordered_json to_json(const DegreeReport& r) {
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [lo, count] : r.histogram)
    hist[std::to_string(lo) + "-" + std::to_string(lo + r.bucket_width - 1)] = count;
  nlohmann::ordered_json per_node = nlohmann::ordered_json::object();
  for (const auto& [label, d] : r.per_node) per_node[label] = d;
  return {{"node_count", r.node_count}, {"edge_count", r.edge_count}, {"average", r.average},
          {"max", r.max},               {"max_node", r.max_node},     {"bucket_width", r.bucket_width},
          {"histogram", hist},          {"per_node", per_node}};
}

inline nlohmann::ordered_json to_json(const BipartiteDegreeReport& r) {
  return {{"node_count", r.node_count},
          {"edge_count", r.edge_count},
          {"average", r.average},
          {"routes", to_json(r.routes)},
          {"stops", to_json(r.stops)}};
}

inline nlohmann::ordered_json to_json(const ComponentReport& r) {
  nlohmann::ordered_json ids = nlohmann::ordered_json::object();
  for (const auto& [label, id] : r.component_id) ids[label] = id;
  return {{"component_count", r.component_count},
          {"giant_size", r.giant_nodes.size()},
          {"giant_fraction", r.giant_fraction},
          {"giant_nodes", r.giant_nodes},
          {"component_id", ids}};
}

inline nlohmann::ordered_json to_json(const DistanceReport& r) {
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (const auto& [d, count] : r.histogram) hist[std::to_string(d)] = count;
  nlohmann::ordered_json cumulative = nlohmann::ordered_json::object();
  for (const auto& [d, f] : r.cumulative_fraction) cumulative[std::to_string(d)] = f;
  return {{"node_count", r.node_count},
          {"reachable_pair_count", r.reachable_pair_count},
          {"unreachable_pair_count", r.unreachable_pair_count},
          {"average", r.average},
          {"diameter", r.diameter},
          {"histogram", hist},
          {"cumulative_fraction", cumulative}};
}

inline std::string distance_csv(const DistanceReport& r) {
  std::string out = "distance,count,cumulative_fraction\n";
  for (const auto& [d, count] : r.histogram)
    out += std::to_string(d) + "," + std::to_string(count) + "," + format_number(r.cumulative_fraction.at(d)) + "\n";
  return out;
}

inline nlohmann::ordered_json values_json(const std::map<std::string, double>& values) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [label, v] : values) out[label] = v;
  return out;
}

inline const char* to_string(Direction d) {
  switch (d) {
    case Direction::Up: return "up";
    case Direction::Down: return "down";
    case Direction::Flat: return "flat";
  }
  return "?";
}

inline nlohmann::ordered_json to_json(const ComparisonReport& r) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& q : r.quantities) {
    nlohmann::ordered_json row;
    row["name"] = q.name;
    row["value_a"] = q.value_a;
    row["value_b"] = q.value_b;
    row["delta"] = q.delta;
    row["percent_change"] = q.percent_change ? nlohmann::ordered_json(*q.percent_change) : nlohmann::ordered_json();
    row["direction"] = to_string(q.direction);
    rows.push_back(std::move(row));
  }
  return {{"label_a", r.label_a}, {"label_b", r.label_b}, {"quantities", rows}};
}

}  // namespace ptn
