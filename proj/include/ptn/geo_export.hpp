#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptn/error.hpp"
#include "ptn/feed.hpp"
#include "ptn/io.hpp"

namespace ptn {

namespace detail {

inline nlohmann::ordered_json point_feature(const Stop& stop, nlohmann::ordered_json properties) {
  nlohmann::ordered_json props;
  props["stop_id"] = stop.id;
  props["name"] = stop.name;
  for (auto& [key, value] : properties.items()) props[key] = value;
  return {{"type", "Feature"},
          {"geometry", {{"type", "Point"}, {"coordinates", {stop.lon, stop.lat}}}},
          {"properties", std::move(props)}};
}

inline nlohmann::ordered_json feature_collection(nlohmann::ordered_json features) {
  return {{"type", "FeatureCollection"}, {"features", std::move(features)}};
}

}  // namespace detail

/// Point layer of stops carrying one metric value each. With a threshold,
/// only stops whose value is strictly greater are kept. Sorted by stop id.
inline nlohmann::ordered_json metric_layer(const Feed& feed, const std::map<std::string, double>& values,
                                           const std::string& metric_name = "value",
                                           std::optional<double> threshold = std::nullopt) {
  if (metric_name == "stop_id" || metric_name == "name")
    throw Error(ErrorCode::InvalidArgument, "metric name collides with a reserved property: " + metric_name);
  auto features = nlohmann::ordered_json::array();
  for (const auto& [id, value] : values) {
    auto stop = feed.stops.find(id);
    if (stop == feed.stops.end()) throw Error(ErrorCode::UnknownStop, "value for unknown stop '" + id + "'");
    if (threshold && !(value > *threshold)) continue;
    features.push_back(detail::point_feature(stop->second, {{metric_name, value}}));
  }
  return detail::feature_collection(std::move(features));
}

inline void export_metric_layer(const Feed& feed, const std::map<std::string, double>& values,
                                std::optional<double> threshold, const std::filesystem::path& file,
                                const std::string& metric_name = "value") {
  detail::write_text(file, metric_layer(feed, values, metric_name, threshold).dump(2) + "\n");
}

/// For each stop, how many of the selected routes serve it. Stops served by
/// at most one selected route are left out.
inline std::map<std::string, std::size_t> route_intensity(const Feed& feed, const std::vector<std::string>& selected) {
  if (selected.empty()) throw Error(ErrorCode::InvalidArgument, "no routes selected");
  std::set<std::string> unique(selected.begin(), selected.end());
  std::map<std::string, std::size_t> count;
  for (const auto& id : unique) {
    auto route = feed.routes.find(id);
    if (route == feed.routes.end()) throw Error(ErrorCode::UnknownRoute, "unknown route '" + id + "'");
    for (const auto& s : route->second.served_stops) ++count[s];
  }
  std::erase_if(count, [](const auto& kv) { return kv.second <= 1; });
  return count;
}

inline nlohmann::ordered_json route_intensity_layer(const Feed& feed, const std::vector<std::string>& selected) {
  auto features = nlohmann::ordered_json::array();
  for (const auto& [id, intensity] : route_intensity(feed, selected))
    features.push_back(detail::point_feature(feed.stops.at(id), {{"intensity", intensity}}));
  return detail::feature_collection(std::move(features));
}

inline void export_route_intensity(const Feed& feed, const std::vector<std::string>& selected,
                                   const std::filesystem::path& file) {
  detail::write_text(file, route_intensity_layer(feed, selected).dump(2) + "\n");
}

}  // namespace ptn
