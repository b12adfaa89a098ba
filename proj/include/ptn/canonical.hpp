#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ptn/error.hpp"
#include "ptn/feed.hpp"

namespace ptn {

// Canonical snapshot document:
//   {"label": str,
//    "stops":  [{"id", "name", "lat", "lon"}, ...],
//    "routes": [{"id", "name", "stops": [id, ...]}, ...]}
// Arrays are sorted by id, route stop lists ascending.

inline nlohmann::ordered_json feed_to_json(const Feed& feed) {
  nlohmann::ordered_json doc;
  doc["label"] = feed.label;
  auto& stops = doc["stops"] = nlohmann::ordered_json::array();
  for (const auto& [id, stop] : feed.stops)
    stops.push_back({{"id", stop.id}, {"name", stop.name}, {"lat", stop.lat}, {"lon", stop.lon}});
  auto& routes = doc["routes"] = nlohmann::ordered_json::array();
  for (const auto& [id, route] : feed.routes) {
    nlohmann::ordered_json served = nlohmann::ordered_json::array();
    for (const auto& s : route.served_stops) served.push_back(s);
    routes.push_back({{"id", route.id}, {"name", route.name}, {"stops", std::move(served)}});
  }
  return doc;
}

inline std::string dump_canonical(const Feed& feed) { return feed_to_json(feed).dump(2) + "\n"; }

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& obj, const char* key, const std::string& context) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorCode::SchemaViolation, context + ": missing field '" + key + "'");
  return *it;
}

inline std::string string_field(const nlohmann::json& obj, const char* key, const std::string& context) {
  const auto& v = field(obj, key, context);
  if (!v.is_string()) throw Error(ErrorCode::SchemaViolation, context + ": field '" + key + "' must be a string");
  return v.get<std::string>();
}

inline double number_field(const nlohmann::json& obj, const char* key, const std::string& context) {
  const auto& v = field(obj, key, context);
  if (!v.is_number()) throw Error(ErrorCode::SchemaViolation, context + ": field '" + key + "' must be a number");
  return v.get<double>();
}

}  // namespace detail

inline Feed feed_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::SchemaViolation, "canonical document must be an object");
  Feed feed;
  feed.label = detail::string_field(doc, "label", "document");

  const auto& stops = detail::field(doc, "stops", "document");
  if (!stops.is_array()) throw Error(ErrorCode::SchemaViolation, "'stops' must be an array");
  for (std::size_t i = 0; i < stops.size(); ++i) {
    std::string ctx = "stops[" + std::to_string(i) + "]";
    if (!stops[i].is_object()) throw Error(ErrorCode::SchemaViolation, ctx + ": must be an object");
    Stop stop{detail::string_field(stops[i], "id", ctx), detail::string_field(stops[i], "name", ctx),
              detail::number_field(stops[i], "lat", ctx), detail::number_field(stops[i], "lon", ctx)};
    if (stop.id.empty()) throw Error(ErrorCode::SchemaViolation, ctx + ": empty id");
    if (!valid_latitude(stop.lat) || !valid_longitude(stop.lon))
      throw Error(ErrorCode::SchemaViolation, ctx + ": coordinates out of range");
    std::string id = stop.id;
    if (!feed.stops.emplace(id, std::move(stop)).second)
      throw Error(ErrorCode::SchemaViolation, ctx + ": duplicate stop id '" + id + "'");
  }

  const auto& routes = detail::field(doc, "routes", "document");
  if (!routes.is_array()) throw Error(ErrorCode::SchemaViolation, "'routes' must be an array");
  for (std::size_t i = 0; i < routes.size(); ++i) {
    std::string ctx = "routes[" + std::to_string(i) + "]";
    if (!routes[i].is_object()) throw Error(ErrorCode::SchemaViolation, ctx + ": must be an object");
    Route route{detail::string_field(routes[i], "id", ctx), detail::string_field(routes[i], "name", ctx), {}};
    if (route.id.empty()) throw Error(ErrorCode::SchemaViolation, ctx + ": empty id");
    const auto& served = detail::field(routes[i], "stops", ctx);
    if (!served.is_array()) throw Error(ErrorCode::SchemaViolation, ctx + ": 'stops' must be an array");
    for (const auto& s : served) {
      if (!s.is_string()) throw Error(ErrorCode::SchemaViolation, ctx + ": stop references must be strings");
      auto id = s.get<std::string>();
      if (!feed.stops.count(id))
        throw Error(ErrorCode::IntegrityViolation, ctx + ": route '" + route.id + "' references unknown stop '" + id + "'");
      route.served_stops.insert(std::move(id));
    }
    if (route.served_stops.empty()) {
      ++feed.diagnostics.dropped_route_count;
      feed.diagnostics.warnings.push_back(ctx + ": route '" + route.id + "' serves no stops, dropped");
      continue;
    }
    std::string id = route.id;
    if (!feed.routes.emplace(id, std::move(route)).second)
      throw Error(ErrorCode::SchemaViolation, ctx + ": duplicate route id '" + id + "'");
  }

  if (feed.stops.empty()) throw Error(ErrorCode::SchemaViolation, "snapshot has no stops");
  if (feed.routes.empty()) throw Error(ErrorCode::SchemaViolation, "snapshot has no routes");
  return feed;
}

inline Feed parse_canonical(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::SchemaViolation, std::string("not valid JSON: ") + e.what());
  }
  return feed_from_json(doc);
}

inline Feed load_canonical(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, file.string() + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_canonical(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), file.string() + ": " + e.message());
  }
}

inline void save_canonical(const Feed& feed, const std::filesystem::path& file) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, file.string() + ": cannot write");
  out << dump_canonical(feed);
  if (!out) throw Error(ErrorCode::Io, file.string() + ": write failed");
}

}  // namespace ptn
