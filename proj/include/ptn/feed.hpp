#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ptn/error.hpp"

namespace ptn {

struct Stop {
  std::string id;
  std::string name;
  double lat = 0.0;
  double lon = 0.0;

  friend bool operator==(const Stop&, const Stop&) = default;
};

/// A route is the set of stops it serves. Stop order is not kept.
struct Route {
  std::string id;
  std::string name;
  std::set<std::string> served_stops;

  friend bool operator==(const Route&, const Route&) = default;
};

/// Things noticed while ingesting a feed that did not abort the parse.
struct IngestDiagnostics {
  std::size_t dropped_route_count = 0;
  std::size_t dangling_reference_count = 0;
  std::vector<std::string> warnings;
};

struct Feed {
  std::string label;
  std::map<std::string, Stop> stops;
  std::map<std::string, Route> routes;
  IngestDiagnostics diagnostics;

  /// Diagnostics are not part of a feed's identity.
  friend bool operator==(const Feed& a, const Feed& b) {
    return a.label == b.label && a.stops == b.stops && a.routes == b.routes;
  }
};

struct FeedStats {
  std::size_t route_count = 0;
  std::size_t stop_count = 0;
  std::size_t orphan_stop_count = 0;
  std::size_t dropped_route_count = 0;
  std::size_t dangling_reference_count = 0;
  std::vector<std::string> warnings;
};

inline bool valid_latitude(double lat) { return lat >= -90.0 && lat <= 90.0; }
inline bool valid_longitude(double lon) { return lon >= -180.0 && lon <= 180.0; }

/// Ids of stops served by at least one route, ascending.
inline std::vector<std::string> served_stop_ids(const Feed& feed) {
  std::set<std::string> served;
  for (const auto& [id, route] : feed.routes) served.insert(route.served_stops.begin(), route.served_stops.end());
  return {served.begin(), served.end()};
}

inline FeedStats feed_stats(const Feed& feed) {
  FeedStats stats;
  stats.route_count = feed.routes.size();
  stats.stop_count = feed.stops.size();
  std::size_t served = 0;
  for (const auto& id : served_stop_ids(feed)) served += feed.stops.count(id);
  stats.orphan_stop_count = stats.stop_count - served;
  stats.dropped_route_count = feed.diagnostics.dropped_route_count;
  stats.dangling_reference_count = feed.diagnostics.dangling_reference_count;
  stats.warnings = feed.diagnostics.warnings;
  return stats;
}

/// Checks referential integrity and the usable-snapshot rule.
inline void validate_feed(const Feed& feed) {
  if (feed.stops.empty()) throw Error(ErrorCode::SchemaViolation, "feed has no stops");
  if (feed.routes.empty()) throw Error(ErrorCode::SchemaViolation, "feed has no routes");
  for (const auto& [id, stop] : feed.stops) {
    if (id.empty() || id != stop.id) throw Error(ErrorCode::SchemaViolation, "stop table key mismatch for '" + id + "'");
    if (!valid_latitude(stop.lat) || !valid_longitude(stop.lon))
      throw Error(ErrorCode::SchemaViolation, "stop '" + id + "' has out-of-range coordinates");
  }
  for (const auto& [id, route] : feed.routes) {
    if (id.empty() || id != route.id) throw Error(ErrorCode::SchemaViolation, "route table key mismatch for '" + id + "'");
    if (route.served_stops.empty()) throw Error(ErrorCode::SchemaViolation, "route '" + id + "' serves no stops");
    for (const auto& s : route.served_stops)
      if (!feed.stops.count(s))
        throw Error(ErrorCode::IntegrityViolation, "route '" + id + "' references unknown stop '" + s + "'");
  }
}

}  // namespace ptn
