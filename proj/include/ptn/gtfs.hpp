#pragma once

#include <charconv>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "ptn/csv.hpp"
#include "ptn/error.hpp"
#include "ptn/feed.hpp"

namespace ptn {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::string where(const csv::Table& table, const csv::Row& row) {
  return table.source() + ":" + std::to_string(row.line);
}

inline double parse_coordinate(const csv::Table& table, const csv::Row& row, std::size_t column,
                               const char* name) {
  std::string_view text = trim(csv::Table::get(row, column));
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw Error(ErrorCode::MalformedRow, where(table, row) + ": unparseable " + name + " '" + std::string(text) + "'");
  return value;
}

}  // namespace detail

/// Reads stops.txt, routes.txt, trips.txt and stop_times.txt from a GTFS
/// directory. Each route serves the union of the stops visited by all of its
/// trips. Rows pointing at unknown trips, stops or routes are skipped and
/// counted in the feed diagnostics; routes left without stops are dropped.
inline Feed parse_gtfs(const std::filesystem::path& directory, std::string label = {}) {
  for (const char* name : {"stops.txt", "routes.txt", "trips.txt", "stop_times.txt"})
    if (!std::filesystem::is_regular_file(directory / name))
      throw Error(ErrorCode::MissingFile, (directory / name).string() + ": required GTFS file not found");

  Feed feed;
  feed.label = label.empty() ? directory.filename().string() : std::move(label);
  if (feed.label.empty()) feed.label = directory.parent_path().filename().string();
  auto& diag = feed.diagnostics;

  {
    auto table = csv::Table::read(directory / "stops.txt");
    auto c_id = table.require("stop_id");
    auto c_name = table.require("stop_name");
    auto c_lat = table.require("stop_lat");
    auto c_lon = table.require("stop_lon");
    for (const auto& row : table.rows()) {
      Stop stop;
      stop.id = std::string(detail::trim(csv::Table::get(row, c_id)));
      if (stop.id.empty()) throw Error(ErrorCode::MalformedRow, detail::where(table, row) + ": empty stop_id");
      stop.name = std::string(csv::Table::get(row, c_name));
      stop.lat = detail::parse_coordinate(table, row, c_lat, "stop_lat");
      stop.lon = detail::parse_coordinate(table, row, c_lon, "stop_lon");
      if (!valid_latitude(stop.lat) || !valid_longitude(stop.lon))
        throw Error(ErrorCode::MalformedRow, detail::where(table, row) + ": coordinates out of range for stop '" + stop.id + "'");
      std::string id = stop.id;
      if (!feed.stops.emplace(id, std::move(stop)).second)
        throw Error(ErrorCode::MalformedRow, detail::where(table, row) + ": duplicate stop_id '" + id + "'");
    }
  }

  std::map<std::string, std::string> route_names;
  {
    auto table = csv::Table::read(directory / "routes.txt");
    auto c_id = table.require("route_id");
    auto c_short = table.column("route_short_name");
    auto c_long = table.column("route_long_name");
    if (!c_short && !c_long)
      throw Error(ErrorCode::MalformedRow, table.source() + ":1: missing required column 'route_short_name' or 'route_long_name'");
    for (const auto& row : table.rows()) {
      std::string id(detail::trim(csv::Table::get(row, c_id)));
      if (id.empty()) throw Error(ErrorCode::MalformedRow, detail::where(table, row) + ": empty route_id");
      std::string name = c_short ? std::string(csv::Table::get(row, *c_short)) : std::string();
      if (name.empty() && c_long) name = std::string(csv::Table::get(row, *c_long));
      if (!route_names.emplace(id, std::move(name)).second)
        throw Error(ErrorCode::MalformedRow, detail::where(table, row) + ": duplicate route_id '" + id + "'");
    }
  }

  std::unordered_map<std::string, std::string> trip_route;
  {
    auto table = csv::Table::read(directory / "trips.txt");
    auto c_route = table.require("route_id");
    auto c_trip = table.require("trip_id");
    for (const auto& row : table.rows()) {
      std::string route(detail::trim(csv::Table::get(row, c_route)));
      std::string trip(detail::trim(csv::Table::get(row, c_trip)));
      if (!route_names.count(route)) {
        ++diag.dangling_reference_count;
        diag.warnings.push_back(detail::where(table, row) + ": trip '" + trip + "' references unknown route '" + route + "'");
        continue;
      }
      trip_route.emplace(std::move(trip), std::move(route));
    }
  }

  std::map<std::string, std::set<std::string>> served;
  {
    auto table = csv::Table::read(directory / "stop_times.txt");
    auto c_trip = table.require("trip_id");
    auto c_stop = table.require("stop_id");
    for (const auto& row : table.rows()) {
      std::string trip(detail::trim(csv::Table::get(row, c_trip)));
      std::string stop(detail::trim(csv::Table::get(row, c_stop)));
      auto it = trip_route.find(trip);
      if (it == trip_route.end()) {
        ++diag.dangling_reference_count;
        diag.warnings.push_back(detail::where(table, row) + ": unknown trip_id '" + trip + "'");
        continue;
      }
      if (!feed.stops.count(stop)) {
        ++diag.dangling_reference_count;
        diag.warnings.push_back(detail::where(table, row) + ": unknown stop_id '" + stop + "'");
        continue;
      }
      served[it->second].insert(std::move(stop));
    }
  }

  for (auto& [id, name] : route_names) {
    auto it = served.find(id);
    if (it == served.end() || it->second.empty()) {
      ++diag.dropped_route_count;
      diag.warnings.push_back("routes.txt: route '" + id + "' serves no resolvable stop, dropped");
      continue;
    }
    feed.routes.emplace(id, Route{id, std::move(name), std::move(it->second)});
  }

  if (feed.routes.empty()) throw Error(ErrorCode::SchemaViolation, directory.string() + ": feed has no usable routes");
  if (feed.stops.empty()) throw Error(ErrorCode::SchemaViolation, directory.string() + ": feed has no stops");
  return feed;
}

}  // namespace ptn
