#pragma once

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ptn.hpp"

namespace ptn::testing {

/// Feed from route definitions; every mentioned stop (plus `extra_stops`) gets
/// a stop record with synthetic coordinates.
inline Feed make_feed(const std::map<std::string, std::set<std::string>>& routes, std::string label = "fixture",
                      const std::vector<std::string>& extra_stops = {}) {
  Feed feed;
  feed.label = std::move(label);
  std::set<std::string> stop_ids(extra_stops.begin(), extra_stops.end());
  for (const auto& [id, stops] : routes) stop_ids.insert(stops.begin(), stops.end());
  int k = 0;
  for (const auto& id : stop_ids) {
    feed.stops.emplace(id, Stop{id, "Stop " + id, -22.90 + 0.01 * k, -43.20 + 0.01 * k});
    ++k;
  }
  for (const auto& [id, stops] : routes) feed.routes.emplace(id, Route{id, "Line " + id, stops});
  return feed;
}

/// Three routes over stops 1..10.
inline Feed three_line_feed() {
  return make_feed({{"A", {"1", "2", "3", "4", "5"}},
                    {"B", {"2", "3", "5", "6", "7", "8"}},
                    {"C", {"3", "4", "5", "8", "9", "10"}}},
                   "three-line");
}

/// Five lines over stops 1..8; the stop table covers 1..10, so 9 and 10 are orphans.
inline Feed five_line_feed() {
  return make_feed({{"A", {"1", "2", "3", "4", "5"}},
                    {"B", {"2", "4", "6", "8"}},
                    {"C", {"2", "6", "7"}},
                    {"D", {"2", "3", "4"}},
                    {"E", {"1", "4", "6", "7"}}},
                   "five-line", {"9", "10"});
}

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    path_ = std::filesystem::temp_directory_path() /
            ("ptn-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  out << text;
}

inline std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Writes a four-file GTFS directory. `trips` maps trip id -> (route id, stop sequence).
inline void write_gtfs(const std::filesystem::path& dir, const Feed& stops_from,
                       const std::vector<std::pair<std::string, std::pair<std::string, std::vector<std::string>>>>& trips,
                       const std::vector<std::string>& route_ids) {
  std::filesystem::create_directories(dir);
  std::string stops = "stop_id,stop_name,stop_lat,stop_lon\n";
  for (const auto& [id, s] : stops_from.stops)
    stops += id + ",\"" + s.name + "\"," + format_number(s.lat) + "," + format_number(s.lon) + "\n";
  write_file(dir / "stops.txt", stops);
  std::string routes = "route_id,agency_id,route_short_name,route_long_name,route_type\n";
  for (const auto& id : route_ids) routes += id + ",1,Line " + id + ",,3\n";
  write_file(dir / "routes.txt", routes);
  std::string trip_text = "route_id,service_id,trip_id\n";
  std::string times = "trip_id,arrival_time,departure_time,stop_id,stop_sequence\n";
  for (const auto& [trip, def] : trips) {
    trip_text += def.first + ",WD," + trip + "\n";
    int seq = 1;
    for (const auto& s : def.second) {
      times += trip + ",08:00:00,08:00:00," + s + "," + std::to_string(seq++) + "\n";
    }
  }
  write_file(dir / "trips.txt", trip_text);
  write_file(dir / "stop_times.txt", times);
}

/// GTFS directory encoding a feed with one trip per route.
inline void write_gtfs(const std::filesystem::path& dir, const Feed& feed) {
  std::vector<std::pair<std::string, std::pair<std::string, std::vector<std::string>>>> trips;
  std::vector<std::string> ids;
  for (const auto& [id, route] : feed.routes) {
    ids.push_back(id);
    trips.push_back({"t_" + id, {id, {route.served_stops.begin(), route.served_stops.end()}}});
  }
  write_gtfs(dir, feed, trips, ids);
}

/// Erdos-Renyi style random graph with labels "n000".
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "n%04zu", i);
    labels.emplace_back(buf);
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, 1});
  return Graph::from_edges(std::move(labels), std::move(edges), false);
}

inline Graph labelled_graph(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::tuple<std::string, std::string, std::uint32_t>> e;
  for (const auto& [a, b] : edges) e.emplace_back(a, b, 1);
  return Graph::from_labelled_edges(std::move(labels), e, false);
}

inline Graph path_abc() { return labelled_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}); }
inline Graph star_c3() { return labelled_graph({"c", "l1", "l2", "l3"}, {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}}); }
inline Graph cycle_wxyz() {
  return labelled_graph({"w", "x", "y", "z"}, {{"w", "x"}, {"x", "y"}, {"y", "z"}, {"z", "w"}});
}
inline Graph complete_k(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) edges.emplace_back(labels[i], labels[j]);
  return labelled_graph(labels, edges);
}

}  // namespace ptn::testing
