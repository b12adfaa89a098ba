#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptn/error.hpp"
#include "ptn/feed.hpp"
#include "ptn/graph.hpp"

namespace ptn {

namespace detail {

/// Dense view of a feed: routes and served stops numbered in label order,
/// each route's stops as ascending stop indices, plus the inverted index.
struct Incidence {
  std::vector<std::string> routes;
  std::vector<std::string> stops;
  std::vector<std::vector<NodeId>> route_stops;
  std::vector<std::vector<NodeId>> stop_routes;

  explicit Incidence(const Feed& feed) {
    stops = served_stop_ids(feed);
    std::unordered_map<std::string, NodeId> stop_index;
    stop_index.reserve(stops.size());
    for (NodeId i = 0; i < stops.size(); ++i) stop_index.emplace(stops[i], i);

    routes.reserve(feed.routes.size());
    route_stops.reserve(feed.routes.size());
    stop_routes.resize(stops.size());
    for (const auto& [id, route] : feed.routes) {
      const auto r = static_cast<NodeId>(routes.size());
      routes.push_back(id);
      auto& list = route_stops.emplace_back();
      list.reserve(route.served_stops.size());
      for (const auto& s : route.served_stops) {
        const NodeId si = stop_index.at(s);
        list.push_back(si);
        stop_routes[si].push_back(r);
      }
    }
  }
};

}  // namespace detail

/// Route partition first (label order), then every stop served by some route.
/// One edge per (route, served stop).
inline BipartiteGraph build_b_space(const Feed& feed) {
  detail::Incidence inc(feed);
  BipartiteGraph b;
  b.route_nodes = std::move(inc.routes);
  b.stop_nodes = std::move(inc.stops);
  for (NodeId r = 0; r < inc.route_stops.size(); ++r)
    for (NodeId s : inc.route_stops[r]) b.edges.emplace_back(r, s);
  return b;
}

/// Stops adjacent iff at least one route serves both. Unweighted.
inline Graph build_p_space(const Feed& feed) {
  detail::Incidence inc(feed);
  const auto n = inc.stops.size();
  std::vector<Edge> edges;
  std::vector<std::uint32_t> stamp(n, UINT32_MAX);
  std::vector<NodeId> higher;
  for (NodeId s = 0; s < n; ++s) {
    higher.clear();
    for (NodeId r : inc.stop_routes[s])
      for (NodeId t : inc.route_stops[r])
        if (t > s && stamp[t] != s) {
          stamp[t] = s;
          higher.push_back(t);
        }
    std::sort(higher.begin(), higher.end());
    for (NodeId t : higher) edges.push_back({s, t, 1});
  }
  return Graph::from_edges(std::move(inc.stops), std::move(edges), false);
}

/// Routes adjacent iff they share a stop; weight = number of shared stops.
/// Only route pairs that meet in the stop-to-routes index are ever visited.
inline Graph build_c_space(const Feed& feed) {
  detail::Incidence inc(feed);
  const auto n = inc.routes.size();
  std::vector<Edge> edges;
  std::vector<std::uint32_t> shared(n, 0);
  std::vector<NodeId> touched;
  for (NodeId r = 0; r < n; ++r) {
    touched.clear();
    for (NodeId s : inc.route_stops[r])
      for (NodeId other : inc.stop_routes[s])
        if (other > r && shared[other]++ == 0) touched.push_back(other);
    std::sort(touched.begin(), touched.end());
    for (NodeId other : touched) {
      edges.push_back({r, other, shared[other]});
      shared[other] = 0;
    }
  }
  return Graph::from_edges(std::move(inc.routes), std::move(edges), true);
}

/// Cs^n: keeps the edges of a C-space graph whose shared-stop count is at
/// least `min_shared`. Node set and weights are unchanged; n = 1 is the identity.
inline Graph threshold_c_space(const Graph& cs, long long min_shared) {
  if (min_shared < 1) throw Error(ErrorCode::InvalidThreshold, "threshold must be >= 1, got " + std::to_string(min_shared));
  std::vector<Edge> kept;
  for (const auto& e : cs.edges())
    if (static_cast<long long>(e.weight) >= min_shared) kept.push_back(e);
  return Graph::from_edges(cs.labels(), std::move(kept), cs.weighted());
}

}  // namespace ptn
