#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ptn/error.hpp"

namespace ptn {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  std::uint32_t weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph over labelled nodes, stored as sorted adjacency
/// arrays (CSR). Edge weights are positive integers; unweighted graphs carry
/// weight 1 on every edge. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Edges may be given in any orientation and order;
  /// duplicates, self-loops, out-of-range endpoints, zero weights and
  /// repeated labels are rejected.
  static Graph from_edges(std::vector<std::string> labels, std::vector<Edge> edges, bool weighted) {
    Graph g;
    g.labels_ = std::move(labels);
    g.weighted_ = weighted;
    const auto n = g.labels_.size();
    if (n > std::numeric_limits<NodeId>::max()) throw Error(ErrorCode::InvalidGraph, "too many nodes");
    g.index_.reserve(n);
    for (NodeId i = 0; i < n; ++i)
      if (!g.index_.emplace(g.labels_[i], i).second)
        throw Error(ErrorCode::InvalidGraph, "duplicate node label '" + g.labels_[i] + "'");

    for (auto& e : edges) {
      if (e.u >= n || e.v >= n) throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
      if (e.u == e.v) throw Error(ErrorCode::InvalidGraph, "self-loop on '" + g.labels_[e.u] + "'");
      if (e.weight < 1) throw Error(ErrorCode::InvalidGraph, "edge weight must be >= 1");
      if (!weighted) e.weight = 1;
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges.size(); ++i)
      if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
        throw Error(ErrorCode::InvalidGraph,
                    "duplicate edge '" + g.labels_[edges[i].u] + "' - '" + g.labels_[edges[i].v] + "'");
    g.edges_ = std::move(edges);

    g.offsets_.assign(n + 1, 0);
    for (const auto& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.targets_.resize(2 * g.edges_.size());
    g.weights_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v): lower neighbours are written first, then
    // higher ones, so every adjacency list comes out ascending.
    for (const auto& e : g.edges_) {
      g.targets_[cursor[e.v]] = e.u;
      g.weights_[cursor[e.v]++] = e.weight;
    }
    for (const auto& e : g.edges_) {
      g.targets_[cursor[e.u]] = e.v;
      g.weights_[cursor[e.u]++] = e.weight;
    }
    return g;
  }

  /// Builds from label pairs; every endpoint must be one of `labels`.
  static Graph from_labelled_edges(std::vector<std::string> labels,
                                   const std::vector<std::tuple<std::string, std::string, std::uint32_t>>& edges,
                                   bool weighted) {
    std::unordered_map<std::string, NodeId> index;
    for (NodeId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    std::vector<Edge> ids;
    ids.reserve(edges.size());
    for (const auto& [a, b, w] : edges) {
      auto ia = index.find(a), ib = index.find(b);
      if (ia == index.end() || ib == index.end())
        throw Error(ErrorCode::InvalidGraph, "edge endpoint '" + (ia == index.end() ? a : b) + "' is not a node");
      ids.push_back({ia->second, ib->second, w});
    }
    return from_edges(std::move(labels), std::move(ids), weighted);
  }

  std::size_t node_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool weighted() const { return weighted_; }

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Edges with u < v, sorted by (u, v).
  std::span<const Edge> edges() const { return edges_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const std::uint32_t> neighbor_weights(NodeId v) const {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<std::uint32_t> weight(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v, 0},
                               [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
    return it->weight;
  }
  bool has_edge(NodeId u, NodeId v) const { return weight(u, v).has_value(); }

  std::optional<std::uint32_t> weight(const std::string& a, const std::string& b) const {
    auto u = find(a), v = find(b);
    if (!u || !v) return std::nullopt;
    return weight(*u, *v);
  }
  bool has_edge(const std::string& a, const std::string& b) const { return weight(a, b).has_value(); }

  /// Label-keyed edge map ({min label, max label} -> weight), independent of node order.
  std::map<std::pair<std::string, std::string>, std::uint32_t> labelled_edges() const {
    std::map<std::pair<std::string, std::string>, std::uint32_t> out;
    for (const auto& e : edges_) {
      const auto& a = labels_[e.u];
      const auto& b = labels_[e.v];
      out.emplace(a < b ? std::pair{a, b} : std::pair{b, a}, e.weight);
    }
    return out;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<std::uint32_t> weights_;
  bool weighted_ = false;
};

/// Same labels and same edge weights; node order is irrelevant. An
/// unweighted graph compares as if every edge had weight 1.
inline bool equivalent(const Graph& a, const Graph& b) {
  if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
    return false;
  auto la = a.labels(), lb = b.labels();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  return la == lb && a.labelled_edges() == b.labelled_edges();
}

/// Two-mode route/stop incidence graph. Routes and stops are kept in separate
/// label spaces, so a route and a stop may share a label.
struct BipartiteGraph {
  std::vector<std::string> route_nodes;
  std::vector<std::string> stop_nodes;
  /// (route index, stop index), sorted.
  std::vector<std::pair<NodeId, NodeId>> edges;

  std::size_t node_count() const { return route_nodes.size() + stop_nodes.size(); }
  std::size_t edge_count() const { return edges.size(); }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

  /// Checks index ranges and rejects duplicate incidences.
  void validate() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first >= route_nodes.size() || edges[i].second >= stop_nodes.size())
        throw Error(ErrorCode::InvalidGraph, "bipartite edge endpoint out of range");
      if (i > 0 && edges[i] <= edges[i - 1]) throw Error(ErrorCode::InvalidGraph, "bipartite edges not sorted or duplicated");
    }
  }

  /// Incidence as label pairs, independent of node order.
  std::vector<std::pair<std::string, std::string>> labelled_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges.size());
    for (auto [r, s] : edges) out.emplace_back(route_nodes[r], stop_nodes[s]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// One-mode view of a bipartite graph for traversal metrics. Labels are
/// prefixed "route:" and "stop:" to keep the two partitions apart.
inline Graph as_graph(const BipartiteGraph& b) {
  std::vector<std::string> labels;
  labels.reserve(b.node_count());
  for (const auto& r : b.route_nodes) labels.push_back("route:" + r);
  for (const auto& s : b.stop_nodes) labels.push_back("stop:" + s);
  std::vector<Edge> edges;
  edges.reserve(b.edges.size());
  const auto offset = static_cast<NodeId>(b.route_nodes.size());
  for (auto [r, s] : b.edges) edges.push_back({r, offset + s, 1});
  return Graph::from_edges(std::move(labels), std::move(edges), false);
}

}  // namespace ptn
