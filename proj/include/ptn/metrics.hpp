#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptn/error.hpp"
#include "ptn/graph.hpp"
#include "ptn/parallel.hpp"

namespace ptn {

// ---------------------------------------------------------------------------
// Degree
// ---------------------------------------------------------------------------

struct DegreeReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::map<std::string, std::size_t> per_node;
  /// Mean degree. One-mode graphs: 2m / n. A bipartite partition: m / |partition|.
  double average = 0.0;
  std::size_t max = 0;
  std::string max_node;  // smallest label among the maxima
  std::size_t bucket_width = 50;
  /// Bucket lower bound -> node count; bucket k covers [k, k + bucket_width).
  std::map<std::size_t, std::size_t> histogram;
};

struct BipartiteDegreeReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double average = 0.0;  // 2m / n over both partitions
  DegreeReport routes;
  DegreeReport stops;
};

namespace detail {

inline DegreeReport summarize_degrees(const std::vector<std::string>& labels, const std::vector<std::size_t>& degrees,
                                      std::size_t edge_count, double average, std::size_t bucket_width) {
  if (bucket_width == 0) throw Error(ErrorCode::InvalidArgument, "histogram bucket width must be >= 1");
  DegreeReport r;
  r.node_count = labels.size();
  r.edge_count = edge_count;
  r.average = average;
  r.bucket_width = bucket_width;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const auto d = degrees[i];
    r.per_node.emplace(labels[i], d);
    ++r.histogram[d / bucket_width * bucket_width];
    if (i == 0 || d > r.max || (d == r.max && labels[i] < r.max_node)) {
      r.max = d;
      r.max_node = labels[i];
    }
  }
  return r;
}

}  // namespace detail

inline DegreeReport degree_report(const Graph& g, std::size_t bucket_width = 50) {
  if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "degree report needs at least one node");
  std::vector<std::size_t> degrees(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  const double average = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.node_count());
  return detail::summarize_degrees(g.labels(), degrees, g.edge_count(), average, bucket_width);
}

inline BipartiteDegreeReport degree_report(const BipartiteGraph& b, std::size_t bucket_width = 50) {
  if (b.route_nodes.empty() || b.stop_nodes.empty())
    throw Error(ErrorCode::EmptyGraph, "bipartite degree report needs nodes in both partitions");
  std::vector<std::size_t> route_degree(b.route_nodes.size(), 0), stop_degree(b.stop_nodes.size(), 0);
  for (auto [r, s] : b.edges) {
    ++route_degree[r];
    ++stop_degree[s];
  }
  const auto m = static_cast<double>(b.edge_count());
  BipartiteDegreeReport out;
  out.node_count = b.node_count();
  out.edge_count = b.edge_count();
  out.average = 2.0 * m / static_cast<double>(b.node_count());
  out.routes = detail::summarize_degrees(b.route_nodes, route_degree, b.edge_count(),
                                         m / static_cast<double>(b.route_nodes.size()), bucket_width);
  out.stops = detail::summarize_degrees(b.stop_nodes, stop_degree, b.edge_count(),
                                        m / static_cast<double>(b.stop_nodes.size()), bucket_width);
  return out;
}

// ---------------------------------------------------------------------------
// Connected components
// ---------------------------------------------------------------------------

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  std::size_t size(std::size_t x) { return size_[find(x)]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

struct ComponentReport {
  /// Components are numbered 0.. in order of their smallest label.
  std::map<std::string, std::size_t> component_id;
  std::size_t component_count = 0;
  std::vector<std::string> giant_nodes;  // ascending
  double giant_fraction = 0.0;
  std::size_t giant_id = 0;
};

/// Largest component wins; ties go to the component holding the smallest label.
inline ComponentReport giant_component(const Graph& g) {
  const auto n = g.node_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "component analysis needs at least one node");
  UnionFind uf(n);
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);

  std::vector<NodeId> by_label(n);
  std::iota(by_label.begin(), by_label.end(), 0);
  std::sort(by_label.begin(), by_label.end(), [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });

  ComponentReport r;
  std::vector<std::size_t> root_id(n, SIZE_MAX);
  std::size_t best_size = 0;
  for (NodeId v : by_label) {
    auto root = uf.find(v);
    if (root_id[root] == SIZE_MAX) {
      root_id[root] = r.component_count++;
      // first visit happens at the component's smallest label, so a strict
      // comparison keeps the earliest component on ties
      if (uf.size(root) > best_size) {
        best_size = uf.size(root);
        r.giant_id = root_id[root];
      }
    }
    r.component_id.emplace(g.label(v), root_id[root]);
  }
  for (NodeId v : by_label)
    if (root_id[uf.find(v)] == r.giant_id) r.giant_nodes.push_back(g.label(v));
  r.giant_fraction = static_cast<double>(r.giant_nodes.size()) / static_cast<double>(n);
  return r;
}

// ---------------------------------------------------------------------------
// Geodesic distances, closeness
// ---------------------------------------------------------------------------

enum class DistanceScope { All, GiantOnly };

struct DistanceReport {
  std::size_t node_count = 0;  // nodes in scope
  /// distance -> number of unordered node pairs at that hop distance
  std::map<std::size_t, std::uint64_t> histogram;
  std::uint64_t reachable_pair_count = 0;
  std::uint64_t unreachable_pair_count = 0;
  double average = 0.0;       // over reachable pairs; 0 when there are none
  std::size_t diameter = 0;   // 0 when there are no reachable pairs
  std::map<std::size_t, double> cumulative_fraction;
};

namespace detail {

constexpr std::size_t kSourceChunk = 32;

struct Bfs {
  std::vector<std::int32_t> dist;
  std::vector<NodeId> order;

  explicit Bfs(std::size_t n) : dist(n, -1) { order.reserve(n); }

  /// Visits the component of `s`; `order` holds nodes by nondecreasing distance.
  void run(const Graph& g, NodeId s) {
    for (NodeId v : order) dist[v] = -1;
    order.clear();
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      const std::int32_t next = dist[v] + 1;
      for (NodeId w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = next;
          order.push_back(w);
        }
    }
  }
};

struct DistanceSweep {
  std::vector<std::uint64_t> distance_sum;  // per node
  std::vector<std::size_t> reached;         // per node, including itself
  std::vector<std::uint64_t> histogram;     // pairs (s, t) with s < t
};

/// One BFS per source. Integer accumulation only, so the result is exact and
/// independent of scheduling.
inline DistanceSweep distance_sweep(const Graph& g, const std::vector<NodeId>& sources, unsigned workers) {
  const auto n = g.node_count();
  DistanceSweep out;
  out.distance_sum.assign(n, 0);
  out.reached.assign(n, 0);
  const std::size_t chunks = (sources.size() + kSourceChunk - 1) / kSourceChunk;
  std::vector<std::vector<std::uint64_t>> partial(chunks);

  run_tasks(chunks, workers, [&](std::size_t c) {
    Bfs bfs(n);
    auto& hist = partial[c];
    const auto end = std::min(sources.size(), (c + 1) * kSourceChunk);
    for (std::size_t i = c * kSourceChunk; i < end; ++i) {
      const NodeId s = sources[i];
      bfs.run(g, s);
      std::uint64_t sum = 0;
      for (NodeId t : bfs.order) {
        const auto d = static_cast<std::size_t>(bfs.dist[t]);
        sum += d;
        if (t > s) {
          if (hist.size() <= d) hist.resize(d + 1, 0);
          ++hist[d];
        }
      }
      out.distance_sum[s] = sum;
      out.reached[s] = bfs.order.size();
    }
  });

  for (const auto& hist : partial) {
    if (out.histogram.size() < hist.size()) out.histogram.resize(hist.size(), 0);
    for (std::size_t d = 0; d < hist.size(); ++d) out.histogram[d] += hist[d];
  }
  return out;
}

inline std::vector<NodeId> all_nodes(const Graph& g) {
  std::vector<NodeId> v(g.node_count());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace detail

/// Hop-count distance distribution. Edge weights are ignored.
inline DistanceReport distance_report(const Graph& g, DistanceScope scope = DistanceScope::All,
                                      MetricOptions options = {}) {
  if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "distance report needs at least one node");
  std::vector<NodeId> sources;
  if (scope == DistanceScope::GiantOnly) {
    for (const auto& label : giant_component(g).giant_nodes) sources.push_back(*g.find(label));
    std::sort(sources.begin(), sources.end());
  } else {
    sources = detail::all_nodes(g);
  }
  auto sweep = detail::distance_sweep(g, sources, options.workers);

  DistanceReport r;
  r.node_count = sources.size();
  std::uint64_t weighted = 0;
  for (std::size_t d = 1; d < sweep.histogram.size(); ++d) {
    if (sweep.histogram[d] == 0) continue;
    r.histogram.emplace(d, sweep.histogram[d]);
    r.reachable_pair_count += sweep.histogram[d];
    weighted += d * sweep.histogram[d];
    r.diameter = d;
  }
  const std::uint64_t total = static_cast<std::uint64_t>(r.node_count) * (r.node_count - 1) / 2;
  r.unreachable_pair_count = total - r.reachable_pair_count;
  if (r.reachable_pair_count > 0) {
    r.average = static_cast<double>(weighted) / static_cast<double>(r.reachable_pair_count);
    std::uint64_t running = 0;
    for (const auto& [d, count] : r.histogram) {
      running += count;
      r.cumulative_fraction.emplace(d, static_cast<double>(running) / static_cast<double>(r.reachable_pair_count));
    }
  }
  return r;
}

/// Component-local closeness: (|C| - 1) / sum of distances to the rest of C.
/// Isolated nodes get 0.
inline std::map<std::string, double> closeness(const Graph& g, MetricOptions options = {}) {
  if (g.node_count() == 0) throw Error(ErrorCode::EmptyGraph, "closeness needs at least one node");
  auto sweep = detail::distance_sweep(g, detail::all_nodes(g), options.workers);
  std::map<std::string, double> out;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const double value = sweep.reached[v] < 2 ? 0.0
                                              : static_cast<double>(sweep.reached[v] - 1) /
                                                    static_cast<double>(sweep.distance_sum[v]);
    out.emplace(g.label(v), value);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Betweenness
// ---------------------------------------------------------------------------

namespace detail {

/// Shortest-path counting plus reverse dependency accumulation from a single
/// source. Adds the source's dependency on every other node into `acc`.
struct DependencyPass {
  std::vector<std::int32_t> dist;
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<NodeId> order;

  explicit DependencyPass(std::size_t n) : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) { order.reserve(n); }

  void run(const Graph& g, NodeId s, std::vector<double>& acc) {
    for (NodeId v : order) {
      dist[v] = -1;
      sigma[v] = 0.0;
      delta[v] = 0.0;
    }
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId v = order[head];
      const std::int32_t next = dist[v] + 1;
      const double paths = sigma[v];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = next;
          order.push_back(w);
        }
        if (dist[w] == next) sigma[w] += paths;
      }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
      const NodeId v = order[i];
      const std::int32_t next = dist[v] + 1;
      double dep = 0.0;
      for (NodeId w : g.neighbors(v))
        if (dist[w] == next) dep += (1.0 + delta[w]) / sigma[w];
      delta[v] = sigma[v] * dep;
      acc[v] += delta[v];
    }
  }
};

}  // namespace detail

/// Raw betweenness: sum over unordered pairs {s, t} (s, t != v) of the share
/// of s-t geodesics passing through v. Pairs in different components add 0.
inline std::vector<double> raw_betweenness(const Graph& g, MetricOptions options = {}) {
  const auto n = g.node_count();
  std::vector<double> total(n, 0.0);
  const std::size_t chunks = (n + detail::kSourceChunk - 1) / detail::kSourceChunk;
  const unsigned workers = detail::resolve_workers(options.workers);
  // Chunk partials are folded into `total` strictly in chunk order, so the
  // floating-point result is the same for any worker count.
  const std::size_t wave = std::max<std::size_t>(1, workers) * 2;
  for (std::size_t first = 0; first < chunks; first += wave) {
    const std::size_t count = std::min(wave, chunks - first);
    std::vector<std::vector<double>> partial(count);
    detail::run_tasks(count, workers, [&](std::size_t k) {
      auto& acc = partial[k];
      acc.assign(n, 0.0);
      detail::DependencyPass pass(n);
      const std::size_t c = first + k;
      const auto end = std::min<std::size_t>(n, (c + 1) * detail::kSourceChunk);
      for (std::size_t s = c * detail::kSourceChunk; s < end; ++s) pass.run(g, static_cast<NodeId>(s), acc);
    });
    for (const auto& acc : partial)
      for (std::size_t v = 0; v < n; ++v) total[v] += acc[v];
  }
  for (auto& b : total) b /= 2.0;  // each unordered pair was seen from both ends
  return total;
}

/// Betweenness normalized by (n-1)(n-2)/2 over the whole graph; all zero when n < 3.
inline std::map<std::string, double> betweenness(const Graph& g, MetricOptions options = {}) {
  const auto n = g.node_count();
  if (n == 0) throw Error(ErrorCode::EmptyGraph, "betweenness needs at least one node");
  std::map<std::string, double> out;
  if (n < 3) {
    for (const auto& label : g.labels()) out.emplace(label, 0.0);
    return out;
  }
  const auto raw = raw_betweenness(g, options);
  const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
  for (NodeId v = 0; v < n; ++v) out.emplace(g.label(v), raw[v] / pairs);
  return out;
}

// ---------------------------------------------------------------------------
// Ranking
// ---------------------------------------------------------------------------

/// Descending by value, ties ascending by label. With a threshold, returns
/// every node whose value is strictly greater and ignores k.
template <class T>
std::vector<std::pair<std::string, T>> top_k(const std::map<std::string, T>& values, std::size_t k,
                                             std::optional<double> threshold = std::nullopt) {
  std::vector<std::pair<std::string, T>> ranked;
  for (const auto& [label, value] : values)
    if (!threshold || static_cast<double>(value) > *threshold) ranked.emplace_back(label, value);
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (!threshold && ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace ptn
