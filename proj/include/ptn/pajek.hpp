#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptn/error.hpp"
#include "ptn/graph.hpp"
#include "ptn/io.hpp"

namespace ptn {

// Undirected Pajek NET:
//   *Vertices N        (two-mode: *Vertices N P, P = size of first partition)
//   i "label"          for i = 1..N
//   *Edges
//   u v w              1-based endpoints, positive integer weight
// LF line endings.

namespace detail {

inline void append_vertex_line(std::string& out, std::size_t index, const std::string& label) {
  if (label.find_first_of("\"\r\n") != std::string::npos)
    throw Error(ErrorCode::MalformedNet, "label cannot be written to NET: '" + label + "'");
  out += std::to_string(index);
  out += " \"";
  out += label;
  out += "\"\n";
}

inline void append_edge_line(std::string& out, std::size_t u, std::size_t v, std::uint32_t w) {
  out += std::to_string(u);
  out += ' ';
  out += std::to_string(v);
  out += ' ';
  out += std::to_string(w);
  out += '\n';
}

}  // namespace detail

inline std::string to_pajek_net(const Graph& g) {
  std::string out = "*Vertices " + std::to_string(g.node_count()) + "\n";
  for (NodeId i = 0; i < g.node_count(); ++i) detail::append_vertex_line(out, i + 1, g.label(i));
  out += "*Edges\n";
  for (const auto& e : g.edges()) detail::append_edge_line(out, e.u + 1, e.v + 1, e.weight);
  return out;
}

/// Route nodes occupy indices 1..P, stop nodes P+1..N.
inline std::string to_pajek_net(const BipartiteGraph& b) {
  const auto p = b.route_nodes.size();
  std::string out = "*Vertices " + std::to_string(b.node_count()) + " " + std::to_string(p) + "\n";
  std::size_t index = 1;
  for (const auto& r : b.route_nodes) detail::append_vertex_line(out, index++, r);
  for (const auto& s : b.stop_nodes) detail::append_vertex_line(out, index++, s);
  out += "*Edges\n";
  for (auto [r, s] : b.edges) detail::append_edge_line(out, r + 1, p + s + 1, 1);
  return out;
}

inline void write_pajek_net(const Graph& g, const std::filesystem::path& file) {
  detail::write_text(file, to_pajek_net(g));
}
inline void write_pajek_net(const BipartiteGraph& b, const std::filesystem::path& file) {
  detail::write_text(file, to_pajek_net(b));
}

/// Parsed NET contents before they are committed to a graph type.
struct PajekNetwork {
  std::vector<std::string> labels;
  std::optional<std::size_t> first_partition;
  std::vector<Edge> edges;  // 0-based, as listed

  /// One-mode graph; weighted iff some weight differs from 1.
  Graph to_graph() const {
    bool weighted = std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.weight != 1; });
    try {
      return Graph::from_edges(labels, edges, weighted);
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedNet, e.message());
    }
  }

  /// Requires a partition line; every edge must cross the partition.
  BipartiteGraph to_bipartite() const {
    if (!first_partition) throw Error(ErrorCode::MalformedNet, "network has no partition size on the *Vertices line");
    const auto p = *first_partition;
    BipartiteGraph b;
    b.route_nodes.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(p));
    b.stop_nodes.assign(labels.begin() + static_cast<std::ptrdiff_t>(p), labels.end());
    for (const auto& e : edges) {
      auto lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
      if (lo >= p || hi < p) throw Error(ErrorCode::MalformedNet, "edge inside one partition of a two-mode network");
      if (e.weight != 1) throw Error(ErrorCode::MalformedNet, "two-mode edges must have weight 1");
      b.edges.emplace_back(lo, static_cast<NodeId>(hi - p));
    }
    std::sort(b.edges.begin(), b.edges.end());
    if (std::adjacent_find(b.edges.begin(), b.edges.end()) != b.edges.end())
      throw Error(ErrorCode::MalformedNet, "duplicate edge in two-mode network");
    return b;
  }
};

namespace detail {

inline bool starts_with_keyword(std::string_view line, std::string_view keyword) {
  if (line.size() < keyword.size()) return false;
  for (std::size_t i = 0; i < keyword.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(line[i])) != std::tolower(static_cast<unsigned char>(keyword[i])))
      return false;
  return line.size() == keyword.size() || std::isspace(static_cast<unsigned char>(line[keyword.size()]));
}

inline std::string_view next_token(std::string_view& rest) {
  while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
  std::size_t end = 0;
  while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
  auto token = rest.substr(0, end);
  rest.remove_prefix(end);
  return token;
}

template <class T>
bool parse_integer(std::string_view token, T& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return !token.empty() && ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace detail

inline PajekNetwork parse_pajek_net(std::string_view text) {
  auto fail = [](std::size_t line, const std::string& why) -> Error {
    return Error(ErrorCode::MalformedNet, "line " + std::to_string(line) + ": " + why);
  };

  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '%') continue;
    lines.emplace_back(number, line.substr(first));
  }

  if (lines.empty() || !detail::starts_with_keyword(lines[0].second, "*vertices"))
    throw fail(lines.empty() ? 1 : lines[0].first, "expected '*Vertices N'");

  PajekNetwork net;
  std::size_t n = 0;
  {
    auto rest = lines[0].second.substr(9);
    auto count = detail::next_token(rest);
    if (!detail::parse_integer(count, n)) throw fail(lines[0].first, "bad vertex count");
    auto partition = detail::next_token(rest);
    if (!partition.empty()) {
      std::size_t p = 0;
      if (!detail::parse_integer(partition, p) || p > n) throw fail(lines[0].first, "bad partition size");
      net.first_partition = p;
    }
    if (!detail::next_token(rest).empty()) throw fail(lines[0].first, "trailing tokens after vertex count");
  }

  net.labels.resize(n);
  std::vector<bool> seen(n, false);
  std::size_t i = 1;
  for (; i < lines.size() && lines[i].second.front() != '*'; ++i) {
    auto [line_no, rest] = lines[i];
    std::size_t index = 0;
    if (!detail::parse_integer(detail::next_token(rest), index) || index < 1 || index > n)
      throw fail(line_no, "vertex index out of range");
    if (seen[index - 1]) throw fail(line_no, "vertex listed twice");
    seen[index - 1] = true;
    while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
    if (!rest.empty() && rest.front() == '"') {
      auto close = rest.find('"', 1);
      if (close == std::string_view::npos) throw fail(line_no, "unterminated vertex label");
      net.labels[index - 1] = std::string(rest.substr(1, close - 1));
    } else {
      net.labels[index - 1] = std::string(detail::next_token(rest));
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    if (!seen[k]) net.labels[k] = std::to_string(k + 1);

  if (i < lines.size()) {
    auto [line_no, header] = lines[i];
    if (detail::starts_with_keyword(header, "*arcs") || detail::starts_with_keyword(header, "*arcslist"))
      throw fail(line_no, "directed arcs are not supported");
    if (!detail::starts_with_keyword(header, "*edges")) throw fail(line_no, "expected '*Edges'");
    for (++i; i < lines.size(); ++i) {
      auto [edge_line, rest] = lines[i];
      if (rest.front() == '*') throw fail(edge_line, "unexpected section '" + std::string(rest) + "'");
      std::size_t u = 0, v = 0;
      if (!detail::parse_integer(detail::next_token(rest), u) || !detail::parse_integer(detail::next_token(rest), v))
        throw fail(edge_line, "bad edge endpoints");
      if (u < 1 || u > n || v < 1 || v > n) throw fail(edge_line, "vertex index out of range");
      long long w = 1;
      auto weight = detail::next_token(rest);
      if (!weight.empty() && !detail::parse_integer(weight, w)) throw fail(edge_line, "edge weight must be an integer");
      if (w < 1 || w > UINT32_MAX) throw fail(edge_line, "edge weight must be positive");
      net.edges.push_back({static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1), static_cast<std::uint32_t>(w)});
    }
  }
  return net;
}

inline PajekNetwork read_pajek_net(const std::filesystem::path& file) {
  auto text = detail::read_text(file);
  try {
    return parse_pajek_net(text);
  } catch (const Error& e) {
    throw Error(e.code(), file.string() + ": " + e.message());
  }
}

}  // namespace ptn
