#pragma once

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ptn.hpp"

namespace ptn::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3 };

namespace detail {

struct LoadedGraph {
  std::optional<Graph> graph;
  std::optional<BipartiteGraph> bipartite;
};

inline LoadedGraph load_space(const std::string& canonical, const std::string& space, std::optional<long long> min_shared) {
  if (min_shared && space != "c") throw Error(ErrorCode::InvalidArgument, "--min-shared applies only to --space c");
  auto feed = load_canonical(canonical);
  LoadedGraph out;
  if (space == "b") {
    out.bipartite = build_b_space(feed);
  } else if (space == "p") {
    out.graph = build_p_space(feed);
  } else {
    auto cs = build_c_space(feed);
    out.graph = min_shared ? threshold_c_space(cs, *min_shared) : std::move(cs);
  }
  return out;
}

inline std::map<std::string, double> read_values_csv(const std::filesystem::path& file) {
  auto table = csv::Table::read(file);
  auto c_node = table.require("node");
  auto c_value = table.require("value");
  std::map<std::string, double> values;
  for (const auto& row : table.rows()) {
    std::string node(csv::Table::get(row, c_node));
    auto text = csv::Table::get(row, c_value);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
      throw Error(ErrorCode::MalformedRow, table.source() + ":" + std::to_string(row.line) + ": bad value");
    if (!values.emplace(node, v).second)
      throw Error(ErrorCode::MalformedRow, table.source() + ":" + std::to_string(row.line) + ": duplicate node '" + node + "'");
  }
  return values;
}

inline std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

inline void write_json(const std::filesystem::path& file, const nlohmann::ordered_json& doc) {
  ptn::detail::write_text(file, doc.dump(2) + "\n");
}

}  // namespace detail

inline int cmd_ingest(const std::string& gtfs_dir, const std::string& out_file, const std::string& label,
                      std::ostream& out, std::ostream& err) {
  auto feed = parse_gtfs(gtfs_dir, label);
  save_canonical(feed, out_file);
  auto stats = feed_stats(feed);
  for (const auto& w : stats.warnings) err << "warning: " << w << "\n";
  out << "routes=" << stats.route_count << " stops=" << stats.stop_count << " orphans=" << stats.orphan_stop_count
      << " dropped_routes=" << stats.dropped_route_count << " dangling_refs=" << stats.dangling_reference_count
      << "\n";
  return kOk;
}

inline int cmd_build(const std::string& canonical, const std::string& space, std::optional<long long> min_shared,
                     const std::string& out_file, std::ostream& out) {
  auto loaded = detail::load_space(canonical, space, min_shared);
  if (loaded.bipartite) {
    write_pajek_net(*loaded.bipartite, out_file);
    out << "wrote " << out_file << ": vertices=" << loaded.bipartite->node_count()
        << " routes=" << loaded.bipartite->route_nodes.size() << " edges=" << loaded.bipartite->edge_count() << "\n";
  } else {
    write_pajek_net(*loaded.graph, out_file);
    out << "wrote " << out_file << ": vertices=" << loaded.graph->node_count()
        << " edges=" << loaded.graph->edge_count() << "\n";
  }
  return kOk;
}

struct MetricsRequest {
  std::string canonical;
  std::string net;
  std::string space = "p";
  std::optional<long long> min_shared;
  std::vector<std::string> selectors{"degree", "components", "distance", "closeness", "betweenness"};
  std::string scope = "all";
  unsigned workers = 1;
  std::size_t bucket_width = 50;
  std::string out_dir;
};

inline int cmd_metrics(const MetricsRequest& req, std::ostream& out) {
  static const std::set<std::string> known{"degree", "components", "distance", "closeness", "betweenness"};
  for (const auto& s : req.selectors)
    if (!known.count(s)) throw Error(ErrorCode::InvalidArgument, "unknown metric '" + s + "'");
  if (req.canonical.empty() == req.net.empty())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --canonical or --net");

  detail::LoadedGraph loaded;
  if (!req.net.empty()) {
    auto net = read_pajek_net(req.net);
    if (net.first_partition)
      loaded.bipartite = net.to_bipartite();
    else
      loaded.graph = net.to_graph();
  } else {
    loaded = detail::load_space(req.canonical, req.space, req.min_shared);
  }
  const Graph graph = loaded.graph ? std::move(*loaded.graph) : as_graph(*loaded.bipartite);

  std::filesystem::path dir(req.out_dir);
  std::filesystem::create_directories(dir);
  const MetricOptions options{req.workers};
  auto wants = [&](const char* name) {
    return std::find(req.selectors.begin(), req.selectors.end(), name) != req.selectors.end();
  };

  if (wants("degree")) {
    if (loaded.bipartite) {
      auto r = degree_report(*loaded.bipartite, req.bucket_width);
      detail::write_json(dir / "degree.json", to_json(r));
      ptn::detail::write_text(dir / "degree_routes.csv", values_csv(r.routes.per_node));
      ptn::detail::write_text(dir / "degree_stops.csv", values_csv(r.stops.per_node));
      out << "degree: nodes=" << r.node_count << " edges=" << r.edge_count << " average=" << format_number(r.average)
          << " routes_average=" << format_number(r.routes.average)
          << " stops_average=" << format_number(r.stops.average) << "\n";
    } else {
      auto r = degree_report(graph, req.bucket_width);
      detail::write_json(dir / "degree.json", to_json(r));
      ptn::detail::write_text(dir / "degree.csv", values_csv(r.per_node));
      out << "degree: nodes=" << r.node_count << " edges=" << r.edge_count << " average=" << format_number(r.average)
          << " max=" << r.max << " max_node=" << r.max_node << "\n";
    }
  }
  if (wants("components")) {
    auto r = giant_component(graph);
    detail::write_json(dir / "components.json", to_json(r));
    ptn::detail::write_text(dir / "components.csv", values_csv(r.component_id, "node,component"));
    out << "components: count=" << r.component_count << " giant=" << r.giant_nodes.size()
        << " giant_fraction=" << format_number(r.giant_fraction) << "\n";
  }
  if (wants("distance")) {
    if (req.scope != "all" && req.scope != "giant")
      throw Error(ErrorCode::InvalidArgument, "--scope must be 'all' or 'giant'");
    auto r = distance_report(graph, req.scope == "giant" ? DistanceScope::GiantOnly : DistanceScope::All, options);
    detail::write_json(dir / "distance.json", to_json(r));
    ptn::detail::write_text(dir / "distance.csv", distance_csv(r));
    out << "distance: diameter=" << r.diameter << " average=" << format_number(r.average)
        << " reachable_pairs=" << r.reachable_pair_count << " unreachable_pairs=" << r.unreachable_pair_count << "\n";
  }
  if (wants("closeness")) {
    auto r = closeness(graph, options);
    detail::write_json(dir / "closeness.json", values_json(r));
    ptn::detail::write_text(dir / "closeness.csv", values_csv(r));
    auto best = top_k(r, 1);
    out << "closeness: nodes=" << r.size();
    if (!best.empty()) out << " max=" << format_number(best[0].second) << " max_node=" << best[0].first;
    out << "\n";
  }
  if (wants("betweenness")) {
    auto r = betweenness(graph, options);
    detail::write_json(dir / "betweenness.json", values_json(r));
    ptn::detail::write_text(dir / "betweenness.csv", values_csv(r));
    auto best = top_k(r, 1);
    out << "betweenness: nodes=" << r.size();
    if (!best.empty()) out << " max=" << format_number(best[0].second) << " max_node=" << best[0].first;
    out << "\n";
  }
  return kOk;
}

inline int cmd_compare(const std::vector<std::string>& canonicals, const std::vector<long long>& thresholds,
                       unsigned workers, const std::string& out_dir, std::ostream& out) {
  if (canonicals.size() != 2) throw Error(ErrorCode::InvalidArgument, "compare needs exactly two --canonical files");
  auto a = load_canonical(canonicals[0]);
  auto b = load_canonical(canonicals[1]);
  CompareOptions options;
  options.thresholds = thresholds.empty() ? std::vector<long long>{1} : thresholds;
  options.metrics.workers = workers;
  auto report = compare_feeds(a, b, options);
  auto table = render_table(report);
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  detail::write_json(dir / "comparison.json", to_json(report));
  ptn::detail::write_text(dir / "comparison.txt", table);
  out << table;
  return kOk;
}

struct ExportRequest {
  std::string canonical;
  std::string values_csv;
  std::optional<std::vector<std::string>> routes;
  std::optional<double> threshold;
  std::string metric_name = "value";
  std::string out_file;
};

inline int cmd_export(const ExportRequest& req, std::ostream& out) {
  if (req.values_csv.empty() == !req.routes.has_value())
    throw Error(ErrorCode::InvalidArgument, "give exactly one of --values or --routes");
  auto feed = load_canonical(req.canonical);
  nlohmann::ordered_json layer;
  if (req.routes) {
    if (req.threshold) throw Error(ErrorCode::InvalidArgument, "--threshold applies only to --values layers");
    std::vector<std::string> routes;
    for (const auto& r : *req.routes)
      if (!r.empty()) routes.push_back(r);
    layer = route_intensity_layer(feed, routes);
  } else {
    layer = metric_layer(feed, detail::read_values_csv(req.values_csv), req.metric_name, req.threshold);
  }
  detail::write_json(req.out_file, layer);
  out << "wrote " << req.out_file << ": features=" << layer["features"].size() << "\n";
  return kOk;
}

/// Parses the command line and dispatches. Every failure prints a single
/// "error: ..." line on `err` and returns a nonzero code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Transit network topology toolkit: B-, P- and C-space graphs from bus feeds"};
  app.require_subcommand(1);

  std::string gtfs, out_path, label;
  auto* ingest = app.add_subcommand("ingest", "parse a GTFS directory into a canonical snapshot");
  ingest->add_option("--gtfs", gtfs, "GTFS directory")->required();
  ingest->add_option("--out", out_path, "canonical snapshot file to write")->required();
  ingest->add_option("--label", label, "snapshot label (defaults to the directory name)");

  std::string canonical, space = "p";
  std::optional<long long> min_shared;
  auto* build = app.add_subcommand("build", "build a space and write it as Pajek NET");
  build->add_option("--canonical", canonical, "canonical snapshot")->required();
  build->add_option("--space", space, "b, p or c")->check(CLI::IsMember({"b", "p", "c"}))->required();
  build->add_option("--min-shared", min_shared, "Cs^n threshold (space c only)");
  build->add_option("--out", out_path, "NET file to write")->required();

  MetricsRequest mreq;
  auto* metrics = app.add_subcommand("metrics", "compute metric reports for one space");
  metrics->add_option("--canonical", mreq.canonical, "canonical snapshot");
  metrics->add_option("--net", mreq.net, "Pajek NET file instead of a snapshot");
  metrics->add_option("--space", mreq.space, "b, p or c")->check(CLI::IsMember({"b", "p", "c"}));
  metrics->add_option("--min-shared", mreq.min_shared, "Cs^n threshold (space c only)");
  metrics->add_option("--metrics", mreq.selectors, "degree,components,distance,closeness,betweenness")->delimiter(',');
  metrics->add_option("--scope", mreq.scope, "distance scope: all or giant");
  metrics->add_option("--workers", mreq.workers, "worker threads (0 = all cores)");
  metrics->add_option("--bucket-width", mreq.bucket_width, "degree histogram bucket width");
  metrics->add_option("--out", mreq.out_dir, "output directory")->required();

  std::vector<std::string> canonicals;
  std::vector<long long> thresholds;
  unsigned workers = 1;
  auto* compare = app.add_subcommand("compare", "compare two snapshots");
  compare->add_option("--canonical", canonicals, "snapshot a, then snapshot b")->required()->expected(2);
  compare->add_option("--min-shared", thresholds, "Cs^n thresholds, comma separated")->delimiter(',');
  compare->add_option("--workers", workers, "worker threads (0 = all cores)");
  compare->add_option("--out", out_path, "output directory")->required();

  ExportRequest ereq;
  std::vector<std::string> routes;
  auto* exporter = app.add_subcommand("export", "write a GeoJSON stop layer");
  exporter->add_option("--canonical", ereq.canonical, "canonical snapshot")->required();
  auto* values_opt = exporter->add_option("--values", ereq.values_csv, "CSV with node,value columns");
  auto* routes_opt = exporter->add_option("--routes", routes, "route ids, comma separated")->delimiter(',')->allow_extra_args(false);
  exporter->add_option("--threshold", ereq.threshold, "keep values strictly greater than this");
  exporter->add_option("--metric-name", ereq.metric_name, "property name for the value");
  exporter->add_option("--out", ereq.out_file, "GeoJSON file to write")->required();
  values_opt->excludes(routes_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  }

  try {
    if (ingest->parsed()) return cmd_ingest(gtfs, out_path, label, out, err);
    if (build->parsed()) return cmd_build(canonical, space, min_shared, out_path, out);
    if (metrics->parsed()) return cmd_metrics(mreq, out);
    if (compare->parsed()) return cmd_compare(canonicals, thresholds, workers, out_path, out);
    if (exporter->parsed()) {
      if (routes_opt->count() > 0) ereq.routes = routes;
      return cmd_export(ereq, out);
    }
  } catch (const Error& e) {
    err << "error: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: Io: " << detail::one_line(e.what()) << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: internal: " << detail::one_line(e.what()) << "\n";
    return kInternalError;
  }
  err << "error: usage: no subcommand\n";
  return kInputError;
}

}  // namespace ptn::cli
