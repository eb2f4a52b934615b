#include "dunbar/bench.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <ostream>

#include "dunbar/baselines.hpp"
#include "dunbar/report.hpp"

namespace dunbar::bench {

std::string_view name(InputFormat f) noexcept {
  switch (f) {
    case InputFormat::Edges: return "edges";
    case InputFormat::DirectedEdges: return "directed-edges";
  }
  return "?";
}

std::string_view name(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::Caa: return "caa";
    case Algorithm::LabelPropagation: return "label-prop";
    case Algorithm::Louvain: return "louvain";
    case Algorithm::FastGreedy: return "fast-greedy";
    case Algorithm::Import: return "import";
  }
  return "?";
}

InputFormat parse_format(std::string_view s) {
  for (auto f : {InputFormat::Edges, InputFormat::DirectedEdges}) {
    if (s == name(f)) return f;
  }
  throw InvalidArgument("unknown input format '" + std::string(s) + "' (expected edges or directed-edges)");
}

Algorithm parse_algorithm(std::string_view s) {
  for (auto a : {Algorithm::Caa, Algorithm::LabelPropagation, Algorithm::Louvain, Algorithm::FastGreedy,
                 Algorithm::Import}) {
    if (s == name(a)) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(s) +
                        "' (expected caa, label-prop, louvain, fast-greedy or import)");
}

void RunConfig::validate() const {
  if (algorithm == Algorithm::Import && !cover) throw InvalidArgument("--algo import requires --cover");
  if (algorithm == Algorithm::Caa) caa.validate();
}

Graph load_dataset(const RunConfig& config, std::ostream& log) {
  Graph g;
  if (config.format == InputFormat::Edges) {
    LoadStats stats;
    g = load_undirected(config.input, &stats);
    if (stats.self_loops || stats.duplicate_edges) {
      log << "note: dropped " << stats.self_loops << " self-loop(s) and " << stats.duplicate_edges
          << " duplicate edge(s)\n";
    }
  } else {
    MutualizeStats stats;
    g = mutualize(load_directed(config.input), &stats);
    log << "note: " << stats.input_arcs << " arcs -> " << stats.mutual_edges << " mutual edges, "
        << stats.removed_nodes << " node(s) removed\n";
    if (g.node_count() == 0) log << "warning: mutualized graph is empty\n";
  }
  if (config.expect_nodes && *config.expect_nodes != g.node_count()) {
    log << "warning: expected " << *config.expect_nodes << " nodes, loaded " << g.node_count() << '\n';
  }
  if (config.expect_edges && *config.expect_edges != g.edge_count()) {
    log << "warning: expected " << *config.expect_edges << " edges, loaded " << g.edge_count() << '\n';
  }
  return g;
}

Cover detect(const Graph& g, const RunConfig& config, std::vector<std::string>& notes) {
  switch (config.algorithm) {
    case Algorithm::Caa: {
      caa::Stats stats;
      Cover cover = caa::detect(g, config.caa, &stats);
      notes.push_back("caa: " + std::to_string(stats.maximal_cliques) + " maximal cliques, " +
                      std::to_string(stats.retained_seeds) + " seeds after overlap filter, " +
                      std::to_string(stats.duplicate_communities) + " duplicate communities dropped");
      return cover;
    }
    case Algorithm::LabelPropagation: {
      LabelPropagationResult r = label_propagation(g, config.seed);
      notes.push_back("label propagation " + std::string(r.converged ? "converged" : "did not converge") +
                      " after " + std::to_string(r.sweeps) + " sweep(s)");
      return r.partition.to_cover();
    }
    case Algorithm::Louvain:
      return louvain(g, config.seed).to_cover();
    case Algorithm::FastGreedy:
      return fast_greedy(g).to_cover();
    case Algorithm::Import:
      if (!config.cover) throw InvalidArgument("--algo import requires --cover");
      return import_cover(*config.cover, g);
  }
  throw InvalidArgument("unknown algorithm");
}

namespace {

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

RunOutputs run(const Graph& g, const RunConfig& config, std::ostream& out) {
  config.validate();
  std::vector<std::string> notes;
  RunOutputs result;
  result.cover = detect(g, config, notes);
  result.report = evaluate(g, result.cover);
  result.report.notes.insert(result.report.notes.begin(), notes.begin(), notes.end());

  const std::string algo(name(config.algorithm));
  std::filesystem::create_directories(config.output_dir);
  result.cover_file = config.output_dir / (algo + ".cover.txt");
  result.rows_file = config.output_dir / (algo + ".communities.csv");
  result.summary_file = config.output_dir / (algo + ".summary.json");
  write_file(result.cover_file, [&](std::ostream& os) { write_report_cover(os, g, result.report); });
  write_file(result.rows_file, [&](std::ostream& os) { write_rows_csv(os, result.report); });
  write_file(result.summary_file, [&](std::ostream& os) { os << summary_json(result.report, algo).dump(2) << '\n'; });

  print_summary(out, result.report, algo);
  if (!result.report.extended_modularity) {
    out << "error: extended modularity is undefined for a graph without edges\n";
  }
  return result;
}

SizeConformance size_conformance(const Cover& cover) {
  SizeConformance c;
  c.communities = cover.size();
  for (const Community& community : cover.communities()) c.desirable += is_desirable(community.size()) ? 1 : 0;
  return c;
}

std::string SizeBin::label() const {
  if (!hi) return std::to_string(lo) + "+";
  return std::to_string(lo) + "-" + std::to_string(*hi);
}

std::vector<SizeBin> default_growth_bins() {
  return {{1, 2}, {3, 9}, {10, 150}, {151, 500}, {501, std::nullopt}};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return parts;
}

std::size_t parse_count(std::string_view s, std::string_view context) {
  std::size_t value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw InvalidArgument("malformed " + std::string(context) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<SizeBin> parse_bins(std::string_view text) {
  std::vector<SizeBin> bins;
  for (std::string_view part : split(text, ',')) {
    SizeBin bin;
    std::string_view body = part;
    const bool open = !body.empty() && body.back() == '+';
    if (open) body.remove_suffix(1);
    const auto dash = body.find('-');
    if (dash == std::string_view::npos) {
      bin.lo = parse_count(trim(body), "size bin");
      if (!open) bin.hi = bin.lo;
    } else {
      if (open) throw InvalidArgument("invalid size bin '" + std::string(part) + "'");
      bin.lo = parse_count(trim(body.substr(0, dash)), "size bin");
      std::string_view upper = trim(body.substr(dash + 1));
      if (!upper.empty()) bin.hi = parse_count(upper, "size bin");
    }
    if (bin.lo == 0 || (bin.hi && *bin.hi < bin.lo)) {
      throw InvalidArgument("invalid size bin '" + std::string(part) + "'");
    }
    bins.push_back(bin);
  }
  return bins;
}

std::vector<GrowthSweepRow> sweep_growing(const Graph& g, std::span<const double> phis, double omega,
                                          std::size_t min_clique_size, std::span<const SizeBin> bins) {
  if (phis.empty()) throw InvalidArgument("growth sweep needs at least one growing threshold");
  for (double phi : phis) caa::Params{phi, omega, min_clique_size}.validate();
  const std::vector<Clique> seeds = caa::filter_overlapping_cliques(maximal_cliques(g, min_clique_size), omega);

  std::vector<GrowthSweepRow> rows;
  for (double phi : phis) {
    const Cover cover = caa::grow_all(g, seeds, phi);
    GrowthSweepRow row;
    row.phi = phi;
    row.communities = cover.size();
    row.histogram.assign(bins.size(), 0);
    std::size_t total = 0;
    for (const Community& c : cover.communities()) {
      total += c.size();
      bool placed = false;
      for (std::size_t b = 0; b < bins.size(); ++b) {
        if (bins[b].contains(c.size())) {
          ++row.histogram[b];
          placed = true;
          break;
        }
      }
      if (!placed) ++row.unbinned;
    }
    row.mean_size = cover.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(cover.size());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<OverlapSweepRow> sweep_overlap(std::span<const Clique> cliques, std::span<const double> omegas) {
  std::vector<OverlapSweepRow> rows;
  for (double omega : omegas) {
    if (!(omega >= 0.0 && omega <= 1.0)) {
      throw InvalidArgument("overlapping threshold must lie in [0, 1], got " + std::to_string(omega));
    }
    rows.push_back({omega, caa::filter_overlapping_cliques(cliques, omega).size(), cliques.size()});
  }
  return rows;
}

std::vector<OverlapSweepRow> sweep_overlap(const Graph& g, std::span<const double> omegas,
                                           std::size_t min_clique_size) {
  const std::vector<Clique> cliques = maximal_cliques(g, min_clique_size);
  return sweep_overlap(cliques, omegas);
}

void write_growth_sweep_csv(std::ostream& out, std::span<const GrowthSweepRow> rows, std::span<const SizeBin> bins) {
  out << "phi,communities,mean_size";
  for (const SizeBin& b : bins) out << ",[" << b.label() << ']';
  out << ",unbinned\n";
  char buf[32];
  for (const GrowthSweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%g", r.phi);
    out << buf << ',' << r.communities << ',';
    std::snprintf(buf, sizeof buf, "%.6g", r.mean_size);
    out << buf;
    for (std::size_t count : r.histogram) out << ',' << count;
    out << ',' << r.unbinned << '\n';
  }
}

void write_overlap_sweep_csv(std::ostream& out, std::span<const OverlapSweepRow> rows) {
  out << "omega,retained_cliques,total_cliques\n";
  char buf[32];
  for (const OverlapSweepRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%g", r.omega);
    out << buf << ',' << r.retained << ',' << r.total << '\n';
  }
}

void write_degree_distribution_csv(std::ostream& out, const Graph& g) {
  out << "rank,degree\n";
  for (auto [rank, degree] : degree_distribution(g)) out << rank << ',' << degree << '\n';
}

std::vector<double> parse_fractions(std::string_view text) {
  std::vector<double> values;
  for (std::string_view part : split(text, ',')) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || p != part.data() + part.size()) {
      throw InvalidArgument("malformed threshold '" + std::string(part) + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace dunbar::bench
