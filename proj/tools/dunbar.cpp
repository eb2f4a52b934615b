// dunbar: run community detectors on an edge list and report size-stratified
// quality metrics.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dunbar/baselines.hpp"
#include "dunbar/bench.hpp"
#include "dunbar/parallel.hpp"
#include "dunbar/report.hpp"

namespace {

using namespace dunbar;

struct Options {
  std::string input;
  std::string format = "edges";
  std::string algo = "caa";
  std::string phi;
  std::string omega;
  std::size_t min_clique = 3;
  std::uint64_t seed = 1;
  std::string out = ".";
  unsigned threads = 0;
  std::size_t expect_nodes = 0;
  std::size_t expect_edges = 0;
  std::string cover;
  std::string bins;
};

bench::RunConfig make_config(const Options& o, const CLI::App& app) {
  bench::RunConfig c;
  c.input = o.input;
  c.format = bench::parse_format(o.format);
  c.algorithm = bench::parse_algorithm(o.algo);
  c.seed = o.seed;
  c.output_dir = o.out;
  if (!o.cover.empty()) c.cover = o.cover;
  if (app.count("--expect-nodes")) c.expect_nodes = o.expect_nodes;
  if (app.count("--expect-edges")) c.expect_edges = o.expect_edges;
  c.caa.min_clique_size = o.min_clique;
  return c;
}

double single_fraction(const std::string& spec, double fallback, const char* flag) {
  if (spec.empty()) return fallback;
  auto values = bench::parse_fractions(spec);
  if (values.size() != 1) throw InvalidArgument(std::string(flag) + " takes a single value here");
  return values.front();
}

template <typename Writer>
void write_output(const std::filesystem::path& dir, const std::string& file, Writer&& writer) {
  std::filesystem::create_directories(dir);
  const auto path = dir / file;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  writer(out);
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
  std::cerr << "wrote " << path.string() << '\n';
}

int cmd_run(const Options& o, const CLI::App& app) {
  bench::RunConfig config = make_config(o, app);
  config.caa.growing_threshold = single_fraction(o.phi, 0.7, "--phi");
  config.caa.overlapping_threshold = single_fraction(o.omega, 0.0, "--omega");
  config.validate();
  const Graph g = bench::load_dataset(config, std::cerr);
  const auto outputs = bench::run(g, config, std::cout);
  for (const auto& p : {outputs.cover_file, outputs.rows_file, outputs.summary_file}) {
    std::cerr << "wrote " << p.string() << '\n';
  }
  return 0;
}

int cmd_import_eval(const Options& o, const CLI::App& app) {
  bench::RunConfig config = make_config(o, app);
  if (o.cover.empty()) throw InvalidArgument("import-eval requires --cover");
  config.algorithm = bench::Algorithm::Import;
  const Graph g = bench::load_dataset(config, std::cerr);
  const Cover cover = import_cover(*config.cover, g);
  const MetricReport report = evaluate(g, cover);
  const auto conformance = bench::size_conformance(cover);

  print_summary(std::cout, report, "import");
  std::printf("size conformance: %zu of %zu communities have size 4-150 (%.2f%%)\n", conformance.desirable,
              conformance.communities, 100.0 * conformance.share());
  auto summary = summary_json(report, "import");
  summary["size_conformance"] = {{"communities", conformance.communities},
                                 {"desirable", conformance.desirable},
                                 {"share", conformance.share()}};
  write_output(config.output_dir, "import.communities.csv", [&](std::ostream& os) { write_rows_csv(os, report); });
  write_output(config.output_dir, "import.summary.json", [&](std::ostream& os) { os << summary.dump(2) << '\n'; });
  return 0;
}

int cmd_sweep_grow(const Options& o, const CLI::App& app) {
  const bench::RunConfig config = make_config(o, app);
  const auto phis = bench::parse_fractions(o.phi.empty() ? "0.5,0.7,0.9" : o.phi);
  const double omega = single_fraction(o.omega, 0.0, "--omega");
  const auto bins = o.bins.empty() ? bench::default_growth_bins() : bench::parse_bins(o.bins);
  const Graph g = bench::load_dataset(config, std::cerr);
  const auto rows = bench::sweep_growing(g, phis, omega, o.min_clique, bins);
  bench::write_growth_sweep_csv(std::cout, rows, bins);
  write_output(config.output_dir, "sweep_grow.csv",
               [&](std::ostream& os) { bench::write_growth_sweep_csv(os, rows, bins); });
  return 0;
}

int cmd_sweep_overlap(const Options& o, const CLI::App& app) {
  const bench::RunConfig config = make_config(o, app);
  const auto omegas = bench::parse_fractions(o.omega.empty() ? "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1" : o.omega);
  const Graph g = bench::load_dataset(config, std::cerr);
  const auto rows = bench::sweep_overlap(g, omegas, o.min_clique);
  bench::write_overlap_sweep_csv(std::cout, rows);
  write_output(config.output_dir, "sweep_overlap.csv", [&](std::ostream& os) { bench::write_overlap_sweep_csv(os, rows); });
  return 0;
}

int cmd_degree_dist(const Options& o, const CLI::App& app) {
  const bench::RunConfig config = make_config(o, app);
  const Graph g = bench::load_dataset(config, std::cerr);
  if (g.node_count() == 0) throw InvalidArgument("degree distribution needs a non-empty graph");
  write_output(config.output_dir, "degree_distribution.csv",
               [&](std::ostream& os) { bench::write_degree_distribution_csv(os, g); });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Community detection and size-stratified quality evaluation"};
  app.set_config("--config", "", "key=value file supplying defaults for any long option");
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--input,-i", o.input, "Edge-list file (two integer ids per line, '#' comments)")->required();
  app.add_option("--format", o.format, "edges | directed-edges (keep mutual arcs only)")->capture_default_str();
  app.add_option("--algo", o.algo, "caa | label-prop | louvain | fast-greedy | import")->capture_default_str();
  app.add_option("--phi", o.phi, "Growing threshold (comma list for sweep-grow)");
  app.add_option("--omega", o.omega, "Overlapping threshold (comma list for sweep-overlap)");
  app.add_option("--min-clique", o.min_clique, "Minimum seed clique size")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for label-prop and louvain")->capture_default_str();
  app.add_option("--out,-o", o.out, "Output directory")->envname("DUNBAR_OUT_DIR")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker thread cap (0 = all cores)")->capture_default_str();
  app.add_option("--expect-nodes", o.expect_nodes, "Warn when the loaded node count differs");
  app.add_option("--expect-edges", o.expect_edges, "Warn when the loaded edge count differs");
  app.add_option("--cover", o.cover, "Community file (one community per line) for import");
  app.add_option("--bins", o.bins, "Size bins for sweep-grow, e.g. 3-9,10-150,151-500,501+");

  auto* run = app.add_subcommand("run", "Detect communities, evaluate them, write cover/CSV/JSON");
  auto* sweep_grow = app.add_subcommand("sweep-grow", "CAA community-size histogram per growing threshold");
  auto* sweep_overlap = app.add_subcommand("sweep-overlap", "Retained seed cliques per overlapping threshold");
  auto* degree_dist = app.add_subcommand("degree-dist", "Rank/degree CSV for log-log plotting");
  auto* import_eval = app.add_subcommand("import-eval", "Evaluate an external cover and its size conformance");

  CLI11_PARSE(app, argc, argv);
  set_max_threads(o.threads);

  try {
    if (run->parsed()) return cmd_run(o, app);
    if (sweep_grow->parsed()) return cmd_sweep_grow(o, app);
    if (sweep_overlap->parsed()) return cmd_sweep_overlap(o, app);
    if (degree_dist->parsed()) return cmd_degree_dist(o, app);
    if (import_eval->parsed()) return cmd_import_eval(o, app);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
