#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunbar/caa.hpp"
#include "dunbar/cover.hpp"
#include "dunbar/graph.hpp"
#include "dunbar/metrics.hpp"

/// Orchestration behind the command-line tool: dataset loading, detector
/// dispatch, report files, parameter sweeps.
namespace dunbar::bench {

enum class InputFormat { Edges, DirectedEdges };
enum class Algorithm { Caa, LabelPropagation, Louvain, FastGreedy, Import };

std::string_view name(InputFormat f) noexcept;
std::string_view name(Algorithm a) noexcept;
/// Accepts the names produced by name(); throws InvalidArgument otherwise.
InputFormat parse_format(std::string_view s);
Algorithm parse_algorithm(std::string_view s);

struct RunConfig {
  std::filesystem::path input;
  InputFormat format = InputFormat::Edges;
  Algorithm algorithm = Algorithm::Caa;
  caa::Params caa;
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = ".";
  std::optional<std::filesystem::path> cover;  ///< required by Algorithm::Import
  std::optional<std::size_t> expect_nodes;
  std::optional<std::size_t> expect_edges;

  /// Throws InvalidArgument on inconsistent settings.
  void validate() const;
};

/// Loads `config.input` in the configured format. Count mismatches against
/// expect_nodes / expect_edges and empty mutualized graphs are reported on
/// `log` as warnings, never as errors.
Graph load_dataset(const RunConfig& config, std::ostream& log);

/// Runs the configured detector on `g`. Label propagation convergence and CAA
/// pipeline counts are appended to `notes`.
Cover detect(const Graph& g, const RunConfig& config, std::vector<std::string>& notes);

struct RunOutputs {
  Cover cover;
  MetricReport report;
  std::filesystem::path cover_file;
  std::filesystem::path rows_file;
  std::filesystem::path summary_file;
};

/// Detects, evaluates, writes <algo>.cover.txt, <algo>.communities.csv and
/// <algo>.summary.json into config.output_dir, and prints the summary table.
RunOutputs run(const Graph& g, const RunConfig& config, std::ostream& out);

/// Share of a cover's communities whose size lies in 4..150.
struct SizeConformance {
  std::size_t communities = 0;
  std::size_t desirable = 0;
  double share() const noexcept {
    return communities == 0 ? 0.0 : static_cast<double>(desirable) / static_cast<double>(communities);
  }
};

SizeConformance size_conformance(const Cover& cover);

/// Inclusive size range; `hi` empty means unbounded.
struct SizeBin {
  std::size_t lo = 1;
  std::optional<std::size_t> hi;

  bool contains(std::size_t s) const noexcept { return s >= lo && (!hi || s <= *hi); }
  std::string label() const;
};

/// [1-2], [3-9], [10-150], [151-500], [501+]
std::vector<SizeBin> default_growth_bins();

/// Parses "3-9,10-150,151-" (open upper end allowed on any bin).
std::vector<SizeBin> parse_bins(std::string_view text);

struct GrowthSweepRow {
  double phi = 0.0;
  std::size_t communities = 0;
  double mean_size = 0.0;
  std::vector<std::size_t> histogram;  ///< one count per bin
  std::size_t unbinned = 0;
};

/// Community-size histograms of CAA for each growing threshold, sharing one
/// clique enumeration and one overlap filtering pass.
std::vector<GrowthSweepRow> sweep_growing(const Graph& g, std::span<const double> phis, double omega,
                                          std::size_t min_clique_size, std::span<const SizeBin> bins);

struct OverlapSweepRow {
  double omega = 0.0;
  std::size_t retained = 0;
  std::size_t total = 0;  ///< maximal cliques before filtering
};

/// Retained seed-clique count per overlapping threshold.
std::vector<OverlapSweepRow> sweep_overlap(const Graph& g, std::span<const double> omegas,
                                           std::size_t min_clique_size);

/// Overlap sweep over an already-enumerated, canonically sorted clique list.
std::vector<OverlapSweepRow> sweep_overlap(std::span<const Clique> cliques, std::span<const double> omegas);

void write_growth_sweep_csv(std::ostream& out, std::span<const GrowthSweepRow> rows, std::span<const SizeBin> bins);
void write_overlap_sweep_csv(std::ostream& out, std::span<const OverlapSweepRow> rows);

/// "rank,degree" CSV.
void write_degree_distribution_csv(std::ostream& out, const Graph& g);

/// Parses "0.5,0.7,0.9"; throws InvalidArgument on malformed entries.
std::vector<double> parse_fractions(std::string_view text);

}  // namespace dunbar::bench
