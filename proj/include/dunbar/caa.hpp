#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dunbar/cliques.hpp"
#include "dunbar/cover.hpp"
#include "dunbar/graph.hpp"

/// Clique Augmentation: seed communities with maximal cliques, drop seeds that
/// overlap a larger retained seed too much, then grow every seed by admitting
/// outside nodes that are connected to enough of the community.
namespace dunbar::caa {

struct Params {
  /// φ: an outside node joins a community C when it has at least
  /// (|C| - 1) * φ neighbors inside C.
  double growing_threshold = 0.7;
  /// ω: a seed clique is discarded when it shares more than
  /// ω * min(|c|, |r|) nodes with some retained clique r.
  double overlapping_threshold = 0.0;
  std::size_t min_clique_size = 3;

  /// Throws InvalidArgument unless 0 <= φ, ω <= 1 and min_clique_size >= 2.
  void validate() const;
};

/// Slack used when comparing integer counts against the real-valued
/// thresholds, so that decimal inputs such as φ = 0.7 behave as the exact
/// decimal (10 * 0.7 evaluates to 7.000000000000001 in binary).
inline constexpr double kThresholdSlack = 1e-9;

/// Overlap test used by the filter: keep when overlap <= ω * min(a, b).
bool overlap_within(std::size_t overlap, std::size_t size_a, std::size_t size_b, double omega) noexcept;

/// Admission test used during growth: admit when incoming >= (size - 1) * φ.
bool admits(std::size_t incoming_edges, std::size_t community_size, double phi) noexcept;

/// Scans canonically sorted cliques and keeps each one whose overlap with
/// every previously kept clique is within ω. Throws InvalidArgument when the
/// input is not in canonical order.
std::vector<Clique> filter_overlapping_cliques(std::span<const Clique> cliques, double omega);

/// Nodes outside `members` that one growth round would admit, ascending.
/// `members` must be sorted ascending.
std::vector<NodeId> growth_round(const Graph& g, std::span<const NodeId> members, double phi);

/// Grows `seed` to the fixpoint of growth rounds. Each round freezes the
/// threshold at the community size seen when the round starts and admits the
/// whole qualifying batch at once, so the result does not depend on node order.
Community grow_community(const Graph& g, const Clique& seed, double phi);

struct Stats {
  std::size_t maximal_cliques = 0;
  std::size_t retained_seeds = 0;
  std::size_t duplicate_communities = 0;
};

/// Full pipeline: enumerate maximal cliques of size >= min_clique_size,
/// filter with ω, grow with φ, drop communities whose node set equals an
/// earlier one. Communities come back in canonical order.
Cover detect(const Graph& g, const Params& params, Stats* stats = nullptr);

/// Growth and deduplication only, for callers that already hold filtered seeds.
Cover grow_all(const Graph& g, std::span<const Clique> seeds, double phi, std::size_t* duplicates = nullptr);

}  // namespace dunbar::caa
