#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "dunbar/cover.hpp"
#include "dunbar/graph.hpp"

namespace dunbar {

/// A total assignment of nodes to disjoint communities with dense ids.
struct Partition {
  std::vector<std::uint32_t> assignment;

  /// Renumbers arbitrary community ids densely in order of first appearance.
  static Partition from_labels(std::span<const std::uint32_t> labels);

  std::size_t node_count() const noexcept { return assignment.size(); }
  std::size_t community_count() const noexcept;

  /// Community i holds every node assigned id i, so O_v = 1 for all v.
  Cover to_cover() const;
};

struct LabelPropagationOptions {
  std::size_t max_sweeps = 100;
};

struct LabelPropagationResult {
  Partition partition;
  std::size_t sweeps = 0;
  bool converged = false;
};

/// Asynchronous label propagation. Every sweep visits the nodes in a fresh
/// seeded random order; a node takes the most frequent label among its
/// neighbors, breaking ties uniformly at random. Stops after the first sweep
/// that leaves every node holding one of its neighborhood-majority labels, or
/// after `max_sweeps` sweeps with `converged == false`.
LabelPropagationResult label_propagation(const Graph& g, std::uint64_t seed, LabelPropagationOptions options = {});

/// Two-phase Louvain modularity optimisation (local moving in seeded random
/// order, then aggregation) until a level improves modularity by less than 1e-7.
Partition louvain(const Graph& g, std::uint64_t seed);

/// Clauset–Newman–Moore greedy agglomeration: repeatedly merges the adjacent
/// pair with the largest modularity gain while that gain is positive. Gains
/// are compared exactly in integer arithmetic; ties go to the lowest
/// (smaller id, larger id) community pair.
Partition fast_greedy(const Graph& g);

/// Reads a one-community-per-line file of original labels (SNAP .cmty
/// format). Throws LoadError when the file has no communities or names ids
/// that are not nodes of `g` (the message lists the offenders).
Cover import_cover(const std::filesystem::path& path, const Graph& g);

}  // namespace dunbar
