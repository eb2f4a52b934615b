#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dunbar/common.hpp"

namespace dunbar {

using Edge = std::pair<NodeId, NodeId>;

/// Simple undirected graph in CSR form.
///
/// Nodes are dense ids 0..n-1. Neighbor lists are sorted ascending, which the
/// clique enumerator, triangle counters and intersection helpers rely on. The
/// graph is immutable once built and may be shared across threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an arbitrary edge list. Self-loops and parallel edges
  /// are dropped. `labels`, when non-empty, must have exactly `node_count`
  /// distinct entries and maps dense ids back to original ids; otherwise the
  /// identity labelling is used.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::vector<Label> labels = {});

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// O(log deg) adjacency test.
  bool has_edge(NodeId u, NodeId v) const noexcept;

  Label label(NodeId v) const noexcept { return labels_[v]; }
  std::span<const Label> labels() const noexcept { return labels_; }
  std::optional<NodeId> dense_id(Label label) const;

  /// Every undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<Label> labels_;
  std::unordered_map<Label, NodeId> dense_;
};

/// Raw directed edges in original ids; duplicates allowed.
struct DirectedEdgeList {
  std::vector<std::pair<Label, Label>> arcs;
};

struct LoadStats {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_edges = 0;
};

/// Loads a SNAP-style undirected edge list: two integer ids per line, '#'
/// comments. Ids are densified in ascending label order.
/// Throws LoadError on an unreadable file, a malformed line, or a graph
/// without edges.
Graph load_undirected(const std::filesystem::path& path, LoadStats* stats = nullptr);

/// Same syntax, read as arcs (first -> second). No deduplication happens here.
DirectedEdgeList load_directed(const std::filesystem::path& path, LoadStats* stats = nullptr);

struct MutualizeStats {
  std::size_t input_arcs = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_arcs = 0;
  std::size_t mutual_edges = 0;
  std::size_t removed_nodes = 0;  ///< nodes seen in the input but absent from the output
};

/// Keeps an undirected edge {u, v} iff both u->v and v->u are present, then
/// drops nodes left without edges. Order: dedupe, mutual filter, prune isolates.
/// An empty result is legal; callers inspect `stats` to warn.
Graph mutualize(const DirectedEdgeList& directed, MutualizeStats* stats = nullptr);

/// (rank, degree) pairs with degrees non-increasing and rank starting at 1.
std::vector<std::pair<std::size_t, std::size_t>> degree_distribution(const Graph& g);

/// Number of elements common to two ascending ranges.
std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept;

}  // namespace dunbar
