#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dunbar/cliques.hpp"
#include "dunbar/graph.hpp"

namespace dunbar {

/// A non-empty node set, members sorted ascending. `seed` records the clique a
/// CAA community was grown from.
struct Community {
  std::vector<NodeId> members;
  std::optional<Clique> seed;

  std::size_t size() const noexcept { return members.size(); }
};

/// A collection of possibly overlapping communities over a graph with a fixed
/// node count, plus the per-node membership counts O_v.
class Cover {
 public:
  Cover() = default;

  /// Sorts and deduplicates each community's members. Throws InvalidArgument on
  /// an empty community or a member id >= node_count.
  Cover(std::size_t node_count, std::vector<Community> communities);

  std::size_t node_count() const noexcept { return membership_.size(); }
  std::size_t size() const noexcept { return communities_.size(); }
  bool empty() const noexcept { return communities_.empty(); }

  std::span<const Community> communities() const noexcept { return communities_; }
  const Community& operator[](std::size_t i) const noexcept { return communities_[i]; }

  /// O_v: number of communities containing v (0 for an uncovered node).
  std::uint32_t membership(NodeId v) const noexcept { return membership_[v]; }
  std::span<const std::uint32_t> memberships() const noexcept { return membership_; }

  std::size_t covered_nodes() const noexcept;

 private:
  std::vector<Community> communities_;
  std::vector<std::uint32_t> membership_;
};

/// One community per line, space-separated original labels.
void write_cover(std::ostream& out, const Graph& g, const Cover& cover);

}  // namespace dunbar
