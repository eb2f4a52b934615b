#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "dunbar/graph.hpp"

namespace dunbar {

/// A set of pairwise-adjacent nodes, members sorted ascending.
struct Clique {
  std::vector<NodeId> members;

  std::size_t size() const noexcept { return members.size(); }
  friend bool operator==(const Clique&, const Clique&) = default;
};

/// Canonical order: larger first, then lexicographic by member ids.
bool canonical_less(std::span<const NodeId> a, std::span<const NodeId> b) noexcept;

inline bool canonical_less(const Clique& a, const Clique& b) noexcept {
  return canonical_less(a.members, b.members);
}

void sort_canonical(std::vector<Clique>& cliques);

/// All maximal cliques with at least `min_size` members, canonically ordered.
///
/// Bron–Kerbosch with Tomita pivoting inside each branch, with the outer level
/// driven by a degeneracy ordering (Eppstein–Löffler–Strash) so that each
/// branch only sees a candidate set bounded by the graph's degeneracy.
/// Outer branches run in parallel; the result does not depend on the thread count.
std::vector<Clique> maximal_cliques(const Graph& g, std::size_t min_size = 3);

/// Subset-enumeration oracle. Refuses graphs with more than
/// `kBruteForceNodeLimit` nodes (throws InvalidArgument).
inline constexpr std::size_t kBruteForceNodeLimit = 20;
std::vector<Clique> brute_force_maximal_cliques(const Graph& g);

/// One clique per line, space-separated original labels.
void write_cliques(std::ostream& out, const Graph& g, std::span<const Clique> cliques);

}  // namespace dunbar
