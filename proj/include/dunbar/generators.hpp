#pragma once

#include <cstddef>
#include <cstdint>

#include "dunbar/graph.hpp"

/// Deterministic graph builders: small named fixtures and seeded random models.
namespace dunbar::gen {

Graph complete(std::size_t k);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,leaves}: node 0 is the hub.
Graph star(std::size_t leaves);
Graph edgeless(std::size_t n);

/// Two copies of K_k (nodes 0..k-1 and k..2k-1) joined by the edge {k-1, k}.
Graph bridged_cliques(std::size_t k);

/// `count` copies of K_k; clique i's last node is joined to clique i+1's first
/// node, and the last clique closes the ring back to the first.
Graph ring_of_cliques(std::size_t count, std::size_t k);

/// G(n, p).
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Holme–Kim growth: preferential attachment with `edges_per_node` links per
/// new node, each link after the first followed by a triad-closing step with
/// probability `triad_probability`. Power-law degrees with tunable clustering.
Graph powerlaw_cluster(std::size_t n, std::size_t edges_per_node, double triad_probability, std::uint64_t seed);

/// Co-authorship model: each of `papers` papers draws 2..max_authors authors,
/// authors picked with probability proportional to (prior papers + 1), and
/// all authors of a paper become pairwise adjacent. Produces many small
/// overlapping cliques on a heavy-tailed degree sequence.
Graph coauthorship(std::size_t authors, std::size_t papers, std::size_t max_authors, std::uint64_t seed);

}  // namespace dunbar::gen
