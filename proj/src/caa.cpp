#include "dunbar/caa.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dunbar/parallel.hpp"

namespace dunbar::caa {

void Params::validate() const {
  if (!(growing_threshold >= 0.0 && growing_threshold <= 1.0)) {
    throw InvalidArgument("growing threshold must lie in [0, 1], got " + std::to_string(growing_threshold));
  }
  if (!(overlapping_threshold >= 0.0 && overlapping_threshold <= 1.0)) {
    throw InvalidArgument("overlapping threshold must lie in [0, 1], got " + std::to_string(overlapping_threshold));
  }
  if (min_clique_size < 2) {
    throw InvalidArgument("minimum clique size must be at least 2, got " + std::to_string(min_clique_size));
  }
}

bool overlap_within(std::size_t overlap, std::size_t size_a, std::size_t size_b, double omega) noexcept {
  const double limit = omega * static_cast<double>(std::min(size_a, size_b));
  return static_cast<double>(overlap) <= limit + kThresholdSlack;
}

bool admits(std::size_t incoming_edges, std::size_t community_size, double phi) noexcept {
  const double needed = static_cast<double>(community_size - 1) * phi;
  return static_cast<double>(incoming_edges) + kThresholdSlack >= needed;
}

std::vector<Clique> filter_overlapping_cliques(std::span<const Clique> cliques, double omega) {
  for (std::size_t i = 1; i < cliques.size(); ++i) {
    if (canonical_less(cliques[i], cliques[i - 1])) {
      throw InvalidArgument("filter_overlapping_cliques expects canonically sorted cliques");
    }
  }
  NodeId max_node = 0;
  for (const Clique& c : cliques) {
    if (!c.members.empty()) max_node = std::max(max_node, c.members.back());
  }

  // node -> indices (into `kept`) of retained cliques containing it
  std::vector<std::vector<std::uint32_t>> holders(cliques.empty() ? 0 : std::size_t{max_node} + 1);
  std::vector<std::uint32_t> overlap;
  std::vector<std::uint32_t> touched;
  std::vector<Clique> kept;

  for (const Clique& c : cliques) {
    touched.clear();
    for (NodeId v : c.members) {
      for (std::uint32_t r : holders[v]) {
        if (r >= overlap.size()) overlap.resize(r + 1, 0);
        if (overlap[r]++ == 0) touched.push_back(r);
      }
    }
    bool keep = true;
    for (std::uint32_t r : touched) {
      if (keep && !overlap_within(overlap[r], c.size(), kept[r].size(), omega)) keep = false;
      overlap[r] = 0;
    }
    if (!keep) continue;
    const auto index = static_cast<std::uint32_t>(kept.size());
    for (NodeId v : c.members) holders[v].push_back(index);
    kept.push_back(c);
  }
  return kept;
}

namespace {

/// Per-thread growth workspace sized to the graph.
class Grower {
 public:
  explicit Grower(const Graph& g) : g_(g), inside_(g.node_count(), 0), incoming_(g.node_count(), 0) {}

  std::vector<NodeId> round(std::span<const NodeId> members, double phi) {
    for (NodeId v : members) inside_[v] = 1;
    std::vector<NodeId> batch = collect(members, phi);
    for (NodeId v : members) inside_[v] = 0;
    return batch;
  }

  Community grow(const Clique& seed, double phi) {
    std::vector<NodeId> members = seed.members;
    for (NodeId v : members) inside_[v] = 1;
    for (;;) {
      std::vector<NodeId> batch = collect(members, phi);
      if (batch.empty()) break;
      for (NodeId u : batch) inside_[u] = 1;
      members.insert(members.end(), batch.begin(), batch.end());
    }
    for (NodeId v : members) inside_[v] = 0;
    std::sort(members.begin(), members.end());
    return Community{std::move(members), seed};
  }

 private:
  std::vector<NodeId> collect(std::span<const NodeId> members, double phi) {
    touched_.clear();
    for (NodeId v : members) {
      for (NodeId u : g_.neighbors(v)) {
        if (inside_[u]) continue;
        if (incoming_[u]++ == 0) touched_.push_back(u);
      }
    }
    std::vector<NodeId> batch;
    for (NodeId u : touched_) {
      if (admits(incoming_[u], members.size(), phi)) batch.push_back(u);
      incoming_[u] = 0;
    }
    std::sort(batch.begin(), batch.end());
    return batch;
  }

  const Graph& g_;
  std::vector<std::uint8_t> inside_;
  std::vector<std::uint32_t> incoming_;
  std::vector<NodeId> touched_;
};

}  // namespace

std::vector<NodeId> growth_round(const Graph& g, std::span<const NodeId> members, double phi) {
  return Grower(g).round(members, phi);
}

Community grow_community(const Graph& g, const Clique& seed, double phi) {
  return Grower(g).grow(seed, phi);
}

Cover grow_all(const Graph& g, std::span<const Clique> seeds, double phi, std::size_t* duplicates) {
  std::vector<Community> grown(seeds.size());
  std::vector<std::optional<Grower>> growers(worker_slots(seeds.size()));
  parallel_for(seeds.size(), [&](unsigned worker, std::size_t i) {
    auto& grower = growers[worker];
    if (!grower) grower.emplace(g);
    grown[i] = grower->grow(seeds[i], phi);
  });

  // Identical node sets: keep the one grown from the earliest seed.
  std::vector<std::size_t> order(grown.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(grown[a].members, grown[b].members);
  });
  std::vector<Community> unique;
  unique.reserve(grown.size());
  std::size_t dropped = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (!unique.empty() && grown[order[k]].members == unique.back().members) {
      ++dropped;
      continue;
    }
    unique.push_back(std::move(grown[order[k]]));
  }
  if (duplicates) *duplicates = dropped;
  return Cover(g.node_count(), std::move(unique));
}

Cover detect(const Graph& g, const Params& params, Stats* stats) {
  params.validate();
  const std::vector<Clique> cliques = maximal_cliques(g, params.min_clique_size);
  const std::vector<Clique> seeds = filter_overlapping_cliques(cliques, params.overlapping_threshold);
  std::size_t duplicates = 0;
  Cover cover = grow_all(g, seeds, params.growing_threshold, &duplicates);
  if (stats) {
    stats->maximal_cliques = cliques.size();
    stats->retained_seeds = seeds.size();
    stats->duplicate_communities = duplicates;
  }
  return cover;
}

}  // namespace dunbar::caa
