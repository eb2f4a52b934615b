#include <algorithm>
#include <numeric>
#include <random>

#include "dunbar/baselines.hpp"

namespace dunbar {

namespace {

constexpr double kMinLevelGain = 1e-7;
// A move must beat staying put by more than this to count; stops float noise
// from bouncing a node between two equally good communities.
constexpr double kMoveEpsilon = 1e-12;

/// Weighted multigraph used at every Louvain level. `loop[i]` is the weight of
/// i's internal adjacency counted over ordered pairs, so that for a node
/// standing for a community S of the original graph, loop = 2 * edges inside S.
struct LevelGraph {
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> targets;
  std::vector<double> weights;
  std::vector<double> loop;
  std::vector<double> degree;  ///< total weighted degree including loop
  double total = 0;            ///< 2m

  std::size_t size() const noexcept { return loop.size(); }
};

LevelGraph from_graph(const Graph& g) {
  LevelGraph lg;
  const std::size_t n = g.node_count();
  lg.offsets.resize(n + 1, 0);
  lg.loop.assign(n, 0.0);
  lg.degree.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    lg.offsets[v + 1] = lg.offsets[v] + g.degree(v);
    for (NodeId u : g.neighbors(v)) {
      lg.targets.push_back(u);
      lg.weights.push_back(1.0);
    }
    lg.degree[v] = static_cast<double>(g.degree(v));
  }
  lg.total = 2.0 * static_cast<double>(g.edge_count());
  return lg;
}

double modularity_of(const LevelGraph& lg, std::span<const std::uint32_t> community) {
  std::vector<double> in(lg.size(), 0.0), tot(lg.size(), 0.0);
  for (std::size_t i = 0; i < lg.size(); ++i) {
    const auto c = community[i];
    tot[c] += lg.degree[i];
    in[c] += lg.loop[i];
    for (std::size_t e = lg.offsets[i]; e < lg.offsets[i + 1]; ++e) {
      if (community[lg.targets[e]] == c) in[c] += lg.weights[e];
    }
  }
  double q = 0;
  for (std::size_t c = 0; c < lg.size(); ++c) {
    q += in[c] / lg.total - (tot[c] / lg.total) * (tot[c] / lg.total);
  }
  return q;
}

/// Local moving phase; returns true when at least one node changed community.
bool local_moving(const LevelGraph& lg, std::vector<std::uint32_t>& community, std::mt19937_64& rng) {
  const std::size_t n = lg.size();
  std::vector<double> tot(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) tot[community[i]] += lg.degree[i];

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<double> link(n, 0.0);
  std::vector<std::uint8_t> marked(n, 0);
  std::vector<std::uint32_t> seen;
  bool any_move = false;
  auto touch = [&](std::uint32_t c) {
    if (!marked[c]) {
      marked[c] = 1;
      seen.push_back(c);
    }
  };

  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t moves = 0;
    for (NodeId i : order) {
      const std::uint32_t old_c = community[i];
      const double k = lg.degree[i];
      seen.clear();
      touch(old_c);
      for (std::size_t e = lg.offsets[i]; e < lg.offsets[i + 1]; ++e) {
        const std::uint32_t c = community[lg.targets[e]];
        touch(c);
        link[c] += lg.weights[e];
      }
      tot[old_c] -= k;
      auto gain = [&](std::uint32_t c) { return link[c] - tot[c] * k / lg.total; };
      std::uint32_t best_c = old_c;
      double best = gain(old_c);
      for (std::uint32_t c : seen) {
        const double g = gain(c);
        if (g > best + kMoveEpsilon) {
          best = g;
          best_c = c;
        }
      }
      tot[best_c] += k;
      community[i] = best_c;
      if (best_c != old_c) ++moves;
      for (std::uint32_t c : seen) {
        link[c] = 0.0;
        marked[c] = 0;
      }
    }
    if (moves == 0) break;
    any_move = true;
  }
  return any_move;
}

LevelGraph aggregate(const LevelGraph& lg, std::span<const std::uint32_t> community, std::size_t count) {
  LevelGraph next;
  next.total = lg.total;
  next.loop.assign(count, 0.0);
  next.degree.assign(count, 0.0);
  std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(count);
  for (std::size_t i = 0; i < lg.size(); ++i) {
    const auto c = community[i];
    next.degree[c] += lg.degree[i];
    next.loop[c] += lg.loop[i];
    for (std::size_t e = lg.offsets[i]; e < lg.offsets[i + 1]; ++e) {
      const auto d = community[lg.targets[e]];
      if (d == c) {
        next.loop[c] += lg.weights[e];
      } else {
        rows[c].emplace_back(d, lg.weights[e]);
      }
    }
  }
  next.offsets.assign(count + 1, 0);
  for (std::size_t c = 0; c < count; ++c) {
    auto& row = rows[c];
    std::sort(row.begin(), row.end());
    for (std::size_t a = 0; a < row.size();) {
      std::size_t b = a;
      double w = 0;
      while (b < row.size() && row[b].first == row[a].first) w += row[b++].second;
      next.targets.push_back(row[a].first);
      next.weights.push_back(w);
      a = b;
    }
    next.offsets[c + 1] = next.targets.size();
  }
  return next;
}

}  // namespace

Partition louvain(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> assignment(n);
  std::iota(assignment.begin(), assignment.end(), 0u);
  if (g.edge_count() == 0) return Partition::from_labels(assignment);

  std::mt19937_64 rng(seed);
  LevelGraph level = from_graph(g);
  std::vector<std::uint32_t> community(n);
  std::iota(community.begin(), community.end(), 0u);
  double q = modularity_of(level, community);

  for (;;) {
    std::iota(community.begin(), community.end(), 0u);
    if (!local_moving(level, community, rng)) break;
    const double next_q = modularity_of(level, community);

    Partition dense = Partition::from_labels(community);
    for (auto& a : assignment) a = dense.assignment[a];
    level = aggregate(level, dense.assignment, dense.community_count());
    community.resize(level.size());

    if (next_q - q < kMinLevelGain) break;
    q = next_q;
  }
  return Partition::from_labels(assignment);
}

}  // namespace dunbar
