#include "dunbar/generators.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace dunbar::gen {

namespace {

Graph build(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

void add_clique(std::vector<Edge>& edges, NodeId first, std::size_t k) {
  for (NodeId a = 0; a < k; ++a) {
    for (NodeId b = a + 1; b < k; ++b) edges.emplace_back(first + a, first + b);
  }
}

}  // namespace

Graph complete(std::size_t k) {
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  return build(k, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build(n, edges);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
  return build(n, edges);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build(leaves + 1, edges);
}

Graph edgeless(std::size_t n) { return build(n, {}); }

Graph bridged_cliques(std::size_t k) {
  std::vector<Edge> edges;
  add_clique(edges, 0, k);
  add_clique(edges, static_cast<NodeId>(k), k);
  edges.emplace_back(static_cast<NodeId>(k - 1), static_cast<NodeId>(k));
  return build(2 * k, edges);
}

Graph ring_of_cliques(std::size_t count, std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < count; ++i) {
    add_clique(edges, static_cast<NodeId>(i * k), k);
    const auto last = static_cast<NodeId>(i * k + k - 1);
    const auto next_first = static_cast<NodeId>(((i + 1) % count) * k);
    if (count > 1) edges.emplace_back(last, next_first);
  }
  return build(count * k, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return build(n, edges);
}

Graph powerlaw_cluster(std::size_t n, std::size_t m, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<NodeId>> adj(n);
  std::vector<Edge> edges;
  auto adjacent = [&](NodeId a, NodeId b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };
  auto link = [&](NodeId a, NodeId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    edges.emplace_back(a, b);
  };

  std::vector<NodeId> repeated;
  for (NodeId v = 0; v < std::min(m, n); ++v) repeated.push_back(v);
  for (auto source = static_cast<NodeId>(m); source < n; ++source) {
    std::vector<NodeId> targets;
    while (targets.size() < m) {
      std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
      const NodeId t = repeated[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    NodeId target = targets.back();
    targets.pop_back();
    link(source, target);
    repeated.push_back(target);
    std::size_t count = 1;
    while (count < m) {
      if (unit(rng) < p) {
        std::vector<NodeId> closing;
        for (NodeId w : adj[target]) {
          if (w != source && !adjacent(source, w)) closing.push_back(w);
        }
        if (!closing.empty()) {
          std::uniform_int_distribution<std::size_t> pick(0, closing.size() - 1);
          const NodeId w = closing[pick(rng)];
          link(source, w);
          repeated.push_back(w);
          ++count;
          continue;
        }
      }
      // fall back to preferential attachment, skipping targets already linked
      while (!targets.empty() && adjacent(source, targets.back())) targets.pop_back();
      if (targets.empty()) break;
      target = targets.back();
      targets.pop_back();
      link(source, target);
      repeated.push_back(target);
      ++count;
    }
    for (std::size_t i = 0; i < m; ++i) repeated.push_back(source);
  }
  return build(n, edges);
}

Graph coauthorship(std::size_t authors, std::size_t papers, std::size_t max_authors, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::geometric_distribution<std::size_t> extra(0.5);
  std::vector<NodeId> pool(authors);
  for (NodeId a = 0; a < authors; ++a) pool[a] = a;
  pool.reserve(authors + papers * 3);
  std::vector<Edge> edges;
  std::vector<NodeId> team;
  for (std::size_t p = 0; p < papers; ++p) {
    const std::size_t size = std::min(max_authors, 2 + extra(rng));
    team.clear();
    while (team.size() < size) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const NodeId a = pool[pick(rng)];
      if (std::find(team.begin(), team.end(), a) == team.end()) team.push_back(a);
    }
    for (std::size_t i = 0; i < team.size(); ++i) {
      for (std::size_t j = i + 1; j < team.size(); ++j) edges.emplace_back(team[i], team[j]);
      pool.push_back(team[i]);
    }
  }
  return build(authors, edges);
}

}  // namespace dunbar::gen
