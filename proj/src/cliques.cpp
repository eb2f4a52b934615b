#include "dunbar/cliques.hpp"

#include <algorithm>
#include <ostream>

#include "dunbar/parallel.hpp"

namespace dunbar {

bool canonical_less(std::span<const NodeId> a, std::span<const NodeId> b) noexcept {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_canonical(std::vector<Clique>& cliques) {
  std::sort(cliques.begin(), cliques.end(),
            [](const Clique& a, const Clique& b) { return canonical_less(a, b); });
}

namespace {

/// Matula–Beck bucket peeling; returns nodes in degeneracy order.
std::vector<NodeId> degeneracy_order(const Graph& g) {
  const std::size_t n = g.node_count();
  std::size_t max_deg = 0;
  std::vector<std::size_t> deg(n);
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  // bucket sort by degree with position tracking
  std::vector<std::size_t> bin(max_deg + 1, 0);
  for (std::size_t d : deg) ++bin[d];
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<NodeId> order(n);
  std::vector<std::size_t> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    order[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::size_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const NodeId w = order[pw];
        if (u != w) {
          order[pu] = w;
          order[pw] = u;
          pos[u] = pw;
          pos[w] = pu;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return order;
}

void intersect(std::span<const NodeId> a, std::span<const NodeId> b, std::vector<NodeId>& out) {
  out.clear();
  if (a.size() > b.size()) std::swap(a, b);
  if (a.size() * 16 < b.size()) {
    for (NodeId x : a) {
      if (std::binary_search(b.begin(), b.end(), x)) out.push_back(x);
    }
    return;
  }
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

std::size_t intersect_count(std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.size() > b.size()) std::swap(a, b);
  if (a.size() * 16 < b.size()) {
    std::size_t c = 0;
    for (NodeId x : a) c += std::binary_search(b.begin(), b.end(), x) ? 1 : 0;
    return c;
  }
  return sorted_intersection_size(a, b);
}

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, std::size_t min_size, std::vector<Clique>& sink)
      : g_(g), min_size_(min_size), sink_(sink) {}

  void run(NodeId root, std::vector<NodeId> candidates, std::vector<NodeId> excluded) {
    clique_.assign(1, root);
    expand(candidates, excluded);
  }

 private:
  void expand(std::vector<NodeId>& candidates, std::vector<NodeId>& excluded) {
    if (candidates.empty()) {
      if (excluded.empty() && clique_.size() >= min_size_) {
        Clique c{clique_};
        std::sort(c.members.begin(), c.members.end());
        sink_.push_back(std::move(c));
      }
      return;
    }
    if (clique_.size() + candidates.size() < min_size_) return;

    // Tomita pivot: the node of P ∪ X with the most neighbors in P.
    NodeId pivot = candidates.front();
    std::size_t best = 0;
    bool first = true;
    for (const auto* set : {&candidates, &excluded}) {
      for (NodeId u : *set) {
        const std::size_t covered = intersect_count(candidates, g_.neighbors(u));
        if (first || covered > best) {
          best = covered;
          pivot = u;
          first = false;
        }
      }
    }

    std::vector<NodeId> branch;
    auto pivot_nb = g_.neighbors(pivot);
    std::set_difference(candidates.begin(), candidates.end(), pivot_nb.begin(), pivot_nb.end(),
                        std::back_inserter(branch));

    std::vector<NodeId> next_p, next_x;
    for (NodeId v : branch) {
      auto nb = g_.neighbors(v);
      intersect(candidates, nb, next_p);
      intersect(excluded, nb, next_x);
      clique_.push_back(v);
      expand(next_p, next_x);
      clique_.pop_back();
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  const Graph& g_;
  std::size_t min_size_;
  std::vector<Clique>& sink_;
  std::vector<NodeId> clique_;
};

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g, std::size_t min_size) {
  if (min_size == 0) min_size = 1;
  const std::size_t n = g.node_count();
  const std::vector<NodeId> order = degeneracy_order(g);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::vector<Clique>> found(worker_slots(n));
  parallel_for(n, [&](unsigned worker, std::size_t i) {
    const NodeId v = order[i];
    // Only a node with at least min_size - 1 neighbors can root a large enough clique.
    if (g.degree(v) + 1 < min_size) return;
    std::vector<NodeId> later, earlier;
    for (NodeId u : g.neighbors(v)) (rank[u] > i ? later : earlier).push_back(u);
    BronKerbosch(g, min_size, found[worker]).run(v, std::move(later), std::move(earlier));
  });

  std::vector<Clique> out;
  std::size_t total = 0;
  for (const auto& f : found) total += f.size();
  out.reserve(total);
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(out));
  sort_canonical(out);
  return out;
}

std::vector<Clique> brute_force_maximal_cliques(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n > kBruteForceNodeLimit) {
    throw InvalidArgument("brute-force clique enumeration refused: " + std::to_string(n) + " nodes exceeds limit of " +
                          std::to_string(kBruteForceNodeLimit));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  std::vector<Clique> out;
  const std::uint32_t full = n == 0 ? 0 : static_cast<std::uint32_t>((1ull << n) - 1);
  for (std::uint64_t m = 1; m <= full; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    bool clique = true;
    for (std::size_t v = 0; v < n && clique; ++v) {
      if ((mask >> v) & 1u) clique = (mask & ~(1u << v) & ~adj[v]) == 0;
    }
    if (!clique) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      if (!((mask >> v) & 1u) && (adj[v] & mask) == mask) maximal = false;
    }
    if (!maximal) continue;
    Clique c;
    for (std::size_t v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) c.members.push_back(static_cast<NodeId>(v));
    }
    out.push_back(std::move(c));
  }
  sort_canonical(out);
  return out;
}

void write_cliques(std::ostream& out, const Graph& g, std::span<const Clique> cliques) {
  for (const Clique& c : cliques) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i) out << ' ';
      out << g.label(c.members[i]);
    }
    out << '\n';
  }
}

}  // namespace dunbar
