#include <algorithm>
#include <numeric>
#include <random>

#include "dunbar/baselines.hpp"

namespace dunbar {

namespace {

/// Label histogram over a neighborhood, reusable across nodes.
class LabelCounter {
 public:
  explicit LabelCounter(std::size_t labels) : count_(labels, 0) {}

  /// Fills `tied` with the labels of maximal frequency, in first-seen order.
  void majority(const Graph& g, std::span<const std::uint32_t> labels, NodeId v, std::vector<std::uint32_t>& tied) {
    seen_.clear();
    std::uint32_t best = 0;
    for (NodeId u : g.neighbors(v)) {
      const std::uint32_t l = labels[u];
      if (count_[l]++ == 0) seen_.push_back(l);
      best = std::max(best, count_[l]);
    }
    tied.clear();
    for (std::uint32_t l : seen_) {
      if (count_[l] == best) tied.push_back(l);
      count_[l] = 0;
    }
  }

 private:
  std::vector<std::uint32_t> count_;
  std::vector<std::uint32_t> seen_;
};

}  // namespace

LabelPropagationResult label_propagation(const Graph& g, std::uint64_t seed, LabelPropagationOptions options) {
  const std::size_t n = g.node_count();
  std::vector<std::uint32_t> labels(n);
  std::iota(labels.begin(), labels.end(), 0u);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0u);

  std::mt19937_64 rng(seed);
  LabelCounter counter(n);
  std::vector<std::uint32_t> tied;

  LabelPropagationResult result;
  while (result.sweeps < options.max_sweeps) {
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId v : order) {
      if (g.degree(v) == 0) continue;
      counter.majority(g, labels, v, tied);
      if (tied.size() == 1) {
        labels[v] = tied.front();
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, tied.size() - 1);
        labels[v] = tied[pick(rng)];
      }
    }
    ++result.sweeps;

    bool stable = true;
    for (NodeId v = 0; v < n && stable; ++v) {
      if (g.degree(v) == 0) continue;
      counter.majority(g, labels, v, tied);
      stable = std::find(tied.begin(), tied.end(), labels[v]) != tied.end();
    }
    if (stable) {
      result.converged = true;
      break;
    }
  }
  result.partition = Partition::from_labels(labels);
  return result;
}

}  // namespace dunbar
