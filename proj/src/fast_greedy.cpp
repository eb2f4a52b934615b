#include <algorithm>
#include <limits>
#include <numeric>

#include "dunbar/baselines.hpp"

namespace dunbar {

namespace {

/// Best merge offered by one community's row. `gain` is ΔQ scaled by
/// (2m)^2 / 2, which keeps it an exact integer: 2m * e_ij - d_i * d_j for
/// e_ij edges between i and j.
struct Offer {
  std::int64_t gain;
  std::uint32_t lo;
  std::uint32_t hi;
  std::uint32_t owner;
  std::uint32_t version;
};

/// Max-heap order: larger gain first, then the lowest (lo, hi) pair.
struct OfferOrder {
  bool operator()(const Offer& a, const Offer& b) const noexcept {
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.lo != b.lo) return a.lo > b.lo;
    return a.hi > b.hi;
  }
};

using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;  // (neighbor community, edges), sorted

void erase_from(Row& row, std::uint32_t c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
  if (it != row.end() && it->first == c) row.erase(it);
}

void upsert(Row& row, std::uint32_t c, std::int64_t w) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t x) { return e.first < x; });
  if (it != row.end() && it->first == c) {
    it->second = w;
  } else {
    row.insert(it, {c, w});
  }
}

}  // namespace

Partition fast_greedy(const Graph& g) {
  const std::size_t n = g.node_count();
  const auto two_m = static_cast<std::int64_t>(2 * g.edge_count());

  std::vector<Row> rows(n);
  std::vector<std::int64_t> degree(n);
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = static_cast<std::int64_t>(g.degree(v));
    rows[v].reserve(g.degree(v));
    for (NodeId u : g.neighbors(v)) rows[v].emplace_back(u, 1);
  }

  auto gain_of = [&](std::uint32_t a, std::uint32_t b, std::int64_t edges) {
    return two_m * edges - degree[a] * degree[b];
  };

  // Each row keeps its best partner (largest gain, then lowest id). The pair
  // with the lowest (lo, hi) among pairs of one row is the one with the
  // lowest partner, so the global best pair is always some row's best.
  struct Best {
    std::int64_t gain = 0;
    std::uint32_t partner = 0;
  };
  std::vector<Best> best(n);
  std::vector<std::uint32_t> version(n, 0);
  std::vector<bool> alive(n, true);
  std::vector<Offer> heap;

  auto offer = [&](std::uint32_t c) {
    return Offer{best[c].gain, std::min(c, best[c].partner), std::max(c, best[c].partner), c, version[c]};
  };
  auto rescan = [&](std::uint32_t c) {
    Best b{std::numeric_limits<std::int64_t>::min(), 0};
    for (auto [x, w] : rows[c]) {
      const std::int64_t gain = gain_of(c, x, w);
      if (gain > b.gain) b = {gain, x};
    }
    best[c] = b;
    ++version[c];
  };
  auto push = [&](std::uint32_t c) {
    heap.push_back(offer(c));
    std::push_heap(heap.begin(), heap.end(), OfferOrder{});
  };
  auto live_offer = [&](const Offer& o) { return alive[o.owner] && o.version == version[o.owner]; };

  std::size_t live_rows = 0;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (rows[c].empty()) continue;
    rescan(c);
    heap.push_back(offer(c));
    ++live_rows;
  }
  std::make_heap(heap.begin(), heap.end(), OfferOrder{});

  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), OfferOrder{});
    const Offer top = heap.back();
    heap.pop_back();
    if (!live_offer(top)) continue;
    if (top.gain <= 0) break;

    // Merge hi into lo; lo keeps its id.
    const std::uint32_t keep = top.lo, gone = top.hi;
    Row merged;
    merged.reserve(rows[keep].size() + rows[gone].size());
    {
      auto a = rows[keep].begin(), ae = rows[keep].end();
      auto b = rows[gone].begin(), be = rows[gone].end();
      while (a != ae || b != be) {
        std::pair<std::uint32_t, std::int64_t> e;
        if (b == be || (a != ae && a->first < b->first)) {
          e = *a++;
        } else if (a == ae || b->first < a->first) {
          e = *b++;
        } else {
          e = {a->first, a->second + b->second};
          ++a;
          ++b;
        }
        if (e.first != keep && e.first != gone) merged.push_back(e);
      }
    }
    rows[keep] = std::move(merged);
    Row().swap(rows[gone]);
    degree[keep] += degree[gone];
    alive[gone] = false;
    parent[gone] = keep;
    --live_rows;

    // Every gain in keep's row changed with its degree; in a neighbor's row
    // only the entries for keep and gone did.
    for (auto [x, w] : rows[keep]) {
      erase_from(rows[x], gone);
      upsert(rows[x], keep, w);
      const std::int64_t gain = gain_of(x, keep, w);
      if (best[x].partner == keep || best[x].partner == gone) {
        rescan(x);
      } else if (gain > best[x].gain || (gain == best[x].gain && keep < best[x].partner)) {
        best[x] = {gain, keep};
        ++version[x];
      } else {
        continue;
      }
      push(x);
    }
    if (rows[keep].empty()) {
      ++version[keep];  // retire its outstanding offers
      --live_rows;
    } else {
      rescan(keep);
      push(keep);
    }

    // Drop superseded offers once they dominate the heap.
    if (heap.size() > 4 * live_rows + 1024) {
      std::erase_if(heap, [&](const Offer& o) { return !live_offer(o); });
      std::make_heap(heap.begin(), heap.end(), OfferOrder{});
    }
  }

  std::vector<std::uint32_t> root(n);
  for (NodeId v = 0; v < n; ++v) {
    std::uint32_t r = v;
    while (parent[r] != r) r = parent[r];
    root[v] = r;
  }
  return Partition::from_labels(root);
}

}  // namespace dunbar
