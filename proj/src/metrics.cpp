#include "dunbar/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dunbar/parallel.hpp"

namespace dunbar {

SizeClass classify(std::size_t s) noexcept {
  if (s <= 3) return SizeClass::Undersized;
  if (s <= 50) return SizeClass::CloseFriend;
  if (s <= 150) return SizeClass::CasualFriend;
  if (s <= 500) return SizeClass::Acquaintance;
  return SizeClass::JustAFace;
}

std::string_view name(SizeClass c) noexcept {
  switch (c) {
    case SizeClass::Undersized: return "undersized";
    case SizeClass::CloseFriend: return "close_friend";
    case SizeClass::CasualFriend: return "casual_friend";
    case SizeClass::Acquaintance: return "acquaintance";
    case SizeClass::JustAFace: return "just_a_face";
  }
  return "?";
}

std::string_view range_label(SizeClass c) noexcept {
  switch (c) {
    case SizeClass::Undersized: return "1-3";
    case SizeClass::CloseFriend: return "4-50";
    case SizeClass::CasualFriend: return "51-150";
    case SizeClass::Acquaintance: return "151-500";
    case SizeClass::JustAFace: return "501+";
  }
  return "?";
}

SocialCircle classify_circle(std::size_t s) noexcept {
  if (s <= 3) return SocialCircle::Undersized;
  if (s <= 5) return SocialCircle::SupportClique;
  if (s <= 15) return SocialCircle::SympathyGroup;
  if (s <= 50) return SocialCircle::CloseFriend;
  if (s <= 150) return SocialCircle::CasualFriend;
  if (s <= 500) return SocialCircle::Acquaintance;
  return SocialCircle::JustAFace;
}

std::string_view name(SocialCircle c) noexcept {
  switch (c) {
    case SocialCircle::Undersized: return "undersized";
    case SocialCircle::SupportClique: return "support_clique";
    case SocialCircle::SympathyGroup: return "sympathy_group";
    case SocialCircle::CloseFriend: return "close_friend";
    case SocialCircle::CasualFriend: return "casual_friend";
    case SocialCircle::Acquaintance: return "acquaintance";
    case SocialCircle::JustAFace: return "just_a_face";
  }
  return "?";
}

namespace {

/// Marks the members of one community at a time in a graph-sized buffer.
class Marker {
 public:
  explicit Marker(std::size_t n) : inside_(n, 0) {}

  void set(std::span<const NodeId> members) {
    for (NodeId v : members) inside_[v] = 1;
  }
  void clear(std::span<const NodeId> members) {
    for (NodeId v : members) inside_[v] = 0;
  }
  bool operator()(NodeId v) const noexcept { return inside_[v] != 0; }

 private:
  std::vector<std::uint8_t> inside_;
};

/// Binary-search membership for one-off calls.
struct SortedMembers {
  std::span<const NodeId> members;
  bool operator()(NodeId v) const noexcept { return std::binary_search(members.begin(), members.end(), v); }
};

template <typename Inside>
void inside_neighbors(const Graph& g, NodeId v, const Inside& inside, std::vector<NodeId>& out) {
  out.clear();
  for (NodeId u : g.neighbors(v)) {
    if (inside(u)) out.push_back(u);
  }
}

template <typename Inside>
double tpr_impl(const Graph& g, std::span<const NodeId> members, const Inside& inside) {
  if (members.empty()) return 0.0;
  // on_triangle[i]: members[i] is already known to sit on an internal triangle
  std::vector<std::uint8_t> on_triangle(members.size(), 0);
  auto mark = [&](NodeId x) {
    on_triangle[static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), x) - members.begin())] = 1;
  };
  std::vector<NodeId> nv;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (on_triangle[i]) {
      ++hits;
      continue;
    }
    const NodeId v = members[i];
    inside_neighbors(g, v, inside, nv);
    bool found = false;
    for (NodeId u : nv) {
      auto nu = g.neighbors(u);
      auto a = nv.begin();
      auto b = nu.begin();
      while (a != nv.end() && b != nu.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          mark(u);
          mark(*a);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (found) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(members.size());
}

/// Sum over members of |N(v) ∩ S|: twice the number of internal edges.
template <typename Inside>
std::size_t internal_degree_sum(const Graph& g, std::span<const NodeId> members, const Inside& inside) {
  std::size_t sum = 0;
  for (NodeId v : members) {
    for (NodeId u : g.neighbors(v)) sum += inside(u) ? 1 : 0;
  }
  return sum;
}

template <typename Inside>
std::optional<double> conductance_impl(const Graph& g, std::span<const NodeId> members, const Inside& inside) {
  std::size_t volume = 0;
  for (NodeId v : members) volume += g.degree(v);
  if (volume == 0) return std::nullopt;
  const std::size_t cut = volume - internal_degree_sum(g, members, inside);
  return static_cast<double>(cut) / static_cast<double>(volume);
}

template <typename Inside>
std::optional<double> density_impl(const Graph& g, std::span<const NodeId> members, const Inside& inside) {
  const std::size_t s = members.size();
  if (s < 2) return std::nullopt;
  const double edges = static_cast<double>(internal_degree_sum(g, members, inside)) / 2.0;
  return edges / (static_cast<double>(s) * static_cast<double>(s - 1) / 2.0);
}

template <typename Inside>
std::optional<double> transitivity_impl(const Graph& g, std::span<const NodeId> members, const Inside& inside) {
  std::vector<NodeId> nv;
  std::uint64_t triples = 0;
  std::uint64_t triangles = 0;
  for (NodeId v : members) {
    inside_neighbors(g, v, inside, nv);
    const std::uint64_t d = nv.size();
    if (d >= 2) triples += d * (d - 1) / 2;
    // each triangle v < u < w counted once from v
    auto first_above = std::upper_bound(nv.begin(), nv.end(), v);
    for (auto it = first_above; it != nv.end(); ++it) {
      const NodeId u = *it;
      auto nu = g.neighbors(u);
      auto a = std::upper_bound(it, nv.end(), u);
      auto b = std::upper_bound(nu.begin(), nu.end(), u);
      while (a != nv.end() && b != nu.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++triangles;
          ++a;
          ++b;
        }
      }
    }
  }
  if (triples == 0) return std::nullopt;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

template <typename Inside>
double modularity_term(const Graph& g, const Cover& cover, std::span<const NodeId> members, const Inside& inside) {
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double adjacency = 0.0;
  double weighted_degree = 0.0;
  for (NodeId v : members) {
    const double ov = cover.membership(v);
    double row = 0.0;
    for (NodeId w : g.neighbors(v)) {
      if (inside(w)) row += 1.0 / cover.membership(w);
    }
    adjacency += row / ov;
    weighted_degree += static_cast<double>(g.degree(v)) / ov;
  }
  return (adjacency - weighted_degree * weighted_degree / two_m) / two_m;
}

/// Cover indices in canonical community order.
std::vector<std::size_t> canonical_indices(const Cover& cover) {
  std::vector<std::size_t> order(cover.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(cover[a].members, cover[b].members);
  });
  return order;
}

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) throw UndefinedMetric("modularity is undefined for a graph without edges");
}

}  // namespace

std::vector<double> modularity_contributions(const Graph& g, const Cover& cover) {
  require_edges(g);
  std::vector<double> out(cover.size());
  std::vector<std::optional<Marker>> markers(worker_slots(cover.size()));
  parallel_for(cover.size(), [&](unsigned worker, std::size_t i) {
    auto& marker = markers[worker];
    if (!marker) marker.emplace(g.node_count());
    const auto& members = cover[i].members;
    marker->set(members);
    out[i] = modularity_term(g, cover, members, *marker);
    marker->clear(members);
  });
  return out;
}

double extended_modularity(const Graph& g, const Cover& cover) {
  const std::vector<double> terms = modularity_contributions(g, cover);
  double q = 0.0;
  for (std::size_t i : canonical_indices(cover)) q += terms[i];
  return q;
}

std::array<double, kSizeClassCount> partial_modularity_by_class(const Graph& g, const Cover& cover) {
  const std::vector<double> terms = modularity_contributions(g, cover);
  std::array<double, kSizeClassCount> out{};
  for (std::size_t i : canonical_indices(cover)) {
    out[static_cast<std::size_t>(classify(cover[i].size()))] += terms[i];
  }
  return out;
}

double tpr(const Graph& g, std::span<const NodeId> members) { return tpr_impl(g, members, SortedMembers{members}); }

std::optional<double> conductance(const Graph& g, std::span<const NodeId> members) {
  return conductance_impl(g, members, SortedMembers{members});
}

std::optional<double> internal_density(const Graph& g, std::span<const NodeId> members) {
  return density_impl(g, members, SortedMembers{members});
}

std::optional<double> transitivity(const Graph& g, std::span<const NodeId> members) {
  return transitivity_impl(g, members, SortedMembers{members});
}

double desirable_coverage(const Graph& g, const Cover& cover) {
  if (g.node_count() == 0) return 0.0;
  std::vector<std::uint8_t> hit(g.node_count(), 0);
  for (const Community& c : cover.communities()) {
    if (!is_desirable(c.size())) continue;
    for (NodeId v : c.members) hit[v] = 1;
  }
  const auto covered = std::count(hit.begin(), hit.end(), std::uint8_t{1});
  return static_cast<double>(covered) / static_cast<double>(g.node_count());
}

SizeDistribution size_distribution(const Cover& cover) {
  SizeDistribution d;
  for (const Community& c : cover.communities()) {
    ++d.counts[static_cast<std::size_t>(classify(c.size()))];
    d.largest = std::max(d.largest, c.size());
  }
  if (cover.node_count() > 0) {
    d.largest_share = static_cast<double>(d.largest) / static_cast<double>(cover.node_count());
  }
  return d;
}

namespace {

struct MeanAccumulator {
  double sum = 0.0;
  std::size_t count = 0;
  std::size_t excluded = 0;

  void add(std::optional<double> v) {
    if (v) {
      sum += *v;
      ++count;
    } else {
      ++excluded;
    }
  }
  std::optional<double> mean() const {
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
  }
};

}  // namespace

MetricReport evaluate(const Graph& g, const Cover& cover) {
  MetricReport report;
  report.node_count = g.node_count();
  report.edge_count = g.edge_count();
  const bool modularity_defined = g.edge_count() > 0;
  if (!modularity_defined) report.notes.emplace_back("extended modularity undefined: graph has no edges");

  const std::vector<std::size_t> order = canonical_indices(cover);
  report.rows.resize(cover.size());
  std::vector<std::optional<Marker>> markers(worker_slots(cover.size()));
  parallel_for(cover.size(), [&](unsigned worker, std::size_t k) {
    auto& marker = markers[worker];
    if (!marker) marker.emplace(g.node_count());
    const Community& c = cover[order[k]];
    std::span<const NodeId> members = c.members;
    marker->set(members);
    CommunityRow& row = report.rows[k];
    row.members = c.members;
    row.size_class = classify(c.size());
    row.tpr = tpr_impl(g, members, *marker);
    row.conductance = conductance_impl(g, members, *marker);
    row.internal_density = density_impl(g, members, *marker);
    row.transitivity = transitivity_impl(g, members, *marker);
    if (modularity_defined) row.modularity_contribution = modularity_term(g, cover, members, *marker);
    marker->clear(members);
  });

  std::array<MeanAccumulator, kSizeClassCount> tprs, conds, dens, trans;
  double eq = 0.0;
  for (const CommunityRow& row : report.rows) {
    const auto c = static_cast<std::size_t>(row.size_class);
    ClassSummary& s = report.classes[c];
    ++s.communities;
    s.nodes += row.size();
    s.partial_modularity += row.modularity_contribution;
    eq += row.modularity_contribution;
    tprs[c].add(row.tpr);
    conds[c].add(row.conductance);
    dens[c].add(row.internal_density);
    trans[c].add(row.transitivity);
  }
  for (std::size_t c = 0; c < kSizeClassCount; ++c) {
    ClassSummary& s = report.classes[c];
    s.mean_tpr = tprs[c].mean();
    s.mean_conductance = conds[c].mean();
    s.conductance_excluded = conds[c].excluded;
    s.mean_internal_density = dens[c].mean();
    s.internal_density_excluded = dens[c].excluded;
    s.mean_transitivity = trans[c].mean();
    s.transitivity_excluded = trans[c].excluded;
  }
  if (modularity_defined) report.extended_modularity = eq;
  report.desirable_coverage = desirable_coverage(g, cover);
  report.covered_nodes = cover.covered_nodes();
  report.sizes = size_distribution(cover);
  return report;
}

}  // namespace dunbar
