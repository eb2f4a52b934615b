#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunbar/cover.hpp"
#include "dunbar/graph.hpp"

namespace dunbar {

/// Community size classes derived from Dunbar's social circles.
enum class SizeClass : std::uint8_t {
  Undersized,    ///< 1-3
  CloseFriend,   ///< 4-50
  CasualFriend,  ///< 51-150
  Acquaintance,  ///< 151-500
  JustAFace,     ///< 501+
};

inline constexpr std::size_t kSizeClassCount = 5;
inline constexpr std::array<SizeClass, kSizeClassCount> kSizeClasses = {
    SizeClass::Undersized, SizeClass::CloseFriend, SizeClass::CasualFriend, SizeClass::Acquaintance,
    SizeClass::JustAFace};

SizeClass classify(std::size_t community_size) noexcept;
std::string_view name(SizeClass c) noexcept;
/// "1-3", "4-50", ..., "501+"
std::string_view range_label(SizeClass c) noexcept;

/// The finer circle breakdown the four main classes are collapsed from.
enum class SocialCircle : std::uint8_t {
  Undersized,     ///< 1-3
  SupportClique,  ///< 4-5
  SympathyGroup,  ///< 6-15
  CloseFriend,    ///< 16-50
  CasualFriend,   ///< 51-150
  Acquaintance,   ///< 151-500
  JustAFace,      ///< 501+
};

SocialCircle classify_circle(std::size_t community_size) noexcept;
std::string_view name(SocialCircle c) noexcept;

/// Desirable communities have 4 to 150 members.
constexpr bool is_desirable(std::size_t community_size) noexcept {
  return community_size >= 4 && community_size <= 150;
}

/// Overlap-aware modularity: (1/2m) Σ_C Σ_{v,w ∈ C} [A_vw - k_v k_w / 2m] / (O_v O_w),
/// summed over ordered pairs including v = w. Reduces to Newman modularity on
/// a partition; uncovered nodes contribute nothing.
/// Throws UndefinedMetric when the graph has no edges.
double extended_modularity(const Graph& g, const Cover& cover);

/// Contribution of each community to extended_modularity, in cover order.
std::vector<double> modularity_contributions(const Graph& g, const Cover& cover);

/// extended_modularity split by the size class of the contributing community.
std::array<double, kSizeClassCount> partial_modularity_by_class(const Graph& g, const Cover& cover);

/// Fraction of members that sit on a triangle lying entirely inside `members`.
/// `members` must be sorted ascending.
double tpr(const Graph& g, std::span<const NodeId> members);

/// Boundary edges over the members' total whole-graph degree; nullopt when that
/// degree is 0.
std::optional<double> conductance(const Graph& g, std::span<const NodeId> members);

/// Internal edges over |S|(|S|-1)/2; nullopt when |S| < 2.
std::optional<double> internal_density(const Graph& g, std::span<const NodeId> members);

/// 3 * triangles / connected triples of the induced subgraph; nullopt without triples.
std::optional<double> transitivity(const Graph& g, std::span<const NodeId> members);

/// Share of all graph nodes that belong to at least one desirable community.
double desirable_coverage(const Graph& g, const Cover& cover);

struct SizeDistribution {
  std::array<std::size_t, kSizeClassCount> counts{};
  std::size_t largest = 0;
  double largest_share = 0.0;  ///< largest / node count
};

SizeDistribution size_distribution(const Cover& cover);

/// Metric values of one community.
struct CommunityRow {
  std::vector<NodeId> members;
  SizeClass size_class = SizeClass::Undersized;
  double tpr = 0.0;
  std::optional<double> conductance;
  std::optional<double> internal_density;
  std::optional<double> transitivity;
  double modularity_contribution = 0.0;  ///< 0 when modularity is undefined

  std::size_t size() const noexcept { return members.size(); }
};

/// Unweighted means over the communities of one size class. Undefined values
/// are left out of the mean and counted in the matching `*_excluded` field.
struct ClassSummary {
  std::size_t communities = 0;
  std::size_t nodes = 0;  ///< sum of community sizes
  std::optional<double> mean_tpr;
  std::optional<double> mean_conductance;
  std::optional<double> mean_internal_density;
  std::optional<double> mean_transitivity;
  std::size_t conductance_excluded = 0;
  std::size_t internal_density_excluded = 0;
  std::size_t transitivity_excluded = 0;
  double partial_modularity = 0.0;
};

struct MetricReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  /// Rows in canonical order (larger first, then by member ids), so the report
  /// does not depend on the order communities appear in the cover.
  std::vector<CommunityRow> rows;
  std::array<ClassSummary, kSizeClassCount> classes{};
  std::optional<double> extended_modularity;  ///< nullopt when m = 0
  std::vector<std::string> notes;
  double desirable_coverage = 0.0;
  std::size_t covered_nodes = 0;
  SizeDistribution sizes;

  const ClassSummary& summary(SizeClass c) const noexcept { return classes[static_cast<std::size_t>(c)]; }
};

/// Computes every metric for every community and aggregates by size class.
/// Never throws for metric-level problems; they become notes or exclusions.
MetricReport evaluate(const Graph& g, const Cover& cover);

}  // namespace dunbar
