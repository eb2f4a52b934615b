#pragma once

#include <iosfwd>
#include <string_view>

#include <json.hpp>

#include "dunbar/graph.hpp"
#include "dunbar/metrics.hpp"

namespace dunbar {

/// Identifies the layout of the JSON summary; bump on incompatible changes.
inline constexpr std::string_view kReportSchema = "dunbar.metric-report";
inline constexpr int kReportSchemaVersion = 1;

/// One CSV row per community, in report order:
/// community,size,size_class,tpr,conductance,internal_density,transitivity,modularity_contribution
/// Undefined values are written as empty fields.
void write_rows_csv(std::ostream& out, const MetricReport& report);

/// Communities in report order, one per line of original labels. Line i of
/// this file describes row i of the CSV.
void write_report_cover(std::ostream& out, const Graph& g, const MetricReport& report);

/// Aggregates (per-class summaries and global values) as JSON.
nlohmann::json summary_json(const MetricReport& report, std::string_view algorithm);

/// Human-readable size-distribution and per-class metric table.
void print_summary(std::ostream& out, const MetricReport& report, std::string_view algorithm);

}  // namespace dunbar
