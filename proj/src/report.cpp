#include "dunbar/report.hpp"

#include <cstdio>
#include <ostream>
#include <string>

namespace dunbar {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string number(const std::optional<double>& v) { return v ? number(*v) : std::string(); }

nlohmann::json optional_json(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

std::string cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

}  // namespace

void write_rows_csv(std::ostream& out, const MetricReport& report) {
  out << "community,size,size_class,tpr,conductance,internal_density,transitivity,modularity_contribution\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const CommunityRow& r = report.rows[i];
    out << i << ',' << r.size() << ',' << name(r.size_class) << ',' << number(r.tpr) << ','
        << number(r.conductance) << ',' << number(r.internal_density) << ',' << number(r.transitivity) << ',';
    if (report.extended_modularity) out << number(r.modularity_contribution);
    out << '\n';
  }
}

void write_report_cover(std::ostream& out, const Graph& g, const MetricReport& report) {
  for (const CommunityRow& r : report.rows) {
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      if (i) out << ' ';
      out << g.label(r.members[i]);
    }
    out << '\n';
  }
}

nlohmann::json summary_json(const MetricReport& report, std::string_view algorithm) {
  nlohmann::json j;
  j["schema"] = kReportSchema;
  j["schema_version"] = kReportSchemaVersion;
  j["algorithm"] = algorithm;
  j["graph"] = {{"nodes", report.node_count}, {"edges", report.edge_count}};
  j["communities"] = report.rows.size();
  j["covered_nodes"] = report.covered_nodes;
  j["extended_modularity"] = optional_json(report.extended_modularity);
  j["desirable_coverage"] = report.desirable_coverage;
  j["largest_community"] = {{"size", report.sizes.largest}, {"node_share", report.sizes.largest_share}};
  nlohmann::json classes = nlohmann::json::array();
  for (SizeClass c : kSizeClasses) {
    const ClassSummary& s = report.summary(c);
    classes.push_back({
        {"class", name(c)},
        {"range", range_label(c)},
        {"communities", s.communities},
        {"nodes", s.nodes},
        {"partial_modularity", report.extended_modularity ? nlohmann::json(s.partial_modularity) : nlohmann::json()},
        {"mean_tpr", optional_json(s.mean_tpr)},
        {"mean_conductance", optional_json(s.mean_conductance)},
        {"mean_internal_density", optional_json(s.mean_internal_density)},
        {"mean_transitivity", optional_json(s.mean_transitivity)},
        {"excluded", {{"conductance", s.conductance_excluded},
                      {"internal_density", s.internal_density_excluded},
                      {"transitivity", s.transitivity_excluded}}},
    });
  }
  j["classes"] = std::move(classes);
  j["notes"] = report.notes;
  return j;
}

void print_summary(std::ostream& out, const MetricReport& report, std::string_view algorithm) {
  char line[160];
  out << algorithm << ": " << report.rows.size() << " communities over " << report.node_count << " nodes, "
      << report.edge_count << " edges\n";
  std::snprintf(line, sizeof line, "largest community: %zu nodes (%.3f%% of nodes)\n", report.sizes.largest,
                100.0 * report.sizes.largest_share);
  out << line;
  std::snprintf(line, sizeof line, "desirable coverage (size 4-150): %.4f\n", report.desirable_coverage);
  out << line;
  out << "extended modularity: " << (report.extended_modularity ? number(*report.extended_modularity) : "undefined")
      << '\n';
  std::snprintf(line, sizeof line, "%-8s %12s %10s %10s %10s %10s %10s\n", "size", "communities", "EQ part",
                "TPR", "conduct.", "density", "transit.");
  out << line;
  for (SizeClass c : kSizeClasses) {
    const ClassSummary& s = report.summary(c);
    std::snprintf(line, sizeof line, "%-8s %12zu %10s %10s %10s %10s %10s\n", std::string(range_label(c)).c_str(),
                  s.communities,
                  report.extended_modularity ? cell(s.partial_modularity).c_str() : "-",
                  cell(s.mean_tpr).c_str(), cell(s.mean_conductance).c_str(), cell(s.mean_internal_density).c_str(),
                  cell(s.mean_transitivity).c_str());
    out << line;
  }
  for (const std::string& note : report.notes) out << "note: " << note << '\n';
}

}  // namespace dunbar
