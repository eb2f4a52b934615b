// Acceptance suite: one line per criterion with PASS, FAIL or NOT RUN.
//
//   dunbar_acceptance                 run every criterion
//   dunbar_acceptance --criterion 3   run one criterion
//
// Exit status: 1 if any criterion failed, 77 if nothing ran (dataset-bound
// criteria without their files), 0 otherwise.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunbar/baselines.hpp"
#include "dunbar/bench.hpp"
#include "dunbar/caa.hpp"
#include "dunbar/generators.hpp"
#include "dunbar/metrics.hpp"
#include "support/oracles.hpp"

namespace {

using namespace dunbar;
namespace fs = std::filesystem;

enum class Status { Pass, Fail, NotRun };

struct Outcome {
  Status status = Status::Fail;
  std::string detail;
};

Outcome pass(std::string d) { return {Status::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
Outcome not_run(std::string d) { return {Status::NotRun, std::move(d)}; }

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

fs::path data_dir() {
  if (const char* env = std::getenv("DUNBAR_DATA_DIR"); env && *env) return env;
  return DUNBAR_DEFAULT_DATA_DIR;
}

constexpr const char* kDblpGraph = "com-dblp.ungraph.txt";
constexpr const char* kDblpTop5000 = "com-dblp.top5000.cmty.txt";
constexpr const char* kDblpAll = "com-dblp.all.cmty.txt";

/// Returns the missing files among `names`, as one readable string.
std::string missing(std::initializer_list<const char*> names) {
  std::string out;
  for (const char* n : names) {
    if (!fs::exists(data_dir() / n)) out += (out.empty() ? "" : ", ") + (data_dir() / n).string();
  }
  return out;
}

Graph load_dblp() {
  bench::RunConfig config;
  config.input = data_dir() / kDblpGraph;
  config.expect_nodes = 317080;
  config.expect_edges = 1049866;
  std::ostringstream log;
  Graph g = bench::load_dataset(config, log);
  std::fputs(log.str().c_str(), stderr);
  return g;
}

Outcome dblp_conformance() {
  if (auto m = missing({kDblpGraph, kDblpTop5000, kDblpAll}); !m.empty()) return not_run("dataset absent: " + m);
  const Stopwatch clock;
  const Graph g = load_dblp();
  const auto top = bench::size_conformance(import_cover(data_dir() / kDblpTop5000, g));
  const auto all = bench::size_conformance(import_cover(data_dir() / kDblpAll, g));
  const double elapsed = clock.seconds();
  const std::string detail =
      format("top5000 %zu/%zu = %.2f%% (need >= 98.5%%), all %zu/%zu = %.2f%% (need 94 +/- 2%%), %.1f s (limit 60)",
             top.desirable, top.communities, 100 * top.share(), all.desirable, all.communities, 100 * all.share(),
             elapsed);
  const bool ok = top.share() >= 0.985 && all.share() >= 0.92 && all.share() <= 0.96 && elapsed <= 60.0;
  return ok ? pass(detail) : fail(detail);
}

Outcome modularity_reduction() {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  int graphs = 0;
  for (std::uint64_t seed = 0; graphs < 50; ++seed) {
    const std::size_t n = 4 + rng() % 27;
    const Graph g = gen::erdos_renyi(n, 0.05 + 0.5 * std::uniform_real_distribution<double>()(rng), seed);
    if (g.edge_count() == 0) continue;
    ++graphs;
    std::vector<std::uint32_t> labels(n);
    const std::uint32_t blocks = 1 + rng() % n;
    for (auto& l : labels) l = rng() % blocks;
    const Partition p = Partition::from_labels(labels);
    const double diff = std::abs(extended_modularity(g, p.to_cover()) - oracle::classic_modularity(g, p.assignment));
    worst = std::max(worst, diff);
  }
  const std::string detail = format("50 graphs (n <= 30), max |EQ - Q| = %.3g (tolerance 1e-12)", worst);
  return worst <= 1e-12 ? pass(detail) : fail(detail);
}

Outcome clique_oracle() {
  const Stopwatch clock;
  std::mt19937_64 rng(777);
  int mismatches = 0;
  std::size_t cliques = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = gen::erdos_renyi(n, 0.2 + 0.6 * std::uniform_real_distribution<double>()(rng), 5000 + i);
    const auto fast = maximal_cliques(g, 1);
    cliques += fast.size();
    if (fast != brute_force_maximal_cliques(g)) ++mismatches;
  }
  const double elapsed = clock.seconds();
  const std::string detail =
      format("100 graphs (n <= 12), %zu cliques, %d mismatches, %.2f s (limit 10)", cliques, mismatches, elapsed);
  return mismatches == 0 && elapsed <= 10.0 ? pass(detail) : fail(detail);
}

Clique span_clique(NodeId first, NodeId last) {
  Clique c;
  for (NodeId v = first; v <= last; ++v) c.members.push_back(v);
  return c;
}

Outcome caa_worked_examples() {
  std::vector<std::string> failures;
  const Clique c1 = span_clique(0, 9);
  const std::vector<Clique> keep{c1, span_clique(8, 12)};     // overlap 2
  const std::vector<Clique> discard{c1, span_clique(6, 10)};  // overlap 4
  if (caa::filter_overlapping_cliques(keep, 0.7).size() != 2) failures.push_back("overlap 2 not kept");
  if (caa::filter_overlapping_cliques(discard, 0.7).size() != 1) failures.push_back("overlap 4 not discarded");

  std::vector<Edge> edges;
  for (NodeId u = 0; u < 10; ++u) {
    for (NodeId v = u + 1; v < 10; ++v) edges.emplace_back(u, v);
  }
  for (NodeId v = 0; v < 7; ++v) edges.emplace_back(v, 10);
  for (NodeId v = 0; v < 6; ++v) edges.emplace_back(v, 11);
  const Graph g = Graph::from_edges(12, edges);
  if (caa::growth_round(g, c1.members, 0.7) != std::vector<NodeId>{10}) {
    failures.push_back("growth round did not admit exactly the 7-edge candidate");
  }
  if (!caa::admits(7, 10, 0.7) || caa::admits(6, 10, 0.7)) failures.push_back("admission rule");

  std::string detail = "overlap 2 kept, overlap 4 discarded; 7 incoming edges admitted, 6 rejected";
  if (failures.empty()) return pass(detail);
  detail.clear();
  for (const auto& f : failures) detail += (detail.empty() ? "" : "; ") + f;
  return fail(detail);
}

Outcome metric_fixed_points() {
  std::size_t checked = 0, wrong = 0;
  const auto check_clique = [&](const Graph& g, const std::vector<NodeId>& members) {
    ++checked;
    if (tpr(g, members) != 1.0 || internal_density(g, members) != 1.0 || transitivity(g, members) != 1.0) ++wrong;
  };
  for (std::size_t k = 3; k <= 40; ++k) {
    std::vector<NodeId> all(k);
    for (NodeId v = 0; v < k; ++v) all[v] = v;
    check_clique(gen::complete(k), all);
  }
  const Graph co = gen::coauthorship(5000, 4000, 12, 99);
  for (const Clique& c : maximal_cliques(co, 3)) check_clique(co, c.members);

  std::size_t whole_checked = 0, whole_wrong = 0;
  for (const Graph& g : {gen::bridged_cliques(5), gen::powerlaw_cluster(2000, 3, 0.4, 1), co}) {
    std::vector<NodeId> all(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
    ++whole_checked;
    if (conductance(g, all) != 0.0) ++whole_wrong;
  }
  const std::string detail = format("%zu clique communities (%zu off 1.0), %zu all-node communities (%zu off 0.0)",
                                    checked, wrong, whole_checked, whole_wrong);
  return wrong == 0 && whole_wrong == 0 ? pass(detail) : fail(detail);
}

Outcome baseline_sanity() {
  const Graph g = gen::bridged_cliques(5);
  const std::vector<std::uint32_t> two{0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
  const auto best = oracle::best_partition(g);
  const bool optimum = oracle::same_partition(best.assignment, two);
  const bool louvain_ok = oracle::same_partition(louvain(g, 1).assignment, two);
  const bool greedy_ok = oracle::same_partition(fast_greedy(g).assignment, two);
  int lp_ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) lp_ok += oracle::same_partition(label_propagation(g, seed).partition.assignment, two);
  const std::string detail = format(
      "exhaustive optimum over %zu partitions is the two cliques: %s (Q = %.6f); louvain %s, fast_greedy %s, "
      "label_propagation %d/100 seeds",
      best.partitions_seen, optimum ? "yes" : "no", best.modularity, louvain_ok ? "ok" : "wrong",
      greedy_ok ? "ok" : "wrong", lp_ok);
  return optimum && louvain_ok && greedy_ok && lp_ok == 100 ? pass(detail) : fail(detail);
}

Outcome dblp_sweep_monotonicity() {
  if (auto m = missing({kDblpGraph}); !m.empty()) return not_run("dataset absent: " + m);
  const Graph g = load_dblp();
  const auto omegas = bench::parse_fractions("0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1");
  const auto rows = bench::sweep_overlap(g, omegas, 16);
  bool monotone = true;
  std::string counts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i && rows[i].retained < rows[i - 1].retained) monotone = false;
    counts += (i ? "," : "") + std::to_string(rows[i].retained);
  }
  const bool full = rows.back().retained == rows.back().total;
  const std::string detail = format("cliques > 15: %zu; retained per omega: %s; omega = 1 keeps all: %s",
                                    rows.back().total, counts.c_str(), full ? "yes" : "no");
  return monotone && full ? pass(detail) : fail(detail);
}

Outcome dblp_scale() {
  if (auto m = missing({kDblpGraph}); !m.empty()) return not_run("dataset absent: " + m);
  const Stopwatch clock;
  const Graph g = load_dblp();
  caa::Stats stats;
  const Cover cover = caa::detect(g, caa::Params{0.7, 0.0, 3}, &stats);
  const MetricReport report = evaluate(g, cover);
  const double elapsed = clock.seconds();
  const std::string detail =
      format("%zu nodes, %zu edges, %zu communities, largest %zu (%.3f%% of nodes, limit 5%%), %.1f s (limit 1800)",
             g.node_count(), g.edge_count(), cover.size(), report.sizes.largest, 100 * report.sizes.largest_share,
             elapsed);
  return report.sizes.largest_share <= 0.05 && elapsed <= 1800.0 ? pass(detail) : fail(detail);
}

// Synthetic substitute for the private-network results: a seeded Holme–Kim
// graph, every detector run end to end, invariants only.
Outcome synthetic_smoke() {
  const Stopwatch clock;
  const Graph g = gen::powerlaw_cluster(20000, 4, 0.5, 2012);
  std::vector<std::string> problems;
  const auto note = [&](const std::string& what, bool ok) {
    if (!ok) problems.push_back(what);
  };

  std::vector<std::pair<std::string, Cover>> covers;
  covers.emplace_back("caa", caa::detect(g, caa::Params{}));
  covers.emplace_back("label-prop", label_propagation(g, 7).partition.to_cover());
  covers.emplace_back("louvain", louvain(g, 7).to_cover());
  covers.emplace_back("fast-greedy", fast_greedy(g).to_cover());

  for (const auto& [algo, cover] : covers) {
    const MetricReport r = evaluate(g, cover);
    note(algo + ": modularity in [-1, 1]", r.extended_modularity && *r.extended_modularity >= -1.0 &&
                                               *r.extended_modularity <= 1.0);
    note(algo + ": coverage in [0, 1]", r.desirable_coverage >= 0.0 && r.desirable_coverage <= 1.0);
    double parts = 0.0;
    for (SizeClass c : kSizeClasses) parts += r.summary(c).partial_modularity;
    note(algo + ": class contributions sum to total", std::abs(parts - *r.extended_modularity) <= 1e-12);
    bool in_range = true;
    for (const CommunityRow& row : r.rows) {
      for (auto v : {std::optional<double>(row.tpr), row.conductance, row.internal_density, row.transitivity}) {
        if (v && (*v < 0.0 || *v > 1.0)) in_range = false;
      }
    }
    note(algo + ": per-community fractions in [0, 1]", in_range);
    if (algo != "caa") {
      bool once = true;
      for (NodeId v = 0; v < g.node_count(); ++v) once = once && cover.membership(v) == 1;
      note(algo + ": partition covers every node once", once);
    } else {
      bool seeded = true;
      for (const Community& c : cover.communities()) {
        seeded = seeded && c.seed && c.size() >= 3 &&
                 std::includes(c.members.begin(), c.members.end(), c.seed->members.begin(), c.seed->members.end());
      }
      note("caa: every community contains its seed clique", seeded);
    }
  }
  const double elapsed = clock.seconds();
  std::string detail = format("power-law graph n = %zu, m = %zu, 4 detectors, %.1f s", g.node_count(),
                              g.edge_count(), elapsed);
  if (problems.empty()) return pass(detail);
  for (const auto& p : problems) detail += "; violated: " + p;
  return fail(detail);
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "DBLP ground-truth size conformance", dblp_conformance},
      {2, "extended modularity reduces to classic modularity", modularity_reduction},
      {3, "maximal cliques match the subset oracle", clique_oracle},
      {4, "CAA worked overlap and growth examples", caa_worked_examples},
      {5, "metric fixed points on cliques and the whole graph", metric_fixed_points},
      {6, "baselines recover the bridged K5 pair", baseline_sanity},
      {7, "overlap sweep monotone on DBLP cliques above 15", dblp_sweep_monotonicity},
      {8, "CAA end to end on full DBLP without a giant community", dblp_scale},
      {9, "synthetic power-law smoke test", synthetic_smoke},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria for the dunbar toolkit"};
  std::vector<int> selected;
  app.add_option("--criterion,-c", selected, "Criterion number(s) to run (default: all)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  int passed = 0, failed = 0, skipped = 0;
  for (const Criterion& c : criteria()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Fail ? "FAIL" : "NOT RUN";
    std::printf("criterion %d: %s: %s (%s)\n", c.id, tag, c.title, o.detail.c_str());
    std::fflush(stdout);
    (o.status == Status::Pass ? passed : o.status == Status::Fail ? failed : skipped)++;
  }
  std::printf("summary: %d passed, %d failed, %d not run\n", passed, failed, skipped);
  if (failed) return 1;
  return passed == 0 && skipped > 0 ? 77 : 0;
}
