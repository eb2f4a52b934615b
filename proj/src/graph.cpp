#include "dunbar/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

namespace dunbar {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges, std::vector<Label> labels) {
  if (!labels.empty() && labels.size() != node_count) {
    throw InvalidArgument("label map size does not match node count");
  }
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= node_count || v >= node_count) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (u == v) continue;
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  for (auto [u, v] : canon) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(canon.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted with u < v, so every list receives its smaller neighbors
  // first (ascending) and then its larger ones (ascending).
  for (auto [u, v] : canon) {
    g.targets_[cursor[u]++] = v;
    g.targets_[cursor[v]++] = u;
  }

  if (labels.empty()) {
    labels.resize(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels[i] = static_cast<Label>(i);
  }
  g.labels_ = std::move(labels);
  g.dense_.reserve(node_count);
  for (std::size_t i = 0; i < node_count; ++i) {
    if (!g.dense_.emplace(g.labels_[i], static_cast<NodeId>(i)).second) {
      throw InvalidArgument("duplicate label " + std::to_string(g.labels_[i]));
    }
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::dense_id(Label label) const {
  auto it = dense_.find(label);
  if (it == dense_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

/// Parses "<id> <id>" lines; calls `sink(a, b)` per data line.
template <typename Sink>
void parse_pairs(const std::filesystem::path& path, LoadStats& stats, Sink&& sink) {
  const std::string text = read_file(path);
  const char* p = text.data();
  const char* const end = p + text.size();
  std::size_t line_no = 0;
  while (p < end) {
    const char* eol = std::find(p, end, '\n');
    ++line_no;
    const char* q = p;
    while (q < eol && is_space(*q)) ++q;
    if (q == eol) {
      p = eol + 1;
      continue;
    }
    if (*q == '#') {
      ++stats.comment_lines;
      p = eol + 1;
      continue;
    }
    Label ids[2];
    for (Label& id : ids) {
      while (q < eol && is_space(*q)) ++q;
      auto [next, ec] = std::from_chars(q, eol, id);
      if (ec != std::errc() || (next < eol && !is_space(*next))) {
        throw LoadError(path.string() + ":" + std::to_string(line_no) + ": expected two integer node ids",
                        line_no);
      }
      q = next;
    }
    while (q < eol && is_space(*q)) ++q;
    if (q != eol) {
      throw LoadError(path.string() + ":" + std::to_string(line_no) + ": trailing content after edge",
                      line_no);
    }
    ++stats.lines;
    sink(ids[0], ids[1]);
    p = eol + 1;
  }
}

/// Dense ids in ascending label order.
std::vector<Label> sorted_labels(const std::vector<std::pair<Label, Label>>& pairs) {
  std::vector<Label> labels;
  labels.reserve(pairs.size() * 2);
  for (auto [a, b] : pairs) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

NodeId index_of(const std::vector<Label>& sorted, Label l) {
  return static_cast<NodeId>(std::lower_bound(sorted.begin(), sorted.end(), l) - sorted.begin());
}

}  // namespace

Graph load_undirected(const std::filesystem::path& path, LoadStats* stats_out) {
  LoadStats stats;
  std::vector<std::pair<Label, Label>> raw;
  parse_pairs(path, stats, [&](Label a, Label b) { raw.emplace_back(a, b); });

  // Nodes mentioned only by self-loops still count as nodes.
  std::vector<Label> labels = sorted_labels(raw);
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a == b) {
      ++stats.self_loops;
      continue;
    }
    NodeId u = index_of(labels, a), v = index_of(labels, b);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  const std::size_t before = edges.size();
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  stats.duplicate_edges = before - edges.size();
  if (stats_out) *stats_out = stats;

  if (edges.empty()) {
    throw LoadError(path.string() + ": graph has no edges (" + std::to_string(labels.size()) + " nodes)");
  }
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

DirectedEdgeList load_directed(const std::filesystem::path& path, LoadStats* stats_out) {
  LoadStats stats;
  DirectedEdgeList out;
  parse_pairs(path, stats, [&](Label a, Label b) { out.arcs.emplace_back(a, b); });
  if (stats_out) *stats_out = stats;
  return out;
}

Graph mutualize(const DirectedEdgeList& directed, MutualizeStats* stats_out) {
  MutualizeStats stats;
  stats.input_arcs = directed.arcs.size();

  std::vector<std::pair<Label, Label>> arcs;
  arcs.reserve(directed.arcs.size());
  for (auto arc : directed.arcs) {
    if (arc.first == arc.second) {
      ++stats.self_loops;
      continue;
    }
    arcs.push_back(arc);
  }
  std::sort(arcs.begin(), arcs.end());
  const std::size_t before = arcs.size();
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  stats.duplicate_arcs = before - arcs.size();

  std::vector<std::pair<Label, Label>> mutual;
  for (auto [a, b] : arcs) {
    if (a < b && std::binary_search(arcs.begin(), arcs.end(), std::pair{b, a})) mutual.emplace_back(a, b);
  }
  stats.mutual_edges = mutual.size();

  std::vector<Label> seen;
  seen.reserve(directed.arcs.size() * 2);
  for (auto [a, b] : directed.arcs) {
    seen.push_back(a);
    seen.push_back(b);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

  std::vector<Label> labels = sorted_labels(mutual);
  stats.removed_nodes = seen.size() - labels.size();
  std::vector<Edge> edges;
  edges.reserve(mutual.size());
  for (auto [a, b] : mutual) edges.emplace_back(index_of(labels, a), index_of(labels, b));
  if (stats_out) *stats_out = stats;
  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

std::vector<std::pair<std::size_t, std::size_t>> degree_distribution(const Graph& g) {
  std::vector<std::size_t> degrees(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(degrees.size());
  for (std::size_t i = 0; i < degrees.size(); ++i) out.emplace_back(i + 1, degrees[i]);
  return out;
}

std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) noexcept {
  std::size_t count = 0;
  auto i = a.begin(), j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace dunbar
