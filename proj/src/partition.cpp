#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "dunbar/baselines.hpp"

namespace dunbar {

Partition Partition::from_labels(std::span<const std::uint32_t> labels) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t max_label = 0;
  for (auto l : labels) max_label = std::max(max_label, l);
  std::vector<std::uint32_t> remap(labels.empty() ? 0 : std::size_t{max_label} + 1, kUnset);
  Partition p;
  p.assignment.resize(labels.size());
  std::uint32_t next = 0;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto& id = remap[labels[v]];
    if (id == kUnset) id = next++;
    p.assignment[v] = id;
  }
  return p;
}

std::size_t Partition::community_count() const noexcept {
  if (assignment.empty()) return 0;
  return std::size_t{*std::max_element(assignment.begin(), assignment.end())} + 1;
}

Cover Partition::to_cover() const {
  std::vector<Community> communities(community_count());
  for (std::size_t v = 0; v < assignment.size(); ++v) {
    communities[assignment[v]].members.push_back(static_cast<NodeId>(v));
  }
  return Cover(assignment.size(), std::move(communities));
}

Cover import_cover(const std::filesystem::path& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open " + path.string());

  std::vector<Community> communities;
  std::vector<Label> unknown;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* const end = p + line.size();
    Community c;
    for (;;) {
      while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
      if (p == end || *p == '#') break;
      Label id = 0;
      auto [next, ec] = std::from_chars(p, end, id);
      if (ec != std::errc() || (next < end && !std::isspace(static_cast<unsigned char>(*next)))) {
        throw LoadError(path.string() + ":" + std::to_string(line_no) + ": expected integer node ids", line_no);
      }
      p = next;
      if (auto v = g.dense_id(id)) {
        c.members.push_back(*v);
      } else {
        unknown.push_back(id);
      }
    }
    if (!c.members.empty()) communities.push_back(std::move(c));
  }

  if (!unknown.empty()) {
    std::sort(unknown.begin(), unknown.end());
    unknown.erase(std::unique(unknown.begin(), unknown.end()), unknown.end());
    std::ostringstream msg;
    msg << path.string() << ": " << unknown.size() << " node id(s) not in graph:";
    constexpr std::size_t kShown = 20;
    for (std::size_t i = 0; i < std::min(unknown.size(), kShown); ++i) msg << ' ' << unknown[i];
    if (unknown.size() > kShown) msg << " ...";
    throw LoadError(msg.str());
  }
  if (communities.empty()) throw LoadError(path.string() + ": no communities in file");
  return Cover(g.node_count(), std::move(communities));
}

}  // namespace dunbar
