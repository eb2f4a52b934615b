#include "dunbar/cover.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace dunbar {

Cover::Cover(std::size_t node_count, std::vector<Community> communities)
    : communities_(std::move(communities)), membership_(node_count, 0) {
  for (Community& c : communities_) {
    std::sort(c.members.begin(), c.members.end());
    c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    if (c.members.empty()) throw InvalidArgument("cover contains an empty community");
    if (c.members.back() >= node_count) {
      throw InvalidArgument("community member " + std::to_string(c.members.back()) + " is not a node of the graph");
    }
    for (NodeId v : c.members) ++membership_[v];
  }
}

std::size_t Cover::covered_nodes() const noexcept {
  return static_cast<std::size_t>(std::count_if(membership_.begin(), membership_.end(), [](auto o) { return o > 0; }));
}

void write_cover(std::ostream& out, const Graph& g, const Cover& cover) {
  for (const Community& c : cover.communities()) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      if (i) out << ' ';
      out << g.label(c.members[i]);
    }
    out << '\n';
  }
}

}  // namespace dunbar
