#include "dunbar/parallel.hpp"

namespace dunbar {

namespace {
std::atomic<unsigned> g_max_threads{0};
}

void set_max_threads(unsigned n) noexcept { g_max_threads = n; }

unsigned max_threads() noexcept {
  const unsigned n = g_max_threads.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace dunbar
