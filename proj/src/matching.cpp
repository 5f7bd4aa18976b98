#include "gkmkit/matching.hpp"

#include <algorithm>

namespace gkmkit {

namespace {

struct Kuhn {
  std::size_t right;
  const std::function<bool(std::size_t, std::size_t)>& admissible;
  std::vector<std::optional<std::size_t>> owner;  // right -> left
  std::vector<char> visited;

  bool augment(std::size_t u) {
    for (std::size_t v = 0; v < right; ++v) {
      if (visited[v] || !admissible(u, v)) continue;
      visited[v] = 1;
      if (!owner[v] || augment(*owner[v])) {
        owner[v] = u;
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::vector<std::optional<std::size_t>> max_bipartite_matching(
    std::size_t left, std::size_t right, const std::function<bool(std::size_t, std::size_t)>& admissible) {
  Kuhn k{right, admissible, std::vector<std::optional<std::size_t>>(right), {}};
  for (std::size_t u = 0; u < left; ++u) {
    k.visited.assign(right, 0);
    k.augment(u);
  }
  std::vector<std::optional<std::size_t>> out(left);
  for (std::size_t v = 0; v < right; ++v) {
    if (k.owner[v]) out[*k.owner[v]] = v;
  }
  return out;
}

bool is_perfect(const std::vector<std::optional<std::size_t>>& matching, std::size_t right) {
  return matching.size() == right &&
         std::all_of(matching.begin(), matching.end(), [](const auto& m) { return m.has_value(); });
}

}  // namespace gkmkit
