#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace gkmkit {

/// Maximum bipartite matching by augmenting paths (Kuhn). Left vertices are tried in index
/// order and their right neighbours in index order, so the result is deterministic.
/// Returns, for every left vertex, its matched right vertex.
std::vector<std::optional<std::size_t>> max_bipartite_matching(
    std::size_t left, std::size_t right, const std::function<bool(std::size_t, std::size_t)>& admissible);

/// True iff every left vertex is matched and left == right.
bool is_perfect(const std::vector<std::optional<std::size_t>>& matching, std::size_t right);

}  // namespace gkmkit
