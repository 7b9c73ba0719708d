#pragma once

#include <utility>
#include <vector>

namespace dichroma {

// Maximum cardinality matching in a general graph (Edmonds' blossom algorithm).
// Returns mate[v], or -1 for unmatched vertices. Parallel edges are harmless.
std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace dichroma
