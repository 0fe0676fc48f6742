#pragma once

#include "bipart/graph.hpp"

#include <vector>

namespace bipart {

/// Maximum-cardinality matching in an arbitrary simple graph
/// (augmenting paths with blossom contraction).  Returned edges are
/// sorted; the result is deterministic for a given input.
std::vector<Edge> max_matching(const Graph& g);

inline int max_matching_size(const Graph& g) {
    return static_cast<int>(max_matching(g).size());
}

} // namespace bipart
