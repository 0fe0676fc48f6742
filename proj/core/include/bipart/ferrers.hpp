#pragma once

#include "bipart/graph.hpp"

#include <optional>
#include <vector>

namespace bipart {

/// Recognizes graphs whose one-side neighborhoods form a chain under
/// inclusion (equivalently: bipartite with no induced pair of disjoint
/// edges).  Returns an ordering a_1..a_k of the canonical A side with
/// N(a_1) ⊆ N(a_2) ⊆ ..., or absent for non-bipartite / non-nested input.
/// Isolated vertices are ignored.
std::optional<std::vector<int>> is_ferrers(const Graph& g);

} // namespace bipart
