#include "bipart/ferrers.hpp"

#include "bipart/error.hpp"
#include "bipart/patterns.hpp"

#include <algorithm>

namespace bipart {

std::optional<std::vector<int>> is_ferrers(const Graph& g) {
    const auto witness = is_bipartite(g);
    if (!witness) return std::nullopt;
    if (find_induced_bipartite(g, Pattern::TwoK2)) return std::nullopt;

    // Nesting-freeness established; sorting one side by degree now yields a
    // chain because any two neighborhoods are comparable.
    std::vector<int> order;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (witness->side(v) == Side::A && g.degree(v) > 0) order.push_back(v);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });

    for (std::size_t i = 1; i < order.size(); ++i) {
        Bitset prev = g.neighbors(order[i - 1]);
        prev -= g.neighbors(order[i]);
        if (prev.any())
            fail(ErrorKind::InternalInconsistency,
                 "degree order failed to produce nested neighborhoods");
    }
    return order;
}

} // namespace bipart
