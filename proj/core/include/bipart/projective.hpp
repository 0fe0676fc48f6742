#pragma once

#include "bipart/graph.hpp"

#include <vector>

namespace bipart {

/// Projective plane of prime order q: q^2+q+1 points and as many lines,
/// q+1 points per line, any two points on exactly one common line.
struct ProjectivePlane {
    int q = 0;
    int point_count = 0;                 // q^2 + q + 1
    std::vector<std::vector<int>> lines; // each sorted, size q+1
};

ProjectivePlane projective_plane(int q);

/// Bipartite point-line incidence graph: points 0..N-1, lines N..2N-1.
/// (q+1)(q^2+q+1) edges and no four-cycle.
Graph incidence_graph(const ProjectivePlane& p);

} // namespace bipart
