#include "bipart/projective.hpp"

#include "bipart/error.hpp"

#include <algorithm>
#include <array>

namespace bipart {

namespace {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

} // namespace

ProjectivePlane projective_plane(int q) {
    if (!is_prime(q))
        fail(ErrorKind::UnsupportedParameter, "projective_plane requires prime q");

    // Homogeneous coordinates over Z_q with canonical representatives
    // (1,a,b), (0,1,a), (0,0,1).
    std::vector<std::array<int, 3>> points;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) points.push_back({1, a, b});
    for (int a = 0; a < q; ++a) points.push_back({0, 1, a});
    points.push_back({0, 0, 1});

    ProjectivePlane plane;
    plane.q = q;
    plane.point_count = static_cast<int>(points.size());
    for (const auto& line : points) { // lines use the same representatives
        std::vector<int> on_line;
        for (int pi = 0; pi < plane.point_count; ++pi) {
            const auto& pt = points[pi];
            const int dot = line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2];
            if (dot % q == 0) on_line.push_back(pi);
        }
        plane.lines.push_back(std::move(on_line));
    }
    return plane;
}

Graph incidence_graph(const ProjectivePlane& p) {
    const int n = p.point_count;
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (p.q + 1));
    for (int li = 0; li < static_cast<int>(p.lines.size()); ++li)
        for (int pt : p.lines[li]) edges.emplace_back(pt, n + li);
    return Graph(2 * n, std::move(edges));
}

} // namespace bipart
