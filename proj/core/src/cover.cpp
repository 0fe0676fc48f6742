#include "bipart/cover.hpp"

#include "bipart/error.hpp"

#include <algorithm>
#include <random>

namespace bipart {

namespace {

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

// Uniform injection of host vertices 0..n-1 into the thrown graph's
// vertices (partial Fisher-Yates).
void draw_injection(std::mt19937_64& rng, int n, std::vector<int>& pool,
                    std::vector<int>& image) {
    const int big = static_cast<int>(pool.size());
    for (int i = 0; i < big; ++i) pool[i] = i;
    for (int i = 0; i < n; ++i) {
        std::uniform_int_distribution<int> pick(i, big - 1);
        std::swap(pool[i], pool[pick(rng)]);
        image[i] = pool[i];
    }
}

} // namespace

CoverRun random_c4_cover(int n, int q, int k_max, std::uint64_t seed) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "random_c4_cover requires n >= 1");
    if (k_max < 0) fail(ErrorKind::InvalidArgument, "k_max must be nonnegative");
    const ProjectivePlane plane = projective_plane(q);
    const Graph thrown = incidence_graph(plane);
    if (thrown.vertex_count() < n)
        fail(ErrorKind::InvalidArgument,
             "thrown graph has fewer vertices than the host (need 2(q^2+q+1) >= n)");

    CoverRun run;
    run.n = n;
    run.q = q;
    run.k_max = k_max;
    run.seed = seed;

    const long long m = static_cast<long long>(n) * (n - 1) / 2;
    run.first_throw.assign(m, -1);
    run.cover_counts.assign(m, 0);
    const auto edge_index = [n](int u, int v) {
        if (u > v) std::swap(u, v);
        return static_cast<long long>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
    };

    std::mt19937_64 rng = seeded_rng(seed, 0);
    std::vector<int> pool(thrown.vertex_count()), image(n), preimage(thrown.vertex_count());
    long long uncovered = m;
    run.covered = uncovered == 0;

    for (int t = 0; t < k_max && !run.covered; ++t) {
        draw_injection(rng, n, pool, image);
        std::fill(preimage.begin(), preimage.end(), -1);
        for (int v = 0; v < n; ++v) preimage[image[v]] = v;
        for (const Edge& e : thrown.edges()) {
            const int hu = preimage[e.u], hv = preimage[e.v];
            if (hu < 0 || hv < 0) continue;
            const long long idx = edge_index(hu, hv);
            run.cover_counts[idx] += 1;
            if (run.first_throw[idx] < 0) {
                run.first_throw[idx] = t;
                --uncovered;
            }
        }
        run.throws_used = t + 1;
        if (uncovered == 0) run.covered = true;
    }
    return run;
}

Partition cover_to_partition(const CoverRun& run) {
    if (!run.covered)
        fail(ErrorKind::InvalidState, "cover_to_partition requires a covered run");
    Partition p{complete_graph(run.n), {}};
    std::vector<std::vector<Edge>> by_throw(run.throws_used);
    for (int i = 0; i < p.host.edge_count(); ++i) {
        const int t = run.first_throw[i];
        by_throw[t].push_back(p.host.edges()[i]);
    }
    for (auto& edges : by_throw)
        if (!edges.empty()) p.templates.emplace_back(std::move(edges));
    return p;
}

double estimate_cover_probability(int n, int q, int trials, std::uint64_t seed) {
    if (trials < 1) fail(ErrorKind::InvalidArgument, "trials must be >= 1");
    if (n < 2) fail(ErrorKind::InvalidArgument, "need n >= 2 for a fixed edge");
    const ProjectivePlane plane = projective_plane(q);
    const Graph thrown = incidence_graph(plane);
    if (thrown.vertex_count() < n)
        fail(ErrorKind::InvalidArgument,
             "thrown graph has fewer vertices than the host (need 2(q^2+q+1) >= n)");

    std::mt19937_64 rng = seeded_rng(seed, 1);
    std::vector<int> pool(thrown.vertex_count()), image(n);
    long long hits = 0;
    for (int t = 0; t < trials; ++t) {
        draw_injection(rng, n, pool, image);
        if (thrown.has_edge(image[0], image[1])) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

double exact_cover_probability(int q) {
    const ProjectivePlane plane = projective_plane(q);
    const long long big = 2LL * plane.point_count;
    const long long pairs = big * (big - 1) / 2;
    const long long edges = static_cast<long long>(plane.point_count) * (plane.q + 1);
    return static_cast<double>(edges) / static_cast<double>(pairs);
}

} // namespace bipart
