#pragma once

#include "bipart/projective.hpp"
#include "bipart/verifier.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bipart {

/// One randomized covering experiment: the plane's incidence graph is
/// thrown onto K_n repeatedly (each throw a fresh uniform injection of the
/// host vertices into the thrown graph) until every host edge is covered
/// or kMax throws are spent.
struct CoverRun {
    int n = 0;
    int q = 0;
    int k_max = 0;
    std::uint64_t seed = 0;

    bool covered = false;
    int throws_used = 0;
    std::vector<int> first_throw;        // per host edge, covering throw or -1
    std::vector<int> cover_counts;       // per host edge, times covered
    std::optional<Partition> templates;  // set by cover_to_partition
};

CoverRun random_c4_cover(int n, int q, int k_max, std::uint64_t seed);

/// Keeps each host edge only in its earliest covering throw and drops empty
/// residues; every template is a subgraph of a C4-free bipartite graph.
Partition cover_to_partition(const CoverRun& run);

/// Empirical probability that host edge (0,1) is covered by a single throw.
double estimate_cover_probability(int n, int q, int trials, std::uint64_t seed);

/// Exact per-throw covering probability of a fixed host edge: the image
/// pair of any two host vertices is a uniform pair of thrown-graph
/// vertices, so the probability is e(incidence) / C(2N,2).
double exact_cover_probability(int q);

} // namespace bipart
