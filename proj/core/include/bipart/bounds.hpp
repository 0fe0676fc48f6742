#pragma once

#include "bipart/class_spec.hpp"
#include "bipart/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bipart {

/// Exact nonnegative rational, normalized.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    long long ceil() const { return (num + den - 1) / den; }
    bool operator==(const Rational&) const = default;
};

struct BoundPair {
    long long lower = 1;
    std::optional<long long> upper;
    std::vector<std::string> notes; // provenance, one entry per contributing bound
};

/// ceil(log2 n): templates of any bipartite partition of K_n separate the
/// vertices, so fewer than log2 n classes cannot suffice.
long long log_lower(long long n);

/// Bounds for partitions into nested-neighborhood (2K2-free) templates:
/// lower is the least integer exceeding floor(log2 n) + sqrt(floor(log2 n))/4 - 1
/// (and at least log_lower), upper is the grid construction count
/// 2*ceil(sqrt(n)) - 2.
BoundPair ferrers_bounds(long long n);

/// Minimum edge count m(m+1)/2 of a nested-neighborhood graph containing m
/// independent edges.
long long lemma1_bound(long long m);

/// Matching-size threshold 2^(k-2)/(d+1) below which at most d templates of
/// a (k+d)-template bipartite partition of K_{2^k} may fall.
Rational lemma2_threshold(int k, int d);

/// Largest edge count a template of the class may have on an n-vertex
/// host; absent for classes whose templates can be quadratic.
std::optional<long long> max_template_edges(const ClassSpec& spec, int n);

/// ceil(e(g) / max_template_edges): sound for any host on g's vertices.
/// Classes without an edge cap are rejected (UnsupportedClass).
long long edge_count_lower(const Graph& g, const ClassSpec& spec);

/// The exact tabulated value of the minimum template count for K_n, when
/// the class's side condition holds; absent otherwise.
std::optional<long long> known_value(const ClassSpec& spec, long long n);

/// Combined bound interval for K_n (all certified lower bounds, best
/// construction-backed upper bound).
BoundPair bounds_for(const ClassSpec& spec, long long n);

} // namespace bipart
