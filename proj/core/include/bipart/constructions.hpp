#pragma once

#include "bipart/class_spec.hpp"
#include "bipart/verifier.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bipart {

enum class ConstructionId {
    Matchings,          // {P3}
    SingleEdges,        // {K2+K1, P3}
    GpStars,            // {K2+K1}; {2K2,C4,P4}; {2K2,P4}
    CbipOrchards,       // {P4}; also serves the unconstrained class
    FerrersGrid,        // {2K2}
    Hamiltonian,        // {S4}; {C4,S4}
    DoubleStars,        // {2K2,C4}
    StarOrchards,       // {C4,P4}
    CherryOrchards,     // {C4,P4,S4}
    C4Decomposition,    // {2K2,S4}; {2K2,P4,S4}
    P4Paths,            // {2K2,C4,S4}
    C4Orchards,         // {P4,S4}
    Cherries            // {2K2,C4,P4,S4}
};

/// Round-robin proper edge coloring of K_n: n-1 perfect matchings for even
/// n, n near-perfect matchings for odd n.
Partition build_matchings(int n);

/// One template per edge.
Partition build_single_edges(int n);

/// Star decomposition: template i holds all edges from vertex i to higher
/// vertices (n-1 templates).
Partition build_gp_stars(int n);

/// ceil(log2 n) templates; template k joins u,v whose highest differing
/// bit is k.  Each template is a disjoint union of complete bipartite
/// graphs.
Partition build_cbip_orchards(int n);

/// Grid construction on ceil(sqrt(n))^2 vertices: descent edges grouped by
/// the left endpoint's column, ascent edges by the lower endpoint's row;
/// every template has nested neighborhoods.  Non-square n restricts the
/// next square down to n vertices.
Partition build_ferrers(int n);

/// Rotation decomposition of K_n (odd n) into (n-1)/2 Hamiltonian cycles,
/// restricted once (even n) or twice (odd n) so every emitted template is
/// a union of at most two paths.  Template count: ceil((n-1)/2) for even
/// n, ceil(n/2) for odd n.
Partition build_hamiltonian(int n);

/// ceil(n/2) double stars: centers (2i, 2i+1); the four edges between two
/// center pairs split into complementary matchings.
Partition build_double_stars(int n);

/// Double stars with the center edges pulled out into one extra matching
/// template: ceil(n/2)+1 star orchards.
Partition build_star_orchards(int n);

/// Recursive three-block scheme for powers of three: per round one
/// cherry orchard centered in each block, odd leftover matchings emitted
/// standalone, blocks recursed in parallel and merged index-wise.
Partition build_cherry_orchards(int n);

/// n(n-1)/8 four-cycles via a rotational difference construction
/// (requires n = 1 mod 8).
Partition build_c4_decomposition(int n);

/// Hamiltonian cycles cut into n/3 three-edge paths (n = 3 mod 6, n >= 9).
Partition build_p4_paths(int n);

/// One perfect matching plus n/2-1 spanning unions of n/4 four-cycles
/// (n = 0 mod 4), doubling a round-robin one-factorization of K_{n/2}.
Partition build_c4_orchards(int n);

/// Decomposition of a connected graph into two-edge paths, plus one
/// single-edge template when the edge count is odd.
Partition build_cherries(const Graph& g);

/// Internal: Hamiltonian cycles of K_n for odd n, as vertex sequences.
std::vector<std::vector<int>> walecki_cycles(int n);

struct ClassConstruction {
    ConstructionId id;
    /// Lowest supported n plus any congruence side condition.
    bool (*supported)(int n);
    std::string side_condition; // human-readable requirement
};

/// Registry entry for a class that has a constructive scheme.
std::optional<ClassConstruction> construction_for(const ClassSpec& spec);

/// Dispatches to the builder serving `spec`.  Throws UnsupportedClass for
/// classes without a scheme and UnsupportedParameter when n violates the
/// class's side condition.
Partition construct(const ClassSpec& spec, int n);

} // namespace bipart
