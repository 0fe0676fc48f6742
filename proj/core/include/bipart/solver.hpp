#pragma once

#include "bipart/class_spec.hpp"
#include "bipart/verifier.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace bipart {

struct SearchBudget {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> time_limit_seconds;

    static SearchBudget unlimited() { return {}; }
};

struct SearchStats {
    std::uint64_t nodes_explored = 0;
    std::uint64_t pruned_bipartite = 0;
    std::uint64_t pruned_pattern = 0;
    double elapsed_seconds = 0.0;
};

struct SolverOptions {
    /// Discard a partial class once one of its induced violations can no
    /// longer be repaired by any still-unassigned host edge.  Sound; never
    /// changes results.  Off by default.
    bool repairability_prune = false;
};

enum class SearchStatus { Found, Infeasible, BudgetExhausted };

struct FeasibilityResult {
    SearchStatus status = SearchStatus::Infeasible;
    std::optional<Partition> witness;
    SearchStats stats;
};

/// Is there a partition of g's edges into at most k templates, each
/// bipartite and free of every forbidden pattern?  Edges are assigned in
/// lexicographic order; edge t may open class c only if c <= 1 + (highest
/// class used so far), so witnesses are canonical and deterministic.
FeasibilityResult exists_partition(const Graph& g, const ClassSpec& spec, int k,
                                   const SearchBudget& budget = {},
                                   const SolverOptions& options = {});

struct SolveResult {
    long long chi = 0;
    Partition witness;
    SearchStats stats;
};

struct SolveOutcome {
    std::optional<SolveResult> result; // absent: budget exhausted
    SearchStats stats;
    bool budget_exhausted() const { return !result.has_value(); }
};

/// Minimum template count via iterative deepening from the best certified
/// lower bound.
SolveOutcome chi_prime(const Graph& g, const ClassSpec& spec,
                       const SearchBudget& budget = {},
                       const SolverOptions& options = {});

/// Test oracle: plain enumeration of all canonical assignments of edges to
/// classes, minimal feasible class count.  Requires e(g) <= 10; template
/// validity is checked with the exhaustive pattern search, independently of
/// the solver's detectors.
int brute_force_oracle(const Graph& g, const ClassSpec& spec);

} // namespace bipart
