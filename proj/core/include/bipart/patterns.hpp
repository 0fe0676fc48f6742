#pragma once

#include "bipart/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bipart {

/// The small forbidden patterns handled by name.
///   P3      path on 3 vertices
///   P4      path on 4 vertices
///   C4      cycle on 4 vertices
///   S4      star on 4 vertices (K_{1,3})
///   TwoK2   two disjoint edges
///   K2K1    one edge plus an isolated vertex
enum class Pattern { P3, P4, C4, S4, TwoK2, K2K1 };

/// A named pattern or an arbitrary small custom graph.
using PatternSpec = std::variant<Pattern, Graph>;

const Graph& pattern_graph(Pattern p);
int pattern_order(Pattern p); // vertex count
std::string pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(const std::string& name);

/// Exhaustive induced-occurrence search: scans vertex subsets of size
/// |V(pattern)| in lexicographic order and tests isomorphism; returns the
/// first witness subset, ascending.
std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p);
std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern);
std::optional<std::vector<int>> contains_induced(const Graph& g, const PatternSpec& p);

/// Induced-occurrence search specialized to bipartite hosts (degree, wedge
/// and neighborhood-nesting arguments replace subset enumeration).  Agrees
/// with contains_induced on every bipartite input; witness subsets may
/// differ.  Behavior on non-bipartite hosts is unspecified.
std::optional<std::vector<int>> find_induced_bipartite(const Graph& g, Pattern p);

/// Induced-subgraph isomorphism on equal-order graphs (both tiny).
bool small_graphs_isomorphic(const Graph& a, const Graph& b);

} // namespace bipart
