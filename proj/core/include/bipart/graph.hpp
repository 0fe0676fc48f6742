#pragma once

#include <boost/dynamic_bitset.hpp>
#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace bipart {

using Bitset = boost::dynamic_bitset<>;

/// Unordered vertex pair, normalized to u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction; edges are kept sorted and an adjacency
/// bitset per vertex backs O(1) membership tests.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].count()); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> adj_;
};

/// Side of a bipartition; isolated vertices stay unassigned.
enum class Side : signed char { None = -1, A = 0, B = 1 };

/// 2-coloring of the non-isolated vertices of a bipartite graph.
struct BipartiteWitness {
    std::vector<Side> side_of;

    Side side(int v) const { return side_of[v]; }
};

/// K_n with all n(n-1)/2 edges in lexicographic order.
Graph complete_graph(int n);

/// Result of restricting a graph to a vertex subset.
struct InducedSubgraph {
    Graph graph;                 // on |s| relabeled vertices
    std::vector<int> vertex_map; // new label -> original label, ascending
};

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

/// 2-colors every component, rooting each at its lowest-index non-isolated
/// vertex (which receives side A); absent if some cycle is odd.
std::optional<BipartiteWitness> is_bipartite(const Graph& g);

/// Component id per vertex (isolated vertices get their own component);
/// ids are assigned in order of the lowest vertex of each component.
std::vector<int> connected_components(const Graph& g, int* count = nullptr);

/// True when all edges lie in one component (isolated vertices ignored);
/// an edgeless graph counts as connected only if it has at most one vertex.
bool edges_connected(const Graph& g);

} // namespace bipart
