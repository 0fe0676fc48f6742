#include "bipart/graph.hpp"

#include "bipart/error.hpp"

#include <algorithm>
#include <string>

namespace bipart {

Graph::Graph(int n) : n_(n) {
    if (n < 0) fail(ErrorKind::InvalidArgument, "negative vertex count");
    adj_.assign(n_, Bitset(n_));
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n) {
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u == e.v)
            fail(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
        if (i > 0 && edges[i - 1] == e)
            fail(ErrorKind::InvalidArgument, "duplicate edge");
        adj_[e.u].set(e.v);
        adj_[e.v].set(e.u);
    }
    edges_ = std::move(edges);
}

Graph complete_graph(int n) {
    if (n < 1) fail(ErrorKind::InvalidArgument, "complete_graph requires n >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorKind::InvalidArgument, "subset vertex out of range");

    std::vector<int> to_new(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (to_new[e.u] >= 0 && to_new[e.v] >= 0)
            edges.emplace_back(to_new[e.u], to_new[e.v]);
    return InducedSubgraph{Graph(static_cast<int>(verts.size()), std::move(edges)), std::move(verts)};
}

std::optional<BipartiteWitness> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    BipartiteWitness w;
    w.side_of.assign(n, Side::None);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (w.side_of[root] != Side::None || g.degree(root) == 0) continue;
        w.side_of[root] = Side::A;
        queue.assign(1, root);
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            const Bitset& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v)) {
                const int vi = static_cast<int>(v);
                if (w.side_of[vi] == Side::None) {
                    w.side_of[vi] = w.side_of[u] == Side::A ? Side::B : Side::A;
                    queue.push_back(vi);
                } else if (w.side_of[vi] == w.side_of[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return w;
}

std::vector<int> connected_components(const Graph& g, int* count) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = next;
        queue.assign(1, root);
        while (!queue.empty()) {
            const int u = queue.back();
            queue.pop_back();
            const Bitset& nb = g.neighbors(u);
            for (auto v = nb.find_first(); v != Bitset::npos; v = nb.find_next(v))
                if (comp[v] < 0) {
                    comp[v] = next;
                    queue.push_back(static_cast<int>(v));
                }
        }
        ++next;
    }
    if (count) *count = next;
    return comp;
}

bool edges_connected(const Graph& g) {
    if (g.edge_count() == 0) return g.vertex_count() <= 1;
    std::vector<int> comp = connected_components(g);
    const int c0 = comp[g.edges().front().u];
    for (const Edge& e : g.edges())
        if (comp[e.u] != c0) return false;
    return true;
}

} // namespace bipart
