#include "bipart/matching.hpp"

#include <algorithm>
#include <queue>

namespace bipart {

namespace {

// Edmonds' algorithm with blossom contraction tracked through `base`.
struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> match, parent, base;
    std::vector<bool> used, blossom;

    explicit Blossom(const Graph& graph)
        : g(graph), n(graph.vertex_count()), match(n, -1), parent(n, -1),
          base(n), used(n), blossom(n) {}

    int lowest_common_ancestor(int a, int b) {
        std::vector<bool> seen(n, false);
        for (;;) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = true;
            blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            const Bitset& nb = g.neighbors(v);
            for (auto tu = nb.find_first(); tu != Bitset::npos; tu = nb.find_next(tu)) {
                const int to = static_cast<int>(tu);
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    const int b = lowest_common_ancestor(v, to);
                    std::fill(blossom.begin(), blossom.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i)
                        if (blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    }

    void augment(int v) {
        while (v != -1) {
            const int pv = parent[v];
            const int ppv = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = ppv;
        }
    }

    void run() {
        // Greedy seed keeps the augmenting phase short.
        for (const Edge& e : g.edges())
            if (match[e.u] == -1 && match[e.v] == -1) {
                match[e.u] = e.v;
                match[e.v] = e.u;
            }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) {
                const int end = find_augmenting_path(v);
                if (end != -1) augment(end);
            }
    }
};

} // namespace

std::vector<Edge> max_matching(const Graph& g) {
    if (g.edge_count() == 0) return {};
    Blossom b(g);
    b.run();
    std::vector<Edge> result;
    for (int v = 0; v < b.n; ++v)
        if (b.match[v] > v) result.emplace_back(v, b.match[v]);
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace bipart
