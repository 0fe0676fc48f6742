#include "bipart/patterns.hpp"

#include "bipart/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace bipart {

const Graph& pattern_graph(Pattern p) {
    static const Graph p3(3, {{0, 1}, {1, 2}});
    static const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    static const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    static const Graph s4(4, {{0, 1}, {0, 2}, {0, 3}});
    static const Graph two_k2(4, {{0, 1}, {2, 3}});
    static const Graph k2k1(3, {{0, 1}});
    switch (p) {
        case Pattern::P3: return p3;
        case Pattern::P4: return p4;
        case Pattern::C4: return c4;
        case Pattern::S4: return s4;
        case Pattern::TwoK2: return two_k2;
        case Pattern::K2K1: return k2k1;
    }
    fail(ErrorKind::InvalidArgument, "unknown pattern");
}

int pattern_order(Pattern p) { return pattern_graph(p).vertex_count(); }

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::P3: return "P3";
        case Pattern::P4: return "P4";
        case Pattern::C4: return "C4";
        case Pattern::S4: return "S4";
        case Pattern::TwoK2: return "2K2";
        case Pattern::K2K1: return "K2+K1";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(const std::string& name) {
    for (Pattern p : {Pattern::P3, Pattern::P4, Pattern::C4, Pattern::S4,
                      Pattern::TwoK2, Pattern::K2K1})
        if (pattern_name(p) == name) return p;
    return std::nullopt;
}

bool small_graphs_isomorphic(const Graph& a, const Graph& b) {
    const int k = a.vertex_count();
    if (k != b.vertex_count() || a.edge_count() != b.edge_count()) return false;

    auto degs = [](const Graph& g) {
        std::vector<int> d(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(a) != degs(b)) return false;

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < k && ok; ++u)
            for (int v = u + 1; v < k && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

namespace {

// Enumerates k-subsets of 0..n-1 in lexicographic order.
bool next_subset(std::vector<int>& sub, int n) {
    const int k = static_cast<int>(sub.size());
    int i = k - 1;
    while (i >= 0 && sub[i] == n - k + i) --i;
    if (i < 0) return false;
    ++sub[i];
    for (int j = i + 1; j < k; ++j) sub[j] = sub[j - 1] + 1;
    return true;
}

} // namespace

std::optional<std::vector<int>> contains_induced(const Graph& g, const Graph& pattern) {
    const int k = pattern.vertex_count();
    if (k == 0 || k > g.vertex_count()) return std::nullopt;

    std::vector<int> sub(k);
    std::iota(sub.begin(), sub.end(), 0);
    do {
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(sub[i], sub[j])) edges.emplace_back(i, j);
        if (static_cast<int>(edges.size()) == pattern.edge_count() &&
            small_graphs_isomorphic(Graph(k, std::move(edges)), pattern))
            return sub;
    } while (next_subset(sub, g.vertex_count()));
    return std::nullopt;
}

std::optional<std::vector<int>> contains_induced(const Graph& g, Pattern p) {
    return contains_induced(g, pattern_graph(p));
}

std::optional<std::vector<int>> contains_induced(const Graph& g, const PatternSpec& p) {
    if (std::holds_alternative<Pattern>(p)) return contains_induced(g, std::get<Pattern>(p));
    return contains_induced(g, std::get<Graph>(p));
}

namespace {

std::optional<std::vector<int>> sorted_witness(std::vector<int> w) {
    std::sort(w.begin(), w.end());
    return w;
}

// Vertex of degree >= d, plus d of its neighbors.  In a bipartite host the
// neighbors are pairwise non-adjacent, so this is an induced star.
std::optional<std::vector<int>> find_center(const Graph& g, int d) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < d) continue;
        std::vector<int> w{v};
        const Bitset& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != Bitset::npos && static_cast<int>(w.size()) <= d;
             u = nb.find_next(u))
            w.push_back(static_cast<int>(u));
        w.resize(d + 1);
        return sorted_witness(std::move(w));
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_k2k1(const Graph& g) {
    // Isolated vertices count: any vertex avoiding both endpoints works.
    Bitset all(g.vertex_count());
    all.set();
    for (const Edge& e : g.edges()) {
        Bitset rest = all;
        rest -= g.neighbors(e.u);
        rest -= g.neighbors(e.v);
        rest.reset(e.u);
        rest.reset(e.v);
        const auto w = rest.find_first();
        if (w != Bitset::npos)
            return sorted_witness({e.u, e.v, static_cast<int>(w)});
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_c4_bipartite(const Graph& g) {
    // In a bipartite host an induced C4 is exactly a pair of vertices with
    // two common neighbors.
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 2) continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) < 2 || g.has_edge(u, v)) continue;
            Bitset common = g.neighbors(u);
            common &= g.neighbors(v);
            if (common.count() >= 2) {
                const int a = static_cast<int>(common.find_first());
                const int b = static_cast<int>(common.find_next(a));
                return sorted_witness({u, v, a, b});
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_p4_bipartite(const Graph& g) {
    // Middle edge (b,c); ends a in N(b), d in N(c) with ad missing.  The
    // pairs ac and bd are same-side, hence automatically non-edges.
    for (const Edge& e : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
            const int b = dir == 0 ? e.u : e.v;
            const int c = dir == 0 ? e.v : e.u;
            const Bitset& nb = g.neighbors(b);
            for (auto a = nb.find_first(); a != Bitset::npos; a = nb.find_next(a)) {
                if (static_cast<int>(a) == c) continue;
                Bitset ends = g.neighbors(c);
                ends -= g.neighbors(static_cast<int>(a));
                ends.reset(b);
                const auto d = ends.find_first();
                if (d != Bitset::npos)
                    return sorted_witness(
                        {static_cast<int>(a), b, c, static_cast<int>(d)});
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<int>> find_2k2_bipartite(const Graph& g) {
    // Two edges in different components qualify immediately; otherwise an
    // incomparable neighborhood pair inside the edge component yields one.
    const std::vector<int> comp = connected_components(g);
    int first_comp = -1;
    const Edge* first_edge = nullptr;
    for (const Edge& e : g.edges()) {
        if (first_comp < 0) {
            first_comp = comp[e.u];
            first_edge = &e;
        } else if (comp[e.u] != first_comp) {
            return sorted_witness({first_edge->u, first_edge->v, e.u, e.v});
        }
    }
    if (!first_edge) return std::nullopt;

    const auto witness = is_bipartite(g);
    if (!witness) return std::nullopt; // unspecified for non-bipartite hosts
    std::vector<int> side_a;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (witness->side(v) == Side::A && g.degree(v) > 0) side_a.push_back(v);

    for (std::size_t i = 0; i < side_a.size(); ++i)
        for (std::size_t j = i + 1; j < side_a.size(); ++j) {
            const int a = side_a[i], b = side_a[j];
            Bitset only_a = g.neighbors(a);
            only_a -= g.neighbors(b);
            Bitset only_b = g.neighbors(b);
            only_b -= g.neighbors(a);
            if (only_a.any() && only_b.any())
                return sorted_witness({a, static_cast<int>(only_a.find_first()),
                                       b, static_cast<int>(only_b.find_first())});
        }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> find_induced_bipartite(const Graph& g, Pattern p) {
    switch (p) {
        case Pattern::P3: return find_center(g, 2);
        case Pattern::S4: return find_center(g, 3);
        case Pattern::K2K1: return find_k2k1(g);
        case Pattern::C4: return find_c4_bipartite(g);
        case Pattern::P4: return find_p4_bipartite(g);
        case Pattern::TwoK2: return find_2k2_bipartite(g);
    }
    fail(ErrorKind::InvalidArgument, "unknown pattern");
}

} // namespace bipart
