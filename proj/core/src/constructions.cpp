#include "bipart/constructions.hpp"

#include "bipart/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

namespace bipart {

namespace {

Partition make_partition(int n, std::vector<std::vector<Edge>> classes) {
    Partition p{complete_graph(n), {}};
    p.templates.reserve(classes.size());
    for (auto& c : classes) p.templates.emplace_back(std::move(c));
    return p;
}

int ceil_sqrt(int n) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (s * s < n) ++s;
    while (s > 1 && (s - 1) * (s - 1) >= n) --s;
    return s;
}

} // namespace

Partition build_matchings(int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "build_matchings requires n >= 2");
    std::vector<std::vector<Edge>> rounds;
    if (n % 2 == 0) {
        const int h = n - 1;
        for (int r = 0; r < h; ++r) {
            std::vector<Edge> m{{n - 1, r}};
            for (int i = 1; i <= (n - 2) / 2; ++i)
                m.emplace_back((r + i) % h, (r - i + h) % h);
            rounds.push_back(std::move(m));
        }
    } else {
        for (int r = 0; r < n; ++r) {
            std::vector<Edge> m;
            for (int i = 1; i <= (n - 1) / 2; ++i)
                m.emplace_back((r + i) % n, (r - i + n) % n);
            rounds.push_back(std::move(m));
        }
    }
    return make_partition(n, std::move(rounds));
}

Partition build_single_edges(int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "build_single_edges requires n >= 2");
    std::vector<std::vector<Edge>> classes;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            classes.push_back({Edge(u, v)});
    return make_partition(n, std::move(classes));
}

Partition build_gp_stars(int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "build_gp_stars requires n >= 2");
    std::vector<std::vector<Edge>> classes(n - 1);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j)
            classes[i].emplace_back(i, j);
    return make_partition(n, std::move(classes));
}

Partition build_cbip_orchards(int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "build_cbip_orchards requires n >= 2");
    const int k = std::bit_width(static_cast<unsigned>(n - 1)); // = ceil(log2 n)
    std::vector<std::vector<Edge>> classes(k);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int bit = std::bit_width(static_cast<unsigned>(u ^ v)) - 1;
            classes[bit].emplace_back(u, v);
        }
    return make_partition(n, std::move(classes));
}

Partition build_ferrers(int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "build_ferrers requires n >= 2");
    const int s = ceil_sqrt(n);
    const int square = s * s;
    const auto id = [s](int x, int y) { return (x - 1) * s + (y - 1); };

    std::vector<std::vector<Edge>> classes;
    // Descent edges (left column fixed): (i,y0)-(x',y') with x' > i, y' <= y0.
    for (int i = 1; i <= s - 1; ++i) {
        std::vector<Edge> t;
        for (int y0 = 1; y0 <= s; ++y0)
            for (int x2 = i + 1; x2 <= s; ++x2)
                for (int y2 = 1; y2 <= y0; ++y2)
                    t.emplace_back(id(i, y0), id(x2, y2));
        classes.push_back(std::move(t));
    }
    // Ascent edges (lower row fixed): verticals (x,j)-(x,y') and strict
    // ascents (x,j)-(x',y') with x' > x, y' > j.
    for (int j = 1; j <= s - 1; ++j) {
        std::vector<Edge> t;
        for (int x = 1; x <= s; ++x) {
            for (int y2 = j + 1; y2 <= s; ++y2) t.emplace_back(id(x, j), id(x, y2));
            for (int x2 = x + 1; x2 <= s; ++x2)
                for (int y2 = j + 1; y2 <= s; ++y2)
                    t.emplace_back(id(x, j), id(x2, y2));
        }
        classes.push_back(std::move(t));
    }
    Partition p = make_partition(square, std::move(classes));
    if (square != n) p = restrict_to_prefix(p, n);
    return p;
}

std::vector<std::vector<int>> walecki_cycles(int n) {
    if (n < 3 || n % 2 == 0)
        fail(ErrorKind::InvalidArgument, "walecki_cycles requires odd n >= 3");
    const int h = n - 1;
    std::vector<int> base(h);
    base[0] = 0;
    for (int t = 1; 2 * t - 1 < h; ++t) {
        base[2 * t - 1] = t;
        if (2 * t < h) base[2 * t] = h - t;
    }
    std::vector<std::vector<int>> cycles;
    for (int i = 0; i < (n - 1) / 2; ++i) {
        std::vector<int> seq{n - 1};
        for (int v : base) seq.push_back((v + i) % h);
        cycles.push_back(std::move(seq));
    }
    return cycles;
}

namespace {

Partition hamiltonian_cycle_partition(int n) {
    std::vector<std::vector<Edge>> classes;
    for (const auto& seq : walecki_cycles(n)) {
        std::vector<Edge> t;
        for (std::size_t i = 0; i < seq.size(); ++i)
            t.emplace_back(seq[i], seq[(i + 1) % seq.size()]);
        classes.push_back(std::move(t));
    }
    return make_partition(n, std::move(classes));
}

} // namespace

Partition build_hamiltonian(int n) {
    if (n < 3) fail(ErrorKind::InvalidArgument, "build_hamiltonian requires n >= 3");
    // Odd cycles are not bipartite, so the cycle decomposition itself is
    // only an intermediate: restriction turns the cycles into paths.
    if (n % 2 == 0) return restrict_to_prefix(hamiltonian_cycle_partition(n + 1), n);
    return restrict_to_prefix(hamiltonian_cycle_partition(n + 2), n);
}

Partition build_double_stars(int n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "build_double_stars requires n >= 2");
    if (n % 2 == 1) return restrict_to_prefix(build_double_stars(n + 1), n);
    const int t = n / 2;
    std::vector<std::vector<Edge>> classes(t);
    for (int i = 0; i < t; ++i) classes[i].emplace_back(2 * i, 2 * i + 1);
    // The four edges between center pairs i < j split into complementary
    // matchings, one per template; every outside vertex ends up attached to
    // exactly one of the two centers.
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            classes[i].emplace_back(2 * i, 2 * j);
            classes[i].emplace_back(2 * i + 1, 2 * j + 1);
            classes[j].emplace_back(2 * i, 2 * j + 1);
            classes[j].emplace_back(2 * i + 1, 2 * j);
        }
    return make_partition(n, std::move(classes));
}

Partition build_star_orchards(int n) {
    if (n < 4) fail(ErrorKind::InvalidArgument, "build_star_orchards requires n >= 4");
    if (n % 2 == 1) {
        Partition even = build_star_orchards(n - 1);
        Partition p{complete_graph(n), std::move(even.templates)};
        std::vector<Edge> star;
        for (int i = 0; i < n - 1; ++i) star.emplace_back(i, n - 1);
        p.templates.emplace_back(std::move(star));
        return p;
    }
    Partition ds = build_double_stars(n);
    std::vector<std::vector<Edge>> classes;
    std::vector<Edge> centers;
    for (int i = 0; i < n / 2; ++i) {
        const Edge center(2 * i, 2 * i + 1);
        std::vector<Edge> kept;
        for (const Edge& e : ds.templates[i].edges)
            if (!(e == center)) kept.push_back(e);
        classes.push_back(std::move(kept));
        centers.push_back(center);
    }
    classes.push_back(std::move(centers));
    return make_partition(n, std::move(classes));
}

namespace {

// Recursive cherry-orchard scheme on one block of 3^s vertices.  Returns
// edge classes; vertex-disjoint sibling blocks merge index-wise.
std::vector<std::vector<Edge>> cherry_orchard_classes(const std::vector<int>& block) {
    const int size = static_cast<int>(block.size());
    if (size <= 1) return {};
    if (size == 3)
        return {{Edge(block[0], block[1]), Edge(block[1], block[2])},
                {Edge(block[0], block[2])}};

    const int q = size / 3;
    const auto A = std::vector<int>(block.begin(), block.begin() + q);
    const auto B = std::vector<int>(block.begin() + q, block.begin() + 2 * q);
    const auto C = std::vector<int>(block.begin() + 2 * q, block.end());

    const auto matching = [q](const std::vector<int>& x, const std::vector<int>& y, int r) {
        std::vector<Edge> m;
        for (int i = 0; i < q; ++i) m.emplace_back(x[i], y[(i + r) % q]);
        return m;
    };
    const auto concat = [](std::vector<Edge> a, const std::vector<Edge>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    std::vector<std::vector<Edge>> classes;
    int r = 0;
    for (; r + 1 < q; r += 2) {
        classes.push_back(concat(matching(A, B, r), matching(A, C, r)));
        classes.push_back(concat(matching(A, B, r + 1), matching(B, C, r)));
        classes.push_back(concat(matching(A, C, r + 1), matching(B, C, r + 1)));
    }
    if (r < q) { // odd number of matchings per pair: emit the last ones alone
        classes.push_back(matching(A, B, r));
        classes.push_back(matching(A, C, r));
        classes.push_back(matching(B, C, r));
    }

    const auto la = cherry_orchard_classes(A);
    const auto lb = cherry_orchard_classes(B);
    const auto lc = cherry_orchard_classes(C);
    for (std::size_t i = 0; i < la.size(); ++i)
        classes.push_back(concat(concat(la[i], lb[i]), lc[i]));
    return classes;
}

} // namespace

Partition build_cherry_orchards(int n) {
    if (n < 3) fail(ErrorKind::InvalidArgument, "build_cherry_orchards requires n >= 3");
    int power = 1;
    while (power < n) power *= 3;
    std::vector<int> block(power);
    std::iota(block.begin(), block.end(), 0);
    Partition p = make_partition(power, cherry_orchard_classes(block));
    if (power != n) p = restrict_to_prefix(p, n);
    return p;
}

Partition build_c4_decomposition(int n) {
    if (n % 8 != 1 || n < 9)
        fail(ErrorKind::UnsupportedParameter,
             "build_c4_decomposition requires n = 1 mod 8, n >= 9");
    // Base four-cycles (0, 4i+1, n-1, 4i+3) carry the difference classes
    // {4i+1, 4i+2, 4i+3, 4i+4}; rotating each through Z_n covers every edge
    // exactly once.
    const int t = (n - 1) / 8;
    std::vector<std::vector<Edge>> classes;
    for (int i = 0; i < t; ++i) {
        const std::array<int, 4> base = {0, 4 * i + 1, n - 1, 4 * i + 3};
        for (int g = 0; g < n; ++g) {
            std::vector<Edge> cyc;
            for (int j = 0; j < 4; ++j)
                cyc.emplace_back((base[j] + g) % n, (base[(j + 1) % 4] + g) % n);
            classes.push_back(std::move(cyc));
        }
    }
    return make_partition(n, std::move(classes));
}

Partition build_p4_paths(int n) {
    if (n % 6 != 3 || n < 9)
        fail(ErrorKind::UnsupportedParameter,
             "build_p4_paths requires n = 3 mod 6, n >= 9");
    std::vector<std::vector<Edge>> classes;
    for (const auto& seq : walecki_cycles(n)) {
        const int len = static_cast<int>(seq.size());
        for (int j = 0; j < len; j += 3) {
            std::vector<Edge> path;
            for (int step = 0; step < 3; ++step)
                path.emplace_back(seq[(j + step) % len], seq[(j + step + 1) % len]);
            classes.push_back(std::move(path));
        }
    }
    return make_partition(n, std::move(classes));
}

Partition build_c4_orchards(int n) {
    if (n % 4 != 0 || n < 4)
        fail(ErrorKind::UnsupportedParameter, "build_c4_orchards requires n = 0 mod 4");
    // Doubling: each perfect matching F of K_{n/2} lifts to a spanning union
    // of four-cycles a - b - (a+h) - (b+h) - a over the pairs of F; the
    // vertical pairs (a, a+h) remain as one perfect matching.
    const int h = n / 2;
    std::vector<std::vector<Edge>> classes;
    for (const TemplateGraph& f : build_matchings(h).templates) {
        std::vector<Edge> factor;
        for (const Edge& e : f.edges) {
            factor.emplace_back(e.u, e.v);
            factor.emplace_back(e.v, e.u + h);
            factor.emplace_back(e.u + h, e.v + h);
            factor.emplace_back(e.u, e.v + h);
        }
        classes.push_back(std::move(factor));
    }
    std::vector<Edge> vertical;
    for (int a = 0; a < h; ++a) vertical.emplace_back(a, a + h);
    classes.push_back(std::move(vertical));
    return make_partition(n, std::move(classes));
}

namespace {

// Two-edge-path decomposition of one connected even component, pairing
// leftover edges leaves-up along a BFS tree.
std::vector<std::vector<Edge>> decompose_even_component(const Graph& g,
                                                        const std::vector<int>& verts) {
    std::vector<std::vector<Edge>> cherries;
    if (verts.empty()) return cherries;

    const int root = verts.front();
    std::vector<int> parent(g.vertex_count(), -1), depth(g.vertex_count(), -1);
    std::vector<int> order;
    std::queue<int> q;
    depth[root] = 0;
    q.push(root);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        order.push_back(u);
        const Bitset& nb = g.neighbors(u);
        for (auto t = nb.find_first(); t != Bitset::npos; t = nb.find_next(t))
            if (depth[t] == -1) {
                depth[t] = depth[u] + 1;
                parent[t] = u;
                q.push(static_cast<int>(t));
            }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return depth[a] > depth[b]; });

    std::map<Edge, bool> used;
    for (int v : order) {
        std::vector<int> others;
        const Bitset& nb = g.neighbors(v);
        for (auto t = nb.find_first(); t != Bitset::npos; t = nb.find_next(t)) {
            const int w = static_cast<int>(t);
            if (v != root && w == parent[v]) continue;
            if (!used[Edge(v, w)]) others.push_back(w);
        }
        for (std::size_t i = 0; i + 1 < others.size(); i += 2) {
            used[Edge(v, others[i])] = used[Edge(v, others[i + 1])] = true;
            cherries.push_back({Edge(v, others[i]), Edge(v, others[i + 1])});
        }
        if (others.size() % 2 == 1) {
            // pair the stray edge with the tree edge toward the parent
            const int w = others.back();
            used[Edge(v, w)] = used[Edge(v, parent[v])] = true;
            cherries.push_back({Edge(v, w), Edge(v, parent[v])});
        }
    }
    return cherries;
}

std::vector<std::vector<int>> edge_component_vertices(const Graph& g) {
    int count = 0;
    const std::vector<int> comp = connected_components(g, &count);
    std::vector<std::vector<int>> verts(count);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) verts[comp[v]].push_back(v);
    std::vector<std::vector<int>> nonempty;
    for (auto& c : verts)
        if (!c.empty()) nonempty.push_back(std::move(c));
    return nonempty;
}

std::vector<int> component_edge_counts(const Graph& g) {
    int count = 0;
    const std::vector<int> comp = connected_components(g, &count);
    std::vector<int> edges(count, 0);
    for (const Edge& e : g.edges()) edges[comp[e.u]] += 1;
    return edges;
}

} // namespace

Partition build_cherries(const Graph& g) {
    if (g.edge_count() == 0) fail(ErrorKind::InvalidArgument, "build_cherries: empty graph");
    if (!edges_connected(g))
        fail(ErrorKind::UnsupportedInput, "build_cherries: edges must be connected");

    Partition p{g, {}};
    std::optional<Edge> removed;
    Graph work = g;
    if (g.edge_count() % 2 == 1) {
        // Drop the first edge (lexicographically) whose removal leaves every
        // edge component even; a leaf edge of any spanning tree qualifies,
        // so the scan always succeeds.
        for (const Edge& e : g.edges()) {
            std::vector<Edge> rest;
            for (const Edge& f : g.edges())
                if (!(f == e)) rest.push_back(f);
            Graph candidate(g.vertex_count(), std::move(rest));
            const std::vector<int> counts = component_edge_counts(candidate);
            if (std::all_of(counts.begin(), counts.end(), [](int c) { return c % 2 == 0; })) {
                removed = e;
                work = std::move(candidate);
                break;
            }
        }
        if (!removed)
            fail(ErrorKind::InternalInconsistency, "no even-splitting edge found");
    }

    for (const auto& comp : edge_component_vertices(work))
        for (auto& cherry : decompose_even_component(work, comp))
            p.templates.emplace_back(std::move(cherry));
    if (removed) p.templates.emplace_back(std::vector<Edge>{*removed});
    return p;
}

namespace {

struct Registration {
    ConstructionId id;
    bool (*supported)(int);
    const char* condition;
};

const std::map<std::string, Registration>& construction_table() {
    static const std::map<std::string, Registration> table = {
        {"empty", {ConstructionId::CbipOrchards, [](int n) { return n >= 2; }, "n >= 2"}},
        {"P3", {ConstructionId::Matchings, [](int n) { return n >= 2; }, "n >= 2"}},
        {"K2+K1", {ConstructionId::GpStars, [](int n) { return n >= 2; }, "n >= 2"}},
        {"K2+K1-P3", {ConstructionId::SingleEdges, [](int n) { return n >= 2; }, "n >= 2"}},
        {"P4", {ConstructionId::CbipOrchards, [](int n) { return n >= 2; }, "n >= 2"}},
        {"2K2", {ConstructionId::FerrersGrid, [](int n) { return n >= 2; }, "n >= 2"}},
        {"S4", {ConstructionId::Hamiltonian, [](int n) { return n >= 3; }, "n >= 3"}},
        {"C4-S4", {ConstructionId::Hamiltonian, [](int n) { return n >= 5; }, "n >= 5"}},
        {"2K2-C4", {ConstructionId::DoubleStars, [](int n) { return n >= 2; }, "n >= 2"}},
        {"2K2-C4-P4", {ConstructionId::GpStars, [](int n) { return n >= 2; }, "n >= 2"}},
        {"2K2-P4", {ConstructionId::GpStars, [](int n) { return n >= 2; }, "n >= 2"}},
        {"C4-P4", {ConstructionId::StarOrchards, [](int n) { return n >= 4; }, "n >= 4"}},
        {"C4-P4-S4", {ConstructionId::CherryOrchards, [](int n) { return n >= 3; }, "n >= 3"}},
        {"2K2-S4",
         {ConstructionId::C4Decomposition, [](int n) { return n >= 9 && n % 8 == 1; },
          "n = 1 mod 8, n >= 9"}},
        {"2K2-P4-S4",
         {ConstructionId::C4Decomposition, [](int n) { return n >= 9 && n % 8 == 1; },
          "n = 1 mod 8, n >= 9"}},
        {"2K2-C4-S4",
         {ConstructionId::P4Paths, [](int n) { return n >= 9 && n % 6 == 3; },
          "n = 3 mod 6, n >= 9"}},
        {"P4-S4",
         {ConstructionId::C4Orchards, [](int n) { return n >= 4 && n % 4 == 0; },
          "n = 0 mod 4"}},
        {"2K2-C4-P4-S4", {ConstructionId::Cherries, [](int n) { return n >= 2; }, "n >= 2"}},
    };
    return table;
}

} // namespace

std::optional<ClassConstruction> construction_for(const ClassSpec& spec) {
    const auto& table = construction_table();
    const auto it = table.find(class_name(spec));
    if (it == table.end()) return std::nullopt;
    return ClassConstruction{it->second.id, it->second.supported, it->second.condition};
}

Partition construct(const ClassSpec& spec, int n) {
    if (!is_registry_class(spec))
        fail(ErrorKind::UnsupportedClass, "class not in the registry: " + class_name(spec));
    const auto entry = construction_for(spec);
    if (!entry)
        fail(ErrorKind::UnsupportedClass,
             "no construction for class " + class_name(spec));
    if (!entry->supported(n))
        fail(ErrorKind::UnsupportedParameter,
             "class " + class_name(spec) + " requires " + entry->side_condition);
    switch (entry->id) {
        case ConstructionId::Matchings: return build_matchings(n);
        case ConstructionId::SingleEdges: return build_single_edges(n);
        case ConstructionId::GpStars: return build_gp_stars(n);
        case ConstructionId::CbipOrchards: return build_cbip_orchards(n);
        case ConstructionId::FerrersGrid: return build_ferrers(n);
        case ConstructionId::Hamiltonian: return build_hamiltonian(n);
        case ConstructionId::DoubleStars: return build_double_stars(n);
        case ConstructionId::StarOrchards: return build_star_orchards(n);
        case ConstructionId::CherryOrchards: return build_cherry_orchards(n);
        case ConstructionId::C4Decomposition: return build_c4_decomposition(n);
        case ConstructionId::P4Paths: return build_p4_paths(n);
        case ConstructionId::C4Orchards: return build_c4_orchards(n);
        case ConstructionId::Cherries: return build_cherries(complete_graph(n));
    }
    fail(ErrorKind::InternalInconsistency, "unhandled construction id");
}

} // namespace bipart
