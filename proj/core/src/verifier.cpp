#include "bipart/verifier.hpp"

#include "bipart/error.hpp"
#include "bipart/ferrers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <queue>

namespace bipart {

TemplateGraph::TemplateGraph(std::vector<Edge> e) : edges(std::move(e)) {
    for (const Edge& ed : edges)
        if (ed.u == ed.v) fail(ErrorKind::InvalidArgument, "template self-loop");
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(ErrorKind::InvalidArgument, "duplicate edge inside template");
}

ImpliedGraph implied_graph(const TemplateGraph& t) {
    std::vector<int> verts;
    verts.reserve(t.edges.size() * 2);
    for (const Edge& e : t.edges) {
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

    std::map<int, int> to_new;
    for (std::size_t i = 0; i < verts.size(); ++i) to_new[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    edges.reserve(t.edges.size());
    for (const Edge& e : t.edges) edges.emplace_back(to_new[e.u], to_new[e.v]);
    return ImpliedGraph{Graph(static_cast<int>(verts.size()), std::move(edges)),
                        std::move(verts)};
}

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::ForeignEdge: return "foreign-edge";
        case ViolationKind::Overlap: return "overlap";
        case ViolationKind::UncoveredEdge: return "uncovered-edge";
        case ViolationKind::NotBipartite: return "not-bipartite";
        case ViolationKind::InducedPattern: return "induced-pattern";
        case ViolationKind::EmptyTemplate: return "empty-template";
    }
    return "?";
}

namespace {

// Odd cycle witness for a non-bipartite graph: BFS parents until a
// same-side edge closes the cycle.
std::vector<int> odd_cycle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1 || g.degree(root) == 0) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            const Bitset& nb = g.neighbors(u);
            for (auto t = nb.find_first(); t != Bitset::npos; t = nb.find_next(t)) {
                const int v = static_cast<int>(t);
                if (side[v] == -1) {
                    side[v] = side[u] ^ 1;
                    parent[v] = u;
                    q.push(v);
                } else if (side[v] == side[u]) {
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    std::size_t i = 0;
                    while (i + 1 < pu.size() && i + 1 < pv.size() && pu[i + 1] == pv[i + 1]) ++i;
                    std::vector<int> cyc(pu.begin() + i, pu.end());
                    for (std::size_t j = pv.size(); j-- > i + 1;) cyc.push_back(pv[j]);
                    return cyc;
                }
            }
        }
    }
    return {};
}

std::vector<int> to_host_labels(const std::vector<int>& w, const std::vector<int>& map) {
    std::vector<int> out;
    out.reserve(w.size());
    for (int v : w) out.push_back(map[v]);
    return out;
}

} // namespace

VerifyReport verify_partition(const Partition& p, const ClassSpec& spec) {
    VerifyReport report;
    const Graph& host = p.host;
    const int n = host.vertex_count();

    auto add = [&report](Violation v) { report.violations.push_back(std::move(v)); };

    // Host edge index for ownership bookkeeping.
    std::vector<int> owner(host.edge_count(), -1);
    auto host_index = [&host](const Edge& e) -> int {
        const auto& es = host.edges();
        const auto it = std::lower_bound(es.begin(), es.end(), e);
        if (it == es.end() || !(*it == e)) return -1;
        return static_cast<int>(it - es.begin());
    };

    for (std::size_t ti = 0; ti < p.templates.size(); ++ti) {
        const TemplateGraph& t = p.templates[ti];
        if (t.edges.empty()) {
            add({static_cast<int>(ti), ViolationKind::EmptyTemplate, {}, {}, "empty template"});
            continue;
        }
        for (const Edge& e : t.edges) {
            if (e.u < 0 || e.v >= n || !host.has_edge(e.u, e.v)) {
                add({static_cast<int>(ti), ViolationKind::ForeignEdge, {e.u, e.v}, {e},
                     "edge not in host"});
                continue;
            }
            const int idx = host_index(e);
            if (owner[idx] >= 0) {
                add({static_cast<int>(ti), ViolationKind::Overlap, {e.u, e.v}, {e},
                     "edge already claimed by template " + std::to_string(owner[idx])});
            } else {
                owner[idx] = static_cast<int>(ti);
            }
        }
    }

    for (int i = 0; i < host.edge_count(); ++i)
        if (owner[i] < 0) {
            const Edge e = host.edges()[i];
            add({-1, ViolationKind::UncoveredEdge, {e.u, e.v}, {e}, "host edge not covered"});
        }

    for (std::size_t ti = 0; ti < p.templates.size(); ++ti) {
        const TemplateGraph& t = p.templates[ti];
        if (t.edges.empty()) continue;
        const ImpliedGraph ig = implied_graph(t);
        if (!is_bipartite(ig.graph)) {
            add({static_cast<int>(ti), ViolationKind::NotBipartite,
                 to_host_labels(odd_cycle(ig.graph), ig.vertex_map), {}, "odd cycle"});
            continue; // skip pattern checks on non-bipartite templates
        }
        for (Pattern pat : spec.named)
            if (const auto w = find_induced_bipartite(ig.graph, pat))
                add({static_cast<int>(ti), ViolationKind::InducedPattern,
                     to_host_labels(*w, ig.vertex_map), {}, pattern_name(pat)});
        for (const Graph& pg : spec.custom)
            if (const auto w = contains_induced(ig.graph, pg))
                add({static_cast<int>(ti), ViolationKind::InducedPattern,
                     to_host_labels(*w, ig.vertex_map), {}, "custom pattern"});
    }

    report.valid = report.violations.empty();
    return report;
}

std::string template_label_name(TemplateLabel label) {
    switch (label) {
        case TemplateLabel::SingleEdge: return "single-edge";
        case TemplateLabel::Cherry: return "cherry";
        case TemplateLabel::Matching: return "matching";
        case TemplateLabel::Star: return "star";
        case TemplateLabel::Path: return "path";
        case TemplateLabel::Cycle: return "cycle";
        case TemplateLabel::DoubleStar: return "double-star";
        case TemplateLabel::CompleteBipartite: return "complete-bipartite";
        case TemplateLabel::CherryOrchard: return "cherry-orchard";
        case TemplateLabel::StarOrchard: return "star-orchard";
        case TemplateLabel::C4Orchard: return "C4-orchard";
        case TemplateLabel::CompleteBipartiteOrchard: return "complete-bipartite-orchard";
        case TemplateLabel::Ferrers: return "ferrers";
        case TemplateLabel::Bipartite: return "bipartite";
        case TemplateLabel::NonBipartite: return "non-bipartite";
    }
    return "?";
}

namespace {

struct ComponentInfo {
    std::vector<int> vertices;
    int edge_count = 0;
    int max_degree = 0;
    bool is_k2() const { return vertices.size() == 2 && edge_count == 1; }
    bool is_p3() const { return vertices.size() == 3 && edge_count == 2; }
    bool is_star() const { return edge_count >= 1 && max_degree == edge_count; }
    bool is_c4() const { return vertices.size() == 4 && edge_count == 4 && max_degree == 2; }
};

int graph_diameter(const Graph& g) {
    // All-pairs BFS; callers only use this on small connected graphs.
    int diam = 0;
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            diam = std::max(diam, dist[u]);
            const Bitset& nb = g.neighbors(u);
            for (auto t = nb.find_first(); t != Bitset::npos; t = nb.find_next(t))
                if (dist[t] == -1) {
                    dist[t] = dist[u] + 1;
                    q.push(static_cast<int>(t));
                }
        }
    }
    return diam;
}

bool component_complete_bipartite(const ComponentInfo& c, const BipartiteWitness& w) {
    int a = 0, b = 0;
    for (int v : c.vertices) (w.side(v) == Side::A ? a : b) += 1;
    return c.edge_count == a * b;
}

} // namespace

TemplateLabel classify_template(const TemplateGraph& t) {
    if (t.edges.empty()) fail(ErrorKind::InvalidArgument, "empty template");
    const ImpliedGraph ig = implied_graph(t);
    const Graph& g = ig.graph;
    const int m = g.edge_count();
    const int k = g.vertex_count();

    int comp_count = 0;
    const std::vector<int> comp = connected_components(g, &comp_count);
    std::vector<ComponentInfo> comps(comp_count);
    for (int v = 0; v < k; ++v) {
        comps[comp[v]].vertices.push_back(v);
        comps[comp[v]].max_degree = std::max(comps[comp[v]].max_degree, g.degree(v));
    }
    for (const Edge& e : g.edges()) comps[comp[e.u]].edge_count += 1;

    int max_degree = 0;
    for (int v = 0; v < k; ++v) max_degree = std::max(max_degree, g.degree(v));
    const bool connected = comp_count == 1;
    const bool acyclic_connected = connected && m == k - 1;
    const auto bip = is_bipartite(g);

    if (m == 1) return TemplateLabel::SingleEdge;
    if (connected && m == 2) return TemplateLabel::Cherry;
    if (max_degree == 1) return TemplateLabel::Matching;
    if (connected && max_degree == m) return TemplateLabel::Star;
    if (acyclic_connected && max_degree <= 2) return TemplateLabel::Path;
    if (connected && max_degree == 2 && m == k) return TemplateLabel::Cycle;
    if (acyclic_connected && graph_diameter(g) == 3) return TemplateLabel::DoubleStar;
    if (connected && bip && component_complete_bipartite(comps[0], *bip))
        return TemplateLabel::CompleteBipartite;

    const bool all_cherry = std::all_of(comps.begin(), comps.end(),
        [](const ComponentInfo& c) { return c.is_k2() || c.is_p3(); });
    if (all_cherry) return TemplateLabel::CherryOrchard;

    const bool all_star = std::all_of(comps.begin(), comps.end(),
        [](const ComponentInfo& c) { return c.is_star(); });
    if (all_star) return TemplateLabel::StarOrchard;

    const bool all_c4 = std::all_of(comps.begin(), comps.end(),
        [](const ComponentInfo& c) { return c.is_c4(); });
    if (all_c4) return TemplateLabel::C4Orchard;

    if (bip) {
        const bool all_cbip = std::all_of(comps.begin(), comps.end(),
            [&](const ComponentInfo& c) { return component_complete_bipartite(c, *bip); });
        if (all_cbip) return TemplateLabel::CompleteBipartiteOrchard;
        if (is_ferrers(g)) return TemplateLabel::Ferrers;
        return TemplateLabel::Bipartite;
    }
    return TemplateLabel::NonBipartite;
}

ClassVectors class_vectors(const Partition& p) {
    const int n = p.host.vertex_count();
    const int k = static_cast<int>(p.templates.size());
    ClassVectors cv;
    cv.bits.assign(n, std::vector<uint8_t>(k, 0));

    for (int ti = 0; ti < k; ++ti) {
        const ImpliedGraph ig = implied_graph(p.templates[ti]);
        const auto w = is_bipartite(ig.graph);
        if (!w)
            fail(ErrorKind::InvalidArgument,
                 "template " + std::to_string(ti) + " is not bipartite");
        for (int v = 0; v < ig.graph.vertex_count(); ++v)
            if (w->side(v) == Side::B) cv.bits[ig.vertex_map[v]][ti] = 1;
    }

    for (int u = 0; u < n && cv.all_distinct; ++u)
        for (int v = u + 1; v < n; ++v)
            if (cv.bits[u] == cv.bits[v]) {
                cv.all_distinct = false;
                cv.clash = {u, v};
                break;
            }
    return cv;
}

int count_large_templates(const Partition& p, int m) {
    int count = 0;
    for (const TemplateGraph& t : p.templates) {
        if (t.edges.empty()) continue;
        if (max_matching_size(implied_graph(t).graph) >= m) ++count;
    }
    return count;
}

Partition restrict_to_prefix(const Partition& p, int n) {
    if (n < 0 || n > p.host.vertex_count())
        fail(ErrorKind::InvalidArgument, "prefix size out of range");
    std::vector<Edge> host_edges;
    for (const Edge& e : p.host.edges())
        if (e.v < n) host_edges.push_back(e);
    Partition out{Graph(n, std::move(host_edges)), {}};
    for (const TemplateGraph& t : p.templates) {
        std::vector<Edge> kept;
        for (const Edge& e : t.edges)
            if (e.v < n) kept.push_back(e);
        if (!kept.empty()) out.templates.emplace_back(std::move(kept));
    }
    return out;
}

Partition restrict_to_subset(const Partition& p, const std::vector<int>& keep) {
    const InducedSubgraph sub = induced_subgraph(p.host, keep);
    std::vector<int> to_new(p.host.vertex_count(), -1);
    for (std::size_t i = 0; i < sub.vertex_map.size(); ++i)
        to_new[sub.vertex_map[i]] = static_cast<int>(i);
    Partition out{sub.graph, {}};
    for (const TemplateGraph& t : p.templates) {
        std::vector<Edge> kept;
        for (const Edge& e : t.edges)
            if (to_new[e.u] >= 0 && to_new[e.v] >= 0)
                kept.emplace_back(to_new[e.u], to_new[e.v]);
        if (!kept.empty()) out.templates.emplace_back(std::move(kept));
    }
    return out;
}

} // namespace bipart
