#include "bipart/gadget.hpp"

#include "bipart/class_spec.hpp"
#include "bipart/error.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace bipart {

int Gadget::id_of(const std::string& label) const {
    if (label == "A") return kAttachA;
    if (label == "B") return kAttachB;
    for (std::size_t i = 0; i < internal_labels.size(); ++i)
        if (internal_labels[i] == label) return 2 + static_cast<int>(i);
    return -1;
}

Gadget gadget_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("gadget json: ") + e.what());
    }
    Gadget g;
    try {
        for (const auto& label : doc.at("internal")) {
            const std::string s = label.get<std::string>();
            if (s == "A" || s == "B")
                fail(ErrorKind::InvalidArgument, "gadget json: A and B are reserved labels");
            if (g.id_of(s) != -1)
                fail(ErrorKind::InvalidArgument, "gadget json: duplicate label " + s);
            g.internal_labels.push_back(s);
        }
        for (const auto& e : doc.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                fail(ErrorKind::InvalidArgument, "gadget json: edge must be a label pair");
            const int u = g.id_of(e[0].get<std::string>());
            const int v = g.id_of(e[1].get<std::string>());
            if (u < 0 || v < 0)
                fail(ErrorKind::InvalidArgument, "gadget json: unknown vertex label");
            g.edges.emplace_back(u, v);
        }
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("gadget json: ") + e.what());
    }
    return g;
}

Gadget load_gadget_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return gadget_from_json(buf.str());
}

std::string gadget_to_json(const Gadget& g) {
    json doc;
    doc["internal"] = g.internal_labels;
    json edges = json::array();
    auto label = [&g](int id) -> std::string {
        if (id == Gadget::kAttachA) return "A";
        if (id == Gadget::kAttachB) return "B";
        return g.internal_labels[id - 2];
    };
    for (const Edge& e : g.edges) edges.push_back(json::array({label(e.u), label(e.v)}));
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

std::vector<std::string> validate_gadget_shape(const Gadget& g) {
    std::vector<std::string> violations;
    if (g.internal_labels.size() != 9) violations.push_back("internal vertex count");
    if (g.edges.size() != 14) violations.push_back("edge count");

    std::vector<Edge> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        violations.push_back("duplicate edge");
    for (const Edge& e : g.edges)
        if (e.u == e.v) violations.push_back("self-loop");

    const int s = g.id_of("S"), p = g.id_of("P"), q = g.id_of("Q");
    if (s < 0 || p < 0 || q < 0) {
        violations.push_back("missing S, P or Q label");
        return violations;
    }

    std::vector<int> deg(g.vertex_count(), 0);
    auto has = [&g](int u, int v) {
        return std::find(g.edges.begin(), g.edges.end(), Edge(u, v)) != g.edges.end();
    };
    for (const Edge& e : g.edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    if (!has(s, Gadget::kAttachA)) violations.push_back("missing leg (S,A)");
    if (!has(s, Gadget::kAttachB)) violations.push_back("missing leg (S,B)");
    if (deg[Gadget::kAttachA] != 1) violations.push_back("attachment A degree");
    if (deg[Gadget::kAttachB] != 1) violations.push_back("attachment B degree");
    if (deg[s] != 4) violations.push_back("S degree");
    if (!has(s, p)) violations.push_back("missing edge (S,P)");
    if (!has(s, q)) violations.push_back("missing edge (S,Q)");
    if (deg[p] != 6) violations.push_back("P degree");
    if (deg[q] != 5) violations.push_back("Q degree");
    if (!has(p, q)) violations.push_back("missing edge (P,Q)");
    return violations;
}

bool cherry_class_valid(const Gadget& g, const std::vector<int>& colors, int color) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (colors[i] == color) {
            if (++deg[g.edges[i].u] > 2) return false;
            if (++deg[g.edges[i].v] > 2) return false;
        }
    // No edge may join two degree-2 vertices: that rules out paths longer
    // than two edges and all cycles, leaving K2 and P3 components only.
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (colors[i] == color && deg[g.edges[i].u] == 2 && deg[g.edges[i].v] == 2)
            return false;
    return true;
}

GadgetColorReport gadget_color_property(const Gadget& g) {
    if (!validate_gadget_shape(g).empty())
        fail(ErrorKind::InvalidArgument, "gadget_color_property requires a conformant gadget");

    const int s = g.id_of("S");
    int leg_x = -1, leg_y = -1;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i] == Edge(s, Gadget::kAttachA)) leg_x = static_cast<int>(i);
        if (g.edges[i] == Edge(s, Gadget::kAttachB)) leg_y = static_cast<int>(i);
    }

    std::vector<int> rest;
    for (int i = 0; i < 14; ++i)
        if (i != leg_x && i != leg_y) rest.push_back(i);

    GadgetColorReport report;
    std::vector<int> colors(14, 0);
    const long long total = 531441; // 3^12, enumerated in full per leg pair

    for (int cx = 1; cx <= 3; ++cx)
        for (int cy = 1; cy <= 3; ++cy) {
            const bool mono = cx == cy;
            colors[leg_x] = cx;
            colors[leg_y] = cy;
            for (long long code = 0; code < total; ++code) {
                long long rem = code;
                for (int ri = 0; ri < 12; ++ri) {
                    colors[rest[ri]] = static_cast<int>(rem % 3) + 1;
                    rem /= 3;
                }
                if (cherry_class_valid(g, colors, 1) && cherry_class_valid(g, colors, 2) &&
                    cherry_class_valid(g, colors, 3)) {
                    if (mono) {
                        report.mono_extendable[cx - 1] = true;
                        if (!report.witnesses[cx - 1]) report.witnesses[cx - 1] = colors;
                    } else {
                        report.bi_non_extendable = false;
                    }
                }
            }
        }
    return report;
}

GStar build_gstar(const Graph& cubic, const Gadget& gadget) {
    for (int v = 0; v < cubic.vertex_count(); ++v)
        if (cubic.degree(v) != 3)
            fail(ErrorKind::InvalidArgument, "build_gstar requires a 3-regular graph");
    if (!validate_gadget_shape(gadget).empty())
        fail(ErrorKind::InvalidArgument, "build_gstar requires a conformant gadget");

    const int v0 = cubic.vertex_count();
    const int internals = static_cast<int>(gadget.internal_labels.size());
    const int s_offset = gadget.id_of("S") - 2;
    GStar out;
    std::vector<Edge> star_edges;
    for (int j = 0; j < cubic.edge_count(); ++j) {
        const Edge host_edge = cubic.edges()[j];
        GadgetInstance inst;
        inst.original = host_edge;
        for (int t = 0; t < internals; ++t)
            inst.internal_ids.push_back(v0 + internals * j + t);
        inst.s_id = inst.internal_ids[s_offset];
        auto translate = [&](int id) {
            if (id == Gadget::kAttachA) return host_edge.u;
            if (id == Gadget::kAttachB) return host_edge.v;
            return inst.internal_ids[id - 2];
        };
        for (const Edge& e : gadget.edges)
            star_edges.emplace_back(translate(e.u), translate(e.v));
        out.instances.push_back(std::move(inst));
    }
    out.graph = Graph(v0 + internals * cubic.edge_count(), std::move(star_edges));
    return out;
}

Partition extend_coloring(const Graph& cubic, const std::vector<int>& edge_colors,
                          const Gadget& gadget, const GadgetColorReport& report) {
    if (static_cast<int>(edge_colors.size()) != cubic.edge_count())
        fail(ErrorKind::InvalidArgument, "one color per host edge required");
    for (int v = 0; v < cubic.vertex_count(); ++v) {
        int seen = 0;
        for (int j = 0; j < cubic.edge_count(); ++j) {
            const Edge& e = cubic.edges()[j];
            if (e.u != v && e.v != v) continue;
            const int c = edge_colors[j];
            if (c < 1 || c > 3 || (seen & (1 << c)))
                fail(ErrorKind::InvalidArgument, "not a proper 3-edge-coloring");
            seen |= 1 << c;
        }
    }
    for (int c = 0; c < 3; ++c)
        if (!report.witnesses[c])
            fail(ErrorKind::InvalidArgument, "report lacks a witness coloring for color " +
                                                 std::to_string(c + 1));

    GStar gs = build_gstar(cubic, gadget);
    std::vector<std::vector<Edge>> classes(3);
    for (int j = 0; j < cubic.edge_count(); ++j) {
        const GadgetInstance& inst = gs.instances[j];
        const std::vector<int>& w = *report.witnesses[edge_colors[j] - 1];
        auto translate = [&](int id) {
            if (id == Gadget::kAttachA) return inst.original.u;
            if (id == Gadget::kAttachB) return inst.original.v;
            return inst.internal_ids[id - 2];
        };
        for (std::size_t ge = 0; ge < gadget.edges.size(); ++ge)
            classes[w[ge] - 1].emplace_back(translate(gadget.edges[ge].u),
                                            translate(gadget.edges[ge].v));
    }
    Partition p{std::move(gs.graph), {}};
    for (auto& c : classes) p.templates.emplace_back(std::move(c));
    return p;
}

std::vector<int> extract_coloring(const GStar& gstar, const Partition& partition) {
    if (partition.templates.size() != 3)
        fail(ErrorKind::InvalidArgument, "expected exactly 3 templates");
    const ClassSpec cherry_orchard{Pattern::P4, Pattern::S4, Pattern::C4};
    if (!verify_partition(partition, cherry_orchard).valid)
        fail(ErrorKind::InvalidArgument, "partition is not a valid cherry-orchard partition");

    // Owner template per G* edge.
    std::vector<int> owner(gstar.graph.edge_count(), -1);
    const auto& host_edges = gstar.graph.edges();
    auto index_of = [&host_edges](const Edge& e) {
        return static_cast<int>(
            std::lower_bound(host_edges.begin(), host_edges.end(), e) - host_edges.begin());
    };
    for (int t = 0; t < 3; ++t)
        for (const Edge& e : partition.templates[t].edges) owner[index_of(e)] = t;

    std::vector<int> colors;
    int max_vertex = -1;
    for (const GadgetInstance& inst : gstar.instances) {
        const int ox = owner[index_of(Edge(inst.s_id, inst.original.u))];
        const int oy = owner[index_of(Edge(inst.s_id, inst.original.v))];
        if (ox != oy)
            fail(ErrorKind::InternalInconsistency,
                 "gadget legs received different colors");
        colors.push_back(ox + 1);
        max_vertex = std::max({max_vertex, inst.original.u, inst.original.v});
    }

    // The recovered coloring must be proper on the original graph.
    std::vector<std::array<bool, 4>> used(max_vertex + 1, {false, false, false, false});
    for (std::size_t j = 0; j < gstar.instances.size(); ++j) {
        const Edge& e = gstar.instances[j].original;
        const int c = colors[j];
        if (used[e.u][c] || used[e.v][c])
            fail(ErrorKind::InternalInconsistency, "recovered coloring is not proper");
        used[e.u][c] = used[e.v][c] = true;
    }
    return colors;
}

} // namespace bipart
