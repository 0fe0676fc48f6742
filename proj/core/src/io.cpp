#include "bipart/io.hpp"

#include "bipart/error.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <fstream>
#include <sstream>

using json = nlohmann::ordered_json;

namespace bipart::io {

namespace {

std::string next_content_line(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        const auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return line;
    }
    return {};
}

} // namespace

// Hosts handled by this toolkit stay at desk scale; the cap keeps broken
// headers from driving the quadratic adjacency allocation.
constexpr long long kMaxFileVertexCount = 20000;

Graph read_edge_list(std::istream& in) {
    std::istringstream header(next_content_line(in));
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        fail(ErrorKind::InvalidArgument, "edge list: bad header, expected 'n m'");
    if (n > kMaxFileVertexCount)
        fail(ErrorKind::InvalidArgument, "edge list: vertex count beyond supported scale");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::istringstream row(next_content_line(in));
        long long u = -1, v = -1;
        if (!(row >> u >> v))
            fail(ErrorKind::InvalidArgument, "edge list: missing edge line");
        if (u < 0 || v <= u || v >= n)
            fail(ErrorKind::InvalidArgument, "edge list: edge must satisfy 0 <= u < v < n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph(static_cast<int>(n), std::move(edges)); // rejects duplicates
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_partition_edge_list(std::ostream& out, const Partition& p) {
    out << "# partition into " << p.templates.size() << " templates\n";
    out << p.host.vertex_count() << ' ' << p.host.edge_count() << '\n';
    for (std::size_t i = 0; i < p.templates.size(); ++i) {
        out << "# template " << i << '\n';
        for (const Edge& e : p.templates[i].edges) out << e.u << ' ' << e.v << '\n';
    }
}

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

std::vector<Edge> edges_from_json(const json& arr) {
    std::vector<Edge> edges;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2)
            fail(ErrorKind::InvalidArgument, "partition json: edge must be a pair");
        edges.emplace_back(item[0].get<int>(), item[1].get<int>());
    }
    return edges;
}

} // namespace

std::string partition_to_json(const Partition& p, const ClassSpec& spec) {
    json doc;
    doc["host"] = {{"n", p.host.vertex_count()}, {"edges", edges_to_json(p.host.edges())}};
    json forb = json::array();
    for (Pattern pat : spec.named) forb.push_back(pattern_name(pat));
    doc["forbidden"] = forb;
    json templates = json::array();
    for (const TemplateGraph& t : p.templates)
        templates.push_back({{"edges", edges_to_json(t.edges)}});
    doc["templates"] = templates;
    return doc.dump(2) + "\n";
}

PartitionFile partition_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("partition json: ") + e.what());
    }
    try {
        PartitionFile out;
        const auto& host = doc.at("host");
        const long long n = host.at("n").get<long long>();
        if (n < 0 || n > kMaxFileVertexCount)
            fail(ErrorKind::InvalidArgument, "partition json: vertex count out of range");
        out.partition.host = Graph(static_cast<int>(n), edges_from_json(host.at("edges")));
        if (doc.contains("forbidden")) {
            std::vector<Pattern> named;
            for (const auto& name : doc.at("forbidden")) {
                const auto p = pattern_from_name(name.get<std::string>());
                if (!p)
                    fail(ErrorKind::InvalidArgument,
                         "partition json: unknown pattern " + name.get<std::string>());
                named.push_back(*p);
            }
            out.spec = ClassSpec(std::move(named));
        }
        for (const auto& t : doc.at("templates"))
            out.partition.templates.emplace_back(edges_from_json(t.at("edges")));
        return out;
    } catch (const json::exception& e) {
        fail(ErrorKind::InvalidArgument, std::string("partition json: ") + e.what());
    }
}

PartitionFile read_partition_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return partition_from_json(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
    out << text;
}

void write_partition_dot(std::ostream& out, const Partition& p) {
    static const std::array<const char*, 12> palette = {
        "red",      "blue",   "forestgreen", "orange",  "purple",   "brown",
        "deeppink", "teal",   "goldenrod",   "navy",    "crimson",  "darkcyan"};
    out << "graph partition {\n  node [shape=circle];\n";
    for (std::size_t i = 0; i < p.templates.size(); ++i)
        for (const Edge& e : p.templates[i].edges)
            out << "  " << e.u << " -- " << e.v << " [color=" << palette[i % palette.size()]
                << " label=" << i << "];\n";
    out << "}\n";
}

std::string verify_report_to_json(const VerifyReport& report) {
    json doc;
    doc["valid"] = report.valid;
    json viols = json::array();
    for (const Violation& v : report.violations) {
        json item;
        item["templateIndex"] = v.template_index;
        item["kind"] = violation_kind_name(v.kind);
        item["vertices"] = v.vertices;
        item["edges"] = edges_to_json(v.edges);
        item["detail"] = v.detail;
        viols.push_back(item);
    }
    doc["violations"] = viols;
    return doc.dump(2) + "\n";
}

} // namespace bipart::io
