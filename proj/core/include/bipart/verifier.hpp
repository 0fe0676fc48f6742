#pragma once

#include "bipart/class_spec.hpp"
#include "bipart/graph.hpp"
#include "bipart/matching.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bipart {

/// One edge class of a partition, in host coordinates.  Its implied graph
/// is spanned by the edge endpoints; isolated vertices never occur.
struct TemplateGraph {
    std::vector<Edge> edges; // sorted, unique

    explicit TemplateGraph(std::vector<Edge> e = {});
    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Compact form of a template's implied graph.
struct ImpliedGraph {
    Graph graph;                 // relabeled 0..k-1
    std::vector<int> vertex_map; // new label -> host label, ascending
};

ImpliedGraph implied_graph(const TemplateGraph& t);

struct Partition {
    Graph host;
    std::vector<TemplateGraph> templates;
};

enum class ViolationKind {
    ForeignEdge,
    Overlap,
    UncoveredEdge,
    NotBipartite,
    InducedPattern,
    EmptyTemplate
};

std::string violation_kind_name(ViolationKind k);

struct Violation {
    int template_index = -1; // -1 for host-level findings
    ViolationKind kind;
    std::vector<int> vertices; // witness vertices (host labels), may be empty
    std::vector<Edge> edges;   // witness edges, may be empty
    std::string detail;
};

struct VerifyReport {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Full check of a claimed partition: template edges belong to the host, no
/// edge claimed twice, every host edge covered, each template bipartite and
/// free of every forbidden pattern (checked on its implied graph).  All
/// violations are collected; pattern checks are skipped for templates that
/// already failed bipartiteness.
VerifyReport verify_partition(const Partition& p, const ClassSpec& spec);

/// Structural label of a template, most specific first.
enum class TemplateLabel {
    SingleEdge,
    Cherry,
    Matching,
    Star,
    Path,
    Cycle,
    DoubleStar,
    CompleteBipartite,
    CherryOrchard,
    StarOrchard,
    C4Orchard,
    CompleteBipartiteOrchard,
    Ferrers,
    Bipartite,
    NonBipartite
};

std::string template_label_name(TemplateLabel label);
TemplateLabel classify_template(const TemplateGraph& t);

/// Per-vertex bit vectors recording the side each vertex takes in each
/// template's canonical bipartition (vertices absent from a template sit on
/// side A).  Property (i) asks all vectors to be pairwise distinct.
struct ClassVectors {
    std::vector<std::vector<uint8_t>> bits; // [vertex][template] in {0,1}
    bool all_distinct = true;
    std::optional<std::pair<int, int>> clash; // first equal pair, if any
};

ClassVectors class_vectors(const Partition& p);

/// Number of templates whose implied graph has a matching of size >= m.
int count_large_templates(const Partition& p, int m);

/// Restriction of a partition to the first n host vertices; empty templates
/// are dropped.  The host must be complete for the result host to be K_n.
Partition restrict_to_prefix(const Partition& p, int n);

/// Restriction to an arbitrary vertex subset, with relabeling.
Partition restrict_to_subset(const Partition& p, const std::vector<int>& keep);

} // namespace bipart
