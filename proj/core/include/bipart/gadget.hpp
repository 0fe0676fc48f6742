#pragma once

#include "bipart/graph.hpp"
#include "bipart/verifier.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bipart {

/// Edge-substitution widget for the cherry-partition reduction.  Vertex ids:
/// 0 = attachment A, 1 = attachment B, 2.. = internal vertices in file
/// order; the labels "S", "P" and "Q" must be present among the internals.
struct Gadget {
    std::vector<std::string> internal_labels;
    std::vector<Edge> edges; // over ids, exactly the file's edge list

    static constexpr int kAttachA = 0;
    static constexpr int kAttachB = 1;

    int id_of(const std::string& label) const; // -1 when absent
    int vertex_count() const { return 2 + static_cast<int>(internal_labels.size()); }
};

Gadget gadget_from_json(const std::string& text);
Gadget load_gadget_file(const std::string& path);
std::string gadget_to_json(const Gadget& g);

/// Shape constraints: 9 internal vertices, 14 edges, legs (S,A) and (S,B),
/// attachments of degree 1, deg(S)=4 with neighbors {A,B,P,Q}, deg(P)=6,
/// deg(Q)=5, and the edge (P,Q).  Returns the violated constraints.
std::vector<std::string> validate_gadget_shape(const Gadget& g);

/// Exhaustive coloring census.  A coloring of the 14 gadget edges with 3
/// colors is valid when every color class is a disjoint union of single
/// edges and two-edge paths.  mono_extendable[c]: some valid coloring gives
/// both legs color c; bi_non_extendable: no valid coloring colors the legs
/// differently.
struct GadgetColorReport {
    std::array<bool, 3> mono_extendable{false, false, false};
    bool bi_non_extendable = true;
    // Per color, one full edge coloring (values 1..3, file edge order).
    std::array<std::optional<std::vector<int>>, 3> witnesses;
};

GadgetColorReport gadget_color_property(const Gadget& g);

/// Whether one color class, given as per-edge booleans, is a disjoint union
/// of K2 and P3 pieces.
bool cherry_class_valid(const Gadget& g, const std::vector<int>& colors, int color);

struct GadgetInstance {
    Edge original;                // host edge (u < v); A -> u, B -> v
    std::vector<int> internal_ids;
    int s_id = -1;                // G* id of this instance's S vertex
};

struct GStar {
    Graph graph;
    std::vector<GadgetInstance> instances; // aligned with the cubic host's edge list
};

/// Replaces every edge of a 3-regular graph with a fresh gadget copy;
/// v* = v + 9e and e* = 14e.
GStar build_gstar(const Graph& cubic, const Gadget& gadget);

/// Lifts a proper 3-edge-coloring of the cubic graph to a 3-template
/// partition of G* in which every template is a cherry orchard.
Partition extend_coloring(const Graph& cubic, const std::vector<int>& edge_colors,
                          const Gadget& gadget, const GadgetColorReport& report);

/// Reads the original coloring back off a valid 3-template cherry partition
/// of G*: both legs of every instance must sit in the same template.
std::vector<int> extract_coloring(const GStar& gstar, const Partition& partition);

} // namespace bipart
