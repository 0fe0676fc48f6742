#include "doctest.h"

#include "bipart/bounds.hpp"
#include "bipart/constructions.hpp"
#include "bipart/error.hpp"
#include "bipart/ferrers.hpp"
#include "bipart/verifier.hpp"

#include "testutil.hpp"

#include <cmath>
#include <random>

using namespace bipart;

namespace {

void check_valid(const Partition& p, const ClassSpec& spec) {
    const auto report = verify_partition(p, spec);
    if (!report.valid) {
        for (const auto& v : report.violations)
            MESSAGE("violation: template " << v.template_index << " "
                                           << violation_kind_name(v.kind) << " " << v.detail);
    }
    CHECK(report.valid);
}

} // namespace

TEST_CASE("matchings: counts and validity") {
    CHECK(build_matchings(4).templates.size() == 3);
    CHECK(build_matchings(5).templates.size() == 5);
    CHECK(build_matchings(2).templates.size() == 1);
    CHECK_THROWS_AS(build_matchings(1), Error);
    for (int n : {2, 3, 4, 5, 6, 7, 12, 13}) {
        const Partition p = build_matchings(n);
        check_valid(p, ClassSpec{Pattern::P3});
        for (const auto& t : p.templates) {
            const auto label = classify_template(t);
            CHECK((label == TemplateLabel::Matching || label == TemplateLabel::SingleEdge));
        }
    }
}

TEST_CASE("single edges") {
    CHECK(build_single_edges(3).templates.size() == 3);
    CHECK(build_single_edges(5).templates.size() == 10);
    CHECK(build_single_edges(2).templates.size() == 1);
    check_valid(build_single_edges(5), ClassSpec{Pattern::K2K1, Pattern::P3});
}

TEST_CASE("stars") {
    CHECK(build_gp_stars(5).templates.size() == 4);
    CHECK(build_gp_stars(2).templates.size() == 1);
    const Partition p = build_gp_stars(4);
    CHECK(p.templates[0].edges == std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}});
    check_valid(p, ClassSpec{Pattern::K2K1});
    check_valid(p, ClassSpec{Pattern::TwoK2, Pattern::C4, Pattern::P4});
    check_valid(p, ClassSpec{Pattern::TwoK2, Pattern::P4});
    for (const auto& t : build_gp_stars(7).templates) {
        const auto label = classify_template(t);
        CHECK((label == TemplateLabel::Star || label == TemplateLabel::Cherry ||
               label == TemplateLabel::SingleEdge));
    }
}

TEST_CASE("complete bipartite orchards") {
    CHECK(build_cbip_orchards(8).templates.size() == 3);
    CHECK(build_cbip_orchards(2).templates.size() == 1);
    CHECK(build_cbip_orchards(5).templates.size() == 3);
    for (int n : {2, 3, 5, 8, 9, 16, 33}) {
        const Partition p = build_cbip_orchards(n);
        CHECK(static_cast<long long>(p.templates.size()) == log_lower(n));
        check_valid(p, ClassSpec{Pattern::P4});
        check_valid(p, ClassSpec{}); // also serves the unconstrained class
    }
}

TEST_CASE("grid construction for 2K2") {
    const Partition p4 = build_ferrers(4);
    REQUIRE(p4.templates.size() == 2);
    CHECK(p4.templates[0].edges == std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
    CHECK(p4.templates[1].edges == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});

    CHECK(build_ferrers(16).templates.size() == 6);
    const Partition p5 = build_ferrers(5);
    CHECK(p5.templates.size() <= 4);
    check_valid(p5, ClassSpec{Pattern::TwoK2});

    for (int n : {2, 3, 4, 5, 6, 9, 10, 16, 17, 25, 48, 49}) {
        const Partition p = build_ferrers(n);
        CHECK(p.templates.size() <= 2u * static_cast<unsigned>(std::ceil(std::sqrt(n))) - 2);
        check_valid(p, ClassSpec{Pattern::TwoK2});
        int edges = 0;
        for (const auto& t : p.templates) {
            CHECK(is_ferrers(implied_graph(t).graph).has_value());
            edges += t.edge_count();
        }
        CHECK(edges == n * (n - 1) / 2);
    }
}

TEST_CASE("grid construction nestedness follows the column order") {
    // In the first descent template of the 4x4 grid, neighborhoods grow
    // with the row index.
    const Partition p = build_ferrers(16);
    const ImpliedGraph ig = implied_graph(p.templates[0]);
    const auto order = is_ferrers(ig.graph);
    REQUIRE(order.has_value());
    // Column-1 vertices are ids 0..3 (rows 1..4); they sit on one side and
    // their degrees are nondecreasing with the row.
    const Graph reference = ig.graph;
    for (std::size_t i = 1; i < order->size(); ++i)
        CHECK(reference.degree((*order)[i - 1]) <= reference.degree((*order)[i]));
}

TEST_CASE("hamiltonian paths") {
    CHECK(build_hamiltonian(6).templates.size() == 3);
    CHECK(build_hamiltonian(4).templates.size() == 2);
    CHECK_THROWS_AS(build_hamiltonian(2), Error);
    for (int n : {4, 6, 8, 10, 20}) { // even: ceil((n-1)/2) path templates
        const Partition p = build_hamiltonian(n);
        CHECK(p.templates.size() == static_cast<std::size_t>(n / 2));
        check_valid(p, ClassSpec{Pattern::S4});
        if (n > 4) check_valid(p, ClassSpec{Pattern::C4, Pattern::S4});
        for (const auto& t : p.templates)
            CHECK(classify_template(t) == TemplateLabel::Path);
    }
    for (int n : {3, 5, 7, 9, 21}) { // odd: spanning cycles are not bipartite,
        const Partition p = build_hamiltonian(n);   // so one extra template
        CHECK(p.templates.size() == static_cast<std::size_t>((n + 1) / 2));
        check_valid(p, ClassSpec{Pattern::S4});
        if (n > 4) check_valid(p, ClassSpec{Pattern::C4, Pattern::S4});
    }
}

TEST_CASE("double stars") {
    CHECK(build_double_stars(6).templates.size() == 3);
    CHECK(build_double_stars(4).templates.size() == 2);
    CHECK(build_double_stars(7).templates.size() == 4);
    const Partition p4 = build_double_stars(4);
    CHECK(p4.templates[0].edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
    for (int n : {2, 3, 4, 5, 6, 7, 8, 13, 20}) {
        const Partition p = build_double_stars(n);
        CHECK(p.templates.size() == static_cast<std::size_t>((n + 1) / 2));
        check_valid(p, ClassSpec{Pattern::TwoK2, Pattern::C4});
        for (const auto& t : p.templates) {
            const auto label = classify_template(t);
            CHECK((label == TemplateLabel::DoubleStar || label == TemplateLabel::Star ||
                   label == TemplateLabel::Path || label == TemplateLabel::Cherry ||
                   label == TemplateLabel::SingleEdge));
        }
    }
}

TEST_CASE("star orchards") {
    CHECK(build_star_orchards(6).templates.size() == 4);
    CHECK(build_star_orchards(4).templates.size() == 3);
    CHECK(build_star_orchards(5).templates.size() == 4);
    CHECK_THROWS_AS(build_star_orchards(3), Error);
    for (int n : {4, 5, 6, 7, 8, 12, 19}) {
        const Partition p = build_star_orchards(n);
        CHECK(p.templates.size() == static_cast<std::size_t>((n + 1) / 2 + 1));
        check_valid(p, ClassSpec{Pattern::C4, Pattern::P4});
    }
}

TEST_CASE("cherry orchards") {
    CHECK(build_cherry_orchards(3).templates.size() == 2);
    CHECK(build_cherry_orchards(9).templates.size() == 8);
    const ClassSpec spec{Pattern::C4, Pattern::P4, Pattern::S4};
    for (int n : {3, 9, 27}) {
        const Partition p = build_cherry_orchards(n);
        long long log3 = 0;
        for (long long pw = 1; pw < n; pw *= 3) ++log3;
        CHECK(static_cast<long long>(p.templates.size()) <= (3 * n + 3) / 4 + 2 * log3);
        check_valid(p, spec);
        for (const auto& t : p.templates) {
            const auto label = classify_template(t);
            CHECK((label == TemplateLabel::CherryOrchard || label == TemplateLabel::Cherry ||
                   label == TemplateLabel::Matching || label == TemplateLabel::SingleEdge));
        }
    }
    // padding path
    for (int n : {4, 5, 10, 26}) check_valid(build_cherry_orchards(n), spec);
    // count budget alone at the larger powers
    for (int n : {81, 243}) {
        long long log3 = 0;
        for (long long pw = 1; pw < n; pw *= 3) ++log3;
        CHECK(static_cast<long long>(build_cherry_orchards(n).templates.size()) <=
              (3 * n + 3) / 4 + 2 * log3);
    }
    check_valid(build_cherry_orchards(81), spec);
}

TEST_CASE("C4 decompositions (n = 1 mod 8)") {
    CHECK_THROWS_AS(build_c4_decomposition(8), Error);
    try {
        build_c4_decomposition(8);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedParameter);
    }
    for (int n : {9, 17, 25}) {
        const Partition p = build_c4_decomposition(n);
        CHECK(p.templates.size() == static_cast<std::size_t>(n * (n - 1) / 8));
        check_valid(p, ClassSpec{Pattern::S4, Pattern::TwoK2});
        check_valid(p, ClassSpec{Pattern::S4, Pattern::TwoK2, Pattern::P4});
        for (const auto& t : p.templates) {
            CHECK(t.edge_count() == 4);
            CHECK(classify_template(t) == TemplateLabel::Cycle);
        }
    }
}

TEST_CASE("P4 path partitions (n = 3 mod 6)") {
    CHECK_THROWS_AS(build_p4_paths(5), Error);
    CHECK_THROWS_AS(build_p4_paths(3), Error);
    for (int n : {9, 15}) {
        const Partition p = build_p4_paths(n);
        CHECK(p.templates.size() == static_cast<std::size_t>(n * (n - 1) / 6));
        check_valid(p, ClassSpec{Pattern::C4, Pattern::S4, Pattern::TwoK2});
        for (const auto& t : p.templates) CHECK(classify_template(t) == TemplateLabel::Path);
    }
}

TEST_CASE("C4 orchards (n = 0 mod 4)") {
    CHECK_THROWS_AS(build_c4_orchards(6), Error);
    const Partition p4 = build_c4_orchards(4);
    CHECK(p4.templates.size() == 2);
    check_valid(p4, ClassSpec{Pattern::P4, Pattern::S4});
    for (int n : {4, 8, 12, 16}) {
        const Partition p = build_c4_orchards(n);
        CHECK(p.templates.size() == static_cast<std::size_t>(n / 2));
        check_valid(p, ClassSpec{Pattern::P4, Pattern::S4});
        int c4_factors = 0;
        for (const auto& t : p.templates) {
            const auto label = classify_template(t);
            if (label == TemplateLabel::C4Orchard || label == TemplateLabel::Cycle ||
                label == TemplateLabel::CompleteBipartite)
                ++c4_factors;
            else
                CHECK(label == TemplateLabel::Matching);
        }
        CHECK(c4_factors == n / 2 - 1);
    }
}

TEST_CASE("cherries") {
    CHECK(build_cherries(complete_graph(4)).templates.size() == 3);
    CHECK(build_cherries(complete_graph(5)).templates.size() == 5);
    CHECK(build_cherries(pattern_graph(Pattern::P3)).templates.size() == 1);
    CHECK_THROWS_AS(build_cherries(Graph(3)), Error);
    CHECK_THROWS_AS(build_cherries(pattern_graph(Pattern::TwoK2)), Error);

    const ClassSpec spec{Pattern::P4, Pattern::C4, Pattern::S4, Pattern::TwoK2};
    for (int n = 2; n <= 14; ++n) {
        const Partition p = build_cherries(complete_graph(n));
        CHECK(p.templates.size() == static_cast<std::size_t>((n * (n - 1) / 2 + 1) / 2));
        check_valid(p, spec);
    }
}

TEST_CASE("cherries: exhaustive sweep over connected even graphs") {
    // All labeled connected graphs on up to 6 vertices with even edge count
    // decompose into exactly e/2 two-edge paths.
    for (int n = 2; n <= 6; ++n) {
        const std::uint64_t total = 1ULL << testutil::pair_count(n);
        for (std::uint64_t mask = 1; mask < total; ++mask) {
            const Graph g = testutil::graph_from_mask(n, mask);
            if (g.edge_count() % 2 != 0 || !edges_connected(g)) continue;
            const Partition p = build_cherries(g);
            CHECK(static_cast<int>(p.templates.size()) == g.edge_count() / 2);
            CHECK(verify_partition(p, ClassSpec{Pattern::P4, Pattern::C4, Pattern::S4,
                                                Pattern::TwoK2})
                      .valid);
            for (const auto& t : p.templates)
                CHECK(classify_template(t) == TemplateLabel::Cherry);
        }
    }
    // On 7 vertices, every connected even graph still splits into adjacent
    // pairs; a mask check covers disjointness and coverage cheaply.
    {
        const int n = 7;
        long long swept = 0;
        for (std::uint64_t mask = 1; mask < (1ULL << testutil::pair_count(n)); ++mask) {
            const Graph g = testutil::graph_from_mask(n, mask);
            if (g.edge_count() % 2 != 0 || !edges_connected(g)) continue;
            ++swept;
            const Partition p = build_cherries(g);
            REQUIRE(static_cast<int>(p.templates.size()) == g.edge_count() / 2);
            std::uint64_t covered = 0;
            bool cherries_only = true;
            for (const auto& t : p.templates) {
                REQUIRE(t.edges.size() == 2);
                const Edge &a = t.edges[0], &b = t.edges[1];
                cherries_only &= (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
                for (const Edge& e : t.edges) {
                    int bit = 0, idx = -1;
                    for (int u = 0; u < n && idx < 0; ++u)
                        for (int v = u + 1; v < n; ++v, ++bit)
                            if (u == e.u && v == e.v) idx = bit;
                    REQUIRE(!(covered & (1ULL << idx))); // disjoint
                    covered |= 1ULL << idx;
                }
            }
            CHECK(cherries_only);
            REQUIRE(covered == mask); // exact coverage
        }
        CHECK(swept > 0);
    }
}

TEST_CASE("cherries: odd edge counts on awkward hosts") {
    // A path whose lowest edge disconnects it into two odd halves.
    const Graph awkward(4, {{0, 1}, {0, 2}, {1, 3}});
    const Partition p = build_cherries(awkward);
    CHECK(p.templates.size() == 2);
    CHECK(verify_partition(p, ClassSpec{Pattern::P4, Pattern::C4, Pattern::S4,
                                        Pattern::TwoK2})
              .valid);

    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = 5 + static_cast<int>(rng() % 3);
        const Graph g =
            testutil::graph_from_mask(n, rng() & ((1ULL << testutil::pair_count(n)) - 1));
        if (g.edge_count() == 0 || !edges_connected(g)) continue;
        const Partition p2 = build_cherries(g);
        CHECK(static_cast<int>(p2.templates.size()) == (g.edge_count() + 1) / 2);
        CHECK(verify_partition(p2, ClassSpec{Pattern::P4, Pattern::C4, Pattern::S4,
                                             Pattern::TwoK2})
                  .valid);
    }
}

TEST_CASE("restriction closure for every builder") {
    using P = Pattern;
    const std::vector<std::pair<Partition, ClassSpec>> cases = {
        {build_matchings(9), {P::P3}},
        {build_single_edges(6), {P::K2K1, P::P3}},
        {build_gp_stars(9), {P::K2K1}},
        {build_cbip_orchards(9), {P::P4}},
        {build_ferrers(9), {P::TwoK2}},
        {build_hamiltonian(9), {P::S4}},
        {build_hamiltonian(10), {P::C4, P::S4}},
        {build_double_stars(10), {P::TwoK2, P::C4}},
        {build_star_orchards(9), {P::C4, P::P4}},
        {build_cherry_orchards(9), {P::C4, P::P4, P::S4}},
        {build_c4_decomposition(9), {P::S4, P::TwoK2}},
        {build_p4_paths(9), {P::C4, P::S4, P::TwoK2}},
        {build_c4_orchards(8), {P::P4, P::S4}},
        {build_cherries(complete_graph(9)), {P::P4, P::C4, P::S4, P::TwoK2}},
    };
    for (const auto& [p, spec] : cases) {
        const int n = p.host.vertex_count();
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (v != drop) keep.push_back(v);
            CHECK(verify_partition(restrict_to_subset(p, keep), spec).valid);
        }
    }
}

TEST_CASE("construct dispatcher") {
    CHECK(construct(ClassSpec{Pattern::TwoK2}, 16).templates.size() == 6);
    CHECK(construct(ClassSpec{Pattern::P3}, 4).templates.size() == 3);
    CHECK_THROWS_AS(construct(ClassSpec{Pattern::C4}, 10), Error);
    try {
        construct(ClassSpec{Pattern::C4}, 10);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedClass);
    }
    try {
        construct(ClassSpec{Pattern::S4, Pattern::TwoK2}, 8);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedParameter);
    }
    // every registry class with a construction verifies and matches the
    // tabulated count at a mid-size n
    for (const ClassSpec& spec : registry_classes()) {
        const auto entry = construction_for(spec);
        if (!entry) continue;
        for (int n = 2; n <= 20; ++n) {
            if (!entry->supported(n)) continue;
            const Partition p = construct(spec, n);
            check_valid(p, spec);
            if (const auto kv = known_value(spec, n))
                CHECK(static_cast<long long>(p.templates.size()) == *kv);
        }
    }
}
