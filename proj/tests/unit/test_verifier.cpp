#include "doctest.h"

#include "bipart/bounds.hpp"
#include "bipart/constructions.hpp"
#include "bipart/error.hpp"
#include "bipart/verifier.hpp"

#include "testutil.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace bipart;

namespace {

Partition k3_partition(std::vector<std::vector<Edge>> classes) {
    Partition p{complete_graph(3), {}};
    for (auto& c : classes) p.templates.emplace_back(std::move(c));
    return p;
}

} // namespace

TEST_CASE("verify_partition accepts a valid K_3 split") {
    const auto p = k3_partition({{{0, 1}, {1, 2}}, {{0, 2}}});
    CHECK(verify_partition(p, ClassSpec{Pattern::TwoK2}).valid);
}

TEST_CASE("verify_partition rejects a triangle template") {
    const auto p = k3_partition({{{0, 1}, {1, 2}, {0, 2}}});
    const auto report = verify_partition(p, ClassSpec{});
    CHECK(!report.valid);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::NotBipartite);
    CHECK(report.violations[0].vertices.size() == 3); // the odd cycle
}

TEST_CASE("verify_partition flags every defect kind") {
    Partition p{complete_graph(4), {}};
    p.templates.emplace_back(std::vector<Edge>{{0, 1}, {2, 3}});
    p.templates.emplace_back(std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}); // overlap on 01
    const auto report = verify_partition(p, ClassSpec{});
    CHECK(!report.valid);
    bool overlap = false, uncovered = false;
    for (const auto& v : report.violations) {
        overlap |= v.kind == ViolationKind::Overlap;
        uncovered |= v.kind == ViolationKind::UncoveredEdge; // 03 and 12 missing
    }
    CHECK(overlap);
    CHECK(uncovered);

    Partition q{complete_graph(3), {}};
    q.templates.emplace_back(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    q.templates.emplace_back(std::vector<Edge>{{0, 3}}); // foreign endpoint
    bool foreign = false;
    for (const auto& v : verify_partition(q, ClassSpec{}).violations)
        foreign |= v.kind == ViolationKind::ForeignEdge;
    CHECK(foreign);
}

TEST_CASE("verify_partition reports induced patterns on the implied graph") {
    // {01, 23} inside K_4: an induced 2K2 on the template's own vertices.
    Partition p{complete_graph(4), {}};
    p.templates.emplace_back(std::vector<Edge>{{0, 1}, {2, 3}});
    p.templates.emplace_back(std::vector<Edge>{{0, 2}, {1, 3}});
    p.templates.emplace_back(std::vector<Edge>{{0, 3}, {1, 2}});
    const auto report = verify_partition(p, ClassSpec{Pattern::TwoK2});
    CHECK(!report.valid);
    CHECK(report.violations.size() == 3);
    for (const auto& v : report.violations) {
        CHECK(v.kind == ViolationKind::InducedPattern);
        CHECK(v.detail == "2K2");
    }
    // The same partition is fine when only P3 is forbidden.
    CHECK(verify_partition(p, ClassSpec{Pattern::P3}).valid);
}

TEST_CASE("K_4 grid partition verifies as 2K2-free") {
    // Hand-applied descent/ascent rules on the 2x2 grid.
    Partition p{complete_graph(4), {}};
    p.templates.emplace_back(std::vector<Edge>{{0, 2}, {1, 2}, {1, 3}});
    p.templates.emplace_back(std::vector<Edge>{{0, 1}, {2, 3}, {0, 3}});
    CHECK(verify_partition(p, ClassSpec{Pattern::TwoK2}).valid);
    CHECK(build_ferrers(4).templates.size() == 2);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(build_ferrers(4).templates[i].edges == p.templates[i].edges);
}

TEST_CASE("classify_template labels") {
    CHECK(classify_template(TemplateGraph({{0, 1}})) == TemplateLabel::SingleEdge);
    CHECK(classify_template(TemplateGraph({{0, 1}, {2, 3}})) == TemplateLabel::Matching);
    CHECK(classify_template(TemplateGraph({{0, 1}, {0, 2}})) == TemplateLabel::Cherry);
    CHECK(classify_template(TemplateGraph({{0, 1}, {0, 2}, {0, 3}})) == TemplateLabel::Star);
    CHECK(classify_template(TemplateGraph({{0, 1}, {0, 2}, {3, 4}})) ==
          TemplateLabel::CherryOrchard);
    CHECK(classify_template(TemplateGraph({{0, 1}, {1, 2}, {2, 3}})) == TemplateLabel::Path);
    CHECK(classify_template(TemplateGraph({{0, 1}, {1, 2}, {2, 3}, {0, 3}})) ==
          TemplateLabel::Cycle);
    CHECK(classify_template(TemplateGraph({{0, 1}, {0, 2}, {1, 3}, {1, 4}})) ==
          TemplateLabel::DoubleStar);
    // K_{2,2} plus a pendant has nested neighborhoods
    CHECK(classify_template(TemplateGraph({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {0, 4}})) ==
          TemplateLabel::Ferrers);
    // two disjoint paths carry an induced pair of disjoint edges
    CHECK(classify_template(TemplateGraph(
              {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}})) ==
          TemplateLabel::Bipartite);
    CHECK(classify_template(TemplateGraph({{0, 1}, {1, 2}, {0, 2}})) ==
          TemplateLabel::Cycle); // triangle
    CHECK(classify_template(TemplateGraph(
              {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}})) ==
          TemplateLabel::C4Orchard);
    CHECK(classify_template(TemplateGraph({{0, 2}, {0, 3}, {1, 2}, {1, 3}})) ==
          TemplateLabel::Cycle); // C4 = K_{2,2}: the cycle label wins
    CHECK(classify_template(TemplateGraph({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})) ==
          TemplateLabel::CompleteBipartite); // K_{2,3}
    CHECK(classify_template(TemplateGraph({{0, 1}, {0, 2}, {0, 3}, {4, 5}, {4, 6}})) ==
          TemplateLabel::StarOrchard);
    CHECK(classify_template(TemplateGraph({{0, 2}, {0, 3}, {1, 2}, {1, 3}, {4, 5}, {4, 6}})) ==
          TemplateLabel::CompleteBipartiteOrchard);
}

TEST_CASE("class_vectors on K_2 and distinctness flag") {
    Partition p{complete_graph(2), {}};
    p.templates.emplace_back(std::vector<Edge>{{0, 1}});
    const auto cv = class_vectors(p);
    CHECK(cv.all_distinct);
    CHECK(cv.bits[0] == std::vector<uint8_t>{0});
    CHECK(cv.bits[1] == std::vector<uint8_t>{1});

    Partition bad{complete_graph(3), {}};
    bad.templates.emplace_back(std::vector<Edge>{{0, 1}, {1, 2}});
    // vertices 0 and 2 both take side A of the single template
    const auto cv2 = class_vectors(bad);
    CHECK(!cv2.all_distinct);
    REQUIRE(cv2.clash.has_value());
    CHECK(*cv2.clash == std::pair<int, int>{0, 2});

    Partition tri{complete_graph(3), {}};
    tri.templates.emplace_back(std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK_THROWS_AS(class_vectors(tri), Error);
}

TEST_CASE("class_vectors: K_4 into two bipartite templates gives all four vectors") {
    const Partition p = build_cbip_orchards(4);
    REQUIRE(p.templates.size() == 2);
    const auto cv = class_vectors(p);
    CHECK(cv.all_distinct);
    std::set<std::vector<uint8_t>> seen(cv.bits.begin(), cv.bits.end());
    CHECK(seen.size() == 4);
}

TEST_CASE("class_vectors property (ii): edge endpoints differ in their template bit") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const int t = 3 + static_cast<int>(rng() % 3);
        const Partition p = testutil::random_bipartite_partition(n, t, rng);
        const auto cv = class_vectors(p);
        for (std::size_t ti = 0; ti < p.templates.size(); ++ti)
            for (const Edge& e : p.templates[ti].edges)
                CHECK(cv.bits[e.u][ti] != cv.bits[e.v][ti]);
    }
}

TEST_CASE("count_large_templates examples") {
    Partition p{complete_graph(4), {}};
    p.templates.emplace_back(std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(count_large_templates(p, 2) == 1);

    Partition q{complete_graph(3), {}};
    q.templates.emplace_back(std::vector<Edge>{{0, 1}});
    q.templates.emplace_back(std::vector<Edge>{{1, 2}});
    q.templates.emplace_back(std::vector<Edge>{{0, 2}});
    CHECK(count_large_templates(q, 2) == 0);

    const Partition r = build_cbip_orchards(8); // 3 bipartite templates of K_8
    CHECK(count_large_templates(r, 2) >= 3);
}

TEST_CASE("verify_partition with empty spec matches an independent implementation") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 300; ++iter) {
        const int n = 6;
        const Graph host = complete_graph(n);
        const int t = 2 + static_cast<int>(rng() % 4);
        // random (frequently invalid) assignment: drop or duplicate edges
        std::vector<std::vector<Edge>> classes(t);
        for (const Edge& e : host.edges()) {
            const int roll = static_cast<int>(rng() % 12);
            if (roll == 0) continue; // uncovered
            classes[rng() % t].push_back(e);
            if (roll == 1) classes[rng() % t].push_back(e); // duplicated
        }
        Partition p{host, {}};
        for (auto& c : classes)
            if (!c.empty()) {
                std::sort(c.begin(), c.end());
                c.erase(std::unique(c.begin(), c.end()), c.end());
                p.templates.emplace_back(std::move(c));
            }
        if (p.templates.empty()) continue;
        CHECK(verify_partition(p, ClassSpec{}).valid == testutil::independent_partition_check(p));
    }
}

TEST_CASE("restriction of a valid partition stays valid (monotonicity)") {
    std::mt19937_64 rng(23);
    const ClassSpec spec{}; // bipartite-only check
    for (int n : {5, 6, 7}) {
        const Partition p = testutil::random_bipartite_partition(n, 3, rng);
        REQUIRE(verify_partition(p, spec).valid);
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < n; ++v)
                if (v != drop) keep.push_back(v);
            const Partition r = restrict_to_subset(p, keep);
            CHECK(verify_partition(r, spec).valid);
        }
    }
    // and with pattern constraints, via a construction
    const Partition ds = build_double_stars(8);
    const ClassSpec dspec{Pattern::TwoK2, Pattern::C4};
    for (int drop = 0; drop < 8; ++drop) {
        std::vector<int> keep;
        for (int v = 0; v < 8; ++v)
            if (v != drop) keep.push_back(v);
        CHECK(verify_partition(restrict_to_subset(ds, keep), dspec).valid);
    }
}
