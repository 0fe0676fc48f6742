#include "doctest.h"

#include "bipart/bounds.hpp"
#include "bipart/constructions.hpp"
#include "bipart/error.hpp"
#include "bipart/solver.hpp"
#include "bipart/verifier.hpp"

#include "testutil.hpp"

using namespace bipart;

TEST_CASE("exists_partition basics") {
    const Graph k3 = complete_graph(3);
    CHECK(exists_partition(k3, ClassSpec{}, 1).status == SearchStatus::Infeasible);
    const auto two = exists_partition(k3, ClassSpec{}, 2);
    REQUIRE(two.status == SearchStatus::Found);
    CHECK(verify_partition(*two.witness, ClassSpec{}).valid);

    const auto ds = exists_partition(complete_graph(6), ClassSpec{Pattern::TwoK2, Pattern::C4}, 3);
    REQUIRE(ds.status == SearchStatus::Found);
    CHECK(verify_partition(*ds.witness, ClassSpec{Pattern::TwoK2, Pattern::C4}).valid);
    CHECK(ds.witness->templates.size() <= 3);
}

TEST_CASE("chi_prime frozen examples") {
    const auto r1 = chi_prime(complete_graph(4), ClassSpec{Pattern::TwoK2});
    REQUIRE(!r1.budget_exhausted());
    CHECK(r1.result->chi == 2);

    const auto r2 = chi_prime(complete_graph(5), ClassSpec{Pattern::K2K1});
    CHECK(r2.result->chi == 4);

    const auto r3 = chi_prime(complete_graph(4), ClassSpec{Pattern::P3});
    CHECK(r3.result->chi == 3);

    CHECK_THROWS_AS(chi_prime(Graph(3), ClassSpec{}), Error);
}

TEST_CASE("brute force oracle frozen examples") {
    CHECK(brute_force_oracle(complete_graph(4), ClassSpec{}) == 2);
    CHECK(brute_force_oracle(complete_graph(4), ClassSpec{Pattern::K2K1, Pattern::P3}) == 6);
    CHECK(brute_force_oracle(pattern_graph(Pattern::P3), ClassSpec{Pattern::P3}) == 2);
    CHECK_THROWS_AS(brute_force_oracle(complete_graph(6), ClassSpec{}), Error);
}

TEST_CASE("odd-n S4 values: the bipartite requirement forces ceil(n/2)") {
    // Spanning cycles of odd order are odd cycles, so only path unions
    // remain and 10 edges cannot fit into two 4-edge templates.
    CHECK(brute_force_oracle(complete_graph(5), ClassSpec{Pattern::S4}) == 3);
    CHECK(brute_force_oracle(complete_graph(5), ClassSpec{Pattern::C4, Pattern::S4}) == 3);
    CHECK(brute_force_oracle(complete_graph(4), ClassSpec{Pattern::S4}) == 2);
    CHECK(brute_force_oracle(complete_graph(3), ClassSpec{Pattern::S4}) == 2);
}

TEST_CASE("solver agrees with the oracle across the battery and all classes") {
    for (const Graph& host : testutil::oracle_battery()) {
        if (host.edge_count() > 10 || host.edge_count() == 0) continue;
        for (const ClassSpec& spec : registry_classes()) {
            const int expected = brute_force_oracle(host, spec);
            const auto got = chi_prime(host, spec);
            REQUIRE(!got.budget_exhausted());
            CHECK(got.result->chi == expected);
            CHECK(verify_partition(got.result->witness, spec).valid);
            CHECK(static_cast<long long>(got.result->witness.templates.size()) ==
                  got.result->chi);
        }
    }
}

TEST_CASE("repairability prune never changes results") {
    SolverOptions pruned;
    pruned.repairability_prune = true;
    for (const Graph& host : {complete_graph(4), complete_graph(5),
                              Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}})}) {
        for (const ClassSpec& spec : registry_classes()) {
            const auto plain = chi_prime(host, spec);
            const auto fast = chi_prime(host, spec, {}, pruned);
            REQUIRE(!plain.budget_exhausted());
            REQUIRE(!fast.budget_exhausted());
            CHECK(plain.result->chi == fast.result->chi);
            // identical witnesses: the prune only removes dead branches
            CHECK(plain.result->witness.templates.size() ==
                  fast.result->witness.templates.size());
            for (std::size_t i = 0; i < plain.result->witness.templates.size(); ++i)
                CHECK(plain.result->witness.templates[i].edges ==
                      fast.result->witness.templates[i].edges);
        }
    }
}

TEST_CASE("determinism: identical inputs give identical witnesses") {
    const auto a = chi_prime(complete_graph(5), ClassSpec{Pattern::TwoK2, Pattern::C4});
    const auto b = chi_prime(complete_graph(5), ClassSpec{Pattern::TwoK2, Pattern::C4});
    REQUIRE(!a.budget_exhausted());
    CHECK(a.result->chi == b.result->chi);
    for (std::size_t i = 0; i < a.result->witness.templates.size(); ++i)
        CHECK(a.result->witness.templates[i].edges == b.result->witness.templates[i].edges);
}

TEST_CASE("budget exhaustion is reported, never a wrong answer") {
    SearchBudget tiny;
    tiny.max_nodes = 5;
    const auto r = chi_prime(complete_graph(6), ClassSpec{Pattern::K2K1}, tiny);
    CHECK(r.budget_exhausted());
}

TEST_CASE("chi_prime on the 2K2 class stays inside the certified bounds") {
    for (int n : {4, 5, 6}) {
        const auto b = ferrers_bounds(n);
        const auto r = chi_prime(complete_graph(n), ClassSpec{Pattern::TwoK2});
        REQUIRE(!r.budget_exhausted());
        CHECK(r.result->chi >= b.lower);
        CHECK(r.result->chi <= *b.upper);
    }
}

TEST_CASE("chi_prime on the C4 class respects its lower bounds") {
    for (int n : {4, 5}) {
        const auto r = chi_prime(complete_graph(n), ClassSpec{Pattern::C4});
        REQUIRE(!r.budget_exhausted());
        CHECK(r.result->chi >= log_lower(n));
        CHECK(r.result->chi == brute_force_oracle(complete_graph(n), ClassSpec{Pattern::C4}));
    }
}

TEST_CASE("custom pattern specs flow through solver and oracle") {
    // Forbid the 5-cycle as a custom pattern; any bipartite template is
    // automatically free of it, so values match the unconstrained class.
    ClassSpec spec;
    std::vector<Edge> c5;
    for (int i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
    spec.custom.push_back(Graph(5, std::move(c5)));
    CHECK(brute_force_oracle(complete_graph(4), spec) == 2);
    CHECK(chi_prime(complete_graph(4), spec).result->chi == 2);
}
