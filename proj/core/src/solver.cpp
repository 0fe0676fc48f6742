#include "bipart/solver.hpp"

#include "bipart/bounds.hpp"
#include "bipart/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <vector>

namespace bipart {

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxSolverVertices = 64; // adjacency rows are single words

int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

// Mutable view of one edge class during the search.
struct ClassState {
    std::vector<std::uint64_t> adj;
    std::uint64_t active = 0;
    std::vector<int> edge_ids;

    explicit ClassState(int n) : adj(n, 0) {}

    void add(const Edge& e, int id) {
        adj[e.u] |= 1ULL << e.v;
        adj[e.v] |= 1ULL << e.u;
        active |= (1ULL << e.u) | (1ULL << e.v);
        edge_ids.push_back(id);
    }
    void remove(const Edge& e) {
        adj[e.u] &= ~(1ULL << e.v);
        adj[e.v] &= ~(1ULL << e.u);
        if (adj[e.u] == 0) active &= ~(1ULL << e.u);
        if (adj[e.v] == 0) active &= ~(1ULL << e.v);
        edge_ids.pop_back();
    }
};

// Union-find with parity and rollback; no path compression so that undo
// stays O(1) per union.
struct ParityDsu {
    std::vector<int> parent, rank_, parity;
    struct Undo {
        int child, parent_rank_holder;
        bool rank_bumped;
    };
    std::vector<Undo> trail;

    explicit ParityDsu(int n) : parent(n), rank_(n, 0), parity(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int v) const {
        int par = 0;
        while (parent[v] != v) {
            par ^= parity[v];
            v = parent[v];
        }
        return {v, par};
    }

    // False when u,v are already connected with equal parity (odd cycle).
    bool unite(int u, int v) {
        auto [ru, pu] = find(u);
        auto [rv, pv] = find(v);
        if (ru == rv) return pu != pv;
        if (rank_[ru] < rank_[rv]) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        parent[rv] = ru;
        parity[rv] = pu ^ pv ^ 1;
        bool bumped = false;
        if (rank_[ru] == rank_[rv]) {
            ++rank_[ru];
            bumped = true;
        }
        trail.push_back({rv, ru, bumped});
        return true;
    }

    std::size_t mark() const { return trail.size(); }
    void rollback(std::size_t mark) {
        while (trail.size() > mark) {
            const Undo u = trail.back();
            trail.pop_back();
            if (u.rank_bumped) --rank_[u.parent_rank_holder];
            parent[u.child] = u.child;
            parity[u.child] = 0;
        }
    }
};

// Induced-pattern finders over single-word adjacency rows.  Classes here
// are always bipartite (the parity DSU guards every insertion), which the
// degree/wedge shortcuts rely on.
struct Finder {
    static constexpr int kNone = -1;
    using Witness = std::array<int, 4>;

    static bool center(const ClassState& c, int want, Witness& w, int& wn) {
        for (std::uint64_t rest = c.active; rest;) {
            const int v = lowest_bit(rest);
            rest &= rest - 1;
            if (std::popcount(c.adj[v]) < want) continue;
            wn = 0;
            w[wn++] = v;
            std::uint64_t nb = c.adj[v];
            for (int i = 0; i < want; ++i) {
                w[wn++] = lowest_bit(nb);
                nb &= nb - 1;
            }
            return true;
        }
        return false;
    }

    static bool find_pattern(Pattern p, const ClassState& c, const std::vector<Edge>& edges,
                             Witness& w, int& wn) {
        switch (p) {
            case Pattern::P3: return center(c, 2, w, wn);
            case Pattern::S4: return center(c, 3, w, wn);
            case Pattern::K2K1: {
                for (int id : c.edge_ids) {
                    const Edge& e = edges[id];
                    const std::uint64_t rest = c.active & ~c.adj[e.u] & ~c.adj[e.v] &
                                               ~(1ULL << e.u) & ~(1ULL << e.v);
                    if (rest) {
                        w = {e.u, e.v, lowest_bit(rest), kNone};
                        wn = 3;
                        return true;
                    }
                }
                return false;
            }
            case Pattern::C4: {
                for (std::uint64_t mu = c.active; mu;) {
                    const int u = lowest_bit(mu);
                    mu &= mu - 1;
                    for (std::uint64_t mv = mu; mv;) {
                        const int v = lowest_bit(mv);
                        mv &= mv - 1;
                        const std::uint64_t common = c.adj[u] & c.adj[v];
                        if (std::popcount(common) >= 2) {
                            const int a = lowest_bit(common);
                            const int b = lowest_bit(common & (common - 1));
                            w = {u, v, a, b};
                            wn = 4;
                            return true;
                        }
                    }
                }
                return false;
            }
            case Pattern::P4: {
                for (int id : c.edge_ids) {
                    const Edge& e = edges[id];
                    for (int dir = 0; dir < 2; ++dir) {
                        const int b = dir ? e.v : e.u;
                        const int cc = dir ? e.u : e.v;
                        for (std::uint64_t ma = c.adj[b] & ~(1ULL << cc); ma;) {
                            const int a = lowest_bit(ma);
                            ma &= ma - 1;
                            const std::uint64_t ends =
                                c.adj[cc] & ~c.adj[a] & ~(1ULL << b);
                            if (ends) {
                                w = {a, b, cc, lowest_bit(ends)};
                                wn = 4;
                                return true;
                            }
                        }
                    }
                }
                return false;
            }
            case Pattern::TwoK2: {
                const std::size_t k = c.edge_ids.size();
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = i + 1; j < k; ++j) {
                        const Edge& e = edges[c.edge_ids[i]];
                        const Edge& f = edges[c.edge_ids[j]];
                        const std::uint64_t fm = (1ULL << f.u) | (1ULL << f.v);
                        const std::uint64_t em = (1ULL << e.u) | (1ULL << e.v);
                        if (em & fm) continue;
                        if (((c.adj[e.u] | c.adj[e.v]) & fm) == 0) {
                            w = {e.u, e.v, f.u, f.v};
                            wn = 4;
                            return true;
                        }
                    }
                return false;
            }
        }
        return false;
    }
};

struct Searcher {
    const Graph& g;
    const ClassSpec& spec;
    const int k;
    const SearchBudget& budget;
    const SolverOptions& options;
    SearchStats stats;

    const std::vector<Edge>& edges;
    int m;
    std::vector<ClassState> classes;
    std::vector<ParityDsu> dsu;
    std::vector<int> assignment;
    std::vector<std::vector<int>> edge_id; // vertex pair -> host edge index
    Clock::time_point start;
    bool out_of_budget = false;

    Searcher(const Graph& graph, const ClassSpec& s, int kk, const SearchBudget& b,
             const SolverOptions& o)
        : g(graph), spec(s), k(kk), budget(b), options(o), edges(graph.edges()),
          m(graph.edge_count()), assignment(m, -1),
          edge_id(graph.vertex_count(), std::vector<int>(graph.vertex_count(), -1)) {
        classes.assign(k, ClassState(g.vertex_count()));
        dsu.assign(k, ParityDsu(g.vertex_count()));
        for (int i = 0; i < m; ++i)
            edge_id[edges[i].u][edges[i].v] = edge_id[edges[i].v][edges[i].u] = i;
        start = Clock::now();
    }

    bool budget_hit() {
        if (budget.max_nodes && stats.nodes_explored > *budget.max_nodes) return true;
        if (budget.time_limit_seconds && (stats.nodes_explored & 1023) == 0) {
            const double secs =
                std::chrono::duration<double>(Clock::now() - start).count();
            if (secs > *budget.time_limit_seconds) return true;
        }
        return false;
    }

    // A violation is beyond repair once no unassigned host edge joins two
    // of its witness vertices.
    bool repairable(const Finder::Witness& w, int wn, int next_edge) const {
        for (int i = 0; i < wn; ++i)
            for (int j = i + 1; j < wn; ++j) {
                const int id = edge_id[w[i]][w[j]];
                if (id >= next_edge) return true;
            }
        return false;
    }

    bool class_clean_at_leaf(const ClassState& c) {
        Finder::Witness w;
        int wn = 0;
        for (Pattern p : spec.named)
            if (Finder::find_pattern(p, c, edges, w, wn)) return false;
        if (!spec.custom.empty()) {
            std::vector<Edge> es;
            for (int id : c.edge_ids) es.push_back(edges[id]);
            const ImpliedGraph ig = implied_graph(TemplateGraph(std::move(es)));
            for (const Graph& pg : spec.custom)
                if (contains_induced(ig.graph, pg)) return false;
        }
        return true;
    }

    bool dfs(int t, int max_used) {
        ++stats.nodes_explored;
        if (budget_hit()) {
            out_of_budget = true;
            return false;
        }
        if (t == m) {
            for (int c = 0; c < max_used; ++c)
                if (!class_clean_at_leaf(classes[c])) {
                    ++stats.pruned_pattern;
                    return false;
                }
            return true;
        }
        const Edge& e = edges[t];
        const int limit = std::min(k, max_used + 1);
        for (int c = 0; c < limit; ++c) {
            const std::size_t mark = dsu[c].mark();
            if (!dsu[c].unite(e.u, e.v)) {
                ++stats.pruned_bipartite;
                dsu[c].rollback(mark);
                continue;
            }
            classes[c].add(e, t);
            assignment[t] = c;
            bool viable = true;
            if (options.repairability_prune) {
                Finder::Witness w;
                int wn = 0;
                for (Pattern p : spec.named)
                    if (Finder::find_pattern(p, classes[c], edges, w, wn) &&
                        !repairable(w, wn, t + 1)) {
                        viable = false;
                        ++stats.pruned_pattern;
                        break;
                    }
            }
            if (viable && dfs(t + 1, std::max(max_used, c + 1))) return true;
            assignment[t] = -1;
            classes[c].remove(e);
            dsu[c].rollback(mark);
            if (out_of_budget) return false;
        }
        return false;
    }

    Partition witness() const {
        Partition p{g, {}};
        int used = 0;
        for (int t = 0; t < m; ++t) used = std::max(used, assignment[t] + 1);
        std::vector<std::vector<Edge>> groups(used);
        for (int t = 0; t < m; ++t) groups[assignment[t]].push_back(edges[t]);
        for (auto& gr : groups) p.templates.emplace_back(std::move(gr));
        return p;
    }
};

} // namespace

FeasibilityResult exists_partition(const Graph& g, const ClassSpec& spec, int k,
                                   const SearchBudget& budget, const SolverOptions& options) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "exists_partition requires k >= 1");
    if (g.vertex_count() > kMaxSolverVertices)
        fail(ErrorKind::UnsupportedInput, "solver handles at most 64 vertices");

    FeasibilityResult result;
    if (g.edge_count() == 0) {
        result.status = SearchStatus::Found;
        result.witness = Partition{g, {}};
        return result;
    }
    Searcher s(g, spec, k, budget, options);
    const bool found = s.dfs(0, 0);
    s.stats.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - s.start).count();
    result.stats = s.stats;
    if (found) {
        result.status = SearchStatus::Found;
        result.witness = s.witness();
    } else if (s.out_of_budget) {
        result.status = SearchStatus::BudgetExhausted;
    } else {
        result.status = SearchStatus::Infeasible;
    }
    return result;
}

namespace {

long long solver_lower_bound(const Graph& g, const ClassSpec& spec) {
    long long lower = 1;
    if (max_template_edges(spec, g.vertex_count()))
        lower = std::max(lower, edge_count_lower(g, spec));
    const long long n = g.vertex_count();
    if (g.edge_count() == n * (n - 1) / 2) { // complete host
        lower = std::max(lower, log_lower(n));
        if (class_name(spec) == "2K2" && n >= 2)
            lower = std::max(lower, ferrers_bounds(n).lower);
    }
    return lower;
}

} // namespace

SolveOutcome chi_prime(const Graph& g, const ClassSpec& spec, const SearchBudget& budget,
                       const SolverOptions& options) {
    if (g.edge_count() == 0)
        fail(ErrorKind::InvalidArgument, "chi_prime requires a graph with edges");

    SolveOutcome outcome;
    SearchBudget remaining = budget;
    const auto start = Clock::now();
    for (long long k = solver_lower_bound(g, spec); k <= g.edge_count(); ++k) {
        if (remaining.max_nodes && outcome.stats.nodes_explored >= *remaining.max_nodes)
            return outcome;
        SearchBudget step = remaining;
        if (step.max_nodes) *step.max_nodes -= outcome.stats.nodes_explored;
        if (step.time_limit_seconds)
            *step.time_limit_seconds -=
                std::chrono::duration<double>(Clock::now() - start).count();

        FeasibilityResult r = exists_partition(g, spec, static_cast<int>(k), step, options);
        outcome.stats.nodes_explored += r.stats.nodes_explored;
        outcome.stats.pruned_bipartite += r.stats.pruned_bipartite;
        outcome.stats.pruned_pattern += r.stats.pruned_pattern;
        outcome.stats.elapsed_seconds =
            std::chrono::duration<double>(Clock::now() - start).count();
        if (r.status == SearchStatus::Found) {
            outcome.result = SolveResult{k, std::move(*r.witness), outcome.stats};
            return outcome;
        }
        if (r.status == SearchStatus::BudgetExhausted) return outcome;
    }
    fail(ErrorKind::UnsupportedInput,
         "no valid partition exists for this pattern set");
}

int brute_force_oracle(const Graph& g, const ClassSpec& spec) {
    const int m = g.edge_count();
    if (m > 10) fail(ErrorKind::UnsupportedInput, "oracle requires at most 10 edges");
    if (m == 0) return 0;

    // Template validity per edge subset, via the exhaustive pattern search.
    const int subsets = 1 << m;
    std::vector<char> valid(subsets, 0);
    for (int mask = 1; mask < subsets; ++mask) {
        std::vector<Edge> es;
        for (int i = 0; i < m; ++i)
            if (mask & (1 << i)) es.push_back(g.edges()[i]);
        const ImpliedGraph ig = implied_graph(TemplateGraph(std::move(es)));
        bool ok = is_bipartite(ig.graph).has_value();
        for (std::size_t pi = 0; ok && pi < spec.named.size(); ++pi)
            if (contains_induced(ig.graph, spec.named[pi])) ok = false;
        for (std::size_t pi = 0; ok && pi < spec.custom.size(); ++pi)
            if (contains_induced(ig.graph, spec.custom[pi])) ok = false;
        valid[mask] = ok ? 1 : 0;
    }

    int best = m + 1;
    std::vector<int> class_mask(m + 1, 0);
    // Canonical enumeration: edge t joins one of the used classes or opens
    // the next one.  No pruning; feasibility is read off at the leaves.
    auto enumerate = [&](auto&& self, int t, int used) -> void {
        if (t == m) {
            for (int c = 0; c < used; ++c)
                if (!valid[class_mask[c]]) return;
            best = std::min(best, used);
            return;
        }
        for (int c = 0; c <= used && c < m; ++c) {
            class_mask[c] |= 1 << t;
            self(self, t + 1, std::max(used, c + 1));
            class_mask[c] &= ~(1 << t);
        }
    };
    enumerate(enumerate, 0, 0);
    if (best > m)
        fail(ErrorKind::UnsupportedInput, "no valid partition exists for this pattern set");
    return best;
}

} // namespace bipart
