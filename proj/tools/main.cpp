// bipart: construct, verify and exactly solve pattern-constrained bipartite
// edge partitions of complete graphs.
//
// Exit codes: 0 success, 1 domain failure (invalid partition, infeasible,
// table disagreement), 2 usage error, 3 search budget exhausted.

#include "bipart/bounds.hpp"
#include "bipart/class_spec.hpp"
#include "bipart/constructions.hpp"
#include "bipart/cover.hpp"
#include "bipart/error.hpp"
#include "bipart/gadget.hpp"
#include "bipart/io.hpp"
#include "bipart/solver.hpp"
#include "bipart/verifier.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace bipart;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

ClassSpec parse_class(const std::string& name) {
    const auto spec = class_from_name(name);
    if (!spec || !is_registry_class(*spec))
        fail(ErrorKind::UnsupportedClass, "unknown class: " + name);
    return *spec;
}

json edges_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
    return arr;
}

json partition_json_body(const Partition& p, const ClassSpec& spec) {
    return json::parse(io::partition_to_json(p, spec));
}

void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
    } else {
        io::write_text_file(out_file, text);
    }
}

struct BudgetFlags {
    std::uint64_t max_nodes = 0;
    double time_limit = 0.0;
    bool repair_prune = false;

    bool any() const { return max_nodes > 0 || time_limit > 0.0; }
    SearchBudget budget() const {
        SearchBudget b;
        if (max_nodes > 0) b.max_nodes = max_nodes;
        if (time_limit > 0.0) b.time_limit_seconds = time_limit;
        return b;
    }
    SolverOptions options() const {
        SolverOptions o;
        o.repairability_prune = repair_prune;
        return o;
    }
};

int cmd_construct(const std::string& class_name_arg, int n, const std::string& out_file,
                  const std::string& format) {
    const ClassSpec spec = parse_class(class_name_arg);
    const Partition p = construct(spec, n);
    const VerifyReport report = verify_partition(p, spec);
    if (!report.valid) {
        std::cerr << "internal error: constructed partition failed verification\n";
        return kExitDomain;
    }
    std::cerr << "class " << class_name(spec) << " n=" << n << ": "
              << p.templates.size() << " templates\n";
    if (const auto kv = known_value(spec, n)) {
        if (static_cast<long long>(p.templates.size()) != *kv) {
            std::cerr << "template count " << p.templates.size()
                      << " does not match the tabulated value " << *kv << "\n";
            return kExitDomain;
        }
    }
    std::ostringstream body;
    if (format == "json") {
        body << io::partition_to_json(p, spec);
    } else if (format == "dot") {
        io::write_partition_dot(body, p);
    } else if (format == "edgelist") {
        io::write_partition_edge_list(body, p);
    } else {
        std::cerr << "unknown format: " << format << "\n";
        return kExitUsage;
    }
    emit(body.str(), out_file);
    return kExitOk;
}

int cmd_verify(const std::string& partition_file) {
    const io::PartitionFile file = io::read_partition_file(partition_file);
    const VerifyReport report = verify_partition(file.partition, file.spec);
    std::cout << io::verify_report_to_json(report);
    return report.valid ? kExitOk : kExitDomain;
}

int cmd_solve(const std::string& graph_file, const std::string& class_name_arg,
              const BudgetFlags& flags, bool timings) {
    const Graph g = io::read_edge_list_file(graph_file);
    const ClassSpec spec = parse_class(class_name_arg);
    const SolveOutcome outcome = chi_prime(g, spec, flags.budget(), flags.options());
    if (outcome.budget_exhausted()) {
        json doc;
        doc["budgetExhausted"] = true;
        doc["nodesExplored"] = outcome.stats.nodes_explored;
        std::cout << doc.dump(2) << "\n";
        return kExitBudget;
    }
    const SolveResult& r = *outcome.result;
    json doc;
    doc["chi"] = r.chi;
    doc["witness"] = partition_json_body(r.witness, spec);
    doc["stats"] = {{"nodesExplored", r.stats.nodes_explored},
                    {"prunedBipartite", r.stats.pruned_bipartite},
                    {"prunedPattern", r.stats.pruned_pattern}};
    if (timings) doc["stats"]["elapsedSeconds"] = r.stats.elapsed_seconds;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_bounds(const std::string& class_name_arg, long long n) {
    const ClassSpec spec = parse_class(class_name_arg);
    const BoundPair b = bounds_for(spec, n);
    json doc;
    doc["class"] = class_name(spec);
    doc["n"] = n;
    doc["lower"] = b.lower;
    doc["upper"] = b.upper ? json(*b.upper) : json(nullptr);
    const auto kv = known_value(spec, n);
    doc["known"] = kv ? json(*kv) : json(nullptr);
    doc["notes"] = b.notes;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
}

int cmd_table(int nmax, const BudgetFlags& flags) {
    if (nmax < 2) {
        std::cerr << "--nmax must be at least 2\n";
        return kExitUsage;
    }
    if (nmax > 5 && !flags.any()) {
        std::cerr << "solver columns beyond n=5 require an explicit budget "
                     "(--max-nodes or --time-limit)\n";
        return kExitUsage;
    }
    bool disagreement = false;
    std::cout << std::left << std::setw(16) << "class" << std::setw(4) << "n"
              << std::setw(9) << "formula" << std::setw(9) << "constr" << std::setw(9)
              << "solver" << "bounds\n";
    for (const ClassSpec& spec : registry_classes()) {
        for (int n = 2; n <= nmax; ++n) {
            const auto kv = known_value(spec, n);
            const auto entry = construction_for(spec);
            std::optional<long long> constructed;
            if (entry && entry->supported(n))
                constructed = static_cast<long long>(construct(spec, n).templates.size());

            std::optional<long long> solver_value;
            bool budget_out = false;
            {
                SolverOptions opts = flags.options();
                opts.repairability_prune = true; // sound and result-identical
                const SolveOutcome outcome =
                    chi_prime(complete_graph(n), spec, flags.budget(), opts);
                if (outcome.budget_exhausted())
                    budget_out = true;
                else
                    solver_value = outcome.result->chi;
            }
            const BoundPair b = bounds_for(spec, n);

            auto cell = [](const std::optional<long long>& v) {
                return v ? std::to_string(*v) : std::string("-");
            };
            std::ostringstream bounds_cell;
            bounds_cell << "[" << b.lower << ","
                        << (b.upper ? std::to_string(*b.upper) : std::string("inf")) << "]";
            std::cout << std::left << std::setw(16) << class_name(spec) << std::setw(4) << n
                      << std::setw(9) << cell(kv) << std::setw(9) << cell(constructed)
                      << std::setw(9) << (budget_out ? "?" : cell(solver_value))
                      << bounds_cell.str();

            bool row_bad = false;
            if (kv && solver_value && *kv != *solver_value) row_bad = true;
            if (kv && constructed && *kv != *constructed) row_bad = true;
            if (solver_value &&
                (*solver_value < b.lower || (b.upper && *solver_value > *b.upper)))
                row_bad = true;
            if (row_bad) {
                std::cout << "  DISAGREE";
                disagreement = true;
            }
            std::cout << "\n";
        }
    }
    std::cout << (disagreement ? "DISAGREEMENT\n" : "OK\n");
    return disagreement ? kExitDomain : kExitOk;
}

int cmd_cover(int n, int q, int kmax, std::uint64_t seed, int trials,
              const std::string& emit_partition) {
    CoverRun run = random_c4_cover(n, q, kmax, seed);
    Partition partition{Graph(0), {}};
    if (run.covered) {
        partition = cover_to_partition(run);
        run.templates = partition;
    }
    json doc;
    doc["n"] = run.n;
    doc["q"] = run.q;
    doc["kMax"] = run.k_max;
    doc["seed"] = run.seed;
    doc["covered"] = run.covered;
    doc["throwsUsed"] = run.throws_used;
    doc["templateCount"] =
        run.covered ? json(partition.templates.size()) : json(nullptr);
    doc["perEdgeCoverCounts"] = run.cover_counts;
    if (trials > 0) {
        doc["trials"] = trials;
        doc["coverProbabilityEstimate"] = estimate_cover_probability(n, q, trials, seed);
        doc["coverProbabilityExact"] = exact_cover_probability(q);
    }
    std::cout << doc.dump(2) << "\n";
    if (!emit_partition.empty()) {
        if (!run.covered) {
            std::cerr << "cannot emit a partition: the run did not cover the host\n";
            return kExitDomain;
        }
        io::write_text_file(emit_partition,
                            io::partition_to_json(partition, ClassSpec{Pattern::C4}));
    }
    return kExitOk;
}

int cmd_gadget_verify(const std::string& file) {
    const Gadget g = load_gadget_file(file);
    const auto violations = validate_gadget_shape(g);
    json doc;
    doc["shapeViolations"] = violations;
    if (violations.empty()) {
        const GadgetColorReport report = gadget_color_property(g);
        doc["monoExtendable"] = {report.mono_extendable[0], report.mono_extendable[1],
                                 report.mono_extendable[2]};
        doc["biNonExtendable"] = report.bi_non_extendable;
        json witnesses = json::array();
        for (int c = 0; c < 3; ++c)
            witnesses.push_back(report.witnesses[c] ? json(*report.witnesses[c])
                                                    : json(nullptr));
        doc["witnessColorings"] = witnesses;
        std::cout << doc.dump(2) << "\n";
        const bool usable = report.mono_extendable[0] && report.mono_extendable[1] &&
                            report.mono_extendable[2] && report.bi_non_extendable;
        return usable ? kExitOk : kExitDomain;
    }
    std::cout << doc.dump(2) << "\n";
    return kExitDomain;
}

int cmd_gadget_reduce(const std::string& cubic_file, const std::string& gadget_file,
                      bool extend, const std::string& out_file) {
    const Graph cubic = io::read_edge_list_file(cubic_file);
    const Gadget g = load_gadget_file(gadget_file);
    const GStar gs = build_gstar(cubic, g);
    json doc;
    doc["v"] = cubic.vertex_count();
    doc["e"] = cubic.edge_count();
    doc["vStar"] = gs.graph.vertex_count();
    doc["eStar"] = gs.graph.edge_count();
    json instances = json::array();
    for (const auto& inst : gs.instances)
        instances.push_back({{"edge", json::array({inst.original.u, inst.original.v})},
                             {"internalIds", inst.internal_ids}});
    doc["instances"] = instances;
    doc["edges"] = edges_json(gs.graph.edges());

    if (extend) {
        const auto solved = chi_prime(cubic, ClassSpec{Pattern::P3});
        if (solved.budget_exhausted()) return kExitBudget;
        if (solved.result->chi != 3) {
            std::cerr << "graph is not 3-edge-colorable (chromatic index "
                      << solved.result->chi << ")\n";
            std::cout << doc.dump(2) << "\n";
            return kExitDomain;
        }
        std::vector<int> colors(cubic.edge_count(), 0);
        for (std::size_t t = 0; t < solved.result->witness.templates.size(); ++t)
            for (const Edge& e : solved.result->witness.templates[t].edges) {
                const auto& es = cubic.edges();
                colors[std::lower_bound(es.begin(), es.end(), e) - es.begin()] =
                    static_cast<int>(t) + 1;
            }
        const GadgetColorReport report = gadget_color_property(g);
        const Partition p = extend_coloring(cubic, colors, g, report);
        const ClassSpec cherry_orchard{Pattern::P4, Pattern::S4, Pattern::C4};
        if (!verify_partition(p, cherry_orchard).valid) {
            std::cerr << "internal error: extended partition failed verification\n";
            return kExitDomain;
        }
        doc["extended"] = partition_json_body(p, cherry_orchard);
    }
    emit(doc.dump(2) + "\n", out_file);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"pattern-constrained bipartite edge partitions of complete graphs"};
    app.require_subcommand(1);

    std::string class_arg, out_file, format = "json", partition_file, graph_file;
    int n = 0;
    BudgetFlags flags;
    bool timings = false;

    auto* construct_cmd = app.add_subcommand("construct", "build a tabulated partition");
    construct_cmd->add_option("--class", class_arg, "class name, e.g. 2K2 or 2K2-C4-P4")
        ->required();
    construct_cmd->add_option("--n", n, "host size")->required();
    construct_cmd->add_option("--out", out_file, "output file (default stdout)");
    construct_cmd->add_option("--format", format, "json | dot | edgelist")
        ->check(CLI::IsMember({"json", "dot", "edgelist"}));

    auto* verify_cmd = app.add_subcommand("verify", "check a partition file");
    verify_cmd->add_option("--partition", partition_file, "partition json file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "exact minimum template count");
    solve_cmd->add_option("--graph", graph_file, "edge-list file")->required();
    solve_cmd->add_option("--class", class_arg, "class name")->required();
    solve_cmd->add_option("--max-nodes", flags.max_nodes, "node budget");
    solve_cmd->add_option("--time-limit", flags.time_limit, "seconds budget");
    solve_cmd->add_flag("--prune-repair", flags.repair_prune,
                        "enable the repairability prune");
    solve_cmd->add_flag("--timings", timings, "include elapsed time in the output");

    auto* bounds_cmd = app.add_subcommand("bounds", "certified bounds and exact values");
    bounds_cmd->add_option("--class", class_arg, "class name")->required();
    bounds_cmd->add_option("--n", n, "host size")->required();

    int nmax = 5;
    auto* table_cmd = app.add_subcommand("table", "cross-check formulas, constructions, solver");
    table_cmd->add_option("--nmax", nmax, "largest host size (default 5)");
    table_cmd->add_option("--max-nodes", flags.max_nodes, "solver node budget per cell");
    table_cmd->add_option("--time-limit", flags.time_limit, "solver time budget per cell");

    int q = 2, kmax = 0, trials = 0;
    std::uint64_t seed = 1;
    std::string emit_partition;
    auto* cover_cmd = app.add_subcommand("cover-c4", "randomized C4-free covering of K_n");
    cover_cmd->add_option("--n", n, "host size")->required();
    cover_cmd->add_option("--q", q, "plane order (prime)")->required();
    cover_cmd->add_option("--kmax", kmax, "maximum throws")->required();
    cover_cmd->add_option("--seed", seed, "PRNG seed")->required();
    cover_cmd->add_option("--trials", trials, "also estimate the per-edge cover probability");
    cover_cmd->add_option("--emit-partition", emit_partition,
                          "write the surplus-free partition to this file");

    std::string gadget_file, cubic_file;
    bool extend = false;
    auto* gadget_cmd = app.add_subcommand("gadget", "reduction gadget tooling");
    gadget_cmd->require_subcommand(1);
    auto* gadget_verify = gadget_cmd->add_subcommand("verify", "shape and coloring census");
    gadget_verify->add_option("file", gadget_file, "gadget json file")->required();
    auto* gadget_reduce = gadget_cmd->add_subcommand("reduce", "substitute gadgets into a cubic graph");
    gadget_reduce->add_option("--cubic", cubic_file, "cubic graph edge list")->required();
    gadget_reduce->add_option("--gadget", gadget_file, "gadget json file")->required();
    gadget_reduce->add_flag("--extend", extend, "lift a proper 3-edge-coloring to G*");
    gadget_reduce->add_option("--out", out_file, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (construct_cmd->parsed()) return cmd_construct(class_arg, n, out_file, format);
        if (verify_cmd->parsed()) return cmd_verify(partition_file);
        if (solve_cmd->parsed()) return cmd_solve(graph_file, class_arg, flags, timings);
        if (bounds_cmd->parsed()) return cmd_bounds(class_arg, n);
        if (table_cmd->parsed()) return cmd_table(nmax, flags);
        if (cover_cmd->parsed())
            return cmd_cover(n, q, kmax, seed, trials, emit_partition);
        if (gadget_cmd->parsed()) {
            if (gadget_verify->parsed()) return cmd_gadget_verify(gadget_file);
            if (gadget_reduce->parsed())
                return cmd_gadget_reduce(cubic_file, gadget_file, extend, out_file);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::UnsupportedParameter:
            case ErrorKind::UnsupportedClass:
            case ErrorKind::InvalidArgument:
            case ErrorKind::UnsupportedInput:
                return kExitUsage;
            default:
                return kExitDomain;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
