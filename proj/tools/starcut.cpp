// starcut: command-line front end for the solver, oracles, and reductions.
// Exit codes: 0 YES/PASS, 1 NO/FAIL, 2 error, 3 inconclusive.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "starcut/starcut.hpp"

using namespace starcut;

namespace {

constexpr int exit_yes = 0, exit_no = 1, exit_error = 2, exit_inconclusive = 3;

struct SearchFlags {
    bool strict = false;
    unsigned threads = 1;
    std::int64_t budget_ms = 0;
    bool no_anchor = false;
    bool damage = false;
    bool no_merge = false;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--strict-trivial", strict, "a cut must leave exactly one vertex, not at most one");
        cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
        cmd->add_option("--budget-ms", budget_ms, "wall-clock budget in milliseconds (0 = none)")
            ->check(CLI::NonNegativeNumber);
        cmd->add_flag("--no-anchor", no_anchor, "disable anchor pruning at the last level");
        cmd->add_flag("--damage-order", damage, "order candidate stars by damage");
        cmd->add_flag("--no-merge", no_merge, "keep stars with equal vertex sets");
    }

    [[nodiscard]] SearchOptions options(std::size_t t_max) const {
        SearchOptions o;
        o.t_max = t_max;
        o.triviality = strict ? Triviality::exactly_one : Triviality::at_most_one;
        o.anchor_pruning = !no_anchor;
        o.damage_order = damage;
        o.merge_equal_vertex_sets = !no_merge;
        o.threads = threads;
        if (budget_ms > 0) o.time_budget = std::chrono::milliseconds(budget_ms);
        return o;
    }
};

void write_reduced(const ReducedInstance& red, const std::string& prefix) {
    write_file(prefix + ".graph", write_graph(red.graph));
    write_file(prefix + ".roles", write_roles(red.roles));
}

int report_exit(const RoundtripReport& rep) {
    switch (rep.verdict) {
        case Verdict::pass: return exit_yes;
        case Verdict::fail: return exit_no;
        case Verdict::inconclusive: return exit_inconclusive;
    }
    return exit_error;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Star-pattern structure connectivity: exact solver, oracles and NP reductions"};
    app.require_subcommand(1);
    std::function<int()> action;

    // solve
    std::string graph_file, in_file, cut_file, out_prefix, out_file;
    std::size_t M = 0, t_max = 1, k = 0;
    bool sub = false;
    SearchFlags sf;
    auto* solve = app.add_subcommand("solve", "exact kappa or kappa^s up to t_max");
    solve->add_option("--graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    solve->add_option("--M", M, "star size")->required();
    solve->add_flag("--sub", sub, "substructure connectivity (at most M leaves)");
    solve->add_option("--tmax", t_max, "largest family size to try")->required()->check(CLI::PositiveNumber);
    sf.attach(solve);
    solve->callback([&] {
        action = [&] {
            const Graph g = parse_graph(read_file(graph_file));
            const CutKind kind = sub ? CutKind::substructure : CutKind::structure;
            const auto r = solve_connectivity(g, M, kind, sf.options(t_max));
            std::cout << write_result(r, kind, M);
            if (r.value) return exit_yes;
            if (r.budget_exhausted) {
                std::cout << "c budget exhausted\n";
                return exit_inconclusive;
            }
            return exit_no;
        };
    });

    // reduce-3dm
    bool unrestricted = false, small_M = false;
    auto* r3 = app.add_subcommand("reduce-3dm", "build the 3DM gadget");
    r3->add_option("--in", in_file, "3DM instance file")->required()->check(CLI::ExistingFile);
    r3->add_option("--M", M, "star size (>= 5)")->required();
    r3->add_option("--out-prefix", out_prefix, "writes PREFIX.graph and PREFIX.roles")->required();
    r3->add_flag("--allow-unrestricted", unrestricted, "skip the two-or-three occurrence check");
    r3->add_flag("--allow-small-M", small_M, "permit M = 4 (no correctness claim)");
    r3->callback([&] {
        action = [&] {
            const auto red = reduce_3dm(parse_3dm(read_file(in_file)), M, {unrestricted, small_M});
            write_reduced(red, out_prefix);
            std::cout << "gadget " << red.graph.order() << " vertices " << red.graph.size() << " edges, q = "
                      << red.parameter << ", M = " << red.M << '\n';
            return exit_yes;
        };
    });

    // reduce-vc
    std::optional<std::size_t> vc_M;
    auto* rv = app.add_subcommand("reduce-vc", "build the vertex-cover gadget");
    rv->add_option("--graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    rv->add_option("--k", k, "cover budget")->required();
    rv->add_option("--M", vc_M, "must equal the maximum degree if given");
    rv->add_option("--out-prefix", out_prefix, "writes PREFIX.graph and PREFIX.roles")->required();
    rv->callback([&] {
        action = [&] {
            const auto red = reduce_vertex_cover({parse_graph(read_file(graph_file)), k}, vc_M);
            write_reduced(red, out_prefix);
            std::cout << "gadget " << red.graph.order() << " vertices " << red.graph.size() << " edges, k = "
                      << red.parameter << ", M = " << red.M << '\n';
            return exit_yes;
        };
    });

    // verify
    bool strict_verify = false;
    auto* ver = app.add_subcommand("verify", "check a certificate against a graph");
    ver->add_option("--graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    ver->add_option("--cut", cut_file, "cut file")->required()->check(CLI::ExistingFile);
    ver->add_flag("--strict-trivial", strict_verify, "a cut must leave exactly one vertex");
    ver->callback([&] {
        action = [&] {
            const Graph g = parse_graph(read_file(graph_file));
            const CutFamily f = parse_cut(read_file(cut_file), g.order());
            const auto triv = strict_verify ? Triviality::exactly_one : Triviality::at_most_one;
            for (const auto& s : f.elements)
                if (!star_valid_in(g, s)) {
                    std::cout << "invalid: star at " << s.center + 1 << " is not a subgraph\n";
                    return exit_no;
                }
            const bool ok = verify_cut(g, f, triv);
            std::cout << (ok ? "valid " : "invalid: removal leaves a connected graph ") << to_string(f.kind) << " cut, "
                      << f.size() << " elements\n";
            return ok ? exit_yes : exit_no;
        };
    });

    // oracle
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth");
    orc->require_subcommand(1);
    auto* o3 = orc->add_subcommand("3dm", "perfect 3-dimensional matching");
    o3->add_option("--in", in_file, "3DM instance file")->required()->check(CLI::ExistingFile);
    o3->callback([&] {
        action = [&] {
            const auto sol = solve_3dm(parse_3dm(read_file(in_file)));
            if (!sol) {
                std::cout << "matching none\n";
                return exit_no;
            }
            std::cout << "matching";
            for (auto i : *sol) std::cout << ' ' << i + 1;
            std::cout << '\n';
            return exit_yes;
        };
    });
    auto* ov = orc->add_subcommand("vc", "vertex cover of size at most k");
    ov->add_option("--graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    ov->add_option("--k", k, "cover budget")->required();
    ov->callback([&] {
        action = [&] {
            const auto c = solve_vertex_cover({parse_graph(read_file(graph_file)), k});
            if (!c) {
                std::cout << "cover none\n";
                return exit_no;
            }
            std::cout << "cover";
            for (auto v : *c) std::cout << ' ' << v + 1;
            std::cout << '\n';
            return exit_yes;
        };
    });
    std::size_t cap = default_oracle_cap;
    auto* ok = orc->add_subcommand("kappa", "kappa by subset enumeration");
    ok->add_option("--graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    ok->add_option("--M", M, "star size")->required();
    ok->add_flag("--sub", sub, "substructure connectivity");
    ok->add_option("--tmax", t_max, "largest family size to report")->required();
    ok->add_flag("--strict-trivial", strict_verify, "a cut must leave exactly one vertex");
    ok->add_option("--cap", cap, "refuse graphs with more vertices")->check(CLI::Range(1, 24));
    ok->callback([&] {
        action = [&] {
            const Graph g = parse_graph(read_file(graph_file));
            const CutKind kind = sub ? CutKind::substructure : CutKind::structure;
            const auto triv = strict_verify ? Triviality::exactly_one : Triviality::at_most_one;
            const auto r = oracle_connectivity(g, M, kind, t_max, triv, cap);
            std::cout << write_result(r, kind, M);
            return r.value ? exit_yes : exit_no;
        };
    });

    // roundtrip
    auto* rt = app.add_subcommand("roundtrip", "compare source and gadget decisions");
    rt->require_subcommand(1);
    auto finish = [&](const RoundtripReport& rep) {
        std::cout << rep.text();
        if (!out_prefix.empty()) {
            write_reduced(rep.reduced, out_prefix);
            write_file(out_prefix + ".report", rep.text());
            if (rep.gadget_result.certificate)
                write_file(out_prefix + ".cut", write_cut(*rep.gadget_result.certificate));
        }
        return report_exit(rep);
    };
    auto* rt3 = rt->add_subcommand("3dm", "3DM against structure connectivity");
    rt3->add_option("--in", in_file, "3DM instance file")->required()->check(CLI::ExistingFile);
    rt3->add_option("--M", M, "star size (>= 5)")->required();
    rt3->add_option("--out-prefix", out_prefix, "writes PREFIX.graph, .roles, .report and .cut");
    rt3->add_flag("--allow-unrestricted", unrestricted, "skip the two-or-three occurrence check");
    sf.attach(rt3);
    rt3->callback([&] {
        action = [&] {
            return finish(roundtrip_3dm(parse_3dm(read_file(in_file)), M, sf.options(1), {unrestricted, false}));
        };
    });
    auto* rtv = rt->add_subcommand("vc", "vertex cover against substructure connectivity");
    rtv->add_option("--graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    rtv->add_option("--k", k, "cover budget")->required();
    rtv->add_option("--out-prefix", out_prefix, "writes PREFIX.graph, .roles, .report and .cut");
    sf.attach(rtv);
    rtv->callback([&] {
        action = [&] { return finish(roundtrip_vc({parse_graph(read_file(graph_file)), k}, sf.options(1))); };
    });

    // gen
    auto* gen = app.add_subcommand("gen", "seeded instance generators");
    gen->require_subcommand(1);
    std::size_t n = 0, extra = 0, max_occ = 3;
    double p = 0.5;
    std::uint64_t seed = 0;
    bool connected = false, unsolvable = false;
    auto* gg = gen->add_subcommand("graph", "G(n, p)");
    gg->add_option("--n", n, "vertices")->required();
    gg->add_option("--p", p, "edge probability")->check(CLI::Range(0.0, 1.0));
    gg->add_option("--seed", seed, "seed");
    gg->add_flag("--connected", connected, "resample until connected");
    gg->add_option("--out", out_file, "output file (default stdout)");
    gg->callback([&] {
        action = [&] {
            const Graph g = connected ? gen_connected_graph(n, p, seed) : gen_random_graph(n, p, seed);
            if (out_file.empty()) std::cout << write_graph(g);
            else write_file(out_file, write_graph(g));
            return exit_yes;
        };
    });
    auto* g3 = gen->add_subcommand("3dm", "random 3DM instance");
    g3->add_option("--n", n, "elements per coordinate")->required();
    g3->add_option("--extra", extra, "triples beyond n");
    g3->add_flag("--unsolvable", unsolvable, "rejection-sample until no perfect matching exists");
    g3->add_option("--max-occurrence", max_occ, "occurrence cap per element (0 = none)");
    g3->add_option("--seed", seed, "seed");
    g3->add_option("--out", out_file, "output file (default stdout)");
    g3->callback([&] {
        action = [&] {
            const auto inst = gen_random_3dm(n, extra, !unsolvable, seed, {max_occ, 100000});
            if (out_file.empty()) std::cout << write_3dm(inst);
            else write_file(out_file, write_3dm(inst));
            return exit_yes;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }
    try {
        return action ? action() : exit_error;
    } catch (const ParseError& e) {
        std::cerr << "starcut: parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "starcut: " << e.what() << '\n';
    }
    return exit_error;
}
