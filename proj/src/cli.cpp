#include "pairsolve/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pairsolve/core_ops.hpp"
#include "pairsolve/generators.hpp"
#include "pairsolve/instance_io.hpp"
#include "pairsolve/oracle.hpp"
#include "pairsolve/solver_regular.hpp"
#include "pairsolve/solver_sparse.hpp"
#include "pairsolve/verifier.hpp"

namespace pairsolve {

namespace {

DemandGraph read_instance(const std::string& path, std::istream& in) {
    if (path == "-") return parse_instance(in);
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open instance file '" + path + "'");
    return parse_instance(f);
}

bool sparse_applicable(const DemandGraph& g) {
    int n = g.vertex_count();
    return (g.live_edge_count() == 0 || g.live_edge_count() <= 2 * n - 5) &&
           g.max_degree() <= n - 1;
}

bool regular_applicable(const DemandGraph& g) {
    return g.max_degree() <= regular_degree_bound(g.vertex_count());
}

void emit_combined(const DemandGraph& inst, const Resolution& res, std::ostream& out) {
    print_instance(inst, out);
    print_solution(res, out);
}

void maybe_write_dot(const std::string& path, const DemandGraph& inst, const Resolution* res,
                     std::ostream& err) {
    if (path.empty()) return;
    std::ofstream f(path);
    if (!f) {
        err << "warning: cannot open dot file '" << path << "'\n";
        return;
    }
    write_dot(inst, res, f);
}

int cmd_gen(const std::string& family, int n, int r, int q, std::uint64_t seed, bool r_set,
            bool q_set, std::ostream& out, std::ostream& err) {
    if (const char* env = std::getenv("PAIRSOLVE_SEED")) seed = std::strtoull(env, nullptr, 10);
    if (r_set && family != "regular") {
        err << "--r only applies to the regular family\n";
        return 2;
    }
    if (q_set && family != "one-factor-bundles") {
        err << "--q only applies to the one-factor-bundles family\n";
        return 2;
    }
    DemandGraph g(0);
    if (family == "regular") {
        if (!r_set) {
            err << "gen regular requires --r\n";
            return 2;
        }
        g = gen_regular(n, r, seed);
    } else if (family == "sparse") {
        g = gen_sparse(n, seed);
    } else if (family == "one-factor-bundles") {
        if (!q_set) {
            err << "gen one-factor-bundles requires --q\n";
            return 2;
        }
        g = gen_one_factor_bundles(n, q);
    } else if (family == "double-bundle") {
        g = gen_double_bundle(n);
    } else {
        err << "unknown family '" << family << "'\n";
        return 2;
    }
    print_instance(g, out);
    return 0;
}

int cmd_solve(const std::string& mode, const std::string& instance_path,
              const std::string& dot_path, std::istream& in, std::ostream& out,
              std::ostream& err) {
    DemandGraph inst = read_instance(instance_path, in);

    std::string chosen = mode;
    if (mode == "auto") {
        if (regular_applicable(inst))
            chosen = "regular";
        else if (sparse_applicable(inst))
            chosen = "sparse";
        else if (inst.vertex_count() <= 8)
            chosen = "oracle";
        else {
            err << "no solver applies: degree/edge bounds exceeded and instance too large "
                   "for exhaustive search\n";
            return 2;
        }
    }

    Resolution res;
    if (chosen == "oracle") {
        OracleResolution o = oracle_resolve(inst, SearchBudget{});
        if (o.status == OracleStatus::Infeasible) {
            out << "infeasible\n";
            return 1;
        }
        if (o.status == OracleStatus::BudgetExhausted) {
            err << "search budget exhausted (no feasibility verdict)\n";
            return 2;
        }
        res = std::move(o.resolution);
    } else {
        Session s = make_session(inst);
        if (chosen == "regular") {
            if (!regular_applicable(inst)) {
                err << "instance violates the regular solver precondition\n";
                return 2;
            }
            solve_regular(s);
        } else if (chosen == "sparse") {
            if (!sparse_applicable(inst)) {
                err << "instance violates the sparse solver precondition\n";
                return 2;
            }
            solve_sparse(s);
        } else {
            err << "unknown mode '" << chosen << "'\n";
            return 2;
        }
        res = extract_resolution(s.ledger);
        auto violations = verify(inst, res);
        if (!violations.empty()) {
            err << "internal error: solver output failed verification:\n";
            for (const auto& v : violations) err << "  " << to_string(v) << "\n";
            return 2;
        }
    }

    emit_combined(inst, res, out);
    maybe_write_dot(dot_path, inst, &res, err);
    return 0;
}

int cmd_verify(const std::vector<std::string>& paths, std::istream& in, std::ostream& out) {
    DemandGraph inst(0);
    Resolution res;
    if (paths.size() == 2) {
        std::ifstream fi(paths[0]);
        if (!fi) throw PreconditionError("cannot open instance file '" + paths[0] + "'");
        inst = parse_instance(fi);
        std::ifstream fs(paths[1]);
        if (!fs) throw PreconditionError("cannot open solution file '" + paths[1] + "'");
        res = parse_solution(fs, inst.live_edge_count());
    } else if (paths.size() == 1) {
        std::ifstream f(paths[0]);
        if (!f) throw PreconditionError("cannot open file '" + paths[0] + "'");
        CombinedDoc doc = parse_combined(f);
        inst = std::move(doc.instance);
        res = std::move(doc.solution);
    } else {
        CombinedDoc doc = parse_combined(in);
        inst = std::move(doc.instance);
        res = std::move(doc.solution);
    }
    auto violations = verify(inst, res);
    if (violations.empty()) {
        out << "ok\n";
        return 0;
    }
    for (const auto& v : violations) out << to_string(v) << "\n";
    return 1;
}

int cmd_oracle(const std::string& instance_path, double time_limit_s,
               std::uint64_t node_limit, std::istream& in, std::ostream& out,
               std::ostream& err) {
    DemandGraph inst = read_instance(instance_path, in);
    SearchBudget budget;
    budget.time_limit = std::chrono::milliseconds(static_cast<long long>(time_limit_s * 1000));
    budget.node_limit = node_limit;
    OracleResolution o = oracle_resolve(inst, budget);
    switch (o.status) {
    case OracleStatus::Feasible:
        emit_combined(inst, o.resolution, out);
        return 0;
    case OracleStatus::Infeasible:
        out << "infeasible\n";
        return 1;
    case OracleStatus::BudgetExhausted:
        err << "search budget exhausted (no feasibility verdict)\n";
        return 2;
    }
    return 2;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"edge-disjoint path routing of demand multigraphs on complete graphs"};
    app.name("pairsolve");
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string family;
    int n = 0, r = 0, q = 0;
    std::uint64_t seed = 0;
    gen->add_option("family", family, "regular | sparse | one-factor-bundles | double-bundle")
        ->required();
    gen->add_option("--n", n, "vertex count")->required();
    auto* ropt = gen->add_option("--r", r, "target degree (regular)");
    auto* qopt = gen->add_option("--q", q, "bundle size (one-factor-bundles)");
    gen->add_option("--seed", seed, "RNG seed (PAIRSOLVE_SEED overrides)");

    auto* solve = app.add_subcommand("solve", "resolve an instance into edge-disjoint paths");
    std::string mode = "auto";
    std::string dot_path;
    std::string solve_instance = "-";
    solve->add_option("--mode", mode, "auto | regular | sparse | oracle")
        ->check(CLI::IsMember({"auto", "regular", "sparse", "oracle"}));
    solve->add_option("--dot", dot_path, "write a DOT rendering of the solution");
    solve->add_option("instance", solve_instance, "instance file, '-' for stdin");

    auto* verify_cmd = app.add_subcommand("verify", "check a solution against its instance");
    std::vector<std::string> verify_paths;
    verify_cmd->add_option("files", verify_paths,
                           "INSTANCE SOLUTION, or one combined file, or stdin");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive feasibility decision");
    std::string oracle_instance = "-";
    double time_limit_s = 60.0;
    std::uint64_t node_limit = 500'000'000ULL;
    oracle_cmd->add_option("--time-limit", time_limit_s, "seconds before giving up");
    oracle_cmd->add_option("--node-limit", node_limit, "search nodes before giving up");
    oracle_cmd->add_option("instance", oracle_instance, "instance file, '-' for stdin");

    std::vector<std::string> argv_storage = args;
    std::vector<char*> argv;
    argv.push_back(const_cast<char*>("pairsolve"));
    for (std::string& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (gen->parsed())
            return cmd_gen(family, n, r, q, seed, !ropt->empty(), !qopt->empty(), out, err);
        if (solve->parsed()) return cmd_solve(mode, solve_instance, dot_path, in, out, err);
        if (verify_cmd->parsed()) return cmd_verify(verify_paths, in, out);
        if (oracle_cmd->parsed())
            return cmd_oracle(oracle_instance, time_limit_s, node_limit, in, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace pairsolve
