#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pairsolve/cli.hpp"
#include "pairsolve/instance_io.hpp"
#include "test_support.hpp"

using namespace pairsolve;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

const std::string kFig4 = "6 7\n0 1\n0 1\n0 1\n0 2\n0 2\n1 2\n1 2\n";

} // namespace

TEST_CASE("instance grammar round-trips and rejects malformed input") {
    DemandGraph g = parse_instance_text("# comment\n2 1\n1 0\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.live_edge_count() == 1);
    std::string printed = instance_to_text(g);
    CHECK(printed == "2 1\n0 1\n");
    // printing a parsed instance is idempotent after the first normalization
    CHECK(instance_to_text(parse_instance_text(printed)) == printed);

    DemandGraph fig = parse_instance_text(kFig4);
    CHECK(fig.pair_count(0, 1) == 3);
    CHECK(fig.pair_count(0, 2) == 2);
    CHECK(fig.pair_count(1, 2) == 2);

    try {
        parse_instance_text("3 1\n0 0\n");
        FAIL("loop should be rejected");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_instance_text("3 2\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("3 1\n0 9\n"), ParseError);
    CHECK_THROWS_AS(parse_instance_text("nonsense\n"), ParseError);
}

TEST_CASE("combined documents tolerate interleaved comments") {
    std::istringstream in("# instance\n3 2\n0 1\n0 1\n# solution\n0 1\n0 2 1\n");
    std::ostringstream out, err;
    CHECK(run_cli({"verify"}, in, out, err) == 0);
    CHECK(out.str() == "ok\n");
}

TEST_CASE("gen double-bundle piped to oracle reports infeasible") {
    CliResult gen = run({"gen", "double-bundle", "--n", "4"});
    REQUIRE(gen.code == 0);
    CliResult oracle = run({"oracle"}, gen.out);
    CHECK(oracle.code == 1);
    CHECK(oracle.out == "infeasible\n");
}

TEST_CASE("gen regular, solve regular, verify chain exits 0") {
    CliResult gen = run({"gen", "regular", "--n", "24", "--r", "4", "--seed", "7"});
    REQUIRE(gen.code == 0);
    CliResult solve = run({"solve", "--mode", "regular"}, gen.out);
    REQUIRE(solve.code == 0);
    CliResult ver = run({"verify"}, solve.out);
    CHECK(ver.code == 0);
    CHECK(ver.out == "ok\n");
}

TEST_CASE("gen sparse, solve sparse, verify chain exits 0") {
    CliResult gen = run({"gen", "sparse", "--n", "30", "--seed", "3"});
    REQUIRE(gen.code == 0);
    CliResult solve = run({"solve", "--mode", "sparse"}, gen.out);
    REQUIRE(solve.code == 0);
    CliResult ver = run({"verify"}, solve.out);
    CHECK(ver.code == 0);
}

TEST_CASE("solve prints the instance followed by one path per demand") {
    CliResult solve = run({"solve", "--mode", "sparse"}, kFig4);
    REQUIRE(solve.code == 0);
    // 1 header + 7 edges + 7 paths
    CHECK(count_lines(solve.out) == 15);
    CliResult ver = run({"verify"}, solve.out);
    CHECK(ver.code == 0);
}

TEST_CASE("solve --mode auto dispatches by precondition") {
    CliResult reg = run({"solve"}, "24 1\n0 5\n");
    CHECK(reg.code == 0);
    CliResult sparse = run({"solve"}, kFig4); // degree 5 over the regular bound
    CHECK(sparse.code == 0);
    // over the sparse edge budget yet feasible: only the oracle fits
    CliResult tiny = run({"solve"}, "4 4\n0 1\n0 2\n0 3\n1 2\n");
    CHECK(tiny.code == 0);
    CliResult infeasible = run({"solve"}, "4 4\n0 1\n0 1\n2 3\n2 3\n");
    CHECK(infeasible.code == 1);
    CliResult hopeless = run({"solve"}, "12 22\n" + [] {
                                 std::string s;
                                 for (int i = 0; i < 11; ++i) s += "0 1\n";
                                 for (int i = 0; i < 11; ++i) s += "2 3\n";
                                 return s;
                             }());
    CHECK(hopeless.code == 2);
}

TEST_CASE("solve rejects instances outside the requested mode") {
    CliResult r = run({"solve", "--mode", "regular"}, kFig4);
    CHECK(r.code == 2);
    CHECK(r.err.find("precondition") != std::string::npos);
}

TEST_CASE("verify with two files and explicit violations") {
    std::string dir = "cli_verify_test";
    std::ofstream inst(dir + "_inst.txt");
    inst << "3 2\n0 1\n0 1\n";
    inst.close();
    std::ofstream sol(dir + "_sol.txt");
    sol << "0 1\n0 2 1\n";
    sol.close();
    CliResult ok = run({"verify", dir + "_inst.txt", dir + "_sol.txt"});
    CHECK(ok.code == 0);

    std::ofstream bad(dir + "_bad.txt");
    bad << "0 1\n0 1\n";
    bad.close();
    CliResult nok = run({"verify", dir + "_inst.txt", dir + "_bad.txt"});
    CHECK(nok.code == 1);
    CHECK(nok.out.find("repeated-K_n-edge") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2 and a line number") {
    CliResult r = run({"solve"}, "3 1\n0 0\n");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("oracle budget exhaustion is distinct from infeasibility") {
    CliResult gen = run({"gen", "double-bundle", "--n", "5"});
    CliResult r = run({"oracle", "--node-limit", "10"}, gen.out);
    CHECK(r.code == 2);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("gen is deterministic and PAIRSOLVE_SEED overrides --seed") {
    CliResult a = run({"gen", "sparse", "--n", "12", "--seed", "5"});
    CliResult b = run({"gen", "sparse", "--n", "12", "--seed", "5"});
    CHECK(a.out == b.out);

    setenv("PAIRSOLVE_SEED", "99", 1);
    CliResult c = run({"gen", "sparse", "--n", "12", "--seed", "5"});
    unsetenv("PAIRSOLVE_SEED");
    CliResult d = run({"gen", "sparse", "--n", "12", "--seed", "99"});
    CHECK(c.out == d.out);
    CHECK(c.out != a.out);
}

TEST_CASE("solve --dot renders demand edges and colored paths") {
    std::string path = "cli_dot_test.dot";
    CliResult solve = run({"solve", "--mode", "sparse", "--dot", path}, kFig4);
    REQUIRE(solve.code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string dot = ss.str();
    CHECK(dot.find("graph demand {") != std::string::npos);
    CHECK(dot.find("style=dashed") != std::string::npos);
    CHECK(dot.find("penwidth=2") != std::string::npos);
}

TEST_CASE("solve output is deterministic, frozen for the figure instance") {
    CliResult a = run({"solve", "--mode", "sparse"}, kFig4);
    CliResult b = run({"solve", "--mode", "sparse"}, kFig4);
    CHECK(a.out == b.out);
    CHECK(a.out == kFig4 + "0 1\n0 3 1\n0 4 1\n0 2\n0 5 2\n1 2\n1 5 3 2\n");
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"gen", "regular", "--n", "10"}).code == 2); // missing --r
    CHECK(run({"gen", "mystery", "--n", "4"}).code == 2);
    CHECK(run({"gen", "sparse", "--n", "10", "--r", "2"}).code == 2);
    CHECK(run({"solve", "--mode", "nonsense"}, kFig4).code == 2);
}
