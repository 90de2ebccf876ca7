#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "turan/cli.hpp"
#include "turan/errors.hpp"
#include "turan/hypergraph.hpp"
#include "turan/io.hpp"
#include "turan/solver.hpp"

using namespace turan;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out, err;
    json machine;
};

CliRun cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    CliRun r{code, out.str(), err.str(), json()};
    auto pos = r.out.rfind("machine: ");
    if (pos != std::string::npos) {
        std::string tail = r.out.substr(pos + 9);
        r.machine = json::parse(tail);
    }
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/turan_test_") + name;
}

} // namespace

TEST_CASE("edge list parsing and round trip") {
    std::string text = "3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n";
    Hypergraph h = parse_hypergraph(text);
    CHECK(h == Hypergraph::complete(4, 3));
    CHECK(format_hypergraph(h) == text); // byte-identical for normalized input

    // unsorted lines and unsorted vertices within a line are normalized
    Hypergraph g = parse_hypergraph("3 4\n3 2 1\n0 1 2\n");
    CHECK(format_hypergraph(g) == "3 4\n0 1 2\n1 2 3\n");
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_hypergraph("3 4\n0 1 2\n0 1 2\n"), "line 3: duplicate edge",
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_hypergraph("3 5\n0 1 5\n"), "line 2: vertex index out of range",
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_hypergraph("3 5\n0 1 1\n"), "line 2: repeated vertex in edge",
                         parse_error);
    CHECK_THROWS_AS(parse_hypergraph("3\n"), parse_error);
    CHECK_THROWS_AS(parse_hypergraph(""), parse_error);
    CHECK_THROWS_AS(parse_hypergraph("3 5\n0 1\n"), parse_error);
}

TEST_CASE("named graphs") {
    CHECK(named_graph("K4_3") == Hypergraph::complete(4, 3));
    CHECK(named_graph("K8_5") == Hypergraph::complete(8, 5));
    CHECK(named_graph("K4_3_minus_e").edge_count() == 3);
    CHECK(named_graph("P3").edge_count() == 2);
    CHECK(named_graph("edgeless(6,3)") == Hypergraph::edgeless(6, 3));
    CHECK_THROWS_AS(named_graph("K9_3"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("K4_6"), std::invalid_argument);
    CHECK_THROWS_AS(named_graph("waffle"), std::invalid_argument);
    CHECK(is_named_graph("K4_3"));
    CHECK_FALSE(is_named_graph("/tmp/some_file.hg"));
}

TEST_CASE("cli solve oracle equals the library call") {
    CliRun r = cli({"solve", "--n", "5", "--k", "3", "--l", "2", "--forbidden", "K4_3", "--mode",
                    "oracle"});
    CHECK(r.code == exit_ok);
    ForbiddenFamily fam(3);
    fam.add(named_graph("K4_3"));
    SearchResult lib = oracle_ex(SearchProblem(5, 3, 2, fam));
    CHECK(r.machine["values"]["value"].get<long long>() == lib.value_lo);
    CHECK(r.machine["values"]["status"] == "proved-exact");
}

TEST_CASE("cli replay reproduces values bit for bit") {
    std::vector<std::string> cmd = {"solve", "--n",   "6",    "--k",     "3",
                                    "--l",   "2",     "--forbidden", "K4_3", "--mode",
                                    "heuristic", "--seed", "99", "--restarts", "4"};
    CliRun a = cli(cmd);
    CliRun b = cli(cmd);
    CHECK(a.code == exit_ok);
    CHECK(a.machine["values"] == b.machine["values"]);
}

TEST_CASE("cli construct emits parseable artifacts with matching digest") {
    std::string out = temp_path("b.hg");
    CliRun r = cli({"construct", "b", "--p", "2", "--t", "4", "--k", "3", "--l", "2", "--out",
                    out});
    CHECK(r.code == exit_ok);
    Hypergraph h = read_hypergraph_file(out);
    CHECK(h.n == 8);
    CHECK(h.edge_count() == 40);

    std::ifstream meta(out + ".meta.json");
    REQUIRE(meta.good());
    json m = json::parse(meta);
    CHECK(m["variant"] == "B");
    CHECK(m["digest"] == file_digest(out));

    CliRun s = cli({"stats", "--file", out, "--l", "2"});
    CHECK(s.code == exit_ok);
    CHECK(s.machine["values"]["delta_l"].get<long long>() == 2);
    CHECK(s.out.find("finite ratio") != std::string::npos);
    std::remove(out.c_str());
    std::remove((out + ".meta.json").c_str());
}

TEST_CASE("cli check-free and count-copies") {
    CliRun free_run = cli({"check-free", "--file", "K4_3_minus_e", "--forbidden", "K4_3"});
    CHECK(free_run.code == exit_ok);
    CHECK(free_run.out.find("free: true") != std::string::npos);

    CliRun notfree = cli({"check-free", "--file", "K5_3", "--forbidden", "K4_3"});
    CHECK(notfree.out.find("free: false") != std::string::npos);

    CliRun copies = cli({"count-copies", "--file", "K6_3", "--pattern", "K4_3"});
    CHECK(copies.machine["values"]["copies"].get<long long>() == 15);
}

TEST_CASE("cli forbidden flags deduplicate family members") {
    CliRun r = cli({"check-free", "--file", "K4_3_minus_e", "--forbidden", "K4_3", "--forbidden",
                    "K4_3"});
    CHECK(r.out.find("family members after deduplication: 1") != std::string::npos);
}

TEST_CASE("cli link-family") {
    CliRun r = cli({"link-family", "--graph", "K4_3_minus_e", "--l", "1"});
    CHECK(r.code == exit_ok);
    CHECK(r.machine["values"]["members"].get<int>() == 2);
}

TEST_CASE("cli params") {
    CliRun r = cli({"params", "--k", "3", "--l", "2", "--delta", "1/10", "--q", "1/2"});
    CHECK(r.code == exit_ok);
    CHECK(r.machine["values"]["t"].get<long>() == 50);
    CHECK(r.machine["values"]["M0"].get<long>() == 100);
    CHECK(r.machine["values"]["a"].get<long>() == 4);
    CHECK(r.machine["values"]["b"].get<long>() == 8);
}

TEST_CASE("cli count good-subsets") {
    CliRun r = cli({"count", "good-subsets", "--file", "K7_3", "--l", "2", "--m", "5", "--alpha",
                    "1/3", "--exact"});
    CHECK(r.code == exit_ok);
    CHECK(r.machine["values"]["count"] == "21");
}

TEST_CASE("cli exit codes") {
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"solve", "--n", "5"}).code == exit_usage);
    CHECK(cli({"stats", "--file", "/nonexistent/x.hg", "--l", "2"}).code == exit_data);
    // oracle beyond its supported size
    CHECK(cli({"solve", "--n", "9", "--k", "3", "--l", "2", "--forbidden", "K4_3", "--mode",
               "oracle"}).code == exit_unsupported);
    // malformed edge list file
    std::string bad = temp_path("bad.hg");
    std::ofstream(bad) << "3 4\n0 1 2\n0 1 2\n";
    CHECK(cli({"stats", "--file", bad, "--l", "2"}).code == exit_data);
    std::remove(bad.c_str());
    // tiny node budget forces exit code 2
    CHECK(cli({"solve", "--n", "9", "--k", "3", "--l", "2", "--forbidden", "K4_3", "--mode",
               "decision:3", "--nodes", "40"}).code == exit_budget);
}

TEST_CASE("cli construct giraud from an explicit matrix file") {
    std::string mat = temp_path("mat.txt");
    std::ofstream(mat) << "1 1\n1 0\n";
    std::string out = temp_path("giraud.hg");
    CliRun r = cli({"construct", "giraud", "--matrix-file", mat, "--out", out});
    CHECK(r.code == exit_ok);
    Hypergraph g = read_hypergraph_file(out);
    CHECK(g.n == 4);
    // order-2 Sylvester matrix: no 3-row or 3-column sets exist, and the only
    // 2x2 submatrix has odd sum
    CHECK(g.edge_count() == 1);
    std::remove(mat.c_str());
    std::remove(out.c_str());
    std::remove((out + ".meta.json").c_str());
}

TEST_CASE("reports are line-oriented and re-parseable") {
    CliRun r = cli({"stats", "--file", "K4_3", "--l", "2"});
    REQUIRE(r.code == exit_ok);
    std::istringstream in(r.out);
    std::string line;
    bool saw_machine = false;
    while (std::getline(in, line)) {
        if (line.rfind("machine: ", 0) == 0) {
            saw_machine = true;
            CHECK_NOTHROW(json::parse(line.substr(9)));
            continue;
        }
        CHECK(line.find(": ") != std::string::npos);
    }
    CHECK(saw_machine);
    CHECK(r.out.find("tool: ") == 0);
}

TEST_CASE("file digest is stable") {
    std::string p = temp_path("digest.hg");
    std::ofstream(p) << "3 4\n0 1 2\n";
    std::string d1 = file_digest(p);
    std::string d2 = file_digest(p);
    CHECK(d1 == d2);
    CHECK(d1.rfind("fnv1a64:", 0) == 0);
    std::remove(p.c_str());
}
