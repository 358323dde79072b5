#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ilmt/cli.hpp"
#include "ilmt/enumerate.hpp"
#include "ilmt/fixtures.hpp"
#include "ilmt/generate.hpp"
#include "ilmt/io.hpp"

using namespace ilmt;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/ilmt_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("edge list round trip") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tournament t = random_tournament(3 + static_cast<int>(seed) * 5, seed);
        std::stringstream ss;
        write_edge_list(ss, t);
        Tournament back = read_tournament(ss);
        CHECK(back == t);
    }
    // comments and blank lines are ignored
    std::stringstream ss("# comment\nn 2\n\n0 1  # trailing\n");
    CHECK(read_tournament(ss) == single_arc());
    std::stringstream bad("0 1\n");
    CHECK_THROWS(read_tournament(bad));
}

TEST_CASE("oriented round trip keeps partial orientations") {
    OrientedGraph g = oriented_generate(OrientedGraph::from_tournament(single_arc()),
                                        GeneratingSequence::parse("10"), 2)
                          .graph;
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_oriented(ss) == g);
}

TEST_CASE("genealogy labels follow the prime notation") {
    Generated gen = generate(single_arc(), GeneratingSequence::parse("10"), 2);
    auto labels = genealogy_labels(gen.graph.order(), gen.steps);
    REQUIRE(labels.size() == 8);
    CHECK(labels[0] == "a");
    CHECK(labels[1] == "b");
    CHECK(labels[2] == "a'");
    CHECK(labels[3] == "b'");
    CHECK(labels[4] == "a''");
    CHECK(labels[5] == "b''");
    CHECK(labels[6] == "(a')'");
    CHECK(labels[7] == "(b')'");
    std::string dot = dot_export(gen.graph, gen.steps);
    CHECK(dot.find("label=\"(a')'\"") != std::string::npos);
    CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("generate subcommand reproduces the known iterate") {
    TempFile out("gen.txt");
    int rc = run_cli({"generate", "--base", "edge", "--seq", "10", "--steps", "2", "--format",
                      "edgelist", "--out", out.path});
    CHECK(rc == 0);
    std::stringstream ss(slurp(out.path));
    Tournament g = read_tournament(ss);
    CHECK(g == generate(single_arc(), GeneratingSequence::parse("10"), 2).graph);

    // echo without steps
    TempFile out2("gen2.txt");
    CHECK(run_cli({"generate", "--base", "d3", "--steps", "0", "--out", out2.path}) == 0);
    std::stringstream ss2(slurp(out2.path));
    CHECK(read_tournament(ss2) == d3());
}

TEST_CASE("census subcommand") {
    TempFile out("census.json");
    CHECK(run_cli({"census", "--base", "d3", "--k", "3", "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["a"] == 1);
    CHECK(j["b"] == 0);

    CHECK(run_cli({"census", "--base", "d3", "--seq", "0", "--steps", "1", "--k", "3", "--out",
                   out.path}) == 0);
    j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["a"] == 8);
    CHECK(j["b"] == 12);
}

TEST_CASE("analyze subcommand") {
    TempFile out("analyze.json");
    CHECK(run_cli({"analyze", "--base", "d3", "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["diameter"] == 2);
    CHECK(j["strong"] == true);
    CHECK(j["kappa"] == 1);
    CHECK(j["gamma_in"] == 2);
    CHECK(j["gamma_out"] == 2);

    CHECK(run_cli({"analyze", "--base", "t3", "--out", out.path}) == 0);
    j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["strong"] == false);
    CHECK_FALSE(j.contains("diameter"));
    CHECK(j["kappa"] == 0);
    CHECK(j["gamma_in"] == 1);
    CHECK(j["gamma_out"] == 1);

    CHECK(run_cli({"analyze", "--base", "d3", "--seq", "0", "--steps", "1", "--cop", "--chi",
                   "--out", out.path}) == 0);
    j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["cop_number"] == 2);
    CHECK(j["chi"] == 2);
}

TEST_CASE("reports are byte-identical across runs") {
    TempFile a("det_a.json"), b("det_b.json");
    std::vector<std::string> args = {"census", "--base", "t3",  "--seq", "01",
                                     "--steps", "2",     "--k", "4"};
    auto run = [&](const std::string& path) {
        auto full = args;
        full.push_back("--out");
        full.push_back(path);
        return run_cli(full);
    };
    CHECK(run(a.path) == 0);
    CHECK(run(b.path) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
    CHECK_FALSE(slurp(a.path).empty());
}

TEST_CASE("embed subcommand") {
    TempFile out("embed.json");
    CHECK(run_cli({"embed", "--base", "t3", "--target", "d3", "--seq", "000", "--out",
                   out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["verified"] == true);
    CHECK(j["host_order"] == 24);
    CHECK(j["zeros_used"] == 3);

    // target larger than base: precondition error, exit 1
    CHECK(run_cli({"embed", "--base", "edge", "--target", "d3", "--seq", "000"}) == 1);
}

TEST_CASE("solve-cops subcommand") {
    TempFile out("cops.json");
    CHECK(run_cli({"solve-cops", "--base", "d3", "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["cop_number"] == 2);
    CHECK(j["strategy"].is_object());
    CHECK_FALSE(j["strategy"].empty());

    CHECK(run_cli({"solve-cops", "--base", "d3", "--k", "1", "--out", out.path}) == 0);
    j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["cops_win"] == false);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"generate", "--base", "no-such-file"}) == 1);          // parse error
    CHECK(run_cli({"generate", "--base", "d3", "--seq", "abc"}) == 1);    // bad literal
    CHECK(run_cli({"nonsense"}) == 1);                                    // usage
    CHECK(run_cli({"generate", "--base", "d3", "--seq", "00000", "--steps", "5", "--max-nodes",
                   "16"}) == 2);                                          // cap
    TempFile out("verify.json");
    CHECK(run_cli({"verify", "universality", "--out", out.path}) == 0);   // all pass
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["failed"] == 0);
    CHECK(j["passed"] >= 3);
}

TEST_CASE("file-based bases work end to end") {
    TempFile graph("base.edges");
    {
        std::ofstream f(graph.path);
        write_edge_list(f, mixed4());
    }
    TempFile out("file_analyze.json");
    CHECK(run_cli({"analyze", "--base", graph.path, "--out", out.path}) == 0);
    auto j = nlohmann::json::parse(slurp(out.path));
    CHECK(j["n"] == 4);
    CHECK(j["strong"] == true);
}
