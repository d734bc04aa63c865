// Drives the built binary end to end: exit codes, graph-file round trips,
// validation outcomes. The binary path arrives in FORESTCONC_BIN.

#include <sys/wait.h>

#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "forestconc/families.hpp"
#include "forestconc/graph_io.hpp"

using namespace forestconc;

namespace {

std::string cli_path() {
    const char* p = std::getenv("FORESTCONC_BIN");
    REQUIRE(p != nullptr);
    return p;
}

int run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " > /tmp/forestconc_cli_test.log 2>&1";
    int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("graph file round trip through the library") {
    GraphFile gf;
    gf.graph = Graph(5, {{0, 1}, {1, 2}, {3, 4}, {0, 4}});
    gf.labels = std::vector<std::string>{"a", "b", "c", "d", "e"};
    save_graph_file(gf, "/tmp/forestconc_rt.json");
    GraphFile back = load_graph_file("/tmp/forestconc_rt.json");
    CHECK(back.graph == gf.graph);
    CHECK(back.labels == gf.labels);
}

TEST_CASE("graph file parsing rejects bad input") {
    {
        std::ofstream out("/tmp/forestconc_bad1.json");
        out << R"({"n": 3, "edges": [[0, 0]]})";
    }
    REQUIRE_THROWS(load_graph_file("/tmp/forestconc_bad1.json"));
    {
        std::ofstream out("/tmp/forestconc_bad2.json");
        out << R"({"n": 3, "edges": [[0, 1], [1, 0]]})";
    }
    REQUIRE_THROWS(load_graph_file("/tmp/forestconc_bad2.json"));
    {
        std::ofstream out("/tmp/forestconc_bad3.json");
        out << R"({"n": 2, "edges": [[0, 1]], "labels": ["x", "x"]})";
    }
    REQUIRE_THROWS(load_graph_file("/tmp/forestconc_bad3.json"));
}

TEST_CASE("cli exit codes") {
    CHECK(run("complexity --family cycle --n 6") == 0);
    CHECK(run("complexity --graph /tmp/does_not_exist.json") == 2);
    CHECK(run("complexity") == 2);  // no graph given
    CHECK(run("bound --graph-family cycle --n 4 --family tree --t 1") == 2);
    CHECK(run("nonsense-subcommand") == 2);
    CHECK(run("--help") == 0);
    CHECK(run("simulate --sampler mdep --n 30 --m 1 --trials 5000 --seed 4") == 0);
}

TEST_CASE("cli writes graph files that re-parse to the identical graph") {
    CHECK(run("complexity --family grid --m 3 --emit-graph /tmp/forestconc_emit1.json") == 0);
    GraphFile emitted = load_graph_file("/tmp/forestconc_emit1.json");
    CHECK(emitted.graph == grid_graph(3));
    CHECK(run("complexity --graph /tmp/forestconc_emit1.json --emit-graph "
              "/tmp/forestconc_emit2.json") == 0);
    CHECK(slurp("/tmp/forestconc_emit1.json") == slurp("/tmp/forestconc_emit2.json"));
}
