#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ctoric/io.hpp"

using namespace ctoric;

namespace {

std::string data_path(const std::string& name) {
    return std::string(CTORIC_DATA_DIR) + "/" + name;
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CTORIC_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("poset file parsing") {
    std::istringstream good("   # comment\nposet n=3\ncover 2 1\ncover 2 3\n");
    Poset p = parse_poset(good);
    CHECK(p.n == 3);
    CHECK(p.less(1, 0));

    std::istringstream bad_header("poset n=0\n");
    CHECK_THROWS_AS(parse_poset(bad_header), ParseError);
    std::istringstream bad_index("poset n=2\ncover 1 5\n");
    CHECK_THROWS_AS(parse_poset(bad_index), ParseError);
    std::istringstream garbage("poset n=2\ncover 1\n");
    CHECK_THROWS_AS(parse_poset(garbage), ParseError);
    std::istringstream empty("# nothing\n");
    CHECK_THROWS_AS(parse_poset(empty), ParseError);

    // round trip through the text form
    std::istringstream again(poset_to_text(p));
    CHECK(parse_poset(again).above == p.above);
}

TEST_CASE("graph file parsing") {
    std::istringstream good("graph n=3\nedge 1 2\nedge 2 3\n");
    Graph g = parse_graph(good);
    CHECK(g.edge_count() == 2);

    std::istringstream zero("graph n=0\n");
    CHECK_THROWS_AS(parse_graph(zero), ParseError);
    std::istringstream loop("graph n=2\nedge 1 1\n");
    CHECK_THROWS_AS(parse_graph(loop), ParseError);

    std::istringstream again(graph_to_text(g));
    CHECK(parse_graph(again).adj == g.adj);
}

TEST_CASE("basis serialization round trip") {
    PureBinomial f;
    f.plus = {0, 2, 0};
    f.minus = {1, 0, 1};
    f.initial_is_plus = true;
    nlohmann::json j = basis_to_json({f});
    auto back = basis_from_json(j);
    REQUIRE(back.size() == 1);
    CHECK(back[0].plus == f.plus);
    CHECK(back[0].minus == f.minus);
    CHECK(back[0].initial_is_plus);
}

TEST_CASE("configuration serialization round trip") {
    Configuration a = Configuration::from_columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    Configuration b = configuration_from_json(configuration_to_json(a));
    CHECK(a.cols == b.cols);
    CHECK(a.grading == b.grading);
}

TEST_CASE("analyze-poset on the intro file echoes the printed matrix") {
    CliResult r = run_cli("analyze-poset " + data_path("intro.poset") + " --d 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("3 2 1 0 0 0 0") != std::string::npos);
    CHECK(r.output.find("0 1 2 3 2 1 0") != std::string::npos);
    CHECK(r.output.find("0 0 0 0 1 2 3") != std::string::npos);
    CHECK(r.output.find("verdicts agree: yes") != std::string::npos);
}

TEST_CASE("analyze-poset on the four-cycle reports the obstruction") {
    CliResult r = run_cli("analyze-poset " + data_path("c4.poset") + " --d 2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(!j["chordal"].get<bool>());
    CHECK(j["verdicts_agree"].get<bool>());
    CHECK(j["per_d"][0]["minimal_degrees"].size() > 0);
    CHECK(reverify_report(j));
}

TEST_CASE("analyze-graph reports and reverifies") {
    for (const std::string name : {"sun3.graph", "c5.graph", "two_triangles.graph"}) {
        CliResult r = run_cli("analyze-graph " + data_path(name) + " --format json");
        CHECK(r.exit_code == 0);
        nlohmann::json j = nlohmann::json::parse(r.output);
        CHECK(j["verdicts_agree"].get<bool>());
        CHECK(reverify_report(j));
    }
}

TEST_CASE("gb command prints the two-chain relation") {
    CliResult r = run_cli("gb " + data_path("chain2.poset") + " --d 2 --order paper");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("y_{12}*y_{12} - y_{11}*y_{22}") != std::string::npos);
}

TEST_CASE("gb with the paper order rejects non-chordal input") {
    CliResult r = run_cli("gb " + data_path("c4.poset") + " --d 2 --order paper");
    CHECK(r.exit_code == 1);
}

TEST_CASE("markov --chains finds the single cubic of the final example") {
    CliResult r = run_cli("markov " + data_path("final_example.poset") + " --d 2 --chains --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j["markov"].size() == 1);
    CHECK(j["max_degree"].get<int>() == 3);
    CHECK(j["minimal_degrees"] == nlohmann::json::array({3}));
}

TEST_CASE("normality command reports the star hole") {
    CliResult r = run_cli("normality " + data_path("star.poset") + " --d 2 --t-max 2 --format json");
    CHECK(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(!j["disjoint_union_of_chains"].get<bool>());
    bool found = false;
    for (const auto& h : j["holes"])
        if (h["vector"] == nlohmann::json::array({0, 1, 1})) {
            found = true;
            CHECK(h["in_ZA"].get<bool>());
            CHECK(h["in_cone"].get<bool>());
            CHECK(!h["in_monoid"].get<bool>());
        }
    CHECK(found);
}

TEST_CASE("malformed file gives exit code one") {
    std::string tmp = data_path("../build/garbage.poset");
    {
        std::ofstream out(tmp);
        out << "poset n=2\ncover nope\n";
    }
    CliResult r = run_cli("analyze-poset " + tmp);
    CHECK(r.exit_code == 1);
    CliResult missing = run_cli("analyze-poset /nonexistent.poset");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("sweep commands emit parseable reports and agree") {
    CliResult r = run_cli("sweep-posets --n 3 --d 2 --format json");
    CHECK(r.exit_code == 0);
    int lines = 0;
    std::istringstream ss(r.output);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line);
        CHECK(j["verdicts_agree"].get<bool>());
        CHECK(reverify_report(j));
        ++lines;
    }
    CHECK(lines == 19);

    CliResult oversized = run_cli("sweep-posets --n 9");
    CHECK(oversized.exit_code == 1);

    CliResult graphs = run_cli("sweep-graphs --n 4 --format json");
    CHECK(graphs.exit_code == 0);
    int glines = 0;
    std::istringstream gs(graphs.output);
    while (std::getline(gs, line))
        if (!line.empty()) ++glines;
    CHECK(glines == 64);
}

TEST_CASE("selfcheck runs clean on a small count") {
    CliResult r = run_cli("selfcheck --count 50 --seed 99");
    CHECK(r.exit_code == 0);
}
