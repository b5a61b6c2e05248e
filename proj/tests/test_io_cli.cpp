#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "loopdeg/cli.hpp"
#include "loopdeg/error.hpp"
#include "loopdeg/io.hpp"
#include "loopdeg/transforms.hpp"
#include "test_support.hpp"

namespace loopdeg {
namespace {

using io::json;

TEST(ParseDegrees, Formats) {
    EXPECT_EQ(io::parse_degrees("4 4 2 2"), (std::vector<Degree>{4, 4, 2, 2}));
    EXPECT_EQ(io::parse_degrees(" 3,1 ,2\n"), (std::vector<Degree>{3, 1, 2}));
    EXPECT_EQ(io::parse_degrees(R"({"degrees": [2, 1]})"), (std::vector<Degree>{2, 1}));
    EXPECT_EQ(io::parse_degrees("[5]"), (std::vector<Degree>{5}));
    EXPECT_TRUE(io::parse_degrees("").empty());
    EXPECT_TRUE(io::parse_degrees("   ").empty());
    EXPECT_EQ(io::parse_degrees("-1 2"), (std::vector<Degree>{-1, 2}));
    EXPECT_THROW(io::parse_degrees("3 x"), Error);
    EXPECT_THROW(io::parse_degrees("3x"), Error);
    EXPECT_THROW(io::parse_degrees(R"({"degree": [1]})"), Error);
    EXPECT_THROW(io::parse_degrees(R"({"degrees": [1.5]})"), Error);
}

TEST(GraphJson, Schema) {
    const GraphWithLoops g(3, {{0, 1}, {2, 1}}, {2});
    EXPECT_EQ(io::to_json(g), json::parse(R"({"n":3,"edges":[[0,1],[1,2]],"loops":[2]})"));
    EXPECT_EQ(io::graph_from_json(json::parse(R"({"n":2,"edges":[[1,0]]})")),
              GraphWithLoops(2, {{0, 1}}, {}));
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"edges":[]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"n":2,"edges":[[0,0]]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"n":2,"edges":[[0,1,2]]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"n":2,"edges":[],"loops":[1,1]})")), Error);
    EXPECT_THROW(io::graph_from_json(json::parse(R"({"n":-1,"edges":[]})")), Error);
}

TEST(GraphJson, RoundTripsRandomGraphs) {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 300; ++i) {
        const GraphWithLoops g = testing::random_graph(rng, 15);
        EXPECT_EQ(io::graph_from_json(io::parse_json(io::to_json(g).dump())), g);

        const BipartiteGraph b = tensor_double_cover(g);
        EXPECT_EQ(io::bipartite_from_json(io::parse_json(io::to_json(b).dump())), b);

        const LoopMultigraph m = topological_double_cover(g);
        EXPECT_EQ(io::multigraph_from_json(io::parse_json(io::to_json(m).dump())), m);
    }
}

TEST(Dot, RendersLoopsAsSelfEdges) {
    const std::string dot = io::to_dot(GraphWithLoops(2, {{0, 1}}, {1}));
    EXPECT_EQ(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n  1 -- 1;\n}\n");
    const std::string multi = io::to_dot(topological_double_cover(GraphWithLoops(1, {}, {0})));
    EXPECT_EQ(multi, "graph M {\n  0;\n  1;\n  0 -- 1;\n  0 -- 1;\n}\n");
    EXPECT_NE(io::to_dot(BipartiteGraph(1, 1, {{0, 0}})).find("L0 -- R0"), std::string::npos);
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
    args.insert(args.begin(), "loopdeg");
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

json first_json_line(const std::string& text) {
    return json::parse(text.substr(0, text.find('\n')));
}

TEST(CliCheck, ExitCodes) {
    EXPECT_EQ(run_cli({"check", "--mode", "gale-ryser", "4 4 2 2"}).code, cli::kPass);

    const CliResult eg = run_cli({"check", "--mode", "eg", "3 3 1 1"});
    EXPECT_EQ(eg.code, cli::kFail);
    EXPECT_NE(eg.out.find("first violation: k=2"), std::string::npos);

    EXPECT_EQ(run_cli({"check", "--mode", "loops-reduced", ""}).code, cli::kPass);
    EXPECT_EQ(run_cli({"check", "--mode", "loops-reduced", "1 2"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"check", "--mode", "loops-reduced", "--sort", "1 2"}).code, cli::kPass);
    EXPECT_EQ(run_cli({"check", "--mode", "nonsense", "1"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"check", "2 2"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"check", "--mode", "eg", "1 a"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"check", "--mode", "eg", "-1"}).code, cli::kInputError);
}

TEST(CliCheck, JsonReportAndStdin) {
    const CliResult r = run_cli({"check", "--mode", "eg", "--json", "-"}, "3 3 1 1\n");
    EXPECT_EQ(r.code, cli::kFail);
    const json j = first_json_line(r.out);
    EXPECT_EQ(j["first_violation"], 2);
    EXPECT_EQ(j["rows"][1]["lhs"], 6);
    EXPECT_EQ(j["rows"][1]["rhs"], 4);
    EXPECT_EQ(j["degrees"], json::parse("[3,3,1,1]"));
}

TEST(CliCheck, ReadsSequenceFiles) {
    const std::string path = ::testing::TempDir() + "loopdeg_seq.json";
    std::ofstream(path) << R"({"degrees": [3, 3, 3]})";
    EXPECT_EQ(run_cli({"check", "--mode", "loops-reduced", path}).code, cli::kPass);
    EXPECT_EQ(run_cli({"check", "--mode", "loops-double", path}).code, cli::kFail);
}

TEST(CliRealize, Examples) {
    const CliResult r = run_cli({"realize", "--mode", "loops-reduced", "3 3 3"});
    ASSERT_EQ(r.code, cli::kPass);
    const GraphWithLoops g = io::graph_from_json(first_json_line(r.out));
    EXPECT_EQ(g.edges().size(), 3u);
    EXPECT_EQ(g.loops().size(), 3u);

    const CliResult tri = run_cli({"realize", "--mode", "simple", "2 2 2"});
    ASSERT_EQ(tri.code, cli::kPass);
    EXPECT_EQ(io::graph_from_json(first_json_line(tri.out)),
              GraphWithLoops(3, {{0, 1}, {0, 2}, {1, 2}}, {}));

    const CliResult odd = run_cli({"realize", "--mode", "loops-double", "3"});
    EXPECT_EQ(odd.code, cli::kFail);
    EXPECT_NE(odd.err.find("fails at k=1"), std::string::npos);
}

TEST(CliRealize, TraceAndDot) {
    const CliResult r = run_cli({"realize", "--mode", "loops-double", "--trace", "4 4 4"});
    ASSERT_EQ(r.code, cli::kPass);
    const json j = first_json_line(r.out);
    EXPECT_EQ(io::graph_from_json(j["graph"]), complete_graph_with_loops(3));
    EXPECT_EQ(j["trace"]["order"], 3);
    EXPECT_FALSE(j["trace"]["rebuild_steps"].empty());
    EXPECT_EQ(j["trace"]["reductions"][0]["original"], json::parse("[4,4,4]"));

    const CliResult dot = run_cli({"realize", "--mode", "loops-reduced", "--dot", "1"});
    EXPECT_EQ(dot.out, "graph G {\n  0;\n  0 -- 0;\n}\n");
    EXPECT_EQ(run_cli({"realize", "--mode", "simple", "--dot", "--trace", "1 1"}).code,
              cli::kInputError);
}

const char* kCompleteThree = R"({"n":3,"edges":[[0,1],[0,2],[1,2]],"loops":[0,1,2]})";

TEST(CliCover, Examples) {
    const CliResult t = run_cli({"cover", "--kind", "tensor", kCompleteThree});
    ASSERT_EQ(t.code, cli::kPass);
    const BipartiteGraph b = io::bipartite_from_json(first_json_line(t.out));
    EXPECT_EQ(b.edges().size(), 9u);
    EXPECT_EQ(bipartite_part_degrees(b).first, make_sequence({3, 3, 3}));

    const CliResult top = run_cli({"cover", "--kind", "topological", kCompleteThree});
    ASSERT_EQ(top.code, cli::kPass);
    const LoopMultigraph m = io::multigraph_from_json(first_json_line(top.out));
    int doubles = 0;
    for (const auto& [e, mult] : m.multiplicities()) doubles += mult == 2;
    EXPECT_EQ(doubles, 3);

    const CliResult empty = run_cli({"cover", "--kind", "tensor", R"({"n":2,"edges":[]})"});
    EXPECT_EQ(io::bipartite_from_json(first_json_line(empty.out)), BipartiteGraph(2, 2));

    EXPECT_EQ(run_cli({"cover", "{not json"}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"cover", R"({"n":1,"edges":[[0,1]]})"}).code, cli::kInputError);
}

TEST(CliComplement, GraphAndSequence) {
    const CliResult g = run_cli({"complement", kCompleteThree});
    ASSERT_EQ(g.code, cli::kPass);
    EXPECT_EQ(io::graph_from_json(first_json_line(g.out)), GraphWithLoops(3));

    const CliResult s = run_cli({"complement", "--sequence", "4 4 2 2"});
    ASSERT_EQ(s.code, cli::kPass);
    EXPECT_EQ(first_json_line(s.out)["degrees"], json::parse("[2,2,0,0]"));
    EXPECT_EQ(run_cli({"complement", "--sequence", "3 1"}).code, cli::kInputError);
}

TEST(CliOracle, SingleQueries) {
    const CliResult r = run_cli({"oracle", "--convention", "reduced", "3 3 1 1"});
    ASSERT_EQ(r.code, cli::kPass);
    const json j = first_json_line(r.out);
    EXPECT_TRUE(j["realizable"].get<bool>());
    EXPECT_TRUE(verify_realization(io::graph_from_json(j["witness"]), make_sequence({3, 3, 1, 1}),
                                   Convention::Reduced));

    EXPECT_EQ(run_cli({"oracle", "--convention", "double", "2"}).code, cli::kPass);
    EXPECT_EQ(run_cli({"oracle", "--convention", "reduced", "2"}).code, cli::kFail);
    EXPECT_EQ(run_cli({"oracle", "--convention", "reduced", "--compare", "2"}).code, cli::kPass);
    EXPECT_EQ(run_cli({"oracle", "--bipartite", "4 4 2 2"}).code, cli::kPass);
    EXPECT_EQ(run_cli({"oracle", "--convention", "double", "1 1 1 1 1 1"}).code, cli::kBudget);
    EXPECT_EQ(run_cli({"oracle", "--max-n", "6", "--convention", "double", "1 1 1 1 1 1"}).code,
              cli::kPass);
}

TEST(CliOracle, ScanCompare) {
    const CliResult r =
        run_cli({"oracle", "--scan", "--n", "4", "--dmax", "4", "--convention", "reduced",
                 "--compare"});
    EXPECT_EQ(r.code, cli::kPass);
    EXPECT_NE(r.out.find("0 disagreements"), std::string::npos);

    const CliResult lines = run_cli(
        {"oracle", "--scan", "--n", "2", "--dmax", "2", "--convention", "double", "--jsonl"});
    ASSERT_EQ(lines.code, cli::kPass);
    std::istringstream is(lines.out);
    std::string line;
    int count = 0;
    while (std::getline(is, line)) {
        const json j = json::parse(line);
        EXPECT_TRUE(j.contains("degrees"));
        EXPECT_EQ(j.contains("witness"), j["realizable"].get<bool>());
        ++count;
    }
    EXPECT_EQ(count, 6);

    EXPECT_EQ(run_cli({"oracle", "--scan", "--n", "9", "--dmax", "2", "--convention", "double"})
                  .code,
              cli::kBudget);
}

}  // namespace
}  // namespace loopdeg
