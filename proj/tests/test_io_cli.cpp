#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "medianlab/burling.hpp"
#include "medianlab/generators.hpp"
#include "medianlab/json_io.hpp"
#include "medianlab/lifting.hpp"

using namespace medianlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("medianlab_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

struct CliResult {
    int exit_code;
    std::string output;
};

CliResult run_cli(const std::string& args, const TempDir& dir) {
    std::string out_file = dir.file("cli_output.txt");
    std::string cmd = std::string(MEDIANLAB_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out_file)};
}

}  // namespace

TEST_CASE("graph json roundtrip keeps structure and coordinates") {
    auto g = grid_graph({3, 2});
    auto j = graph_to_json(g);
    auto back = graph_from_json(j);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(back.coords() == g.coords());
}

TEST_CASE("graph json rejects malformed payloads") {
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(
                        R"({"vertices":[{"id":0},{"id":0}],"edges":[]})")),
                    SchemaError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(
                        R"({"vertices":[{"id":0}],"edges":[[0,1]]})")),
                    SchemaError);
}

TEST_CASE("event structure json roundtrip") {
    EventStructure es(4, {{0, 2}, {1, 2}}, {{2, 3}, {0, 3}, {1, 3}});
    auto j = event_structure_to_json(es);
    auto back = event_structure_from_json(j);
    CHECK(back.event_count() == 4);
    CHECK(back.immediate_causes() == es.immediate_causes());
    CHECK(back.conflict_pairs() == es.conflict_pairs());
}

TEST_CASE("labeling json roundtrip and validation") {
    std::vector<int> labels{2, 0, 1};
    auto j = labeling_to_json(labels);
    CHECK(labeling_from_json(j, 3) == labels);
    CHECK_THROWS_AS(labeling_from_json(j, 4), SchemaError);
}

TEST_CASE("rational and box json forms") {
    CHECK(rational_to_json(Rational(3)).is_number_integer());
    CHECK(rational_from_json(Json::parse("[1,3]")) == Rational(1, 3));
    CHECK_THROWS_AS(rational_from_json(Json::parse("\"x\"")), SchemaError);
    auto bh = burling_family(1);
    auto back = hypergraph_from_json(hypergraph_to_json(bh));
    REQUIRE(back.size() == bh.size());
    for (int i = 0; i < bh.size(); ++i) CHECK(back.boxes[i] == bh.boxes[i]);
    CHECK(back.probes.size() == bh.probes.size());
}

TEST_CASE("lifted graph json roundtrip recovers labels and matchings") {
    auto bh = burling_family(1);
    auto gc = build_grid(bh);
    auto lg = lift(gc, bh);
    auto an = analyze_lift(lg);
    auto j = lifted_to_json(lg, an, &bh);
    auto loaded = lifted_from_json(j);
    CHECK(loaded.lg.graph.edges() == lg.graph.edges());
    CHECK(loaded.lg.alpha == lg.alpha);
    CHECK(loaded.lg.beta == lg.beta);
    CHECK(loaded.lg.box_count == lg.box_count);
    CHECK(loaded.lg.dims == lg.dims);
    CHECK(loaded.lg.edge_labels == lg.edge_labels);
    for (int b = 0; b < lg.box_count; ++b) CHECK(loaded.lg.matchings[b] == lg.matchings[b]);
    REQUIRE(loaded.boxes.has_value());
    CHECK(loaded.boxes->size() == bh.size());
}

TEST_CASE("lifted and box json reject malformed payloads") {
    CHECK_THROWS_AS(box_from_json(Json::parse(R"({"x":[0,1],"y":[0,1]})")), SchemaError);
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(
                        R"({"boxes":[{"x":[2,1],"y":[0,1],"z":[0,1]}],
                            "bounding":{"x":[0,3],"y":[0,3],"z":[0,3]}})")),
                    SchemaError);  // degenerate box
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(
                        R"({"boxes":[{"x":[0,9],"y":[0,1],"z":[0,1]}],
                            "bounding":{"x":[0,3],"y":[0,3],"z":[0,3]}})")),
                    SchemaError);  // outside the bounding box

    auto bh = burling_family(1);
    auto gc = build_grid(bh);
    auto lg = lift(gc, bh);
    auto an = analyze_lift(lg);
    auto j = lifted_to_json(lg, an, nullptr);
    auto broken = j;
    broken.erase("alpha");
    CHECK_THROWS_AS(lifted_from_json(broken), SchemaError);
    broken = j;
    broken["theta_labels"]["0"]["kind"] = "WEIRD";
    CHECK_THROWS_AS(lifted_from_json(broken), SchemaError);
    broken = j;
    broken["theta_labels"].erase("0");
    CHECK_THROWS_AS(lifted_from_json(broken), SchemaError);
}

TEST_CASE("dot export carries class labels and colors") {
    auto g = cycle_graph(4);
    auto t = theta_classes_checked(g, 0);
    auto dot = graph_to_dot(g, &t);
    CHECK(dot.find("graph medianlab") != std::string::npos);
    CHECK(dot.find("label=\"0\"") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
    CHECK(dot.find("color=\"#") != std::string::npos);
}

// ---------------------------------------------------------------------------
// CLI

TEST_CASE("cli burling writes a reloadable family and honors budgets") {
    TempDir dir;
    auto out = dir.file("b1.json");
    auto r = run_cli("burling --n 1 --out " + out, dir);
    INFO(r.output);
    CHECK(r.exit_code == 0);
    auto bh = hypergraph_from_json(Json::parse(slurp(out)));
    CHECK(bh.size() == 3);

    auto r2 = run_cli("burling --n 2 --out " + dir.file("b2.json"), dir);
    CHECK(r2.exit_code == 0);

    auto r99 = run_cli("burling --n 99 --out " + dir.file("b99.json"), dir);
    CHECK(r99.exit_code == 2);
    CHECK(r99.output.find("RESOURCE_LIMIT") != std::string::npos);
}

TEST_CASE("cli lift produces the expected census and fails cleanly on bad input") {
    TempDir dir;
    run_cli("burling --n 1 --out " + dir.file("b1.json"), dir);
    auto r = run_cli("lift --boxes " + dir.file("b1.json") + " --out " + dir.file("l1.json") +
                         " --dot " + dir.file("l1.dot"),
                     dir);
    INFO(r.output);
    CHECK(r.exit_code == 0);
    auto loaded = lifted_from_json(Json::parse(slurp(dir.file("l1.json"))));
    int expected_classes = loaded.lg.box_count;
    for (int a = 0; a < 3; ++a) expected_classes += loaded.lg.dims[a] - 1;
    auto t = theta_classes_checked(loaded.lg.graph, loaded.lg.alpha);
    CHECK(t.class_count() == expected_classes);
    CHECK(slurp(dir.file("l1.dot")).find("color=") != std::string::npos);

    spit(dir.file("bad.json"), "{not json");
    auto rbad = run_cli("lift --boxes " + dir.file("bad.json") + " --out " + dir.file("x.json"),
                        dir);
    CHECK(rbad.exit_code == 1);

    // An empty family lifts to the bare grid.
    BoxHypergraph empty;
    empty.bounding = Box{{Rational(0), Rational(1)}, {Rational(0), Rational(1)},
                         {Rational(0), Rational(1)}};
    spit(dir.file("empty.json"), hypergraph_to_json(empty).dump());
    auto rempty = run_cli(
        "lift --boxes " + dir.file("empty.json") + " --out " + dir.file("le.json"), dir);
    CHECK(rempty.exit_code == 0);
    auto grid_only = lifted_from_json(Json::parse(slurp(dir.file("le.json"))));
    CHECK(grid_only.lg.graph.vertex_count() == 8);
}

TEST_CASE("cli verify passes on a lift and catches non-median graphs") {
    TempDir dir;
    run_cli("burling --n 1 --out " + dir.file("b1.json"), dir);
    run_cli("lift --boxes " + dir.file("b1.json") + " --out " + dir.file("l1.json"), dir);
    auto r = run_cli("verify --graph " + dir.file("l1.json"), dir);
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);

    spit(dir.file("k23.json"), graph_to_json(complete_bipartite_graph(2, 3)).dump());
    auto rbad = run_cli("verify --graph " + dir.file("k23.json") + " --checks median", dir);
    CHECK(rbad.exit_code == 3);
    CHECK(rbad.output.find("witness") != std::string::npos);

    // Sampled mode is reproducible for a fixed seed.
    auto s1 = run_cli("--seed 7 verify --graph " + dir.file("l1.json") +
                          " --checks median --mode sampled --samples 5000",
                      dir);
    auto s2 = run_cli("--seed 7 verify --graph " + dir.file("l1.json") +
                          " --checks median --mode sampled --samples 5000",
                      dir);
    CHECK(s1.exit_code == 0);
    CHECK(s1.output == s2.output);
}

TEST_CASE("cli chromatic solves the pointed contact graph of named graphs") {
    TempDir dir;
    spit(dir.file("square.json"), graph_to_json(cycle_graph(4)).dump());
    auto r = run_cli("chromatic --graph " + dir.file("square.json") + " --target pointed-contact",
                     dir);
    INFO(r.output);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("chi = 2") != std::string::npos);

    // Star with 5 leaves pointed at the center: complete contact graph.
    spit(dir.file("star.json"), graph_to_json(star_graph(5)).dump());
    auto rs = run_cli("chromatic --graph " + dir.file("star.json") + " --target pointed-contact",
                      dir);
    CHECK(rs.exit_code == 0);
    CHECK(rs.output.find("chi = 5") != std::string::npos);

    run_cli("burling --n 1 --out " + dir.file("b1.json"), dir);
    auto ri = run_cli("chromatic --graph " + dir.file("b1.json") + " --target intersection", dir);
    CHECK(ri.exit_code == 0);
    CHECK(ri.output.find("chi = 2") != std::string::npos);
}

TEST_CASE("cli report writes deterministic json and a text table") {
    TempDir dir;
    auto r1 = run_cli("report --n-max 1 --out " + dir.file("r1.json"), dir);
    INFO(r1.output);
    CHECK(r1.exit_code == 0);
    auto j = Json::parse(slurp(dir.file("r1.json")));
    CHECK(j.at("schema") == "medianlab/1");
    REQUIRE(j.at("rows").size() == 1);
    const auto& row = j.at("rows")[0];
    CHECK(row.at("status") == "ok");
    CHECK(row.at("checks").at("triangle_free") == true);
    CHECK(row.at("checks").at("degree_bounds") == true);
    CHECK(row.at("checks").at("coloring_chain") == true);
    CHECK(row.at("max_out_degree").get<int>() <= 5);

    auto r2 = run_cli("report --n-max 1 --out " + dir.file("r2.json"), dir);
    CHECK(r2.exit_code == 0);
    CHECK(slurp(dir.file("r1.json")) == slurp(dir.file("r2.json")));
}

TEST_CASE("cli report at n-max 2 shows strictly increasing pointed chromatic numbers") {
    TempDir dir;
    auto r = run_cli("report --n-max 2 --out " + dir.file("r.json"), dir);
    INFO(r.output);
    CHECK(r.exit_code == 0);
    auto j = Json::parse(slurp(dir.file("r.json")));
    REQUIRE(j.at("rows").size() == 2);
    int chi1 = j.at("rows")[0].at("chi_pointed_contact").at("chi").get<int>();
    int chi2 = j.at("rows")[1].at("chi_pointed_contact").at("chi").get<int>();
    CHECK(chi1 < chi2);
    CHECK(j.at("rows")[1].at("checks").at("median") == "sampled-pass+certificate");
    REQUIRE(j.contains("chain"));
    CHECK(j.at("chain").at("articulation_count").get<int>() == 1);
    CHECK(j.at("chain").at("articulation_out_degrees")[0].get<int>() == 3);
    CHECK(j.at("chain").at("chi_equals_max_over_blocks") == true);
}
