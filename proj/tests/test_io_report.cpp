#include <catch2/catch_amalgamated.hpp>

#include "bei/io.hpp"
#include "bei/report.hpp"
#include "test_support.hpp"

using namespace bei;

TEST_CASE("graph files parse with comments, blanks, and duplicate warnings") {
    std::string text = "# a comment\n\ngraph 4   # trailing comment\n1 2\n2 3 # another\n\n1 2\n";
    ParsedGraph parsed = parse_graph(text);
    REQUIRE(parsed.graph.vertex_count() == 4);
    REQUIRE(parsed.graph.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    REQUIRE(parsed.warnings.size() == 1);
    REQUIRE(parsed.warnings[0].find("duplicate edge {1,2}") != std::string::npos);
}

TEST_CASE("graph files reject malformed input") {
    REQUIRE_THROWS_AS(parse_graph(std::string("1 2\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("clutter 3\n1 2\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 0\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 65\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 3\n1\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 3\n1 2 3\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 3\n1 4\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 3\n2 2\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("graph 3\n1 x\n")), input_error);
    REQUIRE_THROWS_AS(parse_graph(std::string("")), input_error);
}

TEST_CASE("clutter files parse and validate") {
    ParsedClutter parsed = parse_clutter(std::string("clutter 4\n1 2 3\n3 4\n"));
    REQUIRE(parsed.clutter.vertex_count() == 4);
    REQUIRE(parsed.clutter.edge_sets().size() == 2);
    REQUIRE(parsed.warnings.empty());

    REQUIRE_THROWS_AS(parse_clutter(std::string("clutter 3\n2\n")), input_error);
    REQUIRE_THROWS_AS(parse_clutter(std::string("clutter 3\n1 1 2\n")), input_error);
    REQUIRE_THROWS_AS(parse_clutter(std::string("clutter 4\n1 2 3\n2 3\n")), input_error);
    ParsedClutter dup = parse_clutter(std::string("clutter 3\n1 2\n2 1\n"));
    REQUIRE(dup.warnings.size() == 1);
    REQUIRE(dup.clutter.edge_sets().size() == 1);
}

TEST_CASE("serialization round-trips canonically") {
    std::mt19937_64 rng(64128);
    for (int i = 0; i < 30; ++i) {
        Graph g = support::random_graph(7, rng);
        std::string text = serialize_graph(g);
        REQUIRE(parse_graph(text).graph == g);
        REQUIRE(serialize_graph(parse_graph(text).graph) == text);

        Clutter c = support::random_clutter(6, rng);
        std::string ctext = serialize_clutter(c);
        REQUIRE(parse_clutter(ctext).clutter == c);
        REQUIRE(serialize_clutter(parse_clutter(ctext).clutter) == ctext);
    }
}

TEST_CASE("reports always carry the same seven keys") {
    RunReport empty;
    ordered_json j = to_json(empty);
    auto keys = {"input", "labeling", "trace", "result", "verdicts", "primes", "timing"};
    REQUIRE(j.size() == 7);
    int pos = 0;
    for (const auto& [key, value] : j.items()) {
        REQUIRE(key == *(keys.begin() + pos));
        REQUIRE(value.is_null());
        ++pos;
    }
}

TEST_CASE("report json renders traces and primes deterministically") {
    Graph p3(3);
    p3.add_edge(1, 2);
    p3.add_edge(2, 3);
    RunReport report;
    report.input = ordered_json{{"kind", "graph"}};
    report.has_trace = true;
    report.trace = {{Edge{1, 3}, Rule::close_shared_min, Edge{1, 2}, Edge{1, 3}}};
    report.primes = minimal_primes(p3);
    ordered_json j = to_json(report);
    REQUIRE(j["trace"][0]["added"] == ordered_json::array({1, 3}));
    REQUIRE(j["trace"][0]["rule"] == "close-shared-min");
    REQUIRE(j["primes"].size() == 2);
    REQUIRE(j["primes"][1]["height"] == 2);
    REQUIRE(j["primes"][1]["generators"] == "x2, y2");
    REQUIRE(to_json(report).dump() == j.dump());

    std::string text = to_text(report);
    REQUIRE(text.find("trace: 1 addition\n") != std::string::npos);
    REQUIRE(text.find("+ {1,3} by close-shared-min") != std::string::npos);
    REQUIRE(text.find("primes: 2 minimal primes") != std::string::npos);
    REQUIRE(text.find("timing: not measured") != std::string::npos);
    REQUIRE(to_text(report) == text);
}
