#include <catch2/catch_amalgamated.hpp>

#include "bei/construct.hpp"
#include "bei/io.hpp"
#include "bei/oracle.hpp"
#include "test_support.hpp"

using namespace bei;

namespace {

const std::string running_example_text = "graph 7\n1 2\n1 3\n2 4\n3 4\n4 5\n4 6\n5 6\n6 7\n";

const std::vector<Edge> expected_completion = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                        {3, 4}, {4, 5}, {4, 6}, {5, 6}, {6, 7}};

} // namespace

TEST_CASE("construct completes the running example under the identity labeling") {
    auto g = parse_graph(running_example_text).graph;
    ConstructResult res = construct(g);
    REQUIRE(res.labeling.is_identity());
    REQUIRE(res.graph.edges() == expected_completion);
    REQUIRE(res.trace.size() == 2);
    REQUIRE(res.trace[0].added == Edge{2, 3});
    REQUIRE(res.trace[1].added == Edge{1, 4});
    validate_trace(g, res.graph, res.trace);
    REQUIRE(satisfies_condition_iv(res.graph));
    REQUIRE(is_closed_labeled(res.graph));
}

TEST_CASE("construct on the claw stops at its closure") {
    Graph claw(4);
    claw.add_edge(1, 2);
    claw.add_edge(2, 3);
    claw.add_edge(2, 4);
    ConstructResult res = construct(claw);
    REQUIRE(res.graph.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

TEST_CASE("a bfs relabeling can avoid additions the identity labeling forces") {
    Graph g(3);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    ConstructResult ident = construct(g);
    REQUIRE(ident.graph.edges().size() == 3);

    ConstructResult bfs = construct(g, LabelingStrategy::bfs);
    REQUIRE(bfs.trace.empty());
    REQUIRE(bfs.graph == g);
    REQUIRE(bfs.labeling.to_working(3) == 2);
    REQUIRE(is_pi_ordered(bfs.working_graph));
}

TEST_CASE("exhaustive-min finds a labeling with the fewest additions") {
    Graph claw(4);
    claw.add_edge(1, 2);
    claw.add_edge(2, 3);
    claw.add_edge(2, 4);
    ConstructResult res = construct(claw, LabelingStrategy::exhaustive_min);
    REQUIRE(res.graph.edges().size() == 4);
    REQUIRE(res.working_graph.edges().size() == 4);

    Graph big(9);
    big.add_edge(1, 2);
    REQUIRE_THROWS_AS(construct(big, LabelingStrategy::exhaustive_min), cap_exceeded);

    std::mt19937_64 rng(909);
    for (int i = 0; i < 15; ++i) {
        Graph g = support::random_connected_graph(5, rng);
        ConstructResult best = construct(g, LabelingStrategy::exhaustive_min);
        REQUIRE(best.graph.edges().size() <= construct(g).graph.edges().size());
        REQUIRE(best.graph.edges().size() <=
                construct(g, LabelingStrategy::bfs).graph.edges().size());
    }
}

TEST_CASE("construct works per component in contiguous working labels") {
    // In the original labels no composition pair exists (the needed contact
    // labels 3 and 4 sit in another component), yet the component {1,2,5,6}
    // is not unmixed. Extraction must relabel it 1..4, where the rules
    // complete it to the full graph on four vertices.
    Graph g(6);
    for (Edge e : {Edge{1, 2}, Edge{2, 5}, Edge{5, 6}, Edge{1, 5}, Edge{2, 6}}) g.add_edge(e);
    REQUIRE(is_closed_labeled(g));
    REQUIRE(!is_unmixed_componentwise(g));

    ConstructResult res = construct(g);
    REQUIRE(res.graph.edges() == std::vector<Edge>{{1, 2}, {1, 5}, {1, 6}, {2, 5}, {2, 6}, {5, 6}});
    REQUIRE(res.trace.size() == 1);
    REQUIRE(res.trace[0].added == Edge{1, 6});
    validate_trace(g, res.graph, res.trace, false);
    REQUIRE(is_unmixed_componentwise(res.graph));
    REQUIRE(cm_status_componentwise(res.graph) == CmStatus::cm);
}

TEST_CASE("construct output is componentwise CM for random inputs") {
    std::mt19937_64 rng(31337);
    for (int i = 0; i < 60; ++i) {
        Graph g = support::random_graph(7, rng, 0.3);
        ConstructResult res = construct(g);
        for (Edge e : g.edges()) REQUIRE(res.graph.has_edge(e));
        validate_trace(g, res.graph, res.trace, false);
        REQUIRE(cm_status_componentwise(res.graph) == CmStatus::cm);
        for (const auto& [sub, comp] : component_subgraphs(res.graph)) {
            REQUIRE(is_pi_ordered(sub));
            REQUIRE(satisfies_condition_iv(sub));
        }
        ConstructResult again = construct(res.graph);
        REQUIRE(again.trace.empty());
        REQUIRE(again.graph == res.graph);
    }
}

TEST_CASE("construct with search labelings still yields a CM graph") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 25; ++i) {
        Graph g = support::random_connected_graph(6, rng);
        for (LabelingStrategy s : {LabelingStrategy::bfs, LabelingStrategy::exhaustive_min}) {
            ConstructResult res = construct(g, s);
            for (Edge e : g.edges()) REQUIRE(res.graph.has_edge(e));
            REQUIRE(cm_status(res.graph) == CmStatus::cm);
            REQUIRE(is_pi_ordered(res.working_graph));
            REQUIRE(satisfies_condition_iv(res.working_graph));
            validate_trace(relabel(g, res.labeling), res.working_graph, res.working_trace);
            validate_trace(g, res.graph, res.trace, false, false);
        }
    }
}
