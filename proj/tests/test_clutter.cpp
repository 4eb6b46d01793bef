#include <catch2/catch_amalgamated.hpp>

#include "bei/clutter.hpp"
#include "bei/construct.hpp"
#include "bei/io.hpp"
#include "test_support.hpp"

using namespace bei;

namespace {

Clutter mixed_example() {
    return Clutter(4, {VertexSet::full(3), VertexSet::single(3).with(4)});
}

} // namespace

TEST_CASE("clutter validation") {
    REQUIRE_THROWS_AS(Clutter(3, {VertexSet::single(2)}), input_error);
    REQUIRE_THROWS_AS(Clutter(3, {VertexSet::full(3), VertexSet::single(1).with(2)}), input_error);
    REQUIRE_THROWS_AS(Clutter(3, {VertexSet::single(3).with(4)}), input_error);
    REQUIRE_THROWS_AS(Clutter(2, {VertexSet::full(2), VertexSet::full(2)}), input_error);
    Clutter c(5, {VertexSet::single(4).with(5), VertexSet::full(3)});
    REQUIRE(c.edge_sets()[0] == VertexSet::full(3));
    REQUIRE(c.any_edge_contains(VertexSet::single(1).with(3)));
    REQUIRE(!c.any_edge_contains(VertexSet::single(3).with(4)));
}

TEST_CASE("associated graph joins all pairs inside each edge") {
    Graph g = associated_graph(mixed_example());
    REQUIRE(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

TEST_CASE("closedness of fixed clutters") {
    REQUIRE(is_closed_clutter(mixed_example()));
    REQUIRE(is_closed_clutter_direct(mixed_example()));
    REQUIRE(clutter_condition_d(mixed_example()));

    Clutter star(3, {VertexSet::single(1).with(2), VertexSet::single(1).with(3)});
    REQUIRE(!is_closed_clutter(star));
    REQUIRE(!is_closed_clutter_direct(star));
}

TEST_CASE("the two closedness routes agree on random clutters") {
    std::mt19937_64 rng(6021);
    for (int i = 0; i < 200; ++i) {
        Clutter c = support::random_clutter(7, rng);
        REQUIRE(is_closed_clutter(c) == is_closed_clutter_direct(c));
    }
}

TEST_CASE("construct leaves the closed mixed example untouched") {
    ClutterConstructResult res = construct_clutter(mixed_example());
    REQUIRE(res.trace.empty());
    REQUIRE(res.clutter == mixed_example());
    ClutterStatus st = clutter_status(res.clutter);
    REQUIRE(st.connected);
    REQUIRE(st.closed);
    REQUIRE(st.condition_d);
    REQUIRE(st.unmixed.has_value());
    REQUIRE(*st.unmixed);
    REQUIRE(st.cm == CmStatus::cm);
}

TEST_CASE("construct adds the missing leaf pair as a new edge") {
    Clutter star(3, {VertexSet::single(1).with(2), VertexSet::single(1).with(3)});
    ClutterConstructResult res = construct_clutter(star);
    REQUIRE(res.trace.size() == 1);
    REQUIRE(res.trace[0].added == Edge{2, 3});
    REQUIRE(res.clutter.edge_sets().size() == 3);
    REQUIRE(res.clutter.any_edge_contains(VertexSet::single(2).with(3)));
}

TEST_CASE("forced pairs already covered by a wide edge are not added") {
    // {1,2,4} and {1,3} share their minimum, forcing the pair {2,3}... but
    // only pairs not inside an existing edge become new edges.
    Clutter c(4, {VertexSet::single(1).with(2).with(4), VertexSet::single(1).with(3)});
    ClutterConstructResult res = construct_clutter(c);
    for (const TraceStep& s : res.trace) {
        REQUIRE(!c.any_edge_contains(VertexSet::single(s.added.u).with(s.added.v)));
    }
    Graph assoc = associated_graph(res.clutter);
    REQUIRE(assoc == construct(associated_graph(c)).graph);
}

TEST_CASE("clutter construction commutes with graph construction") {
    std::mt19937_64 rng(140914);
    for (int i = 0; i < 150; ++i) {
        Clutter c = support::random_clutter(8, rng);
        ClutterConstructResult res = construct_clutter(c);
        REQUIRE(associated_graph(res.clutter) == construct(associated_graph(c)).graph);
        for (const VertexSet& e : c.edge_sets()) REQUIRE(res.clutter.any_edge_contains(e));
    }
}

TEST_CASE("close_clutter runs only the first phase") {
    std::mt19937_64 rng(77711);
    for (int i = 0; i < 100; ++i) {
        Clutter c = support::random_clutter(7, rng);
        ClutterConstructResult res = close_clutter(c);
        REQUIRE(associated_graph(res.clutter) == close(associated_graph(c)).graph);
        REQUIRE(is_closed_clutter(res.clutter));
    }
}

TEST_CASE("condition d matches unmixedness for connected closed clutters") {
    // A closed connected clutter that fails the condition: the pairs of the
    // running example graph before its augmentation. It is not unmixed.
    Clutter before(7, {VertexSet::single(1).with(2), VertexSet::single(1).with(3),
                       VertexSet::single(2).with(3), VertexSet::single(2).with(4),
                       VertexSet::single(3).with(4), VertexSet::single(4).with(5),
                       VertexSet::single(4).with(6), VertexSet::single(5).with(6),
                       VertexSet::single(6).with(7)});
    REQUIRE(is_closed_clutter(before));
    REQUIRE(!clutter_condition_d(before));
    REQUIRE(!is_unmixed(associated_graph(before)));

    std::mt19937_64 rng(5150);
    int seen = 0;
    for (int i = 0; i < 500; ++i) {
        // Half raw (closedness by luck), half completed by construct.
        Clutter c = support::random_clutter(6, rng);
        if (i % 2) c = construct_clutter(c).clutter;
        Graph assoc = associated_graph(c);
        if (!is_connected(assoc) || !is_closed_clutter(c)) continue;
        ++seen;
        REQUIRE(clutter_condition_d(c) == is_unmixed(assoc));
    }
    REQUIRE(seen >= 50);
}

TEST_CASE("status of a disconnected clutter reports per component") {
    Clutter c(6, {VertexSet::single(1).with(2), VertexSet::single(4).with(5).with(6)});
    ClutterStatus st = clutter_status(c);
    REQUIRE(!st.connected);
    REQUIRE(!st.unmixed.has_value());
    REQUIRE(st.components.size() == 3);
    REQUIRE(st.components[0].vertices.members() == std::vector<int>{1, 2});
    REQUIRE(st.components[0].unmixed);
    REQUIRE(st.components[0].cm == CmStatus::cm);
    REQUIRE(st.components[2].vertices.members() == std::vector<int>{4, 5, 6});
    REQUIRE(st.components[2].closed);
}
