#pragma once

#include <string>
#include <vector>

#include "bei/errors.hpp"
#include "bei/graph.hpp"

namespace bei {

// Forced-edge rules. The two close rules fire on a pair of edges sharing
// their smaller (resp. larger) endpoint; cm_compose fires on edges
// {i,j+1},{j,k+1} with i<j<k and yields {i,k+1}.
enum class Rule {
    close_shared_min,
    close_shared_max,
    cm_compose,
};

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::close_shared_min: return "close-shared-min";
        case Rule::close_shared_max: return "close-shared-max";
        case Rule::cm_compose: return "cm-compose";
    }
    return "?";
}

// One forced addition: the new edge plus the two pre-existing edges that
// forced it. Steps are recorded in application order.
struct TraceStep {
    Edge added;
    Rule rule;
    Edge witness_a;
    Edge witness_b;
    bool operator==(const TraceStep&) const = default;
};

using ConstructionTrace = std::vector<TraceStep>;

// Replays a trace from `start`, checking that every added edge was absent,
// both witnesses were already present, the rule shape matches, and the result
// is exactly `end`. Used by tests and by construct's internal sanity check.
// Construct runs its rules per component in contiguous working labels; once
// such a trace is mapped back through an order-preserving relabeling, the
// exact j/j+1 contact of cm_compose widens to the interleaving pattern
// checked under strict_cm_shape = false. Traces mapped through a labeling
// that reorders vertices keep only their replay semantics, so shape checks
// can be switched off entirely.
inline void validate_trace(const Graph& start, const Graph& end, const ConstructionTrace& trace,
                           bool strict_cm_shape = true, bool check_shapes = true) {
    Graph g = start;
    for (const TraceStep& s : trace) {
        detail::check(!g.has_edge(s.added), "trace adds an edge twice");
        detail::check(g.has_edge(s.witness_a) && g.has_edge(s.witness_b), "trace witness missing");
        if (!check_shapes) {
            g.add_edge(s.added);
            continue;
        }
        switch (s.rule) {
            case Rule::close_shared_min:
                detail::check(s.witness_a.u == s.witness_b.u &&
                                  make_edge(s.witness_a.v, s.witness_b.v) == s.added,
                              "shared-min step malformed");
                break;
            case Rule::close_shared_max:
                detail::check(s.witness_a.v == s.witness_b.v &&
                                  make_edge(s.witness_a.u, s.witness_b.u) == s.added,
                              "shared-max step malformed");
                break;
            case Rule::cm_compose: {
                // witnesses {i,j+1},{j,k+1}, added {i,k+1}, i < j < k
                const Edge& e1 = s.witness_a;
                const Edge& e2 = s.witness_b;
                bool shape = strict_cm_shape
                                 ? e2.u == e1.v - 1 && e1.u < e2.u && e2.u < e2.v - 1
                                 : e1.u < e2.u && e2.u < e1.v && e1.v <= e2.v - 1;
                detail::check(shape && Edge{e1.u, e2.v} == s.added, "cm-compose step malformed");
                break;
            }
        }
        g.add_edge(s.added);
    }
    detail::check(g == end, "trace does not reproduce the result graph");
}

} // namespace bei
