#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "bei/closure.hpp"
#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "bei/pi_ordering.hpp"
#include "bei/trace.hpp"

namespace bei {

enum class LabelingStrategy { identity, bfs, exhaustive_min };

inline const char* labeling_strategy_name(LabelingStrategy s) {
    switch (s) {
        case LabelingStrategy::identity: return "identity";
        case LabelingStrategy::bfs: return "bfs";
        case LabelingStrategy::exhaustive_min: return "exhaustive-min";
    }
    return "?";
}

inline constexpr int exhaustive_min_limit = 8;

struct ConstructResult {
    Graph graph;                     // result in the input's original labels
    ConstructionTrace trace;         // steps mapped back to original labels
    Labeling labeling;               // original identifier -> working label
    Graph working_graph;             // result in working labels
    ConstructionTrace working_trace; // rule shapes are literal per component here
};

namespace detail {

template <typename Map>
inline ConstructionTrace map_trace(const ConstructionTrace& trace, Map&& f) {
    ConstructionTrace out;
    out.reserve(trace.size());
    for (const TraceStep& s : trace)
        out.push_back({make_edge(f(s.added.u), f(s.added.v)), s.rule,
                       make_edge(f(s.witness_a.u), f(s.witness_a.v)),
                       make_edge(f(s.witness_b.u), f(s.witness_b.v))});
    return out;
}

// Runs close followed by cm_augment on each connected component separately.
// Components are extracted with the order-preserving contiguous relabeling
// first: the composition rule does label arithmetic, and running it across a
// component whose labels have gaps (or across two interleaved components)
// produces edges the construction must not contain.
inline std::pair<Graph, ConstructionTrace> construct_working(const Graph& w) {
    Graph result(w.vertex_count());
    ConstructionTrace trace;
    for (const VertexSet& comp : components(w)) {
        auto [sub, sublab] = extract_induced(w, comp);
        ClosureResult closed = close(sub);
        ClosureResult augmented = cm_augment(closed.graph);
        auto back = [&](int v) { return static_cast<int>(sublab.to_original(v)); };
        for (Edge e : augmented.graph.edges()) result.add_edge(back(e.u), back(e.v));
        ConstructionTrace comp_trace = closed.trace;
        comp_trace.insert(comp_trace.end(), augmented.trace.begin(), augmented.trace.end());
        for (TraceStep& s : map_trace(comp_trace, back)) trace.push_back(s);
    }
    return {result, trace};
}

inline std::pair<Graph, ConstructionTrace> construct_original(const Graph& g, const Labeling& labeling,
                                                              const std::pair<Graph, ConstructionTrace>& working) {
    auto back = [&](int v) { return static_cast<int>(labeling.to_original(v)); };
    Graph original(g.vertex_count());
    for (Edge e : working.first.edges()) original.add_edge(back(e.u), back(e.v));
    for (Edge e : g.edges())
        check(original.has_edge(e), "construction dropped an input edge");
    return {original, map_trace(working.second, back)};
}

} // namespace detail

// The full construction: relabel by the chosen strategy, then close and
// cm-augment per connected component. The result contains every input edge
// and is, per component, closed and Cohen-Macaulay.
inline ConstructResult construct(const Graph& g, LabelingStrategy strategy = LabelingStrategy::identity) {
    int n = g.vertex_count();
    switch (strategy) {
        case LabelingStrategy::identity:
        case LabelingStrategy::bfs: {
            Labeling labeling = strategy == LabelingStrategy::identity
                                    ? Labeling::identity(n)
                                    : detail::labeling_from_order(bfs_order(g));
            Graph working = relabel(g, labeling);
            auto wres = detail::construct_working(working);
            auto ores = detail::construct_original(g, labeling, wres);
            return {std::move(ores.first), std::move(ores.second), std::move(labeling),
                    std::move(wres.first), std::move(wres.second)};
        }
        case LabelingStrategy::exhaustive_min: {
            if (n > exhaustive_min_limit)
                throw cap_exceeded("exhaustive-min tries all " + std::to_string(n) +
                                   "! labelings; supported only up to " +
                                   std::to_string(exhaustive_min_limit) + " vertices");
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
            std::optional<ConstructResult> best;
            do {
                Labeling labeling = detail::labeling_from_order(order);
                Graph working = relabel(g, labeling);
                auto wres = detail::construct_working(working);
                if (best && wres.first.edge_count() >= best->graph.edge_count()) continue;
                auto ores = detail::construct_original(g, labeling, wres);
                best = ConstructResult{std::move(ores.first), std::move(ores.second), std::move(labeling),
                                       std::move(wres.first), std::move(wres.second)};
            } while (std::next_permutation(order.begin(), order.end()));
            return std::move(*best);
        }
    }
    throw input_error("unknown labeling strategy");
}

} // namespace bei
