#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "bei/closure.hpp"
#include "bei/graph.hpp"

namespace bei {

enum class OrderingStatus { found, certified_none, unknown };

inline const char* ordering_status_name(OrderingStatus s) {
    switch (s) {
        case OrderingStatus::found: return "FOUND";
        case OrderingStatus::certified_none: return "CERTIFIED_NONE";
        case OrderingStatus::unknown: return "UNKNOWN";
    }
    return "?";
}

struct OrderingResult {
    OrderingStatus status = OrderingStatus::unknown;
    std::optional<Labeling> labeling; // set iff status == found
};

// Breadth-first visit order starting at `start`, neighbors taken ascending;
// after a component is exhausted the walk restarts at the smallest unvisited
// vertex, so components end up in contiguous blocks.
inline std::vector<int> bfs_order(const Graph& g, int start = 1) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(g.vertex_count()));
    VertexSet seen;
    std::optional<int> next_start = start;
    while (static_cast<int>(order.size()) < g.vertex_count()) {
        int s = next_start ? *next_start : g.vertices().minus(seen).min();
        next_start.reset();
        seen.insert(s);
        order.push_back(s);
        for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
            for (int w : g.neighbors(order[head]).minus(seen)) {
                seen.insert(w);
                order.push_back(w);
            }
        }
    }
    return order;
}

namespace detail {

// Incremental feasibility for the exhaustive ordering search. Placing v at
// the next position is consistent iff the already-placed neighbors of v sit
// in a contiguous suffix of the prefix and form a clique; that is exactly
// what the interval condition demands of every edge ending at v.
struct PiSearch {
    const Graph& g;
    std::vector<int> order;
    VertexSet placed;

    explicit PiSearch(const Graph& graph) : g(graph) {}

    bool can_place(int v) const {
        int pos = static_cast<int>(order.size()) + 1;
        int first = 0;
        VertexSet prefix_neighbors;
        for (int a = 1; a < pos; ++a) {
            if (g.has_edge(order[static_cast<std::size_t>(a - 1)], v)) {
                if (first == 0) first = a;
                prefix_neighbors.insert(order[static_cast<std::size_t>(a - 1)]);
            }
        }
        if (first == 0) return true;
        if (prefix_neighbors.size() != pos - first) return false;
        for (int w : prefix_neighbors)
            if (!prefix_neighbors.without(w).subset_of(g.neighbors(w))) return false;
        return true;
    }

    bool search() {
        if (static_cast<int>(order.size()) == g.vertex_count()) return true;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (placed.contains(v) || !can_place(v)) continue;
            order.push_back(v);
            placed.insert(v);
            if (search()) return true;
            order.pop_back();
            placed.erase(v);
        }
        return false;
    }
};

inline Labeling labeling_from_order(const std::vector<int>& order) {
    std::vector<long long> originals(order.begin(), order.end());
    return Labeling::from_working_order(std::move(originals));
}

inline bool order_works(const Graph& g, const std::vector<int>& order) {
    return is_pi_ordered(relabel(g, labeling_from_order(order)));
}

} // namespace detail

inline constexpr int pi_exhaustive_limit = 10;

// Searches for a labeling under which g is proper-interval ordered. Up to 10
// vertices the backtracking search is exhaustive, so a negative answer is
// certified. Beyond that only cheap attempts are made (identity plus
// multi-sweep breadth-first orders, at most `budget` candidates) and failure
// is reported as unknown rather than as a false certificate.
inline OrderingResult find_pi_ordering(const Graph& g, int budget = 256) {
    if (is_pi_ordered(g))
        return {OrderingStatus::found, Labeling::identity(g.vertex_count())};

    if (g.vertex_count() <= pi_exhaustive_limit) {
        detail::PiSearch search(g);
        if (!search.search()) return {OrderingStatus::certified_none, std::nullopt};
        Labeling found = detail::labeling_from_order(search.order);
        detail::check(is_pi_ordered(relabel(g, found)), "ordering search returned a bad order");
        return {OrderingStatus::found, std::move(found)};
    }

    int tried = 0;
    for (int start = 1; start <= g.vertex_count() && tried < budget; ++start) {
        std::vector<int> sweep1 = bfs_order(g, start);
        std::vector<int> sweep2 = bfs_order(g, sweep1.back());
        std::vector<int> sweep2r(sweep2.rbegin(), sweep2.rend());
        for (const auto& cand : {sweep1, sweep2, sweep2r}) {
            ++tried;
            if (detail::order_works(g, cand))
                return {OrderingStatus::found, detail::labeling_from_order(cand)};
            if (tried >= budget) break;
        }
    }
    return {OrderingStatus::unknown, std::nullopt};
}

} // namespace bei
