#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bei/errors.hpp"
#include "bei/vertex_set.hpp"

namespace bei {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(int a, int b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 1..n, adjacency kept as one 64-bit
// neighbour mask per vertex. Value type; all algorithms take it by const
// reference and return fresh graphs.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(validate_n(n))) {}

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [a, b] : edges) add_edge(a, b);
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int total = 0;
        for (int v = 1; v <= n_; ++v) total += upper_neighbors(v).size();
        return total;
    }

    bool has_edge(int a, int b) const {
        check_vertex(a);
        check_vertex(b);
        return a != b && neighbors(a).contains(b);
    }

    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    void add_edge(int a, int b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b) throw input_error("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "} not allowed");
        adj_[static_cast<std::size_t>(a - 1)].insert(b);
        adj_[static_cast<std::size_t>(b - 1)].insert(a);
    }

    void add_edge(Edge e) { add_edge(e.u, e.v); }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v - 1)];
    }

    VertexSet upper_neighbors(int v) const {
        return neighbors(v).minus(VertexSet::full(v));
    }

    VertexSet lower_neighbors(int v) const {
        return neighbors(v) & VertexSet::full(v - 1);
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int v = 1; v <= n_; ++v)
            for (int w : upper_neighbors(v)) out.push_back(Edge{v, w});
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const Graph&) const = default;

private:
    static int validate_n(int n) {
        if (n < 1) throw input_error("vertex count must be at least 1");
        if (n > VertexSet::max_universe)
            throw input_error("vertex count " + std::to_string(n) + " exceeds the supported maximum of 64");
        return n;
    }

    void check_vertex(int v) const {
        if (v < 1 || v > n_)
            throw input_error("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }

    int n_;
    std::vector<VertexSet> adj_;
};

// Bijection between original vertex identifiers and working labels 1..n.
class Labeling {
public:
    static Labeling identity(int n) {
        std::vector<long long> originals(static_cast<std::size_t>(n));
        for (int w = 1; w <= n; ++w) originals[static_cast<std::size_t>(w - 1)] = w;
        return from_working_order(std::move(originals));
    }

    // originals[w-1] is the original identifier that gets working label w.
    static Labeling from_working_order(std::vector<long long> originals) {
        Labeling l;
        l.originals_ = std::move(originals);
        for (int w = 1; w <= l.size(); ++w) {
            auto [_, fresh] = l.to_working_.emplace(l.originals_[static_cast<std::size_t>(w - 1)], w);
            if (!fresh) throw input_error("labeling is not a bijection: duplicate original identifier");
        }
        return l;
    }

    int size() const { return static_cast<int>(originals_.size()); }

    int to_working(long long original) const {
        auto it = to_working_.find(original);
        if (it == to_working_.end())
            throw input_error("unknown vertex identifier " + std::to_string(original));
        return it->second;
    }

    long long to_original(int working) const {
        if (working < 1 || working > size()) throw input_error("working label out of range");
        return originals_[static_cast<std::size_t>(working - 1)];
    }

    bool is_identity() const {
        for (int w = 1; w <= size(); ++w)
            if (originals_[static_cast<std::size_t>(w - 1)] != w) return false;
        return true;
    }

    bool operator==(const Labeling&) const = default;

private:
    std::vector<long long> originals_;
    std::map<long long, int> to_working_;
};

// Order-preserving relabeling of arbitrary distinct identifiers onto 1..n.
// Identifier order is numeric order, so [30,10,20] maps 10->1, 20->2, 30->3.
inline std::pair<Graph, Labeling> normalize(const std::vector<long long>& raw_vertices,
                                            const std::vector<std::pair<long long, long long>>& raw_edges) {
    if (raw_vertices.empty()) throw input_error("vertex list is empty");
    std::vector<long long> sorted = raw_vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("duplicate vertex identifier");
    if (sorted.size() > VertexSet::max_universe)
        throw input_error("more than 64 vertices are not supported");

    Labeling labeling = Labeling::from_working_order(sorted);
    Graph g(static_cast<int>(sorted.size()));
    for (auto [a, b] : raw_edges) {
        if (a == b) throw input_error("loop edge on vertex " + std::to_string(a));
        g.add_edge(labeling.to_working(a), labeling.to_working(b));
    }
    return {g, labeling};
}

// Permutes labels: vertex v of g becomes labeling.to_working(v).
inline Graph relabel(const Graph& g, const Labeling& labeling) {
    if (labeling.size() != g.vertex_count()) throw input_error("labeling size does not match graph");
    Graph out(g.vertex_count());
    for (Edge e : g.edges())
        out.add_edge(labeling.to_working(e.u), labeling.to_working(e.v));
    return out;
}

// Connected components of the subgraph induced on `restrict`, each as a
// vertex set, ordered by smallest member. Isolated vertices count as
// components of size one.
inline std::vector<VertexSet> components(const Graph& g, VertexSet restrict) {
    detail::check(restrict.subset_of(g.vertices()), "restrict set outside vertex range");
    std::vector<VertexSet> out;
    VertexSet todo = restrict;
    while (!todo.empty()) {
        VertexSet comp = VertexSet::single(todo.min());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next = next | (g.neighbors(v) & restrict);
            frontier = next.minus(comp);
            comp = comp | frontier;
        }
        out.push_back(comp);
        todo = todo.minus(comp);
    }
    return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return components(g).size() == 1; }

// True iff removing i strictly increases the component count of the induced
// subgraph on `restrict`. Computed locally: i cuts iff its own component
// falls apart, which avoids re-walking the untouched components.
inline bool is_cut_point(const Graph& g, VertexSet restrict, int i) {
    if (!restrict.contains(i)) throw input_error("cut-point query for a vertex outside the induced set");
    VertexSet comp = VertexSet::single(i);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next = next | (g.neighbors(v) & restrict);
        frontier = next.minus(comp);
        comp = comp | frontier;
    }
    return components(g, comp.without(i)).size() >= 2;
}

// Deletes vertex m and closes the label gap: every k > m becomes k-1.
inline Graph induced_delete(const Graph& g, int m) {
    if (m < 1 || m > g.vertex_count()) throw input_error("deleted vertex out of range");
    if (g.vertex_count() == 1) throw input_error("cannot delete the last vertex");
    Graph out(g.vertex_count() - 1);
    for (Edge e : g.edges()) {
        if (e.u == m || e.v == m) continue;
        out.add_edge(e.u > m ? e.u - 1 : e.u, e.v > m ? e.v - 1 : e.v);
    }
    return out;
}

// Extracts the induced subgraph on `keep` with the order-preserving contiguous
// relabeling onto 1..|keep|; also returns that labeling (original -> working).
inline std::pair<Graph, Labeling> extract_induced(const Graph& g, VertexSet keep) {
    if (keep.empty()) throw input_error("cannot extract an empty induced subgraph");
    detail::check(keep.subset_of(g.vertices()), "induced set outside vertex range");
    std::vector<long long> originals;
    for (int v : keep) originals.push_back(v);
    Labeling labeling = Labeling::from_working_order(originals);
    Graph out(keep.size());
    for (int v : keep)
        for (int w : g.upper_neighbors(v) & keep)
            out.add_edge(labeling.to_working(v), labeling.to_working(w));
    return {out, labeling};
}

} // namespace bei
