#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bei/closure.hpp"
#include "bei/construct.hpp"
#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "bei/oracle.hpp"
#include "bei/trace.hpp"

// Clutters (antichains of vertex sets, every edge of size at least two) and
// their associated graphs. The binomial edge ideal of a clutter equals that
// of its associated graph, so unmixedness and CM questions delegate there;
// closedness and the construction rules are also implemented directly on the
// clutter as an independent route.

namespace bei {

class Clutter {
public:
    Clutter(int n, std::vector<VertexSet> edges) : n_(validate_n(n)), edges_(std::move(edges)) {
        for (const VertexSet& e : edges_) {
            if (e.size() < 2) throw input_error("clutter edge " + detail::set_text(e) + " has fewer than two vertices");
            if (!e.subset_of(VertexSet::full(n_)))
                throw input_error("clutter edge " + detail::set_text(e) + " leaves the vertex range 1.." + std::to_string(n_));
        }
        std::sort(edges_.begin(), edges_.end(), VertexSet::lex_less);
        for (std::size_t i = 0; i < edges_.size(); ++i)
            for (std::size_t j = 0; j < edges_.size(); ++j) {
                if (i == j) continue;
                if (edges_[i] == edges_[j]) throw input_error("duplicate clutter edge " + detail::set_text(edges_[i]));
                if (edges_[i].subset_of(edges_[j]))
                    throw input_error("not an antichain: " + detail::set_text(edges_[i]) + " is contained in " +
                                      detail::set_text(edges_[j]));
            }
    }

    int vertex_count() const { return n_; }
    const std::vector<VertexSet>& edge_sets() const { return edges_; }

    bool any_edge_contains(VertexSet p) const {
        for (const VertexSet& e : edges_)
            if (p.subset_of(e)) return true;
        return false;
    }

    bool operator==(const Clutter&) const = default;

private:
    static int validate_n(int n) {
        if (n < 1) throw input_error("vertex count must be at least 1");
        if (n > VertexSet::max_universe) throw input_error("vertex count exceeds the supported maximum of 64");
        return n;
    }

    int n_;
    std::vector<VertexSet> edges_; // sorted, validated antichain
};

// Graph on the same vertices with an edge for every 2-subset of an edge.
inline Graph associated_graph(const Clutter& c) {
    Graph g(c.vertex_count());
    for (const VertexSet& e : c.edge_sets()) {
        auto members = e.members();
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                g.add_edge(members[i], members[j]);
    }
    return g;
}

// Closedness of the clutter is defined through its associated graph.
inline bool is_closed_clutter(const Clutter& c) { return is_closed_labeled(associated_graph(c)); }

// Literal form of the same condition stated on the clutter itself: whenever
// {i,j} and {k,l} with i<j, k<l lie in edges and share their minimum (resp.
// maximum), some edge must contain {j,l} (resp. {i,k}). Kept separate from
// is_closed_clutter so the two routes can be checked against each other.
inline bool is_closed_clutter_direct(const Clutter& c) {
    const auto& es = c.edge_sets();
    for (const VertexSet& e1 : es) {
        auto p1 = e1.members();
        for (std::size_t a = 0; a < p1.size(); ++a)
            for (std::size_t b = a + 1; b < p1.size(); ++b) {
                int i = p1[a], j = p1[b];
                for (const VertexSet& e2 : es) {
                    auto p2 = e2.members();
                    for (std::size_t x = 0; x < p2.size(); ++x)
                        for (std::size_t y = x + 1; y < p2.size(); ++y) {
                            int k = p2[x], l = p2[y];
                            if (i == k && j != l && !c.any_edge_contains(VertexSet::single(j).with(l)))
                                return false;
                            if (j == l && i != k && !c.any_edge_contains(VertexSet::single(i).with(k)))
                                return false;
                        }
                }
            }
    }
    return true;
}

// Composition condition stated directly on the clutter: pairs {i,j+1} and
// {j,k+1} (i<j<k) inside edges force some edge to contain {i,k+1}.
inline bool clutter_condition_d(const Clutter& c) {
    const auto& es = c.edge_sets();
    for (const VertexSet& e1 : es) {
        auto p1 = e1.members();
        for (std::size_t a = 0; a < p1.size(); ++a)
            for (std::size_t b = a + 1; b < p1.size(); ++b) {
                if (p1[b] - p1[a] < 2) continue; // {i, j+1} needs i < j
                int i = p1[a], jp1 = p1[b];
                for (const VertexSet& e2 : es) {
                    auto p2 = e2.members();
                    for (std::size_t x = 0; x < p2.size(); ++x)
                        for (std::size_t y = x + 1; y < p2.size(); ++y) {
                            if (p2[x] != jp1 - 1 || p2[y] - p2[x] < 2) continue;
                            if (!c.any_edge_contains(VertexSet::single(i).with(p2[y]))) return false;
                        }
                }
            }
    }
    return true;
}

struct ClutterConstructResult {
    Clutter clutter;
    ConstructionTrace trace; // added pairs; witnesses are the firing 2-subsets
};

namespace detail {

// Pairs covered by some edge, restricted to pair {a,b} -> treated like graph
// adjacency but computed through containment in clutter edges.
inline bool covered(const std::vector<VertexSet>& edges, int a, int b) {
    VertexSet p = VertexSet::single(a).with(b);
    for (const VertexSet& e : edges)
        if (p.subset_of(e)) return true;
    return false;
}

// All covered pairs sharing a min or max whose conclusion pair is uncovered.
inline std::set<Edge> clutter_close_pending(const std::vector<VertexSet>& edges, int n) {
    std::set<Edge> pending;
    for (const VertexSet& e1 : edges)
        for (int i : e1)
            for (int j : e1)
                for (const VertexSet& e2 : edges)
                    for (int k : e2)
                        for (int l : e2) {
                            if (i >= j || k >= l) continue;
                            if (i == k && j != l && !covered(edges, j, l)) pending.insert(make_edge(j, l));
                            if (j == l && i != k && !covered(edges, i, k)) pending.insert(make_edge(i, k));
                        }
    (void)n;
    return pending;
}

inline std::set<Edge> clutter_cm_pending(const std::vector<VertexSet>& edges) {
    std::set<Edge> pending;
    for (const VertexSet& e1 : edges)
        for (int i : e1)
            for (int jp1 : e1) {
                if (jp1 - i < 2) continue;
                for (const VertexSet& e2 : edges)
                    for (int j : e2)
                        for (int kp1 : e2) {
                            if (j != jp1 - 1 || kp1 - j < 2) continue;
                            if (!covered(edges, i, kp1)) pending.insert(Edge{i, kp1});
                        }
            }
    return pending;
}

// Witness pairs for a pending conclusion, smallest shared vertex first,
// mirroring the graph engine's choice.
inline TraceStep clutter_step(const std::vector<VertexSet>& edges, Edge concl, bool cm_phase) {
    if (!cm_phase) {
        for (int i = 1; i < concl.u; ++i)
            if (covered(edges, i, concl.u) && covered(edges, i, concl.v))
                return {concl, Rule::close_shared_min, Edge{i, concl.u}, Edge{i, concl.v}};
        for (int j = concl.v + 1; j <= VertexSet::max_universe; ++j)
            if (covered(edges, concl.u, j) && covered(edges, concl.v, j))
                return {concl, Rule::close_shared_max, Edge{concl.u, j}, Edge{concl.v, j}};
    } else {
        for (int j = concl.u + 1; j <= concl.v - 2; ++j)
            if (covered(edges, concl.u, j + 1) && covered(edges, j, concl.v))
                return {concl, Rule::cm_compose, Edge{concl.u, j + 1}, Edge{j, concl.v}};
    }
    check(false, "pending clutter conclusion lost its witnesses");
    return {};
}

// Two-phase fixpoint on one component (labels already contiguous): first the
// close rules, then the composition rule. Forced pairs enter as fresh
// 2-element edges, and only when no existing edge already contains them, so
// the antichain property is preserved throughout.
inline std::pair<std::vector<VertexSet>, ConstructionTrace> clutter_construct_component(
    std::vector<VertexSet> edges, int n, int phase_count = 2) {
    ConstructionTrace trace;
    for (int phase = 0; phase < phase_count; ++phase) {
        bool cm_phase = phase == 1;
        while (true) {
            std::set<Edge> pending =
                cm_phase ? clutter_cm_pending(edges) : clutter_close_pending(edges, n);
            if (pending.empty()) break;
            Edge concl = cm_phase ? pick_min_span(pending) : *pending.begin();
            trace.push_back(clutter_step(edges, concl, cm_phase));
            edges.push_back(VertexSet::single(concl.u).with(concl.v));
        }
    }
    std::sort(edges.begin(), edges.end(), VertexSet::lex_less);
    return {std::move(edges), std::move(trace)};
}

} // namespace detail

namespace detail {

inline ClutterConstructResult clutter_run(const Clutter& c, int phase_count) {
    Graph assoc = associated_graph(c);
    std::vector<VertexSet> result_edges;
    ConstructionTrace trace;
    for (const VertexSet& comp : components(assoc)) {
        Labeling lab = extract_induced(assoc, comp).second;
        std::vector<VertexSet> local;
        for (const VertexSet& e : c.edge_sets()) {
            if (!e.intersects(comp)) continue;
            detail::check(e.subset_of(comp), "clutter edge straddles two components");
            VertexSet mapped;
            for (int v : e) mapped.insert(lab.to_working(v));
            local.push_back(mapped);
        }
        auto [done, comp_trace] =
            detail::clutter_construct_component(std::move(local), comp.size(), phase_count);
        for (const VertexSet& e : done) {
            VertexSet back;
            for (int v : e) back.insert(static_cast<int>(lab.to_original(v)));
            result_edges.push_back(back);
        }
        auto back = [&](int v) { return static_cast<int>(lab.to_original(v)); };
        for (const TraceStep& s : detail::map_trace(comp_trace, back)) trace.push_back(s);
    }
    return {Clutter(c.vertex_count(), std::move(result_edges)), std::move(trace)};
}

} // namespace detail

// Close rules only, run to their fixpoint.
inline ClutterConstructResult close_clutter(const Clutter& c) { return detail::clutter_run(c, 1); }

// Clutter analogue of construct (identity labeling): completes each connected
// component, with forced pairs added as new 2-element edges. Commutes with
// the graph construction through the associated graph.
inline ClutterConstructResult construct_clutter(const Clutter& c) { return detail::clutter_run(c, 2); }

struct ClutterComponentVerdict {
    VertexSet vertices;
    bool closed = false;
    bool unmixed = false;
    CmStatus cm = CmStatus::unknown;
    bool condition_d = false;
};

struct ClutterStatus {
    bool connected = false;
    bool closed = false;      // under the given labeling, whole clutter
    bool condition_d = false; // under the given labeling, whole clutter
    std::optional<bool> unmixed;       // global verdict, connected clutters only
    CmStatus cm = CmStatus::unknown;   // global verdict, connected clutters only
    std::vector<ClutterComponentVerdict> components;
    // The initial-ideal condition is equivalent to the others for closed
    // connected clutters; it is reported, not recomputed symbolically.
    std::string initial_ideal_note =
        "initial ideal condition: equivalent for closed connected clutters, not computed";
};

inline Clutter induced_clutter(const Clutter& c, VertexSet keep, const Labeling& lab) {
    std::vector<VertexSet> edges;
    for (const VertexSet& e : c.edge_sets()) {
        if (!e.subset_of(keep)) continue;
        VertexSet mapped;
        for (int v : e) mapped.insert(lab.to_working(v));
        edges.push_back(mapped);
    }
    return Clutter(keep.size(), std::move(edges));
}

// Verdict bundle for a clutter: closedness (both routes, cross-checked),
// the composition condition, and unmixed/CM through the associated graph.
// Disconnected clutters get per-component verdicts instead of global ones.
inline ClutterStatus clutter_status(const Clutter& c, int cap = default_enumeration_cap) {
    ClutterStatus st;
    Graph assoc = associated_graph(c);
    st.closed = is_closed_clutter(c);
    detail::check(st.closed == is_closed_clutter_direct(c),
                  "clutter closedness routes disagree");
    st.condition_d = clutter_condition_d(c);
    st.connected = is_connected(assoc);
    if (st.connected) {
        st.unmixed = is_unmixed(assoc, cap);
        st.cm = cm_status(assoc, cap);
    }
    for (const VertexSet& comp : components(assoc)) {
        auto [sub, lab] = extract_induced(assoc, comp);
        Clutter csub = induced_clutter(c, comp, lab);
        ClutterComponentVerdict v;
        v.vertices = comp;
        v.closed = is_closed_clutter(csub);
        v.unmixed = is_unmixed(sub, cap);
        v.cm = cm_status(sub, cap);
        v.condition_d = clutter_condition_d(csub);
        st.components.push_back(v);
    }
    return st;
}

} // namespace bei
