#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "bei/closure.hpp"
#include "bei/errors.hpp"
#include "bei/graph.hpp"
#include "bei/pi_ordering.hpp"

// Brute-force verification layer: enumerates cut-point sets and minimal
// primes and decides unmixedness and Cohen-Macaulayness independently of the
// construction machinery it is used to audit.

namespace bei {

// Enumerations walk all 2^n subsets; above this the caller must opt in
// explicitly rather than discover the blow-up the hard way.
inline constexpr int default_enumeration_cap = 22;

namespace detail {

inline void require_cap(int n, int cap, const std::string& who) {
    if (n > cap)
        throw cap_exceeded(who + " enumerates 2^" + std::to_string(n) +
                           " vertex subsets; cap is " + std::to_string(cap));
}

inline std::string set_text(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

} // namespace detail

// T has the cut point property iff every i in T is a cut point of the
// subgraph induced on (V minus T) plus i.
inline bool has_cut_point_property(const Graph& g, VertexSet t) {
    VertexSet rest = g.vertices().minus(t);
    if (rest.empty()) throw input_error("T must have a nonempty complement");
    for (int i : t)
        if (!is_cut_point(g, rest.with(i), i)) return false;
    return true;
}

struct CutSetRecord {
    VertexSet t;
    std::vector<VertexSet> comps; // components of the graph induced on V minus T
    int component_count = 0;
    int height = 0; // n + |T| - c(T)
    bool in_cutset_family = true;
};

// All T with the cut point property (the empty set always qualifies),
// ordered by size then lexicographically by members.
inline std::vector<CutSetRecord> cut_point_sets(const Graph& g, int cap = default_enumeration_cap) {
    int n = g.vertex_count();
    detail::require_cap(n, cap, "cut_point_sets");
    std::vector<CutSetRecord> out;
    const std::uint64_t full = VertexSet::full(n).mask();
    for (std::uint64_t m = 0; m < full; ++m) {
        VertexSet t(m);
        if (!has_cut_point_property(g, t)) continue;
        auto comps = components(g, g.vertices().minus(t));
        int c = static_cast<int>(comps.size());
        out.push_back({t, std::move(comps), c, n + t.size() - c, true});
    }
    std::sort(out.begin(), out.end(), [](const CutSetRecord& a, const CutSetRecord& b) {
        if (a.t.size() != b.t.size()) return a.t.size() < b.t.size();
        return VertexSet::lex_less(a.t, b.t);
    });
    return out;
}

struct MinimalPrime {
    CutSetRecord record;
    std::string generators;
};

// P_T is generated by the variables indexed by T plus, for every component
// of the complement, the 2x2 minors over that component's vertices.
inline std::vector<MinimalPrime> minimal_primes(const Graph& g, int cap = default_enumeration_cap) {
    std::vector<MinimalPrime> out;
    for (CutSetRecord& rec : cut_point_sets(g, cap)) {
        std::ostringstream txt;
        bool first = true;
        for (int t : rec.t) {
            txt << (first ? "" : ", ") << "x" << t << ", y" << t;
            first = false;
        }
        for (const VertexSet& comp : rec.comps) {
            if (comp.size() < 2) continue;
            auto members = comp.members();
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    txt << (first ? "" : ", ") << "f_{" << members[i] << "," << members[j] << "}";
                    first = false;
                }
            txt << " on component " << detail::set_text(comp);
        }
        if (first) txt << "0";
        out.push_back({std::move(rec), txt.str()});
    }
    return out;
}

// For connected g: every cut-point set splits the complement into exactly
// |T|+1 pieces, equivalently every minimal prime has height n-1.
inline bool is_unmixed(const Graph& g, int cap = default_enumeration_cap) {
    if (!is_connected(g))
        throw input_error("is_unmixed requires a connected graph; evaluate per component");
    auto records = cut_point_sets(g, cap);
    bool balanced = true;
    bool flat = true;
    for (const CutSetRecord& r : records) {
        balanced = balanced && r.component_count == r.t.size() + 1;
        flat = flat && r.height == g.vertex_count() - 1;
    }
    detail::check(balanced == flat, "the two unmixedness characterizations disagree");
    return balanced;
}

// Direct scan for the composition condition: edges {i,j+1} and {j,k+1} with
// i<j<k must be completed by {i,k+1}.
inline bool satisfies_condition_iv(const Graph& g) {
    const auto es = g.edges();
    for (const Edge& e1 : es) {
        if (e1.v - e1.u < 2) continue;
        for (const Edge& e2 : es) {
            if (e2.u != e1.v - 1 || e2.v - e2.u < 2) continue;
            if (!g.has_edge(e1.u, e2.v)) return false;
        }
    }
    return true;
}

enum class CmStatus { cm, not_cm, unknown };

inline const char* cm_status_name(CmStatus s) {
    switch (s) {
        case CmStatus::cm: return "CM";
        case CmStatus::not_cm: return "NOT_CM";
        case CmStatus::unknown: return "UNKNOWN";
    }
    return "?";
}

// Decides Cohen-Macaulayness for connected graphs. Not unmixed means not CM.
// Unmixed plus a proper interval ordering means CM: under that ordering the
// composition condition, unmixedness and Cohen-Macaulayness coincide.
// Unmixed without a certified ordering stays unknown; the equivalence is a
// theorem about closed graphs only.
inline CmStatus cm_status(const Graph& g, int cap = default_enumeration_cap) {
    if (!is_connected(g)) throw input_error("cm_status requires a connected graph");
    if (!is_unmixed(g, cap)) return CmStatus::not_cm;
    OrderingResult ordering = find_pi_ordering(g);
    if (ordering.status != OrderingStatus::found) return CmStatus::unknown;
    bool iv = satisfies_condition_iv(relabel(g, *ordering.labeling));
    detail::check(iv, "unmixed closed graph fails the composition condition");
    return CmStatus::cm;
}

struct CliqueComplexSummary {
    std::vector<VertexSet> facets; // maximal cliques, sorted by members
    VertexSet free_vertices;       // vertices lying in exactly one facet
};

namespace detail {

inline void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                          std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    int pivot = 0, best = -1;
    for (int u : p | x) {
        int c = (p & g.neighbors(u)).size();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexSet candidates = p.minus(g.neighbors(pivot));
    for (int v : candidates) {
        bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
        p.erase(v);
        x.insert(v);
    }
}

} // namespace detail

inline CliqueComplexSummary clique_summary(const Graph& g) {
    CliqueComplexSummary out;
    detail::bron_kerbosch(g, VertexSet(), g.vertices(), VertexSet(), out.facets);
    std::sort(out.facets.begin(), out.facets.end(), VertexSet::lex_less);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int hits = 0;
        for (const VertexSet& f : out.facets) hits += f.contains(v);
        if (hits == 1) out.free_vertices.insert(v);
    }
    return out;
}

inline std::vector<std::pair<Graph, VertexSet>> component_subgraphs(const Graph& g) {
    std::vector<std::pair<Graph, VertexSet>> out;
    for (const VertexSet& comp : components(g))
        out.push_back({extract_induced(g, comp).first, comp});
    return out;
}

// A graph is unmixed iff every component is: heights of minimal primes add up
// across components, so one skewed component skews the whole family.
inline bool is_unmixed_componentwise(const Graph& g, int cap = default_enumeration_cap) {
    for (const auto& [sub, verts] : component_subgraphs(g))
        if (!is_unmixed(sub, cap)) return false;
    return true;
}

// The coordinate ring is the tensor product over the components, so the whole
// graph is CM exactly when every component is.
inline CmStatus cm_status_componentwise(const Graph& g, int cap = default_enumeration_cap) {
    bool any_unknown = false;
    for (const auto& [sub, verts] : component_subgraphs(g)) {
        CmStatus s = cm_status(sub, cap);
        if (s == CmStatus::not_cm) return CmStatus::not_cm;
        if (s == CmStatus::unknown) any_unknown = true;
    }
    return any_unknown ? CmStatus::unknown : CmStatus::cm;
}

struct VertexAudit {
    int vertex = 0;
    bool deleted_graph_closed = false;
    bool deleted_connected = false;
    bool deleted_unmixed = false;
    CmStatus deleted_cm = CmStatus::unknown;
    bool v_free = false;
    bool facet_condition = false;
};

struct AuditReport {
    std::vector<VertexAudit> per_vertex; // index v-1
};

// For each vertex, deletes it (with the label shift) and records closedness,
// unmixedness and CM status of the result, plus whether the vertex is free
// and whether its facet avoids being swallowed by any cut-point set of size
// other than one. The last two feed the deletion theorems.
inline AuditReport audit_subgraphs(const Graph& g, int cap = default_enumeration_cap) {
    if (!is_connected(g)) throw input_error("audit_subgraphs requires a connected graph");
    if (g.vertex_count() < 2) throw input_error("audit_subgraphs needs at least two vertices");
    CliqueComplexSummary summary = clique_summary(g);
    auto records = cut_point_sets(g, cap);
    AuditReport report;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        Graph d = induced_delete(g, v);
        VertexAudit a;
        a.vertex = v;
        a.deleted_graph_closed = is_closed_labeled(d);
        a.deleted_connected = is_connected(d);
        a.deleted_unmixed = is_unmixed_componentwise(d, cap);
        a.deleted_cm = cm_status_componentwise(d, cap);
        a.v_free = summary.free_vertices.contains(v);
        if (a.v_free) {
            VertexSet facet;
            for (const VertexSet& f : summary.facets)
                if (f.contains(v)) facet = f;
            VertexSet rest = facet.without(v);
            a.facet_condition = true;
            for (const CutSetRecord& r : records)
                if (r.t.size() != 1 && rest.subset_of(r.t)) {
                    a.facet_condition = false;
                    break;
                }
        }
        report.per_vertex.push_back(a);
    }
    return report;
}

} // namespace bei
