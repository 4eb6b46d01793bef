#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bei/graph.hpp"
#include "bei/oracle.hpp"
#include "bei/trace.hpp"

// Report assembly shared by the command line tools. Every report carries the
// same seven keys (input, labeling, trace, result, verdicts, primes, timing);
// sections that do not apply stay null, so consumers can rely on the shape.
// All containers are emitted in sorted order, which keeps repeated runs
// byte-identical.

namespace bei {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_set(VertexSet s) {
    ordered_json arr = ordered_json::array();
    for (int v : s) arr.push_back(v);
    return arr;
}

inline ordered_json json_edge(Edge e) { return ordered_json::array({e.u, e.v}); }

inline ordered_json json_edges(const std::vector<Edge>& edges) {
    ordered_json arr = ordered_json::array();
    for (Edge e : edges) arr.push_back(json_edge(e));
    return arr;
}

inline ordered_json json_graph(const Graph& g) {
    return ordered_json{{"vertex_count", g.vertex_count()}, {"edges", json_edges(g.edges())}};
}

inline ordered_json json_trace(const ConstructionTrace& trace) {
    ordered_json arr = ordered_json::array();
    for (const TraceStep& s : trace)
        arr.push_back(ordered_json{{"added", json_edge(s.added)},
                                   {"rule", rule_name(s.rule)},
                                   {"witnesses", ordered_json::array({json_edge(s.witness_a), json_edge(s.witness_b)})}});
    return arr;
}

inline ordered_json json_primes(const std::vector<MinimalPrime>& primes) {
    ordered_json arr = ordered_json::array();
    for (const MinimalPrime& p : primes) {
        ordered_json comps = ordered_json::array();
        for (const VertexSet& c : p.record.comps) comps.push_back(json_set(c));
        arr.push_back(ordered_json{{"t", json_set(p.record.t)},
                                   {"components", comps},
                                   {"component_count", p.record.component_count},
                                   {"height", p.record.height},
                                   {"generators", p.generators}});
    }
    return arr;
}

struct RunReport {
    ordered_json input = nullptr;
    ordered_json labeling = nullptr;
    ConstructionTrace trace;
    bool has_trace = false;
    ordered_json result = nullptr;
    ordered_json verdicts = nullptr;
    std::optional<std::vector<MinimalPrime>> primes;
    std::optional<double> timing_ms;
};

inline ordered_json to_json(const RunReport& r) {
    ordered_json out;
    out["input"] = r.input;
    out["labeling"] = r.labeling;
    out["trace"] = r.has_trace ? json_trace(r.trace) : ordered_json(nullptr);
    out["result"] = r.result;
    out["verdicts"] = r.verdicts;
    out["primes"] = r.primes ? json_primes(*r.primes) : ordered_json(nullptr);
    out["timing"] = r.timing_ms ? ordered_json(*r.timing_ms) : ordered_json(nullptr);
    return out;
}

namespace detail {

inline std::string edge_text(Edge e) {
    return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

// Pretty-prints with objects expanded one key per line while arrays that
// contain no objects stay on a single line.
inline void dump_value(std::ostringstream& out, const ordered_json& j, int depth) {
    auto object_free = [](const ordered_json& v) {
        if (!v.is_structured()) return true;
        for (const auto& item : v)
            if (item.is_object() || (item.is_array() && !item.empty() && item[0].is_structured()))
                return false;
        return !v.is_object();
    };
    std::string pad(2 * depth, ' ');
    if (j.is_object()) {
        out << "{\n";
        std::size_t i = 0;
        for (const auto& [key, value] : j.items()) {
            out << pad << "  \"" << key << "\": ";
            dump_value(out, value, depth + 1);
            out << (++i < j.size() ? "," : "") << "\n";
        }
        out << pad << "}";
    } else if (j.is_array() && !object_free(j)) {
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << pad << "  ";
            dump_value(out, j[i], depth + 1);
            out << (i + 1 < j.size() ? "," : "") << "\n";
        }
        out << pad << "]";
    } else {
        out << j.dump();
    }
}

inline void dump_section(std::ostringstream& out, const std::string& name, const ordered_json& j) {
    out << name << ":";
    if (j.is_null()) {
        out << " none\n";
        return;
    }
    out << " ";
    dump_value(out, j, 0);
    out << "\n";
}

} // namespace detail

inline std::string to_text(const RunReport& r) {
    std::ostringstream out;
    detail::dump_section(out, "input", r.input);
    detail::dump_section(out, "labeling", r.labeling);
    if (!r.has_trace) {
        out << "trace: none\n";
    } else if (r.trace.empty()) {
        out << "trace: no additions\n";
    } else {
        out << "trace: " << r.trace.size() << " addition" << (r.trace.size() == 1 ? "" : "s") << "\n";
        for (const TraceStep& s : r.trace)
            out << "  + " << detail::edge_text(s.added) << " by " << rule_name(s.rule) << " from "
                << detail::edge_text(s.witness_a) << " and " << detail::edge_text(s.witness_b) << "\n";
    }
    detail::dump_section(out, "result", r.result);
    detail::dump_section(out, "verdicts", r.verdicts);
    if (!r.primes) {
        out << "primes: none\n";
    } else {
        out << "primes: " << r.primes->size() << " minimal prime" << (r.primes->size() == 1 ? "" : "s") << "\n";
        for (const MinimalPrime& p : *r.primes) {
            out << "  T=" << detail::set_text(p.record.t) << " components=";
            for (std::size_t i = 0; i < p.record.comps.size(); ++i)
                out << (i ? " " : "") << detail::set_text(p.record.comps[i]);
            out << " height=" << p.record.height << " generators: " << p.generators << "\n";
        }
    }
    if (r.timing_ms)
        out << "timing: " << *r.timing_ms << " ms\n";
    else
        out << "timing: not measured\n";
    return out.str();
}

} // namespace bei
