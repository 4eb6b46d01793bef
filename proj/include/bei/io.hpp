#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "bei/clutter.hpp"
#include "bei/errors.hpp"
#include "bei/graph.hpp"

// Plain text formats. A graph file is a header line "graph <n>" followed by
// one "u v" line per edge; a clutter file is "clutter <n>" followed by one
// whitespace-separated vertex list per edge. '#' starts a comment, blank
// lines are skipped. Duplicate edges are tolerated with a warning; loops,
// out-of-range vertices and malformed lines are errors.

namespace bei {

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

struct ParsedClutter {
    Clutter clutter;
    std::vector<std::string> warnings;
};

namespace detail {

inline std::string strip_comment(std::string line) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    return line;
}

inline bool blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

inline std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::istringstream in(line);
    std::vector<long long> out;
    long long v;
    while (in >> v) out.push_back(v);
    std::string rest;
    if (in.clear(), in >> rest)
        throw input_error("line " + std::to_string(lineno) + ": expected integers, found '" + rest + "'");
    return out;
}

// Reads the header and hands each remaining payload line to the sink.
template <typename Sink>
void scan_lines(std::istream& in, const std::string& expected_kind, int& n, Sink&& sink) {
    std::string line;
    int lineno = 0;
    bool seen_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        if (!seen_header) {
            std::istringstream head(line);
            std::string kind;
            long long count = 0;
            if (!(head >> kind >> count) || kind != expected_kind)
                throw input_error("line " + std::to_string(lineno) + ": expected header '" + expected_kind +
                                  " <n>'");
            std::string rest;
            if (head >> rest)
                throw input_error("line " + std::to_string(lineno) + ": trailing text after header");
            if (count < 1 || count > VertexSet::max_universe)
                throw input_error("line " + std::to_string(lineno) + ": vertex count must be between 1 and 64");
            n = static_cast<int>(count);
            seen_header = true;
            continue;
        }
        sink(parse_ints(line, lineno), lineno);
    }
    if (!seen_header) throw input_error("missing header line '" + expected_kind + " <n>'");
}

inline int check_vertex(long long v, int n, int lineno) {
    if (v < 1 || v > n)
        throw input_error("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                          " is outside 1.." + std::to_string(n));
    return static_cast<int>(v);
}

} // namespace detail

inline ParsedGraph parse_graph(std::istream& in) {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::string> warnings;
    detail::scan_lines(in, "graph", n, [&](const std::vector<long long>& vals, int lineno) {
        if (vals.size() != 2)
            throw input_error("line " + std::to_string(lineno) + ": an edge line needs exactly two vertices");
        int u = detail::check_vertex(vals[0], n, lineno);
        int v = detail::check_vertex(vals[1], n, lineno);
        if (u == v) throw input_error("line " + std::to_string(lineno) + ": loop at vertex " + std::to_string(u));
        Edge e = make_edge(u, v);
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge {" + std::to_string(e.u) +
                               "," + std::to_string(e.v) + "} ignored");
        else
            edges.push_back(e);
    });
    Graph g(n);
    for (Edge e : edges) g.add_edge(e.u, e.v);
    return {std::move(g), std::move(warnings)};
}

inline ParsedClutter parse_clutter(std::istream& in) {
    int n = 0;
    std::vector<VertexSet> edges;
    std::vector<std::string> warnings;
    detail::scan_lines(in, "clutter", n, [&](const std::vector<long long>& vals, int lineno) {
        VertexSet e;
        for (long long raw : vals) {
            int v = detail::check_vertex(raw, n, lineno);
            if (e.contains(v))
                throw input_error("line " + std::to_string(lineno) + ": repeated vertex " + std::to_string(v) +
                                  " in one edge");
            e.insert(v);
        }
        if (e.size() < 2)
            throw input_error("line " + std::to_string(lineno) + ": a clutter edge needs at least two vertices");
        if (std::find(edges.begin(), edges.end(), e) != edges.end())
            warnings.push_back("line " + std::to_string(lineno) + ": duplicate edge " + detail::set_text(e) +
                               " ignored");
        else
            edges.push_back(e);
    });
    return {Clutter(n, std::move(edges)), std::move(warnings)};
}

inline ParsedGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline ParsedClutter parse_clutter(const std::string& text) {
    std::istringstream in(text);
    return parse_clutter(in);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "graph " << g.vertex_count() << "\n";
    for (Edge e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

inline std::string serialize_clutter(const Clutter& c) {
    std::ostringstream out;
    out << "clutter " << c.vertex_count() << "\n";
    for (const VertexSet& e : c.edge_sets()) {
        bool first = true;
        for (int v : e) {
            if (!first) out << " ";
            out << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

} // namespace bei
