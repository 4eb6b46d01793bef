#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bei/clutter.hpp"
#include "bei/construct.hpp"
#include "bei/io.hpp"
#include "bei/oracle.hpp"
#include "bei/pi_ordering.hpp"
#include "bei/report.hpp"

// Command line front end. Exit codes: 0 success, 1 bad input or usage,
// 2 an enumeration or search limit was exceeded.

namespace {

struct Options {
    std::string path;
    bool json = false;
    bool timing = false;
    int cap = bei::default_enumeration_cap;
    bool allow_big_cap = false;
    std::string labeling = "identity";
    int budget = 256;
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw bei::input_error("cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return buf.str();
}

void check_cap(const Options& opt) {
    if (opt.cap < 1) throw bei::input_error("--cap must be positive");
    if (opt.cap > bei::default_enumeration_cap && !opt.allow_big_cap)
        throw bei::input_error("--cap above " + std::to_string(bei::default_enumeration_cap) +
                               " makes runs take exponentially long; add --allow-big-cap to proceed");
}

bei::LabelingStrategy parse_strategy(const std::string& name) {
    if (name == "identity") return bei::LabelingStrategy::identity;
    if (name == "bfs") return bei::LabelingStrategy::bfs;
    if (name == "exhaustive-min") return bei::LabelingStrategy::exhaustive_min;
    throw bei::input_error("unknown labeling strategy '" + name + "' (identity, bfs, exhaustive-min)");
}

bei::ordered_json json_graph_input(const bei::Graph& g) {
    return {{"kind", "graph"}, {"vertex_count", g.vertex_count()}, {"edges", bei::json_edges(g.edges())}};
}

bei::ordered_json json_clutter_sets(const bei::Clutter& c) {
    bei::ordered_json sets = bei::ordered_json::array();
    for (const bei::VertexSet& e : c.edge_sets()) sets.push_back(bei::json_set(e));
    return sets;
}

bei::ordered_json json_clutter_input(const bei::Clutter& c) {
    return {{"kind", "clutter"}, {"vertex_count", c.vertex_count()}, {"edge_sets", json_clutter_sets(c)}};
}

// Unmixed/CM verdicts for a possibly disconnected graph: global fields stay
// null unless the graph is connected, per-component verdicts always appear.
bei::ordered_json graph_verdicts(const bei::Graph& g, int cap) {
    bei::ordered_json out;
    bool connected = bei::is_connected(g);
    out["connected"] = connected;
    if (connected) {
        out["unmixed"] = bei::is_unmixed(g, cap);
        out["cm"] = bei::cm_status_name(bei::cm_status(g, cap));
    } else {
        out["unmixed"] = nullptr;
        out["cm"] = nullptr;
    }
    bei::ordered_json comps = bei::ordered_json::array();
    for (const auto& [sub, comp] : bei::component_subgraphs(g))
        comps.push_back({{"vertices", bei::json_set(comp)},
                         {"unmixed", bei::is_unmixed(sub, cap)},
                         {"cm", bei::cm_status_name(bei::cm_status(sub, cap))}});
    out["components"] = comps;
    return out;
}

void emit(const bei::RunReport& report, const Options& opt) {
    if (opt.json)
        std::cout << bei::to_json(report).dump(2) << "\n";
    else
        std::cout << bei::to_text(report);
}

void warn_all(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

using Clock = std::chrono::steady_clock;

void finish(bei::RunReport& report, const Options& opt, Clock::time_point t0) {
    if (opt.timing)
        report.timing_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    emit(report, opt);
}

void run_close(const Options& opt) {
    auto [g, warnings] = bei::parse_graph(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::ClosureResult res = bei::close(g);
    bei::RunReport report;
    report.input = json_graph_input(g);
    report.trace = res.trace;
    report.has_trace = true;
    report.result = {{"closed_input", res.trace.empty()},
                     {"added_count", res.trace.size()},
                     {"output", bei::json_graph(res.graph)}};
    finish(report, opt, t0);
}

void run_construct(const Options& opt) {
    check_cap(opt);
    auto [g, warnings] = bei::parse_graph(read_input(opt.path));
    warn_all(warnings);
    bei::LabelingStrategy strategy = parse_strategy(opt.labeling);
    auto t0 = Clock::now();
    bei::ConstructResult res = bei::construct(g, strategy);
    bei::RunReport report;
    report.input = json_graph_input(g);
    bei::ordered_json order = bei::ordered_json::array();
    for (int w = 1; w <= g.vertex_count(); ++w) order.push_back(res.labeling.to_original(w));
    report.labeling = {{"strategy", bei::labeling_strategy_name(strategy)},
                       {"identity", res.labeling.is_identity()},
                       {"working_order", order}};
    report.trace = res.trace;
    report.has_trace = true;
    bei::ordered_json added = bei::ordered_json::array();
    for (const bei::TraceStep& s : res.trace) added.push_back(bei::json_edge(s.added));
    report.result = {{"output", bei::json_graph(res.graph)},
                     {"added", added},
                     {"working_output", bei::json_graph(res.working_graph)}};
    if (g.vertex_count() <= opt.cap) {
        report.verdicts = graph_verdicts(res.graph, opt.cap);
        report.primes = bei::minimal_primes(res.graph, opt.cap);
    } else {
        std::cerr << "note: skipping verdicts and minimal primes, " << g.vertex_count()
                  << " vertices exceed the enumeration cap " << opt.cap << " (raise with --cap)\n";
    }
    finish(report, opt, t0);
}

void run_oracle(const Options& opt) {
    check_cap(opt);
    auto [g, warnings] = bei::parse_graph(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::RunReport report;
    report.input = json_graph_input(g);
    bei::OrderingResult ord = bei::find_pi_ordering(g);
    bei::ordered_json order = nullptr;
    if (ord.labeling) {
        order = bei::ordered_json::array();
        for (int w = 1; w <= g.vertex_count(); ++w) order.push_back(ord.labeling->to_original(w));
    }
    auto family = bei::cut_point_sets(g, opt.cap);
    report.result = {{"closed", bei::is_closed_labeled(g)},
                     {"interval_form", bei::is_pi_ordered(g)},
                     {"ordering", {{"status", bei::ordering_status_name(ord.status)}, {"order", order}}},
                     {"cut_point_set_count", family.size()},
                     {"condition_iv", bei::satisfies_condition_iv(g)}};
    report.verdicts = graph_verdicts(g, opt.cap);
    report.primes = bei::minimal_primes(g, opt.cap);
    finish(report, opt, t0);
}

void run_audit(const Options& opt) {
    check_cap(opt);
    auto [g, warnings] = bei::parse_graph(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::AuditReport audit = bei::audit_subgraphs(g, opt.cap);
    bei::RunReport report;
    report.input = json_graph_input(g);
    bei::ordered_json rows = bei::ordered_json::array();
    for (const bei::VertexAudit& a : audit.per_vertex)
        rows.push_back({{"vertex", a.vertex},
                        {"deleted_graph_closed", a.deleted_graph_closed},
                        {"deleted_connected", a.deleted_connected},
                        {"deleted_unmixed", a.deleted_unmixed},
                        {"deleted_cm", bei::cm_status_name(a.deleted_cm)},
                        {"free", a.v_free},
                        {"facet_condition", a.facet_condition}});
    report.result = {{"per_vertex", rows}};
    report.verdicts = graph_verdicts(g, opt.cap);
    finish(report, opt, t0);
}

void run_pi_order(const Options& opt) {
    if (opt.budget < 1) throw bei::input_error("--budget must be positive");
    auto [g, warnings] = bei::parse_graph(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::OrderingResult res = bei::find_pi_ordering(g, opt.budget);
    bei::RunReport report;
    report.input = json_graph_input(g);
    bei::ordered_json order = nullptr;
    if (res.labeling) {
        order = bei::ordered_json::array();
        for (int w = 1; w <= g.vertex_count(); ++w) order.push_back(res.labeling->to_original(w));
        report.labeling = {{"strategy", "search"},
                           {"identity", res.labeling->is_identity()},
                           {"working_order", order}};
    }
    report.result = {{"status", bei::ordering_status_name(res.status)}, {"order", order}};
    finish(report, opt, t0);
}

void run_clutter_close(const Options& opt) {
    auto [c, warnings] = bei::parse_clutter(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::ClutterConstructResult res = bei::close_clutter(c);
    bei::RunReport report;
    report.input = json_clutter_input(c);
    report.trace = res.trace;
    report.has_trace = true;
    report.result = {{"closed_input", res.trace.empty()},
                     {"added_count", res.trace.size()},
                     {"output", {{"vertex_count", res.clutter.vertex_count()},
                                 {"edge_sets", json_clutter_sets(res.clutter)}}}};
    finish(report, opt, t0);
}

void run_clutter_construct(const Options& opt) {
    check_cap(opt);
    auto [c, warnings] = bei::parse_clutter(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::ClutterConstructResult res = bei::construct_clutter(c);
    bei::RunReport report;
    report.input = json_clutter_input(c);
    report.trace = res.trace;
    report.has_trace = true;
    bei::ordered_json added = bei::ordered_json::array();
    for (const bei::TraceStep& s : res.trace) added.push_back(bei::json_edge(s.added));
    report.result = {{"output", {{"vertex_count", res.clutter.vertex_count()},
                                 {"edge_sets", json_clutter_sets(res.clutter)}}},
                     {"added", added}};
    if (c.vertex_count() <= opt.cap) {
        bei::ClutterStatus st = bei::clutter_status(res.clutter, opt.cap);
        bei::ordered_json comps = bei::ordered_json::array();
        for (const bei::ClutterComponentVerdict& v : st.components)
            comps.push_back({{"vertices", bei::json_set(v.vertices)},
                             {"closed", v.closed},
                             {"unmixed", v.unmixed},
                             {"cm", bei::cm_status_name(v.cm)},
                             {"condition_d", v.condition_d}});
        report.verdicts = {{"connected", st.connected},
                           {"closed", st.closed},
                           {"condition_d", st.condition_d},
                           {"unmixed", st.unmixed ? bei::ordered_json(*st.unmixed) : bei::ordered_json(nullptr)},
                           {"cm", st.connected ? bei::ordered_json(bei::cm_status_name(st.cm)) : bei::ordered_json(nullptr)},
                           {"components", comps},
                           {"initial_ideal", st.initial_ideal_note}};
        report.primes = bei::minimal_primes(bei::associated_graph(res.clutter), opt.cap);
    } else {
        std::cerr << "note: skipping verdicts and minimal primes, " << c.vertex_count()
                  << " vertices exceed the enumeration cap " << opt.cap << " (raise with --cap)\n";
    }
    finish(report, opt, t0);
}

void run_clutter_oracle(const Options& opt) {
    check_cap(opt);
    auto [c, warnings] = bei::parse_clutter(read_input(opt.path));
    warn_all(warnings);
    auto t0 = Clock::now();
    bei::ClutterStatus st = bei::clutter_status(c, opt.cap);
    bei::RunReport report;
    report.input = json_clutter_input(c);
    report.result = {{"associated_graph", bei::json_graph(bei::associated_graph(c))},
                     {"initial_ideal", st.initial_ideal_note}};
    bei::ordered_json comps = bei::ordered_json::array();
    for (const bei::ClutterComponentVerdict& v : st.components)
        comps.push_back({{"vertices", bei::json_set(v.vertices)},
                         {"closed", v.closed},
                         {"unmixed", v.unmixed},
                         {"cm", bei::cm_status_name(v.cm)},
                         {"condition_d", v.condition_d}});
    report.verdicts = {{"connected", st.connected},
                       {"closed", st.closed},
                       {"condition_d", st.condition_d},
                       {"unmixed", st.unmixed ? bei::ordered_json(*st.unmixed) : bei::ordered_json(nullptr)},
                       {"cm", st.connected ? bei::ordered_json(bei::cm_status_name(st.cm)) : bei::ordered_json(nullptr)},
                       {"components", comps}};
    report.primes = bei::minimal_primes(bei::associated_graph(c), opt.cap);
    finish(report, opt, t0);
}

void add_common(CLI::App* cmd, Options& opt, bool with_cap) {
    cmd->add_option("file", opt.path, "input file, or - for stdin")->required();
    cmd->add_flag("--json", opt.json, "emit the report as JSON");
    cmd->add_flag("--timing", opt.timing, "include wall time in the report");
    if (with_cap) {
        cmd->add_option("--cap", opt.cap, "largest vertex count the enumeration will attempt");
        cmd->add_flag("--allow-big-cap", opt.allow_big_cap, "acknowledge a cap above the default");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binomial edge ideal toolkit: closure, CM augmentation, enumeration oracle"};
    app.require_subcommand(1);
    Options opt;
    std::function<void()> runner;

    CLI::App* close_cmd = app.add_subcommand("close", "complete a graph to a closed graph");
    add_common(close_cmd, opt, false);
    close_cmd->callback([&] { runner = [&] { run_close(opt); }; });

    CLI::App* construct_cmd = app.add_subcommand("construct", "build the CM augmentation of a graph");
    add_common(construct_cmd, opt, true);
    construct_cmd->add_option("--labeling", opt.labeling, "identity, bfs, or exhaustive-min");
    construct_cmd->callback([&] { runner = [&] { run_construct(opt); }; });

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "verify unmixedness and CM-ness by enumeration");
    add_common(oracle_cmd, opt, true);
    oracle_cmd->callback([&] { runner = [&] { run_oracle(opt); }; });

    CLI::App* audit_cmd = app.add_subcommand("audit", "examine every single-vertex deletion");
    add_common(audit_cmd, opt, true);
    audit_cmd->callback([&] { runner = [&] { run_audit(opt); }; });

    CLI::App* pi_cmd = app.add_subcommand("pi-order", "search for an interval-closed relabeling");
    add_common(pi_cmd, opt, false);
    pi_cmd->add_option("--budget", opt.budget, "candidate orders to try above the exhaustive range");
    pi_cmd->callback([&] { runner = [&] { run_pi_order(opt); }; });

    CLI::App* clutter_cmd = app.add_subcommand("clutter", "clutter commands");
    clutter_cmd->require_subcommand(1);
    CLI::App* cclose = clutter_cmd->add_subcommand("close", "complete a clutter to a closed clutter");
    add_common(cclose, opt, false);
    cclose->callback([&] { runner = [&] { run_clutter_close(opt); }; });
    CLI::App* cconstruct = clutter_cmd->add_subcommand("construct", "build the CM augmentation of a clutter");
    add_common(cconstruct, opt, true);
    cconstruct->callback([&] { runner = [&] { run_clutter_construct(opt); }; });
    CLI::App* coracle = clutter_cmd->add_subcommand("oracle", "verify a clutter by enumeration");
    add_common(coracle, opt, true);
    coracle->callback([&] { runner = [&] { run_clutter_oracle(opt); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        runner();
    } catch (const bei::cap_exceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const bei::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
