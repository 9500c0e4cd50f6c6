// Copyright 2026 The Tree Ramsey Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The subcommands, as functions from effective options to a result document
// plus what goes to stdout. No I/O besides reading @file patterns.

#ifndef RAMSEY_TOOLS_COMMANDS_HPP
#define RAMSEY_TOOLS_COMMANDS_HPP

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"

namespace ramsey::cli {

struct CommandOutput {
    /// The persisted JSON result document.
    std::string result;
    /// What the user sees on stdout.
    std::string display;
    int exit_code = kExitOk;
};

inline const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"trees",  "enumerate", "objective", "search", "tabu",
                                                   "oracle", "ramsey",    "table",     "aqo"};
    return names;
}

namespace detail {

inline std::string real_text(double x) {
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, p);
}

inline Pattern need_pattern(const std::string& spec, const char* which) {
    if (spec.empty()) throw InvalidInput(std::string("missing --") + which);
    return parse_pattern(spec);
}

inline int need_order(const RunOptions& o) {
    if (o.order < 1) throw InvalidInput("missing --order");
    return o.order;
}

inline std::string verdict_text(const OracleVerdict& v) {
    return std::string(to_string(v.source)) + " " + to_string(v.kind) + " " + std::to_string(v.value);
}

inline DriverOptions driver_options(const RunOptions& o) {
    DriverOptions d;
    d.budget = o.budget();
    d.census = o.census;
    d.oracle_seed = o.oracle_seed;
    d.threads = o.threads;
    d.witness_cap = static_cast<size_t>(o.witness_cap);
    d.tabu.seed = o.seed;
    d.tabu.max_iterations = o.iterations;
    d.tabu.restarts = o.restarts;
    d.tabu.tenure = o.tenure;
    return d;
}

inline CommandOutput finish(const Json& result, std::string display, const RunOptions& o, int code = kExitOk) {
    CommandOutput out;
    out.result = dump(result);
    out.display = o.out == "json" ? out.result : std::move(display);
    out.exit_code = code;
    return out;
}

}  // namespace detail

/// Every option as key/value text; resolve_options({}, this) rebuilds it.
inline Settings options_settings(const RunOptions& o) {
    std::string sweep;
    for (double t : o.sweep) sweep += (sweep.empty() ? "" : ",") + detail::real_text(t);
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    Settings s = {{"red", o.red},
                  {"blue", o.blue},
                  {"order", std::to_string(o.order)},
                  {"col_order", std::to_string(o.col_order)},
                  {"extended", b(o.extended)},
                  {"heroic", b(o.heroic)},
                  {"census", b(o.census)},
                  {"oracle_seed", b(o.oracle_seed)},
                  {"threads", std::to_string(o.threads)},
                  {"seed", std::to_string(o.seed)},
                  {"iterations", std::to_string(o.iterations)},
                  {"restarts", std::to_string(o.restarts)},
                  {"tenure", std::to_string(o.tenure)},
                  {"runtime", detail::real_text(o.runtime)},
                  {"steps", std::to_string(o.steps)},
                  {"shots", std::to_string(o.shots)},
                  {"sweep", sweep},
                  {"witness_cap", std::to_string(o.witness_cap)},
                  {"out", o.out},
                  {"field", o.field},
                  {"shards", std::to_string(o.shards)},
                  {"shard", std::to_string(o.shard)},
                  {"checkpoint", o.checkpoint},
                  {"coloring", o.coloring}};
    // Zero means "unset" for the order keys; keep them out so the round
    // trip does not trip the >= 1 check.
    std::erase_if(s, [](const auto& kv) { return (kv.first == "order" || kv.first == "col_order") && kv.second == "0"; });
    return s;
}

inline Json settings_json(const Settings& s) {
    Json j = Json::object();
    for (const auto& [k, v] : s) j[k] = v;
    return j;
}

inline Settings settings_from_json(const Json& j) {
    Settings s;
    for (const auto& [k, v] : j.items()) s.emplace_back(k, v.get<std::string>());
    return s;
}

inline CommandOutput cmd_trees(const RunOptions& o) {
    const int m = detail::need_order(o);
    if (m < 2 || m > kMaxTreeOrder) throw InvalidInput("tree order must be in 2.." + std::to_string(kMaxTreeOrder));
    Json classes = Json::array();
    std::ostringstream text;
    text << tree_catalog(m).size() << " trees of order " << m << "\n";
    for (const TreeClass& c : tree_catalog(m)) {
        classes.push_back({{"index", c.index}, {"handle", c.label()}, {"names", c.names},
                           {"edges", format_edge_list(c.representative)}});
        std::string names;
        for (const std::string& n : c.names) names += (names.empty() ? "" : " = ") + n;
        text << c.label() << "  " << format_edge_list(c.representative) << (names.empty() ? "" : "  " + names)
             << "\n";
    }
    return detail::finish(Json{{"order", m}, {"count", classes.size()}, {"classes", classes}}, text.str(), o);
}

inline CommandOutput cmd_enumerate(const RunOptions& o) {
    GenerationCursor cursor;
    if (!o.checkpoint.empty()) {
        try {
            cursor = GenerationCursor::from_checkpoint(o.checkpoint);
        } catch (const std::invalid_argument& e) {
            throw InvalidInput(e.what());
        }
    } else {
        const int n = detail::need_order(o);
        if (n > kMaxEnumerationOrder) throw InvalidInput("order exceeds " + std::to_string(kMaxEnumerationOrder));
        if (o.shard >= o.shards) throw InvalidInput("--shard must be below --shards");
        cursor = shard_enumeration(n, o.shards)[o.shard];
    }
    if (cursor.order > budget_max_order(o.budget())) {
        throw BudgetExceeded("order " + std::to_string(cursor.order) + " needs --extended (10) or --heroic (11)");
    }
    const std::uint64_t count = run_cursor(cursor, [](const SmallGraph&) {});
    Json j{{"order", cursor.order},     {"shard", cursor.shard},   {"shards", cursor.shards},
           {"unlabelled", count},       {"labelled", labelled_count(cursor.order)},
           {"checkpoint", cursor.checkpoint()}};
    std::ostringstream text;
    text << "order " << cursor.order << ": " << count << " unlabelled";
    if (cursor.shards > 1 || !o.checkpoint.empty()) text << " (shard " << cursor.shard << "/" << cursor.shards << ")";
    text << ", " << labelled_count(cursor.order) << " labelled colorings\n";
    return detail::finish(j, text.str(), o);
}

inline CommandOutput cmd_objective(const RunOptions& o) {
    const Pattern g = detail::need_pattern(o.red, "red"), h = detail::need_pattern(o.blue, "blue");
    if (o.coloring.empty()) throw InvalidInput("missing --coloring");
    Coloring e(2);
    try {
        e = parse_coloring(o.coloring);
    } catch (const std::invalid_argument& ex) {
        throw InvalidInput(ex.what());
    }
    const ObjectiveContext ctx(e.order(), g.graph, h.graph);
    const ObjectiveValue v = evaluate(e, ctx);
    Json j{{"coloring", format_coloring(e)}, {"red", v.red}, {"blue", v.blue}, {"total", v.total}};
    std::ostringstream text;
    text << "O = " << v.total << " (red " << v.red << ", blue " << v.blue << ")\n";
    return detail::finish(j, text.str(), o);
}

inline CommandOutput cmd_search(const RunOptions& o) {
    const Pattern g = detail::need_pattern(o.red, "red"), h = detail::need_pattern(o.blue, "blue");
    const int n = detail::need_order(o);
    const ObjectiveContext ctx(n, g.graph, h.graph);
    SearchOptions so;
    so.mode = o.census ? SearchMode::kCensus : SearchMode::kFirstZero;
    so.witness_cap = static_cast<size_t>(o.witness_cap);
    so.budget = o.budget();
    so.threads = o.threads;
    const SearchReport rep = min_objective_exhaustive(ctx, so);
    std::ostringstream text;
    text << "N=" << n << " min " << rep.min << ", " << rep.count << " classes" << (rep.complete ? "" : " (stopped early)")
         << "\n";
    for (const Coloring& w : rep.witnesses) text << "  " << format_coloring(w) << "\n";
    return detail::finish(search_json(rep, so.mode), text.str(), o);
}

inline CommandOutput cmd_tabu(const RunOptions& o) {
    const Pattern g = detail::need_pattern(o.red, "red"), h = detail::need_pattern(o.blue, "blue");
    const int n = detail::need_order(o);
    const ObjectiveContext ctx(n, g.graph, h.graph);
    TabuParams p;
    p.seed = o.seed;
    p.max_iterations = o.iterations;
    p.restarts = o.restarts;
    p.tenure = o.tenure;
    const TabuOutcome t = tabu_minimize(ctx, p);
    // Re-verified by a full evaluation, independent of the delta cache.
    const ObjectiveValue check = evaluate(t.best, ctx);
    if (check.total != t.best_value.total) throw std::logic_error("tabu: reported value fails re-evaluation");
    Json j{{"order", n},
           {"status", to_string(t.status)},
           {"best_value", t.best_value.total},
           {"best", format_coloring(t.best)},
           {"iterations", t.iterations},
           {"restarts_used", t.restarts_used}};
    std::ostringstream text;
    text << "N=" << n << " best " << t.best_value.total << " (" << to_string(t.status) << ", " << t.iterations
         << " iterations, " << t.restarts_used << " restarts)\n  " << format_coloring(t.best) << "\n";
    return detail::finish(j, text.str(), o);
}

inline CommandOutput cmd_oracle(const RunOptions& o) {
    const Pattern g = detail::need_pattern(o.red, "red"), h = detail::need_pattern(o.blue, "blue");
    const std::vector<OracleVerdict> v = applicable_oracles(g.graph, h.graph);
    Json j{{"oracles", oracle_json(v)}, {"lower_bound", oracle_lower_bound(v)}, {"consistent", oracles_consistent(v)}};
    const int exact = oracle_exact_value(v);
    j["exact"] = exact > 0 ? Json(exact) : Json(nullptr);
    std::ostringstream text;
    if (v.empty()) text << "no applicable oracle\n";
    for (const OracleVerdict& x : v) text << detail::verdict_text(x) << "\n";
    return detail::finish(j, text.str(), o);
}

inline CommandOutput cmd_ramsey(const RunOptions& o) {
    const Pattern g = detail::need_pattern(o.red, "red"), h = detail::need_pattern(o.blue, "blue");
    const RamseyResult r = compute_ramsey(g.graph, h.graph, detail::driver_options(o));
    std::ostringstream text;
    text << "r(" << g.spec << ", " << h.spec << ") " << (r.status == ResultStatus::kExact ? "= " : ">= ") << r.value
         << " (" << to_string(r.status) << ")\n";
    for (const TraceEntry& e : r.trace) {
        text << "  N=" << e.order << " " << to_string(e.method) << " " << e.value;
        if (e.witness) text << "  " << format_coloring(*e.witness);
        text << "\n";
    }
    if (r.critical.available) text << "  critical N=" << r.critical.order << ": " << r.critical.count << " classes\n";
    if (r.optimal.available) {
        text << "  optimal N=" << r.optimal.order << ": min " << r.optimal.min << ", " << r.optimal.count
             << " classes\n";
    }
    for (const OracleVerdict& v : r.oracles) text << "  oracle " << detail::verdict_text(v) << "\n";
    if (!r.oracle_agrees) text << "  WARNING: disagrees with an oracle\n";
    return detail::finish(result_json(r), text.str(), o,
                          r.status == ResultStatus::kExact ? kExitOk : kExitLowerBound);
}

inline CommandOutput cmd_table(const RunOptions& o) {
    const int m = detail::need_order(o);
    const int n = o.col_order > 0 ? o.col_order : m;
    for (int x : {m, n}) {
        if (x < 2 || x > kMaxPatternOrder) throw InvalidInput("table orders must be in 2.." + std::to_string(kMaxPatternOrder));
    }
    DriverOptions d = detail::driver_options(o);
    d.census = true;
    const RamseyTable t = compute_table(m, n, d);
    const TableDocument doc = make_table_document(t);
    bool partial = false;
    for (const auto& row : t.cells) {
        for (const RamseyResult& r : row) partial = partial || r.status != ResultStatus::kExact;
    }
    CommandOutput out;
    out.result = emit_table(doc, TableFormat::kJson);
    out.display = emit_table(doc, parse_table_format(o.out), parse_table_field(o.field));
    out.exit_code = partial ? kExitLowerBound : kExitOk;
    return out;
}

inline CommandOutput cmd_aqo(const RunOptions& o) {
    const Pattern g = detail::need_pattern(o.red, "red"), h = detail::need_pattern(o.blue, "blue");
    AqoConfig cfg;
    cfg.runtime = o.runtime;
    cfg.steps = o.steps;
    cfg.shots = o.shots;
    cfg.seed = o.seed;
    const std::string head = "kind,order,runtime,steps,shot,index,bits,objective,overlap\n";
    if (o.order == 0) {
        const AqoRamseyRun run = run_aqo_ramsey(g.graph, h.graph, cfg);
        Json j = result_json(run.result);
        Json orders = Json::array();
        std::ostringstream csv;
        csv << "order,qubits,best_sampled,exhaustive_min,ground_overlap,epsilon,planned_runs,corroborated,"
               "max_norm_drift\n";
        for (const AqoOrderReport& r : run.orders) {
            orders.push_back({{"order", r.order},
                              {"qubits", r.qubits},
                              {"best_sampled", r.best_sampled},
                              {"exhaustive_min", r.exhaustive_min},
                              {"ground_overlap", r.ground_overlap},
                              {"epsilon", r.epsilon},
                              {"planned_runs", r.planned_runs},
                              {"corroborated", r.corroborated},
                              {"max_norm_drift", r.max_norm_drift}});
            csv << r.order << "," << r.qubits << "," << r.best_sampled << "," << r.exhaustive_min << ","
                << detail::real_text(r.ground_overlap) << "," << detail::real_text(r.epsilon) << "," << r.planned_runs
                << "," << (r.corroborated ? 1 : 0) << "," << detail::real_text(r.max_norm_drift) << "\n";
        }
        j["aqo_orders"] = orders;
        j["truncated"] = run.truncated;
        return detail::finish(j, csv.str(), o,
                              run.result.status == ResultStatus::kExact ? kExitOk : kExitLowerBound);
    }

    const int n = o.order;
    if (n < 2 || num_pairs(n) > kMaxQubits) throw InvalidInput("aqo order must have 1..20 qubits (N <= 6)");
    const ObjectiveContext ctx(n, g.graph, h.graph);
    const DiagonalProblem problem = build_problem(ctx);
    EvolveStats stats;
    const QuantumState psi = evolve(initial_state(problem.qubits), problem, Schedule::linear(o.runtime, o.steps), &stats);
    const std::vector<std::uint64_t> samples = measure(psi, o.shots, o.seed);
    const double overlap = ground_overlap(psi, problem);

    std::ostringstream csv;
    csv << head;
    Json js = Json::array();
    std::uint64_t best = samples[0];
    for (size_t s = 0; s < samples.size(); ++s) {
        const std::uint64_t idx = samples[s];
        const Coloring e = Coloring::from_basis_index(n, idx);
        if (problem.diagonal[idx] < problem.diagonal[best]) best = idx;
        js.push_back({{"index", idx}, {"bits", e.bit_string()}, {"objective", problem.diagonal[idx]}});
        csv << "sample," << n << "," << detail::real_text(o.runtime) << "," << o.steps << "," << s << "," << idx << ","
            << e.bit_string() << "," << problem.diagonal[idx] << ",\n";
    }
    const Coloring best_e = Coloring::from_basis_index(n, best);
    csv << "best," << n << "," << detail::real_text(o.runtime) << "," << o.steps << ",," << best << ","
        << best_e.bit_string() << "," << problem.diagonal[best] << "," << detail::real_text(overlap) << "\n";

    // Overlap against runtime at the same step density.
    Json jsweep = Json::array();
    for (double t : o.sweep) {
        const int steps = o.runtime > 0 ? std::max(1, static_cast<int>(std::lround(t * o.steps / o.runtime))) : o.steps;
        const double ov = ground_overlap(evolve(initial_state(problem.qubits), problem, Schedule::linear(t, steps)), problem);
        jsweep.push_back({{"runtime", t}, {"steps", steps}, {"overlap", ov}});
        csv << "sweep," << n << "," << detail::real_text(t) << "," << steps << ",,,,," << detail::real_text(ov) << "\n";
    }
    const int k = [&] {
        int misses = 0;
        for (std::uint64_t idx : samples) misses += problem.diagonal[idx] != problem.min() ? 1 : 0;
        const double eps = static_cast<double>(misses) / samples.size();
        return eps > 0 && eps < 1 ? plan_repetitions(eps, 0.999).runs : 1;
    }();
    Json j{{"order", n},
           {"qubits", problem.qubits},
           {"runtime", o.runtime},
           {"steps", o.steps},
           {"shots", o.shots},
           {"seed", o.seed},
           {"exhaustive_min", problem.min()},
           {"best_sampled", problem.diagonal[best]},
           {"best", format_coloring(best_e)},
           {"ground_overlap", overlap},
           {"max_norm_drift", stats.max_norm_drift},
           {"planned_runs", k},
           {"samples", js},
           {"sweep", jsweep}};
    return detail::finish(j, csv.str(), o);
}

struct ReplayOutcome {
    std::string command;
    RunOptions options;
    CommandOutput output;
    std::string expected_digest;
    bool identical = false;
};

CommandOutput run_command(const std::string& command, const RunOptions& o);

/// Re-runs the command recorded in a manifest and compares result digests.
inline ReplayOutcome replay_manifest(const std::filesystem::path& manifest_path) {
    Json m;
    try {
        m = Json::parse(detail::read_file(manifest_path));
    } catch (const Json::exception& e) {
        throw InvalidInput("manifest '" + manifest_path.string() + "': " + e.what());
    }
    ReplayOutcome r;
    r.command = m.at("command").get<std::string>();
    r.options = resolve_options({}, settings_from_json(m.at("parameters")));
    r.expected_digest = m.at("result_sha256").get<std::string>();
    r.output = run_command(r.command, r.options);
    r.identical = sha256_hex(r.output.result) == r.expected_digest;
    return r;
}

inline CommandOutput run_command(const std::string& command, const RunOptions& o) {
    if (command == "trees") return cmd_trees(o);
    if (command == "enumerate") return cmd_enumerate(o);
    if (command == "objective") return cmd_objective(o);
    if (command == "search") return cmd_search(o);
    if (command == "tabu") return cmd_tabu(o);
    if (command == "oracle") return cmd_oracle(o);
    if (command == "ramsey") return cmd_ramsey(o);
    if (command == "table") return cmd_table(o);
    if (command == "aqo") return cmd_aqo(o);
    throw InvalidInput("unknown command '" + command + "'");
}

}  // namespace ramsey::cli

#endif  // RAMSEY_TOOLS_COMMANDS_HPP
