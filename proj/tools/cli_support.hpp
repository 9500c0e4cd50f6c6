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

// Plumbing behind the `ramsey` command: pattern specs, layered options,
// JSON result encoding, run manifests and table documents. Kept in a header
// so the tests can reach it without spawning the binary.

#ifndef RAMSEY_TOOLS_CLI_SUPPORT_HPP
#define RAMSEY_TOOLS_CLI_SUPPORT_HPP

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ramsey/ramsey.hpp"

namespace ramsey::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidInput = 2,
    kExitLowerBound = 3,
    kExitInternal = 4,
};

/// Anything the user typed wrong. Maps to exit code 2.
class InvalidInput : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

// ---------------------------------------------------------------------------
// Pattern specs
//
//   P<n>              path on n vertices
//   K1,<k>            star with k leaves
//   S<k>,<a>,<b>      double star S^(k)_{a,b}
//   T<m>.<j>          j-th class of the order-m tree catalog (1-based)
//   K<n>              complete graph
//   graph:<n>:<list>  explicit 1-based edge list, e.g. graph:4:1-2,2-3,3-4
//   @<file>           graph text file ("order N" / "edges ..." lines)

struct Pattern {
    SmallGraph graph{1};
    std::string spec;
};

namespace detail {

inline std::vector<int> split_ints(std::string_view s, char sep, const char* what) {
    std::vector<int> out;
    while (true) {
        const size_t pos = s.find(sep);
        out.push_back(ramsey::detail::parse_int(s.substr(0, pos), what));
        if (pos == std::string_view::npos) break;
        s = s.substr(pos + 1);
    }
    return out;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

inline Pattern parse_pattern(std::string_view spec) {
    const std::string text(ramsey::detail::trim(spec));
    auto fail = [&](const std::string& why) -> InvalidInput {
        return InvalidInput("pattern '" + text + "': " + why);
    };
    if (text.empty()) throw fail("empty spec");
    try {
        SmallGraph g{1};
        if (text[0] == '@') {
            g = parse_graph(detail::read_file(text.substr(1)));
        } else if (text.starts_with("graph:")) {
            const size_t colon = text.find(':', 6);
            if (colon == std::string::npos) throw fail("expected graph:<n>:<edges>");
            const int n = ramsey::detail::parse_int(std::string_view(text).substr(6, colon - 6), "order");
            if (n < 1 || n > kMaxOrder) throw fail("order out of range");
            g = parse_edge_list(n, std::string_view(text).substr(colon + 1));
        } else if (text.starts_with("K1,")) {
            g = build_star(ramsey::detail::parse_int(std::string_view(text).substr(3), "leaves"));
        } else if (text[0] == 'K') {
            const int n = ramsey::detail::parse_int(std::string_view(text).substr(1), "order");
            if (n < 2 || n > kMaxOrder) throw fail("order out of range");
            g = SmallGraph(n);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
            }
        } else if (text[0] == 'P') {
            g = build_path(ramsey::detail::parse_int(std::string_view(text).substr(1), "order"));
        } else if (text[0] == 'S') {
            const std::vector<int> v = detail::split_ints(std::string_view(text).substr(1), ',', "double star");
            if (v.size() != 3) throw fail("expected S<k>,<a>,<b>");
            g = build_double_star(v[0], v[1], v[2]);
        } else if (text[0] == 'T') {
            const std::vector<int> v = detail::split_ints(std::string_view(text).substr(1), '.', "catalog ref");
            if (v.size() != 2) throw fail("expected T<m>.<j>");
            g = build_family(CatalogRef{v[0], v[1]});
        } else {
            throw fail("unknown form (use P<n>, K1,<k>, S<k>,<a>,<b>, T<m>.<j>, K<n>, graph:<n>:<edges>, @file)");
        }
        if (g.num_edges() == 0) throw fail("pattern has no edges");
        return {g, text};
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    }
}

// ---------------------------------------------------------------------------
// Options: defaults < config file < command-line flags.

struct RunOptions {
    std::string red;
    std::string blue;
    int order = 0;
    int col_order = 0;
    bool extended = false;
    bool heroic = false;
    bool census = false;
    bool oracle_seed = true;
    int threads = 1;
    std::uint64_t seed = 1;
    int iterations = 50000;
    int restarts = 20;
    int tenure = -1;
    double runtime = 20.0;
    int steps = 400;
    int shots = 64;
    std::vector<double> sweep;
    int witness_cap = 16;
    std::string out = "text";
    std::string field = "r";
    int shards = 1;
    int shard = 0;
    std::string checkpoint;
    std::string coloring;

    Budget budget() const { return heroic ? Budget::kHeroic : extended ? Budget::kExtended : Budget::kDefault; }
};

/// Ordered (key, value) pairs, as written.
using Settings = std::vector<std::pair<std::string, std::string>>;

inline const std::vector<std::string>& known_keys() {
    static const std::vector<std::string> keys = {
        "red",   "blue",    "order",  "col_order", "extended", "heroic",      "census", "oracle_seed",
        "threads", "seed",  "iterations", "restarts", "tenure", "runtime",   "steps",  "shots",
        "sweep", "witness_cap", "out", "field",     "shards",   "shard",       "checkpoint", "coloring"};
    return keys;
}

namespace detail {

inline bool parse_bool(std::string_view v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw InvalidInput("expected a boolean, got '" + std::string(v) + "'");
}

inline std::int64_t parse_signed(std::string_view v) {
    std::int64_t x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) throw InvalidInput("expected an integer, got '" + std::string(v) + "'");
    return x;
}

inline int parse_count(std::string_view v, int lo) {
    const std::int64_t x = parse_signed(v);
    if (x < lo || x > 1'000'000'000) {
        throw InvalidInput("value " + std::string(v) + " out of range (min " + std::to_string(lo) + ")");
    }
    return static_cast<int>(x);
}

inline double parse_real(std::string_view v) {
    double x = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(x)) {
        throw InvalidInput("expected a number, got '" + std::string(v) + "'");
    }
    return x;
}

}  // namespace detail

/// Sets one option from text; unknown keys and bad values throw ConfigError.
inline void apply_setting(RunOptions& o, const std::string& key, const std::string& value) {
    using namespace detail;
    try {
        if (key == "red") {
            o.red = value;
        } else if (key == "blue") {
            o.blue = value;
        } else if (key == "order") {
            o.order = parse_count(value, 1);
        } else if (key == "col_order") {
            o.col_order = parse_count(value, 1);
        } else if (key == "extended") {
            o.extended = parse_bool(value);
        } else if (key == "heroic") {
            o.heroic = parse_bool(value);
        } else if (key == "census") {
            o.census = parse_bool(value);
        } else if (key == "oracle_seed") {
            o.oracle_seed = parse_bool(value);
        } else if (key == "threads") {
            o.threads = parse_count(value, 0);
        } else if (key == "seed") {
            std::uint64_t x = 0;
            auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), x);
            if (ec != std::errc() || p != value.data() + value.size()) throw InvalidInput("expected a seed");
            o.seed = x;
        } else if (key == "iterations") {
            o.iterations = parse_count(value, 1);
        } else if (key == "restarts") {
            o.restarts = parse_count(value, 1);
        } else if (key == "tenure") {
            o.tenure = static_cast<int>(std::clamp<std::int64_t>(parse_signed(value), -1, 1'000'000));
        } else if (key == "runtime") {
            o.runtime = parse_real(value);
            if (o.runtime < 0) throw InvalidInput("runtime must be >= 0");
        } else if (key == "steps") {
            o.steps = parse_count(value, 1);
        } else if (key == "shots") {
            o.shots = parse_count(value, 1);
        } else if (key == "sweep") {
            o.sweep.clear();
            std::string_view rest = value;
            while (!rest.empty()) {
                const size_t comma = rest.find(',');
                const double t = parse_real(ramsey::detail::trim(rest.substr(0, comma)));
                if (t < 0) throw InvalidInput("sweep runtimes must be >= 0");
                o.sweep.push_back(t);
                rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            }
        } else if (key == "witness_cap") {
            o.witness_cap = parse_count(value, 0);
        } else if (key == "out") {
            if (value != "text" && value != "json" && value != "csv") throw InvalidInput("out must be text, json or csv");
            o.out = value;
        } else if (key == "field") {
            if (value != "r" && value != "critical" && value != "optimal" && value != "min") {
                throw InvalidInput("field must be r, critical, optimal or min");
            }
            o.field = value;
        } else if (key == "shards") {
            o.shards = parse_count(value, 1);
        } else if (key == "shard") {
            o.shard = parse_count(value, 0);
        } else if (key == "checkpoint") {
            o.checkpoint = value;
        } else if (key == "coloring") {
            o.coloring = value;
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const InvalidInput& e) {
        throw ConfigError("key '" + key + "': " + e.what());
    }
}

/// key = value lines; '#' starts a comment. Errors carry "<source>:<line>".
inline Settings parse_config(std::string_view text, const std::string& source = "config") {
    Settings out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        std::string_view l = ramsey::detail::trim(std::string_view(line).substr(0, hash));
        if (l.empty()) continue;
        const std::string where = source + ":" + std::to_string(lineno) + ": ";
        const size_t eq = l.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value', got '" + std::string(l) + "'");
        const std::string key(ramsey::detail::trim(l.substr(0, eq)));
        const std::string value(ramsey::detail::trim(l.substr(eq + 1)));
        if (key.empty()) throw ConfigError(where + "missing key");
        const auto& keys = known_keys();
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw ConfigError(where + "unknown key '" + key + "'");
        if (!seen.insert(key).second) throw ConfigError(where + "duplicate key '" + key + "'");
        RunOptions probe;
        try {
            apply_setting(probe, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(where + e.what());
        }
        out.emplace_back(key, value);
    }
    return out;
}

inline Settings load_config(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) throw ConfigError("config file '" + path.string() + "' does not exist");
    return parse_config(detail::read_file(path), path.string());
}

/// Defaults, then the file, then the flags.
inline RunOptions resolve_options(const Settings& file, const Settings& flags) {
    RunOptions o;
    for (const auto& [k, v] : file) apply_setting(o, k, v);
    for (const auto& [k, v] : flags) apply_setting(o, k, v);
    return o;
}

// ---------------------------------------------------------------------------
// JSON encodings. Result documents hold no timings so reruns are
// byte-identical; timings go to the manifest.

inline Json graph_json(const SmallGraph& g) { return Json{{"order", g.order()}, {"edges", format_edge_list(g)}}; }

inline Json census_json(const Census& c) {
    if (!c.available) return nullptr;
    Json w = Json::array();
    for (const Coloring& e : c.witnesses) w.push_back(format_coloring(e));
    return Json{{"order", c.order}, {"min", c.min}, {"count", c.count}, {"witnesses", w}};
}

inline Json oracle_json(const std::vector<OracleVerdict>& verdicts) {
    Json a = Json::array();
    for (const OracleVerdict& v : verdicts) {
        a.push_back({{"source", to_string(v.source)}, {"kind", to_string(v.kind)}, {"value", v.value}});
    }
    return a;
}

inline Json result_json(const RamseyResult& r) {
    Json trace = Json::array();
    for (const TraceEntry& e : r.trace) {
        Json t{{"order", e.order}, {"method", to_string(e.method)}, {"value", e.value}};
        t["witness"] = e.witness ? Json(format_coloring(*e.witness)) : Json(nullptr);
        trace.push_back(t);
    }
    return Json{{"red", graph_json(r.red)},
                {"blue", graph_json(r.blue)},
                {"status", to_string(r.status)},
                {"value", r.value},
                {"start_order", r.start_order},
                {"reseeded", r.reseeded},
                {"trace", trace},
                {"critical", census_json(r.critical)},
                {"optimal", census_json(r.optimal)},
                {"oracles", oracle_json(r.oracles)},
                {"oracle_agrees", r.oracle_agrees}};
}

inline Json search_json(const SearchReport& s, SearchMode mode) {
    Json w = Json::array();
    for (const Coloring& e : s.witnesses) w.push_back(format_coloring(e));
    return Json{{"order", s.order},   {"mode", to_string(mode)},        {"min", s.min},
                {"count", s.count},   {"complete", s.complete},         {"witnesses", w},
                {"witnesses_truncated", s.witnesses_truncated}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Run manifests

inline std::string sha256_hex(std::string_view data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return out.str();
}

inline std::string utc_timestamp(std::chrono::system_clock::time_point t, bool compact = false) {
    const std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count() % 1000;
    char buf[64];
    if (compact) {
        std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%S", &tm);
        char frac[8];
        std::snprintf(frac, sizeof frac, "%03dZ", static_cast<int>(ms));
        return std::string(buf) + frac;
    }
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%S", &tm);
    char frac[8];
    std::snprintf(frac, sizeof frac, ".%03dZ", static_cast<int>(ms));
    return std::string(buf) + frac;
}

struct RunRecord {
    std::string id;
    std::filesystem::path result_path;
    std::filesystem::path manifest_path;
    std::string digest;
};

/// Default run directory: $RAMSEY_RUN_DIR, else "runs".
inline std::filesystem::path default_run_dir() {
    const char* env = std::getenv("RAMSEY_RUN_DIR");
    return env && *env ? std::filesystem::path(env) : std::filesystem::path("runs");
}

namespace detail {

// Creates a new file; never touches an existing one.
inline bool write_new_file(const std::filesystem::path& path, std::string_view data) {
    std::FILE* f = std::fopen(path.c_str(), "wx");
    if (!f) return false;
    const bool ok = std::fwrite(data.data(), 1, data.size(), f) == data.size();
    if (std::fclose(f) != 0 || !ok) throw std::runtime_error("write failed: " + path.string());
    return true;
}

}  // namespace detail

/// Persists the result document and a manifest next to it. Existing files
/// are never overwritten; the index file is only appended to.
inline RunRecord write_run(const std::filesystem::path& dir, const std::string& command, const RunOptions& opts,
                           const Json& parameters, const std::string& result_text,
                           std::chrono::system_clock::time_point started,
                           std::chrono::system_clock::time_point finished) {
    std::filesystem::create_directories(dir);
    RunRecord rec;
    rec.digest = sha256_hex(result_text);
    const std::string stem = command + "-" + utc_timestamp(started, true);
    for (int attempt = 0;; ++attempt) {
        rec.id = attempt == 0 ? stem : stem + "-" + std::to_string(attempt);
        rec.result_path = dir / (rec.id + ".result.json");
        rec.manifest_path = dir / (rec.id + ".manifest.json");
        if (std::filesystem::exists(rec.manifest_path)) continue;
        if (detail::write_new_file(rec.result_path, result_text)) break;
        if (attempt > 1000) throw std::runtime_error("cannot allocate a run id in " + dir.string());
    }
    Json manifest{{"schema", "ramsey-run/1"},
                  {"id", rec.id},
                  {"command", command},
                  {"parameters", parameters},
                  {"seeds", Json{{"seed", opts.seed}}},
                  {"version", RAMSEY_VERSION},
                  {"started", utc_timestamp(started)},
                  {"finished", utc_timestamp(finished)},
                  {"wall_seconds", std::chrono::duration<double>(finished - started).count()},
                  {"result_file", rec.result_path.filename().string()},
                  {"result_sha256", rec.digest}};
    if (!detail::write_new_file(rec.manifest_path, dump(manifest))) {
        throw std::runtime_error("manifest exists: " + rec.manifest_path.string());
    }
    std::ofstream index(dir / "index.jsonl", std::ios::app);
    index << Json{{"id", rec.id}, {"command", command}, {"result_sha256", rec.digest}}.dump() << "\n";
    return rec;
}

/// Recomputes the digest of the result a manifest points at.
inline bool verify_manifest(const std::filesystem::path& manifest_path) {
    const Json m = Json::parse(detail::read_file(manifest_path));
    const std::filesystem::path result = manifest_path.parent_path() / m.at("result_file").get<std::string>();
    return sha256_hex(detail::read_file(result)) == m.at("result_sha256").get<std::string>();
}

// ---------------------------------------------------------------------------
// Table documents

struct TableLabel {
    /// Catalog index, 0 for graphs outside the tree catalog.
    int index = 0;
    std::string handle;
    std::string name;
    friend bool operator==(const TableLabel&, const TableLabel&) = default;
};

struct TableCell {
    int value = 0;
    bool exact = true;
    /// Superscript tags of the exact oracle verdicts that agree.
    std::vector<int> sources;
    std::int64_t critical = -1;
    std::int64_t optimal = -1;
    std::int64_t min = -1;
    friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct TableDocument {
    int row_order = 0;
    int col_order = 0;
    /// Rows and columns carry the same classes; text mode shows i <= j only.
    bool symmetric = false;
    std::vector<TableLabel> rows;
    std::vector<TableLabel> cols;
    std::vector<std::vector<std::optional<TableCell>>> cells;
    friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

enum class TableFormat { kCsv, kJson, kText };
enum class TableField { kValue, kCritical, kOptimal, kMin };

inline TableFormat parse_table_format(std::string_view s) {
    if (s == "csv") return TableFormat::kCsv;
    if (s == "json") return TableFormat::kJson;
    if (s == "text") return TableFormat::kText;
    throw InvalidInput("unknown table format '" + std::string(s) + "'");
}

inline TableField parse_table_field(std::string_view s) {
    if (s == "r") return TableField::kValue;
    if (s == "critical") return TableField::kCritical;
    if (s == "optimal") return TableField::kOptimal;
    if (s == "min") return TableField::kMin;
    throw InvalidInput("unknown table field '" + std::string(s) + "'");
}

inline TableLabel label_for(const SmallGraph& g) {
    TableLabel l;
    if (g.is_tree() && g.order() >= 2 && g.order() <= kMaxTreeOrder) {
        const CanonicalForm f = canonical_form(g);
        for (const TreeClass& c : tree_catalog(g.order())) {
            if (c.form != f) continue;
            l.index = c.index;
            l.handle = c.label();
            l.name = c.names.empty() ? "" : c.names.front();
            return l;
        }
    }
    l.handle = "G" + std::to_string(g.order()) + ":" + format_edge_list(canonical_form(g).graph());
    return l;
}

inline TableCell cell_for(const RamseyResult& r) {
    TableCell c;
    c.value = r.value;
    c.exact = r.status == ResultStatus::kExact;
    for (const OracleVerdict& v : r.oracles) {
        if (v.kind != VerdictKind::kExact || table_superscript(v.source) == 0) continue;
        if (c.exact ? v.value == r.value : v.value >= r.value) c.sources.push_back(table_superscript(v.source));
    }
    std::sort(c.sources.begin(), c.sources.end());
    c.sources.erase(std::unique(c.sources.begin(), c.sources.end()), c.sources.end());
    if (r.critical.available) c.critical = static_cast<std::int64_t>(r.critical.count);
    if (r.optimal.available) {
        c.optimal = static_cast<std::int64_t>(r.optimal.count);
        c.min = r.optimal.min;
    }
    return c;
}

namespace detail {

inline bool label_less(const TableLabel& a, const TableLabel& b) {
    return std::tie(a.index, a.handle) < std::tie(b.index, b.handle);
}

}  // namespace detail

/// Builds a document from a result matrix (rows: red patterns, columns:
/// blue patterns). Labels travel with their cells, so any permutation of
/// the input gives the same document.
inline TableDocument make_table_document(const std::vector<std::vector<RamseyResult>>& results) {
    if (results.empty() || results[0].empty()) throw InvalidInput("empty result matrix");
    const size_t ncols = results[0].size();
    for (const auto& row : results) {
        if (row.size() != ncols) throw InvalidInput("ragged result matrix");
    }
    TableDocument doc;
    doc.row_order = results[0][0].red.order();
    doc.col_order = results[0][0].blue.order();
    std::vector<TableLabel> rows, cols;
    for (size_t i = 0; i < results.size(); ++i) {
        for (size_t j = 0; j < ncols; ++j) {
            const RamseyResult& r = results[i][j];
            if (r.red.order() != doc.row_order || r.blue.order() != doc.col_order) {
                throw InvalidInput("mixed-order result matrix");
            }
            if (!is_isomorphic(r.red, results[i][0].red) || !is_isomorphic(r.blue, results[0][j].blue)) {
                throw InvalidInput("row or column mixes pattern classes");
            }
        }
        rows.push_back(label_for(results[i][0].red));
    }
    for (size_t j = 0; j < ncols; ++j) cols.push_back(label_for(results[0][j].blue));

    auto order_of = [](const std::vector<TableLabel>& labels) {
        std::vector<size_t> idx(labels.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return detail::label_less(labels[a], labels[b]); });
        for (size_t i = 1; i < idx.size(); ++i) {
            if (labels[idx[i]] == labels[idx[i - 1]]) throw InvalidInput("duplicate class " + labels[idx[i]].handle);
        }
        return idx;
    };
    const std::vector<size_t> ri = order_of(rows), ci = order_of(cols);
    for (size_t i : ri) doc.rows.push_back(rows[i]);
    for (size_t j : ci) doc.cols.push_back(cols[j]);
    doc.symmetric = doc.rows == doc.cols;
    doc.cells.assign(doc.rows.size(), std::vector<std::optional<TableCell>>(doc.cols.size()));
    for (size_t a = 0; a < ri.size(); ++a) {
        for (size_t b = 0; b < ci.size(); ++b) {
            const RamseyResult& r = results[ri[a]][ci[b]];
            if (r.value > 0) doc.cells[a][b] = cell_for(r);
        }
    }
    return doc;
}

inline TableDocument make_table_document(const RamseyTable& t) { return make_table_document(t.cells); }

namespace detail {

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::vector<std::string> csv_split(std::string_view line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw InvalidInput("csv: unterminated quote");
    out.push_back(std::move(cur));
    return out;
}

inline std::string join_sources(const std::vector<int>& s, char sep) {
    std::string out;
    for (int x : s) {
        if (!out.empty()) out += sep;
        out += std::to_string(x);
    }
    return out;
}

inline std::string cell_text(const std::optional<TableCell>& c, TableField field) {
    if (!c) return "-";
    auto count = [](std::int64_t v) { return v < 0 ? std::string("-") : std::to_string(v); };
    switch (field) {
        case TableField::kValue: {
            std::string s = std::to_string(c->value);
            if (!c->exact) s += "*";
            if (!c->sources.empty()) s += "^" + join_sources(c->sources, ',');
            return s;
        }
        case TableField::kCritical:
            return count(c->critical);
        case TableField::kOptimal:
            return count(c->optimal);
        case TableField::kMin:
            return count(c->min);
    }
    return "?";
}

}  // namespace detail

inline std::string emit_table(const TableDocument& doc, TableFormat format, TableField field = TableField::kValue) {
    if (doc.rows.empty() || doc.cols.empty()) throw InvalidInput("empty table");
    std::ostringstream out;
    if (format == TableFormat::kCsv) {
        out << "#ramsey-table,row_order=" << doc.row_order << ",col_order=" << doc.col_order
            << ",symmetric=" << (doc.symmetric ? 1 : 0) << "\n";
        for (const TableLabel& l : doc.rows) {
            out << "#row," << l.index << "," << detail::csv_quote(l.handle) << "," << detail::csv_quote(l.name) << "\n";
        }
        for (const TableLabel& l : doc.cols) {
            out << "#col," << l.index << "," << detail::csv_quote(l.handle) << "," << detail::csv_quote(l.name) << "\n";
        }
        out << "row,col,r,status,sources,critical,optimal,min\n";
        for (size_t i = 0; i < doc.rows.size(); ++i) {
            for (size_t j = 0; j < doc.cols.size(); ++j) {
                const auto& c = doc.cells[i][j];
                if (!c) continue;
                out << detail::csv_quote(doc.rows[i].handle) << "," << detail::csv_quote(doc.cols[j].handle) << ","
                    << c->value << "," << (c->exact ? "exact" : "lower-bound") << ","
                    << detail::join_sources(c->sources, ';') << "," << c->critical << "," << c->optimal << ","
                    << c->min << "\n";
            }
        }
        return out.str();
    }
    if (format == TableFormat::kJson) {
        auto labels = [](const std::vector<TableLabel>& ls) {
            Json a = Json::array();
            for (const TableLabel& l : ls) a.push_back({{"index", l.index}, {"handle", l.handle}, {"name", l.name}});
            return a;
        };
        Json cells = Json::array();
        for (size_t i = 0; i < doc.rows.size(); ++i) {
            for (size_t j = 0; j < doc.cols.size(); ++j) {
                const auto& c = doc.cells[i][j];
                if (!c) continue;
                cells.push_back({{"row", doc.rows[i].handle},
                                 {"col", doc.cols[j].handle},
                                 {"r", c->value},
                                 {"status", c->exact ? "exact" : "lower-bound"},
                                 {"sources", c->sources},
                                 {"critical", c->critical},
                                 {"optimal", c->optimal},
                                 {"min", c->min}});
            }
        }
        Json j{{"row_order", doc.row_order}, {"col_order", doc.col_order}, {"symmetric", doc.symmetric},
               {"rows", labels(doc.rows)},    {"cols", labels(doc.cols)},    {"cells", cells}};
        return dump(j);
    }
    // Text: fixed-width grid, upper triangle only for symmetric tables.
    std::vector<std::vector<std::string>> grid(doc.rows.size() + 1, std::vector<std::string>(doc.cols.size() + 1));
    grid[0][0] = "";
    for (size_t j = 0; j < doc.cols.size(); ++j) grid[0][j + 1] = doc.cols[j].handle;
    for (size_t i = 0; i < doc.rows.size(); ++i) {
        grid[i + 1][0] = doc.rows[i].handle;
        for (size_t j = 0; j < doc.cols.size(); ++j) {
            grid[i + 1][j + 1] = doc.symmetric && j < i ? "" : detail::cell_text(doc.cells[i][j], field);
        }
    }
    std::vector<size_t> width(doc.cols.size() + 1, 0);
    for (const auto& row : grid) {
        for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
    }
    for (const auto& row : grid) {
        std::string line;
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) line += "  ";
            line += row[j] + std::string(width[j] - row[j].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
    out << "\n";
    for (const TableLabel& l : doc.symmetric ? doc.rows : doc.cols) {
        if (!l.name.empty()) out << l.handle << " = " << l.name << "\n";
    }
    if (!doc.symmetric) {
        for (const TableLabel& l : doc.rows) {
            if (!l.name.empty()) out << l.handle << " = " << l.name << "\n";
        }
    }
    if (field == TableField::kValue) {
        out << "* lower bound only; ^k: agrees with known result k "
               "(2 paths, 3 stars, 4 Cockayne, 6 Burr-Erdos, 7 GHK)\n";
    }
    return out.str();
}

inline std::string emit_table(const std::vector<std::vector<RamseyResult>>& results, TableFormat format,
                              TableField field = TableField::kValue) {
    return emit_table(make_table_document(results), format, field);
}

/// Inverse of emit_table(doc, kCsv).
inline TableDocument parse_table_csv(std::string_view text) {
    TableDocument doc;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool header = false, columns = false;
    std::map<std::string, size_t> row_at, col_at;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const std::vector<std::string> f = detail::csv_split(line);
        auto bad = [&](const std::string& why) { return InvalidInput("csv line " + std::to_string(lineno) + ": " + why); };
        try {
            if (f[0] == "#ramsey-table") {
                if (f.size() != 4) throw bad("malformed table header");
                auto value_of = [&](const std::string& field, const std::string& key) {
                    if (!field.starts_with(key + "=")) throw bad("expected " + key);
                    return std::stoi(field.substr(key.size() + 1));
                };
                doc.row_order = value_of(f[1], "row_order");
                doc.col_order = value_of(f[2], "col_order");
                doc.symmetric = value_of(f[3], "symmetric") != 0;
                header = true;
            } else if (f[0] == "#row" || f[0] == "#col") {
                if (!header || f.size() != 4) throw bad("malformed label line");
                TableLabel l{std::stoi(f[1]), f[2], f[3]};
                auto& labels = f[0] == "#row" ? doc.rows : doc.cols;
                auto& at = f[0] == "#row" ? row_at : col_at;
                if (!at.emplace(l.handle, labels.size()).second) throw bad("duplicate label " + l.handle);
                labels.push_back(l);
            } else if (f[0] == "row") {
                columns = true;
                doc.cells.assign(doc.rows.size(), std::vector<std::optional<TableCell>>(doc.cols.size()));
            } else {
                if (!columns || f.size() != 8) throw bad("malformed cell line");
                if (!row_at.count(f[0]) || !col_at.count(f[1])) throw bad("cell refers to an unknown label");
                TableCell c;
                c.value = std::stoi(f[2]);
                if (f[3] != "exact" && f[3] != "lower-bound") throw bad("bad status '" + f[3] + "'");
                c.exact = f[3] == "exact";
                for (const int s : f[4].empty() ? std::vector<int>{} : detail::split_ints(f[4], ';', "source")) {
                    c.sources.push_back(s);
                }
                c.critical = std::stoll(f[5]);
                c.optimal = std::stoll(f[6]);
                c.min = std::stoll(f[7]);
                doc.cells[row_at[f[0]]][col_at[f[1]]] = c;
            }
        } catch (const InvalidInput&) {
            throw;
        } catch (const std::exception& e) {
            throw bad(e.what());
        }
    }
    if (!header || !columns) throw InvalidInput("csv: not a ramsey table");
    if (doc.rows.empty() || doc.cols.empty()) throw InvalidInput("csv: empty table");
    return doc;
}

}  // namespace ramsey::cli

#endif  // RAMSEY_TOOLS_CLI_SUPPORT_HPP
