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

// Incremental-N computation of r(G, H).
//
// Start at an order known to be below r, then walk N upwards: while some
// coloring of K_N has objective zero, r > N. The first N whose exhaustive
// minimum is positive is r itself. Past the exhaustive budget the minimum
// comes from Tabu search, which can find zeros but never certify their
// absence, so such runs end with a lower bound.
//
// Many pairs are computed together by advancing them in lock step: every
// pair waiting at the same order is evaluated in one enumeration pass.

#ifndef RAMSEY_DRIVER_HPP
#define RAMSEY_DRIVER_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/catalog.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/objective.hpp"
#include "ramsey/search.hpp"
#include "ramsey/tabu.hpp"
#include "ramsey/theorems.hpp"

namespace ramsey {

enum class ResultStatus { kExact, kLowerBound };
enum class Method { kExhaustive, kTabu, kAqo };

inline const char* to_string(ResultStatus s) { return s == ResultStatus::kExact ? "exact" : "lower-bound"; }

inline const char* to_string(Method m) {
    switch (m) {
        case Method::kExhaustive:
            return "exhaustive";
        case Method::kTabu:
            return "tabu";
        case Method::kAqo:
            return "aqo";
    }
    return "?";
}

struct TraceEntry {
    int order = 0;
    Method method = Method::kExhaustive;
    /// Minimum (exhaustive) or best found (heuristic).
    std::int64_t value = 0;
    /// A coloring of objective zero when value == 0.
    std::optional<Coloring> witness;
};

struct Census {
    bool available = false;
    int order = 0;
    std::int64_t min = 0;
    std::uint64_t count = 0;
    std::vector<Coloring> witnesses;
};

struct RamseyResult {
    SmallGraph red{1};
    SmallGraph blue{1};
    ResultStatus status = ResultStatus::kLowerBound;
    /// r(G, H) when exact, otherwise a proven lower bound.
    int value = 0;
    int start_order = 0;
    /// True when the seeded start turned out not to be below r and the run
    /// restarted from the trivial seed.
    bool reseeded = false;
    std::vector<TraceEntry> trace;
    /// Zero-objective classes at order r - 1.
    Census critical;
    /// Minimum and its classes at order r.
    Census optimal;
    std::vector<OracleVerdict> oracles;
    /// No exact oracle contradicts the value and no upper bound is beaten.
    bool oracle_agrees = true;
};

struct DriverOptions {
    Budget budget = Budget::kDefault;
    /// Critical census at r - 1 (the order-r optimal census is always taken).
    bool census = true;
    /// Raise the start order using oracle lower bounds.
    bool oracle_seed = true;
    TabuParams tabu;
    /// Largest order Tabu is tried at.
    int max_order = 16;
    int threads = 0;
    size_t witness_cap = 16;
};

namespace detail {

inline void check_driver_pattern(const SmallGraph& g, const char* which) {
    if (g.num_edges() == 0) throw std::invalid_argument(std::string(which) + " pattern has no edges");
    if (g.order() > kMaxPatternOrder) {
        throw std::invalid_argument(std::string(which) + " pattern order exceeds " + std::to_string(kMaxPatternOrder));
    }
}

inline bool check_against_oracles(RamseyResult& r) {
    for (const OracleVerdict& v : r.oracles) {
        if (r.status == ResultStatus::kExact) {
            if (v.kind == VerdictKind::kExact && v.value != r.value) return false;
            if (v.kind == VerdictKind::kLowerBound && v.value > r.value) return false;
            if (v.kind == VerdictKind::kUpperBound && v.value < r.value) return false;
        } else {
            if (v.kind == VerdictKind::kExact && v.value < r.value) return false;
            if (v.kind == VerdictKind::kUpperBound && v.value < r.value) return false;
        }
    }
    return true;
}

struct PairState {
    enum class Phase { kAscend, kCritical, kDone };
    Phase phase = Phase::kAscend;
    int n = 0;
    int trivial_start = 0;
    ObjectiveContext ctx;
    RamseyResult result;
};

inline Census census_from(const SearchReport& rep) {
    Census c;
    c.available = true;
    c.order = rep.order;
    c.min = rep.min;
    c.count = rep.count;
    c.witnesses = rep.witnesses;
    return c;
}

}  // namespace detail

/// r(G, H) for every pair, sharing enumeration passes between pairs that
/// wait at the same order.
inline std::vector<RamseyResult> compute_ramsey_batch(const std::vector<std::pair<SmallGraph, SmallGraph>>& pairs,
                                                      const DriverOptions& opts = {}) {
    using detail::PairState;
    std::vector<PairState> states;
    states.reserve(pairs.size());
    for (const auto& [g, h] : pairs) {
        detail::check_driver_pattern(g, "red");
        detail::check_driver_pattern(h, "blue");
        const int trivial = std::max(1, std::max(g.order(), h.order()) - 1);
        int start = trivial;
        std::vector<OracleVerdict> verdicts = applicable_oracles(g, h);
        if (opts.oracle_seed) start = std::max(start, oracle_lower_bound(verdicts) - 1);
        PairState st{PairState::Phase::kAscend, start, trivial, ObjectiveContext(start, g, h), {}};
        st.result.red = g;
        st.result.blue = h;
        st.result.start_order = start;
        st.result.oracles = std::move(verdicts);
        states.push_back(std::move(st));
    }

    const int exhaustive_max = budget_max_order(opts.budget);
    auto finish = [](PairState& st) {
        st.phase = PairState::Phase::kDone;
        st.result.oracle_agrees = detail::check_against_oracles(st.result);
    };

    for (;;) {
        // Orders past the exhaustive budget go to Tabu, one pair at a time.
        for (PairState& st : states) {
            while (st.phase == PairState::Phase::kAscend && st.n > exhaustive_max) {
                if (st.n > opts.max_order) {
                    st.result.status = ResultStatus::kLowerBound;
                    st.result.value = st.n;
                    finish(st);
                    break;
                }
                const ObjectiveContext ctx = st.ctx.at_order(st.n);
                const TabuOutcome t = tabu_minimize(ctx, opts.tabu);
                TraceEntry e{st.n, Method::kTabu, t.best_value.total, std::nullopt};
                if (t.status == TabuStatus::kZeroFound) e.witness = t.best;
                st.result.trace.push_back(e);
                if (t.status == TabuStatus::kZeroFound) {
                    ++st.n;
                } else {
                    st.result.status = ResultStatus::kLowerBound;
                    st.result.value = st.n;
                    finish(st);
                }
            }
        }

        int next = std::numeric_limits<int>::max();
        for (const PairState& st : states) {
            if (st.phase == PairState::Phase::kAscend) next = std::min(next, st.n);
            if (st.phase == PairState::Phase::kCritical) next = std::min(next, st.result.value - 1);
        }
        if (next == std::numeric_limits<int>::max()) break;

        std::vector<ObjectiveContext> contexts;
        std::vector<size_t> owners;
        std::vector<SweepTask> tasks;
        for (size_t i = 0; i < states.size(); ++i) {
            const PairState& st = states[i];
            const bool ascend = st.phase == PairState::Phase::kAscend && st.n == next;
            const bool critical = st.phase == PairState::Phase::kCritical && st.result.value - 1 == next;
            if (!ascend && !critical) continue;
            contexts.push_back(st.ctx.at_order(next));
            owners.push_back(i);
        }
        for (size_t t = 0; t < owners.size(); ++t) {
            const bool ascend = states[owners[t]].phase == PairState::Phase::kAscend;
            tasks.push_back({&contexts[t], ascend ? SearchMode::kFirstZero : SearchMode::kCensus, opts.witness_cap});
        }
        const std::vector<SearchReport> reports = sweep(next, tasks, opts.budget, opts.threads);

        for (size_t t = 0; t < owners.size(); ++t) {
            PairState& st = states[owners[t]];
            const SearchReport& rep = reports[t];
            if (st.phase == PairState::Phase::kCritical) {
                st.result.critical = detail::census_from(rep);
                finish(st);
                continue;
            }
            if (rep.min == 0) {
                TraceEntry e{next, Method::kExhaustive, 0, rep.witnesses.empty() ? std::nullopt
                                                                                  : std::optional(rep.witnesses[0])};
                st.result.trace.push_back(e);
                ++st.n;
                continue;
            }
            if (st.result.trace.empty() && st.n > st.trivial_start) {
                // The seeded start was not below r; fall back to the trivial seed.
                st.result.reseeded = true;
                st.n = st.trivial_start;
                st.result.start_order = st.trivial_start;
                continue;
            }
            st.result.trace.push_back({next, Method::kExhaustive, rep.min, std::nullopt});
            st.result.status = ResultStatus::kExact;
            st.result.value = next;
            st.result.optimal = detail::census_from(rep);
            if (opts.census && next >= 2) {
                st.phase = PairState::Phase::kCritical;
            } else {
                finish(st);
            }
        }
    }

    std::vector<RamseyResult> out;
    out.reserve(states.size());
    for (PairState& st : states) out.push_back(std::move(st.result));
    return out;
}

inline RamseyResult compute_ramsey(const SmallGraph& g, const SmallGraph& h, const DriverOptions& opts = {}) {
    return compute_ramsey_batch({{g, h}}, opts)[0];
}

/// All r(T_m^i, T_n^j) for the tree catalogs of orders m and n. When m == n
/// only i <= j is computed and the rest mirrored.
struct RamseyTable {
    int row_order = 0;
    int col_order = 0;
    std::vector<TreeClass> rows;
    std::vector<TreeClass> cols;
    /// cells[i][j] = r(rows[i], cols[j]).
    std::vector<std::vector<RamseyResult>> cells;
    bool symmetric = false;
};

/// Result with the colors interchanged: r(H, G) from r(G, H).
inline RamseyResult mirrored(const RamseyResult& r) {
    RamseyResult m = r;
    std::swap(m.red, m.blue);
    auto flip_all = [](std::vector<Coloring>& cs) {
        for (Coloring& c : cs) c = complement_coloring(c);
    };
    flip_all(m.critical.witnesses);
    flip_all(m.optimal.witnesses);
    for (TraceEntry& e : m.trace) {
        if (e.witness) e.witness = complement_coloring(*e.witness);
    }
    return m;
}

inline RamseyTable compute_table(int m, int n, const DriverOptions& opts = {}) {
    RamseyTable t;
    t.row_order = m;
    t.col_order = n;
    t.rows = tree_catalog(m);
    t.cols = tree_catalog(n);
    t.symmetric = m == n;
    std::vector<std::pair<SmallGraph, SmallGraph>> pairs;
    std::vector<std::pair<size_t, size_t>> where;
    for (size_t i = 0; i < t.rows.size(); ++i) {
        for (size_t j = t.symmetric ? i : 0; j < t.cols.size(); ++j) {
            pairs.push_back({t.rows[i].representative, t.cols[j].representative});
            where.push_back({i, j});
        }
    }
    std::vector<RamseyResult> results = compute_ramsey_batch(pairs, opts);
    t.cells.assign(t.rows.size(), std::vector<RamseyResult>(t.cols.size()));
    for (size_t k = 0; k < results.size(); ++k) {
        auto [i, j] = where[k];
        t.cells[i][j] = results[k];
        if (t.symmetric && i != j) t.cells[j][i] = mirrored(results[k]);
    }
    return t;
}

}  // namespace ramsey

#endif  // RAMSEY_DRIVER_HPP
