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

// Exhaustive minimization of the objective over the unlabelled colorings of
// K_N. A coloring's class is fixed by its red graph's class, so one pass of
// the isomorph-free generator (red graph = generated graph, blue = its
// complement) sees every coloring class exactly once.
//
// Each graph is evaluated with the current minimum as a bound, so most
// graphs are dismissed after a handful of subsets. Several (G, H) contexts at
// the same order share one pass ("sweep").

#ifndef RAMSEY_SEARCH_HPP
#define RAMSEY_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ramsey/canon.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/isogen.hpp"
#include "ramsey/objective.hpp"

namespace ramsey {

enum class SearchMode { kFirstZero, kCensus };
enum class Budget { kDefault, kExtended, kHeroic };

inline const char* to_string(SearchMode m) { return m == SearchMode::kFirstZero ? "first-zero" : "census"; }

inline const char* to_string(Budget b) {
    switch (b) {
        case Budget::kDefault:
            return "default";
        case Budget::kExtended:
            return "extended";
        case Budget::kHeroic:
            return "heroic";
    }
    return "?";
}

/// Largest order searched exhaustively under each budget.
inline int budget_max_order(Budget b) {
    switch (b) {
        case Budget::kDefault:
            return 9;
        case Budget::kExtended:
            return 10;
        case Budget::kHeroic:
            return 11;
    }
    return 9;
}

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Census witness store hit its memory guard.
class WitnessOverflow : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kWitnessGuard = 1'000'000;

struct SearchReport {
    int order = 0;
    /// Minimum objective found; -1 when nothing was examined.
    std::int64_t min = -1;
    /// Classes attaining `min` (a lower count when the scan stopped early).
    std::uint64_t count = 0;
    /// Canonical red graphs of attaining classes, sorted by canonical form.
    std::vector<Coloring> witnesses;
    std::uint64_t examined = 0;
    double wall_seconds = 0;
    /// False when first-zero mode stopped before the end of the enumeration.
    bool complete = true;
    bool witnesses_truncated = false;
};

struct SearchOptions {
    SearchMode mode = SearchMode::kCensus;
    size_t witness_cap = 16;
    Budget budget = Budget::kDefault;
    /// 0 picks std::thread::hardware_concurrency().
    int threads = 0;
    /// Fail instead of dropping witnesses past the guard.
    bool strict_witnesses = false;
};

struct SweepTask {
    const ObjectiveContext* ctx = nullptr;
    SearchMode mode = SearchMode::kCensus;
    size_t witness_cap = 16;
};

namespace detail {

struct TaskState {
    std::int64_t min = std::numeric_limits<std::int64_t>::max();
    std::uint64_t count = 0;
    std::vector<SmallGraph> witnesses;
    bool overflow = false;

    void offer(std::int64_t value, const SmallGraph& g) {
        if (value < min) {
            min = value;
            count = 0;
            witnesses.clear();
            overflow = false;
        }
        if (value == min) {
            ++count;
            if (witnesses.size() < kWitnessGuard) {
                witnesses.push_back(g);
            } else {
                overflow = true;
            }
        }
    }

    void merge(TaskState&& other) {
        if (other.count == 0) return;
        if (other.min < min) {
            *this = std::move(other);
            return;
        }
        if (other.min == min) {
            count += other.count;
            overflow = overflow || other.overflow;
            for (SmallGraph& g : other.witnesses) {
                if (witnesses.size() < kWitnessGuard) {
                    witnesses.push_back(std::move(g));
                } else {
                    overflow = true;
                }
            }
        }
    }
};

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace detail

/// One enumeration pass at order n evaluating every task. First-zero tasks
/// drop out when they find a zero; the pass ends early once all have.
inline std::vector<SearchReport> sweep(int n, std::span<const SweepTask> tasks, Budget budget = Budget::kDefault,
                                       int threads = 0, bool strict_witnesses = false) {
    if (n > budget_max_order(budget)) {
        throw BudgetExceeded("order " + std::to_string(n) + " exceeds the " + to_string(budget) +
                             " exhaustive budget (max " + std::to_string(budget_max_order(budget)) + ")");
    }
    if (n < 1) throw std::invalid_argument("sweep: order must be >= 1");
    for (const SweepTask& t : tasks) {
        if (t.ctx == nullptr || t.ctx->order() != n) throw std::invalid_argument("sweep: task context order mismatch");
    }
    const auto t0 = std::chrono::steady_clock::now();
    const size_t k = tasks.size();
    threads = detail::resolve_threads(threads);
    const int shards = threads <= 1 ? 1 : threads * 4;

    std::vector<std::atomic<bool>> zero_found(k);
    for (auto& z : zero_found) z.store(false);
    std::atomic<std::uint64_t> examined{0};
    std::vector<std::vector<detail::TaskState>> shard_states(shards, std::vector<detail::TaskState>(k));
    std::atomic<bool> stopped{false};

    run_sharded(n, shards, threads, [&](int shard) {
        return [&, shard](const SmallGraph& g) -> bool {
            std::vector<detail::TaskState>& states = shard_states[shard];
            bool live = false;
            for (size_t i = 0; i < k; ++i) {
                const bool first_zero = tasks[i].mode == SearchMode::kFirstZero;
                if (first_zero && zero_found[i].load(std::memory_order_relaxed)) continue;
                live = true;
                detail::TaskState& st = states[i];
                const ObjectiveValue v = evaluate_red_graph(g, *tasks[i].ctx, st.min);
                if (v.total <= st.min) st.offer(v.total, g);
                if (first_zero && v.total == 0) zero_found[i].store(true, std::memory_order_relaxed);
            }
            examined.fetch_add(1, std::memory_order_relaxed);
            if (live) {
                for (size_t i = 0; i < k; ++i) {
                    if (tasks[i].mode != SearchMode::kFirstZero || !zero_found[i].load(std::memory_order_relaxed)) {
                        return true;
                    }
                }
            }
            stopped.store(true);
            return false;
        };
    });

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::uint64_t total_classes = examined.load();
    std::vector<SearchReport> reports(k);
    for (size_t i = 0; i < k; ++i) {
        detail::TaskState merged;
        for (int s = 0; s < shards; ++s) merged.merge(std::move(shard_states[s][i]));
        SearchReport& r = reports[i];
        r.order = n;
        r.examined = total_classes;
        r.wall_seconds = wall;
        if (merged.count > 0) {
            r.min = merged.min;
            r.count = merged.count;
        }
        r.complete = !stopped.load();
        if (merged.overflow && strict_witnesses) {
            throw WitnessOverflow("census at order " + std::to_string(n) + " exceeded " +
                                  std::to_string(kWitnessGuard) + " witnesses");
        }
        std::vector<CanonicalForm> forms;
        forms.reserve(merged.witnesses.size());
        for (const SmallGraph& g : merged.witnesses) forms.push_back(canonical_form(g));
        std::sort(forms.begin(), forms.end());
        r.witnesses_truncated = merged.overflow || forms.size() > tasks[i].witness_cap;
        if (forms.size() > tasks[i].witness_cap) forms.resize(tasks[i].witness_cap);
        for (const CanonicalForm& f : forms) r.witnesses.push_back(Coloring::from_red_graph(f.graph()));
    }
    return reports;
}

/// Minimum objective over all classes of colorings of K_N.
inline SearchReport min_objective_exhaustive(const ObjectiveContext& ctx, const SearchOptions& opts = {}) {
    SweepTask task{&ctx, opts.mode, opts.witness_cap};
    return sweep(ctx.order(), std::span<const SweepTask>(&task, 1), opts.budget, opts.threads,
                 opts.strict_witnesses)[0];
}

/// Full census: every class attaining the minimum is returned (up to the
/// memory guard, past which WitnessOverflow is thrown).
inline SearchReport census_at(const ObjectiveContext& ctx, Budget budget = Budget::kDefault, int threads = 0) {
    SearchOptions opts;
    opts.mode = SearchMode::kCensus;
    opts.witness_cap = kWitnessGuard;
    opts.budget = budget;
    opts.threads = threads;
    opts.strict_witnesses = true;
    return min_objective_exhaustive(ctx, opts);
}

}  // namespace ramsey

#endif  // RAMSEY_SEARCH_HPP
