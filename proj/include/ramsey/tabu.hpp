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

// Tabu search over labelled colorings. Each iteration flips the edge with the
// best objective change; a flipped edge stays frozen for `tenure` iterations
// unless flipping it would beat the best value seen in the run (aspiration).
// Ties go to the first edge of a per-restart seeded shuffle. A zero objective
// ends the search; anything else only says "r(G,H) may still be N".

#ifndef RAMSEY_TABU_HPP
#define RAMSEY_TABU_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/objective.hpp"

namespace ramsey {

struct TabuParams {
    int max_iterations = 50000;
    int restarts = 20;
    /// Negative means ceil(L / 4) with L = C(N, 2).
    int tenure = -1;
    bool aspiration = true;
    std::uint64_t seed = 1;
};

enum class TabuStatus { kZeroFound, kBudgetExhausted };

inline const char* to_string(TabuStatus s) {
    return s == TabuStatus::kZeroFound ? "zero-found" : "budget-exhausted";
}

struct TabuOutcome {
    Coloring best{2};
    ObjectiveValue best_value;
    std::uint64_t iterations = 0;
    int restarts_used = 0;
    TabuStatus status = TabuStatus::kBudgetExhausted;
};

inline int default_tenure(int n) { return (num_pairs(n) + 3) / 4; }

namespace detail {

// Independent stream per restart.
inline std::uint64_t restart_seed(std::uint64_t seed, int restart) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(restart + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace detail

inline TabuOutcome tabu_minimize(const ObjectiveContext& ctx, const TabuParams& params = {}) {
    if (params.max_iterations < 1) throw std::invalid_argument("tabu: iterations must be >= 1");
    if (params.restarts < 1) throw std::invalid_argument("tabu: restarts must be >= 1");
    const int n = ctx.order();
    if (n < 2) throw std::invalid_argument("tabu: order must be >= 2");
    const int length = num_pairs(n);
    const int tenure = params.tenure < 0 ? default_tenure(n) : params.tenure;

    TabuOutcome out;
    out.best = Coloring(n);
    out.best_value.total = std::numeric_limits<std::int64_t>::max();

    std::vector<int> order(length);
    std::vector<std::int64_t> frozen_until(length);
    for (int r = 0; r < params.restarts; ++r) {
        std::mt19937_64 rng(detail::restart_seed(params.seed, r));
        Coloring start(n);
        for (int k = 0; k < length; ++k) start.set_bit(k, (rng() >> 63) != 0);
        for (int k = 0; k < length; ++k) order[k] = k;
        for (int k = length - 1; k > 0; --k) std::swap(order[k], order[rng() % static_cast<std::uint64_t>(k + 1)]);
        std::fill(frozen_until.begin(), frozen_until.end(), -1);

        DeltaCache cache(ctx, start);
        std::int64_t current = cache.value().total;
        std::int64_t run_best = current;
        ++out.restarts_used;
        if (current < out.best_value.total) {
            out.best = cache.coloring();
            out.best_value = cache.value();
        }
        for (std::int64_t it = 0; it < params.max_iterations && current > 0; ++it) {
            int pick = -1;
            std::int64_t pick_value = 0;
            int fallback = -1;
            std::int64_t fallback_value = 0;
            for (int k : order) {
                const std::int64_t v = current + cache.gain(k);
                const bool allowed = frozen_until[k] < it || (params.aspiration && v < run_best);
                if (allowed && (pick < 0 || v < pick_value)) {
                    pick = k;
                    pick_value = v;
                }
                if (fallback < 0 || v < fallback_value) {
                    fallback = k;
                    fallback_value = v;
                }
            }
            if (pick < 0) {
                pick = fallback;
                pick_value = fallback_value;
            }
            cache.flip(pick);
            frozen_until[pick] = it + tenure;
            current = pick_value;
            ++out.iterations;
            if (current < run_best) run_best = current;
            if (current < out.best_value.total) {
                out.best = cache.coloring();
                out.best_value = cache.value();
            }
        }
        if (out.best_value.total == 0) break;
    }
    out.status = out.best_value.total == 0 ? TabuStatus::kZeroFound : TabuStatus::kBudgetExhausted;
    return out;
}

}  // namespace ramsey

#endif  // RAMSEY_TABU_HPP
