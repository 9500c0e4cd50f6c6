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

#include "ramsey/aqo.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "ramsey/search.hpp"

using namespace ramsey;

namespace {

const SmallGraph kK3 = SmallGraph::complete(3);

double final_overlap(const DiagonalProblem& p, double runtime, int steps) {
    return ground_overlap(evolve(initial_state(p.qubits), p, Schedule::linear(runtime, steps)), p);
}

}  // namespace

TEST(Problem, diagonal_is_the_objective_on_every_basis_state) {
    const ObjectiveContext ctx(3, build_path(3), build_path(3));
    const DiagonalProblem p = build_problem(ctx);
    ASSERT_EQ(p.qubits, 3);
    ASSERT_EQ(p.diagonal.size(), 8u);
    EXPECT_EQ(p.min(), 1);
    for (std::uint64_t i = 0; i < 8; ++i) {
        EXPECT_EQ(p.diagonal[i], oracle::objective(Coloring::from_basis_index(3, i), build_path(3), build_path(3)).total());
    }
    const DiagonalProblem p5 = build_problem(ObjectiveContext(5, build_path(4), kK3));
    for (std::uint64_t i = 0; i < p5.diagonal.size(); i += 37) {
        EXPECT_EQ(p5.diagonal[i], oracle::objective(Coloring::from_basis_index(5, i), build_path(4), kK3).total());
    }
}

TEST(Problem, tiny_and_oversized_orders) {
    const DiagonalProblem p = build_problem(ObjectiveContext(2, build_path(3), build_path(4)));
    EXPECT_EQ(p.diagonal, (std::vector<std::int64_t>{0, 0}));
    EXPECT_THROW(build_problem(ObjectiveContext(7, build_path(3), build_path(3))), std::invalid_argument);
}

TEST(Problem, minimum_equals_exhaustive_search) {
    for (int n = 3; n <= 5; ++n) {
        for (const auto& [g, h] : std::vector<std::pair<SmallGraph, SmallGraph>>{
                 {build_path(4), build_path(4)}, {kK3, kK3}, {build_star(3), build_path(3)}}) {
            const ObjectiveContext ctx(n, g, h);
            EXPECT_EQ(build_problem(ctx).min(), min_objective_exhaustive(ctx).min);
        }
    }
}

TEST(State, uniform_ground_state_of_the_driver) {
    const QuantumState psi = initial_state(3);
    ASSERT_EQ(psi.size(), 8u);
    for (const auto& a : psi) EXPECT_NEAR(a.real(), 1 / std::sqrt(8.0), 1e-15);
    EXPECT_NEAR(norm_squared(psi), 1.0, 1e-15);
    EXPECT_NEAR(transverse_energy(psi), -3.0, 1e-12);
}

TEST(Evolve, zero_runtime_leaves_the_state) {
    const DiagonalProblem p = build_problem(ObjectiveContext(3, kK3, kK3));
    const QuantumState psi = evolve(initial_state(3), p, Schedule::linear(0.0, 1));
    for (const auto& a : psi) EXPECT_NEAR(std::abs(a - std::complex<double>(1 / std::sqrt(8.0))), 0, 1e-15);
}

TEST(Evolve, pure_phase_when_the_driver_is_off) {
    const DiagonalProblem p = build_problem(ObjectiveContext(4, build_path(3), kK3));
    Schedule s{[](double) { return 0.0; }, [](double x) { return x > 0 ? 1.0 : 0.0; }, 3.0, 50};
    QuantumState start = initial_state(p.qubits);
    start[5] *= 3.0;
    start[9] *= 0.5;
    const double scale = 1 / std::sqrt(norm_squared(start));
    for (auto& a : start) a *= scale;
    const QuantumState psi = evolve(start, p, s);
    for (size_t i = 0; i < psi.size(); ++i) EXPECT_NEAR(std::abs(psi[i]), std::abs(start[i]), 1e-12);
}

TEST(Evolve, schedule_validation) {
    const DiagonalProblem p = build_problem(ObjectiveContext(3, kK3, kK3));
    EXPECT_THROW(evolve(initial_state(3), p, Schedule::linear(1.0, 0)), std::invalid_argument);
    EXPECT_THROW(evolve(initial_state(3), p, Schedule::linear(-1.0, 4)), std::invalid_argument);
    Schedule bad{[](double s) { return 1.0 - s + 0.1; }, [](double s) { return s; }, 1.0, 4};
    EXPECT_THROW(evolve(initial_state(3), p, bad), std::invalid_argument);
    Schedule wiggle{[](double s) { return 1.0 - s; }, [](double s) { return s * (1 + 0.5 * std::sin(40 * s)); }, 1.0, 4};
    EXPECT_THROW(wiggle.validate(), std::invalid_argument);
    EXPECT_THROW(evolve(initial_state(2), p, Schedule::linear(1.0, 4)), std::invalid_argument);
}

TEST(Evolve, norm_is_conserved_every_step) {
    const DiagonalProblem p = build_problem(ObjectiveContext(5, build_path(4), build_path(4)));
    EvolveStats stats;
    const QuantumState psi = evolve(initial_state(p.qubits), p, Schedule::linear(20.0, 400), &stats);
    EXPECT_EQ(stats.steps, 400);
    EXPECT_LT(stats.max_norm_drift, kNormTolerance);
    EXPECT_NEAR(norm_squared(psi), 1.0, kNormTolerance);
}

TEST(Evolve, overlap_grows_with_runtime) {
    // Fixed step density (steps per unit time).
    for (const auto& [g, h] : std::vector<std::pair<SmallGraph, SmallGraph>>{{build_path(3), build_path(3)}, {kK3, kK3}}) {
        const DiagonalProblem p = build_problem(ObjectiveContext(3, g, h));
        std::vector<double> overlaps;
        for (double t : {1.0, 5.0, 25.0, 125.0}) overlaps.push_back(final_overlap(p, t, static_cast<int>(20 * t)));
        int inversions = 0;
        for (size_t i = 0; i + 1 < overlaps.size(); ++i) {
            if (overlaps[i + 1] < overlaps[i]) {
                ++inversions;
                EXPECT_LE(overlaps[i] - overlaps[i + 1], 1e-3);
            }
        }
        EXPECT_LE(inversions, 1);
        EXPECT_GT(overlaps.back(), 0.99);
    }
}

TEST(Evolve, splitting_is_second_order) {
    const DiagonalProblem p = build_problem(ObjectiveContext(3, kK3, kK3));
    const double o1 = final_overlap(p, 5.0, 20);
    const double o2 = final_overlap(p, 5.0, 40);
    const double o3 = final_overlap(p, 5.0, 80);
    const double ratio = std::abs(o1 - o2) / std::abs(o2 - o3);
    EXPECT_GE(ratio, 3.0);
    EXPECT_LE(ratio, 5.0);
}

TEST(Measure, basis_state_and_uniform_frequencies) {
    QuantumState basis(8, 0.0);
    basis[6] = 1.0;
    for (std::uint64_t x : measure(basis, 50, 3)) EXPECT_EQ(x, 6u);

    const std::vector<std::uint64_t> shots = measure(initial_state(2), 100000, 7);
    std::array<int, 4> freq{};
    for (std::uint64_t x : shots) ++freq.at(x);
    for (int f : freq) EXPECT_NEAR(f / 100000.0, 0.25, 0.01);
    EXPECT_EQ(measure(initial_state(2), 100, 7), std::vector<std::uint64_t>(shots.begin(), shots.begin() + 100));
}

TEST(Measure, long_anneal_samples_the_minimum) {
    const DiagonalProblem p = build_problem(ObjectiveContext(3, kK3, kK3));
    const QuantumState psi = evolve(initial_state(3), p, Schedule::linear(125.0, 2500));
    for (std::uint64_t x : measure(psi, 64, 1)) EXPECT_EQ(p.diagonal[x], p.min());
}

TEST(Repetitions, plan) {
    EXPECT_EQ(plan_repetitions(0.5, 0.999).runs, 10);
    EXPECT_EQ(plan_repetitions(0.1, 0.9).runs, 1);
    EXPECT_EQ(plan_repetitions(0.99, 0.999).runs, 688);
    EXPECT_EQ(plan_repetitions(1e-6, 0.5).runs, 1);
    EXPECT_THROW(plan_repetitions(0.0, 0.5), std::invalid_argument);
    EXPECT_THROW(plan_repetitions(0.5, 1.0), std::invalid_argument);
}

TEST(AqoRamsey, small_path_pairs) {
    const AqoRamseyRun a = run_aqo_ramsey(build_path(3), build_path(3));
    EXPECT_EQ(a.result.value, 3);
    EXPECT_EQ(a.result.status, ResultStatus::kExact);
    ASSERT_EQ(a.orders.size(), 2u);
    EXPECT_EQ(a.orders[0].qubits, 1);
    EXPECT_EQ(a.orders[0].best_sampled, 0);
    EXPECT_EQ(a.orders[1].qubits, 3);
    EXPECT_EQ(a.orders[1].best_sampled, 1);

    const AqoRamseyRun b = run_aqo_ramsey(build_path(4), build_path(4));
    EXPECT_EQ(b.result.value, 5);
    EXPECT_EQ(b.result.status, ResultStatus::kExact);
    EXPECT_EQ(b.orders.back().qubits, 10);
    EXPECT_TRUE(b.result.oracle_agrees);
    for (const AqoOrderReport& r : b.orders) {
        EXPECT_LT(r.max_norm_drift, kNormTolerance);
        EXPECT_TRUE(r.corroborated);
    }
    for (const TraceEntry& e : b.result.trace) {
        EXPECT_EQ(e.method, Method::kAqo);
        if (e.witness) {
            EXPECT_EQ(oracle::objective(*e.witness, build_path(4), build_path(4)).total(), 0);
        }
    }

    EXPECT_EQ(run_aqo_ramsey(build_path(3), build_path(4)).result.value, 4);
}

TEST(AqoRamsey, qubit_cap_truncates_to_a_lower_bound) {
    // r(K_{1,5}, K_{1,5}) = 10 but order 7 already needs 21 qubits.
    AqoConfig c;
    c.runtime = 2.0;
    c.steps = 20;
    const AqoRamseyRun r = run_aqo_ramsey(build_star(5), build_star(5), c);
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.result.status, ResultStatus::kLowerBound);
    EXPECT_EQ(r.result.value, 7);
    EXPECT_TRUE(r.result.oracle_agrees);
}
