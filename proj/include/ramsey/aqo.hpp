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

// State-vector simulation of adiabatic quantum optimization on the Ramsey
// objective, one qubit per edge of K_N.
//
//   H(t) = A(t/T) H_i + B(t/T) H_P,   H_i = -sum_k sigma_x^k,
//   H_P |e> = O(e; G, H) |e>
//
// The register starts in the uniform superposition (ground state of H_i)
// and is evolved with second-order splitting: half a step of the diagonal
// phase, a full step of per-qubit x rotations, half a step of phase, all
// factors exact. hbar = 1. Basis index bit k is edge bit k of the coloring.

#ifndef RAMSEY_AQO_HPP
#define RAMSEY_AQO_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/driver.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/objective.hpp"

namespace ramsey {

inline constexpr int kMaxQubits = 20;
inline constexpr double kNormTolerance = 1e-9;

struct DiagonalProblem {
    int order = 0;
    int qubits = 0;
    /// diagonal[index] = objective of Coloring::from_basis_index(order, index).
    std::vector<std::int64_t> diagonal;

    std::int64_t min() const { return *std::min_element(diagonal.begin(), diagonal.end()); }
};

/// Diagonal of H_P over all 2^L colorings (Gray-code walk with delta
/// updates, one flip per entry).
inline DiagonalProblem build_problem(const ObjectiveContext& ctx) {
    const int n = ctx.order();
    if (n < 2) throw std::invalid_argument("build_problem: order must be >= 2");
    const int qubits = num_pairs(n);
    if (qubits > kMaxQubits) {
        throw std::invalid_argument("build_problem: " + std::to_string(qubits) + " qubits exceed the limit of " +
                                    std::to_string(kMaxQubits));
    }
    DiagonalProblem p;
    p.order = n;
    p.qubits = qubits;
    const std::uint64_t size = std::uint64_t{1} << qubits;
    p.diagonal.assign(size, 0);
    DeltaCache cache(ctx, Coloring(n));
    std::uint64_t gray = 0;
    p.diagonal[0] = cache.value().total;
    for (std::uint64_t i = 1; i < size; ++i) {
        const int bit = std::countr_zero(i);
        cache.flip(bit);
        gray ^= std::uint64_t{1} << bit;
        p.diagonal[gray] = cache.value().total;
    }
    return p;
}

struct Schedule {
    std::function<double(double)> a;
    std::function<double(double)> b;
    double runtime = 1.0;
    int steps = 100;

    /// A(s) = 1 - s, B(s) = s.
    static Schedule linear(double runtime, int steps) {
        return {[](double s) { return 1.0 - s; }, [](double s) { return s; }, runtime, steps};
    }

    /// Endpoint and monotonicity checks on a grid.
    void validate(int grid = 256) const {
        if (steps < 1) throw std::invalid_argument("schedule: step count must be >= 1");
        if (!(runtime >= 0) || !std::isfinite(runtime)) throw std::invalid_argument("schedule: runtime must be >= 0");
        if (a(1.0) != 0.0 || b(0.0) != 0.0) throw std::invalid_argument("schedule: need A(1) = 0 and B(0) = 0");
        for (int i = 0; i < grid; ++i) {
            const double s0 = static_cast<double>(i) / grid, s1 = static_cast<double>(i + 1) / grid;
            if (a(s1) > a(s0) || b(s1) < b(s0)) throw std::invalid_argument("schedule: A must decrease, B increase");
            if (a(s0) < 0 || b(s1) < 0) throw std::invalid_argument("schedule: A, B must be nonnegative");
        }
    }
};

using QuantumState = std::vector<std::complex<double>>;

inline QuantumState initial_state(int qubits) {
    if (qubits < 0 || qubits > kMaxQubits) throw std::invalid_argument("initial_state: qubit count out of range");
    const std::uint64_t size = std::uint64_t{1} << qubits;
    return QuantumState(size, std::complex<double>(1.0 / std::sqrt(static_cast<double>(size)), 0.0));
}

inline double norm_squared(const QuantumState& psi) {
    double s = 0;
    for (const auto& a : psi) s += std::norm(a);
    return s;
}

/// <psi| H_i |psi> with H_i = -sum_k sigma_x^k.
inline double transverse_energy(const QuantumState& psi) {
    const std::uint64_t size = psi.size();
    double e = 0;
    for (std::uint64_t stride = 1; stride < size; stride <<= 1) {
        for (std::uint64_t i = 0; i < size; ++i) {
            if (i & stride) continue;
            e -= 2.0 * std::real(std::conj(psi[i]) * psi[i | stride]);
        }
    }
    return e;
}

struct EvolveStats {
    double max_norm_drift = 0;
    int steps = 0;
};

/// Evolves psi under the interpolated Hamiltonian for the schedule.
inline QuantumState evolve(QuantumState psi, const DiagonalProblem& problem, const Schedule& schedule,
                           EvolveStats* stats = nullptr) {
    schedule.validate();
    if (psi.size() != problem.diagonal.size()) throw std::invalid_argument("evolve: state and problem sizes differ");
    const std::uint64_t size = psi.size();
    const double dt = schedule.runtime / schedule.steps;
    EvolveStats local;
    std::vector<std::complex<double>> phase(size);
    for (int step = 0; step < schedule.steps; ++step) {
        const double s = (step + 0.5) / schedule.steps;
        const double a = schedule.a(s);
        const double b = schedule.b(s);
        // exp(-i B H_P dt/2), diagonal.
        for (std::uint64_t i = 0; i < size; ++i) {
            phase[i] = std::polar(1.0, -b * static_cast<double>(problem.diagonal[i]) * dt / 2);
        }
        for (std::uint64_t i = 0; i < size; ++i) psi[i] *= phase[i];
        // exp(-i A H_i dt) = prod_k (cos(A dt) I + i sin(A dt) sigma_x^k).
        const double c = std::cos(a * dt), sn = std::sin(a * dt);
        const std::complex<double> is(0.0, sn);
        for (std::uint64_t stride = 1; stride < size; stride <<= 1) {
            for (std::uint64_t i = 0; i < size; ++i) {
                if (i & stride) continue;
                const std::complex<double> x = psi[i], y = psi[i | stride];
                psi[i] = c * x + is * y;
                psi[i | stride] = is * x + c * y;
            }
        }
        for (std::uint64_t i = 0; i < size; ++i) psi[i] *= phase[i];

        const double norm = norm_squared(psi);
        if (!std::isfinite(norm)) throw std::runtime_error("evolve: NaN or infinity in the state vector");
        local.max_norm_drift = std::max(local.max_norm_drift, std::abs(1.0 - norm));
        if (std::abs(1.0 - norm) >= kNormTolerance) {
            throw std::runtime_error("evolve: norm drift " + std::to_string(std::abs(1.0 - norm)) +
                                     " exceeds tolerance at step " + std::to_string(step));
        }
        ++local.steps;
    }
    if (stats) *stats = local;
    return psi;
}

/// Probability mass on the basis states attaining the minimum objective.
inline double ground_overlap(const QuantumState& psi, const DiagonalProblem& problem) {
    const std::int64_t m = problem.min();
    double p = 0;
    for (std::uint64_t i = 0; i < psi.size(); ++i) {
        if (problem.diagonal[i] == m) p += std::norm(psi[i]);
    }
    return p;
}

/// Computational-basis samples (basis indices), reproducible for a seed.
inline std::vector<std::uint64_t> measure(const QuantumState& psi, int shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("measure: shots must be >= 1");
    std::vector<double> cumulative(psi.size());
    double acc = 0;
    for (std::uint64_t i = 0; i < psi.size(); ++i) {
        acc += std::norm(psi[i]);
        cumulative[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(shots);
    for (int s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        if (it == cumulative.end()) --it;
        out.push_back(static_cast<std::uint64_t>(it - cumulative.begin()));
    }
    return out;
}

struct RepetitionPlan {
    double epsilon = 0;
    double delta = 0;
    int runs = 1;
};

/// Runs needed so that at least one is optimal with confidence delta when
/// each run fails with probability epsilon: ceil(ln(1-delta) / ln(epsilon)).
inline RepetitionPlan plan_repetitions(double epsilon, double delta) {
    if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("plan_repetitions: need 0 < epsilon < 1");
    if (!(delta > 0 && delta < 1)) throw std::invalid_argument("plan_repetitions: need 0 < delta < 1");
    // The slack keeps exact ratios such as ln(0.1)/ln(0.1) from rounding up.
    const double ratio = std::log(1 - delta) / std::log(epsilon);
    const int k = std::max(1, static_cast<int>(std::ceil(ratio - 1e-9)));
    return {epsilon, delta, k};
}

struct AqoConfig {
    double runtime = 20.0;
    int steps = 400;
    int shots = 64;
    std::uint64_t seed = 1;
    /// Confidence used for the repetition plan.
    double delta = 0.999;
    /// Check every order's verdict against the exhaustive minimum.
    bool corroborate = true;
};

struct AqoOrderReport {
    int order = 0;
    int qubits = 0;
    std::int64_t best_sampled = 0;
    std::uint64_t best_index = 0;
    std::int64_t exhaustive_min = 0;
    double ground_overlap = 0;
    double max_norm_drift = 0;
    /// Fraction of samples not attaining the exhaustive minimum.
    double epsilon = 0;
    int planned_runs = 1;
    bool corroborated = false;
};

struct AqoRamseyRun {
    RamseyResult result;
    std::vector<AqoOrderReport> orders;
    /// The qubit cap stopped the walk before r was determined.
    bool truncated = false;
};

/// The incremental-N loop with each order's minimum taken from AQO samples.
inline AqoRamseyRun run_aqo_ramsey(const SmallGraph& g, const SmallGraph& h, const AqoConfig& config = {}) {
    if (g.num_edges() == 0 || h.num_edges() == 0) throw std::invalid_argument("run_aqo_ramsey: edgeless pattern");
    AqoRamseyRun run;
    RamseyResult& r = run.result;
    r.red = g;
    r.blue = h;
    r.oracles = applicable_oracles(g, h);
    int n = std::max(2, std::max(g.order(), h.order()) - 1);
    r.start_order = n;
    bool all_corroborated = true;
    for (;; ++n) {
        if (num_pairs(n) > kMaxQubits || n > kMaxOrder) {
            run.truncated = true;
            r.status = ResultStatus::kLowerBound;
            r.value = n;
            break;
        }
        const ObjectiveContext ctx(n, g, h);
        const DiagonalProblem problem = build_problem(ctx);
        Schedule sched = Schedule::linear(config.runtime, config.steps);
        EvolveStats stats;
        const QuantumState psi = evolve(initial_state(problem.qubits), problem, sched, &stats);
        const std::vector<std::uint64_t> samples =
            measure(psi, config.shots, config.seed + static_cast<std::uint64_t>(n));

        AqoOrderReport rep;
        rep.order = n;
        rep.qubits = problem.qubits;
        rep.max_norm_drift = stats.max_norm_drift;
        rep.best_sampled = std::numeric_limits<std::int64_t>::max();
        for (std::uint64_t idx : samples) {
            if (problem.diagonal[idx] < rep.best_sampled) {
                rep.best_sampled = problem.diagonal[idx];
                rep.best_index = idx;
            }
        }
        rep.exhaustive_min = problem.min();
        rep.ground_overlap = ground_overlap(psi, problem);
        int misses = 0;
        for (std::uint64_t idx : samples) misses += problem.diagonal[idx] != rep.exhaustive_min ? 1 : 0;
        rep.epsilon = static_cast<double>(misses) / samples.size();
        if (rep.epsilon > 0 && rep.epsilon < 1) rep.planned_runs = plan_repetitions(rep.epsilon, config.delta).runs;
        rep.corroborated = !config.corroborate || (rep.best_sampled == 0) == (rep.exhaustive_min == 0);
        all_corroborated = all_corroborated && rep.corroborated;
        run.orders.push_back(rep);

        TraceEntry e{n, Method::kAqo, rep.best_sampled, std::nullopt};
        if (rep.best_sampled == 0) e.witness = Coloring::from_basis_index(n, rep.best_index);
        r.trace.push_back(e);
        if (rep.best_sampled > 0) {
            r.value = n;
            r.status = all_corroborated && config.corroborate ? ResultStatus::kExact : ResultStatus::kLowerBound;
            r.optimal = Census{true, n, rep.exhaustive_min, 0, {}};
            break;
        }
    }
    r.oracle_agrees = detail::check_against_oracles(r);
    return run;
}

}  // namespace ramsey

#endif  // RAMSEY_AQO_HPP
