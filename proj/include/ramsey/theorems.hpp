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

// Known closed forms for tree Ramsey numbers:
//
//   paths       Gerencser-Gyarfas   r(P_m, P_n) = n + floor(m/2) - 1, m <= n
//   stars       Harary              r(K_{1,m-1}, K_{1,n-1}) = m+n-3 (m, n odd), else m+n-2
//   cockayne    Cockayne            r(T_m, K_{1,n-1}) = m+n-3 under four side conditions
//   burr-erdos  Burr-Erdos          r(S4, S4) = max{2a+3, a+2b+5} for S^(4)_{a,b}
//   ghk         Grossman-Harary-Klawe  bounds and values for S^(2)_{a,b}
//   conjecture  r(T_m, T_n) <= m+n-2 for all trees (unproved)

#ifndef RAMSEY_THEOREMS_HPP
#define RAMSEY_THEOREMS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramsey/catalog.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class OracleSource { kPaths, kStars, kCockayne, kBurrErdos, kGhk, kConjecture };
enum class VerdictKind { kExact, kLowerBound, kUpperBound, kNotApplicable };

inline const char* to_string(OracleSource s) {
    switch (s) {
        case OracleSource::kPaths:
            return "paths";
        case OracleSource::kStars:
            return "stars";
        case OracleSource::kCockayne:
            return "cockayne";
        case OracleSource::kBurrErdos:
            return "burr-erdos";
        case OracleSource::kGhk:
            return "ghk";
        case OracleSource::kConjecture:
            return "conjecture";
    }
    return "?";
}

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::kExact:
            return "exact";
        case VerdictKind::kLowerBound:
            return "lower-bound";
        case VerdictKind::kUpperBound:
            return "upper-bound";
        case VerdictKind::kNotApplicable:
            return "not-applicable";
    }
    return "?";
}

/// Superscript tags used by the published tree tables for each source.
/// Data, not derived; the conjecture has no tag.
inline int table_superscript(OracleSource s) {
    switch (s) {
        case OracleSource::kPaths:
            return 2;
        case OracleSource::kStars:
            return 3;
        case OracleSource::kCockayne:
            return 4;
        case OracleSource::kBurrErdos:
            return 6;
        case OracleSource::kGhk:
            return 7;
        case OracleSource::kConjecture:
            return 0;
    }
    return 0;
}

struct OracleVerdict {
    OracleSource source = OracleSource::kConjecture;
    VerdictKind kind = VerdictKind::kNotApplicable;
    int value = 0;

    bool applicable() const { return kind != VerdictKind::kNotApplicable; }
    friend bool operator==(const OracleVerdict&, const OracleVerdict&) = default;
};

namespace detail {

// x == c (mod d) for d >= 1.
inline bool congruent(long long x, long long c, long long d) { return ((x - c) % d + d) % d == 0; }

}  // namespace detail

inline OracleVerdict path_ramsey(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("path_ramsey: orders must be >= 2");
    if (m > n) throw std::invalid_argument("path_ramsey: need m <= n");
    return {OracleSource::kPaths, VerdictKind::kExact, n + m / 2 - 1};
}

/// Stars of orders m and n, i.e. K_{1,m-1} and K_{1,n-1}.
inline OracleVerdict star_ramsey(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("star_ramsey: orders must be >= 2");
    const bool both_odd = (m % 2 == 1) && (n % 2 == 1);
    return {OracleSource::kStars, VerdictKind::kExact, both_odd ? m + n - 3 : m + n - 2};
}

inline bool has_leaf_next_to_degree_two(const SmallGraph& t) {
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) != 1) continue;
        const int u = std::countr_zero(static_cast<unsigned>(t.row(v)));
        if (t.degree(u) == 2) return true;
    }
    return false;
}

/// r(T, K_{1,n-1}) for a tree T of order m.
inline OracleVerdict cockayne_star(const SmallGraph& t, int n) {
    if (!t.is_tree()) throw std::invalid_argument("cockayne_star: T must be a tree");
    if (n < 2) throw std::invalid_argument("cockayne_star: star order n must be >= 2");
    OracleVerdict none{OracleSource::kCockayne, VerdictKind::kNotApplicable, 0};
    const long long m = t.order();
    // P_3 = K_{1,2} is a star; there the congruences are vacuous mod m - 2 = 1
    // and the formula undershoots Harary's value (red perfect matchings).
    if (m < 4 || !has_leaf_next_to_degree_two(t)) return none;
    const long long x = n - 1;
    const long long d1 = m - 1;
    const long long d2 = m - 2;
    using detail::congruent;
    const bool c1 = congruent(x, 0, d1) || congruent(x, 2, d1);
    const bool c2 = !congruent(x, 1, d1) && x >= (m - 3) * (m - 3);
    const bool c3 = !congruent(x, 1, d1) && congruent(x, 1, d2);
    const bool c4 = congruent(x, m - 2, d1) && x > m - 2;
    if (!(c1 || c2 || c3 || c4)) return none;
    return {OracleSource::kCockayne, VerdictKind::kExact, static_cast<int>(m) + n - 3};
}

inline OracleVerdict burr_erdos_s4(int a, int b) {
    if (b < 1 || a < b) throw std::invalid_argument("burr_erdos_s4: need a >= b >= 1");
    return {OracleSource::kBurrErdos, VerdictKind::kExact, std::max(2 * a + 3, a + 2 * b + 5)};
}

inline OracleVerdict ghk_s2(int a, int b) {
    if (b < 1 || a < b) throw std::invalid_argument("ghk_s2: need a >= b >= 1");
    const bool odd_small = (a % 2 == 1) && (b == 1 || b == 2);
    const int value = odd_small ? std::max(2 * a + 1, a + 2 * b + 2) : std::max(2 * a + 2, a + 2 * b + 2);
    bool exact = odd_small;
    if (!odd_small && (a % 2 == 0 || b >= 3)) {
        exact = static_cast<double>(a) <= std::sqrt(2.0) * b || a >= 3 * b;
    }
    return {OracleSource::kGhk, exact ? VerdictKind::kExact : VerdictKind::kLowerBound, value};
}

inline OracleVerdict conjectured_upper(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("conjectured_upper: orders must be >= 2");
    return {OracleSource::kConjecture, VerdictKind::kUpperBound, m + n - 2};
}

/// Every verdict that applies to the pair (G, H), both orientations.
inline std::vector<OracleVerdict> applicable_oracles(const SmallGraph& g, const SmallGraph& h) {
    std::vector<OracleVerdict> out;
    const bool g_tree = g.is_tree() && g.order() >= 2;
    const bool h_tree = h.is_tree() && h.order() >= 2;
    if (!g_tree || !h_tree) return out;
    const int m = g.order();
    const int n = h.order();

    if (is_path_graph(g) && is_path_graph(h)) out.push_back(path_ramsey(std::min(m, n), std::max(m, n)));
    if (is_star_graph(g) && is_star_graph(h)) out.push_back(star_ramsey(m, n));
    if (is_star_graph(h)) out.push_back(cockayne_star(g, n));
    if (is_star_graph(g)) out.push_back(cockayne_star(h, m));
    if (m == n && canonical_form(g) == canonical_form(h)) {
        for (const DoubleStarSpec& s : double_star_shapes(g)) {
            if (s.k == 4) out.push_back(burr_erdos_s4(s.a, s.b));
            if (s.k == 2) out.push_back(ghk_s2(s.a, s.b));
        }
    }
    out.push_back(conjectured_upper(m, n));
    std::vector<OracleVerdict> unique;
    for (const OracleVerdict& v : out) {
        if (v.applicable() && std::find(unique.begin(), unique.end(), v) == unique.end()) unique.push_back(v);
    }
    return unique;
}

/// Largest value known to be <= r(G, H) from exact or lower-bound verdicts
/// (0 when none applies).
inline int oracle_lower_bound(const std::vector<OracleVerdict>& verdicts) {
    int best = 0;
    for (const OracleVerdict& v : verdicts) {
        if (v.kind == VerdictKind::kExact || v.kind == VerdictKind::kLowerBound) best = std::max(best, v.value);
    }
    return best;
}

/// Exact value when some oracle pins it, 0 otherwise.
inline int oracle_exact_value(const std::vector<OracleVerdict>& verdicts) {
    for (const OracleVerdict& v : verdicts) {
        if (v.kind == VerdictKind::kExact) return v.value;
    }
    return 0;
}

/// True when all exact verdicts agree with each other.
inline bool oracles_consistent(const std::vector<OracleVerdict>& verdicts) {
    int seen = 0;
    for (const OracleVerdict& v : verdicts) {
        if (v.kind != VerdictKind::kExact) continue;
        if (seen != 0 && seen != v.value) return false;
        seen = v.value;
    }
    return true;
}

}  // namespace ramsey

#endif  // RAMSEY_THEOREMS_HPP
