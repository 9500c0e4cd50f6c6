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

// Slow, obviously-correct reference implementations used by the tests. They
// only touch SmallGraph / Coloring accessors, never the code under test.

#ifndef RAMSEY_TESTS_ORACLES_HPP
#define RAMSEY_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "ramsey/graph.hpp"

namespace oracle {

using ramsey::Coloring;
using ramsey::SmallGraph;

/// Pattern and host of equal order: some bijection maps every pattern edge
/// onto a host edge.
inline bool contains(const SmallGraph& host, const SmallGraph& pattern) {
    const int n = pattern.order();
    if (host.order() != n) return false;
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    const auto edges = pattern.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges) {
            if (!host.has_edge(pi[u], pi[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

/// Induced red (color = true) or blue graph of a coloring on the vertex set.
inline SmallGraph induced(const Coloring& e, const std::vector<int>& s, bool red) {
    SmallGraph g(static_cast<int>(s.size()));
    for (size_t a = 0; a < s.size(); ++a) {
        for (size_t b = a + 1; b < s.size(); ++b) {
            if (e.is_red(s[a], s[b]) == red) g.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    }
    return g;
}

template <typename Fn>
void for_each_subset(int n, int p, Fn&& fn) {
    if (p > n) return;
    std::vector<int> s(p);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        fn(s);
        int i = p - 1;
        while (i >= 0 && s[i] == n - p + i) --i;
        if (i < 0) return;
        ++s[i];
        for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
    }
}

struct Value {
    std::int64_t red = 0;
    std::int64_t blue = 0;
    std::int64_t total() const { return red + blue; }
};

/// Subsets of size |V_G| whose red graph contains G, plus subsets of size
/// |V_H| whose blue graph contains H.
inline Value objective(const Coloring& e, const SmallGraph& g, const SmallGraph& h) {
    Value v;
    for_each_subset(e.order(), g.order(), [&](const std::vector<int>& s) { v.red += contains(induced(e, s, true), g); });
    for_each_subset(e.order(), h.order(), [&](const std::vector<int>& s) { v.blue += contains(induced(e, s, false), h); });
    return v;
}

/// Smallest edge bit string over all relabellings; a complete invariant.
inline std::vector<bool> canonical_key(const SmallGraph& g) {
    const int n = g.order();
    std::vector<int> pi(n);
    std::iota(pi.begin(), pi.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> key;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) key.push_back(g.has_edge(pi[i], pi[j]));
        }
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(pi.begin(), pi.end()));
    return best;
}

inline bool isomorphic(const SmallGraph& a, const SmallGraph& b) {
    return a.order() == b.order() && a.num_edges() == b.num_edges() && canonical_key(a) == canonical_key(b);
}

/// All labelled graphs of order n (n <= 7).
template <typename Fn>
void for_each_labelled(int n, Fn&& fn) {
    const std::uint64_t total = std::uint64_t{1} << ramsey::num_pairs(n);
    for (std::uint64_t x = 0; x < total; ++x) fn(Coloring::from_basis_index(n, x));
}

/// Number of isomorphism classes of order n by brute force (n <= 5).
inline std::size_t class_count(int n) {
    std::set<std::vector<bool>> keys;
    for_each_labelled(n, [&](const Coloring& e) { keys.insert(canonical_key(e.red_graph())); });
    return keys.size();
}

/// Labelled minimum of the objective over all 2^C(n,2) colorings.
inline std::int64_t min_objective(int n, const SmallGraph& g, const SmallGraph& h) {
    std::int64_t best = -1;
    for_each_labelled(n, [&](const Coloring& e) {
        const std::int64_t v = objective(e, g, h).total();
        if (best < 0 || v < best) best = v;
    });
    return best;
}

/// Tree decoded from a Pruefer sequence over vertices 0..m-1.
inline SmallGraph pruefer_tree(int m, const std::vector<int>& code) {
    std::vector<int> degree(m, 1);
    for (int x : code) ++degree[x];
    SmallGraph t(m);
    for (int x : code) {
        for (int leaf = 0; leaf < m; ++leaf) {
            if (degree[leaf] == 1) {
                t.add_edge(leaf, x);
                --degree[leaf];
                --degree[x];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < m; ++v) {
        if (degree[v] == 1) {
            if (u < 0) {
                u = v;
            } else {
                t.add_edge(u, v);
            }
        }
    }
    return t;
}

/// Every labelled tree on m vertices, once each (m^(m-2) of them).
template <typename Fn>
void for_each_labelled_tree(int m, Fn&& fn) {
    if (m == 2) {
        SmallGraph t(2);
        t.add_edge(0, 1);
        fn(t);
        return;
    }
    std::vector<int> code(m - 2, 0);
    while (true) {
        fn(pruefer_tree(m, code));
        int i = m - 3;
        while (i >= 0 && code[i] == m - 1) code[i--] = 0;
        if (i < 0) return;
        ++code[i];
    }
}

}  // namespace oracle

#endif  // RAMSEY_TESTS_ORACLES_HPP
