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

#ifndef RAMSEY_CONTAINMENT_HPP
#define RAMSEY_CONTAINMENT_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

namespace detail {

struct SpanningMatcher {
    int n = 0;
    std::array<Row, kMaxOrder> host{};
    std::array<Row, kMaxOrder> pattern{};
    std::array<int, kMaxOrder> host_deg{};
    std::array<int, kMaxOrder> order{};      // pattern vertices in placement order
    std::array<Row, kMaxOrder> earlier{};    // pattern neighbours placed before order[k]
    std::array<int, kMaxOrder> image{};      // pattern vertex -> host vertex

    bool place(int k, Row used) {
        if (k == n) return true;
        const int p = order[k];
        const int need = std::popcount(static_cast<unsigned>(pattern[p]));
        // Host vertex must be adjacent to the images of every placed neighbour.
        Row allowed = static_cast<Row>(~used) & SmallGraph::full_mask(n);
        for (Row rem = earlier[k]; rem; rem &= rem - 1) {
            allowed &= host[image[std::countr_zero(static_cast<unsigned>(rem))]];
        }
        for (Row rem = allowed; rem; rem &= rem - 1) {
            const int h = std::countr_zero(static_cast<unsigned>(rem));
            if (host_deg[h] < need) continue;
            image[p] = h;
            if (place(k + 1, used | Row(1u << h))) return true;
        }
        return false;
    }
};

}  // namespace detail

/// True iff some bijection maps every edge of `pattern` onto an edge of
/// `host` (extra host edges allowed). Both graphs must have the same order.
inline bool contains_spanning(const SmallGraph& host, const SmallGraph& pattern) {
    if (host.order() != pattern.order()) {
        throw std::invalid_argument("contains_spanning: host and pattern orders differ");
    }
    const int n = host.order();
    if (pattern.num_edges() > host.num_edges()) return false;

    // Sorted degree sequences: the i-th largest host degree must dominate
    // the i-th largest pattern degree.
    std::vector<int> hd = host.degree_sequence();
    std::vector<int> pd = pattern.degree_sequence();
    for (int i = 0; i < n; ++i) {
        if (hd[i] < pd[i]) return false;
    }

    detail::SpanningMatcher m;
    m.n = n;
    for (int v = 0; v < n; ++v) {
        m.host[v] = host.row(v);
        m.pattern[v] = pattern.row(v);
        m.host_deg[v] = host.degree(v);
    }
    // Placement order: repeatedly take the unplaced pattern vertex with the
    // most placed neighbours, then the highest degree.
    Row placed = 0;
    for (int k = 0; k < n; ++k) {
        int best = -1, best_conn = -1, best_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (placed >> v & 1) continue;
            const int conn = std::popcount(static_cast<unsigned>(m.pattern[v] & placed));
            const int deg = pattern.degree(v);
            if (conn > best_conn || (conn == best_conn && deg > best_deg)) {
                best = v;
                best_conn = conn;
                best_deg = deg;
            }
        }
        m.order[k] = best;
        m.earlier[k] = m.pattern[best] & placed;
        placed |= Row(1u << best);
    }
    return m.place(0, 0);
}

}  // namespace ramsey

#endif  // RAMSEY_CONTAINMENT_HPP
