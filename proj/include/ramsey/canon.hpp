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

// Canonical labelling of small graphs.
//
// The search is the usual individualization-refinement tree: the root
// partition is refined to an equitable partition, a vertex of the first
// non-singleton cell is individualized, the result is refined again, and so
// on until the partition is discrete. Every discrete partition (leaf) gives a
// relabelled adjacency matrix; the canonical form is the largest leaf under
// the order (refinement trace sequence, relabelled rows). Two pruning rules
// keep the tree small:
//
//  * a child is skipped when an automorphism found so far, fixing the
//    individualized prefix pointwise, maps it onto an already explored
//    sibling;
//  * a node whose trace prefix is smaller than the best leaf's prefix is cut,
//    unless its trace still matches the first path (it may hold an
//    automorphism of the first leaf).
//
// With those rules the automorphisms found generate the full automorphism
// group, which the isomorph-free generator relies on.

#ifndef RAMSEY_CANON_HPP
#define RAMSEY_CANON_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Order plus the canonical edge bitstring (edge_index order of the
/// canonically relabelled graph). Equal iff the graphs are isomorphic.
struct CanonicalForm {
    int order = 0;
    std::array<std::uint64_t, 2> bits{};

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    /// The canonical representative itself.
    SmallGraph graph() const {
        SmallGraph g(order);
        int k = 0;
        for (int i = 0; i < order; ++i) {
            for (int j = i + 1; j < order; ++j, ++k) {
                if (bits[k >> 6] >> (k & 63) & 1) g.add_edge(i, j);
            }
        }
        return g;
    }

    static CanonicalForm from_rows(int order, const Row* rows) {
        CanonicalForm f;
        f.order = order;
        int k = 0;
        for (int i = 0; i < order; ++i) {
            for (int j = i + 1; j < order; ++j, ++k) {
                if (rows[i] >> j & 1) f.bits[k >> 6] |= std::uint64_t{1} << (k & 63);
            }
        }
        return f;
    }
};

struct CanonicalFormHash {
    size_t operator()(const CanonicalForm& f) const noexcept {
        std::uint64_t h = f.bits[0] * 0x9E3779B97F4A7C15ull;
        h ^= (f.bits[1] + 0x632BE59BD9B4E019ull + static_cast<std::uint64_t>(f.order)) * 0xC2B2AE3D27D4EB4Full;
        h ^= h >> 29;
        return static_cast<size_t>(h);
    }
};

using Automorphism = std::array<std::uint8_t, kMaxOrder>;

/// Result of a canonical labelling run.
struct Labeling {
    int order = 0;
    /// lab[p] is the vertex placed at canonical position p.
    std::array<std::uint8_t, kMaxOrder> lab{};
    /// Rows of the canonically relabelled graph.
    std::array<Row, kMaxOrder> canon_rows{};
    /// Generators of the automorphism group.
    std::vector<Automorphism> generators;
    /// orbit[v] is the smallest vertex in the automorphism orbit of v.
    std::array<std::uint8_t, kMaxOrder> orbit{};

    CanonicalForm form() const { return CanonicalForm::from_rows(order, canon_rows.data()); }

    int position_of(int v) const {
        for (int p = 0; p < order; ++p) {
            if (lab[p] == v) return p;
        }
        return -1;
    }
};

/// Reusable canonical labelling engine. Not thread-safe; use one per thread.
class Canonizer {
   public:
    const Labeling& run(const SmallGraph& g) {
        n_ = g.order();
        std::copy(g.row_data(), g.row_data() + n_, adj_.begin());
        out_.order = n_;
        out_.generators.clear();
        have_first_ = false;
        best_version_ = 0;

        Node root;
        root.nc = 1;
        root.cells[0] = SmallGraph::full_mask(n_);
        Row queue = root.cells[0];
        trace_[0] = refine(root, &queue, 1);
        search(root, 0, true, 0);

        out_.lab = best_lab_;
        out_.canon_rows = best_rows_;
        compute_orbits(out_.orbit, 0);
        return out_;
    }

   private:
    struct Node {
        std::array<Row, kMaxOrder> cells{};
        int nc = 0;
    };

    static std::uint32_t mix(std::uint32_t h, std::uint32_t x) {
        h ^= x + 0x9E3779B9u + (h << 6) + (h >> 2);
        return h;
    }

    // Refines node to the coarsest equitable partition finer than it, using
    // the given splitter sets. Returns an isomorphism-invariant trace value.
    std::uint32_t refine(Node& node, const Row* initial, int initial_len) {
        std::array<Row, 4 * kMaxOrder + 8> queue;
        int qlen = 0;
        for (int i = 0; i < initial_len; ++i) queue[qlen++] = initial[i];
        std::uint32_t h = static_cast<std::uint32_t>(node.nc);
        int qhead = 0;
        while (qhead < qlen && node.nc < n_) {
            const Row w = queue[qhead++];
            for (int c = 0; c < node.nc; ++c) {
                const Row cell = node.cells[c];
                if ((cell & (cell - 1)) == 0) continue;
                std::array<Row, kMaxOrder + 1> buckets{};
                int lo = kMaxOrder, hi = 0;
                for (Row rem = cell; rem; rem &= rem - 1) {
                    const int v = std::countr_zero(static_cast<unsigned>(rem));
                    const int k = std::popcount(static_cast<unsigned>(adj_[v] & w));
                    buckets[k] |= Row(1u << v);
                    lo = std::min(lo, k);
                    hi = std::max(hi, k);
                }
                if (lo == hi) continue;
                std::array<Row, kMaxOrder> parts;
                int np = 0;
                for (int k = lo; k <= hi; ++k) {
                    if (buckets[k]) {
                        parts[np++] = buckets[k];
                        h = mix(h, static_cast<std::uint32_t>((c << 16) | (k << 8) |
                                                              std::popcount(static_cast<unsigned>(buckets[k]))));
                    }
                }
                for (int j = node.nc - 1; j > c; --j) node.cells[j + np - 1] = node.cells[j];
                for (int j = 0; j < np; ++j) node.cells[c + j] = parts[j];
                node.nc += np - 1;
                for (int j = 0; j < np && qlen < static_cast<int>(queue.size()); ++j) queue[qlen++] = parts[j];
                c += np - 1;
            }
        }
        return mix(h, static_cast<std::uint32_t>(node.nc));
    }

    // Orbits of the group generated by the generators fixing path_[0..prefix_len).
    void compute_orbits(std::array<std::uint8_t, kMaxOrder>& orbit, int prefix_len) const {
        std::array<std::uint8_t, kMaxOrder> parent;
        for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
        auto find = [&](int v) {
            while (parent[v] != v) {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            return v;
        };
        for (const Automorphism& g : out_.generators) {
            bool fixes = true;
            for (int d = 0; d < prefix_len && fixes; ++d) fixes = g[path_[d]] == path_[d];
            if (!fixes) continue;
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(g[v]);
                if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
            }
        }
        for (int v = 0; v < n_; ++v) orbit[v] = static_cast<std::uint8_t>(find(v));
    }

    // Lexicographic comparison of trace prefixes [0..depth].
    static int compare_traces(const std::uint32_t* a, const std::uint32_t* b, int depth) {
        for (int d = 0; d <= depth; ++d) {
            if (a[d] != b[d]) return a[d] < b[d] ? -1 : 1;
        }
        return 0;
    }

    void leaf(const Node& node, int depth, bool eq_first, int cmp_best) {
        std::array<std::uint8_t, kMaxOrder> lab;
        std::array<std::uint8_t, kMaxOrder> pos;
        for (int p = 0; p < n_; ++p) {
            const int v = std::countr_zero(static_cast<unsigned>(node.cells[p]));
            lab[p] = static_cast<std::uint8_t>(v);
            pos[v] = static_cast<std::uint8_t>(p);
        }
        std::array<Row, kMaxOrder> rows{};
        for (int p = 0; p < n_; ++p) {
            Row r = 0;
            for (Row rem = adj_[lab[p]]; rem; rem &= rem - 1) {
                r |= Row(1u << pos[std::countr_zero(static_cast<unsigned>(rem))]);
            }
            rows[p] = r;
        }

        if (!have_first_) {
            have_first_ = true;
            first_depth_ = depth;
            std::copy(trace_.begin(), trace_.begin() + depth + 1, first_trace_.begin());
            std::copy(trace_.begin(), trace_.begin() + depth + 1, best_trace_.begin());
            first_lab_ = best_lab_ = lab;
            first_rows_ = best_rows_ = rows;
            ++best_version_;
            return;
        }
        if (eq_first && std::equal(rows.begin(), rows.begin() + n_, first_rows_.begin())) {
            add_automorphism(first_lab_, lab);
            return;
        }
        int cmp = cmp_best;
        if (cmp == 0) {
            cmp = std::lexicographical_compare(best_rows_.begin(), best_rows_.begin() + n_, rows.begin(),
                                               rows.begin() + n_)
                      ? 1
                      : (std::equal(rows.begin(), rows.begin() + n_, best_rows_.begin()) ? 0 : -1);
        }
        if (cmp == 0) {
            add_automorphism(best_lab_, lab);
        } else if (cmp > 0) {
            std::copy(trace_.begin(), trace_.begin() + depth + 1, best_trace_.begin());
            best_lab_ = lab;
            best_rows_ = rows;
            ++best_version_;
        }
    }

    void add_automorphism(const std::array<std::uint8_t, kMaxOrder>& from,
                          const std::array<std::uint8_t, kMaxOrder>& to) {
        Automorphism g{};
        bool identity = true;
        for (int p = 0; p < n_; ++p) {
            g[from[p]] = to[p];
            identity = identity && from[p] == to[p];
        }
        if (!identity) out_.generators.push_back(g);
    }

    void search(const Node& node, int depth, bool eq_first, int cmp_best) {
        if (node.nc == n_) {
            leaf(node, depth, eq_first, cmp_best);
            return;
        }
        int t = 0;
        while ((node.cells[t] & (node.cells[t] - 1)) == 0) ++t;
        const Row target = node.cells[t];

        Row tried = 0;
        std::array<std::uint8_t, kMaxOrder> orbit;
        size_t orbit_gens = static_cast<size_t>(-1);
        for (Row rem = target; rem; rem &= rem - 1) {
            const int v = std::countr_zero(static_cast<unsigned>(rem));
            if (tried != 0 && !out_.generators.empty()) {
                if (orbit_gens != out_.generators.size()) {
                    compute_orbits(orbit, depth);
                    orbit_gens = out_.generators.size();
                }
                bool equivalent = false;
                for (Row tr = tried; tr && !equivalent; tr &= tr - 1) {
                    equivalent = orbit[std::countr_zero(static_cast<unsigned>(tr))] == orbit[v];
                }
                if (equivalent) continue;
            }
            tried |= Row(1u << v);

            Node child;
            child.nc = node.nc + 1;
            for (int j = 0; j < t; ++j) child.cells[j] = node.cells[j];
            child.cells[t] = Row(1u << v);
            child.cells[t + 1] = target & ~Row(1u << v);
            for (int j = t + 1; j < node.nc; ++j) child.cells[j + 1] = node.cells[j];
            path_[depth] = static_cast<std::uint8_t>(v);
            const Row splitter = Row(1u << v);
            trace_[depth + 1] = refine(child, &splitter, 1);

            const unsigned version_before = best_version_;
            bool child_eq_first = false;
            int child_cmp = 1;
            if (have_first_) {
                child_eq_first = eq_first && depth + 1 <= first_depth_ && trace_[depth + 1] == first_trace_[depth + 1];
                if (cmp_best == 0) {
                    child_cmp = trace_[depth + 1] == best_trace_[depth + 1]
                                    ? 0
                                    : (trace_[depth + 1] < best_trace_[depth + 1] ? -1 : 1);
                } else {
                    child_cmp = cmp_best;
                }
                if (child_cmp < 0 && !child_eq_first) continue;
            }
            search(child, depth + 1, child_eq_first, child_cmp);
            // A new best leaf below this node shares this node's trace prefix.
            if (best_version_ != version_before) cmp_best = 0;
        }
    }

    int n_ = 0;
    std::array<Row, kMaxOrder> adj_{};
    std::array<std::uint8_t, kMaxOrder> path_{};
    std::array<std::uint32_t, kMaxOrder + 1> trace_{};

    bool have_first_ = false;
    int first_depth_ = 0;
    std::array<std::uint32_t, kMaxOrder + 1> first_trace_{};
    std::array<std::uint8_t, kMaxOrder> first_lab_{};
    std::array<Row, kMaxOrder> first_rows_{};

    unsigned best_version_ = 0;
    std::array<std::uint32_t, kMaxOrder + 1> best_trace_{};
    std::array<std::uint8_t, kMaxOrder> best_lab_{};
    std::array<Row, kMaxOrder> best_rows_{};

    Labeling out_;
};

inline Labeling canonical_labeling(const SmallGraph& g) {
    thread_local Canonizer canonizer;
    return canonizer.run(g);
}

inline CanonicalForm canonical_form(const SmallGraph& g) {
    thread_local Canonizer canonizer;
    return canonizer.run(g).form();
}

inline bool is_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.order() != b.order() || a.num_edges() != b.num_edges()) return false;
    return canonical_form(a) == canonical_form(b);
}

/// The graph relabelled into canonical position order.
inline SmallGraph canonical_relabel(const SmallGraph& g) {
    const Labeling l = canonical_labeling(g);
    return SmallGraph::from_rows_unchecked(l.order, l.canon_rows.data());
}

/// Minimum edge bitstring over all n! relabellings. Exponential; used as an
/// independent cross-check of the refined search for small orders.
inline CanonicalForm brute_force_canonical_form(const SmallGraph& g) {
    const int n = g.order();
    if (n > 9) throw std::invalid_argument("brute_force_canonical_form: order must be <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    CanonicalForm best;
    bool have = false;
    std::array<Row, kMaxOrder> rows{};
    do {
        for (int i = 0; i < n; ++i) {
            Row r = 0;
            for (int j = 0; j < n; ++j) {
                if (g.row(perm[i]) >> perm[j] & 1) r |= Row(1u << j);
            }
            rows[i] = r;
        }
        const CanonicalForm f = CanonicalForm::from_rows(n, rows.data());
        if (!have || f < best) {
            best = f;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace ramsey

#endif  // RAMSEY_CANON_HPP
