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

// The Ramsey objective of a red/blue coloring e of K_N:
//
//   O(e; G, H) = #{|V_G|-subsets whose red graph contains G}
//              + #{|V_H|-subsets whose blue graph contains H}
//
// "Contains" is spanning containment: some bijection sends every pattern
// edge onto a host edge, extra host edges allowed. The objective is zero
// exactly when e has neither a red G nor a blue H.
//
// Two lookup structures answer "does this p-vertex host contain the
// pattern". IsoLookupTable keys on canonical forms and has one entry per
// unlabelled host. DenseTable has one bit per labelled host, indexed by the
// host's edge code in colex pair order (pair a<b is bit b(b-1)/2 + a), so a
// subset's code can be assembled row by row with one bit-extract per vertex
// and no canonical labelling at all. The hot loops use the dense table; the
// canonical-form table is the reference it is tested against.

#ifndef RAMSEY_OBJECTIVE_HPP
#define RAMSEY_OBJECTIVE_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#if defined(__BMI2__)
#include <immintrin.h>
#endif

#include "ramsey/canon.hpp"
#include "ramsey/containment.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/isogen.hpp"

namespace ramsey {

/// Largest pattern order with lookup tables (2^28 labelled hosts at 8).
inline constexpr int kMaxPatternOrder = 8;

struct ObjectiveValue {
    std::int64_t total = 0;
    std::int64_t red = 0;
    std::int64_t blue = 0;
    friend bool operator==(const ObjectiveValue&, const ObjectiveValue&) = default;
};

namespace detail {

inline std::uint32_t extract_bits(std::uint32_t x, std::uint32_t mask) {
#if defined(__BMI2__)
    return _pext_u32(x, mask);
#else
    std::uint32_t out = 0;
    int k = 0;
    for (; mask; mask &= mask - 1, ++k) out |= ((x >> std::countr_zero(mask)) & 1u) << k;
    return out;
#endif
}

constexpr int colex_offset(int b) { return b * (b - 1) / 2; }

inline void check_pattern(const SmallGraph& pattern) {
    if (pattern.order() > kMaxPatternOrder) {
        throw std::invalid_argument("pattern order " + std::to_string(pattern.order()) + " exceeds the table limit of " +
                                    std::to_string(kMaxPatternOrder));
    }
    if (pattern.num_edges() == 0) {
        throw std::invalid_argument("edgeless pattern rejected: the objective would be positive for every coloring");
    }
}

}  // namespace detail

/// Canonical form of each unlabelled host of the pattern's order mapped to
/// "contains the pattern".
class IsoLookupTable {
   public:
    IsoLookupTable() = default;

    int order() const { return pattern_.order(); }
    const SmallGraph& pattern() const { return pattern_; }
    size_t size() const { return entries_.size(); }

    bool contains(const SmallGraph& host) const {
        if (host.order() != order()) throw std::invalid_argument("IsoLookupTable: host order mismatch");
        return entries_.at(canonical_form(host));
    }

    const std::unordered_map<CanonicalForm, bool, CanonicalFormHash>& entries() const { return entries_; }

   private:
    friend IsoLookupTable build_lookup(const SmallGraph& pattern);
    SmallGraph pattern_{1};
    std::unordered_map<CanonicalForm, bool, CanonicalFormHash> entries_;
};

inline IsoLookupTable build_lookup(const SmallGraph& pattern) {
    detail::check_pattern(pattern);
    IsoLookupTable t;
    t.pattern_ = pattern;
    enumerate_unlabelled(pattern.order(), [&](const SmallGraph& host) {
        t.entries_.emplace(canonical_form(host), contains_spanning(host, pattern));
    });
    return t;
}

/// One bit per labelled host of order p, addressed by colex edge code.
class DenseTable {
   public:
    int order() const { return order_; }
    int pairs() const { return pairs_; }
    std::uint32_t full_code() const { return pairs_ == 32 ? ~0u : ((1u << pairs_) - 1u); }

    bool test(std::uint32_t code) const { return (words_[code >> 6] >> (code & 63)) & 1u; }

    static std::uint32_t code_of(const SmallGraph& host) {
        std::uint32_t code = 0;
        for (int b = 1; b < host.order(); ++b) {
            code |= static_cast<std::uint32_t>(host.row(b) & ((1u << b) - 1u)) << detail::colex_offset(b);
        }
        return code;
    }

    static DenseTable build(const SmallGraph& pattern) {
        detail::check_pattern(pattern);
        DenseTable t;
        t.order_ = pattern.order();
        t.pairs_ = num_pairs(t.order_);
        const std::uint64_t bits = std::uint64_t{1} << t.pairs_;
        t.words_.assign(std::max<std::uint64_t>(1, bits / 64), 0);

        // Every labelled copy of the pattern...
        std::vector<int> perm(t.order_);
        std::iota(perm.begin(), perm.end(), 0);
        const auto edges = pattern.edges();
        do {
            std::uint32_t code = 0;
            for (auto [u, v] : edges) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                code |= 1u << (detail::colex_offset(b) + a);
            }
            t.words_[code >> 6] |= std::uint64_t{1} << (code & 63);
        } while (std::next_permutation(perm.begin(), perm.end()));

        // ...then close upwards: a host contains the pattern iff it contains
        // some labelled copy.
        static constexpr std::uint64_t kLow[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                                  0x0F0F0F0F0F0F0F0Full, 0x00FF00FF00FF00FFull,
                                                  0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};
        for (int i = 0; i < t.pairs_; ++i) {
            if (i < 6) {
                for (std::uint64_t& w : t.words_) w |= (w & kLow[i]) << (1 << i);
            } else {
                const size_t stride = size_t{1} << (i - 6);
                for (size_t w = 0; w < t.words_.size(); ++w) {
                    if (!(w & stride)) t.words_[w | stride] |= t.words_[w];
                }
            }
        }
        return t;
    }

   private:
    int order_ = 0;
    int pairs_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Both tables of one pattern, built once and shared.
struct PatternTables {
    SmallGraph pattern{1};
    IsoLookupTable iso;
    DenseTable dense;
};

/// Memoized per isomorphism class of pattern.
inline std::shared_ptr<const PatternTables> pattern_tables(const SmallGraph& pattern) {
    detail::check_pattern(pattern);
    static std::mutex mu;
    static std::map<CanonicalForm, std::shared_ptr<const PatternTables>> cache;
    const CanonicalForm key = canonical_form(pattern);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto t = std::make_shared<PatternTables>();
    t->pattern = pattern;
    t->iso = build_lookup(pattern);
    t->dense = DenseTable::build(pattern);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(t)).first->second;
}

/// (N, G, H) with the lookup tables of both patterns.
class ObjectiveContext {
   public:
    ObjectiveContext(int n, const SmallGraph& red_pattern, const SmallGraph& blue_pattern)
        : n_(n), red_(pattern_tables(red_pattern)), blue_(pattern_tables(blue_pattern)) {
        if (n < 1 || n > kMaxOrder) throw std::invalid_argument("ObjectiveContext: order must be in 1..16");
    }

    /// Same patterns (and tables) at another order.
    ObjectiveContext at_order(int n) const {
        ObjectiveContext c = *this;
        if (n < 1 || n > kMaxOrder) throw std::invalid_argument("ObjectiveContext: order must be in 1..16");
        c.n_ = n;
        return c;
    }

    int order() const { return n_; }
    const SmallGraph& red_pattern() const { return red_->pattern; }
    const SmallGraph& blue_pattern() const { return blue_->pattern; }
    const IsoLookupTable& red_table() const { return red_->iso; }
    const IsoLookupTable& blue_table() const { return blue_->iso; }
    const DenseTable& red_dense() const { return red_->dense; }
    const DenseTable& blue_dense() const { return blue_->dense; }

   private:
    int n_;
    std::shared_ptr<const PatternTables> red_;
    std::shared_ptr<const PatternTables> blue_;
};

/// Whether the red graph on S contains G (canonical-form lookup).
inline bool f_red(const Coloring& e, const VertexSubset& s, const ObjectiveContext& ctx) {
    if (s.size() != ctx.red_pattern().order()) throw std::invalid_argument("f_red: |S| must equal |V_G|");
    return ctx.red_table().contains(subgraph_on(e, s, Color::kRed));
}

/// Whether the blue graph on S contains H (canonical-form lookup).
inline bool f_blue(const Coloring& e, const VertexSubset& s, const ObjectiveContext& ctx) {
    if (s.size() != ctx.blue_pattern().order()) throw std::invalid_argument("f_blue: |S| must equal |V_H|");
    return ctx.blue_table().contains(subgraph_on(e, s, Color::kBlue));
}

namespace detail {

// Counts the p-subsets of {0..n-1} whose induced code (from `rows`) is in
// the table, giving up as soon as the count exceeds `bound`.
class SubsetCounter {
   public:
    SubsetCounter(const Row* rows, int n, const DenseTable& table, std::int64_t bound)
        : rows_(rows), n_(n), p_(table.order()), table_(table), bound_(bound) {}

    std::int64_t run() {
        if (p_ > n_) return 0;
        walk(0, 0, 0, 0);
        return count_;
    }

   private:
    bool walk(int depth, int start, std::uint32_t code, std::uint32_t prefix) {
        const int shift = colex_offset(depth);
        if (depth == p_ - 1) {
            for (int v = start; v < n_; ++v) {
                const std::uint32_t c = code | (extract_bits(rows_[v], prefix) << shift);
                if (table_.test(c) && ++count_ > bound_) return false;
            }
            return true;
        }
        for (int v = start; v <= n_ - (p_ - depth); ++v) {
            const std::uint32_t c = code | (extract_bits(rows_[v], prefix) << shift);
            if (!walk(depth + 1, v + 1, c, prefix | (1u << v))) return false;
        }
        return true;
    }

    const Row* rows_;
    int n_;
    int p_;
    const DenseTable& table_;
    std::int64_t bound_;
    std::int64_t count_ = 0;
};

}  // namespace detail

/// Number of |V_G|-subsets of the host rows whose graph contains the pattern
/// of `table`, stopping once it exceeds `bound`.
inline std::int64_t count_containing_subsets(const Row* rows, int n, const DenseTable& table,
                                             std::int64_t bound = INT64_MAX) {
    return detail::SubsetCounter(rows, n, table, bound).run();
}

/// Objective of the coloring whose red graph is `red`. When the total
/// exceeds `bound` the evaluation stops early and the returned total is only
/// known to be > bound.
inline ObjectiveValue evaluate_red_graph(const SmallGraph& red, const ObjectiveContext& ctx,
                                         std::int64_t bound = INT64_MAX) {
    if (red.order() != ctx.order()) throw std::invalid_argument("evaluate: coloring order differs from context");
    const int n = red.order();
    std::array<Row, kMaxOrder> blue_rows{};
    const Row full = SmallGraph::full_mask(n);
    for (int v = 0; v < n; ++v) blue_rows[v] = static_cast<Row>(~red.row(v) & full & ~(1u << v));
    ObjectiveValue out;
    out.red = count_containing_subsets(red.row_data(), n, ctx.red_dense(), bound);
    if (out.red > bound) {
        out.total = out.red;
        return out;
    }
    out.blue = count_containing_subsets(blue_rows.data(), n, ctx.blue_dense(), bound - out.red);
    out.total = out.red + out.blue;
    return out;
}

/// Full objective value (Eq. 2 + Eq. 3 summed over every subset).
inline ObjectiveValue evaluate(const Coloring& e, const ObjectiveContext& ctx) {
    if (e.order() != ctx.order()) throw std::invalid_argument("evaluate: coloring order differs from context");
    return evaluate_red_graph(e.red_graph(), ctx);
}

/// Objective computed subset by subset through the canonical-form tables.
/// Slow; a reference for the dense path.
inline ObjectiveValue evaluate_by_lookup(const Coloring& e, const ObjectiveContext& ctx) {
    if (e.order() != ctx.order()) throw std::invalid_argument("evaluate: coloring order differs from context");
    ObjectiveValue out;
    auto each_subset = [&](int p, auto&& fn) {
        if (p > e.order()) return;
        std::vector<int> s(p);
        std::iota(s.begin(), s.end(), 0);
        for (;;) {
            fn(VertexSubset(e.order(), s));
            int i = p - 1;
            while (i >= 0 && s[i] == e.order() - p + i) --i;
            if (i < 0) break;
            ++s[i];
            for (int j = i + 1; j < p; ++j) s[j] = s[j - 1] + 1;
        }
    };
    each_subset(ctx.red_pattern().order(), [&](const VertexSubset& s) { out.red += f_red(e, s, ctx) ? 1 : 0; });
    each_subset(ctx.blue_pattern().order(), [&](const VertexSubset& s) { out.blue += f_blue(e, s, ctx) ? 1 : 0; });
    out.total = out.red + out.blue;
    return out;
}

/// All p-subsets of {0..n-1} and, per edge, the subsets containing both of
/// its endpoints together with the edge's bit in the subset's colex code.
struct SubsetIndex {
    int n = 0;
    int p = 0;
    std::vector<Row> subsets;
    std::vector<std::uint32_t> edge_begin;  // size L+1
    std::vector<std::uint32_t> incident_subset;
    std::vector<std::uint32_t> incident_bit;

    static std::shared_ptr<const SubsetIndex> get(int n, int p) {
        static std::mutex mu;
        static std::map<std::pair<int, int>, std::shared_ptr<const SubsetIndex>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[{n, p}];
        if (!slot) slot = std::make_shared<const SubsetIndex>(build(n, p));
        return slot;
    }

    static SubsetIndex build(int n, int p) {
        SubsetIndex idx;
        idx.n = n;
        idx.p = p;
        const int pairs = num_pairs(n);
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_edge(std::max(pairs, 0));
        if (p <= n && p >= 2) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (std::popcount(mask) != p) continue;
                const auto sid = static_cast<std::uint32_t>(idx.subsets.size());
                idx.subsets.push_back(static_cast<Row>(mask));
                int members[kMaxOrder];
                int k = 0;
                for (std::uint32_t rem = mask; rem; rem &= rem - 1) members[k++] = std::countr_zero(rem);
                for (int b = 1; b < p; ++b) {
                    for (int a = 0; a < b; ++a) {
                        const int e = edge_index(members[a], members[b], n);
                        per_edge[e].push_back({sid, 1u << (detail::colex_offset(b) + a)});
                    }
                }
            }
        }
        idx.edge_begin.push_back(0);
        for (const auto& list : per_edge) {
            for (auto [sid, bit] : list) {
                idx.incident_subset.push_back(sid);
                idx.incident_bit.push_back(bit);
            }
            idx.edge_begin.push_back(static_cast<std::uint32_t>(idx.incident_subset.size()));
        }
        return idx;
    }
};

/// Cached per-subset codes of one coloring, supporting O(C(N-2,p-2)) move
/// gains and flips. Owned by one search thread.
class DeltaCache {
   public:
    DeltaCache(const ObjectiveContext& ctx, const Coloring& e)
        : ctx_(ctx), e_(e), red_(ctx.order(), ctx.red_dense(), false), blue_(ctx.order(), ctx.blue_dense(), true) {
        if (e.order() != ctx.order()) throw std::invalid_argument("DeltaCache: coloring order differs from context");
        red_.reset(e_);
        blue_.reset(e_);
        checksum_ = checksum_of(e_);
    }

    const Coloring& coloring() const { return e_; }
    std::uint64_t checksum() const { return checksum_; }

    ObjectiveValue value() const { return {red_.hits + blue_.hits, red_.hits, blue_.hits}; }

    /// Change in the total objective if edge k were flipped.
    std::int64_t gain(int k) const { return red_.gain(k) + blue_.gain(k); }

    void flip(int k) {
        red_.flip(k);
        blue_.flip(k);
        e_.flip(k);
        checksum_ = checksum_of(e_);
    }

    static std::uint64_t checksum_of(const Coloring& e) {
        std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(e.order());
        for (std::uint64_t w : e.words()) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 31;
        }
        return h;
    }

   private:
    struct Side {
        Side(int n, const DenseTable& t, bool is_blue)
            : index(SubsetIndex::get(n, t.order())), table(&t), blue(is_blue), mask(t.full_code()) {}

        std::shared_ptr<const SubsetIndex> index;
        const DenseTable* table;
        bool blue;
        std::uint32_t mask;
        std::vector<std::uint32_t> codes;  // colex codes of the red graph
        std::int64_t hits = 0;

        bool hit(std::uint32_t code) const { return table->test(blue ? (~code & mask) : code); }

        void reset(const Coloring& e) {
            const SmallGraph red = e.red_graph();
            codes.assign(index->subsets.size(), 0);
            hits = 0;
            for (size_t s = 0; s < codes.size(); ++s) {
                std::uint32_t code = 0;
                std::uint32_t prefix = 0;
                int b = 0;
                for (Row rem = index->subsets[s]; rem; rem &= rem - 1, ++b) {
                    const int v = std::countr_zero(static_cast<unsigned>(rem));
                    code |= detail::extract_bits(red.row(v), prefix) << detail::colex_offset(b);
                    prefix |= 1u << v;
                }
                codes[s] = code;
                hits += hit(code) ? 1 : 0;
            }
        }

        std::int64_t gain(int k) const {
            std::int64_t g = 0;
            for (std::uint32_t i = index->edge_begin[k]; i < index->edge_begin[k + 1]; ++i) {
                const std::uint32_t c = codes[index->incident_subset[i]];
                g += static_cast<int>(hit(c ^ index->incident_bit[i])) - static_cast<int>(hit(c));
            }
            return g;
        }

        void flip(int k) {
            for (std::uint32_t i = index->edge_begin[k]; i < index->edge_begin[k + 1]; ++i) {
                std::uint32_t& c = codes[index->incident_subset[i]];
                const bool before = hit(c);
                c ^= index->incident_bit[i];
                hits += static_cast<int>(hit(c)) - static_cast<int>(before);
            }
        }
    };

    ObjectiveContext ctx_;
    Coloring e_;
    Side red_;
    Side blue_;
    std::uint64_t checksum_ = 0;
};

/// Flips {i, j} (zero-based) in the cached coloring, which must equal e,
/// and returns the objective of the flipped coloring.
inline ObjectiveValue evaluate_delta(const Coloring& e, int i, int j, const ObjectiveContext& ctx, DeltaCache& cache) {
    if (e.order() != ctx.order()) throw std::invalid_argument("evaluate_delta: coloring order differs from context");
    if (cache.checksum() != DeltaCache::checksum_of(e) || !(cache.coloring() == e)) {
        throw std::logic_error("evaluate_delta: stale cache (cached coloring differs from the given one)");
    }
    cache.flip(edge_index(std::min(i, j), std::max(i, j), e.order()));
    return cache.value();
}

}  // namespace ramsey

#endif  // RAMSEY_OBJECTIVE_HPP
