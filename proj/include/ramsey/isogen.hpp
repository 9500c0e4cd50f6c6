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

// Isomorph-free generation of all graphs of a given order by canonical
// augmentation (vertex addition).
//
// A graph C of order k+1 is produced from a parent P of order k by adding a
// vertex joined to a set X of P's vertices. X ranges over one representative
// of each Aut(P)-orbit of subsets, and C is kept only if the new vertex lies
// in the Aut(C)-orbit of C's canonical deletion vertex: among the vertices
// with the largest (degree, sum of neighbour degrees) the one that comes
// last in the canonical labelling. Every class is reached from exactly one
// parent class through exactly one subset orbit, so no dedup store is needed.
//
// Work is split into shards by numbering the nodes at a fixed split level of
// the generation tree in DFS order; shard i owns the nodes whose number is
// i modulo the shard count. A cursor remembers how far a shard got, so a run
// can be paused from the visitor and resumed later from a textual token.

#ifndef RAMSEY_ISOGEN_HPP
#define RAMSEY_ISOGEN_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "ramsey/canon.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Largest order supported by exhaustive enumeration.
inline constexpr int kMaxEnumerationOrder = 11;

struct CountReport {
    int order = 0;
    std::uint64_t unlabelled = 0;
    /// 2^C(N,2); exact for every supported order.
    std::uint64_t labelled = 0;
};

inline std::uint64_t labelled_count(int n) { return std::uint64_t{1} << num_pairs(n); }

/// Position of one shard within the generation tree.
struct GenerationCursor {
    int order = 0;
    int shard = 0;
    int shards = 1;
    int split_level = 1;
    /// First split-level ordinal (over all shards) not yet finished.
    std::uint64_t next_ordinal = 0;
    /// Graphs of the `next_ordinal` subtree already handed to a visitor.
    std::uint64_t skip = 0;
    bool finished = false;

    std::string checkpoint() const {
        std::ostringstream out;
        out << "isogen/1 order=" << order << " shard=" << shard << "/" << shards << " split=" << split_level
            << " next=" << next_ordinal << " skip=" << skip << " done=" << (finished ? 1 : 0);
        return out.str();
    }

    static GenerationCursor from_checkpoint(const std::string& token) {
        std::istringstream in(token);
        std::string version;
        in >> version;
        if (version != "isogen/1") throw std::invalid_argument("checkpoint: unsupported version '" + version + "'");
        GenerationCursor c;
        std::string field;
        int seen = 0;
        while (in >> field) {
            const size_t eq = field.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("checkpoint: malformed field '" + field + "'");
            const std::string key = field.substr(0, eq);
            const std::string value = field.substr(eq + 1);
            try {
                if (key == "order") {
                    c.order = std::stoi(value);
                } else if (key == "shard") {
                    const size_t slash = value.find('/');
                    if (slash == std::string::npos) throw std::invalid_argument("shard");
                    c.shard = std::stoi(value.substr(0, slash));
                    c.shards = std::stoi(value.substr(slash + 1));
                } else if (key == "split") {
                    c.split_level = std::stoi(value);
                } else if (key == "next") {
                    c.next_ordinal = std::stoull(value);
                } else if (key == "skip") {
                    c.skip = std::stoull(value);
                } else if (key == "done") {
                    c.finished = value == "1";
                } else {
                    throw std::invalid_argument(key);
                }
            } catch (const std::logic_error&) {
                throw std::invalid_argument("checkpoint: bad field '" + field + "'");
            }
            ++seen;
        }
        if (seen != 6 || c.order < 1 || c.order > kMaxEnumerationOrder || c.shards < 1 || c.shard < 0 ||
            c.shard >= c.shards || c.split_level < 1 || c.split_level > c.order) {
            throw std::invalid_argument("checkpoint: inconsistent token '" + token + "'");
        }
        return c;
    }
};

namespace detail {

// Applies a vertex permutation to a vertex subset.
inline std::uint32_t permute_mask(std::uint32_t mask, const Automorphism& g) {
    std::uint32_t out = 0;
    for (; mask; mask &= mask - 1) out |= 1u << g[std::countr_zero(mask)];
    return out;
}

class Augmenter {
   public:
    explicit Augmenter(int target) : target_(target) {
        gens_.resize(kMaxOrder + 1);
    }

    // Calls leaf(graph) for every accepted order-target graph below `ordinal`
    // filters; node(level) decides whether a split-level subtree is visited.
    // Returns false when the visitor asked to stop.
    template <typename NodeFilter, typename Leaf>
    bool run(NodeFilter&& node_filter, Leaf&& leaf) {
        SmallGraph root(1);
        gens_[1].clear();
        if (target_ == 1) {
            if (!node_filter(1)) return true;
            return leaf(root);
        }
        if (!node_filter(1)) return true;
        return expand(root, node_filter, leaf);
    }

   private:
    template <typename NodeFilter, typename Leaf>
    bool expand(const SmallGraph& parent, NodeFilter& node_filter, Leaf& leaf) {
        const int k = parent.order();
        const int child_order = k + 1;
        const bool last = child_order == target_;
        const std::vector<Automorphism>& gens = gens_[k];

        std::array<int, kMaxOrder> pdeg;
        int max_deg = 0;
        Row max_deg_vertices = 0;
        for (int v = 0; v < k; ++v) {
            pdeg[v] = parent.degree(v);
            if (pdeg[v] > max_deg) {
                max_deg = pdeg[v];
                max_deg_vertices = 0;
            }
            if (pdeg[v] == max_deg) max_deg_vertices |= Row(1u << v);
        }

        const std::uint32_t limit = 1u << k;
        std::vector<std::uint64_t>& visited = visited_[k];
        if (!gens.empty()) visited.assign((limit + 63) / 64, 0);
        std::vector<std::uint32_t>& stack = stack_[k];

        for (std::uint32_t x = 0; x < limit; ++x) {
            // The new vertex needs the largest degree in the child.
            const int d = std::popcount(x);
            if (d < max_deg || (d == max_deg && (x & max_deg_vertices))) continue;
            if (!gens.empty()) {
                if (visited[x >> 6] >> (x & 63) & 1) continue;
                stack.clear();
                stack.push_back(x);
                visited[x >> 6] |= std::uint64_t{1} << (x & 63);
                while (!stack.empty()) {
                    const std::uint32_t y = stack.back();
                    stack.pop_back();
                    for (const Automorphism& g : gens) {
                        const std::uint32_t z = permute_mask(y, g);
                        if (!(visited[z >> 6] >> (z & 63) & 1)) {
                            visited[z >> 6] |= std::uint64_t{1} << (z & 63);
                            stack.push_back(z);
                        }
                    }
                }
            }

            SmallGraph child = parent;
            child_rows(parent, x, child);
            const int verdict = quick_verdict(child, k);
            if (verdict < 0) continue;

            const Labeling* labeling = nullptr;
            if (verdict == 0 || !last) {
                labeling = &canonizer_[child_order].run(child);
                if (verdict == 0 && !is_canonical_deletion(child, *labeling, k)) continue;
            }

            if (last) {
                if (!node_filter(child_order)) continue;
                if (!leaf(child)) return false;
            } else {
                if (!node_filter(child_order)) continue;
                gens_[child_order] = labeling->generators;
                if (!expand(child, node_filter, leaf)) return false;
            }
        }
        return true;
    }

    static void child_rows(const SmallGraph& parent, std::uint32_t x, SmallGraph& child) {
        std::array<Row, kMaxOrder> rows{};
        const int k = parent.order();
        for (int v = 0; v < k; ++v) rows[v] = parent.row(v) | Row(((x >> v) & 1u) << k);
        rows[k] = static_cast<Row>(x);
        child = SmallGraph::from_rows_unchecked(k + 1, rows.data());
    }

    // +1: new vertex is the unique maximum of the cheap invariant (accept);
    // -1: some vertex beats it (reject); 0: tie, needs the canonical labelling.
    static int quick_verdict(const SmallGraph& c, int nv) {
        const int n = c.order();
        std::array<int, kMaxOrder> deg;
        for (int v = 0; v < n; ++v) deg[v] = c.degree(v);
        auto nsum = [&](int v) {
            int s = 0;
            for (Row rem = c.row(v); rem; rem &= rem - 1) s += deg[std::countr_zero(static_cast<unsigned>(rem))];
            return s;
        };
        const int dv = deg[nv];
        const int sv = nsum(nv);
        bool tie = false;
        for (int u = 0; u < nv; ++u) {
            if (deg[u] < dv) continue;
            if (deg[u] > dv) return -1;
            const int su = nsum(u);
            if (su > sv) return -1;
            if (su == sv) tie = true;
        }
        return tie ? 0 : 1;
    }

    static bool is_canonical_deletion(const SmallGraph& c, const Labeling& l, int nv) {
        const int n = c.order();
        std::array<int, kMaxOrder> deg;
        for (int v = 0; v < n; ++v) deg[v] = c.degree(v);
        auto key = [&](int v) {
            int s = 0;
            for (Row rem = c.row(v); rem; rem &= rem - 1) s += deg[std::countr_zero(static_cast<unsigned>(rem))];
            return (deg[v] << 16) | s;
        };
        const int kv = key(nv);
        // Among the tied vertices, the one placed last canonically.
        int chosen = -1;
        for (int p = n - 1; p >= 0 && chosen < 0; --p) {
            if (key(l.lab[p]) == kv) chosen = l.lab[p];
        }
        return l.orbit[chosen] == l.orbit[nv];
    }

    int target_;
    std::vector<std::vector<Automorphism>> gens_;
    std::array<Canonizer, kMaxOrder + 1> canonizer_;
    std::array<std::vector<std::uint64_t>, kMaxOrder + 1> visited_;
    std::array<std::vector<std::uint32_t>, kMaxOrder + 1> stack_;
};

inline void check_enumeration_order(int n) {
    if (n < 1 || n > kMaxEnumerationOrder) {
        throw std::invalid_argument("enumeration order must be in 1.." + std::to_string(kMaxEnumerationOrder) +
                                    ", got " + std::to_string(n));
    }
}

}  // namespace detail

/// Visits one graph per isomorphism class of order n. The visitor may return
/// void, or bool where false stops the enumeration early.
template <typename Visitor>
CountReport enumerate_unlabelled(int n, Visitor&& visitor) {
    detail::check_enumeration_order(n);
    CountReport report{n, 0, labelled_count(n)};
    detail::Augmenter aug(n);
    aug.run([](int) { return true; },
            [&](const SmallGraph& g) {
                ++report.unlabelled;
                if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const SmallGraph&>, bool>) {
                    return static_cast<bool>(visitor(g));
                } else {
                    visitor(g);
                    return true;
                }
            });
    return report;
}

inline CountReport count_unlabelled(int n) {
    return enumerate_unlabelled(n, [](const SmallGraph&) {});
}

/// Number of classes at each order, memoized (used to choose split levels).
inline std::uint64_t cached_class_count(int n) {
    static std::mutex mu;
    static std::map<int, std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const std::uint64_t c = count_unlabelled(n).unlabelled;
    cache[n] = c;
    return c;
}

/// Split level used for `shards` shards of an order-n enumeration: the first
/// level with at least four nodes per shard, else the leaves themselves.
inline int split_level_for(int n, int shards) {
    for (int level = 1; level < n && level <= 8; ++level) {
        if (cached_class_count(level) >= 4 * static_cast<std::uint64_t>(shards)) return level;
    }
    return n;
}

/// Cursors whose visits partition the order-n classes.
inline std::vector<GenerationCursor> shard_enumeration(int n, int shards) {
    detail::check_enumeration_order(n);
    if (shards < 1) throw std::invalid_argument("shard_enumeration: shards must be >= 1");
    const int split = split_level_for(n, shards);
    std::vector<GenerationCursor> out;
    for (int i = 0; i < shards; ++i) {
        GenerationCursor c;
        c.order = n;
        c.shard = i;
        c.shards = shards;
        c.split_level = split;
        out.push_back(c);
    }
    return out;
}

/// Runs (or resumes) one cursor. The visitor returns false to pause; the
/// cursor is then left pointing just past the last delivered graph. Returns
/// the number of graphs delivered in this call.
template <typename Visitor>
std::uint64_t run_cursor(GenerationCursor& cursor, Visitor&& visitor) {
    detail::check_enumeration_order(cursor.order);
    if (cursor.finished) return 0;
    detail::Augmenter aug(cursor.order);
    std::uint64_t ordinal = 0;       // split-level nodes seen so far
    std::uint64_t current = 0;       // ordinal of the subtree being walked
    std::uint64_t emitted_here = 0;  // graphs produced inside `current`
    std::uint64_t delivered = 0;
    bool inside = false;
    const std::uint64_t shards = static_cast<std::uint64_t>(cursor.shards);

    const bool complete = aug.run(
        [&](int level) {
            if (level != cursor.split_level) return true;
            current = ordinal++;
            emitted_here = 0;
            inside = current % shards == static_cast<std::uint64_t>(cursor.shard) && current >= cursor.next_ordinal;
            if (inside && current > cursor.next_ordinal) cursor.skip = 0;
            return inside;
        },
        [&](const SmallGraph& g) {
            ++emitted_here;
            if (current == cursor.next_ordinal && emitted_here <= cursor.skip) return true;
            ++delivered;
            bool keep_going = true;
            if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const SmallGraph&>, bool>) {
                keep_going = visitor(g);
            } else {
                visitor(g);
            }
            if (!keep_going) {
                cursor.next_ordinal = current;
                cursor.skip = emitted_here;
            }
            return keep_going;
        });
    if (complete) {
        cursor.finished = true;
        cursor.next_ordinal = ordinal;
        cursor.skip = 0;
    }
    return delivered;
}

/// Runs every shard of an order-n enumeration on up to `threads` threads.
/// make_worker(shard_index) must return a callable visitor used only by
/// that shard; results are combined by the caller in shard order.
template <typename WorkerFactory>
void run_sharded(int n, int shards, int threads, WorkerFactory&& make_worker) {
    std::vector<GenerationCursor> cursors = shard_enumeration(n, shards);
    if (threads <= 1 || shards == 1) {
        for (GenerationCursor& c : cursors) {
            auto worker = make_worker(c.shard);
            run_cursor(c, worker);
        }
        return;
    }
    std::mutex mu;
    int next = 0;
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    for (int t = 0; t < std::min(threads, shards); ++t) {
        pool.emplace_back([&] {
            for (;;) {
                int mine;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= shards || failure) return;
                    mine = next++;
                }
                try {
                    auto worker = make_worker(mine);
                    run_cursor(cursors[mine], worker);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mu);
                    failure = std::current_exception();
                }
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace ramsey

#endif  // RAMSEY_ISOGEN_HPP
