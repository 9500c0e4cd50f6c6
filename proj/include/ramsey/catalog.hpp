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

// Free trees of small order and the named families P_n, K_{1,k} and the
// double stars S^(k)_{a,b} (stars K_{1,a}, K_{1,b} whose centres are joined
// by a path on k vertices).

#ifndef RAMSEY_CATALOG_HPP
#define RAMSEY_CATALOG_HPP

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_set>
#include <variant>
#include <vector>

#include "ramsey/canon.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

inline constexpr int kMaxTreeOrder = 10;

struct PathSpec {
    int n = 0;
};
struct StarSpec {
    int leaves = 0;
};
struct DoubleStarSpec {
    int k = 0;
    int a = 0;
    int b = 0;
};
struct CatalogRef {
    int order = 0;
    int index = 0;  // 1-based
};
struct ExplicitGraph {
    SmallGraph graph{1};
};

using FamilySpec = std::variant<PathSpec, StarSpec, DoubleStarSpec, CatalogRef, ExplicitGraph>;

struct TreeClass {
    int order = 0;
    int index = 0;  // 1-based position in the catalog
    SmallGraph representative{1};
    CanonicalForm form;
    std::vector<std::string> names;

    /// "T6.3" style handle, or the first family name when one exists.
    std::string label() const { return "T" + std::to_string(order) + "." + std::to_string(index); }
};

inline std::string path_name(int n) { return "P_" + std::to_string(n); }
inline std::string star_name(int k) { return "K_{1," + std::to_string(k) + "}"; }
inline std::string double_star_name(int k, int a, int b) {
    if (a < b) std::swap(a, b);
    return "S^(" + std::to_string(k) + ")_{" + std::to_string(a) + "," + std::to_string(b) + "}";
}

inline SmallGraph build_path(int n) {
    if (n < 2 || n > kMaxOrder) throw std::invalid_argument("Path: need 2 <= n <= 16");
    SmallGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline SmallGraph build_star(int k) {
    if (k < 1 || k + 1 > kMaxOrder) throw std::invalid_argument("Star: need 1 <= k <= 15 leaves");
    SmallGraph g(k + 1);
    for (int i = 1; i <= k; ++i) g.add_edge(0, i);
    return g;
}

inline SmallGraph build_double_star(int k, int a, int b) {
    if (k < 2 || a < 1 || b < 1) throw std::invalid_argument("DoubleStar: need k >= 2 and a, b >= 1");
    if (a + b + k > kMaxOrder) throw std::invalid_argument("DoubleStar: order a+b+k exceeds 16");
    SmallGraph g(a + b + k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    int next = k;
    for (int i = 0; i < a; ++i) g.add_edge(0, next++);
    for (int i = 0; i < b; ++i) g.add_edge(k - 1, next++);
    return g;
}

const std::vector<TreeClass>& tree_catalog(int m);

inline SmallGraph build_family(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> SmallGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) {
                return build_path(s.n);
            } else if constexpr (std::is_same_v<T, StarSpec>) {
                return build_star(s.leaves);
            } else if constexpr (std::is_same_v<T, DoubleStarSpec>) {
                return build_double_star(s.k, s.a, s.b);
            } else if constexpr (std::is_same_v<T, CatalogRef>) {
                const auto& cat = tree_catalog(s.order);
                if (s.index < 1 || s.index > static_cast<int>(cat.size())) {
                    throw std::invalid_argument("CatalogRef: order " + std::to_string(s.order) + " has " +
                                                std::to_string(cat.size()) + " classes, index " +
                                                std::to_string(s.index) + " is out of range");
                }
                return cat[s.index - 1].representative;
            } else {
                return s.graph;
            }
        },
        spec);
}

inline bool is_path_graph(const SmallGraph& g) {
    if (g.order() < 2 || !g.is_tree()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) return false;
    }
    return true;
}

inline bool is_star_graph(const SmallGraph& g) {
    if (g.order() < 2 || !g.is_tree()) return false;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == g.order() - 1) return true;
    }
    return false;
}

/// Every (k, a, b) with a >= b and S^(k)_{a,b} isomorphic to g.
inline std::vector<DoubleStarSpec> double_star_shapes(const SmallGraph& g) {
    std::vector<DoubleStarSpec> out;
    const int m = g.order();
    if (!g.is_tree() || m < 4) return out;
    const CanonicalForm f = canonical_form(g);
    for (int k = m - 2; k >= 2; --k) {
        for (int a = m - k - 1; a >= 1; --a) {
            const int b = m - k - a;
            if (b < 1 || b > a) continue;
            if (canonical_form(build_double_star(k, a, b)) == f) out.push_back({k, a, b});
        }
    }
    return out;
}

/// Family identities of a tree, path first, then star, then double stars.
inline std::vector<std::string> family_names(const SmallGraph& g) {
    std::vector<std::string> names;
    if (is_path_graph(g)) names.push_back(path_name(g.order()));
    if (is_star_graph(g)) names.push_back(star_name(g.order() - 1));
    for (const DoubleStarSpec& s : double_star_shapes(g)) names.push_back(double_star_name(s.k, s.a, s.b));
    return names;
}

namespace detail {

inline void check_tree_order(int m) {
    if (m < 2 || m > kMaxTreeOrder) {
        throw std::invalid_argument("tree order must be in 2.." + std::to_string(kMaxTreeOrder) + ", got " +
                                    std::to_string(m));
    }
}

// Canonical forms of all trees of order m, grown by attaching one leaf at a
// time and deduplicating.
inline std::vector<CanonicalForm> tree_forms(int m) {
    std::vector<CanonicalForm> level = {canonical_form(build_path(2))};
    for (int order = 3; order <= m; ++order) {
        std::unordered_set<CanonicalForm, CanonicalFormHash> next;
        for (const CanonicalForm& f : level) {
            const SmallGraph t = f.graph();
            for (int v = 0; v < t.order(); ++v) {
                std::array<Row, kMaxOrder> rows{};
                for (int u = 0; u < t.order(); ++u) rows[u] = t.row(u);
                rows[v] |= Row(1u << t.order());
                rows[t.order()] = Row(1u << v);
                next.insert(canonical_form(SmallGraph::from_rows_unchecked(order, rows.data())));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::sort(level.begin(), level.end());
    return level;
}

}  // namespace detail

/// The non-isomorphic trees of order m in canonical-form order.
inline std::vector<TreeClass> generate_free_trees(int m) {
    detail::check_tree_order(m);
    std::vector<TreeClass> out;
    int index = 1;
    for (const CanonicalForm& f : detail::tree_forms(m)) {
        TreeClass c;
        c.order = m;
        c.index = index++;
        c.form = f;
        c.representative = f.graph();
        c.names = family_names(c.representative);
        out.push_back(std::move(c));
    }
    return out;
}

/// Memoized generate_free_trees.
inline const std::vector<TreeClass>& tree_catalog(int m) {
    detail::check_tree_order(m);
    static std::mutex mu;
    static std::map<int, std::unique_ptr<std::vector<TreeClass>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[m];
    if (!slot) slot = std::make_unique<std::vector<TreeClass>>(generate_free_trees(m));
    return *slot;
}

/// The catalog class isomorphic to build_family(spec).
inline TreeClass resolve_class(const FamilySpec& spec, int m) {
    const SmallGraph g = build_family(spec);
    if (g.order() != m || !g.is_tree()) {
        throw std::invalid_argument("resolve_class: spec does not build a tree of order " + std::to_string(m));
    }
    const CanonicalForm f = canonical_form(g);
    for (const TreeClass& c : tree_catalog(m)) {
        if (c.form == f) return c;
    }
    throw std::logic_error("resolve_class: tree missing from catalog");
}

}  // namespace ramsey

#endif  // RAMSEY_CATALOG_HPP
