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

#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramsey {

/// Largest supported graph order. One adjacency row fits a 16-bit word.
inline constexpr int kMaxOrder = 16;

using Row = std::uint16_t;

constexpr int num_pairs(int n) { return n * (n - 1) / 2; }

/// Position of pair {i, j} (zero-based, i < j) in the lexicographic pair order
/// (0,1), (0,2), ..., (n-2,n-1). This is the bit order of a Coloring string.
inline int edge_index(int i, int j, int n) {
    if (n < 2 || n > kMaxOrder || i < 0 || i >= j || j >= n) {
        throw std::invalid_argument(
            "edge_index: need 0 <= i < j < n <= 16, got i=" + std::to_string(i) + " j=" + std::to_string(j) +
            " n=" + std::to_string(n));
    }
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Inverse of edge_index.
inline std::pair<int, int> edge_pair(int index, int n) {
    if (index < 0 || index >= num_pairs(n)) {
        throw std::invalid_argument("edge_pair: index out of range");
    }
    int i = 0;
    int row_len = n - 1;
    while (index >= row_len) {
        index -= row_len;
        ++i;
        --row_len;
    }
    return {i, i + 1 + index};
}

/// Vertex-labelled simple graph of order 1..16 stored as adjacency bit rows.
class SmallGraph {
   public:
    SmallGraph() = default;

    explicit SmallGraph(int order) : order_(order) {
        if (order < 1 || order > kMaxOrder) {
            throw std::invalid_argument("SmallGraph: order must be in 1..16, got " + std::to_string(order));
        }
    }

    /// Builds a graph from adjacency rows, checking symmetry and irreflexivity.
    static SmallGraph from_rows(int order, std::span<const Row> rows) {
        SmallGraph g(order);
        if (static_cast<int>(rows.size()) < order) {
            throw std::invalid_argument("SmallGraph: too few rows");
        }
        const Row mask = full_mask(order);
        for (int u = 0; u < order; ++u) {
            if ((rows[u] & ~mask) != 0 || (rows[u] >> u & 1) != 0) {
                throw std::invalid_argument("SmallGraph: row " + std::to_string(u) + " has invalid bits");
            }
            g.rows_[u] = rows[u];
        }
        for (int u = 0; u < order; ++u) {
            for (int v = 0; v < order; ++v) {
                if ((g.rows_[u] >> v & 1) != (g.rows_[v] >> u & 1)) {
                    throw std::invalid_argument("SmallGraph: adjacency is not symmetric");
                }
            }
        }
        return g;
    }

    /// Trusted construction for hot paths; rows must already be a valid adjacency.
    static SmallGraph from_rows_unchecked(int order, const Row* rows) {
        SmallGraph g;
        g.order_ = order;
        std::copy(rows, rows + order, g.rows_.begin());
        return g;
    }

    static SmallGraph from_edges(int order, std::span<const std::pair<int, int>> edges) {
        SmallGraph g(order);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    static SmallGraph complete(int order) {
        SmallGraph g(order);
        const Row mask = full_mask(order);
        for (int u = 0; u < order; ++u) g.rows_[u] = mask & ~Row(1u << u);
        return g;
    }

    static constexpr Row full_mask(int order) { return static_cast<Row>((1u << order) - 1u); }

    int order() const { return order_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[u] >> v & 1) != 0;
    }

    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }

    void set_edge(int u, int v, bool present) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("SmallGraph: self loops are not allowed");
        if (present) {
            rows_[u] |= Row(1u << v);
            rows_[v] |= Row(1u << u);
        } else {
            rows_[u] &= Row(~(1u << v));
            rows_[v] &= Row(~(1u << u));
        }
    }

    Row row(int u) const { return rows_[u]; }
    std::span<const Row> rows() const { return {rows_.data(), static_cast<size_t>(order_)}; }
    const Row* row_data() const { return rows_.data(); }

    int degree(int u) const { return std::popcount(static_cast<unsigned>(rows_[u])); }

    int num_edges() const {
        int twice = 0;
        for (int u = 0; u < order_; ++u) twice += degree(u);
        return twice / 2;
    }

    /// Degrees sorted in non-increasing order.
    std::vector<int> degree_sequence() const {
        std::vector<int> d(order_);
        for (int u = 0; u < order_; ++u) d[u] = degree(u);
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }

    SmallGraph complement() const {
        SmallGraph g(order_);
        const Row mask = full_mask(order_);
        for (int u = 0; u < order_; ++u) g.rows_[u] = mask & ~rows_[u] & ~Row(1u << u);
        return g;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < order_; ++u) {
            for (int v = u + 1; v < order_; ++v) {
                if (rows_[u] >> v & 1) out.emplace_back(u, v);
            }
        }
        return out;
    }

    bool is_connected() const {
        Row seen = 1, frontier = 1;
        while (frontier) {
            Row next = 0;
            for (Row f = frontier; f; f &= f - 1) next |= rows_[std::countr_zero(static_cast<unsigned>(f))];
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == full_mask(order_);
    }

    bool is_tree() const { return num_edges() == order_ - 1 && is_connected(); }

    friend bool operator==(const SmallGraph& a, const SmallGraph& b) {
        return a.order_ == b.order_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.order_, b.rows_.begin());
    }

   private:
    void check_vertex(int u) const {
        if (u < 0 || u >= order_) {
            throw std::invalid_argument("SmallGraph: vertex " + std::to_string(u) + " out of range for order " +
                                        std::to_string(order_));
        }
    }

    int order_ = 1;
    std::array<Row, kMaxOrder> rows_{};
};

/// Red/blue coloring of the edges of K_N. Bit k (edge_index order) is 1 when
/// the edge is red and 0 when it is blue.
class Coloring {
   public:
    Coloring() = default;

    /// All-blue coloring.
    explicit Coloring(int order) : order_(order) {
        if (order < 1 || order > kMaxOrder) {
            throw std::invalid_argument("Coloring: order must be in 1..16, got " + std::to_string(order));
        }
    }

    static Coloring from_bit_string(int order, std::string_view bits) {
        Coloring c(order);
        if (static_cast<int>(bits.size()) != c.length()) {
            throw std::invalid_argument("Coloring: expected " + std::to_string(c.length()) + " bits for N=" +
                                        std::to_string(order) + ", got " + std::to_string(bits.size()));
        }
        for (int k = 0; k < c.length(); ++k) {
            if (bits[k] != '0' && bits[k] != '1') throw std::invalid_argument("Coloring: bits must be 0/1");
            c.set_bit(k, bits[k] == '1');
        }
        return c;
    }

    /// Basis-state label convention: edge bit k is integer bit k.
    static Coloring from_basis_index(int order, std::uint64_t index) {
        Coloring c(order);
        if (c.length() > 64) throw std::invalid_argument("Coloring: basis index needs length <= 64");
        if (c.length() < 64 && (index >> c.length()) != 0) {
            throw std::invalid_argument("Coloring: basis index out of range");
        }
        c.words_[0] = index;
        return c;
    }

    /// Red edges are the edges of g.
    static Coloring from_red_graph(const SmallGraph& g) {
        Coloring c(g.order());
        const int n = g.order();
        int k = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++k) {
                if (g.row(i) >> j & 1) c.set_bit(k, true);
            }
        }
        return c;
    }

    int order() const { return order_; }
    int length() const { return num_pairs(order_); }

    bool bit(int k) const { return (words_[k >> 6] >> (k & 63) & 1) != 0; }

    void set_bit(int k, bool red) {
        if (k < 0 || k >= length()) throw std::invalid_argument("Coloring: bit index out of range");
        const std::uint64_t m = std::uint64_t{1} << (k & 63);
        if (red) {
            words_[k >> 6] |= m;
        } else {
            words_[k >> 6] &= ~m;
        }
    }

    void flip(int k) {
        if (k < 0 || k >= length()) throw std::invalid_argument("Coloring: bit index out of range");
        words_[k >> 6] ^= std::uint64_t{1} << (k & 63);
    }

    bool is_red(int i, int j) const {
        if (i > j) std::swap(i, j);
        return bit(edge_index(i, j, order_));
    }

    SmallGraph red_graph() const {
        SmallGraph g(order_);
        int k = 0;
        for (int i = 0; i < order_; ++i) {
            for (int j = i + 1; j < order_; ++j, ++k) {
                if (bit(k)) g.add_edge(i, j);
            }
        }
        return g;
    }

    SmallGraph blue_graph() const { return red_graph().complement(); }

    std::uint64_t basis_index() const {
        if (length() > 64) throw std::invalid_argument("Coloring: basis index needs length <= 64");
        return words_[0];
    }

    std::string bit_string() const {
        std::string s(length(), '0');
        for (int k = 0; k < length(); ++k) s[k] = bit(k) ? '1' : '0';
        return s;
    }

    const std::array<std::uint64_t, 2>& words() const { return words_; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

   private:
    int order_ = 1;
    std::array<std::uint64_t, 2> words_{};
};

inline Coloring complement_coloring(const Coloring& e) {
    Coloring c = e;
    for (int k = 0; k < e.length(); ++k) c.flip(k);
    return c;
}

/// Sorted set of distinct vertices of K_N (zero-based).
class VertexSubset {
   public:
    VertexSubset(int parent_order, std::vector<int> members) : parent_order_(parent_order), members_(std::move(members)) {
        if (parent_order < 1 || parent_order > kMaxOrder) throw std::invalid_argument("VertexSubset: bad parent order");
        if (members_.empty()) throw std::invalid_argument("VertexSubset: subset must be non-empty");
        for (size_t k = 0; k < members_.size(); ++k) {
            if (members_[k] < 0 || members_[k] >= parent_order) {
                throw std::invalid_argument("VertexSubset: member " + std::to_string(members_[k]) + " out of range");
            }
            if (k > 0 && members_[k] <= members_[k - 1]) {
                throw std::invalid_argument("VertexSubset: members must be strictly increasing");
            }
        }
    }

    int parent_order() const { return parent_order_; }
    int size() const { return static_cast<int>(members_.size()); }
    int operator[](int k) const { return members_[k]; }
    const std::vector<int>& members() const { return members_; }

   private:
    int parent_order_;
    std::vector<int> members_;
};

enum class Color { kRed, kBlue };

/// Induced red (or blue) graph on S; vertex a of the result is S[a].
inline SmallGraph subgraph_on(const Coloring& e, const VertexSubset& s, Color color) {
    if (s.parent_order() != e.order()) throw std::invalid_argument("subgraph_on: subset is for a different order");
    SmallGraph g(s.size());
    for (int a = 0; a < s.size(); ++a) {
        for (int b = a + 1; b < s.size(); ++b) {
            const bool red = e.is_red(s[a], s[b]);
            if (red == (color == Color::kRed)) g.add_edge(a, b);
        }
    }
    return g;
}

/// Bijection on {0..n-1}; images[u] is the image of u.
class Permutation {
   public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int x : images_) {
            if (x < 0 || x >= static_cast<int>(images_.size()) || seen[x]) {
                throw std::invalid_argument("Permutation: images do not form a bijection");
            }
            seen[x] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int u) const { return images_[u]; }
    const std::vector<int>& images() const { return images_; }

   private:
    std::vector<int> images_;
};

inline SmallGraph apply_permutation(const SmallGraph& g, const Permutation& pi) {
    if (pi.size() != g.order()) throw std::invalid_argument("apply_permutation: size mismatch");
    SmallGraph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(pi(u), pi(v));
    return out;
}

/// Relabels the vertices of K_N in a coloring: edge {pi(i), pi(j)} of the
/// result has the color of {i, j}.
inline Coloring apply_permutation(const Coloring& e, const Permutation& pi) {
    return Coloring::from_red_graph(apply_permutation(e.red_graph(), pi));
}

// Text formats. Vertex ids are 1-based on the wire.
//
//   graph:    "order N" line, then "edges 1-2,2-3,..." (the list may be empty)
//   coloring: "N=<n> bits=<0/1 string>" in edge_index order, bit 0 first

inline std::string format_edge_list(const SmallGraph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        if (!out.empty()) out += ',';
        out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
    }
    return out;
}

inline std::string format_graph(const SmallGraph& g) {
    return "order " + std::to_string(g.order()) + "\nedges " + format_edge_list(g) + "\n";
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

inline int parse_int(std::string_view s, const char* what) {
    s = trim(s);
    if (s.empty()) throw std::invalid_argument(std::string(what) + ": expected an integer");
    int value = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument(std::string(what) + ": bad integer '" + std::string(s) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000'000) throw std::invalid_argument(std::string(what) + ": integer too large");
    }
    return value;
}

}  // namespace detail

/// Parses "1-2,2-3" (1-based) into edges of a graph of the given order.
inline SmallGraph parse_edge_list(int order, std::string_view text) {
    SmallGraph g(order);
    text = detail::trim(text);
    while (!text.empty()) {
        const size_t comma = text.find(',');
        std::string_view item = detail::trim(text.substr(0, comma));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (item.empty()) continue;
        const size_t dash = item.find('-');
        if (dash == std::string_view::npos) throw std::invalid_argument("edge '" + std::string(item) + "' lacks '-'");
        const int u = detail::parse_int(item.substr(0, dash), "edge endpoint");
        const int v = detail::parse_int(item.substr(dash + 1), "edge endpoint");
        if (u < 1 || v < 1 || u > order || v > order || u == v) {
            throw std::invalid_argument("edge '" + std::string(item) + "' is out of range for order " +
                                        std::to_string(order));
        }
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

inline SmallGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int order = -1;
    bool saw_edges = false;
    SmallGraph g;
    while (std::getline(in, line)) {
        std::string_view l = detail::trim(line);
        if (l.empty() || l.front() == '#') continue;
        if (l.starts_with("order")) {
            order = detail::parse_int(l.substr(5), "order");
            g = SmallGraph(order);
        } else if (l.starts_with("edges")) {
            if (order < 0) throw std::invalid_argument("graph text: 'edges' before 'order'");
            g = parse_edge_list(order, l.substr(5));
            saw_edges = true;
        } else {
            throw std::invalid_argument("graph text: unexpected line '" + std::string(l) + "'");
        }
    }
    if (order < 0) throw std::invalid_argument("graph text: missing 'order' line");
    (void)saw_edges;
    return g;
}

inline std::string format_coloring(const Coloring& e) {
    return "N=" + std::to_string(e.order()) + " bits=" + e.bit_string();
}

inline Coloring parse_coloring(std::string_view text) {
    text = detail::trim(text);
    if (!text.starts_with("N=")) throw std::invalid_argument("coloring text: expected 'N=<n> bits=<...>'");
    const size_t space = text.find(' ');
    if (space == std::string_view::npos) throw std::invalid_argument("coloring text: missing bits field");
    const int n = detail::parse_int(text.substr(2, space - 2), "coloring order");
    std::string_view rest = detail::trim(text.substr(space + 1));
    if (!rest.starts_with("bits=")) throw std::invalid_argument("coloring text: expected 'bits='");
    return Coloring::from_bit_string(n, detail::trim(rest.substr(5)));
}

}  // namespace ramsey

#endif  // RAMSEY_GRAPH_HPP
