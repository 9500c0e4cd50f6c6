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

#include "ramsey/graph.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace ramsey;

namespace {

SmallGraph random_graph(int n, std::mt19937_64& rng) {
    SmallGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (rng() & 1) g.add_edge(i, j);
        }
    }
    return g;
}

Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

}  // namespace

TEST(EdgeIndex, small_cases) {
    // Zero-based here; the wire format shifts by one.
    EXPECT_EQ(edge_index(0, 1, 4), 0);
    EXPECT_EQ(edge_index(2, 3, 4), 5);
    EXPECT_EQ(edge_index(1, 3, 4), 4);
}

TEST(EdgeIndex, bijection_for_every_order) {
    for (int n = 2; n <= kMaxOrder; ++n) {
        std::vector<int> seen;
        int expected = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                // Lexicographic pair order means the index simply counts up.
                ASSERT_EQ(edge_index(i, j, n), expected);
                ASSERT_EQ(edge_pair(expected, n), std::make_pair(i, j));
                ++expected;
            }
        }
        EXPECT_EQ(expected, num_pairs(n));
    }
}

TEST(EdgeIndex, rejects_bad_pairs) {
    EXPECT_THROW(edge_index(2, 2, 4), std::invalid_argument);
    EXPECT_THROW(edge_index(3, 2, 4), std::invalid_argument);
    EXPECT_THROW(edge_index(1, 4, 4), std::invalid_argument);
}

TEST(SmallGraph, validates_rows) {
    std::vector<Row> asym = {0b10, 0b00};
    EXPECT_THROW(SmallGraph::from_rows(2, asym), std::invalid_argument);
    std::vector<Row> loop = {0b01};
    EXPECT_THROW(SmallGraph::from_rows(1, loop), std::invalid_argument);
    EXPECT_THROW(SmallGraph(0), std::invalid_argument);
    EXPECT_THROW(SmallGraph(17), std::invalid_argument);
}

TEST(SubgraphOn, red_and_blue_views) {
    Coloring all_red = Coloring::from_red_graph(SmallGraph::complete(3));
    VertexSubset s(3, {0, 1, 2});
    EXPECT_EQ(subgraph_on(all_red, s, Color::kRed), SmallGraph::complete(3));
    EXPECT_EQ(subgraph_on(all_red, s, Color::kBlue).num_edges(), 0);

    Coloring e(4);
    e.set_bit(edge_index(0, 1, 4), true);
    SmallGraph g = subgraph_on(e, VertexSubset(4, {0, 1, 3}), Color::kRed);
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.num_edges(), 1);
    EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(SubgraphOn, rejects_out_of_range_members) {
    EXPECT_THROW(VertexSubset(4, {0, 4}), std::invalid_argument);
    EXPECT_THROW(VertexSubset(4, {2, 1}), std::invalid_argument);
}

TEST(ComplementColoring, bitwise_and_involution) {
    Coloring e = Coloring::from_bit_string(3, "101");
    EXPECT_EQ(complement_coloring(e).bit_string(), "010");
    Coloring all_red = Coloring::from_red_graph(SmallGraph::complete(3));
    EXPECT_EQ(complement_coloring(all_red), Coloring(3));

    std::mt19937_64 rng(7);
    for (int n = 2; n <= kMaxOrder; ++n) {
        Coloring c = Coloring::from_red_graph(random_graph(n, rng));
        EXPECT_EQ(complement_coloring(complement_coloring(c)), c);
    }
}

TEST(ApplyPermutation, identity_and_degrees) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 15);
        SmallGraph g = random_graph(n, rng);
        EXPECT_EQ(apply_permutation(g, Permutation::identity(n)), g);
        SmallGraph h = apply_permutation(g, random_permutation(n, rng));
        EXPECT_EQ(h.degree_sequence(), g.degree_sequence());
        EXPECT_EQ(h.num_edges(), g.num_edges());
    }
    SmallGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    SmallGraph moved = apply_permutation(path, Permutation({1, 0, 2}));
    EXPECT_TRUE(moved.has_edge(1, 0));
    EXPECT_TRUE(moved.has_edge(0, 2));
    EXPECT_THROW(apply_permutation(path, Permutation::identity(4)), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(TextFormat, graph_round_trip) {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= kMaxOrder; ++n) {
        SmallGraph g = random_graph(n, rng);
        EXPECT_EQ(parse_graph(format_graph(g)), g);
    }
    SmallGraph p = parse_graph("order 3\nedges 1-2,2-3\n");
    EXPECT_TRUE(p.has_edge(0, 1));
    EXPECT_TRUE(p.has_edge(1, 2));
    EXPECT_THROW(parse_graph("order 3\nedges 1-4\n"), std::invalid_argument);
    EXPECT_THROW(parse_graph("order 3\nedges 1-1\n"), std::invalid_argument);
}

TEST(TextFormat, coloring_round_trip) {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= kMaxOrder; ++n) {
        Coloring c = Coloring::from_red_graph(random_graph(n, rng));
        EXPECT_EQ(parse_coloring(format_coloring(c)), c);
    }
    EXPECT_EQ(format_coloring(Coloring::from_bit_string(3, "101")), "N=3 bits=101");
    EXPECT_THROW(parse_coloring("N=3 bits=10"), std::invalid_argument);
    EXPECT_THROW(parse_coloring("N=3 bits=1021"), std::invalid_argument);
}

TEST(Coloring, basis_index_matches_bits) {
    Coloring c = Coloring::from_basis_index(4, 0b100001);
    EXPECT_TRUE(c.bit(0));
    EXPECT_TRUE(c.bit(5));
    EXPECT_FALSE(c.bit(3));
    EXPECT_EQ(c.basis_index(), 0b100001u);
    EXPECT_TRUE(c.is_red(2, 3));
}
