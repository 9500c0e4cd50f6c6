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

#include "ramsey/containment.hpp"

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "ramsey/catalog.hpp"

using namespace ramsey;

namespace {

std::vector<SmallGraph> patterns_of_order(int n) {
    std::vector<SmallGraph> out;
    if (n >= 2) {
        for (const TreeClass& c : tree_catalog(n)) out.push_back(c.representative);
    }
    out.push_back(SmallGraph::complete(n));
    if (n >= 3) {
        SmallGraph cycle(n);
        for (int i = 0; i < n; ++i) cycle.add_edge(i, (i + 1) % n);
        out.push_back(cycle);
        SmallGraph matching(n);
        for (int i = 0; i + 1 < n; i += 2) matching.add_edge(i, i + 1);
        out.push_back(matching);
    }
    return out;
}

}  // namespace

TEST(Containment, matches_brute_force_for_every_host_up_to_order_5) {
    for (int n = 2; n <= 5; ++n) {
        for (const SmallGraph& p : patterns_of_order(n)) {
            oracle::for_each_labelled(n, [&](const Coloring& e) {
                const SmallGraph host = e.red_graph();
                ASSERT_EQ(contains_spanning(host, p), oracle::contains(host, p))
                    << format_graph(host) << "pattern " << format_graph(p);
            });
        }
    }
}

TEST(Containment, matches_brute_force_on_random_order_6_hosts) {
    std::mt19937_64 rng(6);
    const std::vector<SmallGraph> pats = patterns_of_order(6);
    for (int trial = 0; trial < 1500; ++trial) {
        const Coloring e = Coloring::from_basis_index(6, rng() & ((1u << 15) - 1));
        const SmallGraph host = e.red_graph();
        for (const SmallGraph& p : pats) ASSERT_EQ(contains_spanning(host, p), oracle::contains(host, p));
    }
}

TEST(Containment, every_graph_contains_itself_and_its_spanning_subgraphs) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const SmallGraph host = Coloring::from_basis_index(n, rng() & ((std::uint64_t{1} << num_pairs(n)) - 1)).red_graph();
        EXPECT_TRUE(contains_spanning(host, host));
        SmallGraph sub = host;
        for (auto [u, v] : host.edges()) {
            if (rng() & 1) sub.remove_edge(u, v);
        }
        EXPECT_TRUE(contains_spanning(host, sub));
    }
}

TEST(Containment, edge_count_and_degree_obstructions) {
    EXPECT_FALSE(contains_spanning(build_path(5), build_star(4)));
    EXPECT_FALSE(contains_spanning(build_star(4), build_path(5)));
    EXPECT_TRUE(contains_spanning(SmallGraph::complete(6), build_double_star(2, 2, 2)));
}

TEST(Containment, order_mismatch_throws) {
    EXPECT_THROW(contains_spanning(SmallGraph::complete(5), build_path(4)), std::invalid_argument);
}
