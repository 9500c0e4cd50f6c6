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

#include "ramsey/driver.hpp"

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace ramsey;

namespace {

DriverOptions quick() {
    DriverOptions o;
    o.threads = 1;
    o.tabu.max_iterations = 2000;
    o.tabu.restarts = 4;
    return o;
}

}  // namespace

TEST(Driver, path_on_three_vertices) {
    const RamseyResult r = compute_ramsey(build_path(3), build_path(3), quick());
    EXPECT_EQ(r.status, ResultStatus::kExact);
    EXPECT_EQ(r.value, 3);
    EXPECT_TRUE(r.oracle_agrees);
    EXPECT_EQ(r.critical.order, 2);
    EXPECT_EQ(r.critical.count, 2u);  // red edge or blue edge
    EXPECT_EQ(r.optimal.order, 3);
}

TEST(Driver, triangles) {
    const SmallGraph k3 = SmallGraph::complete(3);
    const RamseyResult r = compute_ramsey(k3, k3, quick());
    EXPECT_EQ(r.value, 6);
    EXPECT_EQ(r.status, ResultStatus::kExact);
    EXPECT_TRUE(r.oracles.empty());
    EXPECT_EQ(r.start_order, 2);
    EXPECT_FALSE(r.reseeded);
    ASSERT_EQ(r.trace.size(), 5u);
    for (size_t i = 0; i + 1 < r.trace.size(); ++i) {
        EXPECT_EQ(r.trace[i].order, 2 + static_cast<int>(i));
        EXPECT_EQ(r.trace[i].value, 0);
        ASSERT_TRUE(r.trace[i].witness.has_value());
        EXPECT_EQ(oracle::objective(*r.trace[i].witness, k3, k3).total(), 0);
    }
    EXPECT_EQ(r.trace.back().value, 2);
    EXPECT_EQ(r.critical.count, 1u);
    EXPECT_EQ(r.optimal.min, 2);
    for (const Coloring& w : r.optimal.witnesses) EXPECT_EQ(oracle::objective(w, k3, k3).total(), 2);
}

TEST(Driver, oracle_seeding_changes_only_the_start) {
    DriverOptions seeded = quick();
    DriverOptions plain = quick();
    plain.oracle_seed = false;
    const RamseyResult a = compute_ramsey(build_path(6), build_star(5), seeded);
    const RamseyResult b = compute_ramsey(build_path(6), build_star(5), plain);
    EXPECT_EQ(a.value, 9);
    EXPECT_EQ(b.value, 9);
    EXPECT_EQ(a.start_order, 8);
    EXPECT_EQ(b.start_order, 5);
    EXPECT_EQ(a.critical.count, b.critical.count);
    EXPECT_EQ(a.optimal.min, b.optimal.min);
    EXPECT_EQ(a.optimal.count, b.optimal.count);
    EXPECT_TRUE(a.oracle_agrees);
}

TEST(Driver, batch_equals_individual_runs) {
    std::vector<std::pair<SmallGraph, SmallGraph>> pairs;
    for (const TreeClass& g : tree_catalog(5)) {
        for (const TreeClass& h : tree_catalog(5)) pairs.push_back({g.representative, h.representative});
    }
    pairs.push_back({build_path(4), SmallGraph::complete(3)});
    const std::vector<RamseyResult> batch = compute_ramsey_batch(pairs, quick());
    ASSERT_EQ(batch.size(), pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        const RamseyResult one = compute_ramsey(pairs[i].first, pairs[i].second, quick());
        EXPECT_EQ(batch[i].value, one.value);
        EXPECT_EQ(batch[i].critical.count, one.critical.count);
        EXPECT_EQ(batch[i].optimal.count, one.optimal.count);
        EXPECT_TRUE(batch[i].oracle_agrees);
    }
    // r(P_4, K_3) = 7 (Chvatal: (m-1)(n-1)+1 for trees against K_n).
    EXPECT_EQ(batch.back().value, 7);
}

TEST(Driver, interchanging_colors_mirrors_the_result) {
    const SmallGraph g = build_double_star(2, 2, 1), h = build_path(5);
    const RamseyResult gh = compute_ramsey(g, h, quick());
    const RamseyResult hg = compute_ramsey(h, g, quick());
    EXPECT_EQ(gh.value, hg.value);
    EXPECT_EQ(gh.critical.count, hg.critical.count);
    const RamseyResult m = mirrored(gh);
    EXPECT_EQ(canonical_form(m.red), canonical_form(h));
    for (const Coloring& w : m.critical.witnesses) EXPECT_EQ(oracle::objective(w, h, g).total(), 0);
}

TEST(Driver, tabu_past_the_budget_gives_a_lower_bound) {
    // r(K_{1,6}, K_{1,6}) = 11, beyond the default exhaustive limit of 9.
    const RamseyResult r = compute_ramsey(build_star(6), build_star(6), quick());
    EXPECT_EQ(r.status, ResultStatus::kLowerBound);
    EXPECT_EQ(r.value, 11);
    EXPECT_TRUE(r.oracle_agrees);
    ASSERT_FALSE(r.trace.empty());
    EXPECT_EQ(r.trace.front().method, Method::kTabu);
    EXPECT_EQ(r.trace.front().value, 0);

    DriverOptions capped = quick();
    capped.max_order = 10;
    const RamseyResult c = compute_ramsey(build_star(6), build_star(6), capped);
    EXPECT_EQ(c.status, ResultStatus::kLowerBound);
    EXPECT_EQ(c.value, 11);
    EXPECT_EQ(c.trace.size(), 1u);
}

TEST(Driver, rejects_edgeless_patterns) {
    EXPECT_THROW(compute_ramsey(SmallGraph(3), build_path(3)), std::invalid_argument);
}

TEST(Table, order_4_with_mirrored_cells) {
    const RamseyTable t = compute_table(4, 4, quick());
    ASSERT_EQ(t.rows.size(), 2u);
    EXPECT_TRUE(t.symmetric);
    for (size_t i = 0; i < 2; ++i) {
        for (size_t j = 0; j < 2; ++j) {
            const RamseyResult& c = t.cells[i][j];
            EXPECT_EQ(c.status, ResultStatus::kExact);
            EXPECT_EQ(canonical_form(c.red), t.rows[i].form);
            EXPECT_EQ(canonical_form(c.blue), t.cols[j].form);
            EXPECT_EQ(c.value, t.cells[j][i].value);
            const int want = is_star_graph(c.red) && is_star_graph(c.blue) ? 6 : 5;
            EXPECT_EQ(c.value, want);
        }
    }
    const RamseyResult& lower = t.cells[1][0];
    for (const Coloring& w : lower.critical.witnesses) {
        EXPECT_EQ(oracle::objective(w, lower.red, lower.blue).total(), 0);
    }
}
