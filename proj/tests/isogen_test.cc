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

#include "ramsey/isogen.hpp"

#include <set>
#include <unordered_set>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "ramsey/canon.hpp"

using namespace ramsey;

namespace {

// u_N for N = 1..8, the published sequence of unlabelled graphs.
constexpr std::uint64_t kUnlabelled[] = {1, 2, 4, 11, 34, 156, 1044, 12346};

std::vector<CanonicalForm> forms_of(int n) {
    std::vector<CanonicalForm> out;
    enumerate_unlabelled(n, [&](const SmallGraph& g) { out.push_back(canonical_form(g)); });
    return out;
}

}  // namespace

TEST(Isogen, counts_up_to_order_8) {
    for (int n = 1; n <= 8; ++n) {
        const CountReport r = count_unlabelled(n);
        EXPECT_EQ(r.unlabelled, kUnlabelled[n - 1]) << "N=" << n;
        EXPECT_EQ(r.labelled, std::uint64_t{1} << (n * (n - 1) / 2));
    }
}

TEST(Isogen, brute_force_class_counts_agree) {
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_unlabelled(n).unlabelled, oracle::class_count(n)) << "N=" << n;
}

TEST(Isogen, emits_each_class_exactly_once) {
    for (int n = 1; n <= 7; ++n) {
        const std::vector<CanonicalForm> emitted = forms_of(n);
        const std::set<CanonicalForm> distinct(emitted.begin(), emitted.end());
        EXPECT_EQ(distinct.size(), emitted.size()) << "duplicate class at N=" << n;
        // Every labelled graph falls in an emitted class.
        std::set<CanonicalForm> all;
        oracle::for_each_labelled(n, [&](const Coloring& e) { all.insert(canonical_form(e.red_graph())); });
        EXPECT_EQ(all, distinct) << "N=" << n;
    }
}

TEST(Isogen, emitted_classes_differ_under_brute_force_canon) {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<bool>> keys;
        enumerate_unlabelled(n, [&](const SmallGraph& g) { keys.insert(oracle::canonical_key(g)); });
        EXPECT_EQ(keys.size(), kUnlabelled[n - 1]);
    }
}

TEST(Isogen, visitor_can_stop_early) {
    int seen = 0;
    enumerate_unlabelled(6, [&](const SmallGraph&) { return ++seen < 10; });
    EXPECT_EQ(seen, 10);
}

TEST(Isogen, shards_partition_the_classes) {
    const std::vector<CanonicalForm> all = forms_of(7);
    const std::set<CanonicalForm> expected(all.begin(), all.end());
    for (int shards : {1, 2, 3, 5, 8, 64}) {
        std::multiset<CanonicalForm> got;
        for (GenerationCursor c : shard_enumeration(7, shards)) {
            run_cursor(c, [&](const SmallGraph& g) { got.insert(canonical_form(g)); });
            EXPECT_TRUE(c.finished);
        }
        EXPECT_EQ(got.size(), expected.size()) << shards << " shards";
        EXPECT_EQ(std::set<CanonicalForm>(got.begin(), got.end()), expected);
    }
}

TEST(Isogen, run_sharded_visits_everything_with_threads) {
    std::vector<std::uint64_t> per_shard(12, 0);
    run_sharded(7, 12, 3, [&](int shard) { return [&, shard](const SmallGraph&) { ++per_shard[shard]; }; });
    std::uint64_t total = 0;
    for (auto c : per_shard) total += c;
    EXPECT_EQ(total, 1044u);
}

TEST(Isogen, checkpoint_resume_reproduces_the_sequence) {
    for (int shards : {1, 3}) {
        for (GenerationCursor c : shard_enumeration(7, shards)) {
            GenerationCursor straight = c;
            std::vector<CanonicalForm> expected;
            run_cursor(straight, [&](const SmallGraph& g) { expected.push_back(canonical_form(g)); });

            std::vector<CanonicalForm> got;
            GenerationCursor cur = c;
            int pauses = 0;
            while (!cur.finished) {
                int budget = 37;
                run_cursor(cur, [&](const SmallGraph& g) {
                    got.push_back(canonical_form(g));
                    return --budget > 0;
                });
                // Round-trip through the text token each time.
                cur = GenerationCursor::from_checkpoint(cur.checkpoint());
                ++pauses;
            }
            EXPECT_EQ(got, expected);
            EXPECT_GT(pauses, 1);
        }
    }
}

TEST(Isogen, checkpoint_token_format) {
    GenerationCursor c = shard_enumeration(8, 4)[2];
    EXPECT_EQ(c.checkpoint(), "isogen/1 order=8 shard=2/4 split=" + std::to_string(c.split_level) +
                                  " next=0 skip=0 done=0");
    EXPECT_THROW(GenerationCursor::from_checkpoint("isogen/2 order=8"), std::invalid_argument);
    EXPECT_THROW(GenerationCursor::from_checkpoint("isogen/1 order=8 shard=5/4 split=3 next=0 skip=0 done=0"),
                 std::invalid_argument);
    EXPECT_THROW(GenerationCursor::from_checkpoint("isogen/1 order=8 shard=0/4 split=3 next=x skip=0 done=0"),
                 std::invalid_argument);
}

TEST(Isogen, order_limits) {
    EXPECT_THROW(count_unlabelled(0), std::invalid_argument);
    EXPECT_THROW(count_unlabelled(kMaxEnumerationOrder + 1), std::invalid_argument);
}
