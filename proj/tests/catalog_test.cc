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

#include "ramsey/catalog.hpp"

#include <set>

#include "gtest/gtest.h"
#include "oracles.hpp"

using namespace ramsey;

namespace {

std::set<CanonicalForm> pruefer_classes(int m) {
    std::set<CanonicalForm> out;
    oracle::for_each_labelled_tree(m, [&](const SmallGraph& t) { out.insert(canonical_form(t)); });
    return out;
}

const TreeClass& by_name(int m, const std::string& name) {
    for (const TreeClass& c : tree_catalog(m)) {
        if (std::find(c.names.begin(), c.names.end(), name) != c.names.end()) return c;
    }
    throw std::runtime_error("no class named " + name);
}

}  // namespace

TEST(Catalog, counts_match_known_sequence) {
    // Free trees: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106 for m = 1..10.
    const int expected[] = {0, 0, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int m = 2; m <= 10; ++m) EXPECT_EQ(tree_catalog(m).size(), static_cast<size_t>(expected[m])) << "m=" << m;
}

TEST(Catalog, agrees_with_pruefer_enumeration) {
    for (int m = 2; m <= 8; ++m) {
        std::set<CanonicalForm> cat;
        for (const TreeClass& c : tree_catalog(m)) cat.insert(c.form);
        EXPECT_EQ(cat, pruefer_classes(m)) << "m=" << m;
    }
}

TEST(Catalog, classes_are_trees_in_canonical_order) {
    for (int m = 2; m <= 9; ++m) {
        const auto& cat = tree_catalog(m);
        for (size_t i = 0; i < cat.size(); ++i) {
            EXPECT_TRUE(cat[i].representative.is_tree());
            EXPECT_EQ(cat[i].index, static_cast<int>(i) + 1);
            EXPECT_EQ(canonical_form(cat[i].representative), cat[i].form);
            if (i > 0) {
                EXPECT_LT(cat[i - 1].form, cat[i].form);
            }
        }
    }
}

TEST(Catalog, order_6_names) {
    EXPECT_EQ(by_name(6, "P_6").names, (std::vector<std::string>{"P_6", "S^(4)_{1,1}"}));
    EXPECT_EQ(by_name(6, "K_{1,5}").names, std::vector<std::string>{"K_{1,5}"});
    by_name(6, "S^(3)_{2,1}");
    by_name(6, "S^(2)_{3,1}");
    by_name(6, "S^(2)_{2,2}");
    int unnamed = 0;
    for (const TreeClass& c : tree_catalog(6)) unnamed += c.names.empty();
    EXPECT_EQ(unnamed, 1);
}

TEST(Catalog, order_7_and_8_named_classes) {
    for (const char* n : {"P_7", "S^(5)_{1,1}", "S^(4)_{2,1}", "S^(3)_{2,2}", "S^(3)_{3,1}", "S^(2)_{3,2}",
                          "S^(2)_{4,1}", "K_{1,6}"}) {
        by_name(7, n);
    }
    int unnamed7 = 0;
    for (const TreeClass& c : tree_catalog(7)) unnamed7 += c.names.empty();
    EXPECT_EQ(unnamed7, 4);
    for (const char* n : {"K_{1,7}", "S^(2)_{5,1}", "S^(3)_{4,1}", "S^(2)_{4,2}", "S^(3)_{3,2}", "S^(2)_{3,3}",
                          "S^(4)_{3,1}", "S^(4)_{2,2}", "S^(5)_{2,1}", "P_8"}) {
        by_name(8, n);
    }
}

TEST(Catalog, builders) {
    EXPECT_EQ(build_path(5).num_edges(), 4);
    EXPECT_EQ(build_star(4).degree(0), 4);
    const SmallGraph d = build_double_star(3, 2, 1);
    EXPECT_EQ(d.order(), 6);
    EXPECT_TRUE(d.is_tree());
    EXPECT_EQ(d.degree(0), 3);
    EXPECT_EQ(d.degree(2), 2);
    // S^(k)_{1,1} is the path of order k + 2.
    EXPECT_TRUE(is_isomorphic(build_double_star(4, 1, 1), build_path(6)));
    EXPECT_THROW(build_double_star(1, 1, 1), std::invalid_argument);
    EXPECT_THROW(build_path(1), std::invalid_argument);
}

TEST(Catalog, resolve_class) {
    const TreeClass c = resolve_class(StarSpec{5}, 6);
    EXPECT_EQ(c.names.front(), "K_{1,5}");
    EXPECT_EQ(resolve_class(CatalogRef{6, c.index}, 6).form, c.form);
    EXPECT_THROW(resolve_class(PathSpec{5}, 6), std::invalid_argument);
    EXPECT_THROW(build_family(CatalogRef{6, 7}), std::invalid_argument);
    EXPECT_THROW(tree_catalog(11), std::invalid_argument);
}
