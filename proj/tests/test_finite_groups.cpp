/*
   Copyright 2026 The skewring Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace skewring;

namespace {

std::vector<GroupPtr> sample_groups() {
    return {Group::cyclic_product({1}),     Group::cyclic_product({5}), Group::cyclic_product({2, 2}),
            Group::cyclic_product({2, 3}),  Group::symmetric(3),        Group::symmetric(4),
            Group::permutations(4, {perm::from_cycles("(1,2,3,4)", 4), perm::from_cycles("(1,3)", 4)})};
}

std::uint32_t brute_inverse(const Group& G, GroupIndex g) {
    for (GroupIndex h = 0; h < G.order(); ++h)
        if (G.mul(g, h) == 0) return h;
    return G.order();
}

}  // namespace

TEST(GroupTable, AxiomsHoldForEveryConstructor) {
    for (const auto& G : sample_groups()) {
        EXPECT_FALSE(G->axiom_violation().has_value());
        for (GroupIndex a = 0; a < G->order(); ++a) {
            EXPECT_EQ(G->mul(0, a), a);
            EXPECT_EQ(G->inverse(a), brute_inverse(*G, a));
            for (GroupIndex b = 0; b < G->order(); ++b)
                for (GroupIndex c = 0; c < G->order(); ++c)
                    ASSERT_EQ(G->mul(G->mul(a, b), c), G->mul(a, G->mul(b, c)));
        }
    }
}

TEST(GroupTable, CyclicProductIsComponentwiseAddition) {
    auto G = Group::cyclic_product({2, 3});
    ASSERT_EQ(G->order(), 6u);
    for (GroupIndex a = 0; a < 6; ++a)
        for (GroupIndex b = 0; b < 6; ++b) {
            const std::uint32_t x = (a / 3 + b / 3) % 2, y = (a % 3 + b % 3) % 3;
            EXPECT_EQ(G->mul(a, b), x * 3 + y);
        }
    EXPECT_EQ(G->label(5), "(1,2)");
    EXPECT_EQ(G->at("(1,2)"), 5u);
    EXPECT_EQ(Group::cyclic_product({4})->label(3), "3");
}

TEST(GroupTable, PermutationGroupsComposeLikeFunctions) {
    auto S4 = Group::symmetric(4);
    ASSERT_EQ(S4->order(), 24u);
    for (GroupIndex a = 0; a < 24; ++a)
        for (GroupIndex b = 0; b < 24; ++b) {
            const auto& pa = S4->permutation(a);
            const auto& pb = S4->permutation(b);
            const auto& pab = S4->permutation(S4->mul(a, b));
            for (std::uint32_t x = 0; x < 4; ++x) ASSERT_EQ(pab[x], pa[pb[x]]);
        }
    EXPECT_EQ(S4->label(0), "()");
    auto D4 = sample_groups().back();
    EXPECT_EQ(D4->order(), 8u);
}

TEST(GroupTable, CyclesParseAndPrint) {
    auto p = perm::from_cycles("(1,3)(2,4)", 4);
    EXPECT_EQ(p, (Permutation{2, 3, 0, 1}));
    EXPECT_EQ(perm::to_cycles(p), "(1,3)(2,4)");
    EXPECT_EQ(perm::from_cycles("()", 3), perm::identity(3));
    EXPECT_THROW(perm::from_cycles("(1,1)", 3), DomainError);
    EXPECT_THROW(perm::from_cycles("(1,4)", 3), DomainError);
    EXPECT_THROW(perm::from_cycles("(1,2", 3), DomainError);
}

TEST(GroupTable, FromTableRejectsNonGroups) {
    EXPECT_NO_THROW(Group::from_table({"e", "a"}, {{0, 1}, {1, 0}}));
    EXPECT_THROW(Group::from_table({"e", "a"}, {{0, 1}, {1, 1}}), DomainError);
    EXPECT_THROW(Group::from_table({"e", "e"}, {{0, 1}, {1, 0}}), DomainError);
    EXPECT_THROW(Group::from_table({"e", "a", "b"}, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}), DomainError);
    // a Latin square that is not associative
    EXPECT_THROW(Group::from_table({"e", "a", "b", "c", "d"},
                                   {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}),
                 DomainError);
    Caps tiny;
    tiny.group_order = 4;
    EXPECT_THROW(Group::symmetric(3, tiny), CapacityError);
}

TEST(Abelian, MatchesBruteForce) {
    for (const auto& G : sample_groups()) {
        bool brute = true;
        for (GroupIndex a = 0; a < G->order(); ++a)
            for (GroupIndex b = 0; b < G->order(); ++b) brute &= G->mul(a, b) == G->mul(b, a);
        EXPECT_EQ(is_abelian(*G), brute);
    }
}

TEST(ConjugacyClasses, PartitionAndMatchBruteForce) {
    for (const auto& G : sample_groups()) {
        std::size_t total = 0;
        for (const auto& cls : conjugacy_classes(*G)) {
            total += cls.size();
            std::set<GroupIndex> brute;
            for (GroupIndex h = 0; h < G->order(); ++h) brute.insert(G->mul(G->mul(h, cls[0]), G->inverse(h)));
            EXPECT_EQ(std::set<GroupIndex>(cls.begin(), cls.end()), brute);
            EXPECT_EQ(G->order() % cls.size(), 0u);
        }
        EXPECT_EQ(total, G->order());
        auto sizes = class_size_report(*G);
        EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), G->order());
    }
    auto S3 = Group::symmetric(3);
    auto sizes = class_size_report(*S3);
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 2, 3}));
    EXPECT_EQ(class_size_report(*Group::symmetric(4)).size(), 5u);
}

TEST(Centralizer, IsASubgroupOfTheRightOrder) {
    for (const auto& G : sample_groups())
        for (GroupIndex g = 0; g < G->order(); ++g) {
            auto C = centralizer(G, g);
            EXPECT_TRUE(C.is_valid());
            EXPECT_EQ(C.size() * conjugacy_class(*G, g).size(), G->order());
        }
}

TEST(Stabilizer, OrbitStabilizerOnActions) {
    auto S4 = Group::symmetric(4);
    std::vector<SetAction> actions{SetAction::natural(S4), SetAction::regular(S4), SetAction::trivial(S4, 3)};
    for (const auto& act : actions) {
        for (std::uint32_t x = 0; x < act.points(); ++x) {
            auto stab = stabilizer(act, x);
            std::set<std::uint32_t> orbit;
            for (GroupIndex g = 0; g < S4->order(); ++g) {
                orbit.insert(act.apply(g, x));
                EXPECT_EQ(stab.contains(g), act.apply(g, x) == x);
            }
            EXPECT_TRUE(stab.is_valid());
            EXPECT_EQ(stab.size() * orbit.size(), S4->order());
        }
    }
    EXPECT_THROW(stabilizer(actions[0], 9), DomainError);
    EXPECT_EQ(orbits(actions[2]).size(), 3u);
    EXPECT_EQ(orbits(actions[0]).size(), 1u);
}

TEST(SetActions, RejectNonActions) {
    auto Z2 = Group::cyclic_product({2});
    EXPECT_THROW(SetAction::from_images(Z2, 3, {{1, Permutation{0, 0, 1}}}), DomainError);
    auto Z3 = Group::cyclic_product({3});
    // the generator of Z/3 cannot act as a transposition
    EXPECT_THROW(SetAction::from_images(Z3, 2, {{1, Permutation{1, 0}}}), DomainError);
    auto ok = SetAction::from_images(Z3, 3, {{1, Permutation{1, 2, 0}}});
    EXPECT_EQ(ok.apply(2, 0), 2u);
}
