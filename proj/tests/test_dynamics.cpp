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

#include "oracles.hpp"

using namespace skewring;

namespace {

std::vector<std::pair<std::string, TransformationGroup>> catalogue_groups() {
    std::vector<std::pair<std::string, TransformationGroup>> out;
    for (const auto& spec : dynamics_catalogue())
        out.emplace_back(spec.name, build_transformation_group(std::get<DynamicalSpec>(spec.body)));
    return out;
}

TransformationGroup natural_s3(std::uint32_t q = 2) {
    return TransformationGroup(SetAction::natural(Group::symmetric(3)), q);
}

}  // namespace

TEST(InduceSigma, IsAHomomorphismIntoAutomorphisms) {
    for (const auto& [name, T] : catalogue_groups()) {
        auto sigma = induce_sigma(T);
        EXPECT_TRUE(sigma.valid()) << name;
        const Ring& A = sigma.ring();
        const Group& G = T.group();
        for (GroupIndex g = 0; g < G.order(); ++g)
            for (Elem f = 0; f < A.size(); f += 1 + A.size() / 16)
                for (std::uint32_t x = 0; x < T.points(); ++x)
                    ASSERT_EQ(A.digit(sigma.apply(g, f), x), A.digit(f, T.action().apply(G.inverse(g), x))) << name;
    }
}

TEST(Properties, MatchSetActionOracles) {
    for (const auto& [name, T] : catalogue_groups()) {
        EXPECT_EQ(is_minimal(T).minimal, oracle::transitive(T.action())) << name;
        EXPECT_EQ(is_faithful(T).faithful, oracle::faithful(T.action())) << name;
        EXPECT_EQ(is_free(T).free, !oracle::has_fixed_point(T.action())) << name;
        if (auto f = is_free(T).fixed_point) {
            EXPECT_EQ(T.action().apply(f->first, f->second), f->second);
        }
        if (auto g = is_faithful(T).trivially_acting) {
            EXPECT_NE(*g, 0u);
        }
    }
}

TEST(Properties, NaturalS3) {
    auto T = natural_s3();
    EXPECT_TRUE(is_faithful(T).faithful);
    EXPECT_TRUE(is_minimal(T).minimal);
    EXPECT_FALSE(is_free(T).free);
    auto two_swaps = TransformationGroup(SetAction::from_images(Group::cyclic_product({2}), 4, {{1, {1, 0, 3, 2}}}), 2);
    auto m = is_minimal(two_swaps);
    EXPECT_FALSE(m.minimal);
    EXPECT_EQ(m.invariant_subset, (std::vector<std::uint32_t>{0, 1}));
    EXPECT_THROW(TransformationGroup(SetAction::natural(Group::symmetric(3)), 6), DomainError);
}

TEST(GaloisCorrespondence, VanishingIdealsAndZeroSets) {
    auto A = Ring::functions(4, 3);
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        std::vector<std::uint32_t> S;
        for (std::uint32_t x = 0; x < 4; ++x)
            if (mask >> x & 1) S.push_back(x);
        auto I = vanishing_ideal(*A, S);
        EXPECT_EQ(zero_set(*A, I), S);
        std::uint64_t expected = 1;
        for (std::size_t i = S.size(); i < 4; ++i) expected *= 3;
        EXPECT_EQ(I.size(), expected);
        // an ideal of a function ring over a field is determined by its zero set
        auto closure = ideal_closure(*A, I);
        EXPECT_EQ(closure.size(), I.size());
    }
    EXPECT_THROW(vanishing_ideal(*Ring::modular(4), {}), DomainError);
}

TEST(GaloisCorrespondence, InvariantSubsetsGiveInvariantIdeals) {
    for (const auto& [name, T] : catalogue_groups()) {
        auto sigma = induce_sigma(T);
        for (const auto& orbit : orbits(T.action())) {
            auto I = vanishing_ideal(sigma.ring(), orbit);
            std::set<Elem> members(I.begin(), I.end());
            for (GroupIndex g = 0; g < T.group().order(); ++g)
                for (Elem f : I) ASSERT_TRUE(members.count(sigma.apply(g, f))) << name;
        }
    }
}

TEST(StabilizerOrbits, AreStabilizerImages) {
    auto T = natural_s3();
    auto sets = stabilizer_orbit_sets(T);
    EXPECT_EQ(sets[0][0], (std::vector<std::uint32_t>{0}));
    EXPECT_EQ(sets[0][1], (std::vector<std::uint32_t>{1, 2}));
    EXPECT_EQ(sets[2][0], (std::vector<std::uint32_t>{0, 1}));
}

TEST(DynamicalTranslation, HoldOnEveryCatalogueInstance) {
    for (const auto& [name, T] : catalogue_groups()) {
        DynamicsAnalysis dn(T);
        auto r = lemma13_14_check(dn);
        EXPECT_EQ(r.assertion("lemma13")->status, Status::Holds) << name;
        EXPECT_EQ(r.assertion("lemma14")->status, Status::Holds) << name;
        EXPECT_EQ(dn.analysis().g_simple(), truth(oracle::G_simple(dn.analysis().action()))) << name;
    }
}

TEST(DynamicalCriterion, HoldsOnCatalogueAndDecidesEverything) {
    for (const auto& [name, T] : catalogue_groups()) {
        DynamicsAnalysis dn(T);
        auto r = theorem3_check(dn);
        EXPECT_FALSE(r.violated()) << name;
        EXPECT_EQ(r.assertion("b")->status, Status::Holds) << name;
        for (const auto& v : r.verdicts) EXPECT_NE(v.value, Truth::Unknown) << name << " " << v.id;
        if (is_abelian(T.group())) {
            EXPECT_EQ(r.assertion("d")->status, Status::Holds) << name;
        }
    }
}

TEST(DynamicalCriterion, NaturalS3Values) {
    DynamicsAnalysis dn(natural_s3());
    auto r = theorem3_check(dn);
    EXPECT_EQ(r.verdict("i")->value, Truth::False);
    EXPECT_EQ(r.verdict("ii")->value, Truth::False);
    EXPECT_EQ(r.verdict("iv")->value, Truth::True);
    EXPECT_EQ(r.verdict("v")->value, Truth::True);
    EXPECT_EQ(r.verdict("c")->value, Truth::True);
    EXPECT_EQ(r.assertion("d")->status, Status::NotApplicable);
    EXPECT_EQ(r.verdict("ii")->witness->role, "centralizing_element");
}

TEST(AbelianFreeness, MinimalFaithfulAbelianActionsAreFree) {
    std::size_t minimal_faithful = 0;
    for (const auto& [name, T] : catalogue_groups()) {
        if (!is_abelian(T.group())) {
            EXPECT_THROW(abelian_freeness_check(T), DomainError);
            continue;
        }
        auto r = abelian_freeness_check(T);
        EXPECT_EQ(r.assertion("free")->status, Status::Holds) << name;
        if (is_minimal(T).minimal && is_faithful(T).faithful) {
            ++minimal_faithful;
            EXPECT_TRUE(is_free(T).free) << name;
        }
    }
    EXPECT_GE(minimal_faithful, 5u);
}
