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

struct Sample {
    const char* name;
    ActionMap sigma;
};

std::vector<Sample> samples() {
    auto Z2 = Group::cyclic_product({2});
    auto Z3 = Group::cyclic_product({3});
    auto Z4 = Group::cyclic_product({4});
    auto S3 = Group::symmetric(3);
    auto F22 = Ring::functions(2, 2);
    auto F23 = Ring::functions(3, 2);
    auto F24 = Ring::functions(4, 2);
    auto F4 = Ring::functions(1, 4);
    auto M3 = Ring::matrices(2, 3);
    const Elem M = M3->encode(std::vector<std::uint64_t>{0, 1, 2, 0});
    std::vector<Sample> out{
        {"swap", ActionMap::from_images(Z2, F22, {{1, RingAutomorphism::permutation_induced(F22, {1, 0})}})},
        {"rotation", ActionMap::from_images(Z3, F23, {{1, RingAutomorphism::permutation_induced(F23, {1, 2, 0})}})},
        {"two_swaps", ActionMap::from_images(Z2, F24, {{1, RingAutomorphism::permutation_induced(F24, {1, 0, 3, 2})}})},
        {"quotient", ActionMap::from_images(Z4, F22, {{1, RingAutomorphism::permutation_induced(F22, {1, 0})}})},
        {"frobenius", ActionMap::from_images(Z2, F4, {{1, RingAutomorphism::power_map(F4, 2)}})},
        {"conjugation", ActionMap::from_images(Z2, M3, {{1, RingAutomorphism::conjugation(M3, M)}})},
        {"trivial", ActionMap::trivial(Z3, Ring::modular(4))},
        {"natural", ActionMap::from_images(S3, F23,
                                           {{S3->at("(1,2)"), RingAutomorphism::permutation_induced(F23, {1, 0, 2})},
                                            {S3->at("(1,2,3)"), RingAutomorphism::permutation_induced(F23, {1, 2, 0})}})},
    };
    return out;
}

}  // namespace

TEST(ActionMap, SamplesAreHomomorphisms) {
    for (const auto& s : samples()) {
        ASSERT_TRUE(s.sigma.valid()) << s.name << ": " << s.sigma.violation()->message;
        const Group& G = s.sigma.group();
        const Ring& A = s.sigma.ring();
        oracle::NaiveRing N(A);
        for (GroupIndex g = 0; g < G.order(); ++g)
            for (Elem a = 0; a < A.size(); ++a) {
                for (GroupIndex h = 0; h < G.order(); ++h)
                    ASSERT_EQ(s.sigma.apply(G.mul(g, h), a), s.sigma.apply(g, s.sigma.apply(h, a)));
                for (Elem b = 0; b < A.size(); ++b)
                    ASSERT_EQ(s.sigma.apply(g, N.mul(a, b)), N.mul(s.sigma.apply(g, a), s.sigma.apply(g, b)));
            }
    }
}

TEST(ActionMap, ViolationNamesTheFailingTriple) {
    auto Z2 = Group::cyclic_product({2});
    auto F22 = Ring::functions(2, 2);
    auto swap = RingAutomorphism::permutation_induced(F22, {1, 0});
    // sigma_1 = swap but sigma_0 must be the identity: put swap at e as well
    ActionMap bad(Z2, F22, {swap, swap});
    ASSERT_FALSE(bad.valid());
    EXPECT_EQ(bad.violation()->kind, ActionViolation::Kind::IdentityNotTrivial);
    EXPECT_THROW(bad.require_valid(), DomainError);

    auto Z3 = Group::cyclic_product({3});
    auto id = RingAutomorphism::identity(F22);
    ActionMap wrong_law(Z3, F22, {id, swap, swap});
    ASSERT_FALSE(wrong_law.valid());
    const auto& v = *wrong_law.violation();
    EXPECT_EQ(v.kind, ActionViolation::Kind::HomomorphismLaw);
    EXPECT_NE(wrong_law.apply(Z3->mul(v.g, v.h), v.a), wrong_law.apply(v.g, wrong_law.apply(v.h, v.a)));

    auto F4 = Ring::functions(1, 4);
    ActionMap not_auto(Z2, F4, {RingAutomorphism::identity(F4), RingAutomorphism::power_map(F4, 3)});
    EXPECT_EQ(not_auto.violation()->kind, ActionViolation::Kind::NotAutomorphism);
    EXPECT_TRUE(validate_action(not_auto).has_value());
}

TEST(ActionMap, FromImagesNeedsGenerators) {
    auto Z2xZ2 = Group::cyclic_product({2, 2});
    auto F22 = Ring::functions(2, 2);
    EXPECT_THROW(ActionMap::from_images(Z2xZ2, F22, {{1, RingAutomorphism::permutation_induced(F22, {1, 0})}}),
                 DomainError);
}

TEST(Kernel, MatchesBruteForce) {
    for (const auto& s : samples()) {
        const Group& G = s.sigma.group();
        std::vector<GroupIndex> brute;
        for (GroupIndex g = 0; g < G.order(); ++g) {
            bool trivial = true;
            for (Elem a = 0; a < s.sigma.ring().size(); ++a) trivial &= s.sigma.apply(g, a) == a;
            if (trivial) brute.push_back(g);
        }
        auto K = kernel(s.sigma);
        EXPECT_EQ(K.members, brute) << s.name;
        EXPECT_TRUE(K.is_normal());
        EXPECT_EQ(is_injective(s.sigma), brute.size() == 1) << s.name;
    }
}

TEST(FixedRing, MatchesBruteForceAndIsASubring) {
    for (const auto& s : samples()) {
        const Ring& A = s.sigma.ring();
        std::vector<Elem> brute;
        for (Elem a = 0; a < A.size(); ++a) {
            bool fixed = true;
            for (GroupIndex g = 0; g < s.sigma.group().order(); ++g) fixed &= s.sigma.apply(g, a) == a;
            if (fixed) brute.push_back(a);
        }
        auto F = fixed_ring(s.sigma);
        EXPECT_EQ(F, brute) << s.name;
        for (Elem a : F)
            for (Elem b : F) {
                EXPECT_TRUE(std::binary_search(F.begin(), F.end(), A.add(a, b)));
                EXPECT_TRUE(std::binary_search(F.begin(), F.end(), A.mul(a, b)));
            }
    }
}

TEST(GSimple, MatchesBruteForce) {
    for (const auto& s : samples()) {
        auto r = is_G_simple(s.sigma);
        EXPECT_EQ(r.simple, oracle::G_simple(s.sigma)) << s.name;
        if (!r.simple) {
            ASSERT_TRUE(r.witness);
            // the reported ideal is proper, nonzero and invariant
            EXPECT_GT(r.ideal.size(), 1u);
            EXPECT_LT(r.ideal.size(), s.sigma.ring().size());
            for (Elem a : r.ideal.elements)
                for (GroupIndex g = 0; g < s.sigma.group().order(); ++g)
                    EXPECT_TRUE(r.ideal.contains(s.sigma.apply(g, a)));
        }
    }
}

TEST(GSimple, KnownValues) {
    auto all = samples();
    auto find = [&](std::string_view n) -> const ActionMap& {
        for (const auto& s : all)
            if (s.name == n) return s.sigma;
        throw std::logic_error("missing sample");
    };
    EXPECT_TRUE(is_G_simple(find("swap")).simple);
    EXPECT_TRUE(is_G_simple(find("rotation")).simple);
    EXPECT_FALSE(is_G_simple(find("two_swaps")).simple);
    EXPECT_TRUE(is_G_simple(find("natural")).simple);
    EXPECT_FALSE(is_G_simple(find("trivial")).simple);  // Z/4 has the ideal 2Z/4
}

TEST(Inner, ConjugationsAreInnerAndPermutationsAreOuter) {
    auto M3 = Ring::matrices(2, 3);
    const Elem M = M3->encode(std::vector<std::uint64_t>{0, 1, 2, 0});
    auto phi = RingAutomorphism::conjugation(M3, M);
    auto v = is_inner(phi);
    ASSERT_TRUE(v.has_value());
    for (Elem t = 0; t < M3->size(); ++t) EXPECT_EQ(M3->mul(phi(t), *v), M3->mul(*v, t));

    auto F22 = Ring::functions(2, 2);
    EXPECT_FALSE(is_inner(RingAutomorphism::permutation_induced(F22, {1, 0})).has_value());
    EXPECT_TRUE(is_inner(RingAutomorphism::identity(F22)).has_value());
    EXPECT_THROW(RingAutomorphism::conjugation(M3, M3->zero()), DomainError);
}

TEST(Outer, ReportsFirstInnerElement) {
    for (const auto& s : samples()) {
        auto rep = outer_action_report(s.sigma);
        bool brute = true;
        for (GroupIndex g = 1; g < s.sigma.group().order(); ++g) {
            // inner means sigma_g(t) v = v t for a unit v; on a commutative ring only the identity is inner
            const Ring& A = s.sigma.ring();
            for (Elem v : units(A)) {
                bool ok = true;
                for (Elem t = 0; t < A.size() && ok; ++t) ok = A.mul(s.sigma.apply(g, t), v) == A.mul(v, t);
                if (ok) {
                    brute = false;
                    break;
                }
            }
        }
        EXPECT_EQ(rep.outer, brute) << s.name;
        EXPECT_EQ(is_outer_action(s.sigma), brute);
        if (!rep.outer) {
            EXPECT_TRUE(rep.inner_element && rep.unit);
        }
    }
}
