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

SkewRingPtr named(std::string_view name) { return build_instance(*named_instance(name)).ring; }

Truth verdict(const CheckResult& r, std::string_view id) {
    const Verdict* v = r.verdict(id);
    EXPECT_NE(v, nullptr) << id;
    return v ? v->value : Truth::Unknown;
}

Status assertion(const CheckResult& r, std::string_view id) {
    const Assertion* a = r.assertion(id);
    EXPECT_NE(a, nullptr) << id;
    return a ? a->status : Status::Undetermined;
}

struct Expected {
    const char* name;
    bool simple, g_simple, injective, centre_field;
};

}  // namespace

TEST(ThreeValuedLogic, ImplicationAndEquivalenceTables) {
    const Truth T = Truth::True, F = Truth::False, U = Truth::Unknown;
    EXPECT_EQ(implies(F, U), Status::Holds);
    EXPECT_EQ(implies(U, T), Status::Holds);
    EXPECT_EQ(implies(T, F), Status::Violated);
    EXPECT_EQ(implies(T, U), Status::Undetermined);
    EXPECT_EQ(implies(U, F), Status::Undetermined);
    EXPECT_EQ(equivalent(T, T), Status::Holds);
    EXPECT_EQ(equivalent(T, F), Status::Violated);
    EXPECT_EQ(equivalent(U, F), Status::Undetermined);
    EXPECT_EQ(all_equal({T, U, F}), Status::Violated);
    EXPECT_EQ(all_equal({T, U, T}), Status::Undetermined);
    EXPECT_EQ((T && U), U);
    EXPECT_EQ((F && U), F);
}

TEST(NamedInstances, BasicFactsAgreeWithOracles) {
    const Expected table[] = {
        {"swap_f2x2", true, true, true, true},
        {"matrix_conjugation_f3", true, true, true, true},
        {"matrix_conjugation_f2", false, true, true, false},
        {"trivial_f2_z2", false, true, false, false},
        {"two_swaps_f2x4", false, false, true, false},
        {"rotation_f2x3", true, true, true, true},
        {"z4_through_quotient", false, true, false, false},
        {"matrices_trivial_group", true, true, true, true},
        {"frobenius_f4", true, true, true, true},
    };
    for (const auto& e : table) {
        auto R = named(e.name);
        Analysis an(R);
        EXPECT_EQ(an.simple(), truth(e.simple)) << e.name;
        EXPECT_EQ(an.g_simple(), truth(e.g_simple)) << e.name;
        EXPECT_EQ(an.injective(), truth(e.injective)) << e.name;
        EXPECT_EQ(an.centre_is_field(), truth(e.centre_field)) << e.name;
        EXPECT_EQ(oracle::G_simple(R->action()), e.g_simple) << e.name;
        if (R->size() <= 4096) {
            oracle::NaiveSkew N(*R);
            EXPECT_EQ(N.simple(), e.simple) << e.name;
            auto Z = N.centre();
            EXPECT_EQ(oracle::is_field(Z, Elem{0}, R->one(), [&](Elem a, Elem b) { return R->mul(a, b); }),
                      e.centre_field)
                << e.name;
        }
    }
}

TEST(AbelianCriterion, AllAssertionsHoldOnNamedInstances) {
    for (const auto& spec : named_instances()) {
        auto b = build_instance(spec);
        Analysis an(b.ring, b.caps, true);
        auto r = theorem2_check(an);
        EXPECT_FALSE(r.violated()) << spec.name;
        EXPECT_EQ(assertion(r, "a"), Status::Holds) << spec.name;
    }
}

TEST(AbelianCriterion, CharacteristicTwoContrastExhibitsTheFailedConverse) {
    Analysis an(named("matrix_conjugation_f2"));
    auto r = theorem2_check(an);
    EXPECT_EQ(verdict(r, "i"), Truth::False);
    EXPECT_EQ(verdict(r, "ii"), Truth::False);
    EXPECT_EQ(verdict(r, "iii"), Truth::True);
    EXPECT_EQ(verdict(r, "b"), Truth::True);
    EXPECT_EQ(assertion(r, "c"), Status::Holds);
    EXPECT_EQ(assertion(r, "d"), Status::NotApplicable);
}

TEST(AbelianCriterion, SwapSatisfiesAllThreeConditions) {
    Analysis an(named("swap_f2x2"));
    auto r = theorem2_check(an);
    for (const char* id : {"i", "ii", "iii"}) EXPECT_EQ(verdict(r, id), Truth::True) << id;
    EXPECT_EQ(verdict(r, "b"), Truth::False);
    EXPECT_EQ(assertion(r, "d"), Status::Holds);
}

TEST(Centre, CharacteristicTwoHasNonUnitOnePlusMU) {
    auto R = named("matrix_conjugation_f2");
    const Ring& A = R->coefficients();
    const Elem M = A.encode(std::vector<std::uint64_t>{0, 1, 1, 0});
    const auto z = SkewElement::one(R) + SkewElement::homogeneous(R, M, 1);
    EXPECT_TRUE(is_central(z));
    EXPECT_TRUE((z * z).is_zero());
    const auto centre = skew_center(R);
    EXPECT_NE(std::find(centre.begin(), centre.end(), z), centre.end());
    auto I = skew_ideal_closure(R, std::span<const SkewElement>(&z, 1));
    EXPECT_FALSE(I.is_whole());
    EXPECT_FALSE(I.is_zero());

    Analysis an(R);
    auto v = centre_field_verdict(an, "f");
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->role, "centre_zero_divisor");
    ASSERT_EQ(v.witness->skew.size(), 2u);
    const auto a = SkewElement(R, v.witness->skew[0]), b = SkewElement(R, v.witness->skew[1]);
    EXPECT_TRUE((a * b).is_zero());
    EXPECT_FALSE(a.is_zero());
    EXPECT_FALSE(b.is_zero());
}

TEST(MaxCommutativeCriterion, DomainAndValues) {
    EXPECT_THROW(theorem1_check(Analysis(named("matrix_conjugation_f3"))), DomainError);
    auto r = theorem1_check(Analysis(named("swap_f2x2")));
    EXPECT_EQ(assertion(r, "equivalence"), Status::Holds);
    EXPECT_EQ(verdict(r, "ii"), Truth::True);
    auto t = theorem1_check(Analysis(named("trivial_f2_z2")));
    EXPECT_EQ(verdict(t, "ii"), Truth::False);
    EXPECT_EQ(t.verdict("ii")->witness->role, "centralizing_element");
}

TEST(OuterActionCriterion, PreconditionsAndOuterActions) {
    EXPECT_THROW(crow_check(Analysis(named("s3_natural_f2"), Caps{}, true)), PreconditionError);
    EXPECT_THROW(crow_check(Analysis(named("matrix_conjugation_f3"))), PreconditionError);
    EXPECT_THROW(crow_check(Analysis(named("trivial_f2_z2"))), PreconditionError);
    for (const char* name : {"swap_f2x2", "frobenius_f4", "rotation_f2x3", "two_swaps_f2x4"}) {
        auto r = crow_check(Analysis(named(name)));
        EXPECT_EQ(verdict(r, "outer"), Truth::True) << name;
        EXPECT_EQ(assertion(r, "equivalence"), Status::Holds) << name;
    }
}

TEST(CentreLocation, CentreInIdentityComponent) {
    auto swap = lemma7_check(Analysis(named("swap_f2x2")));
    EXPECT_EQ(verdict(swap, "i"), Truth::True);
    EXPECT_EQ(verdict(swap, "ii"), Truth::True);
    EXPECT_EQ(verdict(swap, "iii"), Truth::True);
    auto m = lemma7_check(Analysis(named("matrix_conjugation_f3")));
    EXPECT_EQ(verdict(m, "i"), Truth::False);
    EXPECT_EQ(m.verdict("i")->witness->role, "central_off_identity");
    EXPECT_EQ(assertion(m, "a"), Status::Holds);
    EXPECT_EQ(assertion(m, "b"), Status::Holds);
    EXPECT_EQ(assertion(m, "c"), Status::NotApplicable);
}

TEST(Centralizer, KernelShapeAndMaxCommutativity) {
    auto r = centralizer_check(Analysis(named("z4_through_quotient")));
    EXPECT_EQ(verdict(r, "equals_A_x_K"), Truth::True);
    EXPECT_EQ(assertion(r, "prop11"), Status::Holds);
    EXPECT_EQ(assertion(r, "maxcomm_injective"), Status::Holds);
    auto s3 = centralizer_check(Analysis(named("s3_natural_f2")));
    EXPECT_EQ(verdict(s3, "equals_A_x_K"), Truth::False);
    EXPECT_EQ(assertion(s3, "prop11"), Status::NotApplicable);
}

TEST(CentreStructure, RelationsHoldAndAugmentationTracksTrivialAction) {
    for (const auto& spec : named_instances()) {
        auto b = build_instance(spec);
        Analysis an(b.ring, b.caps);
        auto r = centre_structure_check(an);
        ASSERT_TRUE(r.skipped.empty()) << spec.name;
        EXPECT_FALSE(r.violated()) << spec.name;
        EXPECT_EQ(verdict(r, "augmentation_multiplicative"), truth(an.kernel_subgroup().is_whole())) << spec.name;
    }
    // a_g in A^G fails for the natural S3 action: f u_(12) + sigma-conjugates is central
    auto s3 = centre_structure_check(Analysis(named("s3_natural_f2")));
    EXPECT_EQ(verdict(s3, "coefficients_in_fixed_ring"), Truth::False);
    EXPECT_EQ(verdict(s3, "coefficients_fixed_by_centralizer"), Truth::True);
    EXPECT_EQ(s3.assertion("fixed_ring"), nullptr);
}

TEST(Constructive, PropertiesOnAbelianGSimpleInstances) {
    for (const char* name : {"swap_f2x2", "matrix_conjugation_f3", "matrix_conjugation_f2", "trivial_f2_z2",
                             "rotation_f2x3", "frobenius_f4", "z4_through_quotient"}) {
        auto r = constructive_check(Analysis(named(name)));
        EXPECT_EQ(assertion(r, "support_reduce"), Status::Holds) << name;
        EXPECT_EQ(assertion(r, "central_witness"), Status::Holds) << name;
    }
    EXPECT_THROW(constructive_check(Analysis(named("two_swaps_f2x4"))), PreconditionError);
    EXPECT_THROW(constructive_check(Analysis(named("s3_natural_f2"))), PreconditionError);
}

TEST(Analysis, CapacityBecomesUnknown) {
    Caps tiny;
    tiny.enumeration = 64;
    Analysis an(named("matrix_conjugation_f3"), tiny);
    EXPECT_EQ(an.simple(), Truth::Unknown);
    EXPECT_FALSE(an.simplicity_error().empty());
    auto r = theorem2_check(an);
    EXPECT_EQ(assertion(r, "c"), Status::Undetermined);
    EXPECT_FALSE(r.violated());
}

TEST(Analysis, RandomInstancesNeverViolate) {
    InstanceGenerator gen(123, 4096);
    for (int i = 0; i < 150; ++i) {
        auto spec = gen.next();
        auto b = build_instance(spec);
        Analysis an(b.ring, b.caps);
        EXPECT_FALSE(necessary_conditions(an).violated()) << spec.name;
        EXPECT_FALSE(theorem2_check(an).violated()) << spec.name;
        EXPECT_FALSE(lemma7_check(an).violated()) << spec.name;
        EXPECT_FALSE(centralizer_check(an).violated()) << spec.name;
        EXPECT_FALSE(centre_structure_check(an).violated()) << spec.name;
        if (an.commutative()) {
            EXPECT_FALSE(theorem1_check(an).violated()) << spec.name;
        }
    }
}
