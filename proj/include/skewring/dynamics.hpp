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

#ifndef SKEWRING_DYNAMICS_HPP
#define SKEWRING_DYNAMICS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "criteria.hpp"
#include "finite_group.hpp"
#include "finite_ring.hpp"
#include "group_action.hpp"
#include "skew_group_ring.hpp"

namespace skewring {

/// A finite group acting on a finite discrete space X, with F_q-valued functions on X as coefficients.
class TransformationGroup {
   public:
    TransformationGroup(SetAction action, std::uint32_t q) : action_(std::move(action)), q_(q) {
        if (!GaloisField::prime_power(q) || q > 256)
            throw DomainError("coefficient field order must be a prime power <= 256, got " + std::to_string(q));
        if (action_.points() == 0) throw DomainError("transformation group needs a nonempty point set");
    }

    const SetAction& action() const noexcept { return action_; }
    const Group& group() const noexcept { return *action_.group(); }
    const GroupPtr& group_ptr() const noexcept { return action_.group(); }
    std::uint32_t points() const noexcept { return action_.points(); }
    std::uint32_t field_order() const noexcept { return q_; }

   private:
    SetAction action_;
    std::uint32_t q_;
};

/// sigma_g(f)(x) = f(g^-1 . x) on F_q^X.
inline ActionMap induce_sigma(const TransformationGroup& T, const Caps& caps = {}) {
    auto ring = Ring::functions(T.points(), T.field_order());
    require_within_cap("function ring " + ring->name(), ring->size(), caps.enumeration);
    std::vector<RingAutomorphism> sigma;
    for (GroupIndex g = 0; g < T.group().order(); ++g)
        sigma.push_back(RingAutomorphism::permutation_induced(ring, T.action().row(g), caps));
    ActionMap out(T.group_ptr(), ring, std::move(sigma));
    out.require_valid();
    return out;
}

struct FaithfulResult {
    bool faithful = true;
    /// Some g != e fixing every point.
    std::optional<GroupIndex> trivially_acting;
};

inline FaithfulResult is_faithful(const TransformationGroup& T) {
    for (GroupIndex g = 1; g < T.group().order(); ++g)
        if (T.action().row(g) == perm::identity(T.points())) return {false, g};
    return {};
}

struct MinimalResult {
    bool minimal = true;
    /// The orbit of the first point, when it is a proper invariant subset.
    std::vector<std::uint32_t> invariant_subset;
};

/// For finite X minimality is transitivity.
inline MinimalResult is_minimal(const TransformationGroup& T) {
    auto orbs = orbits(T.action());
    if (orbs.size() == 1) return {};
    return {false, orbs.front()};
}

struct FreeResult {
    bool free = true;
    std::optional<std::pair<GroupIndex, std::uint32_t>> fixed_point;  // (g != e, x) with g.x = x
};

inline FreeResult is_free(const TransformationGroup& T) {
    for (GroupIndex g = 1; g < T.group().order(); ++g)
        for (std::uint32_t x = 0; x < T.points(); ++x)
            if (T.action().apply(g, x) == x) return {false, std::make_pair(g, x)};
    return {};
}

/// Stab(x).y for every pair of points, as sorted point lists indexed [x][y].
inline std::vector<std::vector<std::vector<std::uint32_t>>> stabilizer_orbit_sets(const TransformationGroup& T) {
    const std::uint32_t n = T.points();
    std::vector<std::vector<std::vector<std::uint32_t>>> out(n, std::vector<std::vector<std::uint32_t>>(n));
    for (std::uint32_t x = 0; x < n; ++x) {
        auto S = stabilizer(T.action(), x);
        for (std::uint32_t y = 0; y < n; ++y) {
            auto& set = out[x][y];
            for (GroupIndex g : S.members) set.push_back(T.action().apply(g, y));
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
        }
    }
    return out;
}

// ---- subsets of X and ideals of F_q^X -----------------------------------------------------

/// The ideal of functions vanishing on `subset`, in canonical order.
inline std::vector<Elem> vanishing_ideal(const Ring& functions, const std::vector<std::uint32_t>& subset,
                                         const Caps& caps = {}) {
    if (functions.kind() != RingKind::FunctionRing) throw DomainError("vanishing_ideal needs a function ring");
    require_within_cap("vanishing ideal", functions.size(), caps.enumeration);
    std::vector<Elem> out;
    for (Elem f = 0; f < functions.size(); ++f) {
        bool vanishes = true;
        for (std::uint32_t x : subset)
            if (functions.digit(f, x) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes) out.push_back(f);
    }
    return out;
}

/// Points where every function of the set vanishes.
inline std::vector<std::uint32_t> zero_set(const Ring& functions, std::span<const Elem> ideal) {
    if (functions.kind() != RingKind::FunctionRing) throw DomainError("zero_set needs a function ring");
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < functions.points(); ++x) {
        bool zero = true;
        for (Elem f : ideal)
            if (functions.digit(f, x) != 0) {
                zero = false;
                break;
            }
        if (zero) out.push_back(x);
    }
    return out;
}

// ---- checks -------------------------------------------------------------------------------

/// Facts about one transformation group and its skew group ring.
class DynamicsAnalysis {
   public:
    DynamicsAnalysis(TransformationGroup T, Caps caps = {}, bool witness_search = true)
        : T_(std::move(T)), analysis_(SkewRing::create(induce_sigma(T_, caps)), caps, witness_search) {}

    const TransformationGroup& transformation_group() const noexcept { return T_; }
    const Analysis& analysis() const noexcept { return analysis_; }

   private:
    TransformationGroup T_;
    Analysis analysis_;
};

inline Verdict faithful_verdict(const TransformationGroup& T, std::string id) {
    auto f = is_faithful(T);
    Verdict v{std::move(id), truth(f.faithful), "criterion", std::nullopt, {}};
    if (f.trivially_acting) v.witness = Witness{"trivially_acting", {}, {}, {*f.trivially_acting}, {}, 0};
    return v;
}

inline Verdict minimal_verdict(const TransformationGroup& T, std::string id) {
    auto m = is_minimal(T);
    Verdict v{std::move(id), truth(m.minimal), "criterion", std::nullopt, {}};
    if (!m.minimal) v.witness = Witness{"invariant_subset", {}, {}, {}, m.invariant_subset, 0};
    return v;
}

inline Verdict free_verdict(const TransformationGroup& T, std::string id) {
    auto f = is_free(T);
    Verdict v{std::move(id), truth(f.free), "criterion", std::nullopt, {}};
    if (f.fixed_point) v.witness = Witness{"fixed_point", {}, {}, {f.fixed_point->first}, {f.fixed_point->second}, 0};
    return v;
}

/// Faithful <=> sigma injective; minimal <=> F_q^X is G-simple.
inline CheckResult lemma13_14_check(const DynamicsAnalysis& dn) {
    const auto& T = dn.transformation_group();
    const auto& an = dn.analysis();
    CheckResult r{"lemma13_14", {}, {}, {}};
    auto f = faithful_verdict(T, "faithful");
    auto inj = injective_verdict(an, "injective");
    auto m = minimal_verdict(T, "minimal");
    auto gs = g_simple_verdict(an, "G_simple");
    r.verdicts = {f, inj, m, gs};
    r.assertions.push_back({"lemma13", "faithful <=> sigma injective", equivalent(f.value, inj.value), {}});
    r.assertions.push_back({"lemma14", "minimal <=> A is G-simple", equivalent(m.value, gs.value), {}});
    return r;
}

/**
 * @brief (i) R simple, (ii) G-simple and maximal commutative, (iii) G-simple and centre a
 *        field, (iv) G-simple and sigma injective, (v) minimal and faithful; asserts
 *        (a) (i) <=> (ii) and (i) implies the rest, (b) (iv) <=> (v), (d) all equal for abelian G.
 */
inline CheckResult theorem3_check(const DynamicsAnalysis& dn) {
    const auto& T = dn.transformation_group();
    const auto& an = dn.analysis();
    CheckResult r{"theorem3", {}, {}, {}};
    auto gs = g_simple_verdict(an, "G_simple");
    auto i = simplicity_verdict(an, "i");
    auto ii = combined("ii", gs, max_comm_verdict(an, "max_commutative"));
    auto iii = combined("iii", gs, centre_field_verdict(an, "centre_field"));
    auto iv = combined("iv", gs, injective_verdict(an, "injective"));
    auto v = combined("v", minimal_verdict(T, "minimal"), faithful_verdict(T, "faithful"));
    r.verdicts = {i, ii, iii, iv, v};
    Status a = equivalent(i.value, ii.value);
    for (Truth t : {iii.value, iv.value, v.value}) {
        Status s = implies(i.value, t);
        if (s == Status::Violated || (s == Status::Undetermined && a == Status::Holds)) a = s;
    }
    r.assertions.push_back({"a", "(i) <=> (ii), and (i) => (iii), (iv), (v)", a, {}});
    r.assertions.push_back({"b", "(iv) <=> (v)", equivalent(iv.value, v.value), {}});
    if (an.abelian())
        r.assertions.push_back({"d", "G abelian: (i)-(v) all equivalent",
                                all_equal({i.value, ii.value, iii.value, iv.value, v.value}), {}});
    else
        r.assertions.push_back({"d", "G abelian: (i)-(v) all equivalent", Status::NotApplicable, "G is not abelian"});
    Verdict c{"c", Truth::False, "oracle", std::nullopt,
              "finite analogue; reports whether one of (iii)-(v) holds while (i) and (ii) fail"};
    if (i.value == Truth::False && ii.value == Truth::False &&
        (iii.value == Truth::True || iv.value == Truth::True || v.value == Truth::True)) {
        c.value = Truth::True;
        c.witness = i.witness;
    } else if (i.value == Truth::Unknown) {
        c.value = Truth::Unknown;
    }
    r.verdicts.push_back(std::move(c));
    return r;
}

/// G abelian: minimal and faithful => free.
inline CheckResult abelian_freeness_check(const TransformationGroup& T) {
    if (!is_abelian(T.group())) throw DomainError("abelian_freeness_check requires an abelian group");
    CheckResult r{"abelian_freeness", {}, {}, {}};
    auto m = minimal_verdict(T, "minimal");
    auto f = faithful_verdict(T, "faithful");
    auto fr = free_verdict(T, "free");
    r.verdicts = {m, f, fr};
    r.assertions.push_back({"free", "minimal and faithful => free", implies(m.value && f.value, fr.value), {}});
    return r;
}

}  // namespace skewring

#endif  // SKEWRING_DYNAMICS_HPP
