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

#ifndef SKEWRING_CRITERIA_HPP
#define SKEWRING_CRITERIA_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "group_action.hpp"
#include "skew_group_ring.hpp"

namespace skewring {

/// Three-valued truth; Unknown when a required computation exceeded its cap.
enum class Truth { False, True, Unknown };

inline Truth truth(bool b) { return b ? Truth::True : Truth::False; }

inline const char* to_string(Truth t) {
    switch (t) {
        case Truth::False: return "false";
        case Truth::True: return "true";
        case Truth::Unknown: return "unknown";
    }
    return "?";
}

inline Truth operator&&(Truth a, Truth b) {
    if (a == Truth::False || b == Truth::False) return Truth::False;
    if (a == Truth::Unknown || b == Truth::Unknown) return Truth::Unknown;
    return Truth::True;
}

/**
 * @brief Concrete data that settles a verdict on its own. The `role` names what the data
 *        proves; see verify_witness for the recomputation behind each role.
 */
struct Witness {
    std::string role;
    std::vector<std::vector<Elem>> skew;  // dense coefficient vectors of R
    std::vector<Elem> ring;               // elements of A
    std::vector<GroupIndex> group;        // elements of G
    std::vector<std::uint32_t> points;    // points of X
    std::uint64_t size = 0;               // size of the witnessed ideal, when relevant

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
    std::string id;
    Truth value = Truth::Unknown;
    std::string method;  // "criterion" or "oracle"
    std::optional<Witness> witness;
    std::string note;
};

enum class Status { Holds, Violated, Undetermined, NotApplicable };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Violated: return "violated";
        case Status::Undetermined: return "undetermined";
        case Status::NotApplicable: return "not applicable";
    }
    return "?";
}

/// One implication checked on one instance.
struct Assertion {
    std::string id;
    std::string statement;
    Status status = Status::Undetermined;
    std::string note;
};

struct CheckResult {
    std::string check;
    std::vector<Verdict> verdicts;
    std::vector<Assertion> assertions;
    /// Set when the check could not run (failed hypothesis, capacity).
    std::string skipped;

    bool violated() const {
        for (const auto& a : assertions)
            if (a.status == Status::Violated) return true;
        return false;
    }
    const Verdict* verdict(std::string_view id) const {
        for (const auto& v : verdicts)
            if (v.id == id) return &v;
        return nullptr;
    }
    const Assertion* assertion(std::string_view id) const {
        for (const auto& a : assertions)
            if (a.id == id) return &a;
        return nullptr;
    }
};

/// p => q over three-valued truth.
inline Status implies(Truth p, Truth q) {
    if (p == Truth::False) return Status::Holds;
    if (q == Truth::True) return Status::Holds;
    if (p == Truth::True && q == Truth::False) return Status::Violated;
    return Status::Undetermined;
}

inline Status equivalent(Truth p, Truth q) {
    if (p == Truth::Unknown || q == Truth::Unknown) return Status::Undetermined;
    return p == q ? Status::Holds : Status::Violated;
}

inline Status all_equal(std::initializer_list<Truth> values) {
    bool unknown = false, seen_true = false, seen_false = false;
    for (Truth t : values) {
        unknown |= t == Truth::Unknown;
        seen_true |= t == Truth::True;
        seen_false |= t == Truth::False;
    }
    if (seen_true && seen_false) return Status::Violated;
    return unknown ? Status::Undetermined : Status::Holds;
}

/**
 * @brief Memoized facts about one skew group ring, each computed at most once and
 *        shared by every check. A capacity error is remembered and reported as Unknown.
 */
class Analysis {
   public:
    explicit Analysis(SkewRingPtr ctx, Caps caps = {}, bool witness_search = false)
        : ctx_(std::move(ctx)), caps_(caps), witness_search_(witness_search) {}

    const SkewRingPtr& context() const noexcept { return ctx_; }
    const SkewRing& ring() const noexcept { return *ctx_; }
    const ActionMap& action() const noexcept { return ctx_->action(); }
    const Caps& caps() const noexcept { return caps_; }
    bool witness_search() const noexcept { return witness_search_; }

    bool abelian() const { return is_abelian(ctx_->group()); }
    bool commutative() const { return ctx_->coefficients().is_commutative(); }

    const std::optional<SkewSimplicity>& simplicity() const {
        return memo(simplicity_, simplicity_error_, [&] { return is_simple(ctx_, caps_, witness_search_); });
    }
    Truth simple() const {
        const auto& s = simplicity();
        if (!s || s->status == SimplicityStatus::Undetermined) return Truth::Unknown;
        return truth(s->status == SimplicityStatus::Simple);
    }

    const std::optional<SimplicityResult>& g_simplicity() const {
        return memo(g_simple_, g_simple_error_, [&] { return is_G_simple(action(), caps_); });
    }
    Truth g_simple() const { return g_simplicity() ? truth(g_simplicity()->simple) : Truth::Unknown; }

    const Subgroup& kernel_subgroup() const {
        if (!kernel_) kernel_ = kernel(action());
        return *kernel_;
    }
    Truth injective() const { return truth(kernel_subgroup().is_trivial()); }

    const std::optional<std::vector<SkewElement>>& centre() const {
        return memo(centre_, centre_error_, [&] { return skew_center(ctx_, caps_); });
    }
    const std::optional<FieldTest<SkewElement>>& centre_field() const {
        if (!centre()) {
            centre_field_error_ = centre_error_;
            static const std::optional<FieldTest<SkewElement>> none;
            return none;
        }
        return memo(centre_field_, centre_field_error_, [&] { return centre_field_test(ctx_, *centre()); });
    }
    Truth centre_is_field() const { return centre_field() ? truth(centre_field()->is_field) : Truth::Unknown; }

    const std::optional<MaxCommutativity>& max_commutativity() const {
        return memo(max_comm_, max_comm_error_, [&] { return is_max_commutative_A(ctx_, caps_); });
    }
    Truth max_commutative() const {
        return max_commutativity() ? truth(max_commutativity()->maximal) : Truth::Unknown;
    }

    const std::optional<OuterReport>& outer_report() const {
        return memo(outer_, outer_error_, [&] { return outer_action_report(action(), caps_); });
    }
    Truth outer() const { return outer_report() ? truth(outer_report()->outer) : Truth::Unknown; }

    const std::optional<std::vector<SkewElement>>& centralizer() const {
        return memo(centralizer_, centralizer_error_, [&] { return centralizer_of_A(ctx_, caps_); });
    }

    /// Error text for the most recent failed computation of the named fact.
    const std::string& simplicity_error() const noexcept { return simplicity_error_; }
    const std::string& g_simple_error() const noexcept { return g_simple_error_; }
    const std::string& centre_error() const noexcept { return centre_error_; }
    const std::string& centre_field_error() const noexcept { return centre_field_error_; }
    const std::string& max_comm_error() const noexcept { return max_comm_error_; }
    const std::string& outer_error() const noexcept { return outer_error_; }
    const std::string& centralizer_error() const noexcept { return centralizer_error_; }

   private:
    template <class T, class F>
    static const std::optional<T>& memo(std::optional<std::optional<T>>& slot, std::string& error, F&& f) {
        if (!slot) {
            try {
                slot.emplace(f());
            } catch (const CapacityError& e) {
                error = e.what();
                slot.emplace(std::nullopt);
            }
        }
        return *slot;
    }

    SkewRingPtr ctx_;
    Caps caps_;
    bool witness_search_;
    mutable std::optional<std::optional<SkewSimplicity>> simplicity_;
    mutable std::optional<std::optional<SimplicityResult>> g_simple_;
    mutable std::optional<Subgroup> kernel_;
    mutable std::optional<std::optional<std::vector<SkewElement>>> centre_;
    mutable std::optional<std::optional<FieldTest<SkewElement>>> centre_field_;
    mutable std::optional<std::optional<MaxCommutativity>> max_comm_;
    mutable std::optional<std::optional<OuterReport>> outer_;
    mutable std::optional<std::optional<std::vector<SkewElement>>> centralizer_;
    mutable std::string simplicity_error_, g_simple_error_, centre_error_, centre_field_error_, max_comm_error_,
        outer_error_, centralizer_error_;
};

// ---- verdict builders ---------------------------------------------------------------------

inline Verdict simplicity_verdict(const Analysis& an, std::string id) {
    Verdict v{std::move(id), an.simple(), "oracle", std::nullopt, {}};
    const auto& s = an.simplicity();
    if (!s) {
        v.note = an.simplicity_error();
    } else if (s->status == SimplicityStatus::NotSimple) {
        v.witness = Witness{"proper_ideal_generator", {s->witness->coefficients()}, {}, {}, {}, s->ideal_size};
        if (s->linear) v.note = "exact: point-idempotent candidates, ideals spanned over F_p";
        else if (s->witness_search) v.note = "witness search over support size <= 2";
    } else if (s->linear) {
        v.note = "exact: point-idempotent candidates, ideals spanned over F_p";
    } else if (s->status == SimplicityStatus::Undetermined) {
        v.note = "witness search found no proper principal ideal; simplicity not claimed";
    }
    return v;
}

inline Verdict g_simple_verdict(const Analysis& an, std::string id) {
    Verdict v{std::move(id), an.g_simple(), "oracle", std::nullopt, {}};
    const auto& g = an.g_simplicity();
    if (!g) v.note = an.g_simple_error();
    else if (!g->simple) v.witness = Witness{"invariant_ideal_generator", {}, {*g->witness}, {}, {}, g->ideal.size()};
    return v;
}

inline Verdict injective_verdict(const Analysis& an, std::string id) {
    Verdict v{std::move(id), an.injective(), "criterion", std::nullopt, {}};
    const auto& K = an.kernel_subgroup();
    if (!K.is_trivial()) v.witness = Witness{"kernel_element", {}, {}, {K.members[1]}, {}, K.size()};
    return v;
}

inline Verdict centre_field_verdict(const Analysis& an, std::string id) {
    Verdict v{std::move(id), an.centre_is_field(), "criterion", std::nullopt, {}};
    const auto& f = an.centre_field();
    if (!f) {
        v.note = an.centre_field_error();
    } else if (!f->is_field) {
        Witness w{"centre_zero_divisor", {f->non_unit->coefficients()}, {}, {}, {}, an.centre()->size()};
        if (f->annihilator) w.skew.push_back(f->annihilator->coefficients());
        v.witness = std::move(w);
    }
    return v;
}

inline Verdict max_comm_verdict(const Analysis& an, std::string id) {
    Verdict v{std::move(id), an.max_commutative(), "criterion", std::nullopt, {}};
    const auto& m = an.max_commutativity();
    if (!m) v.note = an.max_comm_error();
    else if (!m->maximal) v.witness = Witness{"centralizing_element", {m->witness->coefficients()}, {}, {}, {}, 0};
    return v;
}

inline Verdict outer_verdict(const Analysis& an, std::string id) {
    Verdict v{std::move(id), an.outer(), "criterion", std::nullopt, {}};
    const auto& o = an.outer_report();
    if (!o) v.note = an.outer_error();
    else if (!o->outer) v.witness = Witness{"inner_unit", {}, {*o->unit}, {*o->inner_element}, {}, 0};
    return v;
}

inline Verdict combined(std::string id, const Verdict& a, const Verdict& b) {
    Verdict v{std::move(id), a.value && b.value, "criterion", std::nullopt, {}};
    if (a.value == Truth::False) v.witness = a.witness;
    else if (b.value == Truth::False) v.witness = b.witness;
    if (!a.note.empty()) v.note = a.note;
    if (!b.note.empty()) v.note += (v.note.empty() ? "" : "; ") + b.note;
    return v;
}

// ---- checks -------------------------------------------------------------------------------

/// A simple R has a field as centre, a G-simple A, and an injective sigma.
inline CheckResult necessary_conditions(const Analysis& an) {
    CheckResult r{"necessary_conditions", {}, {}, {}};
    r.verdicts.push_back(simplicity_verdict(an, "simple"));
    r.verdicts.push_back(centre_field_verdict(an, "centre_field"));
    r.verdicts.push_back(g_simple_verdict(an, "G_simple"));
    r.verdicts.push_back(injective_verdict(an, "injective"));
    const Truth s = an.simple();
    r.assertions.push_back({"nc.i", "simple => Z(R) is a field", implies(s, an.centre_is_field()), {}});
    r.assertions.push_back({"nc.ii", "simple => A is G-simple", implies(s, an.g_simple()), {}});
    r.assertions.push_back({"nc.iii", "simple => sigma injective", implies(s, an.injective()), {}});
    return r;
}

/**
 * @brief (i) R simple, (ii) A G-simple and Z(R) a field, (iii) A G-simple and sigma
 *        injective; (a) always, (c) for abelian G, (d) for abelian G and commutative A.
 */
inline CheckResult theorem2_check(const Analysis& an) {
    CheckResult r{"theorem2", {}, {}, {}};
    auto gs = g_simple_verdict(an, "G_simple");
    auto i = simplicity_verdict(an, "i");
    auto ii = combined("ii", gs, centre_field_verdict(an, "centre_field"));
    auto iii = combined("iii", gs, injective_verdict(an, "injective"));
    r.verdicts = {i, ii, iii};
    r.assertions.push_back({"a", "(i) => (ii) and (iii)", implies(i.value, ii.value && iii.value), {}});
    if (an.abelian()) {
        r.assertions.push_back({"c", "G abelian: (i) <=> (ii)", equivalent(i.value, ii.value), {}});
        if (an.commutative())
            r.assertions.push_back({"d", "G abelian, A commutative: (i) <=> (ii) <=> (iii)",
                                    all_equal({i.value, ii.value, iii.value}), {}});
        else
            r.assertions.push_back({"d", "G abelian, A commutative: (i) <=> (ii) <=> (iii)", Status::NotApplicable,
                                    "A is not commutative"});
    } else {
        r.assertions.push_back({"c", "G abelian: (i) <=> (ii)", Status::NotApplicable, "G is not abelian"});
        r.assertions.push_back(
            {"d", "G abelian, A commutative: (i) <=> (ii) <=> (iii)", Status::NotApplicable, "G is not abelian"});
    }
    Verdict b{"b", Truth::False, "oracle", std::nullopt,
              "finite analogue; reports whether (ii) or (iii) holds while (i) fails on this instance"};
    if (i.value == Truth::False && (ii.value == Truth::True || iii.value == Truth::True)) {
        b.value = Truth::True;
        b.witness = i.witness;
    } else if (i.value == Truth::Unknown) {
        b.value = Truth::Unknown;
    }
    r.verdicts.push_back(std::move(b));
    return r;
}

/// A commutative: R simple <=> A G-simple and maximal commutative in R.
inline CheckResult theorem1_check(const Analysis& an) {
    if (!an.commutative()) throw DomainError("theorem1_check requires a commutative coefficient ring");
    CheckResult r{"theorem1", {}, {}, {}};
    auto i = simplicity_verdict(an, "i");
    auto ii = combined("ii", g_simple_verdict(an, "G_simple"), max_comm_verdict(an, "max_commutative"));
    r.verdicts = {i, ii};
    r.assertions.push_back({"equivalence", "(i) <=> (ii)", equivalent(i.value, ii.value), {}});
    return r;
}

/// G abelian and sigma outer: R simple <=> A G-simple.
inline CheckResult crow_check(const Analysis& an) {
    if (!an.abelian()) throw PreconditionError("crow_check: group is not abelian");
    auto o = outer_verdict(an, "outer");
    if (o.value == Truth::Unknown) throw PreconditionError("crow_check: outerness undetermined: " + an.outer_error());
    if (o.value == Truth::False) throw PreconditionError("crow_check: action is not outer");
    CheckResult r{"crow", {}, {}, {}};
    auto s = simplicity_verdict(an, "simple");
    auto g = g_simple_verdict(an, "G_simple");
    r.verdicts = {o, s, g};
    r.assertions.push_back({"equivalence", "simple <=> G-simple", equivalent(s.value, g.value), {}});
    return r;
}

/// Coefficients of the centre that lie in A^G and Z(A), placed at e.
inline std::vector<Elem> fixed_central_coefficients(const Analysis& an) {
    const Ring& A = an.ring().coefficients();
    auto fixed = fixed_ring(an.action(), an.caps());
    std::vector<Elem> out;
    for (Elem a : fixed) {
        bool central = true;
        for (Elem b : A.additive_generators())
            if (A.mul(a, b) != A.mul(b, a)) {
                central = false;
                break;
            }
        if (central) out.push_back(a);
    }
    return out;
}

/**
 * @brief (i) Z(R) lies in A u_e, (ii) Z(R) = (A^G cap Z(A)) u_e, (iii) Z(R) is a field;
 *        (a) (i) <=> (ii), (b) A G-simple and (i) => (iii). The orderable clause has no
 *        nontrivial finite instance and is not evaluated.
 */
inline CheckResult lemma7_check(const Analysis& an) {
    CheckResult r{"lemma7", {}, {}, {}};
    const auto& Z = an.centre();
    if (!Z) {
        r.skipped = an.centre_error();
        return r;
    }
    Verdict i{"i", Truth::True, "criterion", std::nullopt, {}};
    for (const auto& z : *Z)
        if (z.support_size() > 0 && z.support().back() != 0) {
            i.value = Truth::False;
            i.witness = Witness{"central_off_identity", {z.coefficients()}, {}, {}, {}, 0};
            break;
        }
    auto expected = fixed_central_coefficients(an);
    std::vector<SkewElement> embedded;
    for (Elem a : expected) embedded.push_back(SkewElement::embed(an.context(), a));
    std::sort(embedded.begin(), embedded.end());
    Verdict ii{"ii", truth(embedded == *Z), "criterion", std::nullopt,
               "|Z(R)| = " + std::to_string(Z->size()) + ", |A^G cap Z(A)| = " + std::to_string(expected.size())};
    auto iii = centre_field_verdict(an, "iii");
    r.verdicts = {i, ii, iii};
    r.assertions.push_back({"a", "(i) <=> (ii)", equivalent(i.value, ii.value), {}});
    r.assertions.push_back({"b", "A G-simple and (i) => (iii)", implies(an.g_simple() && i.value, iii.value), {}});
    r.assertions.push_back({"c", "G orderable abelian: (iii) => (i)", Status::NotApplicable,
                            "no nontrivial finite group is orderable"});
    return r;
}

/// C_R(A) against the subring A x K of elements supported on the kernel of sigma.
inline CheckResult centralizer_check(const Analysis& an) {
    CheckResult r{"centralizer", {}, {}, {}};
    const auto& C = an.centralizer();
    if (!C) {
        r.skipped = an.centralizer_error();
        return r;
    }
    const auto& K = an.kernel_subgroup();
    bool equal = true;
    std::optional<Witness> w;
    for (const auto& c : *C)
        for (GroupIndex g : c.support())
            if (!K.contains(g) && equal) {
                equal = false;
                w = Witness{"centralizer_outside_kernel", {c.coefficients()}, {}, {}, {}, 0};
            }
    // Every element supported on K centralizes A, so counting settles the other inclusion.
    std::uint64_t expected = 1;
    for (std::size_t n = 0; n < K.size(); ++n) expected *= an.ring().coefficients().size();
    if (an.commutative() && equal && C->size() != expected) equal = false;
    Verdict v{"equals_A_x_K", truth(equal), "criterion", w,
              "|C_R(A)| = " + std::to_string(C->size()) + ", |K| = " + std::to_string(K.size())};
    r.verdicts.push_back(v);
    if (an.abelian() && an.commutative()) {
        const Truth gs = an.g_simple();
        r.assertions.push_back({"prop11", "G abelian, A commutative and G-simple => C_R(A) = A x K",
                                implies(gs, v.value), {}});
        r.assertions.push_back({"maxcomm_injective",
                                "G abelian, A commutative and G-simple => (A maximal commutative <=> sigma injective)",
                                gs == Truth::False ? Status::Holds
                                : gs == Truth::Unknown
                                    ? Status::Undetermined
                                    : equivalent(an.max_commutative(), an.injective()),
                                {}});
    } else {
        r.assertions.push_back({"prop11", "G abelian, A commutative and G-simple => C_R(A) = A x K",
                                Status::NotApplicable, "requires abelian G and commutative A"});
    }
    return r;
}

/**
 * @brief Structure of every central element r = sum a_g u_g: b a_g = a_g sigma_g(b),
 *        a_{h g h^-1} = sigma_h(a_g), and a_g fixed by the centralizer C_G(g); plus
 *        multiplicativity of the augmentation exactly when sigma is trivial.
 *
 * The verdict `coefficients_in_fixed_ring` records the stronger statement a_g in A^G,
 * which holds for abelian G but can fail otherwise; it is reported, not asserted.
 */
inline CheckResult centre_structure_check(const Analysis& an) {
    CheckResult r{"centre_structure", {}, {}, {}};
    const auto& Z = an.centre();
    if (!Z) {
        r.skipped = an.centre_error();
        return r;
    }
    const SkewRing& R = an.ring();
    const Ring& A = R.coefficients();
    const Group& G = R.group();
    const ActionMap& s = an.action();
    std::optional<Witness> eq4_bad, conj_bad, centralizer_bad, fixed_bad;
    for (const auto& z : *Z) {
        for (GroupIndex g : z.support()) {
            Elem a = z.coefficient(g);
            for (Elem b : A.additive_generators())
                if (!eq4_bad && A.mul(b, a) != A.mul(a, s.apply(g, b)))
                    eq4_bad = Witness{"centre_relation_failure", {z.coefficients()}, {b}, {g}, {}, 0};
            for (GroupIndex h = 0; h < G.order(); ++h) {
                if (!conj_bad && z.coefficient(G.conjugate(h, g)) != s.apply(h, a))
                    conj_bad = Witness{"centre_relation_failure", {z.coefficients()}, {}, {g, h}, {}, 0};
                if (s.apply(h, a) != a) {
                    if (!fixed_bad) fixed_bad = Witness{"coefficient_not_fixed", {z.coefficients()}, {}, {g, h}, {}, 0};
                    if (!centralizer_bad && G.mul(h, g) == G.mul(g, h))
                        centralizer_bad = Witness{"coefficient_not_fixed", {z.coefficients()}, {}, {g, h}, {}, 0};
                }
            }
        }
    }
    auto verdict = [&](std::string id, const std::optional<Witness>& bad) {
        return Verdict{std::move(id), truth(!bad), "criterion", bad, {}};
    };
    r.verdicts.push_back(verdict("commutes_with_A", eq4_bad));
    r.verdicts.push_back(verdict("twisted_conjugacy", conj_bad));
    r.verdicts.push_back(verdict("coefficients_fixed_by_centralizer", centralizer_bad));
    r.verdicts.push_back(verdict("coefficients_in_fixed_ring", fixed_bad));
    r.verdicts.back().note = "|Z(R)| = " + std::to_string(Z->size());
    r.assertions.push_back({"eq4", "b a_g = a_g sigma_g(b) for all b", eq4_bad ? Status::Violated : Status::Holds, {}});
    r.assertions.push_back(
        {"twisted_conjugacy", "a_{hgh^-1} = sigma_h(a_g)", conj_bad ? Status::Violated : Status::Holds, {}});
    r.assertions.push_back({"centralizer_fixed", "a_g fixed by sigma_h for h in C_G(g)",
                            centralizer_bad ? Status::Violated : Status::Holds, {}});
    if (an.abelian())
        r.assertions.push_back(
            {"fixed_ring", "G abelian: a_g in A^G", fixed_bad ? Status::Violated : Status::Holds, {}});

    // epsilon((a u_g)(b u_h)) = a sigma_g(b) against epsilon(a u_g) epsilon(b u_h) = ab.
    bool multiplicative = true;
    std::optional<Witness> eps_bad;
    for (GroupIndex g = 0; g < G.order() && multiplicative; ++g)
        for (Elem a : A.additive_generators())
            for (Elem b : A.additive_generators())
                if (multiplicative && A.mul(a, s.apply(g, b)) != A.mul(a, b)) {
                    multiplicative = false;
                    eps_bad = Witness{"augmentation_not_multiplicative",
                                      {SkewElement::homogeneous(an.context(), a, g).coefficients(),
                                       SkewElement::homogeneous(an.context(), b, 0).coefficients()},
                                      {},
                                      {},
                                      {},
                                      0};
                }
    const bool trivial = an.kernel_subgroup().is_whole();
    r.verdicts.push_back({"augmentation_multiplicative", truth(multiplicative), "criterion", eps_bad, {}});
    r.assertions.push_back({"augmentation", "epsilon multiplicative <=> kernel(sigma) = G",
                            multiplicative == trivial ? Status::Holds : Status::Violated, {}});
    return r;
}

/**
 * @brief Runs support_reduce and central_witness over a family of ideals: the proper
 *        ideal found by the simplicity oracle (if any), R itself, and the ideals generated
 *        by each homogeneous a u_g and each 1 + a u_g with a an additive generator of A.
 *
 * Only for abelian G and G-simple A. Every output property is asserted.
 */
inline CheckResult constructive_check(const Analysis& an, std::size_t max_ideals = 16) {
    if (!an.abelian()) throw PreconditionError("constructive_check: group is not abelian");
    if (an.g_simple() != Truth::True)
        throw PreconditionError(an.g_simple() == Truth::False ? "constructive_check: A is not G-simple"
                                                             : "constructive_check: G-simplicity undetermined");
    const auto& ctx = an.context();
    if (!ctx->encodable() || ctx->size() > an.caps().enumeration)
        throw CapacityError("constructive_check", ctx->size(), an.caps().enumeration);
    CheckResult r{"constructive", {}, {}, {}};

    std::vector<SkewElement> generators;
    if (const auto& s = an.simplicity(); s && s->witness) generators.push_back(*s->witness);
    generators.push_back(SkewElement::one(ctx));
    const Ring& A = ctx->coefficients();
    for (GroupIndex g = 0; g < ctx->degree(); ++g)
        for (Elem a : A.additive_generators()) {
            generators.push_back(SkewElement::homogeneous(ctx, a, g));
            if (g != 0) generators.push_back(SkewElement::one(ctx) + SkewElement::homogeneous(ctx, a, g));
        }
    if (generators.size() > max_ideals) generators.erase(generators.begin() + static_cast<std::ptrdiff_t>(max_ideals), generators.end());

    std::uint64_t reduce_ok = 0, reduce_bad = 0, central_ok = 0, central_bad = 0;
    std::string first_failure;
    std::optional<Witness> example;
    for (const auto& gen : generators) {
        auto I = skew_ideal_closure(ctx, std::span<const SkewElement>(&gen, 1), an.caps());
        try {
            auto rp = detail::support_reduce_in(gen, I);
            const bool ok = I.contains(rp) && rp.coefficient(0) == A.one() && rp.support_size() <= gen.support_size();
            (ok ? reduce_ok : reduce_bad)++;
            if (!ok && first_failure.empty()) first_failure = "support_reduce on " + gen.to_string();
        } catch (const InvariantViolation& e) {
            ++reduce_bad;
            if (first_failure.empty()) first_failure = e.what();
        }
        try {
            auto c = central_witness(I, an.caps());
            const bool ok = I.contains(c) && is_central(c) && c.coefficient(0) == A.one();
            (ok ? central_ok : central_bad)++;
            if (!ok && first_failure.empty()) first_failure = "central_witness on ideal of " + gen.to_string();
            if (ok && !example && !I.is_whole())
                example = Witness{"central_witness", {c.coefficients(), gen.coefficients()}, {}, {}, {}, I.size()};
        } catch (const InvariantViolation& e) {
            ++central_bad;
            if (first_failure.empty()) first_failure = e.what();
        }
    }
    r.verdicts.push_back({"ideals_examined", truth(!generators.empty()), "criterion", example,
                          std::to_string(generators.size()) + " ideals"});
    r.assertions.push_back({"support_reduce", "r' in RrR, E(r') = 1, |Supp r'| <= |Supp r|",
                            reduce_bad ? Status::Violated : Status::Holds,
                            std::to_string(reduce_ok) + " ok, " + std::to_string(reduce_bad) + " failed" +
                                (first_failure.empty() ? "" : "; " + first_failure)});
    r.assertions.push_back({"central_witness", "r' in I, r' central, E(r') = 1",
                            central_bad ? Status::Violated : Status::Holds,
                            std::to_string(central_ok) + " ok, " + std::to_string(central_bad) + " failed"});
    return r;
}

}  // namespace skewring

#endif  // SKEWRING_CRITERIA_HPP
