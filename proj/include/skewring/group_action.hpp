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

#ifndef SKEWRING_GROUP_ACTION_HPP
#define SKEWRING_GROUP_ACTION_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "finite_ring.hpp"

namespace skewring {

/// A ring automorphism stored as its full image table.
class RingAutomorphism {
   public:
    RingAutomorphism(RingPtr ring, std::vector<Elem> table) : ring_(std::move(ring)), table_(std::move(table)) {
        if (table_.size() != ring_->size())
            throw DomainError("automorphism table of " + ring_->name() + " must have " + std::to_string(ring_->size()) +
                              " entries");
        for (Elem v : table_) ring_->check(v);
    }

    static RingAutomorphism identity(const RingPtr& ring, const Caps& caps = {}) {
        return from_function(ring, [](Elem a) { return a; }, caps);
    }

    /// a -> v a v^-1 for a unit v.
    static RingAutomorphism conjugation(const RingPtr& ring, Elem v, const Caps& caps = {}) {
        auto inv = ring->try_invert(v);
        if (!inv) throw DomainError("conjugation requires a unit of " + ring->name());
        const Ring& r = *ring;
        return from_function(ring, [&r, v, w = *inv](Elem a) { return r.mul(r.mul(v, a), w); }, caps);
    }

    /// f -> f o pi^-1 on F_q^X, i.e. (pi.f)(x) = f(pi^-1(x)).
    static RingAutomorphism permutation_induced(const RingPtr& ring, const Permutation& pi, const Caps& caps = {}) {
        if (ring->kind() != RingKind::FunctionRing) throw DomainError("permutation-induced maps need a function ring");
        if (pi.size() != ring->points() || !perm::is_bijection(pi))
            throw DomainError("permutation does not act on the " + std::to_string(ring->points()) + " points");
        const Permutation inv = perm::inverse(pi);
        const Ring& r = *ring;
        return from_function(
            ring,
            [&r, &inv](Elem f) {
                std::vector<std::uint64_t> src = r.payload(f), dst(src.size());
                for (std::size_t x = 0; x < src.size(); ++x) dst[x] = src[inv[x]];
                return r.encode(dst);
            },
            caps);
    }

    /// a -> a^k; an automorphism only for suitable k (e.g. Frobenius on F_q^X).
    static RingAutomorphism power_map(const RingPtr& ring, std::uint64_t exponent, const Caps& caps = {}) {
        const Ring& r = *ring;
        return from_function(
            ring, [&r, exponent](Elem a) { return power(a, exponent, r.one(), [&r](Elem x, Elem y) { return r.mul(x, y); }); },
            caps);
    }

    template <class F>
    static RingAutomorphism from_function(const RingPtr& ring, F&& f, const Caps& caps = {}) {
        require_within_cap("automorphism table of " + ring->name(), ring->size(), caps.enumeration);
        std::vector<Elem> table(ring->size());
        for (Elem a = 0; a < ring->size(); ++a) table[a] = f(a);
        return {ring, std::move(table)};
    }

    Elem operator()(Elem a) const { return table_.at(a); }
    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const std::vector<Elem>& table() const noexcept { return table_; }

    bool is_identity() const {
        for (Elem a = 0; a < table_.size(); ++a)
            if (table_[a] != a) return false;
        return true;
    }

    /// (this o other)(a) = this(other(a))
    RingAutomorphism after(const RingAutomorphism& other) const {
        std::vector<Elem> t(table_.size());
        for (Elem a = 0; a < t.size(); ++a) t[a] = table_[other.table_[a]];
        return {ring_, std::move(t)};
    }

    /// Bijective, unital, additive and multiplicative; checked on additive generators where bilinearity allows.
    std::optional<std::string> violation() const {
        const Ring& r = *ring_;
        std::vector<bool> hit(table_.size(), false);
        for (Elem a = 0; a < table_.size(); ++a) {
            if (hit[table_[a]]) return "not injective: two elements map to " + std::to_string(table_[a]);
            hit[table_[a]] = true;
        }
        if (table_[r.one()] != r.one()) return "does not fix 1";
        for (Elem a = 0; a < table_.size(); ++a)
            for (Elem b : r.additive_generators())
                if (table_[r.add(a, b)] != r.add(table_[a], table_[b]))
                    return "not additive at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
        for (Elem a : r.additive_generators())
            for (Elem b : r.additive_generators())
                if (table_[r.mul(a, b)] != r.mul(table_[a], table_[b]))
                    return "not multiplicative at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
        return std::nullopt;
    }

    friend bool operator==(const RingAutomorphism& x, const RingAutomorphism& y) {
        return x.ring_->same_as(*y.ring_) && x.table_ == y.table_;
    }

   private:
    RingPtr ring_;
    std::vector<Elem> table_;
};

struct ActionViolation {
    enum class Kind { NotAutomorphism, IdentityNotTrivial, HomomorphismLaw };
    Kind kind;
    GroupIndex g = 0;
    GroupIndex h = 0;
    Elem a = 0;
    std::string message;
};

/**
 * @brief sigma : G -> Aut(A) as one automorphism per group element.
 *
 * Validation runs once at construction and is remembered; operations that need a
 * homomorphism throw DomainError on an invalid map.
 */
class ActionMap {
   public:
    ActionMap(GroupPtr group, RingPtr ring, std::vector<RingAutomorphism> sigma)
        : group_(std::move(group)), ring_(std::move(ring)), sigma_(std::move(sigma)) {
        if (sigma_.size() != group_->order()) throw DomainError("action needs one automorphism per group element");
        for (const auto& s : sigma_)
            if (!s.ring().same_as(*ring_)) throw DomainError("automorphism belongs to a different ring");
        violation_ = compute_violation();
    }

    static ActionMap trivial(const GroupPtr& group, const RingPtr& ring, const Caps& caps = {}) {
        return {group, ring, std::vector<RingAutomorphism>(group->order(), RingAutomorphism::identity(ring, caps))};
    }

    /// Extends images given on a generating subset via sigma_{s x} = sigma_s o sigma_x.
    static ActionMap from_images(const GroupPtr& group, const RingPtr& ring,
                                 const std::map<GroupIndex, RingAutomorphism>& images, const Caps& caps = {}) {
        auto full = extend_by_products(*group, images, RingAutomorphism::identity(ring, caps),
                                       [](const RingAutomorphism& s, const RingAutomorphism& x) { return s.after(x); });
        std::vector<RingAutomorphism> sigma;
        for (GroupIndex g = 0; g < group->order(); ++g) {
            if (!full[g]) throw DomainError("action images do not generate the group; " + group->label(g) + " unreached");
            sigma.push_back(*full[g]);
        }
        return {group, ring, std::move(sigma)};
    }

    const Group& group() const noexcept { return *group_; }
    const GroupPtr& group_ptr() const noexcept { return group_; }
    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const RingAutomorphism& sigma(GroupIndex g) const { return sigma_.at(g); }
    Elem apply(GroupIndex g, Elem a) const { return sigma_.at(g)(a); }

    const std::optional<ActionViolation>& violation() const noexcept { return violation_; }
    bool valid() const noexcept { return !violation_.has_value(); }
    void require_valid() const {
        if (violation_) throw DomainError("action is not a homomorphism G -> Aut(A): " + violation_->message);
    }

   private:
    std::optional<ActionViolation> compute_violation() const {
        const Group& G = *group_;
        const Ring& A = *ring_;
        for (GroupIndex g = 0; g < G.order(); ++g)
            if (auto why = sigma_[g].violation())
                return ActionViolation{ActionViolation::Kind::NotAutomorphism, g, 0, 0,
                                       "sigma(" + G.label(g) + ") is not an automorphism: " + *why};
        if (!sigma_[0].is_identity()) {
            Elem a = 0;
            while (sigma_[0](a) == a) ++a;
            return ActionViolation{ActionViolation::Kind::IdentityNotTrivial, 0, 0, a,
                                   "sigma(e) moves element " + std::to_string(a)};
        }
        for (GroupIndex g = 0; g < G.order(); ++g)
            for (GroupIndex h = 0; h < G.order(); ++h) {
                const auto& gh = sigma_[G.mul(g, h)];
                for (Elem a : A.additive_generators())
                    if (gh(a) != sigma_[g](sigma_[h](a)))
                        return ActionViolation{ActionViolation::Kind::HomomorphismLaw, g, h, a,
                                               "sigma(gh)(a) != sigma(g)(sigma(h)(a)) at g=" + G.label(g) +
                                                   ", h=" + G.label(h) + ", a=" + std::to_string(a)};
            }
        return std::nullopt;
    }

    GroupPtr group_;
    RingPtr ring_;
    std::vector<RingAutomorphism> sigma_;
    std::optional<ActionViolation> violation_;
};

inline std::optional<ActionViolation> validate_action(const ActionMap& sigma) { return sigma.violation(); }

/// K = {g : sigma_g = id}.
inline Subgroup kernel(const ActionMap& sigma) {
    sigma.require_valid();
    return subgroup_where(sigma.group_ptr(), [&](GroupIndex g) { return sigma.sigma(g).is_identity(); });
}

inline bool is_injective(const ActionMap& sigma) { return kernel(sigma).is_trivial(); }

/// A^G in canonical order.
inline std::vector<Elem> fixed_ring(const ActionMap& sigma, const Caps& caps = {}) {
    sigma.require_valid();
    const Ring& A = sigma.ring();
    require_within_cap("fixed ring", A.size(), caps.enumeration);
    std::vector<Elem> out;
    for (Elem a = 0; a < A.size(); ++a) {
        bool fixed = true;
        for (GroupIndex g : sigma.group().generators())
            if (sigma.apply(g, a) != a) {
                fixed = false;
                break;
            }
        if (fixed) out.push_back(a);
    }
    return out;
}

namespace detail {

// Images under two-sided multiplication and the action of each group generator.
inline auto invariant_images(const ActionMap& sigma) {
    return [&sigma](Elem y, auto&& emit) {
        const Ring& A = sigma.ring();
        for (Elem m : A.additive_generators()) {
            emit(A.mul(m, y));
            emit(A.mul(y, m));
        }
        for (GroupIndex g : sigma.group().generators()) emit(sigma.apply(g, y));
    };
}

}  // namespace detail

/// The smallest G-invariant two-sided ideal containing `generators`.
inline IdealSet invariant_ideal_closure(const ActionMap& sigma, std::span<const Elem> generators,
                                        const Caps& caps = {}) {
    sigma.require_valid();
    const Ring& A = sigma.ring();
    require_within_cap("invariant ideal closure", A.size(), caps.enumeration);
    for (Elem a : generators) A.check(a);
    auto span = additive_closure(A, generators, detail::invariant_images(sigma), A.one());
    IdealSet out = to_ideal_set(A, span);
    out.materialize();
    return out;
}

/**
 * @brief G-simplicity by closing {a} under ring multiplication and every sigma_g, for each
 *        nonzero a. On failure the witness generates a nonzero proper G-invariant ideal.
 */
inline SimplicityResult is_G_simple(const ActionMap& sigma, const Caps& caps = {}) {
    sigma.require_valid();
    const Ring& A = sigma.ring();
    require_within_cap("is_G_simple over " + A.name(), A.size(), caps.enumeration);
    auto images = detail::invariant_images(sigma);
    auto unit_list = units(A, caps);
    auto orbit = [&A, &sigma, &unit_list](Elem x, auto&& emit) {
        for (Elem u : unit_list)
            for (Elem v : unit_list) {
                Elem uxv = A.mul(A.mul(u, x), v);
                for (GroupIndex g = 0; g < sigma.group().order(); ++g) emit(sigma.apply(g, uxv));
            }
    };
    std::vector<Elem> candidates(A.size() - 1);
    std::iota(candidates.begin(), candidates.end(), Elem{1});
    auto result = search_proper_closure(A, candidates, images, orbit);
    result.ideal.materialize();
    return result;
}

/// The first unit v (canonical order) with phi(t) = v t v^-1 for all t, or nothing when phi is outer.
inline std::optional<Elem> is_inner(const RingAutomorphism& phi, const Caps& caps = {}) {
    const Ring& A = phi.ring();
    for (Elem v : units(A, caps)) {
        bool ok = true;
        for (Elem t : A.additive_generators())
            if (A.mul(phi(t), v) != A.mul(v, t)) {
                ok = false;
                break;
            }
        if (ok) return v;
    }
    return std::nullopt;
}

struct OuterReport {
    bool outer = true;
    /// First g != e with sigma_g inner, and its implementing unit.
    std::optional<GroupIndex> inner_element;
    std::optional<Elem> unit;
};

inline OuterReport outer_action_report(const ActionMap& sigma, const Caps& caps = {}) {
    sigma.require_valid();
    OuterReport out;
    for (GroupIndex g = 1; g < sigma.group().order(); ++g)
        if (auto v = is_inner(sigma.sigma(g), caps)) {
            out.outer = false;
            out.inner_element = g;
            out.unit = v;
            return out;
        }
    return out;
}

inline bool is_outer_action(const ActionMap& sigma, const Caps& caps = {}) {
    return outer_action_report(sigma, caps).outer;
}

}  // namespace skewring

#endif  // SKEWRING_GROUP_ACTION_HPP
