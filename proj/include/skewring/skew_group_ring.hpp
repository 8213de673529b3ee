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

#ifndef SKEWRING_SKEW_GROUP_RING_HPP
#define SKEWRING_SKEW_GROUP_RING_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "config.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "finite_ring.hpp"
#include "group_action.hpp"

namespace skewring {

/**
 * @brief The skew group ring R = A x_sigma G, free over A on symbols u_g with
 *        (a u_g)(b u_h) = a sigma_g(b) u_{gh}.
 *
 * An element is a dense coefficient vector indexed by group element. When |A|^|G| fits
 * in 63 bits the ring also models FiniteRing: the element index is the big-endian
 * mixed-radix number with the coefficient at e most significant, so index order is
 * lexicographic order of coefficient vectors.
 */
class SkewRing {
    struct Token {};

   public:
    static constexpr std::size_t kMaxEncodedDegree = 63;

    static std::shared_ptr<const SkewRing> create(ActionMap sigma) {
        sigma.require_valid();
        return std::make_shared<const SkewRing>(Token{}, std::move(sigma));
    }

    SkewRing(Token, ActionMap sigma) : sigma_(std::move(sigma)) {
        const std::uint64_t base = sigma_.ring().size();
        const std::uint32_t n = sigma_.group().order();
        size_ = 1;
        encodable_ = true;
        for (std::uint32_t i = 0; i < n; ++i) {
            if (size_ > (std::uint64_t{1} << 62) / base) {
                encodable_ = false;
                break;
            }
            size_ *= base;
        }
        if (!encodable_) {
            size_ = std::numeric_limits<std::uint64_t>::max();
            return;
        }
        weights_.assign(n, 1);
        for (std::uint32_t i = n; i-- > 1;) weights_[i - 1] = weights_[i] * base;
        one_ = weights_[0] * sigma_.ring().one();
        for (GroupIndex g = 0; g < n; ++g)
            for (Elem a : sigma_.ring().additive_generators()) generators_.push_back(a * weights_[g]);
        std::sort(generators_.begin(), generators_.end());
    }

    const ActionMap& action() const noexcept { return sigma_; }
    const Ring& coefficients() const noexcept { return sigma_.ring(); }
    const RingPtr& coefficients_ptr() const noexcept { return sigma_.ring_ptr(); }
    const Group& group() const noexcept { return sigma_.group(); }
    const GroupPtr& group_ptr() const noexcept { return sigma_.group_ptr(); }
    std::uint32_t degree() const noexcept { return sigma_.group().order(); }

    /// Whether elements have a 64-bit index (|A|^|G| <= 2^62).
    bool encodable() const noexcept { return encodable_; }
    /// |A|^|G|, saturated at UINT64_MAX when not encodable.
    std::uint64_t size() const noexcept { return size_; }

    std::string name() const {
        return coefficients().name() + " x| G(order " + std::to_string(degree()) + ")";
    }

    // ---- FiniteRing interface over encoded elements -------------------------------------

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }

    Elem add(Elem x, Elem y) const {
        const Ring& A = coefficients();
        Elem out = 0;
        for (std::uint32_t i = 0; i < weights_.size(); ++i)
            out += A.add((x / weights_[i]) % A.size(), (y / weights_[i]) % A.size()) * weights_[i];
        return out;
    }

    Elem neg(Elem x) const {
        const Ring& A = coefficients();
        Elem out = 0;
        for (std::uint32_t i = 0; i < weights_.size(); ++i) out += A.neg((x / weights_[i]) % A.size()) * weights_[i];
        return out;
    }

    Elem mul(Elem x, Elem y) const {
        std::array<Elem, 64> a{}, b{}, c{};
        decode_into(x, a);
        decode_into(y, b);
        multiply_dense({a.data(), degree()}, {b.data(), degree()}, {c.data(), degree()});
        return encode(std::span<const Elem>(c.data(), degree()));
    }

    std::span<const Elem> additive_generators() const noexcept { return generators_; }

    Elem encode(std::span<const Elem> coeffs) const {
        require_encodable();
        if (coeffs.size() != degree()) throw DomainError("coefficient vector has wrong length");
        Elem out = 0;
        for (std::uint32_t i = 0; i < degree(); ++i) {
            coefficients().check(coeffs[i]);
            out += coeffs[i] * weights_[i];
        }
        return out;
    }

    std::vector<Elem> decode(Elem x) const {
        std::vector<Elem> out(degree());
        decode_into(x, out);
        return out;
    }

    /// Encoded a u_g.
    Elem homogeneous(Elem a, GroupIndex g) const {
        require_encodable();
        return a * weights_.at(g);
    }

    // ---- dense coefficient arithmetic ------------------------------------------------------

    /// out = r s by the bilinear extension of (a u_g)(b u_h) = a sigma_g(b) u_{gh}.
    void multiply_dense(std::span<const Elem> r, std::span<const Elem> s, std::span<Elem> out) const {
        const Ring& A = coefficients();
        const Group& G = group();
        std::fill(out.begin(), out.end(), A.zero());
        for (GroupIndex g = 0; g < degree(); ++g) {
            if (r[g] == A.zero()) continue;
            const auto& sg = sigma_.sigma(g);
            for (GroupIndex h = 0; h < degree(); ++h) {
                if (s[h] == A.zero()) continue;
                GroupIndex gh = G.mul(g, h);
                out[gh] = A.add(out[gh], A.mul(r[g], sg(s[h])));
            }
        }
    }

   private:
    void require_encodable() const {
        if (!encodable_) throw CapacityError("skew group ring index", std::numeric_limits<std::uint64_t>::max(), std::uint64_t{1} << 62);
    }

    template <class Out>
    void decode_into(Elem x, Out& out) const {
        require_encodable();
        const std::uint64_t base = coefficients().size();
        for (std::uint32_t i = degree(); i-- > 0;) {
            out[i] = x % base;
            x /= base;
        }
    }

    ActionMap sigma_;
    bool encodable_ = false;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> weights_;
    Elem one_ = 0;
    std::vector<Elem> generators_;
};

using SkewRingPtr = std::shared_ptr<const SkewRing>;

/// An element sum_g a_g u_g of a skew group ring.
class SkewElement {
   public:
    explicit SkewElement(SkewRingPtr ctx) : ctx_(std::move(ctx)), coeffs_(ctx_->degree(), ctx_->coefficients().zero()) {}

    SkewElement(SkewRingPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != ctx_->degree()) throw DomainError("coefficient vector has wrong length");
        for (Elem a : coeffs_) ctx_->coefficients().check(a);
    }

    static SkewElement homogeneous(const SkewRingPtr& ctx, Elem a, GroupIndex g) {
        SkewElement r(ctx);
        ctx->group().check(g);
        ctx->coefficients().check(a);
        r.coeffs_[g] = a;
        return r;
    }
    static SkewElement u(const SkewRingPtr& ctx, GroupIndex g) {
        return homogeneous(ctx, ctx->coefficients().one(), g);
    }
    static SkewElement embed(const SkewRingPtr& ctx, Elem a) { return homogeneous(ctx, a, 0); }
    static SkewElement one(const SkewRingPtr& ctx) { return embed(ctx, ctx->coefficients().one()); }
    static SkewElement decode(const SkewRingPtr& ctx, Elem index) { return {ctx, ctx->decode(index)}; }

    const SkewRingPtr& context() const noexcept { return ctx_; }
    const std::vector<Elem>& coefficients() const noexcept { return coeffs_; }
    Elem coefficient(GroupIndex g) const { return coeffs_.at(g); }
    Elem encode() const { return ctx_->encode(coeffs_); }

    /// Supp(r) in index order.
    std::vector<GroupIndex> support() const {
        std::vector<GroupIndex> s;
        for (GroupIndex g = 0; g < coeffs_.size(); ++g)
            if (coeffs_[g] != ctx_->coefficients().zero()) s.push_back(g);
        return s;
    }
    std::size_t support_size() const {
        std::size_t n = 0;
        for (Elem a : coeffs_) n += a != ctx_->coefficients().zero();
        return n;
    }
    bool is_zero() const { return support_size() == 0; }

    friend SkewElement operator+(const SkewElement& r, const SkewElement& s) {
        r.require_same(s);
        SkewElement out(r.ctx_);
        for (std::size_t g = 0; g < r.coeffs_.size(); ++g)
            out.coeffs_[g] = r.ctx_->coefficients().add(r.coeffs_[g], s.coeffs_[g]);
        return out;
    }
    SkewElement operator-() const {
        SkewElement out(ctx_);
        for (std::size_t g = 0; g < coeffs_.size(); ++g) out.coeffs_[g] = ctx_->coefficients().neg(coeffs_[g]);
        return out;
    }
    friend SkewElement operator-(const SkewElement& r, const SkewElement& s) { return r + (-s); }
    friend SkewElement operator*(const SkewElement& r, const SkewElement& s) {
        r.require_same(s);
        SkewElement out(r.ctx_);
        r.ctx_->multiply_dense(r.coeffs_, s.coeffs_, out.coeffs_);
        return out;
    }

    friend bool operator==(const SkewElement& r, const SkewElement& s) { return r.coeffs_ == s.coeffs_; }
    friend std::strong_ordering operator<=>(const SkewElement& r, const SkewElement& s) {
        return r.coeffs_ <=> s.coeffs_;
    }

    /// "a u_g + ..." with coefficient payloads in brackets and group labels.
    std::string to_string() const {
        std::string out;
        for (GroupIndex g : support()) {
            if (!out.empty()) out += " + ";
            out += "[";
            auto p = ctx_->coefficients().payload(coeffs_[g]);
            for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
            out += "] u_" + ctx_->group().label(g);
        }
        return out.empty() ? "0" : out;
    }

   private:
    void require_same(const SkewElement& other) const {
        if (ctx_ != other.ctx_) throw DomainError("skew elements from different contexts");
    }

    SkewRingPtr ctx_;
    std::vector<Elem> coeffs_;
};

/// epsilon(r) = sum_g a_g.
inline RingElement augmentation(const SkewElement& r) {
    const Ring& A = r.context()->coefficients();
    Elem sum = A.zero();
    for (Elem a : r.coefficients()) sum = A.add(sum, a);
    return {r.context()->coefficients_ptr(), sum};
}

/// E(r) = a_e.
inline RingElement coeff_at_e(const SkewElement& r) {
    return {r.context()->coefficients_ptr(), r.coefficient(0)};
}

inline std::vector<GroupIndex> support(const SkewElement& r) { return r.support(); }

/// Commutes with a u_g for every additive generator a of A and every g, hence with all of R.
inline bool is_central(const SkewElement& r) {
    const auto& ctx = r.context();
    for (GroupIndex g = 0; g < ctx->degree(); ++g)
        for (Elem a : ctx->coefficients().additive_generators()) {
            auto m = SkewElement::homogeneous(ctx, a, g);
            if (m * r != r * m) return false;
        }
    return true;
}

/// Commutes with every element of A (embedded as A u_e).
inline bool centralizes_A(const SkewElement& r) {
    const auto& ctx = r.context();
    for (Elem a : ctx->coefficients().additive_generators()) {
        auto m = SkewElement::embed(ctx, a);
        if (m * r != r * m) return false;
    }
    return true;
}

// ---- centralizer and centre by coordinatewise solving --------------------------------------

/**
 * @brief For each h, the coefficients c with b c = c sigma_h(b) for all b in A.
 *
 * r = sum a_h u_h commutes with every b u_e exactly when every a_h solves this, since
 * b r = sum b a_h u_h and r b = sum a_h sigma_h(b) u_h.
 */
inline std::vector<std::vector<Elem>> commutation_solutions(const SkewRing& ctx, const Caps& caps = {}) {
    const Ring& A = ctx.coefficients();
    require_within_cap("commutation solutions over " + A.name(), A.size(), caps.enumeration);
    std::vector<std::vector<Elem>> out(ctx.degree());
    for (GroupIndex h = 0; h < ctx.degree(); ++h) {
        const auto& sh = ctx.action().sigma(h);
        for (Elem c = 0; c < A.size(); ++c) {
            bool ok = true;
            for (Elem b : A.additive_generators())
                if (A.mul(b, c) != A.mul(c, sh(b))) {
                    ok = false;
                    break;
                }
            if (ok) out[h].push_back(c);
        }
    }
    return out;
}

namespace detail {

inline std::uint64_t product_count(const std::vector<std::vector<Elem>>& choices) {
    std::uint64_t n = 1;
    for (const auto& c : choices) {
        if (c.empty()) return 0;
        if (n > std::numeric_limits<std::uint64_t>::max() / c.size()) return std::numeric_limits<std::uint64_t>::max();
        n *= c.size();
    }
    return n;
}

// Calls visit(choice index vector) for every element of the cartesian product, odometer order.
template <class Visit>
void for_each_choice(const std::vector<std::vector<Elem>>& choices, Visit&& visit) {
    if (product_count(choices) == 0) return;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        visit(idx);
        std::size_t i = choices.size();
        while (i > 0) {
            --i;
            if (++idx[i] < choices[i].size()) break;
            idx[i] = 0;
            if (i == 0) return;
        }
        if (choices.empty()) return;
    }
}

}  // namespace detail

/// C_R(A) in canonical order.
inline std::vector<SkewElement> centralizer_of_A(const SkewRingPtr& ctx, const Caps& caps = {}) {
    auto sols = commutation_solutions(*ctx, caps);
    require_within_cap("centralizer of A", detail::product_count(sols), caps.enumeration);
    std::vector<SkewElement> out;
    detail::for_each_choice(sols, [&](const std::vector<std::size_t>& idx) {
        std::vector<Elem> c(ctx->degree());
        for (std::size_t g = 0; g < c.size(); ++g) c[g] = sols[g][idx[g]];
        out.emplace_back(ctx, std::move(c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

struct MaxCommutativity {
    bool maximal = true;
    /// Some c u_h in C_R(A) with h != e and c != 0: smallest h, then smallest c.
    std::optional<SkewElement> witness;
};

/// Whether C_R(A) = A u_e. Requires A commutative.
inline MaxCommutativity is_max_commutative_A(const SkewRingPtr& ctx, const Caps& caps = {}) {
    if (!ctx->coefficients().is_commutative())
        throw DomainError("maximal commutativity of A requires a commutative coefficient ring");
    auto sols = commutation_solutions(*ctx, caps);
    MaxCommutativity out;
    for (GroupIndex h = 1; h < ctx->degree(); ++h)
        for (Elem c : sols[h])
            if (c != ctx->coefficients().zero()) {
                out.maximal = false;
                out.witness = SkewElement::homogeneous(ctx, c, h);
                return out;
            }
    return out;
}

/**
 * @brief Z(R) described by class representatives.
 *
 * r is central iff it commutes with A and every u_k. The latter forces
 * a_{k h k^-1} = sigma_k(a_h), so r is fixed by its coefficients at one representative h
 * per conjugacy class, and those must solve the A-commutation equation and be fixed by
 * sigma_k for k in the centralizer C_G(h).
 */
struct CentreSolution {
    std::vector<GroupIndex> representatives;
    std::vector<std::vector<Elem>> allowed;  // per representative

    std::uint64_t count() const { return detail::product_count(allowed); }
};

inline CentreSolution centre_solution(const SkewRing& ctx, const Caps& caps = {}) {
    auto sols = commutation_solutions(ctx, caps);
    CentreSolution out;
    const Group& G = ctx.group();
    for (const auto& cls : conjugacy_classes(G)) {
        GroupIndex h = cls.front();
        std::vector<Elem> allowed;
        for (Elem c : sols[h]) {
            bool fixed = true;
            for (GroupIndex k = 0; k < G.order() && fixed; ++k)
                if (G.mul(k, h) == G.mul(h, k) && ctx.action().apply(k, c) != c) fixed = false;
            if (fixed) allowed.push_back(c);
        }
        out.representatives.push_back(h);
        out.allowed.push_back(std::move(allowed));
    }
    return out;
}

/// Z(R) in canonical order.
inline std::vector<SkewElement> skew_center(const SkewRingPtr& ctx, const Caps& caps = {}) {
    auto sol = centre_solution(*ctx, caps);
    require_within_cap("centre of skew group ring", sol.count(), caps.enumeration);
    const Group& G = ctx->group();
    std::vector<SkewElement> out;
    detail::for_each_choice(sol.allowed, [&](const std::vector<std::size_t>& idx) {
        std::vector<Elem> c(ctx->degree(), ctx->coefficients().zero());
        for (std::size_t i = 0; i < sol.representatives.size(); ++i) {
            GroupIndex h = sol.representatives[i];
            Elem a = sol.allowed[i][idx[i]];
            for (GroupIndex k = 0; k < G.order(); ++k) c[G.conjugate(k, h)] = ctx->action().apply(k, a);
        }
        out.emplace_back(ctx, std::move(c));
    });
    std::sort(out.begin(), out.end());
    return out;
}

inline FieldTest<SkewElement> centre_field_test(const SkewRingPtr& ctx, const std::vector<SkewElement>& centre) {
    return test_field<SkewElement>(
        centre, SkewElement(ctx), SkewElement::one(ctx), [](const SkewElement& a, const SkewElement& b) { return a * b; },
        [](const SkewElement& a, const SkewElement& b) { return a + b; });
}

// ---- ideals and simplicity ----------------------------------------------------------------

/// A two-sided ideal of R given by its encoded elements.
struct SkewIdeal {
    SkewRingPtr ctx;
    IdealSet set;

    bool contains(const SkewElement& r) const { return set.contains(r.encode()); }
    std::uint64_t size() const noexcept { return set.size(); }
    bool is_whole() const noexcept { return set.whole; }
    bool is_zero() const noexcept { return !set.whole && set.elements.size() <= 1; }

    /// Elements in canonical order (materializes whole ideals).
    std::vector<SkewElement> elements() const {
        IdealSet s = set;
        s.materialize();
        std::vector<SkewElement> out;
        out.reserve(s.elements.size());
        for (Elem x : s.elements) out.push_back(SkewElement::decode(ctx, x));
        return out;
    }
};

inline SkewIdeal skew_ideal_closure(const SkewRingPtr& ctx, std::span<const SkewElement> generators,
                                    const Caps& caps = {}) {
    if (!ctx->encodable()) throw CapacityError("skew ideal closure", ctx->size(), caps.enumeration);
    require_within_cap("skew ideal closure", ctx->size(), caps.enumeration);
    std::vector<Elem> seeds;
    for (const auto& g : generators) {
        if (g.context() != ctx) throw DomainError("generator from a different skew group ring");
        seeds.push_back(g.encode());
    }
    SkewIdeal out{ctx, ideal_closure(*ctx, seeds, caps)};
    return out;
}

enum class SimplicityStatus { Simple, NotSimple, Undetermined };

inline const char* to_string(SimplicityStatus s) {
    switch (s) {
        case SimplicityStatus::Simple: return "simple";
        case SimplicityStatus::NotSimple: return "not simple";
        case SimplicityStatus::Undetermined: return "undetermined";
    }
    return "?";
}

struct SkewSimplicity {
    SimplicityStatus status = SimplicityStatus::Undetermined;
    bool witness_search = false;
    /// Decided by point idempotents and F_p-linear spans instead of enumerating R.
    bool linear = false;
    std::optional<SkewElement> witness;
    /// Size of the proper ideal generated by the witness.
    std::uint64_t ideal_size = 0;
    std::uint64_t closures_computed = 0;
    std::uint64_t candidates = 0;
};

/// Nonzero elements of support size at most two, ordered by support size then index.
inline std::vector<Elem> small_support_candidates(const SkewRing& ctx) {
    const Ring& A = ctx.coefficients();
    std::vector<Elem> single, pairs;
    std::vector<Elem> c(ctx.degree(), 0);
    for (GroupIndex g = 0; g < ctx.degree(); ++g)
        for (Elem a = 1; a < A.size(); ++a) single.push_back(ctx.homogeneous(a, g));
    for (GroupIndex g = 0; g < ctx.degree(); ++g)
        for (GroupIndex h = g + 1; h < ctx.degree(); ++h)
            for (Elem a = 1; a < A.size(); ++a)
                for (Elem b = 1; b < A.size(); ++b)
                    pairs.push_back(ctx.homogeneous(a, g) + ctx.homogeneous(b, h));
    std::sort(single.begin(), single.end());
    std::sort(pairs.begin(), pairs.end());
    single.insert(single.end(), pairs.begin(), pairs.end());
    return single;
}

// ---- exact simplicity over function rings ------------------------------------------------------

namespace detail {

/// Echelon basis over F_p of coordinate vectors.
class PrimeSpan {
   public:
    PrimeSpan(std::uint32_t p, std::size_t dim) : p_(p), dim_(dim), pivot_row_(dim, kNone), inverse_(p, 0) {
        for (std::uint32_t a = 1; a < p; ++a)
            for (std::uint32_t b = 1; b < p; ++b)
                if (a * b % p == 1) inverse_[a] = b;
    }

    /// Adds `v` and returns true unless it already lies in the span.
    bool insert(std::vector<std::uint32_t> v) {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (v[i] == 0) continue;
            if (pivot_row_[i] == kNone) {
                const std::uint32_t c = inverse_[v[i]];
                for (std::size_t j = i; j < dim_; ++j) v[j] = v[j] * c % p_;
                pivot_row_[i] = rows_.size();
                rows_.push_back(std::move(v));
                return true;
            }
            const auto& row = rows_[pivot_row_[i]];
            const std::uint32_t c = p_ - v[i];
            for (std::size_t j = i; j < dim_; ++j) v[j] = (v[j] + c * row[j]) % p_;
        }
        return false;
    }

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t dimension() const noexcept { return dim_; }
    bool full() const noexcept { return rows_.size() == dim_; }

   private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::uint32_t p_;
    std::size_t dim_;
    std::vector<std::size_t> pivot_row_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::uint32_t> inverse_;
};

}  // namespace detail

/// Prime p with |A| a power of p and pA = 0, when A is Z/p, M_k(F_p) or F_q^X.
inline std::optional<std::uint32_t> linear_characteristic(const Ring& A) {
    if (A.kind() == RingKind::ModularIntegers)
        return GaloisField::is_prime(A.modulus()) ? std::optional<std::uint32_t>(static_cast<std::uint32_t>(A.modulus()))
                                                  : std::nullopt;
    return A.field().characteristic();
}

/// F_p-dimension of RrR. Ideals are additive subgroups, hence F_p-subspaces, so RrR is the
/// smallest subspace containing r that is closed under multiplication by ring generators.
inline std::size_t linear_ideal_rank(const SkewElement& r) {
    const auto& ctx = r.context();
    const Ring& A = ctx->coefficients();
    const auto p = linear_characteristic(A);
    if (!p) throw DomainError("linear ideal span needs a coefficient ring of prime characteristic");
    std::size_t per = 0;
    for (std::uint64_t n = A.size(); n > 1; n /= *p) ++per;
    auto coordinates = [&](const SkewElement& x) {
        std::vector<std::uint32_t> v;
        v.reserve(per * ctx->degree());
        for (Elem a : x.coefficients())
            for (std::size_t i = 0; i < per; ++i, a /= *p) v.push_back(static_cast<std::uint32_t>(a % *p));
        return v;
    };
    std::vector<SkewElement> multipliers;
    for (Elem a : A.additive_generators()) multipliers.push_back(SkewElement::embed(ctx, a));
    for (GroupIndex g : ctx->group().generators()) multipliers.push_back(SkewElement::u(ctx, g));

    detail::PrimeSpan span(*p, per * ctx->degree());
    std::vector<SkewElement> basis;
    if (span.insert(coordinates(r))) basis.push_back(r);
    for (std::size_t i = 0; i < basis.size() && !span.full(); ++i)
        for (const auto& m : multipliers)
            for (auto x : {m * basis[i], basis[i] * m})
                if (span.insert(coordinates(x))) basis.push_back(std::move(x));
    return span.rank();
}

/// F_p-dimension of R.
inline std::size_t linear_dimension(const SkewRing& R) {
    const auto p = linear_characteristic(R.coefficients());
    if (!p) throw DomainError("linear dimension needs a coefficient ring of prime characteristic");
    std::size_t per = 0;
    for (std::uint64_t n = R.coefficients().size(); n > 1; n /= *p) ++per;
    return per * R.degree();
}

/**
 * @brief Candidates e_x (sum over Stab(x) of c_g u_g) for A = F_q^X, one x per orbit, up to
 *        nonzero scalars and left or right multiplication by u_h with h in Stab(x).
 *
 * Every nonzero ideal I contains one of them: for r in I nonzero, some e_x r e_y is nonzero,
 * and right multiplication by a suitable u_k moves y to x.
 */
inline std::vector<SkewElement> idempotent_candidates(const SkewRingPtr& ctx, const Caps& caps) {
    const SkewRing& R = *ctx;
    const Ring& A = R.coefficients();
    if (A.kind() != RingKind::FunctionRing) throw DomainError("idempotent candidates need a function ring");
    const std::uint32_t n = A.points();
    const std::uint64_t q = A.modulus();
    auto indicator = [&](std::uint32_t x) {
        std::vector<std::uint64_t> p(n, 0);
        p[x] = 1;
        return A.encode(p);
    };
    // sigma_g(e_y) = e_{pi_g(y)}
    std::vector<std::vector<std::uint32_t>> pi(R.degree(), std::vector<std::uint32_t>(n));
    for (GroupIndex g = 0; g < R.degree(); ++g)
        for (std::uint32_t y = 0; y < n; ++y) {
            const auto image = A.payload(R.action().apply(g, indicator(y)));
            pi[g][y] = static_cast<std::uint32_t>(std::find(image.begin(), image.end(), 1) - image.begin());
        }

    std::vector<SkewElement> out;
    std::vector<bool> covered(n, false);
    for (std::uint32_t x = 0; x < n; ++x) {
        if (covered[x]) continue;
        std::vector<GroupIndex> stab;
        for (GroupIndex g = 0; g < R.degree(); ++g) {
            covered[pi[g][x]] = true;
            if (pi[g][x] == x) stab.push_back(g);
        }
        std::uint64_t tuples = 1;
        for (std::size_t i = 0; i < stab.size(); ++i)
            tuples = tuples > caps.enumeration / q ? caps.enumeration + 1 : tuples * q;
        require_within_cap("idempotent candidates", tuples, caps.enumeration);

        std::vector<std::size_t> position(R.degree(), stab.size());
        for (std::size_t i = 0; i < stab.size(); ++i) position[stab[i]] = i;
        auto element = [&](std::uint64_t code) {
            SkewElement r(ctx);
            for (std::size_t i = stab.size(); i-- > 0; code /= q) {
                std::vector<std::uint64_t> p(n, 0);
                p[x] = code % q;
                r = r + SkewElement::homogeneous(ctx, A.encode(p), stab[i]);
            }
            return r;
        };
        auto code_of = [&](const SkewElement& r) {
            std::uint64_t code = 0;
            for (std::size_t i = 0; i < stab.size(); ++i) code = code * q + A.digit(r.coefficient(stab[i]), x);
            return code;
        };
        std::vector<SkewElement> moves;
        for (GroupIndex h : stab) moves.push_back(SkewElement::u(ctx, h));
        std::vector<SkewElement> scalars;
        for (std::uint64_t c = 2; c < q; ++c) scalars.push_back(SkewElement::embed(ctx, A.scalar(c)));

        std::vector<bool> seen(tuples, false);
        for (std::uint64_t code = 1; code < tuples; ++code) {
            if (seen[code]) continue;
            out.push_back(element(code));
            std::vector<std::uint64_t> stack{code};
            seen[code] = true;
            while (!stack.empty()) {
                const SkewElement r = element(stack.back());
                stack.pop_back();
                std::vector<SkewElement> next;
                for (const auto& m : moves) {
                    next.push_back(m * r);
                    next.push_back(r * m);
                }
                for (const auto& c : scalars) next.push_back(c * r);
                for (const auto& s : next)
                    if (const auto k = code_of(s); !seen[k]) {
                        seen[k] = true;
                        stack.push_back(k);
                    }
            }
        }
    }
    return out;
}

/**
 * @brief Brute-force simplicity oracle for R.
 *
 * Exhaustive when |R| is within the enumeration cap: every nonzero r (skipping unit
 * multiples a u_g r b u_h of generators already known to produce R) is closed to RrR.
 * Above the cap, `witness_search` examines only elements of support size <= 2 and can
 * prove non-simplicity but never simplicity. When A = F_q^X and |R| is above the cap, the
 * answer is exact again: each idempotent candidate is spun to RrR by linear algebra.
 */
namespace detail {

inline void linear_simplicity(const SkewRingPtr& ctx, const Caps& caps, SkewSimplicity& out) {
    const SkewRing& R = *ctx;
    out.linear = true;
    const auto list = idempotent_candidates(ctx, caps);
    const std::size_t dim = linear_dimension(R);
    const std::uint64_t p = *linear_characteristic(R.coefficients());
    out.candidates += list.size();
    for (const auto& r : list) {
        ++out.closures_computed;
        const std::size_t rank = linear_ideal_rank(r);
        if (rank == dim) continue;
        out.status = SimplicityStatus::NotSimple;
        out.witness = r;
        out.ideal_size = 1;
        for (std::size_t i = 0; i < rank; ++i)
            out.ideal_size = out.ideal_size > UINT64_MAX / p ? UINT64_MAX : out.ideal_size * p;
        return;
    }
    out.status = SimplicityStatus::Simple;
}

}  // namespace detail

inline SkewSimplicity is_simple(const SkewRingPtr& ctx, const Caps& caps = {}, bool witness_search = false) {
    SkewSimplicity out;
    const SkewRing& R = *ctx;
    const bool small = R.encodable() && R.size() <= caps.enumeration;
    const bool linear = R.coefficients().kind() == RingKind::FunctionRing;
    std::vector<Elem> candidates;
    if (small) {
        candidates.resize(R.size() - 1);
        std::iota(candidates.begin(), candidates.end(), Elem{1});
    } else if (witness_search && R.encodable() && R.size() <= caps.witness_search) {
        out.witness_search = true;
        candidates = small_support_candidates(R);
    } else if (linear) {
        detail::linear_simplicity(ctx, caps, out);
        return out;
    } else {
        throw CapacityError("is_simple on " + R.name(), R.size(),
                            witness_search ? caps.witness_search : caps.enumeration);
    }
    out.candidates = candidates.size();
    std::vector<Elem> homogeneous_units;
    for (Elem a : units(R.coefficients(), caps))
        for (GroupIndex g = 0; g < R.degree(); ++g) homogeneous_units.push_back(R.homogeneous(a, g));
    auto result = search_proper_closure(R, candidates, two_sided_multipliers(R), unit_orbit(R, homogeneous_units));
    out.closures_computed = result.closures_computed;
    if (!result.simple) {
        out.status = SimplicityStatus::NotSimple;
        out.witness = SkewElement::decode(ctx, *result.witness);
        out.ideal_size = result.ideal.size();
    } else if (!out.witness_search) {
        out.status = SimplicityStatus::Simple;
    } else if (linear) {
        // the search found nothing; settle it exactly
        detail::linear_simplicity(ctx, caps, out);
    }
    return out;
}

// ---- constructive ideal-intersection procedures ---------------------------------------------

/// Throws PreconditionError unless G is abelian and A is G-simple.
inline void require_abelian_and_G_simple(const SkewRing& ctx, const Caps& caps, const char* who) {
    if (!is_abelian(ctx.group())) throw PreconditionError(std::string(who) + ": group is not abelian");
    if (!is_G_simple(ctx.action(), caps).simple)
        throw PreconditionError(std::string(who) + ": coefficient ring is not G-simple");
}

namespace detail {

inline bool support_within(const SkewElement& s, const std::vector<GroupIndex>& allowed) {
    for (GroupIndex g : s.support())
        if (!std::binary_search(allowed.begin(), allowed.end(), g)) return false;
    return true;
}

// Body of support_reduce without hypothesis checks; `ideal` must be RrR.
inline SkewElement support_reduce_in(const SkewElement& r, const SkewIdeal& ideal) {
    const auto& ctx = r.context();
    const Ring& A = ctx->coefficients();
    const GroupIndex h = r.support().front();
    const SkewElement shifted = r * SkewElement::u(ctx, ctx->group().inverse(h));
    auto allowed = shifted.support();
    std::sort(allowed.begin(), allowed.end());
    std::optional<SkewElement> found;
    IdealSet members = ideal.set;
    members.materialize();
    for (Elem x : members.elements) {
        auto s = SkewElement::decode(ctx, x);
        if (s.coefficient(0) == A.one() && support_within(s, allowed)) {
            found = std::move(s);
            break;
        }
    }
    if (!found) throw InvariantViolation("support_reduce: no element of RrR with E = 1 supported on Supp(r u_h^-1)");
    if (!ideal.contains(*found)) throw InvariantViolation("support_reduce: result not in RrR");
    if (found->coefficient(0) != A.one()) throw InvariantViolation("support_reduce: E(r') != 1");
    if (found->support_size() > r.support_size()) throw InvariantViolation("support_reduce: support grew");
    return *found;
}

}  // namespace detail

/**
 * @brief Given r != 0 (G abelian, A G-simple), returns r' in RrR with E(r') = 1 and
 *        |Supp(r')| <= |Supp(r)|.
 *
 * r is first translated to r u_{h^-1} with h the smallest element of Supp(r); r' is the
 * canonically smallest element of RrR supported inside the translated support with
 * identity coefficient 1. All three properties are re-checked before returning.
 */
inline SkewElement support_reduce(const SkewElement& r, const Caps& caps = {}) {
    if (r.is_zero()) throw DomainError("support_reduce: r must be nonzero");
    require_abelian_and_G_simple(*r.context(), caps, "support_reduce");
    auto ideal = skew_ideal_closure(r.context(), std::span<const SkewElement>(&r, 1), caps);
    return detail::support_reduce_in(r, ideal);
}

/**
 * @brief For a nonzero ideal I (G abelian, A G-simple), returns r' in I, central, with E(r') = 1.
 *
 * Picks the canonically smallest element of I of minimal support and reduces it.
 */
inline SkewElement central_witness(const SkewIdeal& ideal, const Caps& caps = {}) {
    if (ideal.is_zero()) throw DomainError("central_witness: ideal is zero");
    require_abelian_and_G_simple(*ideal.ctx, caps, "central_witness");
    IdealSet members = ideal.set;
    members.materialize();
    std::optional<SkewElement> best;
    std::size_t best_support = std::numeric_limits<std::size_t>::max();
    for (Elem x : members.elements) {
        if (x == 0) continue;
        auto s = SkewElement::decode(ideal.ctx, x);
        if (s.support_size() < best_support) {
            best_support = s.support_size();
            best = std::move(s);
        }
    }
    auto generated = skew_ideal_closure(ideal.ctx, std::span<const SkewElement>(&*best, 1), caps);
    SkewElement reduced = detail::support_reduce_in(*best, generated);
    if (!ideal.contains(reduced)) throw InvariantViolation("central_witness: result not in I");
    if (!is_central(reduced)) throw InvariantViolation("central_witness: result not central");
    if (reduced.coefficient(0) != ideal.ctx->coefficients().one())
        throw InvariantViolation("central_witness: E(r') != 1");
    return reduced;
}

}  // namespace skewring

#endif  // SKEWRING_SKEW_GROUP_RING_HPP
