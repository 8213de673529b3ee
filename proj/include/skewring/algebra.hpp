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

#ifndef SKEWRING_ALGEBRA_HPP
#define SKEWRING_ALGEBRA_HPP

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "finite_ring.hpp"

namespace skewring {

/**
 * @brief A finite ring whose elements are canonical indices 0..size()-1.
 *
 * additive_generators() must generate the additive group; every additive (or
 * bilinear) property is then checkable on generators alone.
 */
template <class R>
concept FiniteRing = requires(const R& r, Elem a, Elem b) {
    { r.size() } -> std::convertible_to<std::uint64_t>;
    { r.zero() } -> std::convertible_to<Elem>;
    { r.one() } -> std::convertible_to<Elem>;
    { r.add(a, b) } -> std::convertible_to<Elem>;
    { r.neg(a) } -> std::convertible_to<Elem>;
    { r.mul(a, b) } -> std::convertible_to<Elem>;
    { r.additive_generators() };
};

/// Membership bitset over 0..universe-1 plus the members in insertion order.
class ElementSet {
   public:
    explicit ElementSet(std::uint64_t universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

    bool contains(Elem a) const { return a < universe_ && ((bits_[a >> 6] >> (a & 63)) & 1u); }

    bool insert(Elem a) {
        auto& word = bits_[a >> 6];
        const std::uint64_t mask = std::uint64_t{1} << (a & 63);
        if (word & mask) return false;
        word |= mask;
        members_.push_back(a);
        return true;
    }

    std::uint64_t size() const noexcept { return members_.size(); }
    std::uint64_t universe() const noexcept { return universe_; }
    const std::vector<Elem>& members() const noexcept { return members_; }

    std::vector<Elem> sorted() const {
        std::vector<Elem> out = members_;
        std::sort(out.begin(), out.end());
        return out;
    }

   private:
    std::uint64_t universe_;
    std::vector<std::uint64_t> bits_;
    std::vector<Elem> members_;
};

/**
 * @brief Additive subgroup grown one generator at a time.
 *
 * Adjoining y to S replaces S by the disjoint union of the cosets S + k*y for
 * 0 <= k < ord(y mod S), so the work is linear in the final size.
 */
template <FiniteRing R>
class AdditiveSpan {
   public:
    explicit AdditiveSpan(const R& ring) : ring_(&ring), set_(ring.size()) { set_.insert(ring.zero()); }

    bool contains(Elem a) const { return set_.contains(a); }

    bool adjoin(Elem y) {
        if (set_.contains(y)) return false;
        const std::size_t base = set_.members().size();
        Elem step = y;
        while (!set_.contains(step)) {
            for (std::size_t i = 0; i < base; ++i) set_.insert(ring_->add(set_.members()[i], step));
            step = ring_->add(step, y);
        }
        basis_.push_back(y);
        return true;
    }

    std::uint64_t size() const noexcept { return set_.size(); }
    const std::vector<Elem>& basis() const noexcept { return basis_; }
    const ElementSet& set() const noexcept { return set_; }

   private:
    const R* ring_;
    ElementSet set_;
    std::vector<Elem> basis_;
};

/**
 * @brief Smallest additive subgroup containing `seeds` and closed under a family of
 *        additive maps, found by a FIFO worklist.
 *
 * `images(y, emit)` must call emit(f(y)) for every map f in the family. Because every map
 * is additive, only the adjoined subgroup generators need to be pushed through the maps.
 * When `stop_at` is given the search ends as soon as that element enters the span.
 */
template <FiniteRing R, class Images>
AdditiveSpan<R> additive_closure(const R& ring, std::span<const Elem> seeds, Images&& images,
                                 std::optional<Elem> stop_at = std::nullopt) {
    AdditiveSpan<R> span(ring);
    std::deque<Elem> work(seeds.begin(), seeds.end());
    auto emit = [&work](Elem z) { work.push_back(z); };
    while (!work.empty()) {
        Elem y = work.front();
        work.pop_front();
        if (!span.adjoin(y)) continue;
        if (stop_at && span.contains(*stop_at)) break;
        images(y, emit);
    }
    return span;
}

/// Images of y under left and right multiplication by every additive generator.
template <FiniteRing R>
auto two_sided_multipliers(const R& ring) {
    return [&ring](Elem y, auto&& emit) {
        for (Elem m : ring.additive_generators()) {
            emit(ring.mul(m, y));
            emit(ring.mul(y, m));
        }
    };
}

/// An ideal (or invariant ideal) given by its sorted elements; whole ideals may be left implicit.
struct IdealSet {
    std::uint64_t ring_size = 0;
    bool whole = false;
    std::vector<Elem> elements;

    bool contains(Elem a) const {
        return whole ? a < ring_size : std::binary_search(elements.begin(), elements.end(), a);
    }
    std::uint64_t size() const noexcept { return whole ? ring_size : elements.size(); }

    void materialize() {
        if (whole && elements.size() != ring_size) {
            elements.resize(ring_size);
            std::iota(elements.begin(), elements.end(), Elem{0});
        }
    }
};

template <FiniteRing R>
IdealSet to_ideal_set(const R& ring, const AdditiveSpan<R>& span) {
    IdealSet out;
    out.ring_size = ring.size();
    out.whole = span.contains(ring.one());
    if (!out.whole) out.elements = span.set().sorted();
    return out;
}

/// Two-sided ideal generated by `generators`, materialized in canonical order.
template <FiniteRing R>
IdealSet ideal_closure(const R& ring, std::span<const Elem> generators, const Caps& caps = {}) {
    require_within_cap("ideal closure", ring.size(), caps.enumeration);
    auto span = additive_closure(ring, generators, two_sided_multipliers(ring), ring.one());
    IdealSet out = to_ideal_set(ring, span);
    out.materialize();
    return out;
}

/// Elements commuting with every additive generator, which is every element by bilinearity.
template <FiniteRing R>
std::vector<Elem> center(const R& ring, const Caps& caps = {}) {
    require_within_cap("center", ring.size(), caps.enumeration);
    std::vector<Elem> out;
    for (Elem z = 0; z < ring.size(); ++z) {
        bool central = true;
        for (Elem m : ring.additive_generators()) {
            if (ring.mul(z, m) != ring.mul(m, z)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(z);
    }
    return out;
}

/// Outcome of a search for a nonzero element generating a proper (invariant) ideal.
struct SimplicityResult {
    bool simple = true;
    std::optional<Elem> witness;
    IdealSet ideal;
    std::uint64_t closures_computed = 0;
};

/**
 * @brief Runs the closure of every candidate and stops at the first proper one.
 *
 * `orbit(x, emit)` lists elements generating the same closure as x (e.g. unit multiples);
 * those are skipped once x is known to generate everything. A closure also stops as soon
 * as it reaches any element known to generate everything, since its ideal then contains
 * that element's ideal.
 */
template <FiniteRing R, class Images, class Orbit>
SimplicityResult search_proper_closure(const R& ring, std::span<const Elem> candidates, Images&& images,
                                       Orbit&& orbit) {
    SimplicityResult result;
    ElementSet known_whole(ring.size());
    known_whole.insert(ring.one());
    for (Elem x : candidates) {
        if (x == ring.zero() || known_whole.contains(x)) continue;
        AdditiveSpan<R> span(ring);
        std::deque<Elem> work{x};
        auto emit = [&work](Elem z) { work.push_back(z); };
        bool whole = false;
        while (!work.empty() && !whole) {
            Elem y = work.front();
            work.pop_front();
            const std::size_t before = span.set().members().size();
            if (!span.adjoin(y)) continue;
            const auto& members = span.set().members();
            for (std::size_t i = before; i < members.size() && !whole; ++i) whole = known_whole.contains(members[i]);
            if (!whole) images(y, emit);
        }
        ++result.closures_computed;
        if (!whole) {
            result.simple = false;
            result.witness = x;
            result.ideal = to_ideal_set(ring, span);
            return result;
        }
        known_whole.insert(x);
        orbit(x, [&known_whole](Elem y) { known_whole.insert(y); });
    }
    return result;
}

/// Left-right unit orbit {u x v}.
template <FiniteRing R>
auto unit_orbit(const R& ring, std::span<const Elem> unit_list) {
    return [&ring, unit_list](Elem x, auto&& emit) {
        for (Elem u : unit_list) {
            Elem ux = ring.mul(u, x);
            for (Elem v : unit_list) emit(ring.mul(ux, v));
        }
    };
}

/// Square-and-multiply with a caller-supplied product.
template <class T, class Mul>
T power(T base, std::uint64_t exponent, const T& one, Mul&& mul) {
    T acc = one;
    while (exponent > 0) {
        if (exponent & 1u) acc = mul(acc, base);
        exponent >>= 1;
        if (exponent) base = mul(base, base);
    }
    return acc;
}

template <class T>
struct FieldTest {
    bool is_field = false;
    /// A nonzero element without an inverse in the set, and a nonzero partner annihilating it.
    std::optional<T> non_unit;
    std::optional<T> annihilator;
};

/**
 * @brief Decides whether a finite commutative unital subring is a field.
 *
 * Commutativity is verified on a greedy additive basis (a DomainError otherwise). A set of
 * size n is a field iff z^(n-1) = 1 for every nonzero z.
 */
template <class T, class Mul, class Add>
FieldTest<T> test_field(std::span<const T> elements, const T& zero, const T& one, Mul&& mul, Add&& add) {
    std::set<T> members(elements.begin(), elements.end());
    if (!members.count(zero) || !members.count(one))
        throw DomainError("is_field: input must contain 0 and 1");

    std::set<T> span{zero};
    std::vector<T> basis;
    for (const T& e : members) {
        if (span.count(e)) continue;
        basis.push_back(e);
        std::vector<T> base(span.begin(), span.end());
        T step = e;
        while (!span.count(step)) {
            for (const T& s : base) span.insert(add(s, step));
            step = add(step, e);
        }
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (mul(basis[i], basis[j]) != mul(basis[j], basis[i]))
                throw DomainError("is_field: input is not commutative");

    FieldTest<T> out;
    if (members.size() < 2 || zero == one) return out;
    const std::uint64_t n = members.size();
    bool field = true;
    for (const T& z : members)
        if (z != zero && power(z, n - 1, one, mul) != one) {
            field = false;
            break;
        }
    if (field) {
        out.is_field = true;
        return out;
    }
    // Not a field, so some nonzero element is a non-unit, and in a finite commutative ring
    // every non-unit is a zero divisor.
    for (const T& z : members) {
        if (z == zero) continue;
        std::set<T> seen;
        T p = z;
        while (p != one && seen.insert(p).second) p = mul(p, z);
        if (p == one) continue;
        out.non_unit = z;
        for (const T& w : members)
            if (w != zero && mul(z, w) == zero) {
                out.annihilator = w;
                break;
            }
        return out;
    }
    return out;
}

/// is_field on a subset of a coefficient ring.
inline FieldTest<Elem> test_field(const Ring& ring, std::span<const Elem> elements) {
    return test_field<Elem>(
        elements, ring.zero(), ring.one(), [&ring](Elem a, Elem b) { return ring.mul(a, b); },
        [&ring](Elem a, Elem b) { return ring.add(a, b); });
}

/// Simplicity of the coefficient ring by exhaustive principal-ideal closure.
inline SimplicityResult is_simple_ring(const Ring& ring, const Caps& caps = {}) {
    require_within_cap("is_simple_ring " + ring.name(), ring.size(), caps.enumeration);
    std::vector<Elem> candidates(ring.size() - 1);
    std::iota(candidates.begin(), candidates.end(), Elem{1});
    auto unit_list = units(ring, caps);
    auto result = search_proper_closure(ring, candidates, two_sided_multipliers(ring), unit_orbit(ring, unit_list));
    result.ideal.materialize();
    return result;
}

}  // namespace skewring

#endif  // SKEWRING_ALGEBRA_HPP
