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

#ifndef SKEWRING_FINITE_RING_HPP
#define SKEWRING_FINITE_RING_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "galois_field.hpp"

namespace skewring {

/// Canonical index of a ring element. Index order is lexicographic order of payloads.
using Elem = std::uint64_t;

enum class RingKind { ModularIntegers, MatrixRing, FunctionRing };

/**
 * @brief A finite unital associative coefficient ring from one of three families:
 *        Z/n, M_k(F_p) and F_q^X (functions on a finite point set X = {0, ..., |X|-1}).
 *
 * Elements are encoded as a payload of digits (the residue; matrix entries in row-major
 * order; the value vector indexed by X) read as a big-endian mixed-radix integer. Rings
 * with at most 256 elements carry full addition and multiplication tables.
 */
class Ring {
    struct Token {};

   public:
    static std::shared_ptr<const Ring> modular(std::uint64_t n) {
        if (n < 2) throw DomainError("Z/n requires n >= 2, got " + std::to_string(n));
        if (n > (std::uint64_t{1} << 32)) throw DomainError("Z/n: modulus too large to encode");
        return std::make_shared<const Ring>(Token{}, RingKind::ModularIntegers, n, 1, nullptr);
    }

    static std::shared_ptr<const Ring> matrices(std::uint32_t size, std::uint32_t p) {
        if (size < 1) throw DomainError("matrix ring requires size >= 1");
        if (!GaloisField::is_prime(p) || p > 256)
            throw DomainError("matrix ring requires a prime p <= 256, got " + std::to_string(p));
        return std::make_shared<const Ring>(Token{}, RingKind::MatrixRing, p, size * size,
                                            std::make_shared<const GaloisField>(p));
    }

    static std::shared_ptr<const Ring> functions(std::uint32_t points, std::uint32_t q) {
        if (points < 1) throw DomainError("function ring requires at least one point");
        auto field = std::make_shared<const GaloisField>(q);
        return std::make_shared<const Ring>(Token{}, RingKind::FunctionRing, q, points, std::move(field));
    }

    Ring(Token, RingKind kind, std::uint64_t base, std::uint32_t length, std::shared_ptr<const GaloisField> field)
        : kind_(kind), base_(base), length_(length), field_(std::move(field)) {
        size_ = 1;
        weights_.assign(length_, 1);
        for (std::uint32_t i = 0; i < length_; ++i) {
            if (size_ > (std::uint64_t{1} << 32) / base_)
                throw DomainError("ring too large to encode (more than 2^32 elements)");
            size_ *= base_;
        }
        for (std::uint32_t i = length_; i-- > 1;) weights_[i - 1] = weights_[i] * base_;
        if (kind_ == RingKind::MatrixRing) {
            k_ = 1;
            while (k_ * k_ < length_) ++k_;
        }
        one_ = compute_one();
        build_generators();
        if (size_ <= kTableLimit) build_tables();
    }

    RingKind kind() const noexcept { return kind_; }
    std::uint64_t size() const noexcept { return size_; }
    /// n for Z/n, p for M_k(F_p), q for F_q^X.
    std::uint64_t modulus() const noexcept { return base_; }
    std::uint32_t matrix_size() const noexcept { return k_; }
    /// |X| for function rings.
    std::uint32_t points() const noexcept { return kind_ == RingKind::FunctionRing ? length_ : 0; }
    std::size_t payload_length() const noexcept { return length_; }
    std::uint64_t payload_base() const noexcept { return base_; }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }

    bool is_commutative() const noexcept { return kind_ != RingKind::MatrixRing || k_ == 1; }

    /// The coefficient field (F_p or F_q); Z/n has none.
    const GaloisField& field() const {
        if (!field_) throw DomainError(name() + " has no coefficient field");
        return *field_;
    }

    std::string name() const {
        switch (kind_) {
            case RingKind::ModularIntegers: return "Z/" + std::to_string(base_);
            case RingKind::MatrixRing: return "M_" + std::to_string(k_) + "(F_" + std::to_string(base_) + ")";
            case RingKind::FunctionRing: return "F_" + std::to_string(base_) + "^" + std::to_string(length_);
        }
        return "?";
    }

    bool same_as(const Ring& other) const noexcept {
        return this == &other || (kind_ == other.kind_ && base_ == other.base_ && length_ == other.length_);
    }

    void check(Elem a) const {
        if (a >= size_) throw DomainError(name() + ": element index " + std::to_string(a) + " out of range");
    }

    std::uint64_t digit(Elem a, std::size_t i) const { return (a / weights_[i]) % base_; }

    std::vector<std::uint64_t> payload(Elem a) const {
        check(a);
        std::vector<std::uint64_t> out(length_);
        for (std::uint32_t i = 0; i < length_; ++i) out[i] = digit(a, i);
        return out;
    }

    Elem encode(std::span<const std::uint64_t> payload) const {
        if (payload.size() != length_)
            throw DomainError(name() + ": payload has " + std::to_string(payload.size()) + " entries, expected " +
                              std::to_string(length_));
        Elem a = 0;
        for (std::uint32_t i = 0; i < length_; ++i) {
            if (payload[i] >= base_)
                throw DomainError(name() + ": payload entry " + std::to_string(payload[i]) + " out of range");
            a += payload[i] * weights_[i];
        }
        return a;
    }

    Elem add(Elem a, Elem b) const {
        if (!add_table_.empty()) return add_table_[a * size_ + b];
        return add_slow(a, b);
    }

    Elem mul(Elem a, Elem b) const {
        if (!mul_table_.empty()) return mul_table_[a * size_ + b];
        return mul_slow(a, b);
    }

    Elem neg(Elem a) const {
        if (kind_ == RingKind::ModularIntegers) return a == 0 ? 0 : base_ - a;
        Elem out = 0;
        for (std::uint32_t i = 0; i < length_; ++i)
            out += static_cast<Elem>(field_->neg(static_cast<std::uint32_t>(digit(a, i)))) * weights_[i];
        return out;
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    /// Additive generators in canonical order: 1 for Z/n, matrix units E_ij for M_k(F_p),
    /// and t^j placed at a single point for F_q^X (q = p^m, 0 <= j < m).
    std::span<const Elem> additive_generators() const noexcept { return generators_; }

    /// Two-sided inverse, or nothing when `a` is not a unit.
    std::optional<Elem> try_invert(Elem a) const {
        check(a);
        switch (kind_) {
            case RingKind::ModularIntegers: return invert_modular(a);
            case RingKind::FunctionRing: return invert_pointwise(a);
            case RingKind::MatrixRing: return invert_matrix(a);
        }
        return std::nullopt;
    }

    /// Scalar matrix c*I, or the constant function c, or the residue c.
    Elem scalar(std::uint64_t c) const {
        if (kind_ == RingKind::ModularIntegers) return c % base_;
        std::vector<std::uint64_t> p(length_, 0);
        if (kind_ == RingKind::FunctionRing) {
            std::fill(p.begin(), p.end(), c % base_);
        } else {
            for (std::uint32_t i = 0; i < k_; ++i) p[i * k_ + i] = c % base_;
        }
        return encode(p);
    }

   private:
    static constexpr std::uint64_t kTableLimit = 256;

    Elem compute_one() const { return kind_ == RingKind::ModularIntegers ? 1 : scalar(1); }

    void build_generators() {
        if (kind_ == RingKind::ModularIntegers) {
            generators_ = {1};
            return;
        }
        const std::uint32_t m = field_->degree();
        const std::uint32_t p = field_->characteristic();
        for (std::uint32_t i = 0; i < length_; ++i) {
            std::uint64_t basis = 1;
            for (std::uint32_t j = 0; j < m; ++j, basis *= p) generators_.push_back(basis * weights_[i]);
        }
        std::sort(generators_.begin(), generators_.end());
    }

    void build_tables() {
        add_table_.resize(size_ * size_);
        mul_table_.resize(size_ * size_);
        for (Elem a = 0; a < size_; ++a)
            for (Elem b = 0; b < size_; ++b) {
                add_table_[a * size_ + b] = add_slow(a, b);
                mul_table_[a * size_ + b] = mul_slow(a, b);
            }
    }

    Elem add_slow(Elem a, Elem b) const {
        if (kind_ == RingKind::ModularIntegers) return (a + b) % base_;
        Elem out = 0;
        for (std::uint32_t i = 0; i < length_; ++i)
            out += static_cast<Elem>(field_->add(static_cast<std::uint32_t>(digit(a, i)),
                                                 static_cast<std::uint32_t>(digit(b, i)))) *
                   weights_[i];
        return out;
    }

    Elem mul_slow(Elem a, Elem b) const {
        switch (kind_) {
            case RingKind::ModularIntegers: return (a * b) % base_;
            case RingKind::FunctionRing: {
                Elem out = 0;
                for (std::uint32_t i = 0; i < length_; ++i)
                    out += static_cast<Elem>(field_->mul(static_cast<std::uint32_t>(digit(a, i)),
                                                         static_cast<std::uint32_t>(digit(b, i)))) *
                           weights_[i];
                return out;
            }
            case RingKind::MatrixRing: {
                Elem out = 0;
                for (std::uint32_t r = 0; r < k_; ++r)
                    for (std::uint32_t c = 0; c < k_; ++c) {
                        std::uint64_t acc = 0;
                        for (std::uint32_t j = 0; j < k_; ++j) acc += digit(a, r * k_ + j) * digit(b, j * k_ + c);
                        out += (acc % base_) * weights_[r * k_ + c];
                    }
                return out;
            }
        }
        return 0;
    }

    std::optional<Elem> invert_modular(Elem a) const {
        // extended Euclid on signed values; n <= 2^32 keeps products in range
        std::int64_t r0 = static_cast<std::int64_t>(base_), r1 = static_cast<std::int64_t>(a);
        std::int64_t t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
        }
        if (r0 != 1) return std::nullopt;
        std::int64_t n = static_cast<std::int64_t>(base_);
        return static_cast<Elem>(((t0 % n) + n) % n);
    }

    std::optional<Elem> invert_pointwise(Elem a) const {
        Elem out = 0;
        for (std::uint32_t i = 0; i < length_; ++i) {
            auto inv = field_->inverse(static_cast<std::uint32_t>(digit(a, i)));
            if (!inv) return std::nullopt;
            out += static_cast<Elem>(*inv) * weights_[i];
        }
        return out;
    }

    std::optional<Elem> invert_matrix(Elem a) const {
        const std::uint32_t k = k_;
        const auto& f = *field_;
        // Gauss-Jordan on [a | I]
        std::vector<std::vector<std::uint32_t>> m(k, std::vector<std::uint32_t>(2 * k, 0));
        for (std::uint32_t r = 0; r < k; ++r) {
            for (std::uint32_t c = 0; c < k; ++c) m[r][c] = static_cast<std::uint32_t>(digit(a, r * k + c));
            m[r][k + r] = 1;
        }
        for (std::uint32_t col = 0; col < k; ++col) {
            std::uint32_t pivot = col;
            while (pivot < k && m[pivot][col] == 0) ++pivot;
            if (pivot == k) return std::nullopt;
            std::swap(m[pivot], m[col]);
            std::uint32_t inv = *f.inverse(m[col][col]);
            for (auto& x : m[col]) x = f.mul(x, inv);
            for (std::uint32_t r = 0; r < k; ++r) {
                if (r == col || m[r][col] == 0) continue;
                std::uint32_t factor = m[r][col];
                for (std::uint32_t c = 0; c < 2 * k; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[col][c]));
            }
        }
        Elem out = 0;
        for (std::uint32_t r = 0; r < k; ++r)
            for (std::uint32_t c = 0; c < k; ++c) out += static_cast<Elem>(m[r][k + c]) * weights_[r * k + c];
        return out;
    }

    RingKind kind_;
    std::uint64_t base_;
    std::uint32_t length_;
    std::uint32_t k_ = 0;
    std::shared_ptr<const GaloisField> field_;
    std::uint64_t size_ = 1;
    std::vector<std::uint64_t> weights_;
    Elem one_ = 0;
    std::vector<Elem> generators_;
    std::vector<Elem> add_table_, mul_table_;
};

using RingPtr = std::shared_ptr<const Ring>;

/// An element bound to its ring; arithmetic between different rings is a DomainError.
class RingElement {
   public:
    RingElement(RingPtr ring, Elem value) : ring_(std::move(ring)), value_(value) { ring_->check(value_); }
    RingElement(RingPtr ring, std::span<const std::uint64_t> payload)
        : ring_(std::move(ring)), value_(ring_->encode(payload)) {}

    static RingElement zero(RingPtr ring) { return {ring, ring->zero()}; }
    static RingElement one(RingPtr ring) { return {ring, ring->one()}; }

    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint64_t> payload() const { return ring_->payload(value_); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        a.require_same(b);
        return {a.ring_, a.ring_->add(a.value_, b.value_)};
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        a.require_same(b);
        return {a.ring_, a.ring_->sub(a.value_, b.value_)};
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.require_same(b);
        return {a.ring_, a.ring_->mul(a.value_, b.value_)};
    }
    RingElement operator-() const { return {ring_, ring_->neg(value_)}; }

    std::optional<RingElement> try_invert() const {
        auto inv = ring_->try_invert(value_);
        if (!inv) return std::nullopt;
        return RingElement(ring_, *inv);
    }

    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_->same_as(*b.ring_) && a.value_ == b.value_;
    }

   private:
    void require_same(const RingElement& other) const {
        if (!ring_->same_as(*other.ring_))
            throw DomainError("mixed-ring operands: " + ring_->name() + " and " + other.ring_->name());
    }

    RingPtr ring_;
    Elem value_;
};

/// Every element of the ring, each once, in canonical order.
inline std::vector<RingElement> enumerate_elements(const RingPtr& ring, const Caps& caps = {}) {
    require_within_cap("enumerate " + ring->name(), ring->size(), caps.enumeration);
    std::vector<RingElement> out;
    out.reserve(ring->size());
    for (Elem a = 0; a < ring->size(); ++a) out.emplace_back(ring, a);
    return out;
}

/// Units in canonical order.
inline std::vector<Elem> units(const Ring& ring, const Caps& caps = {}) {
    require_within_cap("units of " + ring.name(), ring.size(), caps.enumeration);
    std::vector<Elem> out;
    for (Elem a = 0; a < ring.size(); ++a)
        if (ring.try_invert(a)) out.push_back(a);
    return out;
}

}  // namespace skewring

#endif  // SKEWRING_FINITE_RING_HPP
