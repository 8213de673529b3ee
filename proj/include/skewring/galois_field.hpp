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

#ifndef SKEWRING_GALOIS_FIELD_HPP
#define SKEWRING_GALOIS_FIELD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace skewring {

/**
 * @brief Small finite field F_q, q = p^m <= 256, realized as F_p[t]/(f).
 *
 * An element is stored as the integer sum c_0 + c_1 p + ... + c_{m-1} p^{m-1} of its
 * polynomial coefficients in base p, so the prime subfield is {0, ..., p-1} and the
 * integer order of encodings is the canonical element order. The modulus f is the
 * lexicographically smallest monic irreducible polynomial of degree m.
 */
class GaloisField {
   public:
    explicit GaloisField(std::uint32_t q) : q_(q) {
        if (q < 2 || q > 256) throw DomainError("field order must lie in [2, 256], got " + std::to_string(q));
        auto pm = prime_power(q);
        if (!pm) throw DomainError("field order is not a prime power: " + std::to_string(q));
        p_ = pm->first;
        m_ = pm->second;
        modulus_ = find_modulus(p_, m_);
        build_tables();
    }

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return m_; }
    /// Monic modulus coefficients, constant term first.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    /// Multiplicative inverse; 0 has none.
    std::optional<std::uint32_t> inverse(std::uint32_t a) const {
        if (a == 0) return std::nullopt;
        return inv_[a];
    }

    /// Returns (p, m) with q = p^m, or nothing.
    static std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
        if (q < 2) return std::nullopt;
        std::uint64_t p = 2;
        while (p * p <= q && q % p != 0) ++p;
        if (q % p != 0) p = q;
        std::uint32_t m = 0;
        while (q % p == 0) {
            q /= p;
            ++m;
        }
        if (q != 1) return std::nullopt;
        return std::make_pair(static_cast<std::uint32_t>(p), m);
    }

    static bool is_prime(std::uint64_t n) {
        auto pm = prime_power(n);
        return pm && pm->second == 1;
    }

   private:
    using Poly = std::vector<std::uint32_t>;  // constant term first

    static Poly poly_mod(Poly a, const Poly& f, std::uint32_t p) {
        const std::size_t deg_f = f.size() - 1;  // f monic
        while (a.size() > deg_f) {
            std::uint32_t lead = a.back();
            std::size_t shift = a.size() - 1 - deg_f;
            for (std::size_t i = 0; i <= deg_f; ++i)
                a[shift + i] = (a[shift + i] + (p - lead) * f[i]) % p;
            a.pop_back();
        }
        return a;
    }

    static bool divides(const Poly& g, const Poly& f, std::uint32_t p) {
        Poly r = poly_mod(f, g, p);
        for (auto c : r)
            if (c != 0) return false;
        return true;
    }

    // Monic polynomial of the given degree whose lower coefficients encode `code` in base p.
    static Poly monic(std::uint32_t degree, std::uint64_t code, std::uint32_t p) {
        Poly f(degree + 1, 0);
        for (std::uint32_t i = 0; i < degree; ++i) {
            f[i] = static_cast<std::uint32_t>(code % p);
            code /= p;
        }
        f[degree] = 1;
        return f;
    }

    static Poly find_modulus(std::uint32_t p, std::uint32_t m) {
        if (m == 1) return {0, 1};
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly f = monic(m, code, p);
            bool irreducible = true;
            for (std::uint32_t d = 1; irreducible && 2 * d <= m; ++d) {
                std::uint64_t dcount = 1;
                for (std::uint32_t i = 0; i < d; ++i) dcount *= p;
                for (std::uint64_t dc = 0; dc < dcount; ++dc) {
                    if (divides(monic(d, dc, p), f, p)) {
                        irreducible = false;
                        break;
                    }
                }
            }
            if (irreducible) return f;
        }
        throw DomainError("no irreducible polynomial found");  // unreachable for m >= 1
    }

    Poly to_poly(std::uint32_t a) const {
        Poly v(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            v[i] = a % p_;
            a /= p_;
        }
        return v;
    }

    std::uint32_t from_poly(const Poly& v) const {
        std::uint32_t a = 0;
        for (std::size_t i = v.size(); i-- > 0;) a = a * p_ + v[i];
        return a;
    }

    void build_tables() {
        add_.assign(q_ * q_, 0);
        mul_.assign(q_ * q_, 0);
        neg_.assign(q_, 0);
        inv_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) {
            Poly pa = to_poly(a);
            Poly na(m_);
            for (std::uint32_t i = 0; i < m_; ++i) na[i] = (p_ - pa[i]) % p_;
            neg_[a] = from_poly(na);
            for (std::uint32_t b = 0; b < q_; ++b) {
                Poly pb = to_poly(b);
                Poly s(m_);
                for (std::uint32_t i = 0; i < m_; ++i) s[i] = (pa[i] + pb[i]) % p_;
                add_[a * q_ + b] = from_poly(s);
                Poly prod(2 * m_ - 1, 0);
                for (std::uint32_t i = 0; i < m_; ++i)
                    for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
                mul_[a * q_ + b] = from_poly(poly_mod(prod, modulus_, p_));
            }
        }
        for (std::uint32_t a = 1; a < q_; ++a)
            for (std::uint32_t b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) inv_[a] = b;
    }

    std::uint32_t q_;
    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    Poly modulus_;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

}  // namespace skewring

#endif  // SKEWRING_GALOIS_FIELD_HPP
