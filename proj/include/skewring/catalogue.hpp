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

#ifndef SKEWRING_CATALOGUE_HPP
#define SKEWRING_CATALOGUE_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finite_group.hpp"
#include "instance.hpp"

namespace skewring {

namespace catalogue {

inline GroupDescriptor cyclic(std::vector<std::uint32_t> orders) {
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::Cyclic;
    g.orders = std::move(orders);
    return g;
}

inline GroupDescriptor symmetric(std::uint32_t degree) {
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::Symmetric;
    g.degree = degree;
    return g;
}

inline GroupDescriptor permutations(std::uint32_t degree, std::vector<std::string> generators) {
    GroupDescriptor g;
    g.kind = GroupDescriptor::Kind::Permutations;
    g.degree = degree;
    g.generators = std::move(generators);
    return g;
}

inline RingDescriptor modular(std::uint64_t n) {
    RingDescriptor r;
    r.kind = RingKind::ModularIntegers;
    r.n = n;
    return r;
}

inline RingDescriptor matrices(std::uint32_t size, std::uint32_t p) {
    RingDescriptor r;
    r.kind = RingKind::MatrixRing;
    r.size = size;
    r.p = p;
    return r;
}

inline RingDescriptor functions(std::uint32_t points, std::uint32_t q) {
    RingDescriptor r;
    r.kind = RingKind::FunctionRing;
    r.points = points;
    r.q = q;
    return r;
}

inline InstanceSpec algebraic(std::string name, RingDescriptor ring, GroupDescriptor group, ActionDescriptor action) {
    InstanceSpec s;
    s.name = std::move(name);
    s.body = AlgebraicSpec{ring, std::move(group), std::move(action)};
    return s;
}

inline ActionDescriptor generator_images(std::vector<std::pair<std::string, AutomorphismDescriptor>> images) {
    ActionDescriptor a;
    a.kind = ActionDescriptor::Kind::Generators;
    a.images = std::move(images);
    return a;
}

inline AutomorphismDescriptor permute(std::vector<std::uint32_t> p) {
    AutomorphismDescriptor a;
    a.permute = std::move(p);
    return a;
}

inline AutomorphismDescriptor conjugate(Payload v) {
    AutomorphismDescriptor a;
    a.conjugate = std::move(v);
    return a;
}

inline InstanceSpec dynamical(std::string name, std::uint32_t points, std::uint32_t q, GroupDescriptor group,
                              SetActionDescriptor::Kind kind,
                              std::vector<std::pair<std::string, std::vector<std::uint32_t>>> images = {}) {
    InstanceSpec s;
    s.name = std::move(name);
    DynamicalSpec d;
    d.points = points;
    d.q = q;
    d.group = std::move(group);
    d.action.kind = kind;
    d.action.images = std::move(images);
    s.body = std::move(d);
    s.witness_search = true;
    return s;
}

}  // namespace catalogue

/// Hand-picked algebraic and dynamical instances with known behaviour.
inline std::vector<InstanceSpec> named_instances() {
    using namespace catalogue;
    using K = SetActionDescriptor::Kind;
    std::vector<InstanceSpec> out;
    out.push_back(algebraic("swap_f2x2", functions(2, 2), cyclic({2}), generator_images({{"1", permute({1, 0})}})));
    out.push_back(algebraic("matrix_conjugation_f3", matrices(2, 3), cyclic({2}),
                            generator_images({{"1", conjugate({0, 1, 2, 0})}})));
    out.push_back(algebraic("matrix_conjugation_f2", matrices(2, 2), cyclic({2}),
                            generator_images({{"1", conjugate({0, 1, 1, 0})}})));
    out.push_back(algebraic("trivial_f2_z2", modular(2), cyclic({2}), ActionDescriptor{}));
    out.push_back(algebraic("two_swaps_f2x4", functions(4, 2), cyclic({2}),
                            generator_images({{"1", permute({1, 0, 3, 2})}})));
    out.push_back(algebraic("rotation_f2x3", functions(3, 2), cyclic({3}), generator_images({{"1", permute({1, 2, 0})}})));
    out.push_back(algebraic("z4_through_quotient", functions(2, 2), cyclic({4}),
                            generator_images({{"1", permute({1, 0})}})));
    out.push_back(algebraic("matrices_trivial_group", matrices(2, 2), cyclic({1}), ActionDescriptor{}));
    {
        AutomorphismDescriptor frob;
        frob.power = 2;
        out.push_back(algebraic("frobenius_f4", functions(1, 4), cyclic({2}), generator_images({{"1", frob}})));
    }
    out.push_back(dynamical("s3_natural_f2", 3, 2, symmetric(3), K::Natural));
    return out;
}

inline std::optional<InstanceSpec> named_instance(std::string_view name) {
    for (auto& s : named_instances())
        if (s.name == name) return s;
    return std::nullopt;
}

/// Transformation groups with |X| <= 6 and |G| <= 24.
inline std::vector<InstanceSpec> dynamics_catalogue() {
    using namespace catalogue;
    using K = SetActionDescriptor::Kind;
    std::vector<InstanceSpec> out;
    for (std::uint32_t n = 2; n <= 6; ++n)
        out.push_back(dynamical("regular_z" + std::to_string(n), n, 2, cyclic({n}), K::Regular));
    out.push_back(dynamical("regular_z2xz2", 4, 2, cyclic({2, 2}), K::Regular));
    out.push_back(dynamical("regular_s3", 6, 2, symmetric(3), K::Regular));
    out.push_back(dynamical("natural_s3", 3, 2, symmetric(3), K::Natural));
    out.push_back(dynamical("natural_s3_f3", 3, 3, symmetric(3), K::Natural));
    out.push_back(dynamical("natural_s4", 4, 2, symmetric(4), K::Natural));
    out.push_back(dynamical("natural_a4", 4, 2, permutations(4, {"(1,2,3)", "(2,3,4)"}), K::Natural));
    out.push_back(dynamical("natural_d4", 4, 2, permutations(4, {"(1,2,3,4)", "(1,3)"}), K::Natural));
    out.push_back(dynamical("rotation_z3_f3", 3, 3, cyclic({3}), K::Images, {{"1", {1, 2, 0}}}));
    out.push_back(dynamical("rotation_z3_f4", 3, 4, cyclic({3}), K::Images, {{"1", {1, 2, 0}}}));
    out.push_back(dynamical("trivial_z2_on_2", 2, 2, cyclic({2}), K::Trivial));
    out.push_back(dynamical("trivial_z3_on_1", 1, 2, cyclic({3}), K::Trivial));
    out.push_back(dynamical("trivial_group_on_1", 1, 2, cyclic({1}), K::Trivial));
    out.push_back(dynamical("two_swaps_z2", 4, 2, cyclic({2}), K::Images, {{"1", {1, 0, 3, 2}}}));
    out.push_back(dynamical("swap_and_fixed_z2", 3, 2, cyclic({2}), K::Images, {{"1", {1, 0, 2}}}));
    out.push_back(dynamical("rotation_and_fixed_z3", 4, 2, cyclic({3}), K::Images, {{"1", {1, 2, 0, 3}}}));
    out.push_back(dynamical("z4_on_2_points", 2, 2, cyclic({4}), K::Images, {{"1", {1, 0}}}));
    out.push_back(dynamical("z6_as_2_plus_3", 5, 2, cyclic({6}), K::Images, {{"1", {1, 0, 3, 4, 2}}}));
    out.push_back(dynamical("z2xz2_two_swaps", 4, 2, cyclic({2, 2}), K::Images,
                            {{"(1,0)", {1, 0, 2, 3}}, {"(0,1)", {0, 1, 3, 2}}}));
    out.push_back(dynamical("z2xz2_on_2_points", 2, 2, cyclic({2, 2}), K::Images,
                            {{"(1,0)", {1, 0}}, {"(0,1)", {1, 0}}}));
    out.push_back(dynamical("s3_sign_on_2", 2, 2, symmetric(3), K::Images, {{"(1,2)", {1, 0}}, {"(1,2,3)", {0, 1}}}));
    out.push_back(dynamical("s3_natural_plus_fixed", 4, 2, permutations(4, {"(1,2)", "(1,2,3)"}), K::Natural));
    out.push_back(dynamical("s3_on_6_cosets_pairs", 6, 2, permutations(6, {"(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)"}),
                            K::Natural));
    return out;
}

// ---- randomized instances -----------------------------------------------------------------

/// Uniform draw from [0, n) by rejection, independent of the standard library's distributions.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % n;
}

namespace detail {

// Every subgroup generated by at most two elements, smallest first.
inline std::vector<std::vector<GroupIndex>> two_generated_subgroups(const Group& G) {
    std::set<std::vector<GroupIndex>> found;
    for (GroupIndex a = 0; a < G.order(); ++a)
        for (GroupIndex b = a; b < G.order(); ++b) {
            std::set<GroupIndex> members{0, a, b};
            bool grew = true;
            while (grew) {
                grew = false;
                std::vector<GroupIndex> cur(members.begin(), members.end());
                for (GroupIndex x : cur)
                    for (GroupIndex y : cur) grew |= members.insert(G.mul(x, y)).second;
            }
            found.emplace(members.begin(), members.end());
        }
    std::vector<std::vector<GroupIndex>> out(found.begin(), found.end());
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return out;
}

// Left cosets xH, each as its sorted member list, in order of smallest member.
inline std::vector<std::vector<GroupIndex>> left_cosets(const Group& G, const std::vector<GroupIndex>& H) {
    std::set<std::vector<GroupIndex>> cosets;
    for (GroupIndex x = 0; x < G.order(); ++x) {
        std::vector<GroupIndex> c;
        for (GroupIndex h : H) c.push_back(G.mul(x, h));
        std::sort(c.begin(), c.end());
        cosets.insert(c);
    }
    return {cosets.begin(), cosets.end()};
}

}  // namespace detail

/**
 * @brief Seeded stream of random algebraic instances over a fixed group catalogue
 *        (Z/2, Z/3, Z/4, Z/2 x Z/2, Z/6, S_3).
 *
 * Each draw picks a ring family, a group and an action constructor; instances whose skew
 * group ring exceeds `cap`, or whose drawn action fails the homomorphism law, are rejected
 * and redrawn. The stream depends only on the seed.
 */
class InstanceGenerator {
   public:
    InstanceGenerator(std::uint64_t seed, std::uint64_t cap = std::uint64_t{1} << 16) : rng_(seed), cap_(cap) {}

    InstanceSpec next() {
        for (;;) {
            ++serial_;
            if (auto s = attempt()) {
                s->name = "random_" + std::to_string(serial_);
                return *s;
            }
        }
    }

   private:
    static std::vector<GroupDescriptor> groups() {
        using namespace catalogue;
        return {cyclic({2}), cyclic({3}), cyclic({4}), cyclic({2, 2}), cyclic({6}), symmetric(3)};
    }

    std::uint64_t pick(std::uint64_t n) { return draw(rng_, n); }

    std::optional<InstanceSpec> attempt() {
        auto gd = groups()[pick(6)];
        auto G = build_group(gd, Caps{});
        RingDescriptor rd;
        switch (pick(6)) {
            case 0: rd = catalogue::modular(2 + pick(11)); break;
            case 1:
            case 2: {
                static constexpr std::uint32_t primes[] = {2, 3, 5};
                const std::uint32_t size = 1 + static_cast<std::uint32_t>(pick(2));
                rd = catalogue::matrices(size, primes[pick(size == 1 ? 3 : 2)]);
                break;
            }
            default: {
                static constexpr std::uint32_t fields[] = {2, 2, 3, 4};
                const auto points = pick(2) == 0 ? G->order() : 1 + static_cast<std::uint32_t>(pick(4));
                rd = catalogue::functions(points, fields[pick(4)]);
                break;
            }
        }
        auto A = build_ring(rd);
        if (!fits(A->size(), G->order())) return std::nullopt;

        ActionDescriptor ad;
        if (A->kind() == RingKind::MatrixRing && A->matrix_size() > 1 && pick(4) != 0) {
            auto unit_list = units(*A);
            for (GroupIndex g : G->generators())
                ad.images.emplace_back(G->label(g), catalogue::conjugate(A->payload(unit_list[pick(unit_list.size())])));
            ad.kind = ActionDescriptor::Kind::Generators;
        } else if (A->kind() == RingKind::FunctionRing && pick(5) != 0) {
            ad = random_permutation_action(*G, *A);
        }
        InstanceSpec spec = catalogue::algebraic("", rd, gd, ad);
        try {
            build_action(std::get<AlgebraicSpec>(spec.body));
        } catch (const InputError&) {
            return std::nullopt;
        }
        return spec;
    }

    bool fits(std::uint64_t ring_size, std::uint32_t group_order) const {
        std::uint64_t n = 1;
        for (std::uint32_t i = 0; i < group_order; ++i) {
            if (n > cap_ / ring_size) return false;
            n *= ring_size;
        }
        return n <= cap_;
    }

    // X is a disjoint union of coset spaces G/H; on F_4^X a Frobenius twist may be added.
    ActionDescriptor random_permutation_action(const Group& G, const Ring& A) {
        const std::uint32_t n = A.points();
        auto subgroups = detail::two_generated_subgroups(G);
        std::vector<std::vector<std::vector<GroupIndex>>> blocks;
        std::uint32_t used = 0;
        for (int tries = 0; used < n && tries < 64; ++tries) {
            // favour the regular orbit first so transitive, faithful actions are common
            const auto& H = tries == 0 && pick(2) == 0 ? subgroups.front() : subgroups[pick(subgroups.size())];
            auto cosets = detail::left_cosets(G, H);
            if (used + cosets.size() > n) continue;
            used += static_cast<std::uint32_t>(cosets.size());
            blocks.push_back(std::move(cosets));
        }
        while (used < n) {  // pad with fixed points
            blocks.push_back({std::vector<GroupIndex>(G.order())});
            std::iota(blocks.back()[0].begin(), blocks.back()[0].end(), GroupIndex{0});
            ++used;
        }
        // shuffle the points so blocks are interleaved
        std::vector<std::uint32_t> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0u);
        for (std::uint32_t i = n; i > 1; --i) std::swap(relabel[i - 1], relabel[pick(i)]);

        const bool frobenius = A.modulus() == 4 && pick(2) == 0;
        ActionDescriptor ad;
        ad.kind = ActionDescriptor::Kind::Generators;
        for (GroupIndex g : G.generators()) {
            std::vector<std::uint32_t> image(n);
            std::uint32_t base = 0;
            for (const auto& cosets : blocks) {
                for (std::size_t c = 0; c < cosets.size(); ++c) {
                    std::vector<GroupIndex> moved;
                    for (GroupIndex x : cosets[c]) moved.push_back(G.mul(g, x));
                    std::sort(moved.begin(), moved.end());
                    auto target = std::find(cosets.begin(), cosets.end(), moved) - cosets.begin();
                    image[relabel[base + c]] = relabel[base + static_cast<std::uint32_t>(target)];
                }
                base += static_cast<std::uint32_t>(cosets.size());
            }
            AutomorphismDescriptor d = catalogue::permute(image);
            if (frobenius && pick(2) == 0) d.power = 2;
            ad.images.emplace_back(G.label(g), std::move(d));
        }
        return ad;
    }

    std::mt19937_64 rng_;
    std::uint64_t cap_;
    std::uint64_t serial_ = 0;
};

}  // namespace skewring

#endif  // SKEWRING_CATALOGUE_HPP
