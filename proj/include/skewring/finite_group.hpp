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

#ifndef SKEWRING_FINITE_GROUP_HPP
#define SKEWRING_FINITE_GROUP_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace skewring {

/// Canonical group element index; 0 is always the identity.
using GroupIndex = std::uint32_t;

enum class Presentation { CyclicProduct, Permutation, ExplicitTable };

/// A permutation of {0, ..., n-1} as its image list.
using Permutation = std::vector<std::uint32_t>;

namespace perm {

inline Permutation identity(std::uint32_t degree) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

/// (a*b)(x) = a(b(x)): apply b first.
inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
    return out;
}

inline Permutation inverse(const Permutation& a) {
    Permutation out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
    return out;
}

inline bool is_bijection(std::span<const std::uint32_t> p) {
    std::vector<bool> seen(p.size(), false);
    for (auto x : p) {
        if (x >= p.size() || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

/// Cycle notation on points 1..n, e.g. "(1,3,2)"; the identity is "()".
inline std::string to_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (std::uint32_t start = 0; start < p.size(); ++start) {
        if (done[start] || p[start] == start) continue;
        out += '(';
        std::uint32_t x = start;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            if (!first) out += ',';
            out += std::to_string(x + 1);
            first = false;
            x = p[x];
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

/// Parses cycle notation on points 1..degree; products of cycles compose right to left.
inline Permutation from_cycles(std::string_view text, std::uint32_t degree) {
    Permutation result = identity(degree);
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw DomainError("bad cycle notation '" + std::string(text) + "': " + why);
    };
    std::vector<Permutation> cycles;
    while (i < text.size()) {
        if (text[i] == ' ') {
            ++i;
            continue;
        }
        if (text[i] != '(') fail("expected '('");
        ++i;
        std::vector<std::uint32_t> pts;
        while (i < text.size() && text[i] != ')') {
            if (text[i] == ',' || text[i] == ' ') {
                ++i;
                continue;
            }
            if (text[i] < '0' || text[i] > '9') fail("expected a point number");
            std::uint32_t v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + static_cast<std::uint32_t>(text[i++] - '0');
            if (v < 1 || v > degree) fail("point " + std::to_string(v) + " outside 1.." + std::to_string(degree));
            pts.push_back(v - 1);
        }
        if (i >= text.size()) fail("unterminated cycle");
        ++i;
        std::vector<bool> seen(degree, false);
        for (auto pnt : pts) {
            if (seen[pnt]) fail("repeated point in cycle");
            seen[pnt] = true;
        }
        if (pts.size() <= 1) continue;
        Permutation c = identity(degree);
        for (std::size_t k = 0; k < pts.size(); ++k) c[pts[k]] = pts[(k + 1) % pts.size()];
        cycles.push_back(std::move(c));
    }
    for (const auto& c : cycles) result = compose(result, c);
    return result;
}

}  // namespace perm

/**
 * @brief A finite group with total multiplication and inverse tables.
 *
 * Element order: lexicographic on component tuples for cyclic products, lexicographic on
 * image lists for permutation groups, input order (identity moved first) for explicit
 * tables. Identity is index 0 in every case.
 */
class Group {
    struct Token {};

   public:
    static std::shared_ptr<const Group> cyclic_product(std::vector<std::uint32_t> orders, const Caps& caps = {}) {
        if (orders.empty()) orders.push_back(1);
        std::uint64_t n = 1;
        for (auto o : orders) {
            if (o < 1) throw DomainError("cyclic factor order must be >= 1");
            n *= o;
            require_within_cap("group order", n, caps.group_order);
        }
        auto tuple = [&](std::uint32_t idx) {
            std::vector<std::uint32_t> t(orders.size());
            for (std::size_t i = orders.size(); i-- > 0;) {
                t[i] = idx % orders[i];
                idx /= orders[i];
            }
            return t;
        };
        auto index = [&](const std::vector<std::uint32_t>& t) {
            std::uint32_t idx = 0;
            for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + t[i];
            return idx;
        };
        const auto order = static_cast<std::uint32_t>(n);
        std::vector<GroupIndex> table(order * order);
        std::vector<std::string> labels(order);
        for (std::uint32_t a = 0; a < order; ++a) {
            auto ta = tuple(a);
            if (orders.size() == 1) {
                labels[a] = std::to_string(ta[0]);
            } else {
                std::string l = "(";
                for (std::size_t i = 0; i < ta.size(); ++i) l += (i ? "," : "") + std::to_string(ta[i]);
                labels[a] = l + ")";
            }
            for (std::uint32_t b = 0; b < order; ++b) {
                auto tb = tuple(b);
                for (std::size_t i = 0; i < ta.size(); ++i) tb[i] = (ta[i] + tb[i]) % orders[i];
                table[a * order + b] = index(tb);
            }
        }
        auto g = std::make_shared<Group>(Token{}, order, std::move(table), std::move(labels),
                                         Presentation::CyclicProduct);
        g->cyclic_orders_ = std::move(orders);
        return g;
    }

    /// Closure of the given permutations (images of 0..degree-1) under composition.
    static std::shared_ptr<const Group> permutations(std::uint32_t degree, const std::vector<Permutation>& generators,
                                                     const Caps& caps = {}) {
        for (const auto& g : generators)
            if (g.size() != degree || !perm::is_bijection(g))
                throw DomainError("permutation generator is not a bijection of {1.." + std::to_string(degree) + "}");
        std::map<Permutation, bool> seen;
        std::deque<Permutation> work{perm::identity(degree)};
        seen[work.front()] = true;
        while (!work.empty()) {
            Permutation x = work.front();
            work.pop_front();
            for (const auto& s : generators) {
                Permutation y = perm::compose(s, x);
                if (seen.emplace(y, true).second) {
                    require_within_cap("permutation group order", seen.size(), caps.group_order);
                    work.push_back(std::move(y));
                }
            }
        }
        std::vector<Permutation> elems;
        for (auto& [p, _] : seen) elems.push_back(p);  // map order is lexicographic; identity first
        const auto order = static_cast<std::uint32_t>(elems.size());
        std::map<Permutation, GroupIndex> index;
        for (GroupIndex i = 0; i < order; ++i) index[elems[i]] = i;
        std::vector<GroupIndex> table(order * order);
        std::vector<std::string> labels(order);
        for (GroupIndex a = 0; a < order; ++a) {
            labels[a] = perm::to_cycles(elems[a]);
            for (GroupIndex b = 0; b < order; ++b) table[a * order + b] = index.at(perm::compose(elems[a], elems[b]));
        }
        auto g = std::make_shared<Group>(Token{}, order, std::move(table), std::move(labels),
                                         Presentation::Permutation);
        g->degree_ = degree;
        g->perms_ = std::move(elems);
        return g;
    }

    /// Symmetric group on `degree` points.
    static std::shared_ptr<const Group> symmetric(std::uint32_t degree, const Caps& caps = {}) {
        std::vector<Permutation> gens;
        if (degree >= 2) {
            Permutation t = perm::identity(degree), c(degree);
            std::swap(t[0], t[1]);
            for (std::uint32_t i = 0; i < degree; ++i) c[i] = (i + 1) % degree;
            gens = {t, c};
        }
        return permutations(std::max<std::uint32_t>(degree, 1), gens, caps);
    }

    /// Arbitrary labelled Cayley table; every group axiom is verified.
    static std::shared_ptr<const Group> from_table(std::vector<std::string> labels,
                                                   const std::vector<std::vector<std::uint32_t>>& rows,
                                                   const Caps& caps = {}) {
        const std::size_t n = labels.size();
        if (n == 0) throw DomainError("group table is empty");
        require_within_cap("group order", n, caps.group_order);
        if (rows.size() != n) throw DomainError("group table must have one row per label");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (labels[i] == labels[j]) throw DomainError("duplicate group label '" + labels[i] + "'");
        for (const auto& row : rows) {
            if (row.size() != n) throw DomainError("group table row has wrong length");
            for (auto v : row)
                if (v >= n) throw DomainError("group table entry out of range");
        }
        std::optional<std::size_t> e;
        for (std::size_t i = 0; i < n && !e; ++i) {
            bool ok = true;
            for (std::size_t j = 0; j < n && ok; ++j) ok = rows[i][j] == j && rows[j][i] == j;
            if (ok) e = i;
        }
        if (!e) throw DomainError("group table has no identity element");
        // identity moves to index 0, everything else keeps its relative order
        std::vector<std::uint32_t> to_new(n), to_old;
        to_old.push_back(static_cast<std::uint32_t>(*e));
        for (std::size_t i = 0; i < n; ++i)
            if (i != *e) to_old.push_back(static_cast<std::uint32_t>(i));
        for (std::size_t i = 0; i < n; ++i) to_new[to_old[i]] = static_cast<std::uint32_t>(i);
        std::vector<GroupIndex> table(n * n);
        std::vector<std::string> new_labels(n);
        for (std::size_t a = 0; a < n; ++a) {
            new_labels[a] = labels[to_old[a]];
            for (std::size_t b = 0; b < n; ++b) table[a * n + b] = to_new[rows[to_old[a]][to_old[b]]];
        }
        auto g = std::make_shared<Group>(Token{}, static_cast<std::uint32_t>(n), std::move(table),
                                         std::move(new_labels), Presentation::ExplicitTable);
        if (auto bad = g->axiom_violation()) throw DomainError("group table violates the group axioms: " + *bad);
        return g;
    }

    Group(Token, std::uint32_t order, std::vector<GroupIndex> table, std::vector<std::string> labels,
          Presentation presentation)
        : order_(order), table_(std::move(table)), labels_(std::move(labels)), presentation_(presentation) {
        inverse_.assign(order_, 0);
        for (GroupIndex a = 0; a < order_; ++a)
            for (GroupIndex b = 0; b < order_; ++b)
                if (table_[a * order_ + b] == 0) inverse_[a] = b;
        for (GroupIndex a = 0; a < order_; ++a) label_index_[labels_[a]] = a;
        compute_generators();
    }

    std::uint32_t order() const noexcept { return order_; }
    GroupIndex identity() const noexcept { return 0; }
    Presentation presentation() const noexcept { return presentation_; }

    GroupIndex mul(GroupIndex g, GroupIndex h) const {
        check(g);
        check(h);
        return table_[g * order_ + h];
    }
    GroupIndex inverse(GroupIndex g) const {
        check(g);
        return inverse_[g];
    }
    /// h g h^-1
    GroupIndex conjugate(GroupIndex h, GroupIndex g) const { return mul(mul(h, g), inverse(h)); }

    const std::string& label(GroupIndex g) const {
        check(g);
        return labels_[g];
    }
    std::optional<GroupIndex> find(std::string_view label) const {
        auto it = label_index_.find(std::string(label));
        if (it == label_index_.end()) return std::nullopt;
        return it->second;
    }
    GroupIndex at(std::string_view label) const {
        auto g = find(label);
        if (!g) throw DomainError("unknown group element label '" + std::string(label) + "'");
        return *g;
    }

    /// A generating set chosen greedily in index order.
    const std::vector<GroupIndex>& generators() const noexcept { return generators_; }
    const std::vector<std::uint32_t>& cyclic_orders() const noexcept { return cyclic_orders_; }
    std::uint32_t degree() const noexcept { return degree_; }
    /// Image list of a permutation-group element.
    const Permutation& permutation(GroupIndex g) const {
        check(g);
        if (presentation_ != Presentation::Permutation) throw DomainError("group is not a permutation group");
        return perms_[g];
    }

    void check(GroupIndex g) const {
        if (g >= order_) throw DomainError("group index " + std::to_string(g) + " out of range");
    }

    /// First violated axiom, or nothing. Associativity is exhaustive up to order 64 and sampled above.
    std::optional<std::string> axiom_violation() const {
        const std::uint32_t n = order_;
        for (GroupIndex a = 0; a < n; ++a) {
            if (table_[a] != a || table_[a * n] != a) return "0 is not an identity at " + labels_[a];
            std::vector<bool> row(n, false), col(n, false);
            for (GroupIndex b = 0; b < n; ++b) {
                row[table_[a * n + b]] = true;
                col[table_[b * n + a]] = true;
            }
            if (std::find(row.begin(), row.end(), false) != row.end() ||
                std::find(col.begin(), col.end(), false) != col.end())
                return "element " + labels_[a] + " has no inverse (row or column not a permutation)";
            if (table_[a * n + inverse_[a]] != 0) return "inverse table wrong at " + labels_[a];
        }
        auto assoc = [&](GroupIndex a, GroupIndex b, GroupIndex c) {
            return table_[table_[a * n + b] * n + c] == table_[a * n + table_[b * n + c]];
        };
        if (n <= 64) {
            for (GroupIndex a = 0; a < n; ++a)
                for (GroupIndex b = 0; b < n; ++b)
                    for (GroupIndex c = 0; c < n; ++c)
                        if (!assoc(a, b, c))
                            return "not associative at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")";
        } else {
            std::mt19937_64 rng(0x5eed);
            for (int i = 0; i < 100000; ++i) {
                GroupIndex a = rng() % n, b = rng() % n, c = rng() % n;
                if (!assoc(a, b, c))
                    return "not associative at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")";
            }
        }
        return std::nullopt;
    }

   private:
    void compute_generators() {
        std::vector<bool> in(order_, false);
        in[0] = true;
        std::vector<GroupIndex> members{0};
        for (GroupIndex g = 1; g < order_; ++g) {
            if (in[g]) continue;
            generators_.push_back(g);
            // re-close under right multiplication by all generators so far
            std::deque<GroupIndex> work(members.begin(), members.end());
            while (!work.empty()) {
                GroupIndex x = work.front();
                work.pop_front();
                for (GroupIndex s : generators_) {
                    GroupIndex y = table_[x * order_ + s];
                    if (!in[y]) {
                        in[y] = true;
                        members.push_back(y);
                        work.push_back(y);
                    }
                }
            }
        }
    }

    std::uint32_t order_;
    std::vector<GroupIndex> table_;
    std::vector<GroupIndex> inverse_;
    std::vector<std::string> labels_;
    std::map<std::string, GroupIndex> label_index_;
    Presentation presentation_;
    std::vector<GroupIndex> generators_;
    std::vector<std::uint32_t> cyclic_orders_;
    std::uint32_t degree_ = 0;
    std::vector<Permutation> perms_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A subgroup as a sorted member list.
struct Subgroup {
    GroupPtr parent;
    std::vector<GroupIndex> members;

    bool contains(GroupIndex g) const { return std::binary_search(members.begin(), members.end(), g); }
    std::size_t size() const noexcept { return members.size(); }
    bool is_trivial() const noexcept { return members.size() == 1; }
    bool is_whole() const noexcept { return members.size() == parent->order(); }

    bool is_normal() const {
        for (GroupIndex h = 0; h < parent->order(); ++h)
            for (GroupIndex g : members)
                if (!contains(parent->conjugate(h, g))) return false;
        return true;
    }

    /// Contains e, closed under product and inverse.
    bool is_valid() const {
        if (!contains(parent->identity())) return false;
        for (GroupIndex a : members) {
            if (!contains(parent->inverse(a))) return false;
            for (GroupIndex b : members)
                if (!contains(parent->mul(a, b))) return false;
        }
        return true;
    }
};

/// Subgroup consisting of exactly the elements satisfying `pred` (caller guarantees closure).
template <class Pred>
Subgroup subgroup_where(const GroupPtr& group, Pred&& pred) {
    Subgroup s{group, {}};
    for (GroupIndex g = 0; g < group->order(); ++g)
        if (pred(g)) s.members.push_back(g);
    return s;
}

inline std::optional<std::pair<GroupIndex, GroupIndex>> noncommuting_pair(const Group& group) {
    for (GroupIndex g = 0; g < group.order(); ++g)
        for (GroupIndex h = g + 1; h < group.order(); ++h)
            if (group.mul(g, h) != group.mul(h, g)) return std::make_pair(g, h);
    return std::nullopt;
}

inline bool is_abelian(const Group& group) { return !noncommuting_pair(group); }

/// {h g h^-1 : h in G}, sorted.
inline std::vector<GroupIndex> conjugacy_class(const Group& group, GroupIndex g) {
    std::vector<GroupIndex> out;
    for (GroupIndex h = 0; h < group.order(); ++h) out.push_back(group.conjugate(h, g));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All classes, ordered by their smallest member.
inline std::vector<std::vector<GroupIndex>> conjugacy_classes(const Group& group) {
    std::vector<std::vector<GroupIndex>> out;
    std::vector<bool> seen(group.order(), false);
    for (GroupIndex g = 0; g < group.order(); ++g) {
        if (seen[g]) continue;
        auto cls = conjugacy_class(group, g);
        for (auto x : cls) seen[x] = true;
        out.push_back(std::move(cls));
    }
    return out;
}

inline std::vector<std::size_t> class_size_report(const Group& group) {
    std::vector<std::size_t> sizes;
    for (const auto& cls : conjugacy_classes(group)) sizes.push_back(cls.size());
    return sizes;
}

inline Subgroup centralizer(const GroupPtr& group, GroupIndex g) {
    return subgroup_where(group, [&](GroupIndex h) { return group->mul(g, h) == group->mul(h, g); });
}

/**
 * @brief Extends values given on some group elements to the subgroup they generate via
 *        value(s * x) = compose(value(s), value(x)).
 *
 * Elements that were given explicitly keep their given value; consistency is for the
 * caller to validate. Unreached elements stay empty.
 */
template <class T, class Compose>
std::vector<std::optional<T>> extend_by_products(const Group& group, const std::map<GroupIndex, T>& given,
                                                 const T& identity_value, Compose&& compose) {
    std::vector<std::optional<T>> value(group.order());
    for (const auto& [g, v] : given) value[g] = v;
    if (!value[0]) value[0] = identity_value;
    std::deque<GroupIndex> work;
    for (GroupIndex g = 0; g < group.order(); ++g)
        if (value[g]) work.push_back(g);
    while (!work.empty()) {
        GroupIndex x = work.front();
        work.pop_front();
        for (const auto& [s, vs] : given) {
            GroupIndex y = group.mul(s, x);
            if (!value[y]) {
                value[y] = compose(vs, *value[x]);
                work.push_back(y);
            }
        }
    }
    return value;
}

/**
 * @brief A left action of a finite group on the point set {0, ..., points-1}, as a table
 *        g -> image list. Validated on construction: bijective rows, trivial identity row,
 *        and (gh).x = g.(h.x).
 */
class SetAction {
   public:
    SetAction(GroupPtr group, std::uint32_t points, std::vector<Permutation> table)
        : group_(std::move(group)), points_(points), table_(std::move(table)) {
        if (table_.size() != group_->order()) throw DomainError("action table needs one row per group element");
        for (GroupIndex g = 0; g < group_->order(); ++g)
            if (table_[g].size() != points_ || !perm::is_bijection(table_[g]))
                throw DomainError("action row of " + group_->label(g) + " is not a bijection of the point set");
        if (table_[0] != perm::identity(points_)) throw DomainError("identity does not act trivially");
        for (GroupIndex g = 0; g < group_->order(); ++g)
            for (GroupIndex h = 0; h < group_->order(); ++h)
                for (std::uint32_t x = 0; x < points_; ++x)
                    if (table_[group_->mul(g, h)][x] != table_[g][table_[h][x]])
                        throw DomainError("action violates (gh).x = g.(h.x) at g=" + group_->label(g) +
                                          ", h=" + group_->label(h) + ", x=" + std::to_string(x));
    }

    static SetAction trivial(GroupPtr group, std::uint32_t points) {
        std::vector<Permutation> t(group->order(), perm::identity(points));
        return {std::move(group), points, std::move(t)};
    }

    /// g.x = g x on the group's own elements.
    static SetAction regular(GroupPtr group) {
        const std::uint32_t n = group->order();
        std::vector<Permutation> t(n, Permutation(n));
        for (GroupIndex g = 0; g < n; ++g)
            for (GroupIndex x = 0; x < n; ++x) t[g][x] = group->mul(g, x);
        return {std::move(group), n, std::move(t)};
    }

    /// A permutation group acting on its own points.
    static SetAction natural(GroupPtr group) {
        std::vector<Permutation> t;
        for (GroupIndex g = 0; g < group->order(); ++g) t.push_back(group->permutation(g));
        const std::uint32_t d = group->degree();
        return {std::move(group), d, std::move(t)};
    }

    /// Extends generator images to a full table, then validates it.
    static SetAction from_images(GroupPtr group, std::uint32_t points, const std::map<GroupIndex, Permutation>& images) {
        for (const auto& [g, p] : images)
            if (p.size() != points || !perm::is_bijection(p))
                throw DomainError("action row of " + group->label(g) + " is not a bijection of the point set");
        auto full = extend_by_products(*group, images, perm::identity(points), perm::compose);
        std::vector<Permutation> table;
        for (GroupIndex g = 0; g < group->order(); ++g) {
            if (!full[g]) throw DomainError("action images do not generate the group; " + group->label(g) + " unreached");
            table.push_back(*full[g]);
        }
        return {std::move(group), points, std::move(table)};
    }

    const GroupPtr& group() const noexcept { return group_; }
    std::uint32_t points() const noexcept { return points_; }
    std::uint32_t apply(GroupIndex g, std::uint32_t x) const { return table_.at(g).at(x); }
    const Permutation& row(GroupIndex g) const { return table_.at(g); }

   private:
    GroupPtr group_;
    std::uint32_t points_;
    std::vector<Permutation> table_;
};

inline Subgroup stabilizer(const SetAction& action, std::uint32_t x) {
    if (x >= action.points()) throw DomainError("point " + std::to_string(x) + " out of range");
    return subgroup_where(action.group(), [&](GroupIndex g) { return action.apply(g, x) == x; });
}

/// Orbits ordered by smallest point, each sorted.
inline std::vector<std::vector<std::uint32_t>> orbits(const SetAction& action) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(action.points(), false);
    for (std::uint32_t x = 0; x < action.points(); ++x) {
        if (seen[x]) continue;
        std::vector<std::uint32_t> orbit;
        for (GroupIndex g = 0; g < action.group()->order(); ++g) {
            auto y = action.apply(g, x);
            if (!seen[y]) {
                seen[y] = true;
                orbit.push_back(y);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

}  // namespace skewring

#endif  // SKEWRING_FINITE_GROUP_HPP
