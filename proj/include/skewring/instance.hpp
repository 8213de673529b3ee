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

#ifndef SKEWRING_INSTANCE_HPP
#define SKEWRING_INSTANCE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "finite_group.hpp"
#include "finite_ring.hpp"
#include "group_action.hpp"
#include "skew_group_ring.hpp"

namespace skewring {

using Json = nlohmann::ordered_json;
using Payload = std::vector<std::uint64_t>;

struct RingDescriptor {
    RingKind kind = RingKind::ModularIntegers;
    std::uint64_t n = 2;       // Z/n
    std::uint32_t size = 1;    // M_size(F_p)
    std::uint32_t p = 2;
    std::uint32_t points = 1;  // F_q^points
    std::uint32_t q = 2;

    friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

struct GroupDescriptor {
    enum class Kind { Cyclic, Permutations, Symmetric, Table };
    Kind kind = Kind::Cyclic;
    std::vector<std::uint32_t> orders;      // Cyclic
    std::uint32_t degree = 1;               // Permutations, Symmetric
    std::vector<std::string> generators;    // Permutations, cycle notation
    std::vector<std::string> labels;        // Table
    std::vector<std::vector<std::uint32_t>> rows;

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Image of one group element: conjugation by a unit, a permutation of X, a power map, or
/// (function rings) a permutation followed by a power map.
struct AutomorphismDescriptor {
    std::optional<Payload> conjugate;
    std::optional<std::vector<std::uint32_t>> permute;
    std::optional<std::uint64_t> power;
    std::optional<std::vector<Payload>> table;

    friend bool operator==(const AutomorphismDescriptor&, const AutomorphismDescriptor&) = default;
};

struct ActionDescriptor {
    enum class Kind { Trivial, Generators, Table };
    Kind kind = Kind::Trivial;
    /// Generators: images of a generating set, extended multiplicatively. Table: every element.
    std::vector<std::pair<std::string, AutomorphismDescriptor>> images;

    friend bool operator==(const ActionDescriptor&, const ActionDescriptor&) = default;
};

struct SetActionDescriptor {
    enum class Kind { Trivial, Regular, Natural, Images, Table };
    Kind kind = Kind::Trivial;
    std::vector<std::pair<std::string, std::vector<std::uint32_t>>> images;  // Images and Table

    friend bool operator==(const SetActionDescriptor&, const SetActionDescriptor&) = default;
};

struct AlgebraicSpec {
    RingDescriptor ring;
    GroupDescriptor group;
    ActionDescriptor action;

    friend bool operator==(const AlgebraicSpec&, const AlgebraicSpec&) = default;
};

struct DynamicalSpec {
    std::uint32_t points = 1;
    std::uint32_t q = 2;
    GroupDescriptor group;
    SetActionDescriptor action;

    friend bool operator==(const DynamicalSpec&, const DynamicalSpec&) = default;
};

/// One instance file: exactly one algebraic or dynamical description, plus caps and flags.
struct InstanceSpec {
    std::string name;
    std::variant<AlgebraicSpec, DynamicalSpec> body;
    std::optional<Caps> caps;
    bool witness_search = false;
    std::uint64_t seed = 0;
    std::vector<std::string> checks;  // empty: every applicable check

    bool dynamical() const noexcept { return std::holds_alternative<DynamicalSpec>(body); }
    friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

// ---- parsing ------------------------------------------------------------------------------

namespace detail {

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] inline void bad(const std::string& path, const std::string& why) {
    throw InputError(path + ": " + why);
}

inline const Json& field(const Json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) bad(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(path, std::string("missing field '") + key + "'");
    return *it;
}

inline std::uint64_t as_uint(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) bad(path, "expected a non-negative integer");
    return j.get<std::uint64_t>();
}

inline std::uint32_t as_u32(const Json& j, const std::string& path) {
    auto v = as_uint(j, path);
    if (v > 0xffffffffu) bad(path, "integer too large");
    return static_cast<std::uint32_t>(v);
}

inline std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) bad(path, "expected a string");
    return j.get<std::string>();
}

template <class T, class F>
std::vector<T> as_array(const Json& j, const std::string& path, F&& each) {
    if (!j.is_array()) bad(path, "expected an array");
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(each(j[i], path + "/" + std::to_string(i)));
    return out;
}

inline Payload as_payload(const Json& j, const std::string& path) {
    return as_array<std::uint64_t>(j, path, as_uint);
}

inline std::vector<std::uint32_t> as_u32_list(const Json& j, const std::string& path) {
    return as_array<std::uint32_t>(j, path, as_u32);
}

inline void only_keys(const Json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto k : keys) known |= it.key() == k;
        if (!known) bad(path, "unknown field '" + it.key() + "'");
    }
}

inline RingDescriptor parse_ring(const Json& j, const std::string& path) {
    RingDescriptor r;
    auto kind = as_string(field(j, path, "kind"), path + "/kind");
    if (kind == "modular") {
        only_keys(j, path, {"kind", "n"});
        r.kind = RingKind::ModularIntegers;
        r.n = as_uint(field(j, path, "n"), path + "/n");
    } else if (kind == "matrices") {
        only_keys(j, path, {"kind", "size", "p"});
        r.kind = RingKind::MatrixRing;
        r.size = as_u32(field(j, path, "size"), path + "/size");
        r.p = as_u32(field(j, path, "p"), path + "/p");
    } else if (kind == "functions") {
        only_keys(j, path, {"kind", "points", "q"});
        r.kind = RingKind::FunctionRing;
        r.points = as_u32(field(j, path, "points"), path + "/points");
        r.q = as_u32(field(j, path, "q"), path + "/q");
    } else {
        bad(path + "/kind", "unknown ring kind '" + kind + "' (expected modular, matrices or functions)");
    }
    return r;
}

inline GroupDescriptor parse_group(const Json& j, const std::string& path) {
    GroupDescriptor g;
    auto kind = as_string(field(j, path, "kind"), path + "/kind");
    if (kind == "cyclic") {
        only_keys(j, path, {"kind", "orders"});
        g.kind = GroupDescriptor::Kind::Cyclic;
        g.orders = as_u32_list(field(j, path, "orders"), path + "/orders");
    } else if (kind == "permutations") {
        only_keys(j, path, {"kind", "degree", "generators"});
        g.kind = GroupDescriptor::Kind::Permutations;
        g.degree = as_u32(field(j, path, "degree"), path + "/degree");
        g.generators = as_array<std::string>(field(j, path, "generators"), path + "/generators", as_string);
    } else if (kind == "symmetric") {
        only_keys(j, path, {"kind", "degree"});
        g.kind = GroupDescriptor::Kind::Symmetric;
        g.degree = as_u32(field(j, path, "degree"), path + "/degree");
    } else if (kind == "table") {
        only_keys(j, path, {"kind", "labels", "rows"});
        g.kind = GroupDescriptor::Kind::Table;
        g.labels = as_array<std::string>(field(j, path, "labels"), path + "/labels", as_string);
        g.rows = as_array<std::vector<std::uint32_t>>(field(j, path, "rows"), path + "/rows", as_u32_list);
    } else {
        bad(path + "/kind", "unknown group kind '" + kind + "' (expected cyclic, permutations, symmetric or table)");
    }
    return g;
}

inline AutomorphismDescriptor parse_automorphism(const Json& j, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    only_keys(j, path, {"conjugate", "permute", "power", "table"});
    AutomorphismDescriptor a;
    if (j.contains("conjugate")) a.conjugate = as_payload(j["conjugate"], path + "/conjugate");
    if (j.contains("permute")) a.permute = as_u32_list(j["permute"], path + "/permute");
    if (j.contains("power")) a.power = as_uint(j["power"], path + "/power");
    if (j.contains("table")) a.table = as_array<Payload>(j["table"], path + "/table", as_payload);
    const int given = a.conjugate.has_value() + (a.permute || a.power) + a.table.has_value();
    if (given != 1) bad(path, "give exactly one of 'conjugate', 'table', or 'permute'/'power'");
    return a;
}

template <class T, class F>
std::vector<std::pair<std::string, T>> parse_labelled(const Json& j, const std::string& path, F&& each) {
    if (!j.is_object()) bad(path, "expected an object keyed by group labels");
    std::vector<std::pair<std::string, T>> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), each(it.value(), path + "/" + it.key()));
    return out;
}

inline ActionDescriptor parse_action(const Json& j, const std::string& path) {
    ActionDescriptor a;
    auto kind = as_string(field(j, path, "kind"), path + "/kind");
    if (kind == "trivial") {
        only_keys(j, path, {"kind"});
        a.kind = ActionDescriptor::Kind::Trivial;
    } else if (kind == "generators" || kind == "table") {
        only_keys(j, path, {"kind", "images"});
        a.kind = kind == "table" ? ActionDescriptor::Kind::Table : ActionDescriptor::Kind::Generators;
        a.images = parse_labelled<AutomorphismDescriptor>(field(j, path, "images"), path + "/images",
                                                          parse_automorphism);
    } else {
        bad(path + "/kind", "unknown action kind '" + kind + "' (expected trivial, generators or table)");
    }
    return a;
}

inline SetActionDescriptor parse_set_action(const Json& j, const std::string& path) {
    SetActionDescriptor a;
    auto kind = as_string(field(j, path, "kind"), path + "/kind");
    using K = SetActionDescriptor::Kind;
    if (kind == "trivial" || kind == "regular" || kind == "natural") {
        only_keys(j, path, {"kind"});
        a.kind = kind == "trivial" ? K::Trivial : kind == "regular" ? K::Regular : K::Natural;
    } else if (kind == "images" || kind == "table") {
        only_keys(j, path, {"kind", "images"});
        a.kind = kind == "images" ? K::Images : K::Table;
        a.images = parse_labelled<std::vector<std::uint32_t>>(field(j, path, "images"), path + "/images", as_u32_list);
    } else {
        bad(path + "/kind", "unknown point action kind '" + kind + "' (expected trivial, regular, natural, images or table)");
    }
    return a;
}

inline Caps parse_caps(const Json& j, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    only_keys(j, path, {"enumeration", "group_order", "witness_search"});
    Caps c;
    if (j.contains("enumeration")) c.enumeration = as_uint(j["enumeration"], path + "/enumeration");
    if (j.contains("group_order")) c.group_order = as_uint(j["group_order"], path + "/group_order");
    if (j.contains("witness_search")) c.witness_search = as_uint(j["witness_search"], path + "/witness_search");
    return c;
}

}  // namespace detail

/// Parses and structurally validates an instance document (no algebraic construction yet).
inline InstanceSpec parse_instance_json(const Json& j) {
    using namespace detail;
    if (!j.is_object()) bad("", "instance must be a JSON object");
    only_keys(j, "", {"name", "ring", "group", "action", "dynamics", "caps", "witness_search", "seed", "checks"});
    InstanceSpec spec;
    if (j.contains("name")) spec.name = as_string(j["name"], "/name");
    const bool algebraic = j.contains("ring") || j.contains("group") || j.contains("action");
    const bool dynamical = j.contains("dynamics");
    if (algebraic == dynamical)
        bad("", "give either 'ring', 'group' and 'action', or 'dynamics' (exactly one description)");
    if (algebraic) {
        AlgebraicSpec a;
        a.ring = parse_ring(field(j, "", "ring"), "/ring");
        a.group = parse_group(field(j, "", "group"), "/group");
        a.action = parse_action(field(j, "", "action"), "/action");
        spec.body = std::move(a);
    } else {
        const Json& d = j["dynamics"];
        if (!d.is_object()) bad("/dynamics", "expected an object");
        only_keys(d, "/dynamics", {"points", "q", "group", "action"});
        DynamicalSpec s;
        s.points = as_u32(field(d, "/dynamics", "points"), "/dynamics/points");
        s.q = d.contains("q") ? as_u32(d["q"], "/dynamics/q") : 2;
        s.group = parse_group(field(d, "/dynamics", "group"), "/dynamics/group");
        s.action = parse_set_action(field(d, "/dynamics", "action"), "/dynamics/action");
        spec.body = std::move(s);
    }
    if (j.contains("caps")) spec.caps = parse_caps(j["caps"], "/caps");
    if (j.contains("witness_search")) {
        if (!j["witness_search"].is_boolean()) bad("/witness_search", "expected true or false");
        spec.witness_search = j["witness_search"].get<bool>();
    }
    if (j.contains("seed")) spec.seed = as_uint(j["seed"], "/seed");
    if (j.contains("checks")) spec.checks = as_array<std::string>(j["checks"], "/checks", as_string);
    return spec;
}

/// parse_instance_json on UTF-8 text; syntax errors carry line and column.
inline InstanceSpec parse_instance(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        auto [line, column] = detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw InputError(std::string("malformed JSON: ") + e.what(), line, column);
    }
    return parse_instance_json(j);
}

// ---- serialization ------------------------------------------------------------------------

namespace detail {

inline Json ring_json(const RingDescriptor& r) {
    switch (r.kind) {
        case RingKind::ModularIntegers: return {{"kind", "modular"}, {"n", r.n}};
        case RingKind::MatrixRing: return {{"kind", "matrices"}, {"size", r.size}, {"p", r.p}};
        case RingKind::FunctionRing: return {{"kind", "functions"}, {"points", r.points}, {"q", r.q}};
    }
    return {};
}

inline Json group_json(const GroupDescriptor& g) {
    using K = GroupDescriptor::Kind;
    switch (g.kind) {
        case K::Cyclic: return {{"kind", "cyclic"}, {"orders", g.orders}};
        case K::Permutations: return {{"kind", "permutations"}, {"degree", g.degree}, {"generators", g.generators}};
        case K::Symmetric: return {{"kind", "symmetric"}, {"degree", g.degree}};
        case K::Table: return {{"kind", "table"}, {"labels", g.labels}, {"rows", g.rows}};
    }
    return {};
}

inline Json automorphism_json(const AutomorphismDescriptor& a) {
    Json j = Json::object();
    if (a.conjugate) j["conjugate"] = *a.conjugate;
    if (a.permute) j["permute"] = *a.permute;
    if (a.power) j["power"] = *a.power;
    if (a.table) j["table"] = *a.table;
    return j;
}

}  // namespace detail

inline Json to_json(const InstanceSpec& spec) {
    using namespace detail;
    Json j = Json::object();
    if (!spec.name.empty()) j["name"] = spec.name;
    if (const auto* a = std::get_if<AlgebraicSpec>(&spec.body)) {
        j["ring"] = ring_json(a->ring);
        j["group"] = group_json(a->group);
        Json act = Json::object();
        switch (a->action.kind) {
            case ActionDescriptor::Kind::Trivial: act["kind"] = "trivial"; break;
            case ActionDescriptor::Kind::Generators: act["kind"] = "generators"; break;
            case ActionDescriptor::Kind::Table: act["kind"] = "table"; break;
        }
        if (a->action.kind != ActionDescriptor::Kind::Trivial) {
            Json images = Json::object();
            for (const auto& [label, img] : a->action.images) images[label] = automorphism_json(img);
            act["images"] = std::move(images);
        }
        j["action"] = std::move(act);
    } else {
        const auto& d = std::get<DynamicalSpec>(spec.body);
        Json act = Json::object();
        using K = SetActionDescriptor::Kind;
        const char* names[] = {"trivial", "regular", "natural", "images", "table"};
        act["kind"] = names[static_cast<int>(d.action.kind)];
        if (d.action.kind == K::Images || d.action.kind == K::Table) {
            Json images = Json::object();
            for (const auto& [label, row] : d.action.images) images[label] = row;
            act["images"] = std::move(images);
        }
        j["dynamics"] = {{"points", d.points}, {"q", d.q}, {"group", group_json(d.group)}, {"action", std::move(act)}};
    }
    if (spec.caps)
        j["caps"] = {{"enumeration", spec.caps->enumeration},
                     {"group_order", spec.caps->group_order},
                     {"witness_search", spec.caps->witness_search}};
    if (spec.witness_search) j["witness_search"] = true;
    if (spec.seed) j["seed"] = spec.seed;
    if (!spec.checks.empty()) j["checks"] = spec.checks;
    return j;
}

inline std::string serialize(const InstanceSpec& spec) { return to_json(spec).dump(2); }

// ---- construction -------------------------------------------------------------------------

inline RingPtr build_ring(const RingDescriptor& r) {
    switch (r.kind) {
        case RingKind::ModularIntegers: return Ring::modular(r.n);
        case RingKind::MatrixRing: return Ring::matrices(r.size, r.p);
        case RingKind::FunctionRing: return Ring::functions(r.points, r.q);
    }
    throw InputError("unknown ring kind");
}

inline GroupPtr build_group(const GroupDescriptor& g, const Caps& caps) {
    using K = GroupDescriptor::Kind;
    switch (g.kind) {
        case K::Cyclic: return Group::cyclic_product(g.orders, caps);
        case K::Symmetric: return Group::symmetric(g.degree, caps);
        case K::Permutations: {
            std::vector<Permutation> gens;
            for (const auto& text : g.generators) gens.push_back(perm::from_cycles(text, g.degree));
            return Group::permutations(g.degree, gens, caps);
        }
        case K::Table: {
            std::map<std::string, int> seen;
            for (const auto& l : g.labels)
                if (seen[l]++) throw InputError("group table repeats label '" + l + "'");
            return Group::from_table(g.labels, g.rows, caps);
        }
    }
    throw InputError("unknown group kind");
}

namespace detail {

inline GroupIndex resolve_label(const Group& G, const std::string& label, const std::string& where) {
    auto g = G.find(label);
    if (!g) throw InputError(where + ": unknown group element label '" + label + "'");
    return *g;
}

inline RingAutomorphism build_automorphism(const RingPtr& ring, const AutomorphismDescriptor& d, const Caps& caps,
                                           const std::string& where) {
    const Ring& A = *ring;
    if (d.table) {
        if (d.table->size() != A.size())
            throw InputError(where + ": automorphism table needs " + std::to_string(A.size()) + " entries");
        std::vector<Elem> table;
        for (const auto& p : *d.table) table.push_back(A.encode(p));
        return RingAutomorphism::from_function(ring, [&table](Elem a) { return table[a]; }, caps);
    }
    if (d.conjugate) {
        Elem v = A.encode(*d.conjugate);
        if (!A.try_invert(v)) throw InputError(where + ": conjugating element is not a unit");
        return RingAutomorphism::conjugation(ring, v, caps);
    }
    RingAutomorphism out = RingAutomorphism::identity(ring, caps);
    if (d.permute) {
        if (A.kind() != RingKind::FunctionRing) throw InputError(where + ": 'permute' needs a function ring");
        if (d.permute->size() != A.points() || !perm::is_bijection(*d.permute))
            throw InputError(where + ": 'permute' is not a bijection of the point set");
        out = RingAutomorphism::permutation_induced(ring, *d.permute, caps);
    }
    if (d.power) out = RingAutomorphism::power_map(ring, *d.power, caps).after(out);
    return out;
}

}  // namespace detail

/// The validated action of an algebraic instance; homomorphism failures name (g, h, a).
inline ActionMap build_action(const AlgebraicSpec& spec, const Caps& caps = {}) {
    auto ring = build_ring(spec.ring);
    require_within_cap("coefficient ring " + ring->name(), ring->size(), caps.enumeration);
    auto group = build_group(spec.group, caps);
    std::optional<ActionMap> sigma;
    switch (spec.action.kind) {
        case ActionDescriptor::Kind::Trivial: sigma.emplace(ActionMap::trivial(group, ring, caps)); break;
        case ActionDescriptor::Kind::Generators: {
            std::map<GroupIndex, RingAutomorphism> images;
            for (const auto& [label, d] : spec.action.images) {
                auto g = detail::resolve_label(*group, label, "/action/images");
                images.emplace(g, detail::build_automorphism(ring, d, caps, "/action/images/" + label));
            }
            try {
                sigma.emplace(ActionMap::from_images(group, ring, images, caps));
            } catch (const DomainError& e) {
                throw InputError(std::string("/action: ") + e.what());
            }
            break;
        }
        case ActionDescriptor::Kind::Table: {
            std::vector<std::optional<RingAutomorphism>> slots(group->order());
            for (const auto& [label, d] : spec.action.images) {
                auto g = detail::resolve_label(*group, label, "/action/images");
                if (slots[g]) throw InputError("/action/images: element '" + label + "' given twice");
                slots[g] = detail::build_automorphism(ring, d, caps, "/action/images/" + label);
            }
            std::vector<RingAutomorphism> all;
            for (GroupIndex g = 0; g < group->order(); ++g) {
                if (!slots[g]) throw InputError("/action/images: missing element '" + group->label(g) + "'");
                all.push_back(*slots[g]);
            }
            sigma.emplace(group, ring, std::move(all));
            break;
        }
    }
    if (const auto& v = sigma->violation()) {
        const auto payload = ring->payload(v->a);
        std::string a = "[";
        for (std::size_t i = 0; i < payload.size(); ++i) a += (i ? "," : "") + std::to_string(payload[i]);
        a += "]";
        switch (v->kind) {
            case ActionViolation::Kind::HomomorphismLaw:
                throw InputError("/action: homomorphism law fails at (g, h, a) = (" + group->label(v->g) + ", " +
                                 group->label(v->h) + ", " + a + "): sigma_gh(a) != sigma_g(sigma_h(a))");
            case ActionViolation::Kind::IdentityNotTrivial:
                throw InputError("/action: sigma of the identity moves " + a);
            case ActionViolation::Kind::NotAutomorphism:
                throw InputError("/action: " + v->message);
        }
    }
    return std::move(*sigma);
}

inline SetAction build_set_action(const DynamicalSpec& spec, const Caps& caps = {}) {
    auto group = build_group(spec.group, caps);
    using K = SetActionDescriptor::Kind;
    try {
        switch (spec.action.kind) {
            case K::Trivial: return SetAction::trivial(group, spec.points);
            case K::Regular: {
                if (spec.points != group->order())
                    throw InputError("/dynamics/points: regular action needs |X| = |G| = " +
                                     std::to_string(group->order()));
                return SetAction::regular(group);
            }
            case K::Natural: {
                if (group->presentation() != Presentation::Permutation || group->degree() != spec.points)
                    throw InputError("/dynamics/action: natural action needs a permutation group of degree |X|");
                return SetAction::natural(group);
            }
            case K::Images: {
                std::map<GroupIndex, Permutation> images;
                for (const auto& [label, row] : spec.action.images)
                    images.emplace(detail::resolve_label(*group, label, "/dynamics/action/images"), row);
                return SetAction::from_images(group, spec.points, images);
            }
            case K::Table: {
                std::vector<std::optional<Permutation>> rows(group->order());
                for (const auto& [label, row] : spec.action.images)
                    rows[detail::resolve_label(*group, label, "/dynamics/action/images")] = row;
                std::vector<Permutation> table;
                for (GroupIndex g = 0; g < group->order(); ++g) {
                    if (!rows[g]) throw InputError("/dynamics/action/images: missing element '" + group->label(g) + "'");
                    table.push_back(*rows[g]);
                }
                return SetAction(group, spec.points, std::move(table));
            }
        }
    } catch (const InputError&) {
        throw;
    } catch (const DomainError& e) {
        throw InputError(std::string("/dynamics/action: ") + e.what());
    }
    throw InputError("unknown point action kind");
}

inline TransformationGroup build_transformation_group(const DynamicalSpec& spec, const Caps& caps = {}) {
    try {
        return TransformationGroup(build_set_action(spec, caps), spec.q);
    } catch (const InputError&) {
        throw;
    } catch (const DomainError& e) {
        throw InputError(std::string("/dynamics: ") + e.what());
    }
}

/// Caps in force for an instance: library defaults, then the file, then the environment.
inline Caps effective_caps(const InstanceSpec& spec) { return caps_from_env(spec.caps.value_or(Caps{})); }

}  // namespace skewring

#endif  // SKEWRING_INSTANCE_HPP
