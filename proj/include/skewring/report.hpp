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

#ifndef SKEWRING_REPORT_HPP
#define SKEWRING_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "criteria.hpp"
#include "dynamics.hpp"
#include "instance.hpp"
#include "skew_group_ring.hpp"

namespace skewring {

/// An instance built from its spec: the skew group ring, and the transformation group when dynamical.
struct BuiltInstance {
    SkewRingPtr ring;
    std::optional<TransformationGroup> dynamics;
    Caps caps;
};

inline BuiltInstance build_instance(const InstanceSpec& spec) {
    BuiltInstance out;
    out.caps = effective_caps(spec);
    if (const auto* a = std::get_if<AlgebraicSpec>(&spec.body)) {
        out.ring = SkewRing::create(build_action(*a, out.caps));
    } else {
        out.dynamics = build_transformation_group(std::get<DynamicalSpec>(spec.body), out.caps);
        out.ring = SkewRing::create(induce_sigma(*out.dynamics, out.caps));
    }
    return out;
}

struct InstanceReport {
    InstanceSpec spec;
    std::string ring_name;
    std::uint32_t group_order = 0;
    std::optional<std::uint64_t> ring_size;  // absent when |R| does not fit 64 bits
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, double>> timings;
    std::vector<std::string> notes;

    std::size_t violations() const {
        std::size_t n = 0;
        for (const auto& c : checks)
            for (const auto& a : c.assertions) n += a.status == Status::Violated;
        return n;
    }
};

inline const std::vector<std::string>& algebraic_check_names() {
    static const std::vector<std::string> names{"necessary_conditions", "theorem1",    "theorem2",
                                                "crow",                 "lemma7",      "centralizer",
                                                "centre_structure",     "constructive"};
    return names;
}

inline const std::vector<std::string>& dynamical_check_names() {
    static const std::vector<std::string> names{"lemma13_14", "theorem3", "abelian_freeness", "stabilizer_orbits"};
    return names;
}

inline CheckResult stabilizer_orbits_report(const TransformationGroup& T) {
    CheckResult r{"stabilizer_orbits", {}, {}, {}};
    auto sets = stabilizer_orbit_sets(T);
    std::size_t largest = 0;
    for (const auto& row : sets)
        for (const auto& s : row) largest = std::max(largest, s.size());
    r.verdicts.push_back({"finite", Truth::True, "criterion", std::nullopt,
                          "largest Stab(x).y has " + std::to_string(largest) + " points"});
    return r;
}

struct RunOptions {
    bool timings = false;
};

/**
 * @brief Runs the selected checks (all applicable ones when `selection` is empty of value,
 *        none when it is an empty list). Failed hypotheses and capacity limits are recorded
 *        as skipped checks without stopping the others.
 */
inline InstanceReport run_checks(const InstanceSpec& spec, const BuiltInstance& built,
                                 std::optional<std::vector<std::string>> selection = std::nullopt,
                                 const RunOptions& options = {}) {
    InstanceReport report;
    report.spec = spec;
    report.ring_name = built.ring->name();
    report.group_order = built.ring->degree();
    if (built.ring->encodable()) report.ring_size = built.ring->size();

    std::vector<std::string> names;
    if (selection) names = *selection;
    else if (!spec.checks.empty()) names = spec.checks;
    else {
        names = algebraic_check_names();
        if (built.dynamics) names.insert(names.end(), dynamical_check_names().begin(), dynamical_check_names().end());
    }
    for (const auto& n : names) {
        const bool known = std::find(algebraic_check_names().begin(), algebraic_check_names().end(), n) !=
                               algebraic_check_names().end() ||
                           std::find(dynamical_check_names().begin(), dynamical_check_names().end(), n) !=
                               dynamical_check_names().end();
        if (!known) throw InputError("unknown check '" + n + "'");
        if (!built.dynamics &&
            std::find(dynamical_check_names().begin(), dynamical_check_names().end(), n) != dynamical_check_names().end())
            throw InputError("check '" + n + "' needs a dynamical instance");
    }

    Analysis an(built.ring, built.caps, spec.witness_search || built.dynamics.has_value());
    std::optional<DynamicsAnalysis> dn;
    auto dyn = [&]() -> const DynamicsAnalysis& {
        if (!dn) dn.emplace(*built.dynamics, built.caps, true);
        return *dn;
    };
    const std::map<std::string, std::function<CheckResult()>> table{
        {"necessary_conditions", [&] { return necessary_conditions(an); }},
        {"theorem1", [&] { return theorem1_check(an); }},
        {"theorem2", [&] { return theorem2_check(an); }},
        {"crow", [&] { return crow_check(an); }},
        {"lemma7", [&] { return lemma7_check(an); }},
        {"centralizer", [&] { return centralizer_check(an); }},
        {"centre_structure", [&] { return centre_structure_check(an); }},
        {"constructive", [&] { return constructive_check(an); }},
        {"lemma13_14", [&] { return lemma13_14_check(dyn()); }},
        {"theorem3", [&] { return theorem3_check(dyn()); }},
        {"abelian_freeness", [&] { return abelian_freeness_check(*built.dynamics); }},
        {"stabilizer_orbits", [&] { return stabilizer_orbits_report(*built.dynamics); }},
    };
    for (const auto& n : names) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = table.at(n)();
        } catch (const PreconditionError& e) {
            r = CheckResult{n, {}, {}, e.what()};
        } catch (const DomainError& e) {
            r = CheckResult{n, {}, {}, e.what()};
        } catch (const CapacityError& e) {
            r = CheckResult{n, {}, {}, e.what()};
        }
        report.checks.push_back(std::move(r));
        if (options.timings)
            report.timings.emplace_back(
                n, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }

    if (built.dynamics)
        report.notes.push_back(
            "coefficients are F_" + std::to_string(built.dynamics->field_order()) +
            "-valued functions on a finite discrete space; every ideal is closed, and indicator functions "
            "stand in for Urysohn functions");
    if (const auto& s = an.simplicity(); s && s->linear)
        report.notes.push_back("|R| exceeds the enumeration cap: simplicity decided exactly from the nonzero "
                               "elements e_x F_q[Stab(x)], every nonzero ideal containing one, with ideals "
                               "computed as F_p-subspaces");
    else if (s && s->witness_search)
        report.notes.push_back("|R| exceeds the enumeration cap: simplicity searched over elements of support "
                               "size <= 2 only, so non-simplicity can be shown but simplicity is never claimed");
    for (const auto& c : report.checks)
        if (const auto* v = c.verdict(c.check == "theorem3" ? "c" : "b"); v && v->value == Truth::True)
            report.notes.push_back(c.check + ": the failure of the converse is exhibited on this finite instance, an "
                                              "analogue of the infinite counterexample");
    return report;
}

inline InstanceReport run_checks(const InstanceSpec& spec, std::optional<std::vector<std::string>> selection = std::nullopt,
                                 const RunOptions& options = {}) {
    return run_checks(spec, build_instance(spec), std::move(selection), options);
}

// ---- JSON -----------------------------------------------------------------------------------

namespace detail {

inline Json payload_json(const Ring& A, Elem a) { return A.payload(a); }

inline Json skew_json(const SkewRing& R, const std::vector<Elem>& coeffs) {
    Json terms = Json::array();
    for (GroupIndex g = 0; g < coeffs.size(); ++g)
        if (coeffs[g] != 0) terms.push_back(Json::array({R.group().label(g), payload_json(R.coefficients(), coeffs[g])}));
    return terms;
}

inline std::vector<Elem> skew_from_json(const SkewRing& R, const Json& terms, const std::string& path) {
    std::vector<Elem> coeffs(R.degree(), 0);
    if (!terms.is_array()) bad(path, "expected a list of [label, payload] terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const Json& t = terms[i];
        const std::string p = path + "/" + std::to_string(i);
        if (!t.is_array() || t.size() != 2) bad(p, "expected [label, payload]");
        GroupIndex g = resolve_label(R.group(), as_string(t[0], p + "/0"), p);
        coeffs[g] = R.coefficients().encode(as_payload(t[1], p + "/1"));
    }
    return coeffs;
}

inline Json witness_json(const SkewRing& R, const Witness& w) {
    Json j = {{"role", w.role}};
    if (!w.skew.empty()) {
        Json s = Json::array();
        for (const auto& c : w.skew) s.push_back(skew_json(R, c));
        j["skew"] = std::move(s);
    }
    if (!w.ring.empty()) {
        Json s = Json::array();
        for (Elem a : w.ring) s.push_back(payload_json(R.coefficients(), a));
        j["ring"] = std::move(s);
    }
    if (!w.group.empty()) {
        Json s = Json::array();
        for (GroupIndex g : w.group) s.push_back(R.group().label(g));
        j["group"] = std::move(s);
    }
    if (!w.points.empty()) j["points"] = w.points;
    if (w.size) j["size"] = w.size;
    return j;
}

inline Witness witness_from_json(const SkewRing& R, const Json& j, const std::string& path) {
    Witness w;
    w.role = as_string(field(j, path, "role"), path + "/role");
    if (j.contains("skew"))
        w.skew = as_array<std::vector<Elem>>(j["skew"], path + "/skew",
                                             [&](const Json& t, const std::string& p) { return skew_from_json(R, t, p); });
    if (j.contains("ring"))
        w.ring = as_array<Elem>(j["ring"], path + "/ring", [&](const Json& t, const std::string& p) {
            return R.coefficients().encode(as_payload(t, p));
        });
    if (j.contains("group"))
        w.group = as_array<GroupIndex>(j["group"], path + "/group", [&](const Json& t, const std::string& p) {
            return resolve_label(R.group(), as_string(t, p), p);
        });
    if (j.contains("points")) w.points = as_u32_list(j["points"], path + "/points");
    if (j.contains("size")) w.size = as_uint(j["size"], path + "/size");
    return w;
}

}  // namespace detail

/// The report as JSON. Timings are included only when they were collected.
inline Json to_json(const InstanceReport& report, const SkewRing& R) {
    Json j = Json::object();
    j["instance"] = to_json(report.spec);
    j["ring"] = {{"name", report.ring_name}, {"group_order", report.group_order}};
    j["ring"]["size"] = report.ring_size ? Json(*report.ring_size) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json cj = {{"check", c.check}};
        if (!c.skipped.empty()) cj["skipped"] = c.skipped;
        Json vs = Json::array();
        for (const auto& v : c.verdicts) {
            Json vj = {{"id", v.id}, {"value", to_string(v.value)}, {"method", v.method}};
            if (v.witness) vj["witness"] = detail::witness_json(R, *v.witness);
            if (!v.note.empty()) vj["note"] = v.note;
            vs.push_back(std::move(vj));
        }
        cj["verdicts"] = std::move(vs);
        Json as = Json::array();
        for (const auto& a : c.assertions) {
            Json aj = {{"id", a.id}, {"statement", a.statement}, {"status", to_string(a.status)}};
            if (!a.note.empty()) aj["note"] = a.note;
            as.push_back(std::move(aj));
        }
        cj["assertions"] = std::move(as);
        // oracle and criteria agree when no assertion fails; null when one could not be decided
        bool violated = false, undecided = false;
        for (const auto& a : c.assertions) {
            violated |= a.status == Status::Violated;
            undecided |= a.status == Status::Undetermined;
        }
        cj["agreement"] = violated ? Json(false) : undecided ? Json(nullptr) : Json(true);
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["violations"] = report.violations();
    j["notes"] = report.notes;
    if (!report.timings.empty()) {
        Json t = Json::object();
        for (const auto& [name, secs] : report.timings) t[name] = secs;
        j["timings_seconds"] = std::move(t);
    }
    return j;
}

// ---- text -----------------------------------------------------------------------------------

inline std::string render_witness(const SkewRingPtr& ctx, const Witness& w) {
    const SkewRing& R = *ctx;
    std::ostringstream out;
    out << w.role << ":";
    for (std::size_t i = 0; i < w.skew.size(); ++i) out << (i ? "; " : " ") << SkewElement(ctx, w.skew[i]).to_string();
    for (Elem a : w.ring) {
        out << " [";
        auto p = R.coefficients().payload(a);
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
        out << "]";
    }
    for (GroupIndex g : w.group) out << " " << R.group().label(g);
    if (!w.points.empty()) {
        out << " points {";
        for (std::size_t i = 0; i < w.points.size(); ++i) out << (i ? "," : "") << w.points[i];
        out << "}";
    }
    if (w.size) out << " (size " << w.size << ")";
    return out.str();
}

inline std::string to_text(const InstanceReport& report, const SkewRingPtr& R) {
    std::ostringstream out;
    out << "instance " << (report.spec.name.empty() ? "(unnamed)" : report.spec.name) << ": " << report.ring_name;
    if (report.ring_size) out << ", |R| = " << *report.ring_size;
    out << "\n";
    for (const auto& c : report.checks) {
        out << "[" << c.check << "]";
        if (!c.skipped.empty()) out << " skipped: " << c.skipped;
        out << "\n";
        for (const auto& v : c.verdicts) {
            out << "  " << v.id << " = " << to_string(v.value) << " (" << v.method << ")";
            if (v.witness) out << "  witness " << render_witness(R, *v.witness);
            if (!v.note.empty()) out << "  # " << v.note;
            out << "\n";
        }
        for (const auto& a : c.assertions) {
            out << "  assert " << a.id << ": " << to_string(a.status) << "  " << a.statement;
            if (!a.note.empty()) out << "  # " << a.note;
            out << "\n";
        }
    }
    for (const auto& n : report.notes) out << "note: " << n << "\n";
    for (const auto& [name, secs] : report.timings) out << "time " << name << ": " << secs << " s\n";
    out << (report.violations() ? "VIOLATIONS: " + std::to_string(report.violations()) : std::string("all assertions hold"))
        << "\n";
    return out.str();
}

// ---- witness revalidation --------------------------------------------------------------------

/**
 * @brief Recomputes what a witness claims. Returns an explanation when it does not hold.
 */
inline std::optional<std::string> verify_witness(const BuiltInstance& built, const Witness& w) {
    const auto& ctx = built.ring;
    const SkewRing& R = *ctx;
    const Ring& A = R.coefficients();
    const Group& G = R.group();
    auto skew = [&](std::size_t i) {
        if (i >= w.skew.size()) throw InputError(w.role + ": missing skew element");
        return SkewElement(ctx, w.skew[i]);
    };
    auto need = [&](bool ok, const std::string& why) -> std::optional<std::string> {
        if (ok) return std::nullopt;
        return w.role + ": " + why;
    };
    if (w.role == "proper_ideal_generator") {
        auto r = skew(0);
        if (auto bad = need(!r.is_zero(), "generator is zero")) return bad;
        if (linear_characteristic(A) && !(R.encodable() && R.size() <= built.caps.enumeration))
            return need(linear_ideal_rank(r) < linear_dimension(R), "generated ideal is all of R");
        auto I = skew_ideal_closure(ctx, std::span<const SkewElement>(&r, 1), built.caps);
        if (auto bad = need(!I.is_whole(), "generated ideal is all of R")) return bad;
        return need(!w.size || I.size() == w.size, "ideal size differs");
    }
    if (w.role == "invariant_ideal_generator") {
        if (w.ring.empty() || w.ring[0] == 0) return w.role + ": missing or zero generator";
        auto I = invariant_ideal_closure(R.action(), std::span<const Elem>(w.ring.data(), 1), built.caps);
        if (auto bad = need(!I.whole, "invariant ideal is all of A")) return bad;
        return need(!w.size || I.size() == w.size, "ideal size differs");
    }
    if (w.role == "kernel_element") {
        if (w.group.empty()) return w.role + ": missing group element";
        return need(w.group[0] != 0 && R.action().sigma(w.group[0]).is_identity(), "element is e or acts nontrivially");
    }
    if (w.role == "centre_zero_divisor") {
        auto x = skew(0), y = skew(1);
        return need(!x.is_zero() && !y.is_zero() && is_central(x) && is_central(y) && (x * y).is_zero(),
                    "not two nonzero central elements with zero product");
    }
    if (w.role == "centralizing_element") {
        auto c = skew(0);
        return need(centralizes_A(c) && !c.support().empty() && c.support().back() != 0,
                    "element does not centralize A or lies in A");
    }
    if (w.role == "centralizer_outside_kernel") {
        auto c = skew(0);
        bool outside = false;
        for (GroupIndex g : c.support()) outside |= !R.action().sigma(g).is_identity();
        return need(centralizes_A(c) && outside, "element does not centralize A or is supported on the kernel");
    }
    if (w.role == "inner_unit") {
        if (w.group.empty() || w.ring.empty()) return w.role + ": missing data";
        const GroupIndex g = w.group[0];
        const Elem v = w.ring[0];
        bool ok = g != 0 && A.try_invert(v).has_value();
        for (Elem t : A.additive_generators()) ok = ok && A.mul(R.action().apply(g, t), v) == A.mul(v, t);
        return need(ok, "sigma_g is not conjugation by the unit");
    }
    if (w.role == "central_off_identity") {
        auto z = skew(0);
        return need(is_central(z) && !z.support().empty() && z.support().back() != 0,
                    "element is not central or lies in A u_e");
    }
    if (w.role == "coefficient_not_fixed") {
        auto z = skew(0);
        if (w.group.size() < 2) return w.role + ": missing group elements";
        return need(is_central(z) && R.action().apply(w.group[1], z.coefficient(w.group[0])) != z.coefficient(w.group[0]),
                    "element is not central or the coefficient is fixed");
    }
    if (w.role == "centre_relation_failure") {
        auto z = skew(0);
        return need(!is_central(z), "element is central, so no relation can fail");
    }
    if (w.role == "augmentation_not_multiplicative") {
        auto r = skew(0), s = skew(1);
        return need(augmentation(r * s) != augmentation(r) * augmentation(s), "epsilon(rs) = epsilon(r) epsilon(s)");
    }
    if (w.role == "central_witness") {
        auto c = skew(0), gen = skew(1);
        auto I = skew_ideal_closure(ctx, std::span<const SkewElement>(&gen, 1), built.caps);
        return need(I.contains(c) && is_central(c) && c.coefficient(0) == A.one(), "not a central element of I with E = 1");
    }
    if (w.role == "trivially_acting" || w.role == "invariant_subset" || w.role == "fixed_point") {
        if (!built.dynamics) return w.role + ": needs a dynamical instance";
        const auto& act = built.dynamics->action();
        if (w.role == "trivially_acting") {
            if (w.group.empty()) return w.role + ": missing group element";
            return need(w.group[0] != 0 && act.row(w.group[0]) == perm::identity(act.points()),
                        "element is e or moves a point");
        }
        if (w.role == "fixed_point") {
            if (w.group.empty() || w.points.empty()) return w.role + ": missing data";
            return need(w.group[0] != 0 && w.points[0] < act.points() && act.apply(w.group[0], w.points[0]) == w.points[0],
                        "no nontrivial element fixing the point");
        }
        std::vector<bool> in(act.points(), false);
        for (auto x : w.points) {
            if (x >= act.points()) return w.role + ": point out of range";
            in[x] = true;
        }
        bool ok = !w.points.empty() && w.points.size() < act.points();
        for (GroupIndex g = 0; g < G.order(); ++g)
            for (auto x : w.points) ok = ok && in[act.apply(g, x)];
        return need(ok, "subset is empty, everything, or not invariant");
    }
    return "unknown witness role '" + w.role + "'";
}

/// Re-parses a JSON report, rebuilds its instance and revalidates every witness.
inline std::vector<std::string> verify_report(const Json& report) {
    std::vector<std::string> failures;
    auto spec = parse_instance_json(detail::field(report, "", "instance"));
    auto built = build_instance(spec);
    const Json& checks = detail::field(report, "", "checks");
    for (const auto& c : checks) {
        const std::string name = c.value("check", std::string("?"));
        for (const auto& v : c.value("verdicts", Json::array())) {
            if (!v.contains("witness")) continue;
            const std::string where = name + "/" + v.value("id", std::string("?"));
            try {
                auto w = detail::witness_from_json(*built.ring, v["witness"], where);
                if (auto bad = verify_witness(built, w)) failures.push_back(where + ": " + *bad);
            } catch (const Error& e) {
                failures.push_back(where + ": " + e.what());
            }
        }
    }
    return failures;
}

}  // namespace skewring

#endif  // SKEWRING_REPORT_HPP
