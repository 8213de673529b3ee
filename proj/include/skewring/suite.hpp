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

#ifndef SKEWRING_SUITE_HPP
#define SKEWRING_SUITE_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catalogue.hpp"
#include "report.hpp"

namespace skewring {

/// One randomized equivalence sweep: a check and the assertions it must keep.
struct SweepDefinition {
    std::string name;
    std::string check;
    std::vector<std::string> assertions;
};

inline const std::vector<SweepDefinition>& sweep_definitions() {
    static const std::vector<SweepDefinition> defs{
        {"thm2c", "theorem2", {"c"}},
        {"thm2d", "theorem2", {"d"}},
        {"thm1", "theorem1", {"equivalence"}},
        {"crow", "crow", {"equivalence"}},
        {"prop4", "necessary_conditions", {"nc.i", "nc.ii", "nc.iii"}},
        {"prop11", "centralizer", {"prop11", "maxcomm_injective"}},
        {"lemma7", "lemma7", {"a", "b"}},
        {"constructive", "constructive", {"support_reduce", "central_witness"}},
        {"centre_structure", "centre_structure", {"eq4", "twisted_conjugacy", "centralizer_fixed", "augmentation"}},
    };
    return defs;
}

struct Violation {
    std::string instance;
    std::string check;
    std::string assertion;
    std::string note;
};

struct SweepResult {
    std::string name;
    std::size_t qualifying = 0;
    std::size_t undetermined = 0;  // hypotheses met but a verdict was capped
    std::vector<Violation> violations;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t count = 200;
    std::uint64_t cap = std::uint64_t{1} << 16;
    /// Upper bound on generated instances, as a multiple of `count`.
    std::size_t attempt_factor = 60;
};

struct SuiteResult {
    std::vector<SweepResult> sweeps;
    std::size_t generated = 0;
    std::size_t constructive_ideals = 0;
    double seconds = 0;

    std::size_t violations() const {
        std::size_t n = 0;
        for (const auto& s : sweeps) n += s.violations.size();
        return n;
    }
    const SweepResult* sweep(std::string_view name) const {
        for (const auto& s : sweeps)
            if (s.name == name) return &s;
        return nullptr;
    }
};

namespace detail {

// Leading count in the ideals_examined note ("7 ideals").
inline std::size_t ideals_examined(const CheckResult& c) {
    const auto* v = c.verdict("ideals_examined");
    if (!v) return 0;
    return static_cast<std::size_t>(std::stoul(v->note));
}

}  // namespace detail

/**
 * @brief Draws instances from one seeded stream and feeds each to every sweep whose
 *        hypotheses it meets, until each sweep has `count` qualifying instances.
 *
 * An instance qualifies for a sweep when the check ran and none of the sweep's assertions
 * are not-applicable. Undetermined assertions are counted apart and do not qualify.
 */
inline SuiteResult run_sweeps(const SuiteOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto& defs = sweep_definitions();
    SuiteResult out;
    for (const auto& d : defs) out.sweeps.push_back({d.name, 0, 0, {}});

    std::vector<std::string> checks;
    for (const auto& d : defs)
        if (std::find(checks.begin(), checks.end(), d.check) == checks.end()) checks.push_back(d.check);

    InstanceGenerator gen(options.seed, options.cap);
    Caps caps;
    caps.enumeration = options.cap;
    auto done = [&] {
        for (const auto& s : out.sweeps)
            if (s.qualifying < options.count) return false;
        return true;
    };
    while (!done() && out.generated < options.count * options.attempt_factor) {
        InstanceSpec spec = gen.next();
        spec.caps = caps;
        ++out.generated;
        const auto report = run_checks(spec, checks);
        for (std::size_t k = 0; k < defs.size(); ++k) {
            auto& sweep = out.sweeps[k];
            if (sweep.qualifying >= options.count) continue;
            const CheckResult* c = nullptr;
            for (const auto& r : report.checks)
                if (r.check == defs[k].check) c = &r;
            if (!c || !c->skipped.empty()) continue;
            bool applicable = true, undetermined = false;
            std::vector<Violation> found;
            for (const auto& id : defs[k].assertions) {
                const auto* a = c->assertion(id);
                if (!a || a->status == Status::NotApplicable) applicable = false;
                else if (a->status == Status::Undetermined) undetermined = true;
                else if (a->status == Status::Violated) found.push_back({spec.name, c->check, id, a->note});
            }
            if (!applicable) continue;
            if (undetermined) {
                ++sweep.undetermined;
                continue;
            }
            ++sweep.qualifying;
            if (defs[k].name == "constructive") out.constructive_ideals += detail::ideals_examined(*c);
            for (auto& v : found) sweep.violations.push_back(std::move(v));
        }
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// Runs every check on the named and dynamical catalogues; returns the reports in order.
inline std::vector<InstanceReport> run_catalogue() {
    std::vector<InstanceReport> out;
    for (const auto& s : named_instances()) out.push_back(run_checks(s));
    for (const auto& s : dynamics_catalogue()) out.push_back(run_checks(s));
    return out;
}

}  // namespace skewring

#endif  // SKEWRING_SUITE_HPP
