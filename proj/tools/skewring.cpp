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

// Command-line front end: check one instance, run the suite, or re-verify a saved report.
//
// Exit codes: 0 all assertions hold, 1 a violation (or a witness that fails to revalidate),
// 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewring/skewring.hpp"

namespace {

using namespace skewring;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << text;
}

struct CheckArgs {
    std::string file;
    std::string named;
    std::string checks;
    bool all_checks = false;
    std::string format = "text";
    std::string out;
    bool timings = false;
};

int run_check(const CheckArgs& a) {
    InstanceSpec spec;
    if (!a.named.empty()) {
        auto found = named_instance(a.named);
        if (!found) {
            for (const auto& s : dynamics_catalogue())
                if (s.name == a.named) found = s;
        }
        if (!found) throw InputError("no catalogue instance named '" + a.named + "'");
        spec = *found;
    } else if (!a.file.empty()) {
        spec = parse_instance(read_file(a.file));
    } else {
        throw InputError("give an instance file or --named");
    }
    std::optional<std::vector<std::string>> selection;
    if (a.all_checks) {
        selection = algebraic_check_names();
        if (spec.dynamical())
            selection->insert(selection->end(), dynamical_check_names().begin(), dynamical_check_names().end());
    } else if (!a.checks.empty()) {
        selection = a.checks == "none" ? std::vector<std::string>{} : split_list(a.checks);
    }
    const auto built = build_instance(spec);
    const auto report = run_checks(spec, built, selection, RunOptions{a.timings});
    emit(a.format == "json" ? to_json(report, *built.ring).dump(2) + "\n" : to_text(report, built.ring), a.out);
    return report.violations() ? kViolation : kOk;
}

struct SuiteArgs {
    std::uint64_t seed = 1;
    std::size_t count = 200;
    std::uint64_t cap = std::uint64_t{1} << 16;
    std::string format = "text";
    bool skip_catalogue = false;
};

int run_suite(const SuiteArgs& a) {
    SuiteOptions options;
    options.seed = a.seed;
    options.count = a.count;
    options.cap = a.cap;
    std::vector<InstanceReport> catalogue;
    if (!a.skip_catalogue) catalogue = run_catalogue();
    const auto sweeps = run_sweeps(options);

    std::size_t catalogue_violations = 0;
    for (const auto& r : catalogue) catalogue_violations += r.violations();
    const std::size_t total = catalogue_violations + sweeps.violations();

    if (a.format == "json") {
        Json j = Json::object();
        j["seed"] = a.seed;
        j["count"] = a.count;
        j["cap"] = a.cap;
        Json cat = Json::array();
        for (const auto& r : catalogue) cat.push_back({{"instance", r.spec.name}, {"violations", r.violations()}});
        j["catalogue"] = std::move(cat);
        Json sw = Json::array();
        for (const auto& s : sweeps.sweeps) {
            Json v = Json::array();
            for (const auto& x : s.violations)
                v.push_back({{"instance", x.instance}, {"check", x.check}, {"assertion", x.assertion}, {"note", x.note}});
            sw.push_back({{"sweep", s.name},
                          {"qualifying", s.qualifying},
                          {"undetermined", s.undetermined},
                          {"violations", std::move(v)}});
        }
        j["sweeps"] = std::move(sw);
        j["generated"] = sweeps.generated;
        j["constructive_ideals"] = sweeps.constructive_ideals;
        j["violations"] = total;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : catalogue)
            std::cout << "catalogue " << r.spec.name << ": "
                      << (r.violations() ? std::to_string(r.violations()) + " violations" : std::string("ok")) << "\n";
        for (const auto& s : sweeps.sweeps) {
            std::cout << "sweep " << s.name << ": " << s.qualifying << " instances, " << s.violations.size()
                      << " violations, " << s.undetermined << " undetermined\n";
            for (const auto& x : s.violations)
                std::cout << "  " << x.instance << " " << x.check << "/" << x.assertion << " " << x.note << "\n";
        }
        std::cout << "generated " << sweeps.generated << " random instances, " << sweeps.constructive_ideals
                  << " ideals through the constructive procedures\n";
        std::cout << (total ? "VIOLATIONS: " + std::to_string(total) : std::string("all assertions hold")) << "\n";
    }
    return total ? kViolation : kOk;
}

struct ReportArgs {
    std::string file;
    std::string format = "text";
};

// Re-runs the echoed instance, compares with the saved report and revalidates every witness.
int run_report(const ReportArgs& a) {
    Json saved;
    try {
        saved = Json::parse(read_file(a.file));
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("report is not valid JSON: ") + e.what());
    }
    if (!saved.is_object() || !saved.contains("instance") || !saved.contains("checks"))
        throw InputError("not a report: expected keys 'instance' and 'checks'");
    const auto spec = parse_instance_json(saved["instance"]);
    std::vector<std::string> selection;
    for (const auto& c : saved["checks"]) selection.push_back(c.value("check", std::string()));
    const auto built = build_instance(spec);
    const auto fresh = run_checks(spec, built, selection);
    Json fresh_json = to_json(fresh, *built.ring);
    Json stored = saved;
    stored.erase("timings_seconds");

    const auto failures = verify_report(saved);
    const bool reproduced = fresh_json == stored;
    if (a.format == "json") {
        Json out = fresh_json;
        out["reproduced"] = reproduced;
        out["witness_failures"] = failures;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << to_text(fresh, built.ring);
        std::cout << (reproduced ? "report reproduced exactly\n" : "report differs from a fresh run\n");
        for (const auto& f : failures) std::cout << "witness does not revalidate: " << f << "\n";
        if (failures.empty()) std::cout << "all witnesses revalidate\n";
    }
    return fresh.violations() || !failures.empty() || !reproduced ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicity of finite skew group rings: oracles, criteria and randomized sweeps"};
    app.require_subcommand(1);

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Run checks on one instance");
    c->add_option("instance", check.file, "Instance JSON file");
    c->add_option("--named", check.named, "Catalogue instance instead of a file");
    c->add_option("--checks", check.checks, "Comma-separated check names, or 'none' for an echo-only report");
    c->add_flag("--all", check.all_checks, "Every applicable check, ignoring the instance's own list");
    c->add_option("--format", check.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("-o,--out", check.out, "Write the report to a file");
    c->add_flag("--timings", check.timings, "Include per-check timings");

    SuiteArgs suite;
    auto* s = app.add_subcommand("suite", "Catalogue plus seeded randomized sweeps");
    s->add_option("--seed", suite.seed, "Seed of the instance stream");
    s->add_option("--count", suite.count, "Qualifying instances per sweep");
    s->add_option("--cap", suite.cap, "Largest |R| drawn");
    s->add_option("--format", suite.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    s->add_flag("--skip-catalogue", suite.skip_catalogue, "Only run the randomized sweeps");

    ReportArgs report;
    auto* r = app.add_subcommand("report", "Reproduce a saved JSON report and revalidate its witnesses");
    r->add_option("report", report.file, "Report JSON file")->required();
    r->add_option("--format", report.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* l = app.add_subcommand("list", "List catalogue instances and check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (c->parsed()) return run_check(check);
        if (s->parsed()) return run_suite(suite);
        if (r->parsed()) return run_report(report);
        if (l->parsed()) {
            for (const auto& x : named_instances()) std::cout << "instance " << x.name << "\n";
            for (const auto& x : dynamics_catalogue()) std::cout << "dynamics " << x.name << "\n";
            for (const auto& n : algebraic_check_names()) std::cout << "check " << n << "\n";
            for (const auto& n : dynamical_check_names()) std::cout << "check " << n << " (dynamical)\n";
            return kOk;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
