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

// Acceptance run: one PASS/FAIL line per criterion, with the measured runtime.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "oracles.hpp"

using namespace skewring;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) pass = false;
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { details.push_back("     " + what); }
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream limit;
    limit << "runtime " << seconds << " s (limit " << limit_seconds << " s)";
    out.require(seconds <= limit_seconds, limit.str());
    std::printf("%s %s: %s\n", id, out.pass ? "PASS" : "FAIL", title);
    for (const auto& d : out.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    failures += !out.pass;
}

SkewRingPtr named(std::string_view name) { return build_instance(*named_instance(name)).ring; }

bool contains(const std::vector<SkewElement>& xs, const SkewElement& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

std::string str(std::size_t n) { return std::to_string(n); }

}  // namespace

int main() {
    criterion("AC1", "F_2^2 x| Z/2 (swap) is simple by brute force and by the abelian-group criterion", 1.0,
              [](Outcome& out) {
                  auto R = named("swap_f2x2");
                  out.require(R->size() == 16, "|R| = " + str(R->size()));
                  const bool brute = oracle::NaiveSkew(*R).simple();
                  out.require(brute, "naive oracle: every nonzero principal ideal is R");
                  Analysis an(R);
                  auto t2 = theorem2_check(an);
                  out.require(t2.verdict("i")->value == Truth::True, "library oracle: R simple");
                  out.require(t2.verdict("ii")->value == Truth::True, "criterion: A G-simple and Z(R) a field");
                  out.require(t2.assertion("c")->status == Status::Holds, "(i) <=> (ii) agree");
              });

    criterion("AC2", "M_2(F_3) x| Z/2 by conjugation with [[0,1],[-1,0]]: centre F_9, simple", 300.0, [](Outcome& out) {
        auto R = named("matrix_conjugation_f3");
        const Ring& A = R->coefficients();
        const Elem I = A.one(), M = A.encode(std::vector<std::uint64_t>{0, 1, 2, 0});
        std::vector<SkewElement> shaped;
        for (std::uint64_t a0 = 0; a0 < 3; ++a0)
            for (std::uint64_t a1 = 0; a1 < 3; ++a1)
                shaped.push_back(SkewElement::homogeneous(R, A.mul(A.scalar(a0), I), 0) +
                                 SkewElement::homogeneous(R, A.mul(A.scalar(a1), M), 1));
        std::sort(shaped.begin(), shaped.end());
        auto Z = skew_center(R);
        out.require(Z.size() == 9, "|Z(R)| = " + str(Z.size()));
        out.require(Z == shaped, "Z(R) = { a0 I u_e + a1 M u_1 : a0, a1 in F_3 }");
        std::vector<Elem> brute_centre;
        for (const auto& z : shaped) brute_centre.push_back(z.encode());
        out.require(oracle::NaiveSkew(*R).centre() == brute_centre, "naive oracle centre agrees");
        auto field = centre_field_test(R, Z);
        out.require(field.is_field, "is_field = true");
        auto s = is_simple(R);
        out.require(s.status == SimplicityStatus::Simple && !s.witness_search && !s.linear,
                    "exhaustive oracle over all " + str(R->size()) + " elements: simple");
    });

    criterion("AC3", "M_2(F_2) x| Z/2 by conjugation with [[0,1],[1,0]]: 1 + M u_1 central non-unit", 300.0,
              [](Outcome& out) {
                  auto R = named("matrix_conjugation_f2");
                  const Ring& A = R->coefficients();
                  const auto z = SkewElement::one(R) +
                                 SkewElement::homogeneous(R, A.encode(std::vector<std::uint64_t>{0, 1, 1, 0}), 1);
                  auto Z = skew_center(R);
                  out.require(contains(Z, z), "1 + M u_1 is central");
                  out.require(!z.is_zero() && (z * z).is_zero(), "(1 + M u_1)^2 = 0, so it is a nonzero non-unit");
                  out.require(!centre_field_test(R, Z).is_field, "is_field = false");
                  auto s = is_simple(R);
                  out.require(s.status == SimplicityStatus::NotSimple && s.witness.has_value(), "oracle: not simple");
                  if (s.witness) {
                      auto I = skew_ideal_closure(R, std::span<const SkewElement>(&*s.witness, 1));
                      out.require(!I.is_zero() && !I.is_whole(),
                                  "witness " + s.witness->to_string() + " generates a proper ideal of size " +
                                      str(I.size()));
                      auto naive = oracle::NaiveSkew(*R).ideal(s.witness->encode());
                      out.require(naive.size() == I.size(), "naive closure of the witness has the same size");
                  }
              });

    criterion("AC4", "F_2^3 x| S_3 (natural action)", 300.0, [](Outcome& out) {
        auto spec = *named_instance("s3_natural_f2");
        auto b = build_instance(spec);
        DynamicsAnalysis dn(*b.dynamics);
        auto t3 = theorem3_check(dn);
        out.require(t3.verdict("iv")->value == Truth::True, "(iv) A G-simple and sigma injective");
        out.require(t3.verdict("v")->value == Truth::True, "(v) faithful and transitive");
        const auto& R = b.ring;
        const Elem f = R->coefficients().encode(std::vector<std::uint64_t>{0, 0, 1});
        const auto w = SkewElement::homogeneous(R, f, R->group().at("(1,2)"));
        out.require(centralizes_A(w), "f u_(1,2) commutes with A, f the indicator of the fixed point 3");
        out.require(!is_max_commutative_A(R).maximal, "A is not maximal commutative");
        auto s = is_simple(R, b.caps, true);
        out.require(s.witness_search && s.status == SimplicityStatus::NotSimple,
                    "witness search over support size <= 2: not simple");
        if (s.witness) {
            out.require(s.witness->support_size() <= 2, "witness " + s.witness->to_string());
            out.require(linear_ideal_rank(*s.witness) < linear_dimension(*R),
                        "its ideal has F_2-dimension " + str(linear_ideal_rank(*s.witness)) + " < " +
                            str(linear_dimension(*R)));
        }
    });

    SuiteResult suite;
    criterion("AC5", "randomized equivalence sweeps, 200 instances each", 600.0, [&](Outcome& out) {
        suite = run_sweeps(SuiteOptions{});
        out.info(str(suite.generated) + " instances generated from seed 1");
        for (const char* name : {"thm2c", "thm2d", "thm1", "crow", "prop4", "prop11", "lemma7"}) {
            const auto* s = suite.sweep(name);
            out.require(s && s->qualifying == 200 && s->violations.empty(),
                        std::string(name) + ": " + str(s ? s->qualifying : 0) + " instances, " +
                            str(s ? s->violations.size() : 0) + " violations, " + str(s ? s->undetermined : 0) +
                            " undetermined (not counted)");
        }
    });

    criterion("AC6", "support_reduce and central_witness on every ideal of the abelian, G-simple instances", 300.0,
              [&](Outcome& out) {
                  const auto* s = suite.sweep("constructive");
                  out.require(s && s->qualifying == 200 && s->violations.empty(),
                              "sweep: " + str(s ? s->qualifying : 0) + " instances, " +
                                  str(suite.constructive_ideals) + " ideals, " + str(s ? s->violations.size() : 0) +
                                  " violations");
                  std::size_t instances = 0, ideals = 0, bad = 0;
                  for (const auto& spec : named_instances()) {
                      auto b = build_instance(spec);
                      Analysis an(b.ring, b.caps);
                      if (!an.abelian() || an.g_simple() != Truth::True) continue;
                      auto c = constructive_check(an);
                      ++instances;
                      ideals += detail::ideals_examined(c);
                      bad += c.violated();
                  }
                  out.require(bad == 0, "named instances: " + str(instances) + " instances, " + str(ideals) +
                                            " ideals, " + str(bad) + " with violations");
              });

    criterion("AC7", "dynamics catalogue: faithful/injective, minimal/G-simple, (iv) <=> (v), abelian freeness", 300.0,
              [](Outcome& out) {
                  std::size_t n = 0, abelian = 0, free_checked = 0;
                  std::vector<std::string> failed;
                  for (const auto& spec : dynamics_catalogue()) {
                      auto b = build_instance(spec);
                      const auto& T = *b.dynamics;
                      if (T.points() > 6 || T.group().order() > 24) failed.push_back(spec.name + " outside bounds");
                      DynamicsAnalysis dn(T, b.caps, true);
                      auto l = lemma13_14_check(dn);
                      auto t = theorem3_check(dn);
                      ++n;
                      for (const char* id : {"lemma13", "lemma14"})
                          if (l.assertion(id)->status != Status::Holds) failed.push_back(spec.name + " " + id);
                      if (t.assertion("b")->status != Status::Holds) failed.push_back(spec.name + " theorem3 b");
                      if (is_abelian(T.group())) {
                          ++abelian;
                          if (t.assertion("d")->status != Status::Holds) failed.push_back(spec.name + " theorem3 d");
                          if (abelian_freeness_check(T).assertion("free")->status != Status::Holds)
                              failed.push_back(spec.name + " freeness");
                          free_checked += is_minimal(T).minimal && is_faithful(T).faithful;
                      }
                  }
                  std::string list;
                  for (const auto& f : failed) list += " " + f;
                  out.require(failed.empty(), str(n) + " instances (" + str(abelian) + " abelian, " +
                                                  str(free_checked) + " minimal and faithful abelian); failures:" +
                                                  (list.empty() ? " none" : list));
              });

    criterion("AC8", "centre structure on every instance", 300.0, [](Outcome& out) {
        std::vector<InstanceSpec> specs = named_instances();
        for (const auto& s : dynamics_catalogue()) specs.push_back(s);
        InstanceGenerator gen(1);
        for (int i = 0; i < 200; ++i) specs.push_back(gen.next());
        std::size_t instances = 0, elements = 0, skipped = 0;
        std::vector<std::string> eq4, conj, eps, fixed_ring, fixed_ring_abelian;
        for (const auto& spec : specs) {
            auto b = build_instance(spec);
            Analysis an(b.ring, b.caps);
            auto c = centre_structure_check(an);
            if (!c.skipped.empty()) {
                ++skipped;
                continue;
            }
            ++instances;
            elements += an.centre()->size();
            if (c.verdict("commutes_with_A")->value != Truth::True) eq4.push_back(spec.name);
            if (c.verdict("twisted_conjugacy")->value != Truth::True) conj.push_back(spec.name);
            if (c.assertion("augmentation")->status != Status::Holds) eps.push_back(spec.name);
            if (c.verdict("coefficients_in_fixed_ring")->value != Truth::True) {
                fixed_ring.push_back(spec.name);
                if (an.abelian()) fixed_ring_abelian.push_back(spec.name);
            }
        }
        auto names = [](const std::vector<std::string>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size() && i < 8; ++i) s += (i ? ", " : "") + v[i];
            if (v.size() > 8) s += ", ...";
            return v.empty() ? std::string("none") : std::to_string(v.size()) + " (" + s + ")";
        };
        out.info(str(instances) + " instances, " + str(elements) + " central elements, " + str(skipped) +
                 " skipped at the enumeration cap");
        out.require(eq4.empty(), "b a_g = a_g sigma_g(b): failures " + names(eq4));
        out.require(conj.empty(), "a_{hgh^-1} = sigma_h(a_g): failures " + names(conj));
        out.require(eps.empty(), "epsilon multiplicative exactly when kernel(sigma) = G: failures " + names(eps));
        out.require(fixed_ring_abelian.empty(), "a_g in A^G on abelian G: failures " + names(fixed_ring_abelian));
        out.require(fixed_ring.empty(), "a_g in A^G on every instance: failures " + names(fixed_ring));
        if (!fixed_ring.empty())
            out.info("a_g in A^G is only forced for abelian G: a central r has a_{hgh^-1} = sigma_h(a_g), so a_g is "
                     "fixed by C_G(g) but not by all of G. On F_2^3 x| S_3, f u_(1,2) + f' u_(1,3) + f'' u_(2,3) "
                     "with f the indicator of the point fixed by each transposition is central, and f is not "
                     "S_3-invariant.");
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
