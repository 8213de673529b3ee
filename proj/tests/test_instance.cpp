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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "skewring/skewring.hpp"

using namespace skewring;

namespace {

std::string fixture(const std::string& name) {
    std::ifstream in(std::string(SKEWRING_INSTANCES_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_of(std::string_view text) {
    try {
        build_instance(parse_instance(text));
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST(Parse, MinimalAlgebraicInstance) {
    auto spec = parse_instance(R"({"ring": {"kind": "modular", "n": 6}, "group": {"kind": "cyclic", "orders": [2]},
                                   "action": {"kind": "trivial"}})");
    EXPECT_FALSE(spec.dynamical());
    EXPECT_FALSE(spec.witness_search);
    EXPECT_TRUE(spec.checks.empty());
    auto b = build_instance(spec);
    EXPECT_EQ(b.ring->size(), 36u);
    EXPECT_FALSE(b.dynamics);
}

TEST(Parse, FixturesMatchTheCatalogue) {
    for (const auto& s : named_instances()) EXPECT_EQ(parse_instance(fixture(s.name + ".json")), s) << s.name;
}

TEST(Parse, RoundTripsCatalogueAndRandomInstances) {
    std::vector<InstanceSpec> specs = named_instances();
    for (const auto& s : dynamics_catalogue()) specs.push_back(s);
    InstanceGenerator gen(3);
    for (int i = 0; i < 100; ++i) specs.push_back(gen.next());
    specs.back().caps = Caps{1000, 12, 5000};
    specs.back().checks = {"theorem2", "lemma7"};
    specs.back().seed = 99;
    for (const auto& s : specs) {
        auto back = parse_instance(serialize(s));
        EXPECT_EQ(back, s) << s.name;
        EXPECT_EQ(serialize(back), serialize(s));
    }
}

TEST(Parse, HomomorphismFailureNamesTheTriple) {
    auto what = error_of(fixture("bad_homomorphism.json"));
    EXPECT_NE(what.find("(g, h, a) = (1, 1, [0,0,1])"), std::string::npos) << what;
}

TEST(Parse, SyntaxErrorCarriesLineAndColumn) {
    try {
        parse_instance(fixture("bad_syntax.json"));
        FAIL() << "expected an input error";
    } catch (const InputError& e) {
        EXPECT_EQ(e.line(), 5u);
        EXPECT_GT(e.column(), 0u);
    }
}

TEST(Parse, StructuralErrorsNameTheJsonPath) {
    const std::pair<const char*, const char*> cases[] = {
        {R"({"ring": {"kind": "octonions"}, "group": {"kind": "cyclic", "orders": [2]}, "action": {"kind": "trivial"}})",
         "/ring/kind"},
        {R"({"ring": {"kind": "modular", "n": 2}, "group": {"kind": "cyclic", "orders": [2]}})", "missing field 'action'"},
        {R"({"ring": {"kind": "modular", "n": 2, "m": 1}, "group": {"kind": "cyclic", "orders": [2]},
             "action": {"kind": "trivial"}})",
         "unknown field 'm'"},
        {R"({"dynamics": {"points": 3, "group": {"kind": "cyclic", "orders": [2]},
             "action": {"kind": "images", "images": {"1": [0, 0, 1]}}}})",
         "/dynamics"},
        {R"({"ring": {"kind": "functions", "points": 2, "q": 2}, "group": {"kind": "cyclic", "orders": [2]},
             "action": {"kind": "generators", "images": {"1": {"permute": [0, 0]}}}})",
         "not a bijection"},
        {R"({"ring": {"kind": "matrices", "size": 2, "p": 2}, "group": {"kind": "cyclic", "orders": [2]},
             "action": {"kind": "generators", "images": {"1": {"conjugate": [1, 1, 1, 1]}}}})",
         "not a unit"},
        {R"({"ring": {"kind": "modular", "n": 2}, "group": {"kind": "cyclic", "orders": [2]},
             "action": {"kind": "generators", "images": {"7": {"power": 1}}}})",
         "/action/images"},
        {R"({"dynamics": {"points": 4, "group": {"kind": "cyclic", "orders": [3]}, "action": {"kind": "regular"}}})",
         "|X| = |G|"},
        {R"({"ring": {"kind": "modular", "n": 2}, "group": {"kind": "cyclic", "orders": [2]},
             "action": {"kind": "trivial"}, "dynamics": {}})",
         "exactly one"},
        {R"([1, 2])", "JSON object"},
    };
    for (const auto& [text, needle] : cases) {
        auto what = error_of(text);
        EXPECT_NE(what.find(needle), std::string::npos) << "got: " << what;
    }
}

TEST(Parse, RejectsIdentityMovingTables) {
    auto what = error_of(R"({"ring": {"kind": "functions", "points": 2, "q": 2},
        "group": {"kind": "cyclic", "orders": [2]},
        "action": {"kind": "table", "images": {"0": {"permute": [1, 0]}, "1": {"permute": [1, 0]}}}})");
    EXPECT_NE(what.find("identity"), std::string::npos) << what;
}

TEST(Caps, EnvironmentOverridesFile) {
    InstanceSpec spec = *named_instance("swap_f2x2");
    spec.caps = Caps{100, 64, 1000};
    EXPECT_EQ(effective_caps(spec).enumeration, 100u);
    setenv("SKEWRING_ENUM_CAP", "77", 1);
    EXPECT_EQ(effective_caps(spec).enumeration, 77u);
    setenv("SKEWRING_ENUM_CAP", "lots", 1);
    EXPECT_THROW(effective_caps(spec), InputError);
    unsetenv("SKEWRING_ENUM_CAP");
}
