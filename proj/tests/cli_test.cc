// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "milnor/cli/dispatch.h"

using namespace milnor;

namespace {

struct Run {
  int code;
  std::string out, err;
  nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "milnor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(MILNOR_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("cli: usage and help exit codes") {
  CHECK(run({}).code == kExitInput);
  CHECK(run({"arr"}).code == kExitInput);
  CHECK(run({"frobnicate"}).code == kExitInput);
  Run h = run({"--help"});
  CHECK(h.code == kExitOk);
  CHECK(h.out.find("multinet") != std::string::npos);
}

TEST_CASE("cli: report envelope") {
  Run r = run({"arr", "validate", "-a", fx("braid.json")});
  REQUIRE(r.code == kExitOk);
  auto j = r.report();
  CHECK(j["schema"] == "milnor-report/1");
  CHECK(j["command"] == "arr validate");
  CHECK(j["results"]["hyperplanes"] == 6);
  CHECK(j["results"]["rank"] == 3);
  REQUIRE(j["inputs"].size() == 1);
  std::string digest = j["inputs"][fx("braid.json")];
  CHECK(digest.size() == 64);
  CHECK(j["timing"]["milliseconds"].is_number_integer());
  // Identical input, identical digest.
  CHECK(run({"arr", "validate", "-a", fx("braid.json")}).report()["inputs"] == j["inputs"]);
}

TEST_CASE("cli: input errors exit 2") {
  CHECK(run({"arr", "validate", "-a", "/nonexistent.json"}).code == kExitInput);
  CHECK(run({"arr", "validate"}).code == kExitInput);
  CHECK(run({"cover", "h1", "-a", fx("braid.json"), "--chi", "1,1", "--order", "6"}).code == kExitInput);
  CHECK(run({"cover", "h1", "-a", fx("braid.json"), "--chi", "1,x,1,1,1,1", "--order", "6"}).code == kExitInput);
  CHECK(run({"cover", "h1", "-a", fx("braid.json"), "--chi", "1,1,1,1,1,1"}).code == kExitInput);
  CHECK(run({"cover", "h1", "-a", fx("braid.json"), "--strat", fx("ccm_strat.json"), "--chi",
             fx("ccm_character.json")})
            .code == kExitInput);
  CHECK(run({"milnor", "pipeline", "-a", fx("b3.json"), "-n", fx("b3net.json"), "--hyperplane", "nope"}).code ==
        kExitInput);
  // Hyperplane 3 has multiplicity 1, so the multinet is not pointed there.
  CHECK(run({"multinet", "pencil", "-a", fx("b3.json"), "-n", fx("b3net.json"), "--hyperplane", "3"}).code ==
        kExitInput);
  CHECK(run({"milnor", "polar-torsion", "-a", fx("deleted_b3.json"), "-m", "8,1,3,3,5,5,1,1", "--prime", "5"})
            .code == kExitInput);
  std::string bad = "/tmp/milnor_cli_test_bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK(run({"arr", "validate", "-a", bad}).code == kExitInput);
  std::remove(bad.c_str());
}

TEST_CASE("cli: multinet verify and pencil") {
  Run v = run({"multinet", "verify", "-a", fx("b3.json"), "-n", fx("b3net.json")});
  REQUIRE(v.code == kExitOk);
  auto j = v.report()["results"];
  CHECK(j["valid"] == true);
  CHECK(j["pointed"]["valid"] == true);
  CHECK(j["pointed"]["hyperplane"] == "z");
  Run p = run({"multinet", "pencil", "-a", fx("b3.json"), "-n", fx("b3net.json")});
  CHECK(p.code == kExitOk);
}

TEST_CASE("cli: covers") {
  auto h1 = run({"cover", "h1", "-a", fx("braid.json"), "--chi", "1,1,1,1,1,1", "--order", "6", "--integral"})
                .report()["results"];
  CHECK(h1["dimension"] == 7);
  CHECK(h1["integral"]["text"] == "Z^7");
  auto ccm = run({"cover", "charpoly", "--strat", fx("ccm_strat.json"), "--chi", fx("ccm_character.json"),
                  "--char", "2"})
                 .report()["results"];
  CHECK(ccm["text"] == "(t - 1)^6 (t^2 + t + 1)^2");
  CHECK(run({"cover", "h1", "--strat", fx("ccm_strat.json"), "--chi", fx("ccm_character.json"), "--char", "2"})
            .report()["warnings"]
            .size() == 1);
  CHECK(run({"cover", "h1", "--strat", fx("ccm_strat.json"), "--chi", fx("ccm_character.json")})
            .report()["warnings"]
            .empty());
  auto tor = run({"cover", "h1", "--presentation", fx("onetorus_presentation.json"), "--chi",
                  fx("onetorus_character.json"), "--integral"})
                 .report()["results"];
  CHECK(tor["integral"]["text"] == "Z^2 + Z_2^2");
  auto d = run({"cover", "delta", "-a", fx("braid.json"), "--chi", "1,1,1,1,1,1", "--order", "6"}).report();
  CHECK(d["results"]["euler_completed"] == true);
}

TEST_CASE("cli: B3 pipeline with integral confirmation") {
  Run r = run({"milnor", "pipeline", "-a", fx("b3.json"), "-n", fx("b3net.json"), "--hyperplane", "z", "--prime",
               "2", "--integral"});
  REQUIRE(r.code == kExitOk);
  auto j = r.report()["results"];
  CHECK(j["r"] == 3);
  CHECK(j["N"] == 15);
  CHECK(j["m"] == nlohmann::json({2, 1, 3, 3, 2, 2, 1, 1}));
  CHECK(j["certificate"]["bound"] == 2);
  CHECK(j["certificate"]["integral"]["text"] == "Z^7 + Z_2^2");
  // Over the cap the integral stage is skipped with a warning.
  auto w = run({"milnor", "pipeline", "-a", fx("b3.json"), "-n", fx("b3net.json"), "--prime", "2", "--integral",
                "--integral-cap", "1"})
               .report();
  CHECK(w["warnings"].size() == 1);
}

TEST_CASE("cli: milnor characters and multiplicities") {
  auto c = run({"milnor", "character", "-a", fx("pl4_polar.json")}).report()["results"];
  CHECK(c["N"] == 9);
  auto rec = run({"milnor", "recognize", "-a", fx("pl4_polar.json"), "--chi", "3,2,1,3", "--order", "9"})
                 .report()["results"];
  CHECK(rec["recognized"] == true);
  CHECK(rec["m"] == nlohmann::json({3, 2, 1, 3}));
  auto no = run({"milnor", "recognize", "-a", fx("pl4_polar.json"), "--chi", "2,2,7,7", "--order", "9"})
                .report()["results"];
  CHECK(no["recognized"] == false);
  // Not a character of the projective complement.
  CHECK(run({"milnor", "recognize", "-a", fx("pl4_polar.json"), "--chi", "1,1,1,1", "--order", "9"}).code ==
        kExitInput);
  auto f = run({"milnor", "find-m", "-a", fx("deleted_b3.json"), "--chi", "2,1,0,0,2,2,1,1", "--order", "3",
                "--prime", "2", "--forbid-two"})
               .report()["results"];
  CHECK(f["m"] == nlohmann::json({8, 1, 3, 3, 5, 5, 1, 1}));
}

TEST_CASE("cli: polarization commands") {
  auto t = run({"milnor", "polar-torsion", "-a", fx("deleted_b3.json"), "-m", "8,1,3,3,5,5,1,1", "--prime", "2"})
               .report()["results"];
  CHECK(t["bound"] == 108);
  auto p = run({"polarize", "-a", fx("deleted_b3.json"), "-m", "8,1,3,3,5,5,1,1"});
  CHECK(p.code == kExitOk);
}

TEST_CASE("cli: --out writes the report") {
  std::string path = "/tmp/milnor_cli_test_out.json";
  Run r = run({"arr", "poincare", "-a", fx("braid.json"), "--out", path});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["results"]["text"] == "6x^2 + 5x + 1");
  std::remove(path.c_str());
}
