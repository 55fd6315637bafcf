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

#include "doctest.h"
#include "milnor/multinet/multinet.h"
#include "test_util.h"

using namespace milnor;

namespace {

Arrangement load(const char* n) { return arrangement_from_json(load_fixture(n)); }

}  // namespace

TEST_CASE("B3 multinet and its pointed structure") {
  Arrangement a = load("b3.json");
  Multinet mn = multinet_from_json(load_fixture("b3net.json"), a);
  auto rep = verify_multinet(a, mn);
  CHECK(rep.valid);
  CHECK(rep.k == 3);
  CHECK(rep.d == 4);
  long total = 0;
  for (long m : mn.m) total += m;
  CHECK(total == static_cast<long>(rep.k) * rep.d);
  for (const auto& [flat, nx] : rep.n_x) {
    long s = 0;
    for (auto h : flat) s += mn.m[h];
    CHECK(s == 3 * nx);
  }
  REQUIRE(mn.pointed);
  CHECK(*mn.pointed == 2);
  auto pr = verify_pointed(a, mn, 2);
  CHECK(pr.pointed.has_value());
  CHECK_FALSE(verify_pointed(a, mn, 3).pointed.has_value());

  Multinet broken = mn;
  broken.m[2] = 1;
  auto br = verify_multinet(a, broken);
  CHECK_FALSE(br.valid);
  bool weight_violation = false;
  for (const auto& v : br.violations)
    if (v.rfind("(1)", 0) == 0) weight_violation = true;
  CHECK(weight_violation);
}

TEST_CASE("braid net") {
  Arrangement a = load("braid.json");
  auto rep = verify_multinet(a, multinet_from_json(load_fixture("braid_net.json"), a));
  CHECK(rep.valid);
  CHECK(rep.d == 2);
  CHECK(rep.base_locus.size() == 4);
}

TEST_CASE("malformed partitions are rejected") {
  Arrangement a = load("braid.json");
  Multinet mn{{{0, 1}, {2, 3}, {4}}, {1, 1, 1, 1, 1, 1}, {}, {}};
  CHECK_THROWS(verify_multinet(a, mn));
  mn.parts = {{0, 1}, {1, 2, 3}, {4, 5}};
  CHECK_THROWS(verify_multinet(a, mn));
}

TEST_CASE("trivial construction on a single flat") {
  // Three or more lines through one point, one per class.
  for (long n = 3; n <= 6; ++n) {
    std::vector<std::vector<long>> rows;
    for (long i = 0; i < n; ++i) rows.push_back({1, i});
    Arrangement a = Arrangement::integral(2, rows);
    Multinet mn;
    for (long i = 0; i < n; ++i) mn.parts.push_back({static_cast<std::size_t>(i)});
    mn.m.assign(n, 1);
    auto rep = verify_multinet(a, mn);
    CHECK(rep.violations.empty());
    CHECK(rep.valid);
  }
}

TEST_CASE("monomial multinets") {
  for (long p : {2L, 3L, 5L}) {
    auto [a, pm] = monomial_multinet(p);
    CHECK(a.size() == static_cast<std::size_t>(3 + 3 * p));
    CHECK(pm.d == 2 * p);
    CHECK(pm.multinet.m[0] == p);
    Arrangement f = load(("monomial_" + std::to_string(p) + ".json").c_str());
    CHECK(to_json(f).dump() == to_json(a).dump());
    Multinet fn = multinet_from_json(load_fixture("monomial_" + std::to_string(p) + "_net.json"), f);
    CHECK(verify_pointed(f, fn, *fn.pointed).pointed.has_value());
  }
}

TEST_CASE("deletion pencil certificates") {
  Arrangement a = load("b3.json");
  Multinet mn = multinet_from_json(load_fixture("b3net.json"), a);
  auto pm = *verify_pointed(a, mn, 2).pointed;
  auto cert = deletion_pencil_certificate(a, pm);
  CHECK(cert.deleted.size() == 8);
  CHECK(cert.direction == std::vector<long>{-2, 2, 0, 0, 1, 1, -1, -1});
  CHECK(cert.normalized_direction() == std::vector<long>{2, -2, 0, 0, -1, -1, 1, 1});
  CHECK(cert.multiplier == 2);
  CHECK(cert.primes == std::vector<long>{2});
  long s = 0;
  for (long e : cert.direction) s += e;
  CHECK(s == 0);

  auto [m3, pm3] = monomial_multinet(3);
  auto c3 = deletion_pencil_certificate(m3, pm3);
  CHECK(c3.direction == std::vector<long>{3, -3, -1, -1, -1, 1, 1, 1, 0, 0, 0});
  CHECK(c3.multiplier == 3);
}
