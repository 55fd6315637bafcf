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

#include <numeric>
#include <random>

#include "doctest.h"
#include "milnor/fpgroups/fox.h"
#include "milnor/fpgroups/schreier.h"
#include "milnor/jumploci/jumploci.h"
#include "test_util.h"

using namespace milnor;

namespace {

Arrangement load(const char* n) { return arrangement_from_json(load_fixture(n)); }
JumpSource strat(const char* n) { return JumpSource::stratified(stratification_from_json(load_fixture(n))); }
Presentation one_torus() { return presentation_from_json(load_fixture("onetorus_presentation.json")); }

CharPoly cp(std::map<long, long> e) { return CharPoly{std::move(e)}; }

Character reduce_mod(const std::vector<long>& v, long r) {
  Character c{r, {}};
  for (long x : v) c.exponents.push_back(mod_floor(x, r));
  return c;
}

Character random_projective(std::mt19937_64& rng, std::size_t n, long r) {
  for (;;) {
    Character c{r, {}};
    long s = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      c.exponents.push_back(static_cast<long>(rng() % r));
      s += c.exponents.back();
    }
    c.exponents.push_back(mod_floor(-s, r));
    if (c.is_surjective()) return c;
  }
}

}  // namespace

TEST_CASE("membership in translated tori") {
  TranslatedTorus t{1, {{1, 0}}, Character{2, {0, 1}}, 1, {}};
  CHECK(char_in_component(Character{2, {0, 1}}, t, 0));
  CHECK(char_in_component(Character{6, {2, 3}}, t, 0));
  CHECK_FALSE(char_in_component(Character{3, {1, 0}}, t, 0));
  CHECK(char_in_component(Character{3, {1, 0}}, t, 2));
  // Deleted B3: the order-3 image lies on the pencil torus.
  TranslatedTorus pen{1, {{2, -2, 0, 0, -1, -1, 1, 1}}, Character{1, std::vector<long>(8, 0)}, 1, {}};
  CHECK(char_in_component(Character{3, {2, 1, 0, 0, 2, 2, 1, 1}}, pen, 0));
  CHECK_FALSE(char_in_component(Character{3, {1, 1, 0, 0, 2, 2, 1, 1}}, pen, 0));
  // CCM: rho T2 has -1 in slot 3.
  Stratification ccm = stratification_from_json(load_fixture("ccm_strat.json"));
  Character z{3, {1, 1, 0, 0, 0, 0}};
  CHECK_FALSE(char_in_component(z, ccm.components[1], 0));
  CHECK(char_in_component(z, ccm.components[1], 2));
  TranslatedTorus only3 = t;
  only3.chars = {Applicability::Kind::kOnly, {3}};
  CHECK_THROWS_AS(char_in_component(Character{2, {0, 1}}, only3, 0), std::invalid_argument);
  CHECK_THROWS_AS(char_in_component(Character{2, {0, 1}}, t, 2), std::invalid_argument);
}

TEST_CASE("stratification files") {
  auto j = load_fixture("ccm_strat.json");
  Stratification s = stratification_from_json(j);
  CHECK(s.rank == 6);
  CHECK(s.components.size() == 2);
  CHECK(to_json(stratification_from_json(to_json(s))) == to_json(s));
  auto bad = j;
  bad["components"][0]["basis"] = {{0, 0, 2, 0, 0, 0}};
  CHECK_THROWS_AS(stratification_from_json(bad), std::invalid_argument);
  bad = j;
  bad["components"][0]["depth"] = 0;
  CHECK_THROWS_AS(stratification_from_json(bad), std::invalid_argument);
}

TEST_CASE("jump depths") {
  JumpSource ccm = strat("ccm_strat.json");
  Character z{3, {1, 1, 0, 0, 0, 0}};
  CHECK(ccm.depth(1, z, 2) == 2);
  CHECK(ccm.depth(1, z, 0) == 0);
  CHECK(ccm.depth(1, Character{3, std::vector<long>(6, 0)}, 0) == 6);
  CHECK(ccm.depth(1, Character{5, {0, 0, 1, 2, 3, 4}}, 0) == 4);
  CHECK_THROWS_AS(ccm.depth(2, z, 0), std::invalid_argument);
  for (std::size_t n = 1; n <= 5; ++n) {
    JumpSource f = JumpSource::fox(Presentation{n, {}});
    Character rho{7, std::vector<long>(n, 0)};
    CHECK(f.depth(1, rho, 0) == n);
    rho.exponents[0] = 3;
    CHECK(f.depth(1, rho, 0) == n - 1);
    CHECK(f.depth(0, rho, 0) == 0);
  }
}

TEST_CASE("punctured lines and pencils") {
  CHECK(poin_punctured_line(4, false) == IntPoly{0, 3});
  CHECK(poin_punctured_line(4, true) == IntPoly{1, 4});
  CHECK(poin_punctured_line(1, true) == IntPoly{1});
  CHECK(poin_punctured_line(1, false) == IntPoly{1});
  CHECK(pencil_poincare(1, true) == IntPoly{1});
  CHECK(pencil_poincare(4, true) == IntPoly{1, 3});
  CHECK(pencil_poincare(4, false) == IntPoly{0, 2});
  CHECK(pencil_poincare(2, false).empty());
}

TEST_CASE("cover homology of the one-torus and CCM examples") {
  JumpSource ot = strat("onetorus_strat.json");
  JumpSource otf = JumpSource::fox(one_torus());
  Character chi = character_from_json(load_fixture("onetorus_character.json"));
  for (const JumpSource* s : {&ot, &otf}) {
    CHECK(cover_homology(*s, chi, 0, 1) == 2);
    CHECK(cover_homology(*s, chi, 2, 1) == 4);
    CHECK(monodromy_charpoly(*s, chi, 2, 1) == cp({{1, 2}, {3, 1}}));
    CHECK(monodromy_charpoly(*s, chi, 0, 1) == cp({{1, 2}}));
    auto cert = torsion_detect(*s, chi, 2, 1);
    REQUIRE(cert);
    CHECK(cert->bound == 2);
    CHECK(cert->r_minus_one);
  }
  CHECK(to_string(monodromy_charpoly(ot, chi, 2, 1)) == "(t - 1)^2 (t^2 + t + 1)");
  JumpSource ccm = strat("ccm_strat.json");
  Character z = character_from_json(load_fixture("ccm_character.json"));
  CHECK(cover_homology(ccm, z, 0, 1) == 6);
  CHECK(cover_homology(ccm, z, 2, 1) == 10);
  CHECK(monodromy_charpoly(ccm, z, 2, 1) == cp({{1, 6}, {3, 2}}));
  auto cert = torsion_detect(ccm, z, 2, 1);
  REQUIRE(cert);
  CHECK(cert->bound == 4);
  CHECK(cover_homology(ccm, Character{1, std::vector<long>(6, 0)}, 0, 1) == 6);
  CHECK_THROWS_AS(cover_homology(ccm, Character{6, {1, 1, 1, 1, 1, 1}}, 2, 1), std::invalid_argument);
}

TEST_CASE("braid arrangement from its sweep presentation") {
  JumpSource b = JumpSource::arrangement(load("braid.json"));
  CHECK(b.euler_completed());
  Character delta{6, {1, 1, 1, 1, 1, 1}};
  UPoly u = delta_u_poly(b, delta, 0);
  UPoly expect;
  expect.add(0, 1, 1);
  expect.add(1, 1, 5);
  expect.add(1, 3, 2);
  expect.add(2, 1, 6);
  expect.add(2, 2, 2);
  expect.add(2, 3, 6);
  expect.add(2, 6, 4);
  CHECK(u == expect);
  CHECK(to_string(u) == "u1 + (5u1 + 2u3)x + (6u1 + 2u2 + 6u3 + 4u6)x^2");
  CHECK(cover_homology(b, delta, 0, 1) == 7);
  CHECK(monodromy_charpoly(b, delta, 0, 1) == cp({{1, 5}, {3, 1}}));
  CHECK_FALSE(torsion_detect(b, delta, 5, 1));
  CHECK(u == delta_u_poly(b, delta, 0, {true}));
}

TEST_CASE("deleted B3 covers along the pencil direction") {
  JumpSource d = JumpSource::arrangement(load("deleted_b3.json"));
  std::vector<long> dir{2, -2, 0, 0, -1, -1, 1, 1};
  for (long r : {3L, 5L}) {
    Character chi = reduce_mod(dir, r);
    CHECK(cover_homology(d, chi, 0, 1) == 7);
    CHECK(cover_homology(d, chi, 2, 1) >= static_cast<std::size_t>(7 + (r - 1)));
  }
  auto cert = torsion_detect(d, reduce_mod(dir, 3), 2, 1);
  REQUIRE(cert);
  CHECK(cert->bound == 2);
  CHECK(cert->r_minus_one);
}

TEST_CASE("delta products") {
  // Product of pencils, all restrictions surjective.
  std::vector<long> ms{3, 4, 5};
  std::vector<PoincareFactor> f;
  Character chi{7, {}};
  for (long m : ms) {
    f.push_back(pencil_factor(m));
    for (long i = 0; i + 1 < m; ++i) chi.exponents.push_back(1);
    chi.exponents.push_back(mod_floor(-(m - 1), 7));
  }
  UPoly u = delta_product(f, chi);
  IntPoly triv{1};
  for (long m : ms) triv = poly_mul(triv, IntPoly{1, m - 1});
  for (std::size_t d = 0; d < triv.size(); ++d) CHECK(u.at(d, 1) == triv[d]);
  CHECK(u.at(3, 7) == Int(6 * 1 * 2 * 3));
  CHECK(u.at(2, 7) == 0);
  // Single factor agrees with delta_u_poly.
  JumpSource b = JumpSource::arrangement(load("braid.json"));
  Character delta{6, {1, 1, 1, 1, 1, 1}};
  CHECK(delta_product({source_factor(b, 0)}, delta) == delta_u_poly(b, delta, 0));
  // Two copies of P_3, chi = (1,1,-1,-1) restricted per factor, r = 2.
  UPoly two = delta_product({pencil_factor(3), pencil_factor(3)}, Character{2, {1, 0, 1, 1, 0, 1}});
  CHECK(two.at(0, 1) == 1);
  CHECK(two.at(2, 2) == 1);
  CHECK_THROWS_AS(delta_product({pencil_factor(3)}, Character{2, {1, 1}}), std::invalid_argument);
}

TEST_CASE("free groups: delta polynomial") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (long r : {2L, 6L, 12L}) {
      JumpSource f = JumpSource::fox(Presentation{n, {}});
      Character chi{r, std::vector<long>(n, 0)};
      chi.exponents[0] = 1;
      UPoly u = delta_u_poly(f, chi, 0);
      CHECK(u.at(0, 1) == 1);
      CHECK(u.at(1, 1) == static_cast<long>(n));
      for (long k : divisors(r))
        if (k > 1) CHECK(u.at(1, k) == static_cast<long>(n - 1) * euler_phi(k));
    }
}

TEST_CASE("property: cover homology equals the kernel rank (Fox source)") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 110; ++trial) {
    std::size_t g = 1 + rng() % 3;
    long r = 1 + static_cast<long>(rng() % 6);
    Character chi{r, {}};
    for (std::size_t i = 0; i < g; ++i) chi.exponents.push_back(static_cast<long>(rng() % r));
    chi.exponents[rng() % g] = 1 % r;
    Presentation p{g, {}};
    std::size_t nrel = rng() % 4;
    for (std::size_t k = 0; k < nrel; ++k) {
      Word w;
      for (std::size_t i = 0, len = 2 + rng() % 5; i < len; ++i) {
        int x = static_cast<int>(rng() % g) + 1;
        w.push_back(rng() % 2 ? x : -x);
      }
      std::size_t unit = 0;
      while (gcd_long(chi.exponents[unit], r) != 1) ++unit;
      long fix = mod_floor(-chi.value(w) * inverse_mod(chi.exponents[unit], r), r);
      for (long i = 0; i < fix; ++i) w.push_back(static_cast<int>(unit) + 1);
      p.relators.push_back(w);
    }
    p.normalize();
    JumpSource s = JumpSource::fox(p);
    std::size_t h = cover_homology(s, chi, 0, 1);
    CHECK(h == integral_h1_kernel(p, chi).rank);
    CHECK(h == cover_homology(s, chi, 0, 1, {true}));
    // eko2: b1 plus the jumps away from 1.
    std::size_t rhs = s.betti()[1];
    for (long j = 1; j < r; ++j)
      if (!chi.power(j).is_trivial()) rhs += s.depth(1, chi.power(j), 0);
    CHECK(h == rhs);
    for (long k : divisors(r)) {
      Character rho = chi.power(r / k);
      CHECK(phi_module_rank(p, chi, k) ==
            static_cast<std::size_t>(euler_phi(k)) * s.depth(1, rho, 0));
    }
  }
}

TEST_CASE("property: characteristic monotonicity and Galois divisibility") {
  std::mt19937_64 rng(22);
  Arrangement braid = load("braid.json");
  Arrangement db3 = load("deleted_b3.json");
  JumpSource sources[] = {JumpSource::arrangement(braid), JumpSource::arrangement(db3)};
  const long primes[] = {2, 3, 5};
  for (int trial = 0; trial < 100; ++trial) {
    const JumpSource& s = sources[trial % 2];
    long r = 2 + static_cast<long>(rng() % 9);
    Character chi = random_projective(rng, s.ambient(), r);
    for (long p : primes) {
      if (r % p == 0) continue;
      std::size_t h0 = cover_homology(s, chi, 0, 1), hp = cover_homology(s, chi, p, 1);
      CHECK(h0 <= hp);
      CharPoly c = monodromy_charpoly(s, chi, p, 1);
      CHECK(static_cast<std::size_t>(c.degree()) == hp);
      UPoly u = delta_u_poly(s, chi, p);
      for (const auto& [deg, row] : u.c)
        for (const auto& [k, v] : row) CHECK(v % euler_phi(k) == 0);
    }
    // Euler characteristic conservation in every characteristic.
    const long e = static_cast<long>(s.betti()[0]) - static_cast<long>(s.betti()[1]) +
                   static_cast<long>(s.betti()[2]);
    for (long j = 0; j < r; ++j) {
      Character rho = chi.power(j);
      for (long p : {0L, 2L, 3L}) {
        if (p && rho.order % p == 0) continue;
        IntPoly poin = s.poincare(rho, p);
        poin.resize(3, 0);
        CHECK(poin[0] - poin[1] + poin[2] == e);
      }
    }
  }
}

TEST_CASE("monodromy over F_p when p does not generate the units") {
  // 5 = 1 mod 4, so zeta_4 lies in F_5 and its two values are not conjugate.
  Presentation p{3, {{1, -3, 1, 2, 2, 2}, {-3, 1, 1, 3, 2, 2}}};
  Character chi{4, {1, 1, 1}};
  JumpSource s = JumpSource::fox(p);
  CHECK(s.depth(1, chi.power(1), 5) != s.depth(1, chi.power(3), 5));
  CharPoly c = monodromy_charpoly(s, chi, 5, 1);
  CHECK(c.e == std::map<long, long>{{1, 1}, {2, 1}});
  REQUIRE(c.modular.size() == 1);
  const ModularFactor& f = c.modular[0];
  CHECK(f.order == 4);
  REQUIRE(f.poly.size() == 2);
  CHECK(f.poly[1] == 1);
  CHECK((f.poly[0] == 2 || f.poly[0] == 3));
  CHECK(c.degree() == static_cast<long>(cover_homology(s, chi, 5, 1)));
  CHECK(to_string(c).find("over F_5") != std::string::npos);
  CHECK(monodromy_charpoly(s, chi, 0, 1).modular.empty());
  // Over F_3 the orbit {1, 3} is one Frobenius orbit.
  CHECK(monodromy_charpoly(s, chi, 3, 1).modular.empty());
}
