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
#include "milnor/fpgroups/arrangement_group.h"
#include "milnor/fpgroups/schreier.h"
#include "milnor/fpgroups/sweep.h"
#include "milnor/milnor/milnor.h"
#include "test_util.h"

using namespace milnor;

namespace {

Arrangement load(const char* n) { return arrangement_from_json(load_fixture(n)); }

PointedMultinet b3_pointed(const Arrangement& a) {
  Multinet mn = multinet_from_json(load_fixture("b3net.json"), a);
  return *verify_pointed(a, mn, *mn.pointed).pointed;
}

Arrangement generic(std::size_t n) {
  std::vector<std::vector<long>> rows;
  for (long i = 0; i < static_cast<long>(n); ++i) rows.push_back({1, i, i * i});
  return Arrangement::integral(3, rows);
}

std::size_t p_rank(const AbelianGroup& g, long p) {
  std::size_t k = 0;
  for (const Int& t : g.torsion)
    if (t % p == 0) ++k;
  return k;
}

// All positive vectors of length n summing to s.
void compositions(std::size_t n, long s, std::vector<long>& cur, const std::function<void()>& f) {
  if (cur.size() + 1 == n) {
    if (s >= 1) {
      cur.push_back(s);
      f();
      cur.pop_back();
    }
    return;
  }
  for (long v = 1; v <= s - static_cast<long>(n - cur.size() - 1); ++v) {
    cur.push_back(v);
    compositions(n, s - v, cur, f);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("Milnor characters") {
  Arrangement braid = load("braid.json");
  auto s = milnor_character(braid, std::vector<long>(6, 1));
  CHECK(s.N == 6);
  CHECK(s.delta.exponents == std::vector<long>(6, 1));
  CHECK_FALSE(s.gcd_warning);
  auto d = milnor_character(load("deleted_b3.json"), {2, 1, 3, 3, 2, 2, 1, 1});
  CHECK(d.N == 15);
  CHECK(d.delta.is_projective());
  auto one = milnor_character(Arrangement::integral(1, {{1}}), {1});
  CHECK(one.N == 1);
  CHECK(one.delta.is_trivial());
  CHECK(milnor_character(braid, std::vector<long>(6, 2)).gcd_warning);
  CHECK_THROWS(milnor_character(braid, {1, 1}));
}

TEST_CASE("recognizing Milnor fiber covers") {
  Arrangement braid = load("braid.json");
  Arrangement del = load("deleted_b3.json");
  Arrangement pl4 = load("pl4_polar.json");
  const std::pair<const Arrangement*, std::vector<long>> cases[] = {
      {&braid, {1, 1, 1, 1, 1, 1}}, {&braid, {1, 2, 3, 1, 2, 5}}, {&del, {2, 1, 3, 3, 2, 2, 1, 1}},
      {&del, {8, 1, 3, 3, 5, 5, 1, 1}}, {&pl4, {3, 2, 1, 3}}};
  for (const auto& [a, m] : cases) {
    auto got = recognize_milnor_cover(*a, milnor_character(*a, m).delta);
    REQUIRE(got);
    CHECK(*got == m);
  }
  // A unit multiple of delta is the same cover.
  Character seven{15, {14, 7, 6, 6, 14, 14, 7, 7}};
  CHECK(recognize_milnor_cover(del, seven) == std::vector<long>{2, 1, 3, 3, 2, 2, 1, 1});
  // Simple arrangement, chi = k delta mod r.
  for (long r : {2L, 3L, 6L}) {
    for (long k = 1; k < r; ++k) {
      if (gcd_long(k, r) != 1) continue;
      Character chi{r, std::vector<long>(6, k)};
      CHECK(recognize_milnor_cover(braid, chi).has_value() == (r == 6));
      CHECK(dominates(std::vector<long>(6, 1), chi));
    }
  }
  CHECK_FALSE(dominates(std::vector<long>(6, 1), Character{3, {1, 2, 1, 2, 1, 2}}));
  CHECK(dominates({2, 1, 3, 3, 2, 2, 1, 1}, Character{3, {2, 1, 0, 0, 2, 2, 1, 1}}));
  CHECK(dominates({8, 1, 3, 3, 5, 5, 1, 1}, Character{3, {1, 2, 0, 0, 1, 1, 2, 2}}));
  CHECK_THROWS_AS(recognize_milnor_cover(braid, Character{4, {1, 1, 1, 1, 1, 1}}), std::invalid_argument);
}

TEST_CASE("multiplicity search on the deleted B3 arrangement") {
  Arrangement del = load("deleted_b3.json");
  Character chi3{3, {2, 1, 0, 0, 2, 2, 1, 1}};
  auto c = find_multiplicities(del, chi3, 2);
  CHECK(c.m == std::vector<long>{2, 1, 3, 3, 2, 2, 1, 1});
  CHECK(c.N == 15);
  auto f = find_multiplicities(del, chi3, 2, {true, 0});
  CHECK(f.m == std::vector<long>{8, 1, 3, 3, 5, 5, 1, 1});
  CHECK(f.N == 27);
  CHECK_THROWS_AS(find_multiplicities(del, chi3, 2, {false, 14}), std::invalid_argument);
  CHECK_THROWS_AS(find_multiplicities(del, chi3, 3), std::invalid_argument);
  CHECK_THROWS_AS(find_multiplicities(del, Character{3, {1, 0, 0, 0, 0, 0, 0, 0}}, 2),
                  std::invalid_argument);
}

TEST_CASE("property: multiplicity search is minimal") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 3 + rng() % 3;
    const long r = 2 + static_cast<long>(rng() % 4);
    long p = 0;
    for (long q : {2L, 3L, 5L})
      if (r % q != 0 && (p == 0 || rng() % 2)) p = q;
    Character chi{r, {}};
    for (;;) {
      chi.exponents.clear();
      long s = 0;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        chi.exponents.push_back(static_cast<long>(rng() % r));
        s += chi.exponents.back();
      }
      chi.exponents.push_back(mod_floor(-s, r));
      if (chi.is_surjective()) break;
    }
    const bool forbid = rng() % 2;
    Arrangement a = generic(n);
    auto c = find_multiplicities(a, chi, p, {forbid, 0});
    CHECK(c.N % p != 0);
    CHECK(std::accumulate(c.m.begin(), c.m.end(), 0L) == c.N);
    CHECK(dominates(c.m, chi));
    for (std::size_t h = 0; h < n; ++h) {
      CHECK(mod_floor(c.m[h] - c.k * chi.exponents[h], r) == 0);
      if (forbid) CHECK(c.m[h] != 2);
    }
    // Nothing smaller works.
    bool smaller = false;
    std::vector<long> cur;
    for (long s = n; s < c.N && !smaller; ++s)
      compositions(n, s, cur, [&] {
        if (s % p == 0) return;
        if (forbid && std::find(cur.begin(), cur.end(), 2L) != cur.end()) return;
        for (long k = 1; k < r; ++k) {
          if (gcd_long(k, r) != 1) continue;
          bool ok = true;
          for (std::size_t h = 0; h < n && ok; ++h) ok = mod_floor(cur[h] - k * chi.exponents[h], r) == 0;
          if (ok) smaller = true;
        }
      });
    CHECK_FALSE(smaller);
  }
}

TEST_CASE("B3 pointed multinet pipeline") {
  Arrangement b3 = load("b3.json");
  PointedMultinet pm = b3_pointed(b3);
  PipelineOptions opt;
  opt.prime = 2;
  opt.integral = true;
  PipelineResult res = multinet_torsion_pipeline(b3, pm, opt);
  CHECK(res.r == 3);
  CHECK(res.chi.exponents == std::vector<long>{2, 1, 0, 0, 2, 2, 1, 1});
  CHECK(res.choice.m == std::vector<long>{2, 1, 3, 3, 2, 2, 1, 1});
  CHECK(res.choice.N == 15);
  CHECK(res.depths0 == std::vector<std::size_t>{0, 0});
  CHECK(res.depthsp == std::vector<std::size_t>{1, 1});
  const TorsionCertificate& c = res.certificate;
  CHECK(c.prime == 2);
  CHECK(c.degree == 1);
  CHECK(c.bound == 2);
  CHECK(c.dim0 == 7);
  REQUIRE(c.integral);
  CHECK(to_string(*c.integral) == "Z^7 + Z_2^2");
  REQUIRE(c.charpoly);
  CHECK(to_string(*c.charpoly) == "(t - 1)^7 (t^2 + t + 1)");
  CHECK(c.chain.size() >= 8);
  auto j = to_json(c);
  CHECK(j["integral"]["rank"] == 7);
  CHECK(j["chain"][0]["hyperplane"] == "z");

  opt.forbid_two = true;
  PipelineResult f = multinet_torsion_pipeline(b3, pm, opt);
  CHECK(f.choice.m == std::vector<long>{8, 1, 3, 3, 5, 5, 1, 1});
  REQUIRE(f.certificate.integral);
  CHECK(*f.certificate.integral == *c.integral);

  // Auto prime is 2; an explicit r is honored; p must divide m_H.
  PipelineOptions five;
  five.r = 5;
  auto g = multinet_torsion_pipeline(b3, pm, five);
  CHECK(g.certificate.prime == 2);
  CHECK(g.chi.exponents == std::vector<long>{2, 3, 0, 0, 4, 4, 1, 1});
  PipelineOptions bad;
  bad.prime = 3;
  CHECK_THROWS_AS(multinet_torsion_pipeline(b3, pm, bad), std::invalid_argument);
  bad.prime = 2;
  bad.r = 4;
  CHECK_THROWS_AS(multinet_torsion_pipeline(b3, pm, bad), std::invalid_argument);
  // The integral check is skipped above the cap.
  PipelineOptions capped = opt;
  capped.integral_cap = 10;
  CHECK_FALSE(multinet_torsion_pipeline(b3, pm, capped).certificate.integral);
}

TEST_CASE("transfer: the 3-fold cover has no more 2-torsion than the Milnor fiber") {
  Arrangement del = load("deleted_b3.json");
  Presentation p = sweep_presentation(del, true);
  AbelianGroup y = integral_h1_kernel(p, Character{3, {2, 1, 0, 0, 2, 2, 1, 1}});
  AbelianGroup f = integral_h1_kernel(p, milnor_character(del, {2, 1, 3, 3, 2, 2, 1, 1}).delta);
  CHECK(y.rank == 7);
  CHECK(p_rank(y, 2) >= 2);
  CHECK(p_rank(y, 2) <= p_rank(f, 2));
  CHECK(f == AbelianGroup{7, {2, 2}});
}

TEST_CASE("polarization of deleted B3") {
  Arrangement del = load("deleted_b3.json");
  const std::vector<long> m{8, 1, 3, 3, 5, 5, 1, 1};
  PolarDelta d0 = polarized_delta(del, m, 0);
  PolarDelta d2 = polarized_delta(del, m, 2);
  CHECK(d0.polarization.result.size() == 27);
  CHECK(d0.polarization.rank == 8);
  CHECK(d0.polarization.n(3) == 5);
  UPoly diff = d2.delta - d0.delta;
  for (const auto& [deg, row] : diff.c)
    for (const auto& [k, v] : row) {
      if (v == 0) continue;
      CHECK(k == 3);
      CHECK((deg == 6 || deg == 7));
    }
  CHECK(diff.at(6, 3) == 108);
  // Trivial character: Poincare polynomial of U(B).
  IntPoly expect{1, 7, 12};
  for (IntPoly f : {IntPoly{1, 7}, IntPoly{1, 2}, IntPoly{1, 2}, IntPoly{1, 4}, IntPoly{1, 4}})
    expect = poly_mul(expect, f);
  for (std::size_t deg = 0; deg < expect.size(); ++deg) CHECK(d0.delta.at(deg, 1) == expect[deg]);
  CHECK(d2.delta.at(6, 1) == expect[6]);
  // Each order-3 character: pencils give (8-2)(3-2)(3-2)(5-2)(5-2) x^5.
  std::vector<PoincareFactor> pencils;
  Character tail{d0.chi.order, {d0.chi.exponents.begin() + 8, d0.chi.exponents.end()}};
  for (long x : m) pencils.push_back(pencil_factor(x));
  UPoly pp = delta_product(pencils, tail);
  CHECK(pp.at(5, 3) == 2 * 54);
  CHECK(pp.at(6, 3) == 0);

  TorsionCertificate c = polarization_torsion(del, m, 2);
  std::size_t n3 = 0;
  for (long x : m) n3 += x >= 3;
  CHECK(c.degree == 1 + n3);
  CHECK(c.degree == 6);
  CHECK(c.bound == 108);
  CHECK(c.chain[3]["text"] == "108u3x^6");

  CharPoly delta6 = polarized_milnor_delta(del, m, 2, 6);
  CHECK(delta6 == CharPoly{{{1, 11968}, {3, 54}}});
  CHECK(to_string(delta6) == "(t - 1)^11968 (t^2 + t + 1)^54");
  CHECK(delta6.e.at(1) == d2.delta.at(6, 1));

  CHECK_THROWS_AS(polarization_torsion(del, {2, 1, 3, 3, 2, 2, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(polarization_torsion(del, {8, 1, 3, 3, 5, 5, 1, 2}, 2), std::invalid_argument);
  CHECK_THROWS_AS(polarized_milnor_delta(del, m, 3, 6), std::invalid_argument);
}

TEST_CASE("polarized delta of a simple arrangement is its own Milnor delta") {
  Arrangement braid = load("braid.json");
  CHECK(polarized_milnor_delta(braid, std::vector<long>(6, 1), 0, 1) == CharPoly{{{1, 5}, {3, 1}}});
  PolarDelta d = polarized_delta(braid, std::vector<long>(6, 1), 0);
  JumpSource s = JumpSource::arrangement(braid);
  CHECK(d.delta == delta_u_poly(s, Character{6, std::vector<long>(6, 1)}, 0));
  Arrangement flat = Arrangement::integral(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}});
  CHECK_THROWS_AS(polarized_delta(flat, std::vector<long>(4, 1), 0), std::invalid_argument);
}

TEST_CASE("monomial pointed multinet pipeline") {
  auto [a, pm] = monomial_multinet(3);
  PipelineOptions opt;
  opt.prime = 3;
  opt.r = 7;
  PipelineResult res = multinet_torsion_pipeline(a, pm, opt);
  CHECK(res.choice.m == std::vector<long>{3, 4, 6, 6, 6, 1, 1, 1, 7, 7, 7});
  CHECK(res.choice.N == 49);
  CHECK(std::all_of(res.depths0.begin(), res.depths0.end(), [](std::size_t d) { return d == 0; }));
  CHECK(std::all_of(res.depthsp.begin(), res.depthsp.end(), [](std::size_t d) { return d > 0; }));
  CHECK(res.certificate.prime == 3);
  CHECK(res.certificate.bound >= 1);
  CHECK(res.certificate.dim0 == 10);
}
