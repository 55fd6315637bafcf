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

#include "milnor/cli/acceptance.h"

#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "milnor/algebra/matrix.h"
#include "milnor/fpgroups/fox.h"
#include "milnor/fpgroups/schreier.h"
#include "milnor/fpgroups/sweep.h"
#include "milnor/jumploci/jumploci.h"
#include "milnor/milnor/milnor.h"
#include "milnor/multinet/multinet.h"
#include "milnor/parallel/parallel.h"

namespace milnor {

namespace {

class Checks {
 public:
  explicit Checks(std::vector<std::string>& out) : out_(out) {}

  void expect(bool ok, const std::string& what) {
    if (!ok) out_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << show(got) << ", want " << show(want);
      out_.push_back(s.str());
    }
  }

 private:
  template <class T>
  static std::string show(const T& v) {
    if constexpr (requires { to_string(v); }) {
      return to_string(v);
    } else if constexpr (requires(std::ostream& o) { o << v; }) {
      std::ostringstream s;
      s << v;
      return s.str();
    } else {
      std::string out = "[";
      for (const auto& e : v) out += (out.size() > 1 ? ", " : "") + show(e);
      return out + "]";
    }
  }
  std::vector<std::string>& out_;
};

class Fixtures {
 public:
  explicit Fixtures(std::string dir) : dir_(std::move(dir)) {}
  nlohmann::json json(const std::string& name) const {
    std::ifstream in(dir_ + "/" + name);
    if (!in) throw std::runtime_error("missing fixture " + dir_ + "/" + name);
    return nlohmann::json::parse(in);
  }
  Arrangement arrangement(const std::string& name) const { return arrangement_from_json(json(name)); }
  PointedMultinet pointed(const Arrangement& a, const std::string& net) const {
    Multinet mn = multinet_from_json(json(net), a);
    if (!mn.pointed) throw std::runtime_error(net + " names no distinguished hyperplane");
    auto pr = verify_pointed(a, mn, *mn.pointed);
    if (!pr.pointed) throw std::runtime_error(net + " is not a pointed multinet");
    return *pr.pointed;
  }

 private:
  std::string dir_;
};

CharPoly phi(std::map<long, long> e) { return CharPoly{std::move(e), {}}; }

void onetorus(Checks& c, const Fixtures& fx) {
  Presentation p = presentation_from_json(fx.json("onetorus_presentation.json"));
  Character chi = character_from_json(fx.json("onetorus_character.json"));
  c.equal(integral_h1_kernel(p, chi), AbelianGroup{2, {2, 2}}, "H_1 of the 3-fold cover");
  JumpSource s = JumpSource::fox(p);
  c.equal(monodromy_charpoly(s, chi, 2, 1), phi({{1, 2}, {3, 1}}), "charpoly in characteristic 2");
  c.equal(monodromy_charpoly(s, chi, 0, 1), phi({{1, 2}}), "charpoly in characteristic 0");
}

void ccm(Checks& c, const Fixtures& fx) {
  JumpSource s = JumpSource::stratified(stratification_from_json(fx.json("ccm_strat.json")));
  Character chi = character_from_json(fx.json("ccm_character.json"));
  c.equal(cover_homology(s, chi, 0, 1), std::size_t{6}, "dim over C");
  c.equal(cover_homology(s, chi, 2, 1), std::size_t{10}, "dim in characteristic 2");
  c.equal(monodromy_charpoly(s, chi, 2, 1), phi({{1, 6}, {3, 2}}), "charpoly in characteristic 2");
  auto t = torsion_detect(s, chi, 2, 1);
  c.expect(t.has_value(), "torsion certificate expected");
  if (t) c.equal(t->bound, std::size_t{4}, "torsion bound");
}

void braid(Checks& c, const Fixtures& fx) {
  Arrangement a = fx.arrangement("braid.json");
  JumpSource s = JumpSource::arrangement(a);
  Character delta = milnor_character(a, std::vector<long>(a.size(), 1)).delta;
  UPoly want;
  want.add(0, 1, 1);
  want.add(1, 1, 5);
  want.add(1, 3, 2);
  want.add(2, 1, 6);
  want.add(2, 2, 2);
  want.add(2, 3, 6);
  want.add(2, 6, 4);
  c.equal(delta_u_poly(s, delta, 0), want, "Delta(u, x)");
  c.expect(s.euler_completed(), "degree 2 should be Euler-completed");
  c.equal(cover_homology(s, delta, 0, 1), std::size_t{7}, "b_1(F)");
  c.equal(integral_h1_kernel(sweep_presentation(a, true), delta), AbelianGroup{7, {}}, "H_1(F, Z)");
  c.equal(monodromy_charpoly(s, delta, 0, 1), phi({{1, 5}, {3, 1}}), "charpoly");
}

void deleted_b3(Checks& c, const Fixtures& fx) {
  Arrangement b3 = fx.arrangement("b3.json");
  Multinet mn = multinet_from_json(fx.json("b3net.json"), b3);
  c.expect(verify_multinet(b3, mn).valid, "B3 multinet should verify");
  PointedMultinet pm = fx.pointed(b3, "b3net.json");
  c.equal(b3.labels().at(pm.hyperplane), std::string("z"), "distinguished hyperplane");
  SmallPencilCert pen = deletion_pencil_certificate(b3, pm);
  c.equal(pen.normalized_direction(), std::vector<long>{2, -2, 0, 0, -1, -1, 1, 1}, "pencil direction");
  Arrangement del = pen.deleted;
  Character chi3{3, {2, 1, 0, 0, 2, 2, 1, 1}};
  auto m = find_multiplicities(del, chi3, 2);
  c.equal(m.m, std::vector<long>{2, 1, 3, 3, 2, 2, 1, 1}, "least multiplicities");
  c.equal(m.N, 15L, "N");
  auto m2 = find_multiplicities(del, chi3, 2, {true, 0});
  c.equal(m2.m, std::vector<long>{8, 1, 3, 3, 5, 5, 1, 1}, "multiplicities avoiding 2");

  PipelineOptions opt;
  opt.prime = 2;
  opt.integral = true;
  PipelineResult res = multinet_torsion_pipeline(b3, pm, opt);
  c.equal(res.choice.m, m.m, "pipeline multiplicities");
  c.expect(res.certificate.integral.has_value(), "integral confirmation expected");
  if (res.certificate.integral) c.equal(*res.certificate.integral, AbelianGroup{7, {2, 2}}, "H_1(F(A', m'), Z)");
  c.expect(res.certificate.charpoly.has_value(), "charpoly expected");
  if (res.certificate.charpoly) c.equal(*res.certificate.charpoly, phi({{1, 7}, {3, 1}}), "Delta_1 over F_2");

  JumpSource s = JumpSource::arrangement(del);
  for (long r : {3L, 5L}) {
    Character chi{r, {}};
    for (long e : pen.normalized_direction()) chi.exponents.push_back(mod_floor(e, r));
    c.equal(cover_homology(s, chi, 0, 1), std::size_t{7}, "dim over C, r = " + std::to_string(r));
    c.expect(cover_homology(s, chi, 2, 1) >= static_cast<std::size_t>(7 + r - 1),
             "dim in characteristic 2 below 7 + (r - 1), r = " + std::to_string(r));
  }
}

void polarization(Checks& c, const Fixtures& fx) {
  Arrangement del = fx.arrangement("deleted_b3.json");
  const std::vector<long> m{8, 1, 3, 3, 5, 5, 1, 1};
  PolarDelta d0 = polarized_delta(del, m, 0);
  PolarDelta d2 = polarized_delta(del, m, 2);
  c.equal(d0.polarization.result.size(), std::size_t{27}, "hyperplanes of B");
  c.equal(d0.polarization.rank, std::size_t{8}, "rank of B");
  c.equal(d0.polarization.n(3), std::size_t{5}, "n_3");
  UPoly diff = d2.delta - d0.delta;
  UPoly at6;
  for (const auto& [k, v] : diff.c[6])
    if (v != 0) at6.add(6, k, v);
  UPoly want;
  want.add(6, 3, 108);
  c.equal(at6, want, "x^6 coefficient of the difference");
  TorsionCertificate t = polarization_torsion(del, m, 2);
  c.equal(t.degree, std::size_t{6}, "torsion degree");
  c.equal(t.bound, std::size_t{108}, "torsion bound");
  CharPoly delta6 = polarized_milnor_delta(del, m, 2, 6);
  c.equal(delta6, phi({{1, 11968}, {3, 54}}), "Delta_6 in characteristic 2");
  IntPoly poin{1, 7, 12};
  for (IntPoly f : {IntPoly{1, 7}, IntPoly{1, 2}, IntPoly{1, 2}, IntPoly{1, 4}, IntPoly{1, 4}})
    poin = poly_mul(poin, f);
  for (std::size_t q = 0; q < poin.size(); ++q)
    c.equal(d0.delta.at(q, 1), poin[q], "untwisted Poincare coefficient of x^" + std::to_string(q));
}

void monomial(Checks& c, const Fixtures& fx) {
  Arrangement a = fx.arrangement("monomial_3.json");
  PointedMultinet pm = fx.pointed(a, "monomial_3_net.json");
  PipelineOptions opt;
  opt.prime = 3;
  opt.r = 7;
  PipelineResult res = multinet_torsion_pipeline(a, pm, opt);
  c.equal(res.choice.m, std::vector<long>{3, 4, 6, 6, 6, 1, 1, 1, 7, 7, 7}, "m'");
  c.equal(res.choice.N, 49L, "N'");
  for (std::size_t d : res.depthsp) c.expect(d > 0, "image not inside V^1 in characteristic 3");
  for (std::size_t d : res.depths0) c.expect(d == 0, "image meets V^1 over C away from 1");
  c.equal(res.certificate.prime, 3L, "prime");
  c.expect(res.certificate.bound >= 1, "no 3-torsion certified");
}

// Presentation with g <= 3 generators and <= 3 relators on which chi is
// defined; chi has a unit entry.
std::pair<Presentation, Character> random_pair(std::mt19937_64& rng) {
  const std::size_t g = 1 + rng() % 3;
  const long r = 1 + static_cast<long>(rng() % 6);
  Character chi{r, {}};
  for (std::size_t i = 0; i < g; ++i) chi.exponents.push_back(static_cast<long>(rng() % r));
  const std::size_t unit = rng() % g;
  chi.exponents[unit] = 1 % r;
  Presentation p{g, {}};
  for (std::size_t k = 0, nrel = rng() % 4; k < nrel; ++k) {
    Word w;
    for (std::size_t i = 0, len = 2 + rng() % 5; i < len; ++i) {
      int x = static_cast<int>(rng() % g) + 1;
      w.push_back(rng() % 2 ? x : -x);
    }
    for (long i = 0, fix = mod_floor(-chi.value(w), r); i < fix; ++i) w.push_back(static_cast<int>(unit) + 1);
    p.relators.push_back(w);
  }
  p.normalize();
  return {p, chi};
}

void properties(Checks& c) {
  std::mt19937_64 rng(20240607);
  const int kCases = 120;
  for (int t = 0; t < kCases; ++t) {
    auto [p, chi] = random_pair(rng);
    JumpSource s = JumpSource::fox(p);
    const std::string tag = " (case " + std::to_string(t) + ")";
    // (a) cover homology over Q(zeta_r) against the kernel's abelianization.
    const std::size_t h0 = cover_homology(s, chi, 0, 1);
    c.equal(h0, integral_h1_kernel(p, chi).rank, "(a) eko oracle" + tag);
    // (c) Galois divisibility: by phi(k) over Q, by the Frobenius orbit
    // length ord_k(p) over F_p.
    for (const auto& [deg, row] : delta_u_poly(s, chi, 0).c)
      for (const auto& [k, v] : row) c.expect(v % euler_phi(k) == 0, "(c) Galois divisibility" + tag);
    c.expect(monodromy_charpoly(s, chi, 0, 1).modular.empty(), "(c) cyclotomic charpoly over Q" + tag);
    for (long q : {2L, 3L, 5L}) {
      if (chi.order % q == 0) continue;
      // (b) monotonicity.
      const std::size_t hq = cover_homology(s, chi, q, 1);
      c.expect(h0 <= hq, "(b) monotonicity" + tag);
      for (const auto& [deg, row] : delta_u_poly(s, chi, q).c)
        for (const auto& [k, v] : row)
          c.expect(v % multiplicative_order(mod_floor(q, k), k) == 0, "(c) Frobenius divisibility" + tag);
      CharPoly cp = monodromy_charpoly(s, chi, q, 1);
      c.equal(static_cast<std::size_t>(cp.degree()), hq, "(c) charpoly degree" + tag);
      for (const auto& f : cp.modular)
        c.expect(multiplicative_order(mod_floor(q, f.order), f.order) < euler_phi(f.order),
                 "(c) modular factor at an order where p generates the units" + tag);
    }
    // (f) phi-module ranks.
    for (long k : divisors(chi.order))
      c.equal(phi_module_rank(p, chi, k),
              static_cast<std::size_t>(euler_phi(k)) * s.depth(1, chi.power(chi.order / k), 0),
              "(f) phi_module_rank, k = " + std::to_string(k) + tag);
  }
  // (d) plug-in maps: nested plug-ins associate and are unimodular.
  for (int t = 0; t < kCases; ++t) {
    std::size_t n1 = 1 + rng() % 4, n2 = 2 + rng() % 4, n3 = 1 + rng() % 4;
    std::size_t x = rng() % n1, r2 = rng() % n2, r3 = rng() % n3, y = rng() % n2;
    if (y == r2) y = (y + 1) % n2;
    auto rnd = [&](std::size_t n) {
      std::vector<Int> v(n);
      for (auto& e : v) e = static_cast<long>(rng() % 9) - 4;
      return v;
    };
    auto v1 = rnd(n1), v2 = rnd(n2), v3 = rnd(n3);
    const std::size_t y_in = n1 + (y < r2 ? y : y - 1);
    auto left = plugin_h1(plugin_h1(v1, v2, x, r2), v3, y_in, r3);
    auto right = plugin_h1(v1, plugin_h1(v2, v3, y, r3), x, r2);
    c.expect(left == right, "(d) plug-in associativity (case " + std::to_string(t) + ")");
    IntMatrix m = plugin_h1_projective_matrix(n1, rng() % n1, x, n2, r2);
    auto snf = smith_normal_form(m);
    bool unimodular = m.rows == m.cols && snf.rank == m.rows;
    for (const Int& d : snf.invariant_factors) unimodular = unimodular && d == 1;
    c.expect(unimodular, "(d) plug-in unimodularity (case " + std::to_string(t) + ")");
  }
  // (e) Smith form under unimodular change of basis on both sides.
  for (int t = 0; t < kCases; ++t) {
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    IntMatrix m(rows, cols);
    for (auto& e : m.a) e = static_cast<long>(rng() % 13) - 6;
    auto elementary = [&](std::size_t n) {
      IntMatrix u = IntMatrix::identity(n);
      for (int k = 0; k < 8 && n > 1; ++k) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long q = static_cast<long>(rng() % 7) - 3;
        for (std::size_t s = 0; s < n; ++s) u.at(i, s) += q * u.at(j, s);
      }
      return u;
    };
    IntMatrix other = elementary(rows) * m * elementary(cols);
    c.equal(smith_normal_form(other).invariant_factors, smith_normal_form(m).invariant_factors,
            "(e) SNF invariance (case " + std::to_string(t) + ")");
    c.equal(cokernel(other), cokernel(m), "(e) cokernel invariance (case " + std::to_string(t) + ")");
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& fixture_dir) {
  const Fixtures fx(fixture_dir);
  struct Item {
    std::string title;
    double limit;
    std::function<void(Checks&)> run;
  };
  const std::vector<Item> items{
      {"one-torus group: H_1 of the 3-fold cover and monodromy", 1,
       [&](Checks& c) { onetorus(c, fx); }},
      {"CCM stratification: cover dimensions, charpoly, torsion bound", 1, [&](Checks& c) { ccm(c, fx); }},
      {"braid arrangement: Delta(u, x), b_1(F), H_1(F, Z), charpoly", 5, [&](Checks& c) { braid(c, fx); }},
      {"deleted B3: multinet, pencil, multiplicities, H_1(F, Z), covers", 60,
       [&](Checks& c) { deleted_b3(c, fx); }},
      {"polarization of deleted B3: 108 u_3 x^6 and Delta_6", 120, [&](Checks& c) { polarization(c, fx); }},
      {"monomial A(3,1,3), q = 7: 3-torsion certificate", 600, [&](Checks& c) { monomial(c, fx); }},
      {"property suites (a)-(f)", 600, [](Checks& c) { properties(c); }},
  };
  std::vector<CriterionResult> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i + 1);
    r.title = items[i].title;
    r.limit = items[i].limit;
    Checks c(r.failures);
    const auto t0 = std::chrono::steady_clock::now();
    try {
      items[i].run(c);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > r.limit) r.failures.push_back("time limit exceeded");
    r.pass = r.failures.empty();
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::json to_json(const CriterionResult& r) {
  // Timing is reported in whole milliseconds to keep reports free of floats.
  return {{"id", r.id},
          {"title", r.title},
          {"pass", r.pass},
          {"milliseconds", static_cast<long>(r.seconds * 1000)},
          {"limit_seconds", static_cast<long>(r.limit)},
          {"failures", r.failures}};
}

}  // namespace milnor
