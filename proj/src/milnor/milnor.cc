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

#include "milnor/milnor/milnor.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "milnor/fpgroups/arrangement_group.h"
#include "milnor/fpgroups/schreier.h"

namespace milnor {

namespace {

std::vector<long> reduce_all(const std::vector<long>& v, long r) {
  std::vector<long> out;
  for (long x : v) out.push_back(mod_floor(x, r));
  return out;
}

void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::string field_name(long characteristic, long n) {
  if (characteristic == 0) return n <= 2 ? "Q" : "Q(zeta_" + std::to_string(n) + ")";
  long f = multiplicative_order(mod_floor(characteristic, n), n);
  return "GF(" + std::to_string(characteristic) + "^" + std::to_string(f) + ")";
}

// Depths at chi^j for j = 1..r-1, one evaluation per Galois (char 0) or
// Frobenius (char p) orbit.
std::vector<std::size_t> power_depths(const JumpSource& s, const Character& chi, long characteristic) {
  const long r = chi.order;
  std::vector<std::size_t> out(static_cast<std::size_t>(r > 0 ? r - 1 : 0));
  std::vector<bool> done(out.size(), false);
  for (long j = 1; j < r; ++j) {
    if (done[static_cast<std::size_t>(j - 1)]) continue;
    std::size_t d = s.depth(1, chi.power(j), characteristic);
    for (long k = j; k < r; ++k) {
      bool same = false;
      if (characteristic == 0) {
        same = gcd_long(k, r) == gcd_long(j, r);
      } else {
        for (long t = j, i = 0; i < r; t = mod_floor(t * characteristic, r), ++i)
          if (t == k) {
            same = true;
            break;
          }
      }
      if (same) {
        out[static_cast<std::size_t>(k - 1)] = d;
        done[static_cast<std::size_t>(k - 1)] = true;
      }
    }
  }
  return out;
}

Int total_at(const UPoly& u, std::size_t q) {
  Int s = 0;
  auto it = u.c.find(q);
  if (it != u.c.end())
    for (const auto& kv : it->second) s += kv.second;
  return s;
}

}  // namespace

MilnorSpec milnor_character(const Arrangement& a, const std::vector<long>& m) {
  Multiarrangement ma(a, m);
  MilnorSpec s;
  s.m = m;
  s.N = ma.total();
  s.delta = Character{s.N, reduce_all(m, s.N)};
  long g = 0;
  for (long x : m) g = gcd_long(g, x);
  s.gcd_warning = g > 1;
  return s;
}

nlohmann::json to_json(const MilnorSpec& s) {
  nlohmann::json j{{"m", s.m}, {"N", s.N}, {"delta", to_json(s.delta)}};
  if (s.gcd_warning) j["warnings"] = {"gcd of the multiplicities exceeds 1"};
  return j;
}

std::optional<std::vector<long>> recognize_milnor_cover(const Arrangement& a, const Character& chi0) {
  if (chi0.exponents.size() != a.size()) throw std::invalid_argument("character has wrong length");
  const Character chi = chi0.canonical();
  if (!chi.is_projective()) throw std::invalid_argument("character is not projective");
  const long N = chi.order;
  for (long k = 1; k <= std::max(1L, N - 1); ++k) {
    if (gcd_long(k, N) != 1) continue;
    std::vector<long> mu;
    long sum = 0;
    for (long e : chi.exponents) {
      long v = mod_floor(k * e, N);
      mu.push_back(v == 0 ? N : v);
      sum += mu.back();
    }
    if (sum == N) return mu;
  }
  return std::nullopt;
}

bool dominates(const std::vector<long>& m, const Character& chi) {
  if (m.size() != chi.exponents.size()) throw std::invalid_argument("length mismatch");
  const long r = chi.order;
  for (long c = 0; c < r; ++c) {
    bool ok = true;
    for (std::size_t h = 0; h < m.size() && ok; ++h)
      ok = mod_floor(c * m[h] - chi.exponents[h], r) == 0;
    if (ok) return true;
  }
  return false;
}

MultiplicityChoice find_multiplicities(const Arrangement& a, const Character& chi0, long p,
                                       const FindOptions& opt) {
  require_prime(p);
  if (chi0.exponents.size() != a.size()) throw std::invalid_argument("character has wrong length");
  const Character chi = chi0.canonical();
  const long r = chi.order;
  if (r % p == 0) throw std::invalid_argument("p divides the order of the character");
  if (!chi.is_surjective() || !chi.is_projective())
    throw std::invalid_argument("character must be surjective and projective");
  std::optional<MultiplicityChoice> best;
  for (long k = 1; k <= std::max(1L, r - 1); ++k) {
    if (gcd_long(k, r) != 1) continue;
    MultiplicityChoice c;
    c.k = k;
    for (long e : chi.exponents) {
      long v = mod_floor(k * e, r);
      if (v == 0) v = r;
      if (opt.forbid_two && v == 2) v += r;
      c.m.push_back(v);
    }
    c.N = std::accumulate(c.m.begin(), c.m.end(), 0L);
    // N moves by r per extra lift and gcd(r, p) = 1, so fewer than p steps.
    while (c.N % p == 0) {
      c.m[0] += r;
      c.N += r;
    }
    if (!best || c.N < best->N) best = c;
  }
  if (opt.max_n > 0 && best->N > opt.max_n)
    throw std::invalid_argument("no multiplicity vector with N <= " + std::to_string(opt.max_n) +
                                " (least is " + std::to_string(best->N) + ")");
  return *best;
}

PipelineResult multinet_torsion_pipeline(const Arrangement& a, const PointedMultinet& pm,
                                         const PipelineOptions& opt) {
  const std::size_t h = pm.hyperplane;
  const long mh = pm.multinet.m.at(h);
  long p = 0;
  if (opt.prime) {
    p = *opt.prime;
    require_prime(p);
    if (mh % p != 0)
      throw std::invalid_argument("p = " + std::to_string(p) + " does not divide m_H = " + std::to_string(mh));
  } else {
    auto ps = prime_factors(mh);
    if (ps.empty()) throw std::invalid_argument("m_H = 1 has no prime factor");
    p = ps.front();
  }

  PipelineResult res{{}, deletion_pencil_certificate(a, pm), 0, {}, {}, {}, {}};
  const Arrangement& del = res.pencil.deleted;
  const std::vector<long> dir = res.pencil.normalized_direction();
  const JumpSource src = JumpSource::arrangement(del);

  nlohmann::json chain = nlohmann::json::array();
  chain.push_back({{"stage", "pointed multinet"},
                   {"hyperplane", a.labels().at(h)},
                   {"index", h},
                   {"m_H", mh},
                   {"d", pm.d},
                   {"prime", p}});
  chain.push_back({{"stage", "deletion"}, {"removed", res.pencil.removed}, {"hyperplanes", del.size()},
                   {"group", src.group()->method()}});
  nlohmann::json pen = to_json(res.pencil);
  pen["stage"] = "pencil certificate";
  chain.push_back(pen);

  std::vector<long> candidates;
  if (opt.r) {
    candidates.push_back(*opt.r);
  } else {
    for (long r = 2; r <= opt.r_cap; ++r)
      if (r % p != 0) candidates.push_back(r);
  }
  nlohmann::json rejected = nlohmann::json::array();
  for (long r : candidates) {
    if (r < 2 || r % p == 0) throw std::invalid_argument("r must be at least 2 and prime to p");
    Character chi{r, reduce_all(dir, r)};
    auto d0 = power_depths(src, chi, 0);
    if (std::all_of(d0.begin(), d0.end(), [](std::size_t d) { return d == 0; })) {
      res.r = r;
      res.chi = chi;
      res.depths0 = d0;
      break;
    }
    rejected.push_back({{"r", r}, {"depths_0", d0}});
  }
  if (res.r == 0)
    throw std::invalid_argument("the pencil direction meets V^1 over C for every tried r");
  res.depthsp = power_depths(src, res.chi, p);
  const bool in_vp = std::all_of(res.depthsp.begin(), res.depthsp.end(), [](std::size_t d) { return d > 0; });
  chain.push_back({{"stage", "cover"},
                   {"r", res.r},
                   {"chi", res.chi.exponents},
                   {"rejected", rejected},
                   {"depths_0", res.depths0},
                   {"depths_p", res.depthsp},
                   {"image_meets_V1_over_C_only_at_1", true},
                   {"image_in_V1_char_p", in_vp}});

  res.choice = find_multiplicities(del, res.chi, p, {opt.forbid_two, 0});
  const MilnorSpec spec = milnor_character(del, res.choice.m);
  chain.push_back({{"stage", "multiplicities"},
                   {"m", res.choice.m},
                   {"N", res.choice.N},
                   {"k", res.choice.k},
                   {"forbid_two", opt.forbid_two}});
  chain.push_back({{"stage", "fields"},
                   {"char_0", field_name(0, spec.N)},
                   {"char_p", field_name(p, spec.N)}});

  auto cert = torsion_detect(src, spec.delta, p, 1);
  if (!cert) throw std::logic_error("pipeline: no torsion detected on the Milnor fiber");
  chain.push_back({{"stage", "dimensions"}, {"dim_0", cert->dim0}, {"dim_p", cert->dimp}});

  if (opt.integral) {
    const Presentation& pres = src.group()->presentation();
    const long cost = spec.N * static_cast<long>(pres.generators);
    if (cost <= opt.integral_cap) {
      AbelianGroup g = integral_h1_kernel(pres, src.group()->transport(spec.delta));
      std::size_t prank = 0;
      for (const Int& t : g.torsion)
        if (t % p == 0) ++prank;
      if (g.rank != cert->dim0 || prank < cert->bound)
        throw std::logic_error("pipeline: integral homology disagrees with the field dimensions");
      cert->integral = g;
      chain.push_back({{"stage", "integral"}, {"group", to_string(g)}, {"p_rank", prank}});
    } else {
      chain.push_back({{"stage", "integral"}, {"skipped", true}, {"cost", cost}, {"cap", opt.integral_cap}});
    }
  }
  cert->chain = chain;
  res.certificate = *cert;
  return res;
}

PolarDelta polarized_delta(const Arrangement& a, const std::vector<long>& m, long characteristic) {
  if (a.rank() != 3) throw std::invalid_argument("polarized delta needs a rank-3 arrangement");
  const MilnorSpec spec = milnor_character(a, m);
  if (characteristic != 0 && spec.N % characteristic == 0)
    throw std::invalid_argument("characteristic divides N");
  PolarDelta out{polarize(a, m), {}, {}, {}, 0};
  const long N = spec.N;
  ThetaStar ts = theta_star(out.polarization, std::vector<Int>(out.polarization.result.size(), Int(1)), N);
  out.chi.order = N;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (ts.backbone[h] != spec.delta.exponents[h])
      throw std::logic_error("theta*: backbone of delta_B is not delta_{A,m}");
    out.chi.exponents.push_back(ts.backbone[h].get_si());
  }
  std::vector<PoincareFactor> factors{source_factor(JumpSource::arrangement(a), characteristic)};
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (static_cast<long>(ts.pencils[h].size()) != m[h]) throw std::logic_error("theta*: pencil size");
    for (const Int& x : ts.pencils[h]) out.chi.exponents.push_back(x.get_si());
    factors.push_back(pencil_factor(m[h]));
  }
  out.characteristic = characteristic;
  out.poincare = product_poincare(factors, out.chi);
  for (long j = 0; j < N; ++j) {
    const IntPoly& f = out.poincare[static_cast<std::size_t>(j)];
    for (std::size_t deg = 0; deg < f.size(); ++deg) out.delta.add(deg, N / gcd_long(j, N), f[deg]);
  }
  return out;
}

CharPoly PolarDelta::charpoly(std::size_t q) const {
  std::vector<Int> mult;
  for (const IntPoly& f : poincare) mult.push_back(q < f.size() ? f[q] : Int(0));
  return group_eigenvalues(mult, characteristic);
}

CharPoly polarized_milnor_delta(const Arrangement& a, const std::vector<long>& m,
                                long characteristic, std::size_t q) {
  return polarized_delta(a, m, characteristic).charpoly(q);
}

TorsionCertificate polarization_torsion(const Arrangement& a, const std::vector<long>& m, long p) {
  require_prime(p);
  if (std::find(m.begin(), m.end(), 2L) != m.end())
    throw std::invalid_argument("multiplicity 2 is not allowed here");
  const MilnorSpec spec = milnor_character(a, m);
  if (spec.N % p == 0) throw std::invalid_argument("p divides N");
  auto h1 = torsion_detect(JumpSource::arrangement(a), spec.delta, p, 1);
  if (!h1) throw std::invalid_argument("no p-torsion certified in H_1 of F(A, m)");

  PolarDelta d0 = polarized_delta(a, m, 0), dp = polarized_delta(a, m, p);
  const std::size_t n3 = d0.polarization.n(3);
  const std::size_t q = 1 + n3;
  UPoly diff = dp.delta - d0.delta;
  UPoly at_q;
  for (const auto& [k, v] : diff.c.count(q) ? diff.c.at(q) : std::map<long, Int>{})
    if (v != 0) at_q.add(q, k, v);

  TorsionCertificate c;
  c.prime = p;
  c.degree = q;
  c.dim0 = total_at(d0.delta, q).get_ui();
  c.dimp = total_at(dp.delta, q).get_ui();
  Int bound = total_at(diff, q);
  if (bound <= 0) throw std::logic_error("polarization: no jump in degree 1 + n_3");
  c.bound = bound.get_ui();
  for (const auto& [k, v] : at_q.c[q])
    c.witnesses.push_back({0, k, d0.delta.at(q, k).get_ui(), dp.delta.at(q, k).get_ui()});
  c.charpoly = dp.charpoly(q);
  nlohmann::json h1j = to_json(*h1);
  h1j.erase("chain");
  c.chain = nlohmann::json::array();
  c.chain.push_back({{"stage", "H_1 torsion of F(A, m)"}, {"certificate", h1j}});
  c.chain.push_back({{"stage", "polarization"},
                     {"hyperplanes", d0.polarization.result.size()},
                     {"rank", d0.polarization.rank},
                     {"n_3", n3}});
  c.chain.push_back({{"stage", "theta*"}, {"chi", d0.chi.exponents}, {"order", d0.chi.order}});
  c.chain.push_back({{"stage", "delta difference"}, {"degree", q}, {"text", to_string(at_q)},
                     {"fields", {field_name(0, spec.N), field_name(p, spec.N)}}});
  return c;
}

}  // namespace milnor
