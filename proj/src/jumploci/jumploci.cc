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

#include "milnor/jumploci/jumploci.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "milnor/fpgroups/fox.h"

namespace milnor {

bool Applicability::applies(long characteristic) const {
  bool listed = std::find(primes.begin(), primes.end(), characteristic) != primes.end();
  switch (kind) {
    case Kind::kAll:
      return true;
    case Kind::kOnly:
      return listed;
    case Kind::kExcept:
      return !listed;
  }
  return true;
}

namespace {

Applicability applicability_from_json(const nlohmann::json& j) {
  Applicability a;
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "all")) return a;
  if (j.is_object() && j.contains("only")) {
    a.kind = Applicability::Kind::kOnly;
    a.primes = j.at("only").get<std::vector<long>>();
  } else if (j.is_object() && j.contains("except")) {
    a.kind = Applicability::Kind::kExcept;
    a.primes = j.at("except").get<std::vector<long>>();
  } else {
    throw std::invalid_argument("component 'chars' must be \"all\", {\"only\": [...]} or {\"except\": [...]}");
  }
  return a;
}

nlohmann::json to_json(const Applicability& a) {
  switch (a.kind) {
    case Applicability::Kind::kOnly:
      return {{"only", a.primes}};
    case Applicability::Kind::kExcept:
      return {{"except", a.primes}};
    default:
      return "all";
  }
}

IntMatrix basis_matrix(const TranslatedTorus& c, std::size_t n) {
  IntMatrix b(c.basis.size(), n);
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    if (c.basis[i].size() != n) throw std::invalid_argument("component basis has wrong length");
    for (std::size_t j = 0; j < n; ++j) b.at(i, j) = c.basis[i][j];
  }
  return b;
}

// The character sigma with its p-primary part removed.
Character prime_to(const Character& sigma, long p) {
  const long s = sigma.order;
  long pa = 1;
  while ((s / pa) % p == 0) pa *= p;
  const long rest = s / pa;
  long u = rest == 1 ? 0 : mod_floor(pa * inverse_mod(pa % rest, rest), s);
  Character out{s, {}};
  for (long e : sigma.exponents) out.exponents.push_back(mod_floor(e * u, s));
  return out.reduced();
}

}  // namespace

Stratification stratification_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rank") || !j.contains("betti"))
    throw std::invalid_argument("stratification file needs 'rank' and 'betti'");
  Stratification s;
  s.rank = j.at("rank").get<std::size_t>();
  s.betti = j.at("betti").get<std::vector<std::size_t>>();
  if (s.betti.empty() || s.betti[0] != 1)
    throw std::invalid_argument("stratification: betti must start with b0 = 1");
  for (const auto& c : j.value("components", nlohmann::json::array())) {
    TranslatedTorus t;
    t.degree = c.value("degree", std::size_t{1});
    t.basis = c.at("basis").get<std::vector<std::vector<long>>>();
    t.translate = character_from_json(c.at("translate"));
    t.depth = c.at("depth").get<std::size_t>();
    t.chars = applicability_from_json(c.value("chars", nlohmann::json("all")));
    if (t.depth < 1) throw std::invalid_argument("stratification: depth must be at least 1");
    if (t.translate.exponents.size() != s.rank)
      throw std::invalid_argument("stratification: translate has wrong length");
    if (t.degree < 1 || t.degree >= s.betti.size())
      throw std::invalid_argument("stratification: component degree without a Betti number");
    if (!t.basis.empty()) {
      SnfResult snf = smith_normal_form(basis_matrix(t, s.rank));
      if (snf.rank != t.basis.size() ||
          std::any_of(snf.invariant_factors.begin(), snf.invariant_factors.end(),
                      [](const Int& d) { return d != 1; }))
        throw std::invalid_argument("stratification: component basis is not saturated");
    }
    s.components.push_back(std::move(t));
  }
  return s;
}

nlohmann::json to_json(const Stratification& s) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : s.components)
    comps.push_back({{"degree", c.degree},
                     {"basis", c.basis},
                     {"translate", to_json(c.translate)},
                     {"depth", c.depth},
                     {"chars", to_json(c.chars)}});
  return {{"rank", s.rank}, {"betti", s.betti}, {"components", comps}};
}

bool char_in_component(const Character& rho0, const TranslatedTorus& c, long characteristic) {
  if (!c.chars.applies(characteristic))
    throw std::invalid_argument("component does not apply in characteristic " +
                                std::to_string(characteristic));
  const std::size_t n = c.translate.exponents.size();
  if (rho0.exponents.size() != n) throw std::invalid_argument("character has wrong length");
  const Character rho = rho0.reduced();
  Character sigma = c.translate.reduced();
  if (characteristic != 0) {
    if (rho.order % characteristic == 0)
      throw std::invalid_argument("character order divisible by the characteristic");
    sigma = prime_to(sigma, characteristic);
  }
  const long L = lcm_long(rho.order, sigma.order);
  std::vector<Int> e(n);
  for (std::size_t i = 0; i < n; ++i)
    e[i] = mod_floor(rho.exponents[i] * (L / rho.order) - sigma.exponents[i] * (L / sigma.order), L);
  const std::size_t k = c.basis.size();
  IntMatrix v = IntMatrix::identity(n);
  if (k > 0) v = *smith_normal_form(basis_matrix(c, n), true).v;
  // a B = e (mod L) is solvable iff e V vanishes beyond the first k columns.
  for (std::size_t j = k; j < n; ++j) {
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) s += e[i] * v.at(i, j);
    if (s % L != 0) return false;
  }
  return true;
}

JumpSource JumpSource::stratified(Stratification s) {
  JumpSource j;
  j.betti_ = s.betti;
  j.strat_ = std::make_shared<const Stratification>(std::move(s));
  return j;
}

JumpSource JumpSource::fox(Presentation p) {
  JumpSource j;
  p.normalize();
  j.betti_ = {1, abelianization(p).rank};
  j.pres_ = std::make_shared<const Presentation>(std::move(p));
  return j;
}

JumpSource JumpSource::arrangement(const Arrangement& a) {
  JumpSource j;
  j.group_ = std::make_shared<const ArrangementGroup>(arrangement_group(a));
  IntPoly poin = os_poincare_rank3(a);
  long euler = 0;
  for (std::size_t i = 0; i < poin.size(); ++i)
    euler += (i % 2 ? -1 : 1) * poin[i].get_si();
  j.euler_ = euler;
  j.betti_ = {1, a.size() - 1};
  j.betti_.push_back(static_cast<std::size_t>(euler - 1 + static_cast<long>(a.size() - 1)));
  return j;
}

std::size_t JumpSource::ambient() const {
  if (strat_) return strat_->rank;
  if (group_) return group_->hyperplanes();
  return pres_->generators;
}

std::size_t JumpSource::top_degree() const { return betti_.size() - 1; }

std::size_t JumpSource::depth(std::size_t q, const Character& rho, long characteristic) const {
  if (rho.exponents.size() != ambient()) throw std::invalid_argument("character has wrong length");
  if (q > top_degree())
    throw std::invalid_argument("degree " + std::to_string(q) + " is not supported by this source");
  if (characteristic != 0 && rho.reduced().order % characteristic == 0)
    throw std::invalid_argument("character order divisible by the characteristic");
  if (rho.is_trivial()) return betti_[q];
  if (q == 0) return 0;
  if (strat_) {
    std::size_t d = 0;
    for (const auto& c : strat_->components)
      if (c.degree == q && c.chars.applies(characteristic) &&
          char_in_component(rho, c, characteristic))
        d = std::max(d, c.depth);
    return d;
  }
  const Presentation& p = group_ ? group_->presentation() : *pres_;
  const Character chi = group_ ? group_->transport(rho) : rho;
  std::size_t h1 = twisted_betti_01(p, chi, characteristic).h1;
  if (q == 1) return h1;
  // U is homotopy equivalent to a 2-complex: h2 = chi(U) - h0 + h1.
  long h2 = *euler_ + static_cast<long>(h1);
  if (h2 < 0) throw std::logic_error("euler completion gave a negative Betti number");
  return static_cast<std::size_t>(h2);
}

IntPoly JumpSource::poincare(const Character& rho, long characteristic) const {
  IntPoly p;
  for (std::size_t q = 0; q <= top_degree(); ++q)
    p.push_back(Int(static_cast<unsigned long>(depth(q, rho, characteristic))));
  poly_trim(p);
  return p;
}

IntPoly poin_punctured_line(long n, bool trivial) {
  if (n < 1) throw std::invalid_argument("poin_punctured_line: n must be positive");
  if (n == 1) return {1};
  if (trivial) return {1, n};
  return {0, n - 1};
}

IntPoly pencil_poincare(long m, bool trivial) {
  if (m < 1) throw std::invalid_argument("pencil_poincare: m must be positive");
  if (m == 1) return {1};
  // P^1 minus m points is C minus m - 1 points.
  if (trivial) return {1, m - 1};
  IntPoly p{0, m - 2};
  poly_trim(p);
  return p;
}

namespace {

void check_cover(const Character& chi, long characteristic) {
  if (chi.order < 1) throw std::invalid_argument("character order must be positive");
  if (characteristic != 0 && chi.order % characteristic == 0)
    throw std::invalid_argument("characteristic " + std::to_string(characteristic) +
                                " divides the order " + std::to_string(chi.order));
}

// depths[j] = depth at chi^j. One evaluation per orbit of j under the units
// (characteristic 0) or under multiplication by p.
std::vector<std::size_t> all_depths(const JumpSource& s, const Character& chi,
                                    long characteristic, std::size_t q, const CoverOptions& opt) {
  check_cover(chi, characteristic);
  const long r = chi.order;
  std::vector<std::size_t> d(static_cast<std::size_t>(r));
  std::vector<bool> done(static_cast<std::size_t>(r), false);
  const bool per_orbit = s.is_fox() && !opt.exhaustive;
  for (long j = 0; j < r; ++j) {
    if (done[static_cast<std::size_t>(j)]) continue;
    std::size_t v = s.depth(q, chi.power(j), characteristic);
    std::vector<long> orbit{j};
    if (per_orbit) {
      if (characteristic == 0) {
        for (long k = j + 1; k < r; ++k)
          if (gcd_long(k, r) == gcd_long(j, r)) orbit.push_back(k);
      } else {
        for (long k = mod_floor(j * characteristic, r); k != j; k = mod_floor(k * characteristic, r))
          orbit.push_back(k);
      }
    }
    for (long k : orbit) {
      d[static_cast<std::size_t>(k)] = v;
      done[static_cast<std::size_t>(k)] = true;
    }
  }
  return d;
}

long order_of_power(long j, long r) { return r / gcd_long(j, r); }

CharPoly group_by_order(const std::vector<std::size_t>& d, long characteristic) {
  std::vector<Int> m;
  for (std::size_t v : d) m.push_back(Int(static_cast<unsigned long>(v)));
  return group_eigenvalues(m, characteristic);
}

// prod over the Frobenius orbit of zeta^j of (t - zeta^i), over F_p.
IntPoly frobenius_minpoly(long p, long r, long j) {
  const GaloisField& f = cached_galois(p, r);
  std::vector<GaloisField::Element> poly{f.one()};
  long i = j;
  do {
    // poly *= (t - zeta^i)
    std::vector<GaloisField::Element> next(poly.size() + 1, f.zero());
    for (std::size_t a = 0; a < poly.size(); ++a) {
      next[a + 1] = f.add(next[a + 1], poly[a]);
      next[a] = f.sub(next[a], f.mul(poly[a], f.root_power(i)));
    }
    poly = std::move(next);
    i = mod_floor(i * p, r);
  } while (i != j);
  IntPoly out;
  for (const auto& c : poly) {
    for (std::size_t t = 1; t < c.size(); ++t)
      if (c[t] != 0) throw std::logic_error("Frobenius orbit polynomial not defined over F_p");
    out.push_back(Int(static_cast<unsigned long>(c.empty() ? 0 : c[0])));
  }
  return out;
}

}  // namespace

std::size_t cover_homology(const JumpSource& s, const Character& chi, long characteristic,
                           std::size_t q, const CoverOptions& opt) {
  auto d = all_depths(s, chi, characteristic, q, opt);
  return std::accumulate(d.begin(), d.end(), std::size_t{0});
}

CharPoly group_eigenvalues(const std::vector<Int>& mult, long characteristic) {
  const long r = static_cast<long>(mult.size());
  std::map<long, std::vector<long>> by_order;
  for (long j = 0; j < r; ++j) by_order[order_of_power(j, r)].push_back(j);
  CharPoly c;
  for (const auto& [k, js] : by_order) {
    const Int& first = mult[static_cast<std::size_t>(js.front())];
    bool constant = std::all_of(js.begin(), js.end(),
                                [&](long j) { return mult[static_cast<std::size_t>(j)] == first; });
    if (constant) {
      if (first != 0) c.e[k] = first.get_si();
      continue;
    }
    if (characteristic == 0) throw std::logic_error("charpoly: multiplicity not Galois-stable");
    std::vector<bool> seen(static_cast<std::size_t>(r), false);
    for (long j : js) {
      if (seen[static_cast<std::size_t>(j)]) continue;
      for (long i = j;; i = mod_floor(i * characteristic, r)) {
        if (seen[static_cast<std::size_t>(i)]) break;
        seen[static_cast<std::size_t>(i)] = true;
        if (mult[static_cast<std::size_t>(i)] != mult[static_cast<std::size_t>(j)])
          throw std::logic_error("charpoly: multiplicity not Frobenius-stable");
      }
      const Int& v = mult[static_cast<std::size_t>(j)];
      if (v != 0)
        c.modular.push_back({characteristic, k, j, frobenius_minpoly(characteristic, r, j), v.get_si()});
    }
  }
  return c;
}

long CharPoly::degree() const {
  long deg = 0;
  for (const auto& [k, v] : e) deg += v * euler_phi(k);
  for (const auto& f : modular) deg += f.multiplicity * static_cast<long>(f.poly.size() - 1);
  return deg;
}

IntPoly CharPoly::expand() const {
  IntPoly p{1};
  for (const auto& [k, v] : e) {
    IntPoly f = cyclotomic_poly(k);
    for (long i = 0; i < v; ++i) p = poly_mul(p, f);
  }
  return p;
}

std::string to_string(const CharPoly& c) {
  if (c.e.empty() && c.modular.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c.e) {
    if (!first) os << " ";
    first = false;
    os << "(" << poly_to_string(cyclotomic_poly(k)) << ")";
    if (v != 1) os << "^" << v;
  }
  for (const auto& f : c.modular) {
    if (!first) os << " ";
    first = false;
    os << "(" << poly_to_string(f.poly) << ")";
    if (f.multiplicity != 1) os << "^" << f.multiplicity;
  }
  if (!c.modular.empty()) os << " over F_" << c.modular.front().prime;
  return os.str();
}

nlohmann::json to_json(const CharPoly& c) {
  nlohmann::json phi = nlohmann::json::object();
  for (const auto& [k, v] : c.e) phi[std::to_string(k)] = v;
  nlohmann::json j{{"phi", phi}, {"degree", c.degree()}, {"text", to_string(c)}};
  if (!c.modular.empty()) {
    nlohmann::json m = nlohmann::json::array();
    for (const auto& f : c.modular) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const Int& x : f.poly) coeffs.push_back(x.get_si());
      m.push_back({{"prime", f.prime}, {"order", f.order}, {"power", f.power},
                   {"coefficients", coeffs}, {"multiplicity", f.multiplicity}});
    }
    j["modular"] = m;
  }
  return j;
}

CharPoly monodromy_charpoly(const JumpSource& s, const Character& chi, long characteristic,
                            std::size_t q, const CoverOptions& opt) {
  return group_by_order(all_depths(s, chi, characteristic, q, opt), characteristic);
}

void UPoly::add(std::size_t degree, long order, const Int& v) {
  if (v == 0) return;
  Int& slot = c[degree][order];
  slot += v;
  if (slot == 0) {
    c[degree].erase(order);
    if (c[degree].empty()) c.erase(degree);
  }
}

Int UPoly::at(std::size_t degree, long order) const {
  auto it = c.find(degree);
  if (it == c.end()) return 0;
  auto jt = it->second.find(order);
  return jt == it->second.end() ? Int(0) : jt->second;
}

IntPoly UPoly::specialize() const {
  IntPoly p;
  for (const auto& [deg, row] : c) {
    if (p.size() <= deg) p.resize(deg + 1, 0);
    for (const auto& [k, v] : row) p[deg] += v;
  }
  poly_trim(p);
  return p;
}

UPoly UPoly::operator-(const UPoly& o) const {
  UPoly out = *this;
  for (const auto& [deg, row] : o.c)
    for (const auto& [k, v] : row) out.add(deg, k, -v);
  return out;
}

bool UPoly::operator==(const UPoly& o) const { return c == o.c; }

std::string to_string(const UPoly& u) {
  if (u.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, row] : u.c) {
    std::ostringstream coef;
    bool f2 = true;
    for (const auto& [k, v] : row) {
      if (!f2) coef << (v < 0 ? " - " : " + ");
      else if (v < 0) coef << "-";
      f2 = false;
      Int a = abs(v);
      if (a != 1) coef << a.get_str();
      coef << "u" << k;
    }
    if (!first) os << " + ";
    first = false;
    bool paren = deg > 0 && row.size() > 1;
    if (paren) os << "(";
    os << coef.str();
    if (paren) os << ")";
    if (deg >= 1) os << "x";
    if (deg >= 2) os << "^" << deg;
  }
  return os.str();
}

nlohmann::json to_json(const UPoly& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [deg, row] : u.c)
    for (const auto& [k, v] : row) terms.push_back({{"degree", deg}, {"order", k}, {"count", v.get_str()}});
  return {{"terms", terms}, {"text", to_string(u)}};
}

UPoly delta_u_poly(const JumpSource& s, const Character& chi, long characteristic,
                   const CoverOptions& opt) {
  UPoly u;
  for (std::size_t q = 0; q <= s.top_degree(); ++q) {
    auto d = all_depths(s, chi, characteristic, q, opt);
    for (long j = 0; j < chi.order; ++j)
      u.add(q, order_of_power(j, chi.order), Int(static_cast<unsigned long>(d[static_cast<std::size_t>(j)])));
  }
  return u;
}

PoincareFactor pencil_factor(long m) {
  return {static_cast<std::size_t>(m),
          [m](const Character& rho) { return pencil_poincare(m, rho.is_trivial()); }};
}

PoincareFactor source_factor(const JumpSource& s, long characteristic) {
  return {s.ambient(),
          [s, characteristic](const Character& rho) { return s.poincare(rho, characteristic); }};
}

std::vector<IntPoly> product_poincare(const std::vector<PoincareFactor>& factors, const Character& chi) {
  std::size_t total = 0;
  for (const auto& f : factors) total += f.size;
  if (total != chi.exponents.size())
    throw std::invalid_argument("delta_product: character does not split along the factors");
  const long r = chi.order;
  std::vector<std::map<std::vector<long>, IntPoly>> cache(factors.size());
  std::vector<IntPoly> out;
  for (long j = 0; j < r; ++j) {
    IntPoly prod{1};
    std::size_t off = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Character rho{r, {}};
      for (std::size_t t = 0; t < factors[i].size; ++t)
        rho.exponents.push_back(mod_floor(chi.exponents[off + t] * j, r));
      off += factors[i].size;
      Character red = rho.reduced();
      auto key = red.exponents;
      key.push_back(red.order);
      auto it = cache[i].find(key);
      if (it == cache[i].end()) it = cache[i].emplace(key, factors[i].poincare(red)).first;
      prod = poly_mul(prod, it->second);
    }
    out.push_back(std::move(prod));
  }
  return out;
}

UPoly delta_product(const std::vector<PoincareFactor>& factors, const Character& chi) {
  auto polys = product_poincare(factors, chi);
  UPoly u;
  for (long j = 0; j < chi.order; ++j) {
    const IntPoly& prod = polys[static_cast<std::size_t>(j)];
    for (std::size_t deg = 0; deg < prod.size(); ++deg) u.add(deg, order_of_power(j, chi.order), prod[deg]);
  }
  return u;
}

nlohmann::json to_json(const TorsionCertificate& c) {
  nlohmann::json w = nlohmann::json::array();
  for (const auto& x : c.witnesses)
    w.push_back({{"power", x.power}, {"order", x.order}, {"dim_0", x.depth0}, {"dim_p", x.depthp}});
  nlohmann::json j{{"prime", c.prime},        {"degree", c.degree}, {"bound", c.bound},
                   {"dim_0", c.dim0},         {"dim_p", c.dimp},    {"witnesses", w},
                   {"r_minus_one", c.r_minus_one}, {"chain", c.chain}};
  if (c.integral) {
    nlohmann::json t = nlohmann::json::array();
    for (const Int& x : c.integral->torsion) t.push_back(x.get_si());
    j["integral"] = {{"rank", c.integral->rank}, {"torsion", t}, {"text", to_string(*c.integral)}};
  }
  if (c.charpoly) j["charpoly"] = to_json(*c.charpoly);
  return j;
}

std::optional<TorsionCertificate> torsion_detect(const JumpSource& s, const Character& chi,
                                                 long p, std::size_t q, const CoverOptions& opt) {
  if (!is_prime(p)) throw std::invalid_argument("torsion_detect: p must be prime");
  check_cover(chi, p);
  auto d0 = all_depths(s, chi, 0, q, opt);
  auto dp = all_depths(s, chi, p, q, opt);
  TorsionCertificate c;
  c.prime = p;
  c.degree = q;
  c.dim0 = std::accumulate(d0.begin(), d0.end(), std::size_t{0});
  c.dimp = std::accumulate(dp.begin(), dp.end(), std::size_t{0});
  if (c.dimp < c.dim0) throw std::logic_error("torsion_detect: dimension dropped in characteristic p");
  if (c.dimp == c.dim0) return std::nullopt;
  c.bound = c.dimp - c.dim0;
  bool miss0 = true, all_p = true;
  for (long j = 0; j < chi.order; ++j) {
    std::size_t a = d0[static_cast<std::size_t>(j)], b = dp[static_cast<std::size_t>(j)];
    if (j != 0 && chi.power(j).is_trivial() == false) {
      if (a != 0) miss0 = false;
      if (b == 0) all_p = false;
    }
    if (a != b) c.witnesses.push_back({j, order_of_power(j, chi.order), a, b});
  }
  c.r_minus_one = chi.order > 1 && miss0 && all_p;
  c.charpoly = group_by_order(dp, p);
  return c;
}

}  // namespace milnor
