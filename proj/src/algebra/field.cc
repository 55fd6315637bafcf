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

#include "milnor/algebra/field.h"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace milnor {

namespace {

using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Division with remainder in Q[t]; b nonzero and trimmed.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rat c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
  }
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  trim(c);
  return c;
}

RatPoly rat_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  trim(c);
  return c;
}

// Polynomial helpers over F_p with coefficient vectors, low degree first.
using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
      if (c[i + j] >= (1ULL << 62)) c[i + j] %= p;
    }
  ModPoly out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] % p;
  trim(out);
  return out;
}

ModPoly mod_rem(ModPoly a, const ModPoly& f, std::uint32_t p) {
  trim(a);
  std::uint32_t lead_inv = inv_mod_prime(f.back(), p);
  while (a.size() >= f.size()) {
    std::size_t shift = a.size() - f.size();
    std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t j = 0; j < f.size(); ++j)
      a[shift + j] = static_cast<std::uint32_t>(
          (a[shift + j] + (p - c) * f[j]) % p);
    trim(a);
  }
  return a;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly mod_powmod(const ModPoly& base, const Int& e, const ModPoly& f,
                   std::uint32_t p) {
  ModPoly result{1};
  ModPoly b = mod_rem(base, f, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod_rem(mod_mul(result, result, p), f, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mod_rem(mod_mul(result, b, p), f, p);
  }
  return result;
}

// Ben-Or: f of degree e is irreducible iff gcd(t^{p^i} - t, f) = 1 for
// every i <= e / 2.
bool is_irreducible(const ModPoly& f, std::uint32_t p) {
  std::size_t e = f.size() - 1;
  ModPoly t{0, 1};
  ModPoly h = t;
  for (std::size_t i = 1; i <= e / 2; ++i) {
    h = mod_powmod(h, Int(p), f, p);
    ModPoly d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    ModPoly g = mod_gcd(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

ModPoly digits(Int code, std::uint32_t p, std::size_t len) {
  ModPoly out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    Int r = code % p;
    out[i] = static_cast<std::uint32_t>(r.get_ui());
    code /= p;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Q(zeta_n)

CyclotomicField::CyclotomicField(long n) : n_(n) {
  if (n < 1) throw std::invalid_argument("CyclotomicField: order must be positive");
  phi_ = cyclotomic_poly(n);
  degree_ = phi_.size() - 1;
  powers_.reserve(n);
  Element cur = zero();
  cur[0] = 1;
  for (long j = 0; j < n; ++j) {
    powers_.push_back(cur);
    // Multiply by t and reduce with t^d = -sum phi_i t^i.
    Element next(degree_, 0);
    Rat top = cur[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < degree_; ++i) next[i] -= top * Rat(phi_[i]);
    cur = std::move(next);
  }
}

CyclotomicField::Element CyclotomicField::from_int(long v) const {
  Element a = zero();
  a[0] = v;
  return a;
}

CyclotomicField::Element CyclotomicField::from_rat(const Rat& v) const {
  Element a = zero();
  a[0] = v;
  return a;
}

const CyclotomicField::Element& CyclotomicField::root_power(long k) const {
  return powers_[mod_floor(k, n_)];
}

CyclotomicField::Element CyclotomicField::from_group_ring(
    const std::vector<long>& c) const {
  Element a = zero();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const Element& z = root_power(static_cast<long>(j));
    for (std::size_t i = 0; i < degree_; ++i)
      if (z[i] != 0) a[i] += z[i] * c[j];
  }
  return a;
}

bool CyclotomicField::is_zero(const Element& a) const {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

CyclotomicField::Element CyclotomicField::add(const Element& a,
                                              const Element& b) const {
  Element c = a;
  for (std::size_t i = 0; i < degree_; ++i) c[i] += b[i];
  return c;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a,
                                              const Element& b) const {
  Element c = a;
  for (std::size_t i = 0; i < degree_; ++i) c[i] -= b[i];
  return c;
}

CyclotomicField::Element CyclotomicField::neg(const Element& a) const {
  Element c = a;
  for (Rat& x : c) x = -x;
  return c;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a,
                                              const Element& b) const {
  std::vector<Rat> conv(2 * degree_ - 1, 0);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < degree_; ++j)
      if (b[j] != 0) conv[i + j] += a[i] * b[j];
  }
  Element c(conv.begin(), conv.begin() + degree_);
  for (std::size_t i = degree_; i < conv.size(); ++i) {
    if (conv[i] == 0) continue;
    const Element& z = root_power(static_cast<long>(i));
    for (std::size_t k = 0; k < degree_; ++k)
      if (z[k] != 0) c[k] += conv[i] * z[k];
  }
  return c;
}

void CyclotomicField::sub_mul(Element& a, const Element& f,
                              const Element& b) const {
  Element prod = mul(f, b);
  for (std::size_t i = 0; i < degree_; ++i) a[i] -= prod[i];
}

CyclotomicField::Element CyclotomicField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("CyclotomicField: inverse of zero");
  RatPoly m(phi_.begin(), phi_.end());
  RatPoly x(a.begin(), a.end());
  trim(x);
  RatPoly r0 = m, r1 = x, s0, s1{1};
  while (!r1.empty()) {
    RatPoly q, r;
    divmod(r0, r1, q, r);
    RatPoly s2 = rat_sub(s0, rat_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_n is irreducible.
  Rat c = r0[0];
  RatPoly q, rem;
  divmod(s0, m, q, rem);
  Element out = zero();
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return out;
}

CyclotomicField::Element CyclotomicField::pow(const Element& a,
                                              const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  Element result = one();
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

std::string CyclotomicField::to_string(const Element& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = degree_; i-- > 0;) {
    if (a[i] == 0) continue;
    Rat c = a[i];
    bool neg = c < 0;
    if (neg) c = -c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (c != 1 || i == 0) os << c.get_str();
    if (i >= 1) os << "z";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- F_{p^e}

GaloisField::GaloisField(long p, long n) : p_(p), n_(n) {
  if (!is_prime(p)) throw std::invalid_argument("GaloisField: characteristic not prime");
  if (p >= (1L << 31)) throw std::invalid_argument("GaloisField: characteristic too large");
  if (n < 1) throw std::invalid_argument("GaloisField: order must be positive");
  if (n % p == 0)
    throw std::invalid_argument("GaloisField: characteristic divides root order");
  const std::uint32_t up = static_cast<std::uint32_t>(p);
  e_ = static_cast<std::size_t>(multiplicative_order(p, n));
  Int pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), up, e_);
  // Monic irreducible of degree e, least when read as a base-p numeral with
  // the constant term least significant.
  for (Int code = (e_ == 1 ? 0 : 1); code < pe; ++code) {
    ModPoly f = digits(code, up, e_);
    if (e_ >= 2 && f[0] == 0) continue;
    f.push_back(1);
    if (is_irreducible(f, up)) {
      f_ = f;
      break;
    }
  }
  if (f_.empty()) throw std::logic_error("GaloisField: no irreducible found");
  // zeta = g^{(q-1)/n} for the first g of exact image order n.
  Int exponent = (pe - 1) / n;
  std::vector<long> primes = prime_factors(n);
  Element zeta;
  for (Int code = 1; code < pe; ++code) {
    Element g = digits(code, up, e_);
    Element z = pow(g, exponent);
    bool exact = true;
    for (long l : primes)
      if (pow(z, Int(n / l)) == one()) exact = false;
    if (exact) {
      zeta = z;
      break;
    }
  }
  if (zeta.empty()) throw std::logic_error("GaloisField: no root of unity found");
  powers_.reserve(n);
  Element cur = one();
  for (long j = 0; j < n; ++j) {
    powers_.push_back(cur);
    cur = mul(cur, zeta);
  }
  if (cur != one()) throw std::logic_error("GaloisField: root order check failed");
}

Int GaloisField::size() const {
  Int q;
  mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p_), e_);
  return q;
}

GaloisField::Element GaloisField::from_int(long v) const {
  Element a = zero();
  a[0] = static_cast<std::uint32_t>(mod_floor(v, p_));
  return a;
}

const GaloisField::Element& GaloisField::root_power(long k) const {
  return powers_[mod_floor(k, n_)];
}

GaloisField::Element GaloisField::from_group_ring(
    const std::vector<long>& c) const {
  std::vector<long> acc(e_, 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    long cj = mod_floor(c[j], p_);
    if (cj == 0) continue;
    const Element& z = root_power(static_cast<long>(j));
    for (std::size_t i = 0; i < e_; ++i)
      acc[i] = (acc[i] + cj * static_cast<long>(z[i])) % p_;
  }
  Element a(e_);
  for (std::size_t i = 0; i < e_; ++i) a[i] = static_cast<std::uint32_t>(acc[i]);
  return a;
}

bool GaloisField::is_zero(const Element& a) const {
  for (std::uint32_t x : a)
    if (x != 0) return false;
  return true;
}

GaloisField::Element GaloisField::add(const Element& a, const Element& b) const {
  Element c(e_);
  for (std::size_t i = 0; i < e_; ++i)
    c[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a[i]) + b[i]) % p_);
  return c;
}

GaloisField::Element GaloisField::sub(const Element& a, const Element& b) const {
  Element c(e_);
  for (std::size_t i = 0; i < e_; ++i)
    c[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a[i]) + static_cast<std::uint64_t>(p_) - b[i]) % p_);
  return c;
}

GaloisField::Element GaloisField::neg(const Element& a) const {
  Element c(e_);
  for (std::size_t i = 0; i < e_; ++i)
    c[i] = a[i] == 0 ? 0 : static_cast<std::uint32_t>(p_ - a[i]);
  return c;
}

GaloisField::Element GaloisField::mul(const Element& a, const Element& b) const {
  const std::uint64_t p = static_cast<std::uint64_t>(p_);
  if (e_ == 1) return Element{static_cast<std::uint32_t>(a[0] * static_cast<std::uint64_t>(b[0]) % p)};
  std::vector<std::uint64_t> c(2 * e_ - 1, 0);
  for (std::size_t i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    const std::uint64_t ai = a[i];
    for (std::size_t j = 0; j < e_; ++j) c[i + j] += ai * b[j];
  }
  for (auto& x : c) x %= p;
  // t^e = -sum_{j<e} f_j t^j.
  for (std::size_t i = c.size(); i-- > e_;) {
    std::uint64_t top = c[i];
    if (top == 0) continue;
    std::size_t shift = i - e_;
    for (std::size_t j = 0; j < e_; ++j)
      if (f_[j] != 0) c[shift + j] = (c[shift + j] + top * (p - f_[j])) % p;
  }
  Element out(e_);
  for (std::size_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(c[i]);
  return out;
}

void GaloisField::sub_mul(Element& a, const Element& f, const Element& b) const {
  a = sub(a, mul(f, b));
}

GaloisField::Element GaloisField::pow(const Element& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  Element result = one();
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, a);
  }
  return result;
}

GaloisField::Element GaloisField::inv(const Element& a) const {
  if (is_zero(a)) throw std::domain_error("GaloisField: inverse of zero");
  return pow(a, size() - 2);
}

std::string GaloisField::to_string(const Element& a) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = e_; i-- > 0;) {
    if (a[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (a[i] != 1 || i == 0) os << a[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

// ---------------------------------------------------------------- contexts

const CyclotomicField& cached_cyclotomic(long n) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CyclotomicField>(n);
  return *slot;
}

const GaloisField& cached_galois(long p, long n) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, n}];
  if (!slot) slot = std::make_unique<GaloisField>(p, n);
  return *slot;
}

FieldCtx field_context(long characteristic, long n) {
  if (characteristic == 0) return CyclotomicField(n);
  if (!is_prime(characteristic))
    throw std::invalid_argument("field_context: characteristic must be 0 or prime");
  if (n % characteristic == 0)
    throw std::invalid_argument("field_context: characteristic divides the root order");
  return GaloisField(characteristic, n);
}

long ctx_characteristic(const FieldCtx& ctx) {
  return std::visit([](const auto& f) { return f.characteristic(); }, ctx);
}

long ctx_root_order(const FieldCtx& ctx) {
  return std::visit([](const auto& f) { return f.root_order(); }, ctx);
}

std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t m) {
  if (a % m == 0) throw std::domain_error("inv_mod_prime: zero");
  return pow_mod(a, m - 2, m);
}

std::uint32_t root_of_unity_mod(long k, std::uint32_t m) {
  if ((m - 1) % k != 0) throw std::invalid_argument("root_of_unity_mod: k does not divide m - 1");
  std::vector<long> primes = prime_factors(k);
  for (std::uint32_t g = 2; g < m; ++g) {
    std::uint32_t z = pow_mod(g, (m - 1) / k, m);
    bool exact = true;
    for (long l : primes)
      if (pow_mod(z, k / l, m) == 1) exact = false;
    if (exact) return z;
  }
  if (k == 1) return 1;
  throw std::logic_error("root_of_unity_mod: none found");
}

std::uint32_t certificate_prime(long k, std::uint32_t after) {
  std::uint64_t start = std::max<std::uint64_t>(after + 1ULL, 1ULL << 30);
  std::uint64_t m = start + mod_floor(1 - static_cast<long>(start % k), k);
  for (; m < (1ULL << 31); m += k)
    if (is_prime(static_cast<long>(m))) return static_cast<std::uint32_t>(m);
  throw std::logic_error("certificate_prime: exhausted range");
}

}  // namespace milnor
