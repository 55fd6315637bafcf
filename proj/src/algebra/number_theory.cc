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

#include "milnor/algebra/number_theory.h"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace milnor {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm_long(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd_long(a, b) * b;
}

long mod_floor(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

long inverse_mod(long a, long n) {
  if (n == 1) return 0;
  long t = 0, nt = 1, r = n, nr = mod_floor(a, n);
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::invalid_argument("inverse_mod: not a unit");
  return mod_floor(t, n);
}

long euler_phi(long k) {
  if (k < 1) throw std::invalid_argument("euler_phi: k must be positive");
  long result = k;
  for (long p : prime_factors(k)) result = result / p * (p - 1);
  return result;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long multiplicative_order(long a, long n) {
  if (n == 1) return 1;
  if (gcd_long(a, n) != 1)
    throw std::invalid_argument("multiplicative_order: gcd(a, n) != 1");
  long x = mod_floor(a, n), k = 1;
  while (x != 1) {
    x = static_cast<long>((static_cast<__int128>(x) * mod_floor(a, n)) % n);
    ++k;
  }
  return k;
}

void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  poly_trim(c);
  return c;
}

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  poly_trim(c);
  return c;
}

IntPoly poly_sub(const IntPoly& a, const IntPoly& b) {
  IntPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  poly_trim(c);
  return c;
}

IntPoly poly_divexact_monic(const IntPoly& a, const IntPoly& b) {
  if (b.empty() || b.back() != 1)
    throw std::invalid_argument("poly_divexact_monic: divisor not monic");
  IntPoly rem = a;
  poly_trim(rem);
  if (rem.size() < b.size()) {
    if (!rem.empty()) throw std::invalid_argument("poly_divexact_monic: inexact");
    return {};
  }
  IntPoly q(rem.size() - b.size() + 1, 0);
  for (std::size_t i = rem.size(); i-- >= b.size();) {
    Int c = rem[i];
    std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) rem[shift + j] -= c * b[j];
  }
  poly_trim(rem);
  if (!rem.empty()) throw std::invalid_argument("poly_divexact_monic: inexact");
  poly_trim(q);
  return q;
}

Int poly_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

IntPoly cyclotomic_poly(long k) {
  if (k < 1) throw std::invalid_argument("cyclotomic_poly: k must be positive");
  static std::mutex mu;
  static std::map<long, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
  }
  // t^k - 1 divided by the proper divisors' factors.
  IntPoly p(k + 1, 0);
  p[0] = -1;
  p[k] = 1;
  for (long d : divisors(k))
    if (d < k) p = poly_divexact_monic(p, cyclotomic_poly(d));
  std::lock_guard<std::mutex> lock(mu);
  cache[k] = p;
  return p;
}

std::string poly_to_string(const IntPoly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    Int c = p[i];
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (c != 1 || i == 0) os << c.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace milnor
