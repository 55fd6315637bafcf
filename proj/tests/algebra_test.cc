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

#include <random>

#include "doctest.h"
#include "milnor/algebra/field.h"
#include "milnor/algebra/kernels.h"
#include "milnor/algebra/matrix.h"
#include "milnor/algebra/number_theory.h"

using namespace milnor;

namespace {

long phi_by_count(long k) {
  long c = 0;
  for (long a = 1; a <= k; ++a)
    if (std::gcd(a, k) == 1) ++c;
  return c;
}

int mobius(long n) {
  int mu = 1;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  if (n > 1) mu = -mu;
  return mu;
}

// Phi_k = prod_{d | k} (t^d - 1)^{mu(k/d)}, evaluated at an integer point.
Rat phi_by_mobius(long k, long x) {
  Rat v = 1;
  for (long d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = mobius(k / d);
    Int term = 1;
    for (long i = 0; i < d; ++i) term *= x;
    term -= 1;
    if (mu == 1) v *= Rat(term);
    if (mu == -1) v /= Rat(term);
  }
  return v;
}

// Rank by cofactor expansion over every square minor; tiny matrices only.
Int det(const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Int s = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Int>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      sub.push_back(row);
    }
    Int t = m[0][c] * det(sub);
    s += (c % 2 == 0) ? t : Int(-t);
  }
  return s;
}

std::size_t rank_by_minors(const IntMatrix& m) {
  std::size_t best = 0;
  std::size_t R = m.rows, C = m.cols;
  for (unsigned rm = 1; rm < (1u << R); ++rm)
    for (unsigned cm = 1; cm < (1u << C); ++cm) {
      std::size_t k = __builtin_popcount(rm);
      if (k != static_cast<std::size_t>(__builtin_popcount(cm)) || k <= best) continue;
      std::vector<std::vector<Int>> sub;
      for (std::size_t i = 0; i < R; ++i) {
        if (!(rm >> i & 1)) continue;
        std::vector<Int> row;
        for (std::size_t j = 0; j < C; ++j)
          if (cm >> j & 1) row.push_back(m.at(i, j));
        sub.push_back(row);
      }
      if (det(sub) != 0) best = k;
    }
  return best;
}

}  // namespace

TEST_CASE("euler phi agrees with a coprime count") {
  for (long k = 1; k <= 200; ++k) CHECK(euler_phi(k) == phi_by_count(k));
}

TEST_CASE("cyclotomic polynomials match the Mobius product") {
  for (long k = 1; k <= 60; ++k) {
    IntPoly p = cyclotomic_poly(k);
    CHECK(static_cast<long>(p.size()) - 1 == euler_phi(k));
    for (long x : {2L, 3L, -2L, 5L})
      CHECK(Rat(poly_eval(p, x)) == phi_by_mobius(k, x));
  }
}

TEST_CASE("product of Phi_d over divisors is t^n - 1") {
  for (long n = 1; n <= 60; ++n) {
    IntPoly prod{1};
    for (long d : divisors(n)) prod = poly_mul(prod, cyclotomic_poly(d));
    IntPoly expect(n + 1, 0);
    expect[0] = -1;
    expect[n] = 1;
    CHECK(prod == expect);
  }
}

TEST_CASE("multiplicative order and inverses") {
  CHECK(multiplicative_order(2, 3) == 2);
  CHECK(multiplicative_order(2, 27) == 18);
  CHECK(multiplicative_order(3, 7) == 6);
  for (long n = 2; n < 50; ++n)
    for (long a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) CHECK(mod_floor(a * inverse_mod(a, n), n) == 1);
}

TEST_CASE("cyclotomic field roots have exact order") {
  for (long n : {1L, 2L, 3L, 4L, 5L, 6L, 8L, 9L, 12L, 15L}) {
    CyclotomicField f(n);
    CHECK(static_cast<long>(f.degree()) == euler_phi(n));
    CHECK(f.equal(f.pow(f.root_power(1), n), f.one()));
    for (long d : divisors(n))
      if (d < n) CHECK_FALSE(f.equal(f.pow(f.root_power(1), d), f.one()));
    // sum of all n-th roots of unity vanishes for n > 1
    std::vector<long> all(n, 1);
    if (n > 1) CHECK(f.is_zero(f.from_group_ring(all)));
    auto a = f.add(f.root_power(1), f.from_int(3));
    CHECK(f.equal(f.mul(a, f.inv(a)), f.one()));
  }
}

TEST_CASE("Galois field sizes and roots") {
  GaloisField f23(2, 3);
  CHECK(f23.degree() == 2);
  CHECK(f23.size() == 4);
  GaloisField f227(2, 27);
  CHECK(f227.degree() == 18);
  CHECK(f227.size() == Int(1) << 18);
  auto z = f227.root_power(1);
  CHECK(f227.equal(f227.pow(z, 27), f227.one()));
  CHECK_FALSE(f227.equal(f227.pow(z, 9), f227.one()));
  GaloisField f37(3, 7);
  CHECK(f37.size() == 729);
  auto w = f37.add(f37.root_power(2), f37.one());
  CHECK(f37.equal(f37.mul(w, f37.inv(w)), f37.one()));
  // Frobenius fixes exactly the prime field: x^p == x for constants.
  CHECK(f37.equal(f37.pow(f37.from_int(2), 3), f37.from_int(2)));
  CHECK_THROWS(field_context(3, 6));
  CHECK(ctx_characteristic(field_context(0, 5)) == 0);
  CHECK(ctx_root_order(field_context(5, 4)) == 4);
}

TEST_CASE("certificate primes carry roots of unity") {
  for (long k : {1L, 2L, 3L, 7L, 12L, 49L}) {
    std::uint32_t m = certificate_prime(k);
    CHECK(m >= (1u << 30));
    CHECK(is_prime(m));
    CHECK((m - 1) % k == 0);
    std::uint32_t w = root_of_unity_mod(k, m);
    CHECK(pow_mod(w, k, m) == 1);
    for (long d : divisors(k))
      if (d < k) CHECK(pow_mod(w, d, m) != 1);
  }
}

TEST_CASE("axpy kernels agree") {
  std::mt19937_64 rng(7);
  for (std::uint32_t m : {2u, 3u, 65537u, 2147483647u, certificate_prime(12)}) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 257u}) {
      std::vector<std::uint32_t> src(n), d1(n);
      for (auto& x : src) x = rng() % m;
      for (auto& x : d1) x = rng() % m;
      auto d2 = d1;
      std::uint32_t c = rng() % m;
      kernels::axpy_mod_scalar(d1.data(), src.data(), c, m, n);
      kernels::axpy_mod_avx2(d2.data(), src.data(), c, m, n);
      CHECK(d1 == d2);
      for (std::size_t i = 0; i < n; ++i) CHECK(d1[i] < m);
    }
  }
}

TEST_CASE("ranks agree with a minor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<long>(rng() % 5) - 2;
    if (trial % 3 == 0 && r > 1)  // force a dependency
      for (std::size_t j = 0; j < c; ++j) m.at(r - 1, j) = m.at(0, j) * 2;
    std::size_t oracle = rank_by_minors(m);
    CHECK(integer_rank(m) == oracle);
    CHECK(smith_normal_form(m).rank == oracle);
    CHECK(smith_normal_form(m, true).rank == oracle);
    std::uint32_t p = certificate_prime(1);
    std::vector<std::uint32_t> a;
    for (auto& x : m.a) a.push_back(static_cast<std::uint32_t>(mod_floor(x.get_si(), p)));
    CHECK(rank_mod_prime(a, r, c, p) == oracle);
    CyclotomicField q(1);
    FieldMatrix<CyclotomicField> fm(q, r, c);
    for (std::size_t i = 0; i < m.a.size(); ++i) fm.a[i] = q.from_int(m.a[i].get_si());
    CHECK(matrix_rank(fm) == oracle);
  }
}

TEST_CASE("Smith normal form") {
  auto s = smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}}, 2), true);
  CHECK(s.invariant_factors == std::vector<Int>{2, 4});
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m(r, c);
    for (auto& x : m.a) x = static_cast<long>(rng() % 13) - 6;
    auto a = smith_normal_form(m, true);
    auto b = smith_normal_form(m, false);
    CHECK(a.invariant_factors == b.invariant_factors);
    // Invariance under a random unimodular change of basis.
    IntMatrix u = IntMatrix::identity(r);
    for (int k = 0; k < 6 && r > 1; ++k) {
      std::size_t i = rng() % r, j = rng() % r;
      if (i == j) continue;
      long q = static_cast<long>(rng() % 5) - 2;
      for (std::size_t t = 0; t < r; ++t) u.at(i, t) += q * u.at(j, t);
    }
    CHECK(smith_normal_form(u * m).invariant_factors == a.invariant_factors);
    // Transforms are unimodular: the product of their SNF factors is 1.
    for (const auto& f : smith_normal_form(*a.u).invariant_factors) CHECK(f == 1);
    for (const auto& f : smith_normal_form(*a.v).invariant_factors) CHECK(f == 1);
  }
  AbelianGroup g = cokernel(IntMatrix::from_rows({{2, 0}, {0, 3}}, 2));
  CHECK(g.rank == 0);
  CHECK(g.torsion == std::vector<Int>{6});
  CHECK(to_string(cokernel(IntMatrix::from_rows({{0, 2, 0}}, 3))) == "Z^2 + Z_2");
}
