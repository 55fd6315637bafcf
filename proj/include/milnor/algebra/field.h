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

#ifndef MILNOR_ALGEBRA_FIELD_H_
#define MILNOR_ALGEBRA_FIELD_H_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "milnor/algebra/number_theory.h"

namespace milnor {

// Q(zeta_n) realized as Q[t]/Phi_n, zeta = t. Elements are coefficient
// vectors of length phi(n) in the power basis.
class CyclotomicField {
 public:
  using Element = std::vector<Rat>;

  explicit CyclotomicField(long n);

  long characteristic() const { return 0; }
  long root_order() const { return n_; }
  std::size_t degree() const { return degree_; }
  const IntPoly& modulus() const { return phi_; }

  Element zero() const { return Element(degree_, 0); }
  Element one() const { return from_int(1); }
  Element from_int(long v) const;
  Element from_rat(const Rat& v) const;
  // zeta^k for any integer k.
  const Element& root_power(long k) const;
  // sum_j c[j] zeta^j.
  Element from_group_ring(const std::vector<long>& c) const;

  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, const Int& e) const;
  // a -= f * b, in place.
  void sub_mul(Element& a, const Element& f, const Element& b) const;

  std::string to_string(const Element& a) const;

 private:
  long n_;
  std::size_t degree_;
  IntPoly phi_;
  std::vector<Element> powers_;  // t^j mod Phi_n, 0 <= j < n
};

// F_p[t]/(f) with f the lexicographically least monic irreducible of degree
// e = ord_n(p), together with an element zeta of exact order n.
class GaloisField {
 public:
  using Element = std::vector<std::uint32_t>;

  GaloisField(long p, long n);

  long characteristic() const { return p_; }
  long root_order() const { return n_; }
  std::size_t degree() const { return e_; }
  const std::vector<std::uint32_t>& modulus() const { return f_; }
  Int size() const;

  Element zero() const { return Element(e_, 0); }
  Element one() const { return from_int(1); }
  Element from_int(long v) const;
  const Element& root_power(long k) const;
  Element from_group_ring(const std::vector<long>& c) const;

  bool is_zero(const Element& a) const;
  bool equal(const Element& a, const Element& b) const { return a == b; }
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;
  Element pow(const Element& a, const Int& e) const;
  void sub_mul(Element& a, const Element& f, const Element& b) const;

  std::string to_string(const Element& a) const;

 private:
  long p_;
  long n_;
  std::size_t e_;
  std::vector<std::uint32_t> f_;  // monic, length e + 1
  std::vector<Element> powers_;   // zeta^j, 0 <= j < n
};

using FieldCtx = std::variant<CyclotomicField, GaloisField>;

// Characteristic 0 gives Q(zeta_n); a prime p with p not dividing n gives the
// smallest F_{p^e} containing the n-th roots of unity.
FieldCtx field_context(long characteristic, long n);

// Process-wide caches; the returned references stay valid.
const CyclotomicField& cached_cyclotomic(long n);
const GaloisField& cached_galois(long p, long n);

long ctx_characteristic(const FieldCtx& ctx);
long ctx_root_order(const FieldCtx& ctx);

// Helpers for the prime field F_m, m < 2^31.
std::uint32_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint32_t m);
std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t m);
// Element of exact order k in F_m; requires k | m - 1.
std::uint32_t root_of_unity_mod(long k, std::uint32_t m);
// Smallest prime m = 1 mod k above 2^30 (or the next after `after`).
std::uint32_t certificate_prime(long k, std::uint32_t after = 0);

}  // namespace milnor

#endif  // MILNOR_ALGEBRA_FIELD_H_
