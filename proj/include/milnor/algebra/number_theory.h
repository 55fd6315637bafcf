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

#ifndef MILNOR_ALGEBRA_NUMBER_THEORY_H_
#define MILNOR_ALGEBRA_NUMBER_THEORY_H_

#include <gmpxx.h>

#include <string>
#include <vector>

namespace milnor {

using Int = mpz_class;
using Rat = mpq_class;

// Integer polynomial, coefficients from degree 0 upward.
using IntPoly = std::vector<Int>;

long euler_phi(long k);
std::vector<long> divisors(long n);
std::vector<long> prime_factors(long n);
bool is_prime(long n);
long gcd_long(long a, long b);
long lcm_long(long a, long b);

// Least nonnegative residue.
long mod_floor(long a, long n);
long inverse_mod(long a, long n);

// Order of a in (Z/n)^*; requires gcd(a, n) = 1. Returns 1 for n = 1.
long multiplicative_order(long a, long n);

IntPoly cyclotomic_poly(long k);

void poly_trim(IntPoly& p);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
IntPoly poly_add(const IntPoly& a, const IntPoly& b);
IntPoly poly_sub(const IntPoly& a, const IntPoly& b);
// Quotient by a monic divisor; the remainder must vanish.
IntPoly poly_divexact_monic(const IntPoly& a, const IntPoly& b);
// Evaluates at an integer.
Int poly_eval(const IntPoly& p, const Int& x);
std::string poly_to_string(const IntPoly& p, const std::string& var = "t");

}  // namespace milnor

#endif  // MILNOR_ALGEBRA_NUMBER_THEORY_H_
