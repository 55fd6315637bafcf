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

#include "milnor/fpgroups/fox.h"

#include <algorithm>
#include <cstdlib>

namespace milnor {

GroupRingMatrix fox_group_ring(const Presentation& p, const Character& chi) {
  if (chi.exponents.size() != p.generators)
    throw std::invalid_argument("fox: character length differs from generator count");
  Character c = chi.canonical();
  const long r = c.order;
  GroupRingMatrix m{p.relators.size(), p.generators, r, {}};
  m.a.assign(m.rows * m.cols, GroupRingElem(static_cast<std::size_t>(r), 0));
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word w = cyclic_reduce(p.relators[i]);
    long s = 0;  // chi of the prefix read so far
    for (int x : w) {
      std::size_t j = static_cast<std::size_t>(std::abs(x)) - 1;
      if (x > 0) {
        m.at(i, j)[static_cast<std::size_t>(s)] += 1;
        s = mod_floor(s + c.exponents[j], r);
      } else {
        // d(u x^-1) = du - chi(u) chi(x)^-1 dx
        s = mod_floor(s - c.exponents[j], r);
        m.at(i, j)[static_cast<std::size_t>(s)] -= 1;
      }
    }
  }
  return m;
}

namespace {

std::size_t generic_rank(const GroupRingMatrix& j, const FieldCtx& ctx) {
  return std::visit([&](const auto& f) { return matrix_rank(evaluate(j, f)); }, ctx);
}

std::size_t rank_prime_field(const GroupRingMatrix& j, std::uint32_t ell, std::uint32_t omega) {
  const long r = j.order;
  std::vector<std::uint32_t> pw(static_cast<std::size_t>(r));
  std::uint64_t cur = 1;
  for (long k = 0; k < r; ++k) {
    pw[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(cur);
    cur = cur * omega % ell;
  }
  std::vector<std::uint32_t> a(j.a.size());
  for (std::size_t i = 0; i < j.a.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < j.a[i].size(); ++k) {
      long c = j.a[i][k];
      if (c == 0) continue;
      std::uint64_t cm = static_cast<std::uint64_t>(mod_floor(c, static_cast<long>(ell)));
      acc = (acc + cm * pw[k]) % ell;
    }
    a[i] = static_cast<std::uint32_t>(acc);
  }
  return rank_mod_prime(std::move(a), j.rows, j.cols, ell);
}

}  // namespace

std::size_t fox_rank(const Presentation& p, const Character& rho, long characteristic) {
  const Character c = rho.reduced();
  const GroupRingMatrix j = fox_group_ring(p, c);
  if (j.rows == 0 || j.cols == 0) return 0;
  const long d = c.order;
  if (characteristic == 0) {
    if (d <= 2) {
      // Values are +-1: the rational rank is the integer rank.
      IntMatrix m(j.rows, j.cols);
      for (std::size_t i = 0; i < j.a.size(); ++i) {
        long v = j.a[i][0];
        if (d == 2) v -= j.a[i][1];
        m.a[i] = v;
      }
      return integer_rank(m);
    }
    std::uint32_t ell = certificate_prime(d);
    std::size_t lower = rank_prime_field(j, ell, root_of_unity_mod(d, ell));
    std::size_t upper = std::min(j.rows, p.generators - 1);
    if (lower == upper) return lower;
    return matrix_rank(evaluate(j, cached_cyclotomic(d)));
  }
  if (!is_prime(characteristic))
    throw std::invalid_argument("fox: characteristic must be 0 or prime");
  if (d % characteristic == 0)
    throw std::invalid_argument("fox: character order divisible by the characteristic");
  const GaloisField& f = cached_galois(characteristic, d);
  if (f.degree() == 1) {
    std::uint32_t omega = f.root_power(1)[0];
    return rank_prime_field(j, static_cast<std::uint32_t>(characteristic), omega);
  }
  return matrix_rank(evaluate(j, f));
}

TwistedBetti01 twisted_betti_01(const Presentation& p, const Character& rho, long characteristic) {
  const bool trivial = rho.is_trivial();
  std::size_t r = fox_rank(p, rho, characteristic);
  std::size_t d1 = trivial ? 0 : 1;
  if (p.generators < r + d1) throw std::logic_error("fox: rank exceeds generator count");
  return {trivial ? 1u : 0u, p.generators - d1 - r};
}

TwistedBetti01 twisted_betti_01(const Presentation& p, const Character& rho, const FieldCtx& ctx) {
  const bool trivial = rho.is_trivial();
  long n = ctx_root_order(ctx);
  if (n % rho.order != 0) throw std::invalid_argument("fox: order/context mismatch");
  std::size_t r = p.relators.empty() ? 0 : generic_rank(fox_group_ring(p, rho), ctx);
  std::size_t d1 = trivial ? 0 : 1;
  if (p.generators < r + d1) throw std::logic_error("fox: rank exceeds generator count");
  return {trivial ? 1u : 0u, p.generators - d1 - r};
}

}  // namespace milnor
