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

#ifndef MILNOR_FPGROUPS_FOX_H_
#define MILNOR_FPGROUPS_FOX_H_

#include <stdexcept>
#include <utility>
#include <vector>

#include "milnor/algebra/field.h"
#include "milnor/algebra/matrix.h"
#include "milnor/fpgroups/presentation.h"

namespace milnor {

// Element of Z[Z_r]: coefficients of t^0 .. t^{r-1}.
using GroupRingElem = std::vector<long>;

struct GroupRingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  long order = 1;
  std::vector<GroupRingElem> a;

  const GroupRingElem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  GroupRingElem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

// Fox Jacobian pushed forward to Z[Z_r] along chi (rows: relators).
GroupRingMatrix fox_group_ring(const Presentation& p, const Character& chi);

// sum_j c_j zeta_r^j in a field whose root order is a multiple of r.
template <class F>
typename F::Element evaluate_group_ring(const F& f, const GroupRingElem& c, long r) {
  long n = f.root_order();
  if (n % r != 0) throw std::invalid_argument("fox: field has no root of order " + std::to_string(r));
  long s = n / r;
  typename F::Element acc = f.zero();
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0) acc = f.add(acc, f.mul(f.from_int(c[j]), f.root_power(static_cast<long>(j) * s)));
  return acc;
}

template <class F>
FieldMatrix<F> evaluate(const GroupRingMatrix& m, const F& f) {
  FieldMatrix<F> out(f, m.rows, m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = evaluate_group_ring(f, m.a[i], m.order);
  return out;
}

template <class F>
FieldMatrix<F> fox_jacobian(const Presentation& p, const Character& rho, const F& f) {
  return evaluate(fox_group_ring(p, rho), f);
}

// Rank of the Fox Jacobian at rho over the smallest field of the given
// characteristic holding its values. In characteristic 0 the rank is taken
// from a prime l = 1 mod ord(rho) when that already meets the upper bound
// min(#relators, g - 1); otherwise it is recomputed exactly over Q(zeta).
std::size_t fox_rank(const Presentation& p, const Character& rho, long characteristic);

struct TwistedBetti01 {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  bool operator==(const TwistedBetti01&) const = default;
};

TwistedBetti01 twisted_betti_01(const Presentation& p, const Character& rho, long characteristic);
// Same, evaluated in a given field context (plain elimination).
TwistedBetti01 twisted_betti_01(const Presentation& p, const Character& rho, const FieldCtx& ctx);

}  // namespace milnor

#endif  // MILNOR_FPGROUPS_FOX_H_
