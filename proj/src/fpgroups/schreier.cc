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

#include "milnor/fpgroups/schreier.h"

#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>

#include "milnor/fpgroups/fox.h"

namespace milnor {

namespace {

using Action = std::function<std::size_t(std::size_t, std::size_t)>;

// Rewrites p over the cosets of a normal subgroup, given the right action of
// each generator on cosets and a Schreier transversal.
KernelPresentation rewrite(const Presentation& p, std::vector<Word> transversal,
                           const Action& act) {
  const std::size_t nc = transversal.size(), g = p.generators;
  KernelPresentation out;
  // index[c * g + i] = kernel generator number + 1, or 0 when trivial
  std::vector<std::size_t> index(nc * g, 0);
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < g; ++i) {
      std::size_t d = act(c, i);
      Word s = free_reduce(concat(concat(transversal[c], {static_cast<int>(i) + 1}),
                                  inverse(transversal[d])));
      if (s.empty()) continue;
      out.source.push_back({c, i});
      out.target.push_back(d);
      index[c * g + i] = out.source.size();
    }
  std::vector<std::size_t> back(nc * g);  // coset c x_i^{-1}
  for (std::size_t c = 0; c < nc; ++c)
    for (std::size_t i = 0; i < g; ++i) back[act(c, i) * g + i] = c;
  out.presentation.generators = out.source.size();
  for (const Word& r : p.relators)
    for (std::size_t c0 = 0; c0 < nc; ++c0) {
      Word w;
      std::size_t c = c0;
      for (int x : r) {
        std::size_t i = static_cast<std::size_t>(std::abs(x)) - 1;
        if (x > 0) {
          if (std::size_t k = index[c * g + i]) w.push_back(static_cast<int>(k));
          c = act(c, i);
        } else {
          c = back[c * g + i];
          if (std::size_t k = index[c * g + i]) w.push_back(-static_cast<int>(k));
        }
      }
      if (c != c0) throw std::logic_error("schreier: relator does not lie in the kernel");
      out.presentation.relators.push_back(std::move(w));
    }
  out.presentation.normalize();
  out.transversal = std::move(transversal);
  return out;
}

void check_character(const Presentation& p, const Character& chi) {
  if (chi.exponents.size() != p.generators)
    throw std::invalid_argument("character length differs from generator count");
  if (!chi.is_surjective()) throw std::invalid_argument("character is not surjective");
  for (const Word& r : p.relators)
    if (chi.value(r) != 0) throw std::invalid_argument("character does not vanish on relators");
}

}  // namespace

KernelPresentation kernel_presentation(const Presentation& p, const AbelianQuotient& q) {
  if (q.images.size() != p.generators)
    throw std::invalid_argument("quotient: image count differs from generator count");
  std::size_t size = 1;
  for (long m : q.moduli) {
    if (m < 1) throw std::invalid_argument("quotient: moduli must be positive");
    size *= static_cast<std::size_t>(m);
  }
  auto encode = [&](const std::vector<long>& v) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < q.moduli.size(); ++f)
      idx = idx * static_cast<std::size_t>(q.moduli[f]) +
            static_cast<std::size_t>(mod_floor(v[f], q.moduli[f]));
    return idx;
  };
  auto decode = [&](std::size_t idx) {
    std::vector<long> v(q.moduli.size());
    for (std::size_t f = q.moduli.size(); f-- > 0;) {
      v[f] = static_cast<long>(idx % static_cast<std::size_t>(q.moduli[f]));
      idx /= static_cast<std::size_t>(q.moduli[f]);
    }
    return v;
  };
  for (const auto& im : q.images)
    if (im.size() != q.moduli.size()) throw std::invalid_argument("quotient: image length mismatch");
  auto shift = [&](std::size_t c, std::size_t i, int sign) {
    std::vector<long> v = decode(c);
    for (std::size_t f = 0; f < v.size(); ++f) v[f] += sign * q.images[i][f];
    return encode(v);
  };
  for (const Word& r : p.relators) {
    std::size_t c = 0;
    for (int x : r) c = shift(c, static_cast<std::size_t>(std::abs(x)) - 1, x > 0 ? 1 : -1);
    if (c != 0) throw std::invalid_argument("quotient does not vanish on relators");
  }
  std::vector<Word> tr(size);
  std::vector<bool> seen(size, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < p.generators; ++i)
      for (int sign : {1, -1}) {
        std::size_t d = shift(c, i, sign);
        if (seen[d]) continue;
        seen[d] = true;
        tr[d] = concat(tr[c], {sign * (static_cast<int>(i) + 1)});
        queue.push_back(d);
      }
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("quotient map is not surjective");
  std::vector<std::size_t> table(size * p.generators);
  for (std::size_t c = 0; c < size; ++c)
    for (std::size_t i = 0; i < p.generators; ++i) table[c * p.generators + i] = shift(c, i, 1);
  const std::size_t g = p.generators;
  return rewrite(p, std::move(tr), [&](std::size_t c, std::size_t i) { return table[c * g + i]; });
}

KernelPresentation cyclic_kernel_presentation(const Presentation& p, const Character& chi0) {
  check_character(p, chi0);
  const Character chi = chi0.canonical();
  const long r = chi.order;
  std::size_t unit = p.generators;
  for (std::size_t i = 0; i < p.generators; ++i)
    if (gcd_long(chi.exponents[i], r) == 1) {
      unit = i;
      break;
    }
  if (unit == p.generators) return kernel_presentation(p, {{r}, [&] {
                                                          std::vector<std::vector<long>> im;
                                                          for (long e : chi.exponents) im.push_back({e});
                                                          return im;
                                                        }()});
  // t_v = x_unit^c with c * a_unit = v.
  const long inv = inverse_mod(chi.exponents[unit], r);
  std::vector<Word> tr(static_cast<std::size_t>(r));
  for (long v = 0; v < r; ++v)
    tr[static_cast<std::size_t>(v)] = Word(static_cast<std::size_t>(mod_floor(v * inv, r)),
                                           static_cast<int>(unit) + 1);
  return rewrite(p, std::move(tr), [&](std::size_t c, std::size_t i) {
    return static_cast<std::size_t>(mod_floor(static_cast<long>(c) + chi.exponents[i], r));
  });
}

Presentation reidemeister_schreier(const Presentation& p, const Character& chi) {
  return cyclic_kernel_presentation(p, chi).presentation;
}

AbelianGroup integral_h1_kernel(const Presentation& p, const Character& chi) {
  Presentation k = reidemeister_schreier(p, chi);
  std::vector<SparseIntRow> rows;
  for (const Word& w : k.relators) {
    SparseIntRow row;
    for (int x : w) row[static_cast<std::size_t>(std::abs(x)) - 1] += x > 0 ? 1 : -1;
    rows.push_back(std::move(row));
  }
  return cokernel_sparse(std::move(rows), k.generators);
}

std::size_t phi_module_rank(const Presentation& p, const Character& chi, long k) {
  if (k < 1 || chi.order % k != 0) throw std::invalid_argument("phi_module_rank: k must divide r");
  if (chi.exponents.size() != p.generators)
    throw std::invalid_argument("character length differs from generator count");
  const IntPoly phi = cyclotomic_poly(k);
  const std::size_t f = phi.size() - 1;
  // powers[e] is the matrix of multiplication by t^e on Z[t]/Phi_k, column
  // j holding t^e * t^j in the basis 1, t, ..., t^{f-1}.
  std::vector<IntMatrix> powers;
  {
    IntMatrix cur = IntMatrix::identity(f), comp(f, f);
    for (std::size_t j = 0; j + 1 < f; ++j) comp.at(j + 1, j) = 1;
    for (std::size_t i = 0; i < f; ++i) comp.at(i, f - 1) = -phi[i];
    for (long e = 0; e < k; ++e) {
      powers.push_back(cur);
      cur = comp * cur;
    }
  }
  auto block = [&](const GroupRingElem& c, IntMatrix& out, std::size_t r0, std::size_t c0) {
    for (std::size_t e = 0; e < c.size(); ++e) {
      if (c[e] == 0) continue;
      const IntMatrix& m = powers[e % static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < f; ++i)
        for (std::size_t j = 0; j < f; ++j) out.at(r0 + i, c0 + j) += c[e] * m.at(i, j);
    }
  };
  Character c{k, {}};
  for (long e : chi.exponents) c.exponents.push_back(mod_floor(e, k));
  const GroupRingMatrix j = fox_group_ring(p, c);
  const std::size_t g = p.generators;
  IntMatrix d2(j.rows * f, g * f);
  for (std::size_t r = 0; r < j.rows; ++r)
    for (std::size_t i = 0; i < g; ++i) block(j.at(r, i), d2, r * f, i * f);
  IntMatrix d1(g * f, f);
  for (std::size_t i = 0; i < g; ++i) {
    GroupRingElem x(static_cast<std::size_t>(k), 0);
    x[static_cast<std::size_t>(c.exponents[i])] += 1;
    x[0] -= 1;
    block(x, d1, i * f, 0);
  }
  return g * f - integer_rank(d1) - (j.rows ? integer_rank(d2) : 0);
}

}  // namespace milnor
