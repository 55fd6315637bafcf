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

#include "milnor/fpgroups/arrangement_group.h"

#include <stdexcept>

#include "milnor/fpgroups/sweep.h"

namespace milnor {

namespace {

// Base braid arrangement, lines X, Y, Z, X-Y, X-Z, Y-Z.
Arrangement base_braid() {
  return Arrangement::integral(
      3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, -1, 0}, {1, 0, -1}, {0, 1, -1}},
      {"X", "Y", "Z", "X-Y", "X-Z", "Y-Z"});
}

}  // namespace

std::optional<MonomialShape> monomial_shape(const Arrangement& a) {
  if (a.dim() != 3) return std::nullopt;
  const long p = a.is_rational() ? 2 : a.field_order();
  const CyclotomicField& f = cached_cyclotomic(p);
  if (f.degree() != a.field().degree()) return std::nullopt;
  MonomialShape s{p, {}, {false, false, false}};
  std::vector<int> seen(static_cast<std::size_t>(3 + 3 * p), 0);
  const std::pair<int, int> blocks[3] = {{0, 1}, {0, 2}, {1, 2}};
  for (std::size_t h = 0; h < a.size(); ++h) {
    const auto& v = a.normal(h);
    std::vector<int> nz;
    for (int c = 0; c < 3; ++c)
      if (!f.is_zero(v[static_cast<std::size_t>(c)])) nz.push_back(c);
    int kind = -1;
    if (nz.size() == 1 && v[static_cast<std::size_t>(nz[0])] == f.one()) {
      kind = nz[0];
      s.coordinate_present[static_cast<std::size_t>(kind)] = true;
    } else if (nz.size() == 2 && v[static_cast<std::size_t>(nz[0])] == f.one()) {
      for (int b = 0; b < 3; ++b) {
        if (blocks[b].first != nz[0] || blocks[b].second != nz[1]) continue;
        for (long j = 0; j < p; ++j)
          if (v[static_cast<std::size_t>(nz[1])] == f.neg(f.root_power(j)))
            kind = 3 + b * static_cast<int>(p) + static_cast<int>(j);
      }
    }
    if (kind < 0) return std::nullopt;
    if (seen[static_cast<std::size_t>(kind)]++) return std::nullopt;
    s.kind.push_back(kind);
  }
  for (std::size_t k = 3; k < seen.size(); ++k)
    if (!seen[k]) return std::nullopt;
  return s;
}

ArrangementGroup kummer_group(const Arrangement& a) {
  auto shape = monomial_shape(a);
  if (!shape) throw std::invalid_argument("kummer: not a monomial arrangement with all binomial lines");
  const long p = shape->p;
  Presentation base = sweep_presentation(base_braid(), true);
  for (int c = 0; c < 3; ++c)
    if (!shape->coordinate_present[static_cast<std::size_t>(c)])
      base.relators.push_back(Word(static_cast<std::size_t>(p), c + 1));
  base.normalize();
  AbelianQuotient q{{p, p}, {{1, 0}, {0, 1}, {p - 1, p - 1}, {0, 0}, {0, 0}, {0, 0}}};
  ArrangementGroup g;
  g.kernel_ = kernel_presentation(base, q);
  g.pres_ = g.kernel_.presentation;
  g.method_ = "kummer";
  g.n_ = a.size();
  for (int k : shape->kind)
    g.base_index_.push_back(k < 3 ? static_cast<std::size_t>(k)
                                  : 3 + static_cast<std::size_t>((k - 3) / p));
  g.shape_ = std::move(shape);
  return g;
}

ArrangementGroup arrangement_group(const Arrangement& a) {
  if (a.is_rational()) {
    ArrangementGroup g;
    g.pres_ = sweep_presentation(a, true);
    g.method_ = "sweep";
    g.n_ = a.size();
    return g;
  }
  return kummer_group(a);
}

Character ArrangementGroup::transport(const Character& chi0) const {
  if (chi0.exponents.size() != n_)
    throw std::invalid_argument("character length differs from hyperplane count");
  const Character chi = chi0.canonical();
  if (!chi.is_projective()) throw std::invalid_argument("character is not projective");
  if (!shape_) return chi;
  const long r = chi.order, p = shape_->p;
  if (gcd_long(r, p) != 1)
    throw std::invalid_argument("kummer: character order must be prime to " + std::to_string(p));
  // Character of the orbifold group, a[base line].
  std::vector<long> a(6, 0);
  std::vector<bool> set(6, false);
  const long pinv = r == 1 ? 0 : inverse_mod(p, r);
  for (std::size_t h = 0; h < n_; ++h) {
    std::size_t b = base_index_[h];
    long v = b < 3 ? mod_floor(chi.exponents[h] * pinv, r) : chi.exponents[h];
    if (set[b] && a[b] != v)
      throw std::invalid_argument("kummer: character is not constant on binomial blocks");
    a[b] = v;
    set[b] = true;
  }
  Character base{r, a};
  Character out{r, {}};
  for (std::size_t k = 0; k < kernel_.source.size(); ++k) {
    const auto& [c, i] = kernel_.source[k];
    const std::size_t d = kernel_.target[k];
    out.exponents.push_back(mod_floor(base.value(kernel_.transversal[c]) + a[i] -
                                          base.value(kernel_.transversal[d]),
                                      r));
  }
  return out;
}

}  // namespace milnor
