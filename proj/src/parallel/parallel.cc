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

#include "milnor/parallel/parallel.h"

#include <numeric>
#include <stdexcept>

namespace milnor {

namespace {

// Embed an element of Q(zeta_a) into the field f when a is 1 or a matches.
Arrangement::Elem embed(const CyclotomicField& f, const Arrangement& src,
                        const Arrangement::Elem& e) {
  if (src.field_order() == f.root_order()) return e;
  if (!src.is_rational()) throw std::invalid_argument("parallel_connect: incompatible fields");
  return f.from_rat(e[0]);
}

std::string linear_form(const Arrangement& a, std::size_t i) {
  static const char* vars = "xyzuvwabcdefghijklmnopqrst";
  std::string out;
  const auto& v = a.normal(i);
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (a.field().is_zero(v[j])) continue;
    std::string var = j < 26 ? std::string(1, vars[j]) : "x" + std::to_string(j + 1);
    std::string c = a.field().to_string(v[j]);
    if (!out.empty()) out += " + ";
    out += (c == "1" ? "" : (c.find(' ') != std::string::npos ? "(" + c + ")" : c) + "*") + var;
  }
  return out;
}

}  // namespace

PointedArrangement pencil(std::size_t n, const std::string& prefix) {
  if (n == 0) throw std::invalid_argument("pencil: needs at least one line");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  if (n == 1) return {Arrangement::integral(1, {{1}}, labels), 0};
  std::vector<std::vector<long>> rows{{1, 0}, {0, 1}};
  for (std::size_t i = 2; i < n; ++i) {
    long k = static_cast<long>(i / 2);
    rows.push_back({1, (i % 2 == 0) ? -k : k});
  }
  return {Arrangement::integral(2, rows, labels), 0};
}

PointedArrangement parallel_connect(const PointedArrangement& p1, std::size_t x,
                                    const PointedArrangement& p2) {
  const Arrangement& a1 = p1.arrangement;
  const Arrangement& a2 = p2.arrangement;
  if (x >= a1.size() || p1.base >= a1.size() || p2.base >= a2.size())
    throw std::out_of_range("parallel_connect: index out of range");
  long order = a1.is_rational() ? a2.field_order() : a1.field_order();
  CyclotomicField f(order);
  const std::size_t l1 = a1.dim(), l2 = a2.dim();
  std::vector<Arrangement::Elem> g;
  for (const auto& e : a2.normal(p2.base)) g.push_back(embed(f, a2, e));
  std::size_t c = l2;
  for (std::size_t j = l2; j-- > 0;)
    if (!f.is_zero(g[j])) {
      c = j;
      break;
    }
  std::vector<Arrangement::Elem> fx;
  for (const auto& e : a1.normal(x)) fx.push_back(embed(f, a1, e));

  std::vector<Arrangement::Normal> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a1.size(); ++i) {
    Arrangement::Normal v(l1 + l2 - 1, f.zero());
    for (std::size_t j = 0; j < l1; ++j) v[j] = embed(f, a1, a1.normal(i)[j]);
    rows.push_back(std::move(v));
    labels.push_back(a1.labels()[i]);
  }
  for (std::size_t i = 0; i < a2.size(); ++i) {
    if (i == p2.base) continue;
    std::vector<Arrangement::Elem> k;
    for (const auto& e : a2.normal(i)) k.push_back(embed(f, a2, e));
    // Substitute w_c = (f_x(v) - sum_{j != c} g_j w_j) / g_c and clear g_c.
    Arrangement::Normal v(l1 + l2 - 1, f.zero());
    for (std::size_t j = 0; j < l1; ++j) v[j] = f.mul(k[c], fx[j]);
    std::size_t col = l1;
    for (std::size_t j = 0; j < l2; ++j) {
      if (j == c) continue;
      v[col++] = f.sub(f.mul(g[c], k[j]), f.mul(k[c], g[j]));
    }
    rows.push_back(std::move(v));
    labels.push_back(a2.labels()[i]);
  }
  return {Arrangement::cyclotomic(order, l1 + l2 - 1, std::move(rows), std::move(labels)),
          p1.base};
}

long Polarization::total() const { return std::accumulate(m.begin(), m.end(), 0L); }

std::size_t Polarization::n(long k) const {
  std::size_t c = 0;
  for (long x : m)
    if (x >= k) ++c;
  return c;
}

Polarization polarize(const Arrangement& a, const std::vector<long>& m) {
  if (m.size() != a.size()) throw std::invalid_argument("polarize: multiplicity count mismatch");
  for (long x : m)
    if (x < 1) throw std::invalid_argument("polarize: multiplicities must be positive");
  PointedArrangement cur{a, 0};
  std::vector<PolarTag> tags;
  for (std::size_t h = 0; h < a.size(); ++h) tags.push_back({h, 0});
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (m[h] == 1) continue;  // Pl_1 is the unit
    PointedArrangement pl = pencil(static_cast<std::size_t>(m[h]), a.labels()[h] + "#");
    cur = parallel_connect(cur, h, pl);
    for (long j = 2; j <= m[h]; ++j) tags.push_back({h, static_cast<std::size_t>(j)});
  }
  Polarization p{a, m, cur.arrangement, tags, 0};
  p.rank = p.result.rank();
  return p;
}

std::vector<Int> plugin_h1(const std::vector<Int>& v1, const std::vector<Int>& v2,
                           std::size_t x, std::size_t r2) {
  if (x >= v1.size() || r2 >= v2.size()) throw std::invalid_argument("plugin_h1: bad index");
  const std::size_t n1 = v1.size();
  std::vector<Int> u(n1 + v2.size() - 1, 0);
  for (std::size_t e = 0; e < n1; ++e)
    if (e != x) u[e] += v1[e];
  std::size_t pos = n1;
  for (std::size_t f = 0; f < v2.size(); ++f)
    if (f != r2) u[pos++] += v2[f];
  // x maps to the sum of the points of E2 (x itself stands for e2).
  u[x] += v1[x];
  for (std::size_t i = n1; i < u.size(); ++i) u[i] += v1[x];
  // e2 maps to the sum of the points of E1.
  for (std::size_t e = 0; e < n1; ++e) u[e] += v2[r2];
  return u;
}

IntMatrix plugin_h1_projective_matrix(std::size_t n1, std::size_t r1, std::size_t x,
                                      std::size_t n2, std::size_t r2) {
  const std::size_t n = n1 + n2 - 1;
  IntMatrix mat(n - 1, n1 + n2 - 2);
  std::size_t col = 0;
  auto push = [&](const std::vector<Int>& u) {
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r1) continue;
      mat.at(row++, col) = u[i] - u[r1];
    }
    ++col;
  };
  for (std::size_t e = 0; e < n1; ++e) {
    if (e == r1) continue;
    std::vector<Int> v1(n1, 0), v2(n2, 0);
    v1[e] = 1;
    push(plugin_h1(v1, v2, x, r2));
  }
  for (std::size_t f = 0; f < n2; ++f) {
    if (f == r2) continue;
    std::vector<Int> v1(n1, 0), v2(n2, 0);
    v2[f] = 1;
    push(plugin_h1(v1, v2, x, r2));
  }
  return mat;
}

std::pair<std::vector<Int>, std::vector<Int>> plugin_star(const std::vector<Int>& w,
                                                          std::size_t n1, std::size_t x,
                                                          std::size_t n2, std::size_t r2) {
  if (w.size() != n1 + n2 - 1 || x >= n1 || r2 >= n2)
    throw std::invalid_argument("plugin_star: shape mismatch");
  std::vector<Int> w1(w.begin(), w.begin() + n1), w2(n2, 0);
  Int sum = w[x];  // e2 is identified with x
  std::size_t pos = n1;
  for (std::size_t f = 0; f < n2; ++f) {
    if (f == r2) continue;
    w2[f] = w[pos++];
    sum += w2[f];
  }
  w1[x] = sum;
  w2[r2] = w[x] - sum;
  return {w1, w2};
}

ThetaStar theta_star(const Polarization& p, const std::vector<Int>& w, long modulus) {
  if (w.size() != p.result.size()) throw std::invalid_argument("theta_star: length mismatch");
  Int total = std::accumulate(w.begin(), w.end(), Int(0));
  if (modulus == 0 ? total != 0 : total % modulus != 0)
    throw std::invalid_argument("theta_star: class is not projective");
  ThetaStar out;
  out.pencils.resize(p.base.size());
  std::vector<Int> cur = w;
  // Undo the connections from the last one back to the first.
  for (std::size_t h = p.base.size(); h-- > 0;) {
    if (p.m[h] == 1) {
      out.pencils[h] = {Int(0)};
      continue;
    }
    std::size_t n2 = static_cast<std::size_t>(p.m[h]);
    std::size_t n1 = cur.size() - (n2 - 1);
    auto [w1, w2] = plugin_star(cur, n1, h, n2, 0);
    out.pencils[h] = std::move(w2);
    cur = std::move(w1);
  }
  out.backbone = std::move(cur);
  if (modulus != 0) {
    auto reduce = [&](std::vector<Int>& v) {
      for (Int& x : v) {
        x %= modulus;
        if (x < 0) x += modulus;
      }
    };
    reduce(out.backbone);
    for (auto& v : out.pencils) reduce(v);
  }
  return out;
}

nlohmann::json to_json(const Polarization& p, bool with_polynomial) {
  nlohmann::json tags = nlohmann::json::array();
  for (const PolarTag& t : p.tags) {
    if (t.leaf == 0)
      tags.push_back({{"backbone", p.base.labels()[t.hyperplane]}});
    else
      tags.push_back({{"hyperplane", p.base.labels()[t.hyperplane]}, {"leaf", t.leaf}});
  }
  nlohmann::json nk = nlohmann::json::object();
  for (long k = 2; k <= 3; ++k) nk[std::to_string(k)] = p.n(k);
  nlohmann::json j{{"hyperplanes", p.result.size()},
                   {"rank", p.rank},
                   {"dim", p.result.dim()},
                   {"tags", tags},
                   {"n_k", nk},
                   {"arrangement", to_json(p.result)}};
  if (with_polynomial) {
    nlohmann::json factors = nlohmann::json::array();
    for (std::size_t i = 0; i < p.result.size(); ++i) factors.push_back(linear_form(p.result, i));
    j["defining_polynomial_factors"] = factors;
  }
  return j;
}

}  // namespace milnor
