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

#include "milnor/fpgroups/sweep.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace milnor {

namespace {

using Vec3 = std::array<Rat, 3>;

Rat dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Integer vectors ordered by max-norm, then lexicographically.
std::vector<Vec3> small_vectors(long bound) {
  std::vector<Vec3> out;
  for (long b = 1; b <= bound; ++b)
    for (long x = -b; x <= b; ++x)
      for (long y = -b; y <= b; ++y)
        for (long z = -b; z <= b; ++z)
          if (std::max({std::abs(x), std::abs(y), std::abs(z)}) == b)
            out.push_back({Rat(x), Rat(y), Rat(z)});
  return out;
}

// Normals restricted to three coordinates on which they still have rank 3.
std::vector<Vec3> planar_normals(const Arrangement& a) {
  const std::size_t dim = a.dim();
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        std::vector<Vec3> rows;
        for (std::size_t h = 0; h < a.size(); ++h) {
          const auto& v = a.normal(h);
          rows.push_back({v[i][0], v[j][0], v[k][0]});
        }
        IntMatrix m(rows.size(), 3);
        for (std::size_t h = 0; h < rows.size(); ++h)
          for (std::size_t c = 0; c < 3; ++c) {
            // Normals are primitive integer vectors, so this is exact.
            m.at(h, c) = rows[h][c].get_num();
          }
        if (integer_rank(m) == 3) return rows;
      }
  throw std::logic_error("sweep: no coordinate triple of rank 3");
}

struct Chart {
  Vec3 c, u, v;
};

struct Sweep {
  std::vector<Vec3> normals;
  std::vector<std::vector<std::size_t>> vertex_lines;
  std::vector<Vec3> points;
};

Chart choose_chart(const Sweep& s) {
  const auto cands = small_vectors(4);
  for (const Vec3& c : cands) {
    bool ok = true;
    for (const Vec3& p : s.points)
      if (dot(c, p) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const Vec3& v : cands) {
      if (dot(v, c) != 0) continue;
      bool good = true;
      for (const Vec3& n : s.normals)
        if (dot(n, v) == 0) {  // line would be vertical
          good = false;
          break;
        }
      if (!good) continue;
      Vec3 u = cross(c, v);
      std::vector<Rat> xs;
      for (const Vec3& p : s.points) xs.push_back(dot(p, u) / dot(c, p));
      std::sort(xs.begin(), xs.end());
      if (std::adjacent_find(xs.begin(), xs.end()) != xs.end()) continue;
      return {c, u, v};
    }
  }
  throw std::logic_error("sweep: no generic chart among small vectors");
}

}  // namespace

Presentation sweep_presentation(const Arrangement& a, bool projective) {
  if (!a.is_rational()) throw std::invalid_argument("sweep: arrangement must be defined over Q");
  if (a.rank() != 3) throw std::invalid_argument("sweep: arrangement must have rank 3");
  const std::size_t n = a.size();
  Sweep sw;
  sw.normals = planar_normals(a);
  for (const Flat2& f : rank2_flats(a)) {
    sw.vertex_lines.push_back(f.hyperplanes);
    sw.points.push_back(cross(sw.normals[f.hyperplanes[0]], sw.normals[f.hyperplanes[1]]));
  }
  const Chart ch = choose_chart(sw);
  const Rat cc = dot(ch.c, ch.c), uu = dot(ch.u, ch.u);

  // In the chart p = c/|c|^2 + x u + y v, line h reads y = slope x + icpt.
  std::vector<Rat> slope(n), icpt(n);
  for (std::size_t h = 0; h < n; ++h) {
    const Vec3& al = sw.normals[h];
    Rat av = dot(al, ch.v);
    slope[h] = -dot(al, ch.u) / av;
    icpt[h] = -dot(al, ch.c) / (cc * av);
  }
  std::vector<std::pair<Rat, std::size_t>> events;
  for (std::size_t k = 0; k < sw.points.size(); ++k)
    events.push_back({dot(sw.points[k], ch.u) / (dot(ch.c, sw.points[k]) * uu), k});
  std::sort(events.begin(), events.end());

  auto order_at = [&](const Rat& x) {
    std::vector<std::size_t> ord(n);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](std::size_t i, std::size_t j) {
      return slope[i] * x + icpt[i] < slope[j] * x + icpt[j];
    });
    return ord;
  };

  Presentation p;
  p.generators = n;
  const Rat x0 = events.front().first - 1;
  std::vector<std::size_t> line_at = order_at(x0);
  std::vector<Word> w(n);
  for (std::size_t pos = 0; pos < n; ++pos) w[pos] = {static_cast<int>(line_at[pos]) + 1};
  Word total;
  for (std::size_t pos = 0; pos < n; ++pos) total.push_back(static_cast<int>(line_at[pos]) + 1);

  for (std::size_t e = 0; e < events.size(); ++e) {
    const auto& lines = sw.vertex_lines[events[e].second];
    const std::size_t s = lines.size();
    std::vector<std::size_t> pos;
    for (std::size_t h : lines)
      pos.push_back(static_cast<std::size_t>(
          std::find(line_at.begin(), line_at.end(), h) - line_at.begin()));
    std::sort(pos.begin(), pos.end());
    const std::size_t lo = pos.front();
    if (pos.back() - lo + 1 != s) throw std::logic_error("sweep: vertex lines not adjacent");
    // The product around the vertex commutes with each of its factors.
    Word prod;
    for (std::size_t k = 0; k < s; ++k) prod = concat(prod, w[lo + k]);
    for (std::size_t k = 1; k < s; ++k) {
      Word rot;
      for (std::size_t t = 0; t < s; ++t) rot = concat(rot, w[lo + (k + t) % s]);
      p.relators.push_back(cyclic_reduce(concat(prod, inverse(rot))));
    }
    // Pass the vertex: the block reverses by a positive half twist.
    for (std::size_t k = 0; k + 1 < s; ++k)
      for (std::size_t b = lo; b + 1 < lo + s - k; ++b) {
        Word up = w[b + 1];
        Word down = free_reduce(concat(concat(inverse(up), w[b]), up));
        w[b] = std::move(up);
        w[b + 1] = std::move(down);
        std::swap(line_at[b], line_at[b + 1]);
      }
    const Rat next = e + 1 < events.size() ? Rat((events[e].first + events[e + 1].first) / 2)
                                           : Rat(events[e].first + 1);
    if (order_at(next) != line_at) throw std::logic_error("sweep: wiring order drifted");
  }
  if (projective) p.relators.push_back(total);
  p.normalize();
  return p;
}

}  // namespace milnor
