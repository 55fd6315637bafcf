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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "milnor/parallel/parallel.h"
#include "test_util.h"

using namespace milnor;

namespace {

Arrangement load(const char* n) { return arrangement_from_json(load_fixture(n)); }

// Flats as sets of labels, for comparing differently ordered realizations.
std::set<std::set<std::string>> labelled_flats(const Arrangement& a) {
  std::set<std::set<std::string>> out;
  for (const auto& f : rank2_flats(a)) {
    std::set<std::string> s;
    for (auto h : f.hyperplanes) s.insert(a.labels()[h]);
    out.insert(s);
  }
  return out;
}

Arrangement random_arrangement(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<long>> rows;
  while (rows.size() < n) {
    std::vector<long> r{static_cast<long>(rng() % 5) - 2, static_cast<long>(rng() % 5) - 2,
                        static_cast<long>(rng() % 3)};
    auto tmp = rows;
    tmp.push_back(r);
    try {
      Arrangement::integral(3, tmp);
      rows = tmp;
    } catch (const std::invalid_argument&) {
    }
  }
  return Arrangement::integral(3, rows);
}

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("pencils and single connections") {
  CHECK(pencil(4).arrangement.size() == 4);
  CHECK(pencil(4).arrangement.rank() == 2);
  CHECK(rank2_flats(pencil(5).arrangement).size() == 1);
  Arrangement braid = load("braid.json");
  auto pc = parallel_connect({braid, 0}, 0, pencil(3, "P"));
  CHECK(pc.arrangement.size() == 8);
  CHECK(pc.arrangement.rank() == 4);
  auto unit = parallel_connect({braid, 0}, 2, pencil(1));
  CHECK(to_json(unit.arrangement).dump() == to_json(braid).dump());
}

TEST_CASE("operad associativity on disjoint plug points") {
  Arrangement braid = load("braid.json");
  PointedArrangement e1{braid, 0};
  auto e2 = pencil(3, "P");
  auto e3 = pencil(4, "Q");
  auto left = parallel_connect(parallel_connect(e1, 1, e2), 4, e3);
  auto right = parallel_connect(parallel_connect(e1, 4, e3), 1, e2);
  CHECK(labelled_flats(left.arrangement) == labelled_flats(right.arrangement));
  // Nested pencils.
  auto a = parallel_connect(parallel_connect(pencil(3, "A"), 1, pencil(3, "B")), 4, pencil(3, "C"));
  auto b = parallel_connect(pencil(3, "A"), 1, parallel_connect(pencil(3, "B"), 2, pencil(3, "C")));
  CHECK(labelled_flats(a.arrangement) == labelled_flats(b.arrangement));
}

TEST_CASE("matroid does not depend on the elimination pivot") {
  Arrangement braid = load("braid.json");
  // Same pencil with coordinates swapped moves the eliminated coordinate.
  auto p = pencil(4, "P");
  std::vector<std::vector<long>> swapped{{0, 1}, {1, 0}, {-1, 1}, {1, 1}};
  PointedArrangement q{Arrangement::integral(2, swapped, p.arrangement.labels()), 0};
  auto x = parallel_connect({braid, 0}, 3, p);
  auto y = parallel_connect({braid, 0}, 3, q);
  CHECK(labelled_flats(x.arrangement) == labelled_flats(y.arrangement));
}

TEST_CASE("polarization counts") {
  Arrangement d = load("deleted_b3.json");
  auto p = polarize(d, {8, 1, 3, 3, 5, 5, 1, 1});
  CHECK(p.result.size() == 27);
  CHECK(p.rank == 8);
  CHECK(p.n(3) == 5);
  CHECK(p.n(2) == 5);
  auto same = polarize(d, std::vector<long>(8, 1));
  CHECK(to_json(same.result).dump() == to_json(d).dump());
  auto pl = polarize(load("pl4_polar.json"), {3, 2, 1, 3});
  CHECK(pl.result.size() == 9);
  CHECK(pl.rank == 2 + 3);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Arrangement a = random_arrangement(rng, 3 + rng() % 3);
    std::vector<long> m;
    for (std::size_t i = 0; i < a.size(); ++i) m.push_back(1 + static_cast<long>(rng() % 3));
    auto q = polarize(a, m);
    CHECK(static_cast<long>(q.result.size()) == q.total());
    CHECK(q.rank == q.n(2) + a.rank());
  }
}

TEST_CASE("theta star on the pencil example") {
  auto p = polarize(load("pl4_polar.json"), {3, 2, 1, 3});
  std::vector<Int> w(9, 1);
  w[0] = -8;
  auto t = theta_star(p, w);
  CHECK(t.backbone == ints({-6, 2, 1, 3}));
  CHECK(t.pencils[0] == ints({-2, 1, 1}));
  CHECK(t.pencils[1] == ints({-1, 1}));
  CHECK(t.pencils[2] == ints({0}));
  CHECK(t.pencils[3] == ints({-2, 1, 1}));
  auto mod = theta_star(p, std::vector<Int>(9, 1), 9);
  CHECK(mod.backbone == ints({3, 2, 1, 3}));
  CHECK(mod.pencils[0] == ints({7, 1, 1}));
  CHECK(mod.pencils[3] == ints({7, 1, 1}));
  for (std::size_t h = 0; h < 4; ++h) {
    Int s = 0;
    for (const Int& x : mod.pencils[h]) s += x;
    CHECK(s % 9 == 0);
  }
  CHECK_THROWS(theta_star(p, std::vector<Int>(9, 1)));
  auto trivial = polarize(load("braid.json"), std::vector<long>(6, 1));
  auto id = theta_star(trivial, ints({1, -1, 2, 0, 0, -2}));
  CHECK(id.backbone == ints({1, -1, 2, 0, 0, -2}));
}

TEST_CASE("plug-in maps") {
  CHECK(plugin_h1(ints({1, 0, 0}), ints({0, 0, 0}), 0, 0) == ints({1, 0, 0, 1, 1}));
  CHECK(plugin_h1(ints({0, 1, 0}), ints({0, 0, 0}), 0, 0) == ints({0, 1, 0, 0, 0}));
  CHECK(plugin_h1(ints({2, -1, 3}), ints({5}), 1, 0) == ints({7, 4, 8}));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n1 = 1 + rng() % 5, n2 = 1 + rng() % 5;
    std::size_t r1 = rng() % n1, x = rng() % n1, r2 = rng() % n2;
    IntMatrix m = plugin_h1_projective_matrix(n1, r1, x, n2, r2);
    CHECK(m.rows == m.cols);
    auto s = smith_normal_form(m);
    CHECK(s.rank == m.rows);
    for (const Int& d : s.invariant_factors) CHECK(d == 1);
    // Duality with the star map on functions vanishing on the sum.
    std::vector<Int> w(n1 + n2 - 1), v1(n1), v2(n2);
    Int sum = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      w[i] = static_cast<long>(rng() % 11) - 5;
      sum += w[i];
    }
    w.back() = -sum;
    for (auto& v : v1) v = static_cast<long>(rng() % 7) - 3;
    for (auto& v : v2) v = static_cast<long>(rng() % 7) - 3;
    auto u = plugin_h1(v1, v2, x, r2);
    auto [w1, w2] = plugin_star(w, n1, x, n2, r2);
    Int lhs = 0, rhs = 0;
    for (std::size_t i = 0; i < u.size(); ++i) lhs += w[i] * u[i];
    for (std::size_t i = 0; i < n1; ++i) rhs += w1[i] * v1[i];
    for (std::size_t i = 0; i < n2; ++i) rhs += w2[i] * v2[i];
    CHECK(lhs == rhs);
  }
}
