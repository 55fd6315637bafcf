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

#ifndef MILNOR_PARALLEL_PARALLEL_H_
#define MILNOR_PARALLEL_PARALLEL_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "milnor/algebra/matrix.h"
#include "milnor/arrangement/arrangement.h"

namespace milnor {

struct PointedArrangement {
  Arrangement arrangement;
  std::size_t base = 0;
};

// Pl_n: n lines through the origin of C^2 (C^1 for n = 1), pointed at the
// first line. Normals (1,0), (0,1), (1,-1), (1,1), (1,-2), (1,2), ...
PointedArrangement pencil(std::size_t n, const std::string& prefix = "L");

// P1 o_x P2: glue f_x with the basepoint form g of P2. Hyperplanes are those
// of P1 followed by those of P2 except its basepoint.
PointedArrangement parallel_connect(const PointedArrangement& p1, std::size_t x,
                                    const PointedArrangement& p2);

struct PolarTag {
  std::size_t hyperplane = 0;  // index in the base arrangement
  std::size_t leaf = 0;        // 0 for the backbone copy, j = 2..m_H for leaves
};

struct Polarization {
  Arrangement base;
  std::vector<long> m;
  Arrangement result;
  std::vector<PolarTag> tags;
  std::size_t rank = 0;

  long total() const;
  // n_k = #{H : m_H >= k}
  std::size_t n(long k) const;
};

Polarization polarize(const Arrangement& a, const std::vector<long>& m);

// Homology plug-in on free abelian groups. v1 on E1, v2 on E2 whose
// basepoint e2 (index r2) is glued to x; output on E1 then E2 minus e2.
std::vector<Int> plugin_h1(const std::vector<Int>& v1, const std::vector<Int>& v2,
                           std::size_t x, std::size_t r2);

// Matrix of the plug-in on quotients by the all-ones vector, in the bases
// given by the points other than the respective basepoints (r1 on E1, r2 on
// E2, r1 on the connection). Square, and unimodular.
IntMatrix plugin_h1_projective_matrix(std::size_t n1, std::size_t r1, std::size_t x,
                                      std::size_t n2, std::size_t r2);

// Dual of the plug-in on functions vanishing on the sum of the points.
std::pair<std::vector<Int>, std::vector<Int>> plugin_star(const std::vector<Int>& w,
                                                          std::size_t n1, std::size_t x,
                                                          std::size_t n2, std::size_t r2);

struct ThetaStar {
  std::vector<Int> backbone;               // class on U(A)
  std::vector<std::vector<Int>> pencils;   // class on each P_{m_H}, root first
};

// Pull a projective class on U(A||m) back to U(A) x prod P_{m_H}. With
// modulus 0 the class is integral and must sum to 0; otherwise it is read
// modulo `modulus` and results are reduced to [0, modulus).
ThetaStar theta_star(const Polarization& p, const std::vector<Int>& w, long modulus = 0);

nlohmann::json to_json(const Polarization& p, bool with_polynomial = false);

}  // namespace milnor

#endif  // MILNOR_PARALLEL_PARALLEL_H_
