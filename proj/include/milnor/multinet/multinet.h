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

#ifndef MILNOR_MULTINET_MULTINET_H_
#define MILNOR_MULTINET_MULTINET_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "milnor/arrangement/arrangement.h"

namespace milnor {

using IndexSet = std::vector<std::size_t>;

// Candidate multinet; hyperplane indices are 0-based. An empty base locus is
// completed to the set of all rank-2 flats meeting two different classes.
struct Multinet {
  std::vector<IndexSet> parts;
  std::vector<long> m;
  std::vector<IndexSet> base_locus;
  std::optional<std::size_t> pointed;
};

struct MultinetReport {
  bool valid = false;
  std::size_t k = 0;
  long d = 0;  // common class weight when condition (1) holds
  std::vector<std::pair<IndexSet, long>> n_x;
  std::vector<IndexSet> base_locus;  // after completion
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

MultinetReport verify_multinet(const Arrangement& a, const Multinet& m);

struct PointedMultinet {
  Multinet multinet;  // with completed base locus
  std::size_t hyperplane = 0;
  long d = 0;
};

struct PointedReport {
  std::optional<PointedMultinet> pointed;
  std::vector<std::string> violations;
  std::vector<IndexSet> violating_flats;
};

PointedReport verify_pointed(const Arrangement& a, const Multinet& m, std::size_t h);

// A(p,1,3): x, y, z, then x - w^a y, x - w^a z, y - w^a z for a = 0..p-1,
// w = exp(2 pi i / p); pointed at x.
std::pair<Arrangement, PointedMultinet> monomial_multinet(long p);

struct SmallPencilCert {
  Arrangement deleted;
  std::size_t removed = 0;            // index of H in the original arrangement
  long multiplier = 0;                // m_H, the order of the translate
  std::vector<long> primes;           // prime divisors of m_H
  std::vector<long> direction;        // e_K = mult_K(Q2) - mult_K(Q3) on the deletion
  std::vector<std::vector<std::pair<std::size_t, long>>> class_polys;  // Q1, Q2, Q3 on A'
  std::size_t pointed_class = 0;
  std::pair<std::size_t, std::size_t> fiber_classes;

  // Generator of the direction with positive leading entry.
  std::vector<long> normalized_direction() const;
};

SmallPencilCert deletion_pencil_certificate(const Arrangement& a, const PointedMultinet& pm);

Multinet multinet_from_json(const nlohmann::json& j, const Arrangement& a);
nlohmann::json to_json(const Multinet& m);
nlohmann::json to_json(const MultinetReport& r);
nlohmann::json to_json(const SmallPencilCert& c);

}  // namespace milnor

#endif  // MILNOR_MULTINET_MULTINET_H_
