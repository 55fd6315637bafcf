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

#ifndef MILNOR_FPGROUPS_PRESENTATION_H_
#define MILNOR_FPGROUPS_PRESENTATION_H_

#include <cstddef>
#include <vector>

#include "json.hpp"
#include "milnor/algebra/matrix.h"

namespace milnor {

// Letters are signed 1-based generator indices: 3 is x3, -3 its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
// Free reduction followed by removal of cancelling first/last letters.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

struct Presentation {
  std::size_t generators = 0;
  std::vector<Word> relators;

  // Checks letter ranges; cyclically reduces relators and drops empty ones.
  void normalize();
};

// Homomorphism to Z_order, x_i -> exponents[i].
struct Character {
  long order = 1;
  std::vector<long> exponents;

  // Exponents reduced into [0, order).
  Character canonical() const;
  bool is_trivial() const;
  // gcd(exponents, order) = 1.
  bool is_surjective() const;
  bool is_projective() const;
  // Order of the image; the same character with the order shrunk to it.
  long image_order() const;
  Character reduced() const;
  // chi^k, reduced.
  Character power(long k) const;
  // Value on a word.
  long value(const Word& w) const;
};

// Exponent-sum matrix: rows are relators, columns generators.
IntMatrix relation_matrix(const Presentation& p);
AbelianGroup abelianization(const Presentation& p);

Presentation presentation_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Presentation& p);
Character character_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Character& c);

}  // namespace milnor

#endif  // MILNOR_FPGROUPS_PRESENTATION_H_
