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

#ifndef MILNOR_FPGROUPS_ARRANGEMENT_GROUP_H_
#define MILNOR_FPGROUPS_ARRANGEMENT_GROUP_H_

#include <optional>
#include <string>
#include <vector>

#include "milnor/arrangement/arrangement.h"
#include "milnor/fpgroups/presentation.h"
#include "milnor/fpgroups/schreier.h"

namespace milnor {

// Shape of a subarrangement of A(p,1,3) that keeps every binomial line.
struct MonomialShape {
  long p = 0;
  // kind[h]: 0..2 for the coordinate x, y, z; 3 + p*block + j for the line
  // e_a - w^j e_b with block 0 = (x,y), 1 = (x,z), 2 = (y,z).
  std::vector<int> kind;
  std::vector<bool> coordinate_present;  // x, y, z
};

std::optional<MonomialShape> monomial_shape(const Arrangement& a);

// A presentation of pi_1 of the projectivized complement together with the
// rule carrying characters on meridians to characters of the presentation.
class ArrangementGroup {
 public:
  const Presentation& presentation() const { return pres_; }
  const std::string& method() const { return method_; }
  std::size_t hyperplanes() const { return n_; }

  // chi assigns an exponent to each hyperplane and must be projective. The
  // Kummer route further needs chi constant on each binomial block and
  // gcd(order, p) = 1.
  Character transport(const Character& chi) const;

  friend ArrangementGroup arrangement_group(const Arrangement& a);
  friend ArrangementGroup kummer_group(const Arrangement& a);

 private:
  Presentation pres_;
  std::string method_;
  std::size_t n_ = 0;
  std::optional<MonomialShape> shape_;
  KernelPresentation kernel_;
  std::vector<std::size_t> base_index_;  // hyperplane -> line of the base braid arrangement
};

// Sweep for real arrangements, Kummer cover for monomial ones.
ArrangementGroup arrangement_group(const Arrangement& a);

// pi_1(U) for a subarrangement of A(p,1,3) containing all binomial lines:
// the kernel of pi_1^orb -> Z_p^2, where pi_1^orb is the projective braid
// arrangement group XYZ(X-Y)(X-Z)(Y-Z) with x_c^p = 1 for each missing
// coordinate line and the map sends X, Y, Z to (1,0), (0,1), (-1,-1).
ArrangementGroup kummer_group(const Arrangement& a);

}  // namespace milnor

#endif  // MILNOR_FPGROUPS_ARRANGEMENT_GROUP_H_
