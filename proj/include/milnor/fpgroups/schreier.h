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

#ifndef MILNOR_FPGROUPS_SCHREIER_H_
#define MILNOR_FPGROUPS_SCHREIER_H_

#include <utility>
#include <vector>

#include "milnor/fpgroups/presentation.h"

namespace milnor {

// Epimorphism onto Z_{moduli[0]} x ... given by generator images.
struct AbelianQuotient {
  std::vector<long> moduli;
  std::vector<std::vector<long>> images;  // images[generator][factor]
};

struct KernelPresentation {
  Presentation presentation;
  std::vector<Word> transversal;  // coset representatives, coset 0 trivial
  // Kernel generator k is t_c x_i t_{c x_i}^{-1} for source[k] = (c, i).
  std::vector<std::pair<std::size_t, std::size_t>> source;
  std::vector<std::size_t> target;  // the coset c x_i
};

// Reidemeister-Schreier for the kernel of a finite abelian quotient with a
// breadth-first Schreier transversal (generators in order, x before x^-1).
KernelPresentation kernel_presentation(const Presentation& p, const AbelianQuotient& q);

// Kernel of a surjective chi onto Z_r. Cosets are represented by powers of
// the first generator with unit chi-value when there is one.
KernelPresentation cyclic_kernel_presentation(const Presentation& p, const Character& chi);
Presentation reidemeister_schreier(const Presentation& p, const Character& chi);

// H_1 of the kernel of chi.
AbelianGroup integral_h1_kernel(const Presentation& p, const Character& chi);

// Z-rank of H_1 with coefficients in Z[t]/Phi_k, t acting through chi.
std::size_t phi_module_rank(const Presentation& p, const Character& chi, long k);

}  // namespace milnor

#endif  // MILNOR_FPGROUPS_SCHREIER_H_
