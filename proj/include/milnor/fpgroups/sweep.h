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

#ifndef MILNOR_FPGROUPS_SWEEP_H_
#define MILNOR_FPGROUPS_SWEEP_H_

#include "milnor/arrangement/arrangement.h"
#include "milnor/fpgroups/presentation.h"

namespace milnor {

// Presentation of pi_1 of the complement of a real rank-3 arrangement, one
// meridian per hyperplane, read off a wiring diagram of a generic affine
// slice. With `projective` the product of all meridians is killed, giving
// pi_1 of the projectivized complement.
Presentation sweep_presentation(const Arrangement& a, bool projective);

}  // namespace milnor

#endif  // MILNOR_FPGROUPS_SWEEP_H_
