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

#ifndef MILNOR_MILNOR_MILNOR_H_
#define MILNOR_MILNOR_MILNOR_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "milnor/arrangement/arrangement.h"
#include "milnor/fpgroups/presentation.h"
#include "milnor/jumploci/jumploci.h"
#include "milnor/multinet/multinet.h"
#include "milnor/parallel/parallel.h"

namespace milnor {

// F(A, m) as the cover of U classified by x_H -> m_H mod N.
struct MilnorSpec {
  std::vector<long> m;
  long N = 1;
  Character delta;
  bool gcd_warning = false;  // gcd(m) > 1
};

MilnorSpec milnor_character(const Arrangement& a, const std::vector<long>& m);
nlohmann::json to_json(const MilnorSpec& s);

// Multiplicities m with U^chi = F(A, m), if any.
std::optional<std::vector<long>> recognize_milnor_cover(const Arrangement& a, const Character& chi);

// Does F(A, m) -> U factor through U^chi?
bool dominates(const std::vector<long>& m, const Character& chi);

struct FindOptions {
  bool forbid_two = false;
  long max_n = 0;  // 0: no cap
};

struct MultiplicityChoice {
  std::vector<long> m;
  long N = 0;
  long k = 1;  // m = k chi mod r
};

MultiplicityChoice find_multiplicities(const Arrangement& a, const Character& chi, long p,
                                       const FindOptions& opt = {});

struct PipelineOptions {
  std::optional<long> prime;  // default: least prime factor of m_H
  std::optional<long> r;      // default: least admissible r <= r_cap
  long r_cap = 30;
  bool forbid_two = false;
  bool integral = false;
  long integral_cap = 5000;   // N * generators
};

struct PipelineResult {
  TorsionCertificate certificate;
  SmallPencilCert pencil;
  long r = 0;
  Character chi;
  MultiplicityChoice choice;
  // Depths of chi^j, j = 1..r-1, over C and in characteristic p.
  std::vector<std::size_t> depths0, depthsp;
};

PipelineResult multinet_torsion_pipeline(const Arrangement& a, const PointedMultinet& pm,
                                         const PipelineOptions& opt = {});

// Delta of F(A||m) with delta_B pulled back to U(A) x prod P_{m_H}.
struct PolarDelta {
  Polarization polarization;
  Character chi;  // theta*(delta_B), backbone coordinates first
  std::vector<IntPoly> poincare;  // at chi^j
  UPoly delta;
  long characteristic = 0;

  CharPoly charpoly(std::size_t q) const;
};

PolarDelta polarized_delta(const Arrangement& a, const std::vector<long>& m, long characteristic);

CharPoly polarized_milnor_delta(const Arrangement& a, const std::vector<long>& m,
                                long characteristic, std::size_t q);

TorsionCertificate polarization_torsion(const Arrangement& a, const std::vector<long>& m, long p);

}  // namespace milnor

#endif  // MILNOR_MILNOR_MILNOR_H_
