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

#ifndef MILNOR_JUMPLOCI_JUMPLOCI_H_
#define MILNOR_JUMPLOCI_JUMPLOCI_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "milnor/algebra/matrix.h"
#include "milnor/arrangement/arrangement.h"
#include "milnor/fpgroups/arrangement_group.h"
#include "milnor/fpgroups/presentation.h"

namespace milnor {

// Which characteristics a component is valid in.
struct Applicability {
  enum class Kind { kAll, kOnly, kExcept } kind = Kind::kAll;
  std::vector<long> primes;  // 0 stands for characteristic zero

  bool applies(long characteristic) const;
};

// sigma * T, T spanned by the (saturated) rows of basis.
struct TranslatedTorus {
  std::size_t degree = 1;
  std::vector<std::vector<long>> basis;
  Character translate;
  std::size_t depth = 1;
  Applicability chars;
};

struct Stratification {
  std::size_t rank = 0;
  std::vector<std::size_t> betti;
  std::vector<TranslatedTorus> components;
};

Stratification stratification_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Stratification& s);

// Is rho in sigma T over a field of the given characteristic?
bool char_in_component(const Character& rho, const TranslatedTorus& c, long characteristic);

// dim H_q(X, k_rho). Backed either by a stratification (jump depths as
// listed) or by Fox calculus on a presentation. An arrangement-backed Fox
// source also knows chi(U) and fills in degree 2 from it.
class JumpSource {
 public:
  static JumpSource stratified(Stratification s);
  static JumpSource fox(Presentation p);
  static JumpSource arrangement(const Arrangement& a);

  bool is_fox() const { return !strat_; }
  bool euler_completed() const { return euler_.has_value(); }
  // Number of coordinates of the characters it accepts.
  std::size_t ambient() const;
  // Highest degree with data.
  std::size_t top_degree() const;
  std::size_t depth(std::size_t q, const Character& rho, long characteristic) const;
  // Twisted Poincare polynomial up to top_degree().
  IntPoly poincare(const Character& rho, long characteristic) const;
  const std::vector<std::size_t>& betti() const { return betti_; }
  // Null unless built by arrangement().
  const ArrangementGroup* group() const { return group_.get(); }

 private:
  std::shared_ptr<const Stratification> strat_;
  std::shared_ptr<const ArrangementGroup> group_;  // arrangement-backed
  std::shared_ptr<const Presentation> pres_;       // plain presentation
  std::optional<long> euler_;
  std::vector<std::size_t> betti_;
};

// H_*(punctured line), C minus n points: 1 + n x, or (n - 1) x for a
// nontrivial system. n = 1 gives 1 for the trivial system.
IntPoly poin_punctured_line(long n, bool trivial);
// Projectivized pencil of m lines, P^1 minus m points; m = 1 is a point.
IntPoly pencil_poincare(long m, bool trivial);

struct CoverOptions {
  // Evaluate every character instead of one per Galois/Frobenius orbit.
  bool exhaustive = false;
};

// dim H_q of the cover defined by chi: sum of depths over im(chi^).
std::size_t cover_homology(const JumpSource& s, const Character& chi, long characteristic,
                           std::size_t q, const CoverOptions& opt = {});

// Minimal polynomial over F_p of zeta_r^power, zeta_r the root fixed by the
// field context, raised to `multiplicity`.
struct ModularFactor {
  long prime = 0;
  long order = 1;  // order of zeta_r^power
  long power = 0;
  IntPoly poly;    // monic, coefficients in [0, p)
  long multiplicity = 0;
  bool operator==(const ModularFactor&) const = default;
};

// prod Phi_k^{e_k}, times modular factors for the orders on which the
// multiplicity is not constant. That only happens in characteristic p when
// p does not generate (Z/k)^*: there the eigenvalues are stable under
// Frobenius alone.
struct CharPoly {
  std::map<long, long> e;
  std::vector<ModularFactor> modular;
  long degree() const;
  // Integer expansion of the cyclotomic part.
  IntPoly expand() const;
  bool operator==(const CharPoly&) const = default;
};

// mult[j] = multiplicity of the eigenvalue zeta_r^j, r = mult.size().
CharPoly group_eigenvalues(const std::vector<Int>& mult, long characteristic);
std::string to_string(const CharPoly& c);
nlohmann::json to_json(const CharPoly& c);

CharPoly monodromy_charpoly(const JumpSource& s, const Character& chi, long characteristic,
                            std::size_t q, const CoverOptions& opt = {});

// Polynomial in x with coefficients sum_k c_k u_k (raw character counts).
struct UPoly {
  std::map<std::size_t, std::map<long, Int>> c;  // degree -> order -> count

  void add(std::size_t degree, long order, const Int& v);
  Int at(std::size_t degree, long order) const;
  // u_k -> 1
  IntPoly specialize() const;
  UPoly operator-(const UPoly& o) const;
  bool operator==(const UPoly& o) const;
};
std::string to_string(const UPoly& u);
nlohmann::json to_json(const UPoly& u);

UPoly delta_u_poly(const JumpSource& s, const Character& chi, long characteristic,
                   const CoverOptions& opt = {});

// Twisted Poincare polynomial of a factor at a character of its own
// coordinates.
struct PoincareFactor {
  std::size_t size = 0;
  std::function<IntPoly(const Character&)> poincare;
};

PoincareFactor pencil_factor(long m);
PoincareFactor source_factor(const JumpSource& s, long characteristic);

// prod_i Poin(X_i, rho_i) for rho = chi^j, j = 0..r-1.
std::vector<IntPoly> product_poincare(const std::vector<PoincareFactor>& factors, const Character& chi);
// Kunneth: sum over im(chi^) of u_|rho| prod_i Poin(X_i, rho_i).
UPoly delta_product(const std::vector<PoincareFactor>& factors, const Character& chi);

struct JumpWitness {
  long power = 0;  // rho = chi^power
  long order = 1;
  std::size_t depth0 = 0;
  std::size_t depthp = 0;
};

struct TorsionCertificate {
  long prime = 0;
  std::size_t degree = 1;
  std::size_t dim0 = 0;
  std::size_t dimp = 0;
  std::size_t bound = 0;
  std::vector<JumpWitness> witnesses;
  // im(chi^) meets V^q over C only at 1 while every rho != 1 jumps at p, so
  // the p-torsion rank is at least r - 1.
  bool r_minus_one = false;
  nlohmann::json chain = nlohmann::json::array();
  std::optional<AbelianGroup> integral;
  std::optional<CharPoly> charpoly;
};
nlohmann::json to_json(const TorsionCertificate& c);

std::optional<TorsionCertificate> torsion_detect(const JumpSource& s, const Character& chi,
                                                 long p, std::size_t q,
                                                 const CoverOptions& opt = {});

}  // namespace milnor

#endif  // MILNOR_JUMPLOCI_JUMPLOCI_H_
