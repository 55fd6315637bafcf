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

#ifndef MILNOR_ARRANGEMENT_ARRANGEMENT_H_
#define MILNOR_ARRANGEMENT_ARRANGEMENT_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "milnor/algebra/field.h"
#include "milnor/algebra/number_theory.h"

namespace milnor {

// Ordered central arrangement. Normals live in Q(zeta_N)^dim; N = 1 means the
// arrangement is defined over Q. Rational normals are stored as primitive
// integer vectors with positive leading entry, cyclotomic ones are scaled so
// that the leading entry is 1.
class Arrangement {
 public:
  using Elem = CyclotomicField::Element;
  using Normal = std::vector<Elem>;

  static Arrangement rational(std::size_t dim, const std::vector<std::vector<Rat>>& rows,
                              std::vector<std::string> labels = {});
  static Arrangement integral(std::size_t dim, const std::vector<std::vector<long>>& rows,
                              std::vector<std::string> labels = {});
  static Arrangement cyclotomic(long order, std::size_t dim, std::vector<Normal> rows,
                                std::vector<std::string> labels = {});

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return normals_.size(); }
  long field_order() const { return field_->root_order(); }
  bool is_rational() const { return field_->degree() == 1; }
  const CyclotomicField& field() const { return *field_; }

  const Normal& normal(std::size_t i) const { return normals_.at(i); }
  // Integer normal; throws unless the arrangement is rational.
  std::vector<Int> integer_normal(std::size_t i) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string& label) const;

  std::size_t rank() const;
  std::size_t rank_of(const std::vector<std::size_t>& indices) const;

 private:
  Arrangement(std::shared_ptr<const CyclotomicField> f, std::size_t dim,
              std::vector<Normal> rows, std::vector<std::string> labels);

  std::shared_ptr<const CyclotomicField> field_;
  std::size_t dim_ = 0;
  std::vector<Normal> normals_;
  std::vector<std::string> labels_;
};

struct Multiarrangement {
  Arrangement arrangement;
  std::vector<long> m;

  Multiarrangement(Arrangement a, std::vector<long> mult);
  long total() const;  // N = sum of m_H
};

// Maximal rank-2 flat: the hyperplanes containing a codimension-2 subspace.
struct Flat2 {
  std::vector<std::size_t> hyperplanes;
  std::vector<Arrangement::Normal> basis;  // spans the subspace
};

std::vector<Flat2> rank2_flats(const Arrangement& a);

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index);

// Poincare polynomial of the projectivized complement, rank at most 3.
IntPoly os_poincare_rank3(const Arrangement& a);

nlohmann::json to_json(const Arrangement& a);
Arrangement arrangement_from_json(const nlohmann::json& j);
std::vector<long> multiplicities_from_json(const nlohmann::json& j);

Rat parse_rational(const nlohmann::json& j);
std::string rational_string(const Rat& q);

}  // namespace milnor

#endif  // MILNOR_ARRANGEMENT_ARRANGEMENT_H_
