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

#include "milnor/arrangement/arrangement.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "milnor/algebra/matrix.h"

namespace milnor {

namespace {

std::vector<std::string> default_labels(std::vector<std::string> labels, std::size_t n) {
  if (labels.empty())
    for (std::size_t i = 0; i < n; ++i) labels.push_back("H" + std::to_string(i + 1));
  if (labels.size() != n) throw std::invalid_argument("arrangement: label count mismatch");
  return labels;
}

FieldMatrix<CyclotomicField> stack(const CyclotomicField& f, const Arrangement& a,
                                   const std::vector<std::size_t>& idx) {
  FieldMatrix<CyclotomicField> m(f, idx.size(), a.dim());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c) m.at(r, c) = a.normal(idx[r])[c];
  return m;
}

}  // namespace

Arrangement::Arrangement(std::shared_ptr<const CyclotomicField> f, std::size_t dim,
                         std::vector<Normal> rows, std::vector<std::string> labels)
    : field_(std::move(f)), dim_(dim), normals_(std::move(rows)) {
  if (normals_.empty()) throw std::invalid_argument("arrangement: no hyperplanes");
  if (dim_ == 0) throw std::invalid_argument("arrangement: dimension must be positive");
  labels_ = default_labels(std::move(labels), normals_.size());
  const CyclotomicField& fl = *field_;
  for (Normal& v : normals_) {
    if (v.size() != dim_) throw std::invalid_argument("arrangement: row length differs from dim");
    std::size_t lead = dim_;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!fl.is_zero(v[j])) {
        lead = j;
        break;
      }
    if (lead == dim_) throw std::invalid_argument("arrangement: zero normal vector");
    if (fl.degree() == 1) {
      // Primitive integer vector with positive leading entry.
      Int den = 1, num = 0;
      for (const Elem& e : v) {
        den = lcm(den, Int(e[0].get_den()));
      }
      for (const Elem& e : v) num = gcd(num, Int(e[0].get_num() * (den / e[0].get_den())));
      Rat scale = Rat(den) / Rat(num);
      if (v[lead][0] < 0) scale = -scale;
      for (Elem& e : v) {
        e[0] *= scale;
        e[0].canonicalize();
      }
    } else {
      Elem s = fl.inv(v[lead]);
      for (Elem& e : v) e = fl.mul(e, s);
    }
  }
  for (std::size_t i = 0; i < normals_.size(); ++i)
    for (std::size_t j = i + 1; j < normals_.size(); ++j)
      if (rank_of({i, j}) < 2)
        throw std::invalid_argument("arrangement: hyperplanes " + labels_[i] + " and " +
                                    labels_[j] + " coincide");
}

Arrangement Arrangement::rational(std::size_t dim, const std::vector<std::vector<Rat>>& rows,
                                  std::vector<std::string> labels) {
  auto f = std::make_shared<const CyclotomicField>(1);
  std::vector<Normal> n;
  for (const auto& r : rows) {
    Normal v;
    for (const Rat& q : r) v.push_back(f->from_rat(q));
    n.push_back(std::move(v));
  }
  return Arrangement(f, dim, std::move(n), std::move(labels));
}

Arrangement Arrangement::integral(std::size_t dim, const std::vector<std::vector<long>>& rows,
                                  std::vector<std::string> labels) {
  std::vector<std::vector<Rat>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return rational(dim, q, std::move(labels));
}

Arrangement Arrangement::cyclotomic(long order, std::size_t dim, std::vector<Normal> rows,
                                    std::vector<std::string> labels) {
  if (order < 1) throw std::invalid_argument("arrangement: cyclotomic order must be positive");
  auto f = std::make_shared<const CyclotomicField>(order <= 2 ? 1 : order);
  for (auto& r : rows)
    for (auto& e : r) {
      if (order == 2 && e.size() == 1) continue;
      if (e.size() != f->degree())
        throw std::invalid_argument("arrangement: cyclotomic entry has wrong length");
    }
  return Arrangement(f, dim, std::move(rows), std::move(labels));
}

std::vector<Int> Arrangement::integer_normal(std::size_t i) const {
  if (!is_rational()) throw std::logic_error("arrangement: normals are not rational");
  std::vector<Int> out;
  for (const Elem& e : normals_.at(i)) out.push_back(e[0].get_num());
  return out;
}

std::optional<std::size_t> Arrangement::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

std::size_t Arrangement::rank() const {
  std::vector<std::size_t> all(size());
  std::iota(all.begin(), all.end(), 0);
  return rank_of(all);
}

std::size_t Arrangement::rank_of(const std::vector<std::size_t>& indices) const {
  return matrix_rank(stack(*field_, *this, indices));
}

Multiarrangement::Multiarrangement(Arrangement a, std::vector<long> mult)
    : arrangement(std::move(a)), m(std::move(mult)) {
  if (m.size() != arrangement.size())
    throw std::invalid_argument("multiarrangement: multiplicity count mismatch");
  for (long x : m)
    if (x < 1) throw std::invalid_argument("multiarrangement: multiplicities must be positive");
}

long Multiarrangement::total() const { return std::accumulate(m.begin(), m.end(), 0L); }

std::vector<Flat2> rank2_flats(const Arrangement& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  std::vector<Flat2> flats;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (seen[i][j]) continue;
      Flat2 fl;
      for (std::size_t k = 0; k < n; ++k)
        if (k == i || k == j || a.rank_of({i, j, k}) == 2) fl.hyperplanes.push_back(k);
      for (std::size_t x : fl.hyperplanes)
        for (std::size_t y : fl.hyperplanes) seen[x][y] = true;
      fl.basis = nullspace(stack(a.field(), a, {i, j}));
      flats.push_back(std::move(fl));
    }
  std::sort(flats.begin(), flats.end(),
            [](const Flat2& x, const Flat2& y) { return x.hyperplanes < y.hyperplanes; });
  return flats;
}

Arrangement delete_hyperplane(const Arrangement& a, std::size_t index) {
  if (index >= a.size()) throw std::out_of_range("delete: hyperplane index out of range");
  std::vector<Arrangement::Normal> rows;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == index) continue;
    rows.push_back(a.normal(i));
    labels.push_back(a.labels()[i]);
  }
  return Arrangement::cyclotomic(a.field_order(), a.dim(), std::move(rows), std::move(labels));
}

IntPoly os_poincare_rank3(const Arrangement& a) {
  std::size_t r = a.rank();
  if (r > 3) throw std::invalid_argument("os_poincare_rank3: rank exceeds 3");
  const long n = static_cast<long>(a.size());
  if (r == 1) return {1};
  // Whitney: b2(M) = sum over rank-2 flats of mu = |X| - 1; divide by (1 + x).
  long b2 = 0;
  for (const Flat2& f : rank2_flats(a)) b2 += static_cast<long>(f.hyperplanes.size()) - 1;
  IntPoly p{1, n - 1, b2 - (n - 1)};
  poly_trim(p);
  return p;
}

Rat parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  std::string s = j.get<std::string>();
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_string(const Rat& q) { return q.get_str(); }

nlohmann::json to_json(const Arrangement& a) {
  nlohmann::json j;
  j["dim"] = a.dim();
  if (!a.is_rational()) j["cyclotomic"] = a.field_order();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& e : a.normal(i)) {
      if (a.is_rational()) {
        row.push_back(rational_string(e[0]));
      } else {
        nlohmann::json c = nlohmann::json::array();
        for (const Rat& q : e) c.push_back(rational_string(q));
        row.push_back(c);
      }
    }
    rows.push_back(row);
  }
  j["hyperplanes"] = rows;
  j["labels"] = a.labels();
  return j;
}

Arrangement arrangement_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("hyperplanes"))
    throw std::invalid_argument("arrangement file needs 'dim' and 'hyperplanes'");
  std::size_t dim = j.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  long order = j.value("cyclotomic", 1L);
  if (order <= 1) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j.at("hyperplanes")) {
      std::vector<Rat> row;
      for (const auto& e : r) row.push_back(parse_rational(e));
      rows.push_back(std::move(row));
    }
    return Arrangement::rational(dim, rows, std::move(labels));
  }
  std::vector<Arrangement::Normal> rows;
  for (const auto& r : j.at("hyperplanes")) {
    Arrangement::Normal row;
    for (const auto& e : r) {
      Arrangement::Elem c;
      for (const auto& q : e) c.push_back(parse_rational(q));
      row.push_back(std::move(c));
    }
    rows.push_back(std::move(row));
  }
  return Arrangement::cyclotomic(order, dim, std::move(rows), std::move(labels));
}

std::vector<long> multiplicities_from_json(const nlohmann::json& j) {
  if (!j.contains("m")) throw std::invalid_argument("multiplicity file needs 'm'");
  return j.at("m").get<std::vector<long>>();
}

}  // namespace milnor
