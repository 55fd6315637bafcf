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

#ifndef MILNOR_ALGEBRA_MATRIX_H_
#define MILNOR_ALGEBRA_MATRIX_H_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "milnor/algebra/field.h"
#include "milnor/algebra/number_theory.h"

namespace milnor {

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& r,
                             std::size_t cols);

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const = default;
};

template <class F>
struct FieldMatrix {
  using Element = typename F::Element;
  const F* field = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> a;

  FieldMatrix(const F& f, std::size_t r, std::size_t c)
      : field(&f), rows(r), cols(c), a(r * c, f.zero()) {}
  Element& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Element& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Rank by Gaussian elimination over the matrix's field.
template <class F>
std::size_t matrix_rank(FieldMatrix<F> m) {
  const F& f = *m.field;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, c))) {
        piv = r;
        break;
      }
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    auto pinv = f.inv(m.at(rank, c));
    for (std::size_t j = c; j < m.cols; ++j)
      if (!f.is_zero(m.at(rank, j))) m.at(rank, j) = f.mul(m.at(rank, j), pinv);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (f.is_zero(m.at(r, c))) continue;
      auto factor = m.at(r, c);
      for (std::size_t j = c; j < m.cols; ++j)
        if (!f.is_zero(m.at(rank, j))) f.sub_mul(m.at(r, j), factor, m.at(rank, j));
    }
    ++rank;
  }
  return rank;
}

// Basis of the right kernel {v : M v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<typename F::Element>> nullspace(FieldMatrix<F> m) {
  const F& f = *m.field;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r)
      if (!f.is_zero(m.at(r, c))) {
        piv = r;
        break;
      }
    if (piv == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    auto pinv = f.inv(m.at(rank, c));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(rank, j) = f.mul(m.at(rank, j), pinv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank || f.is_zero(m.at(r, c))) continue;
      auto factor = m.at(r, c);
      for (std::size_t j = 0; j < m.cols; ++j) f.sub_mul(m.at(r, j), factor, m.at(rank, j));
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::vector<typename F::Element>> basis;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (next < pivots.size() && pivots[next] == c) {
      ++next;
      continue;
    }
    std::vector<typename F::Element> v(m.cols, f.zero());
    v[c] = f.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

// Dense rank over F_m (m prime, m < 2^31); entries must be reduced. The
// row updates go through the dispatched axpy kernel.
std::size_t rank_mod_prime(std::vector<std::uint32_t> a, std::size_t rows,
                           std::size_t cols, std::uint32_t m);

// Rank over Q of an integer matrix (fraction-free elimination).
std::size_t integer_rank(const IntMatrix& m);

struct SnfResult {
  std::vector<Int> invariant_factors;  // positive, each dividing the next
  std::size_t rank = 0;
  std::optional<IntMatrix> u;  // u * m * v = diagonal
  std::optional<IntMatrix> v;
};

// Smith normal form with minimal-absolute-value pivoting and full reduction.
// Without transforms, unit pivots are first cleared on a sparse copy.
SnfResult smith_normal_form(const IntMatrix& m, bool transforms = false);

// Finitely generated abelian group Z^rank + sum Z/torsion_i.
struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;  // each > 1, dividing the next
  bool operator==(const AbelianGroup& o) const = default;
};

// Cokernel of the relation matrix (rows = relations, cols = generators).
AbelianGroup cokernel(const IntMatrix& relations);
// Same, for a sparse relation matrix given row by row.
using SparseIntRow = std::map<std::size_t, Int>;
AbelianGroup cokernel_sparse(std::vector<SparseIntRow> relations, std::size_t cols);

std::string to_string(const AbelianGroup& g);

}  // namespace milnor

#endif  // MILNOR_ALGEBRA_MATRIX_H_
