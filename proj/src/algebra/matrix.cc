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

#include "milnor/algebra/matrix.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "milnor/algebra/kernels.h"

namespace milnor {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& r,
                               std::size_t cols) {
  IntMatrix m(r.size(), cols);
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i].size() != cols) throw std::invalid_argument("IntMatrix: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = r[i][j];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(rows, o.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols; ++j) out.at(i, j) += at(i, k) * o.at(k, j);
    }
  return out;
}

std::size_t rank_mod_prime(std::vector<std::uint32_t> a, std::size_t rows,
                           std::size_t cols, std::uint32_t m) {
  auto axpy = kernels::axpy_mod();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (a[r * cols + c] != 0) {
        piv = r;
        break;
      }
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + piv * cols + c, a.begin() + piv * cols + cols,
                       a.begin() + rank * cols + c);
    std::uint32_t* prow = a.data() + rank * cols;
    std::uint32_t pinv = inv_mod_prime(prow[c], m);
    for (std::size_t j = c; j < cols; ++j)
      prow[j] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(prow[j]) * pinv % m);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      std::uint32_t* row = a.data() + r * cols;
      if (row[c] == 0) continue;
      axpy(row + c, prow + c, m - row[c], m, cols - c);
    }
    ++rank;
  }
  return rank;
}

std::size_t integer_rank(const IntMatrix& in) {
  IntMatrix m = in;
  std::size_t rank = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t piv = m.rows;
    for (std::size_t r = rank; r < m.rows; ++r)
      if (m.at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv == m.rows) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
    // Bareiss step: the division by the previous pivot is exact.
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t j = c + 1; j < m.cols; ++j) {
        Int v = m.at(rank, c) * m.at(r, j) - m.at(r, c) * m.at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(r, j) = v;
      }
      m.at(r, c) = 0;
    }
    prev = m.at(rank, c);
    ++rank;
  }
  return rank;
}

namespace {

// Dense Smith form on a working copy; u and v accumulate the transforms when
// requested.
void dense_snf(IntMatrix& d, IntMatrix* u, IntMatrix* v,
               std::vector<Int>& factors) {
  const std::size_t rows = d.rows, cols = d.cols;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols; ++k) std::swap(d.at(i, k), d.at(j, k));
    if (u) for (std::size_t k = 0; k < u->cols; ++k) std::swap(u->at(i, k), u->at(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows; ++k) std::swap(d.at(k, i), d.at(k, j));
    if (v) for (std::size_t k = 0; k < v->rows; ++k) std::swap(v->at(k, i), v->at(k, j));
  };
  // row_i -= q * row_j
  auto row_op = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < cols; ++k)
      if (d.at(j, k) != 0) d.at(i, k) -= q * d.at(j, k);
    if (u) for (std::size_t k = 0; k < u->cols; ++k) u->at(i, k) -= q * u->at(j, k);
  };
  auto col_op = [&](std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < rows; ++k)
      if (d.at(k, j) != 0) d.at(k, i) -= q * d.at(k, j);
    if (v) for (std::size_t k = 0; k < v->rows; ++k) v->at(k, i) -= q * v->at(k, j);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Minimal absolute value pivot in the trailing block.
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (d.at(i, j) == 0) continue;
        if (!found || abs(d.at(i, j)) < abs(d.at(pi, pj))) {
          found = true;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        row_op(i, t, q);
        if (d.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        col_op(j, t, q);
        if (d.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // Move the smallest leftover in row/column t onto the diagonal.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d.at(i, t) != 0 && abs(d.at(i, t)) < abs(d.at(bi, bj))) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d.at(t, j) != 0 && abs(d.at(t, j)) < abs(d.at(bi, bj))) { bi = t; bj = j; }
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      // Full reduction: the pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d.at(i, j) != 0 && !mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            row_op(t, i, Int(-1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d.at(t, t) < 0) {
      for (std::size_t k = 0; k < cols; ++k) d.at(t, k) = -d.at(t, k);
      if (u) for (std::size_t k = 0; k < u->cols; ++k) u->at(t, k) = -u->at(t, k);
    }
    factors.push_back(d.at(t, t));
  }
}

// Clears unit pivots on a sparse matrix; returns how many were removed and
// leaves the remaining rows/columns for the dense pass.
std::size_t sparse_unit_phase(std::vector<SparseIntRow> rows, std::size_t ncols,
                              IntMatrix& rest) {
  const std::size_t nrows = rows.size();
  std::vector<std::set<std::size_t>> colrows(ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    for (auto it = rows[i].begin(); it != rows[i].end();) {
      if (it->first >= ncols) throw std::out_of_range("sparse matrix: column out of range");
      if (it->second == 0) {
        it = rows[i].erase(it);
        continue;
      }
      colrows[it->first].insert(i);
      ++it;
    }
  }
  std::vector<bool> row_alive(nrows, true), col_alive(ncols, true);
  std::size_t units = 0;
  for (;;) {
    // Markowitz-style choice among unit entries.
    bool found = false;
    std::size_t bi = 0, bj = 0, best = 0;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, x] : rows[i]) {
        if (x != 1 && x != -1) continue;
        std::size_t cost = (rows[i].size() - 1) * (colrows[j].size() - 1);
        if (!found || cost < best) {
          found = true;
          best = cost;
          bi = i;
          bj = j;
          if (cost == 0) break;
        }
      }
      if (found && best == 0) break;
    }
    if (!found) break;
    const SparseIntRow pivot = rows[bi];
    const Int sign = pivot.at(bj);
    std::vector<std::size_t> targets(colrows[bj].begin(), colrows[bj].end());
    for (std::size_t r : targets) {
      if (r == bi) continue;
      Int q = rows[r].at(bj) * sign;  // sign is +-1, so q * pivot cancels
      for (const auto& [j, x] : pivot) {
        Int nv = rows[r].count(j) ? Int(rows[r][j] - q * x) : Int(-q * x);
        if (nv == 0) {
          rows[r].erase(j);
          colrows[j].erase(r);
        } else {
          if (!rows[r].count(j)) colrows[j].insert(r);
          rows[r][j] = nv;
        }
      }
    }
    for (const auto& [j, x] : pivot) colrows[j].erase(bi);
    rows[bi].clear();
    row_alive[bi] = false;
    col_alive[bj] = false;
    ++units;
  }
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t i = 0; i < nrows; ++i)
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  std::map<std::size_t, std::size_t> col_index;
  for (std::size_t j = 0; j < ncols; ++j)
    if (col_alive[j]) {
      col_index[j] = live_cols.size();
      live_cols.push_back(j);
    }
  rest = IntMatrix(live_rows.size(), live_cols.size());
  for (std::size_t a = 0; a < live_rows.size(); ++a)
    for (const auto& [j, x] : rows[live_rows[a]]) rest.at(a, col_index.at(j)) = x;
  return units;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool transforms) {
  SnfResult res;
  if (transforms) {
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows), v = IntMatrix::identity(m.cols);
    dense_snf(d, &u, &v, res.invariant_factors);
    if (!(u * m * v == d)) throw std::logic_error("smith_normal_form: transform check failed");
    res.u = std::move(u);
    res.v = std::move(v);
  } else {
    std::vector<SparseIntRow> rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j)
        if (m.at(i, j) != 0) rows[i][j] = m.at(i, j);
    IntMatrix rest;
    std::size_t units = sparse_unit_phase(std::move(rows), m.cols, rest);
    res.invariant_factors.assign(units, Int(1));
    dense_snf(rest, nullptr, nullptr, res.invariant_factors);
  }
  // The dense pass yields a divisibility chain only after sorting the unit
  // block in front, which it already is; normalize defensively.
  std::sort(res.invariant_factors.begin(), res.invariant_factors.end());
  for (std::size_t i = 0; i + 1 < res.invariant_factors.size(); ++i)
    if (!mpz_divisible_p(res.invariant_factors[i + 1].get_mpz_t(),
                         res.invariant_factors[i].get_mpz_t()))
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  res.rank = res.invariant_factors.size();
  return res;
}

AbelianGroup cokernel(const IntMatrix& relations) {
  SnfResult s = smith_normal_form(relations);
  AbelianGroup g;
  g.rank = relations.cols - s.rank;
  for (const Int& d : s.invariant_factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup cokernel_sparse(std::vector<SparseIntRow> relations, std::size_t cols) {
  IntMatrix rest;
  std::vector<Int> factors(sparse_unit_phase(std::move(relations), cols, rest), Int(1));
  dense_snf(rest, nullptr, nullptr, factors);
  AbelianGroup g;
  g.rank = cols - factors.size();
  std::sort(factors.begin(), factors.end());
  for (const Int& d : factors)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

std::string to_string(const AbelianGroup& g) {
  std::ostringstream os;
  bool first = true;
  if (g.rank > 0 || g.torsion.empty()) {
    os << "Z^" << g.rank;
    first = false;
  }
  std::map<Int, int> counts;
  for (const Int& t : g.torsion) ++counts[t];
  for (const auto& [t, c] : counts) {
    if (!first) os << " + ";
    first = false;
    os << "Z_" << t.get_str();
    if (c > 1) os << "^" << c;
  }
  return os.str();
}

}  // namespace milnor
