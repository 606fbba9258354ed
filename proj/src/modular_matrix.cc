// Copyright 2026 The vtrigid Authors.
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

#include "vtrigid/modular_matrix.h"

#include <algorithm>
#include <utility>

#include "vtrigid/errors.h"

namespace vtrigid {
namespace gf {

uint64_t Pow(uint64_t a, uint64_t e) {
  uint64_t result = 1;
  while (e > 0) {
    if (e & 1) result = Mul(result, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return result;
}

uint64_t Inverse(uint64_t a) {
  if (a == 0) throw InternalError("inverse of zero in GF(p)");
  return Pow(a, kPrime - 2);
}

uint64_t FromInt(int64_t x) {
  const int64_t p = static_cast<int64_t>(kPrime);
  int64_t r = x % p;
  if (r < 0) r += p;
  return static_cast<uint64_t>(r);
}

}  // namespace gf

ModMatrix ModMatrix::Transposed() const {
  ModMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

ModMatrix ModMatrix::SelectRows(const std::vector<int>& rows) const {
  ModMatrix out(static_cast<int>(rows.size()), cols_);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::copy(row(rows[i]), row(rows[i]) + cols_, out.row(static_cast<int>(i)));
  }
  return out;
}

namespace {

// Eliminates below (and, when `full`, above) each pivot. Returns pivot
// columns in row order.
std::vector<int> Eliminate(ModMatrix& m, bool full) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap_ranges(m.row(pivot), m.row(pivot) + m.cols(), m.row(r));
    }
    uint64_t* pr = m.row(r);
    const uint64_t inv = gf::Inverse(pr[c]);
    for (int j = c; j < m.cols(); ++j) pr[j] = gf::Mul(pr[j], inv);
    for (int i = full ? 0 : r + 1; i < m.rows(); ++i) {
      if (i == r) continue;
      uint64_t* ri = m.row(i);
      const uint64_t factor = ri[c];
      if (factor == 0) continue;
      for (int j = c; j < m.cols(); ++j) {
        if (pr[j] != 0) ri[j] = gf::Sub(ri[j], gf::Mul(factor, pr[j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int Rank(const ModMatrix& m) {
  ModMatrix copy = m;
  return static_cast<int>(Eliminate(copy, false).size());
}

ReducedRowEchelon RowReduce(ModMatrix m) {
  auto pivots = Eliminate(m, true);
  return {std::move(m), std::move(pivots)};
}

std::vector<std::vector<uint64_t>> NullSpace(const ReducedRowEchelon& rref) {
  const int cols = rref.matrix.cols();
  std::vector<int> pivot_row(cols, -1);
  for (int i = 0; i < rref.rank(); ++i) pivot_row[rref.pivot_columns[i]] = i;
  std::vector<std::vector<uint64_t>> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<uint64_t> x(cols, 0);
    x[f] = 1;
    for (int i = 0; i < rref.rank(); ++i) {
      x[rref.pivot_columns[i]] = gf::Neg(rref.matrix.at(i, f));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<uint64_t>> LeftNullSpace(const ModMatrix& a) {
  return NullSpace(RowReduce(a.Transposed()));
}

}  // namespace vtrigid
