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

#ifndef VTRIGID_MODULAR_MATRIX_H_
#define VTRIGID_MODULAR_MATRIX_H_

#include <cstdint>
#include <vector>

namespace vtrigid {

// Arithmetic in GF(p) for the Mersenne prime p = 2^61 - 1.
namespace gf {

inline constexpr uint64_t kPrime = (uint64_t{1} << 61) - 1;

inline uint64_t Reduce(uint64_t x) {
  x = (x & kPrime) + (x >> 61);
  return x >= kPrime ? x - kPrime : x;
}
inline uint64_t Add(uint64_t a, uint64_t b) {
  const uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}
inline uint64_t Sub(uint64_t a, uint64_t b) {
  return a >= b ? a - b : a + kPrime - b;
}
inline uint64_t Neg(uint64_t a) { return a == 0 ? 0 : kPrime - a; }
inline uint64_t Mul(uint64_t a, uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  const uint64_t lo = static_cast<uint64_t>(p) & kPrime;
  const uint64_t hi = static_cast<uint64_t>(p >> 61);
  return Reduce(lo + hi);
}
uint64_t Pow(uint64_t a, uint64_t e);
// Throws InternalError on zero.
uint64_t Inverse(uint64_t a);
// Maps a signed integer into the field.
uint64_t FromInt(int64_t x);

}  // namespace gf

// Dense row-major matrix over GF(p).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  uint64_t& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  uint64_t at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
  uint64_t* row(int r) { return data_.data() + size_t(r) * cols_; }
  const uint64_t* row(int r) const { return data_.data() + size_t(r) * cols_; }

  ModMatrix Transposed() const;
  ModMatrix SelectRows(const std::vector<int>& rows) const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint64_t> data_;
};

// Rank by Gaussian elimination on a copy.
int Rank(const ModMatrix& m);

struct ReducedRowEchelon {
  ModMatrix matrix;               // in reduced row echelon form
  std::vector<int> pivot_columns; // pivot column of row i, i < rank
  int rank() const { return static_cast<int>(pivot_columns.size()); }
};

ReducedRowEchelon RowReduce(ModMatrix m);

// Basis of {x : A x = 0}, one vector per free column of A's echelon form.
std::vector<std::vector<uint64_t>> NullSpace(const ReducedRowEchelon& rref);
// Basis of {y : y^T A = 0}.
std::vector<std::vector<uint64_t>> LeftNullSpace(const ModMatrix& a);

}  // namespace vtrigid

#endif  // VTRIGID_MODULAR_MATRIX_H_
