// Copyright 2026 The stablearn Authors
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

#ifndef STABLEARN_GF2_HPP_
#define STABLEARN_GF2_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "stablearn/bitvec.hpp"

namespace stablearn {

// Dense matrix over GF(2); rows are word-packed BitVecs of equal length.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_cols() const { return cols_; }

  BitVec& row(std::size_t r) { return rows_.at(r); }
  const BitVec& row(std::size_t r) const { return rows_.at(r); }

  bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool v) { rows_.at(r).set(c, v); }

  void append_row(const BitVec& v);
  BitMatrix transposed() const;

  bool operator==(const BitMatrix& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  BitMatrix mat;                        // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivot_cols;  // one entry per surviving row, increasing
  std::size_t rank = 0;
};

// Row reduction choosing the lowest-index pivot column available, so the
// result is the unique RREF of the row space.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

// Basis of {a : M a = 0}, one vector per free column of the RREF. The basis
// vector for free column f has a 1 at f and at every pivot row that contains
// f, which makes the basis echelon-shaped in the free coordinates.
std::vector<BitVec> nullspace(const BitMatrix& m);

// Solves M a = b for a single right-hand side. Returns nothing when the
// system is inconsistent.
std::optional<BitVec> solve_linear(const BitMatrix& m, const BitVec& b);

// Solution structure of M a = c for the two constant right-hand sides that
// matter to us: c = 0 (the nullspace) and c = all-ones.
struct ConstantRowSolutions {
  std::vector<BitVec> zero_basis;
  bool ones_consistent = false;
  BitVec ones_particular;  // valid only when ones_consistent
};

ConstantRowSolutions constant_row_solutions(const BitMatrix& m);

// Symplectic inner product of two length-2n vectors laid out as (x | z):
// parity of x_a . z_b + z_a . x_b. Zero means the corresponding Pauli
// operators commute.
bool symplectic_product(const BitVec& a, const BitVec& b);

}  // namespace stablearn

#endif  // STABLEARN_GF2_HPP_
