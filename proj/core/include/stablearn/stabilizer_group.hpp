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

#ifndef STABLEARN_STABILIZER_GROUP_HPP_
#define STABLEARN_STABILIZER_GROUP_HPP_

#include <cstddef>
#include <vector>

#include "stablearn/gf2.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

// An abelian subgroup of the Pauli group given by independent Hermitian
// generators. Independence and membership are decided on unsigned symplectic
// rows; signs ride along on the stored operators.
class StabilizerGroup {
 public:
  StabilizerGroup() = default;
  explicit StabilizerGroup(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  std::size_t rank() const { return gens_.size(); }
  const std::vector<PauliOp>& generators() const { return gens_; }
  const PauliOp& generator(std::size_t i) const { return gens_.at(i); }

  // Appends g if its unsigned row lies outside the current row span.
  // Throws std::invalid_argument when g is not Hermitian or anticommutes
  // with a present generator; returns false on span membership.
  bool add_if_independent(const PauliOp& g);

  bool commutes_with_all(const PauliOp& g) const;

  // True when g's unsigned symplectic row is in the row span.
  bool contains_unsigned(const PauliOp& g) const;

  // The ordered product prod_i gens[i]^{a[i]}, phases exact.
  PauliOp combination(const BitVec& a) const;

  // Generator rows as a rank x 2n matrix.
  BitMatrix symplectic_rows() const;

  // Same group with generators brought to reduced row echelon form over the
  // symplectic rows, signs carried through the row operations exactly.
  StabilizerGroup canonicalized() const;

  bool operator==(const StabilizerGroup& o) const {
    return n_ == o.n_ && gens_ == o.gens_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOp> gens_;
  // Row-reduced copies of the generator rows for O(rank) membership tests.
  std::vector<BitVec> reduced_rows_;
  std::vector<std::size_t> reduced_pivots_;
};

}  // namespace stablearn

#endif  // STABLEARN_STABILIZER_GROUP_HPP_
