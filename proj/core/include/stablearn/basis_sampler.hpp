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

#ifndef STABLEARN_BASIS_SAMPLER_HPP_
#define STABLEARN_BASIS_SAMPLER_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "stablearn/bitvec.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

class HybridState;

// Draws joint measurement outcomes for a fixed list of pairwise commuting
// Hermitian Pauli operators against a fixed hybrid state, without mutating
// the state. Each sample_row() call is distributed exactly as measuring the
// operators one by one on a fresh copy of the state; one call models the
// consumption of one state copy.
//
// The speedup over repeated HybridState::measure_pauli comes from doing the
// frame and frozen-block analysis once per list instead of once per copy.
// Products of the measured operators whose frame image touches the frozen
// block with an X are uniform coin flips; products acting as a scalar there
// have forced outcomes; what remains is a small subgroup acting on the dense
// factor, at most 2 * dense_count operators, which is measured honestly.
// Outcome bits for the original list are then a solved linear system plus
// uniform bits on the free directions.
//
// The operator list may be linearly dependent; dependent outcomes stay
// consistent within each row. The constructor checks Hermiticity and
// pairwise commutation.
class BasisSampler {
 public:
  BasisSampler(const HybridState& state, const std::vector<PauliOp>& gens);

  std::size_t num_operators() const { return num_ops_; }

  // One fresh copy of the state, measured in the full list. Bit i of the
  // result is the outcome of gens[i] (0 for +1, 1 for -1).
  BitVec sample_row(Rng& rng);

 private:
  const HybridState& state_;
  std::size_t num_ops_;

  // Outcome bits of the constrained-subgroup basis: positions below
  // num_fixed_ are forced by the frozen block and preset here, the rest are
  // filled per row from the dense measurements.
  BitVec outcome_base_;
  std::size_t num_fixed_ = 0;

  // Dense restrictions of the constrained basis elements with nontrivial
  // dense action, measured sequentially on a copy of the dense factor.
  std::vector<PauliOp> quotient_ops_;

  // Linear solve mapping constrained outcome bits to outcome bits of the
  // original operators: bit solution_cols_[s] of the row is the parity of
  // solve_rows_[s] against the constrained bits; remaining bits come from
  // free_basis_, the combinations whose outcomes are fair coins.
  std::vector<BitVec> solve_rows_;
  std::vector<std::size_t> solution_cols_;
  std::vector<BitVec> free_basis_;

  std::vector<std::complex<double>> phi_scratch_;
  std::vector<std::complex<double>> pauli_scratch_;
};

}  // namespace stablearn

#endif  // STABLEARN_BASIS_SAMPLER_HPP_
