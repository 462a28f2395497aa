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

#ifndef STABLEARN_STATE_SOURCE_HPP_
#define STABLEARN_STATE_SOURCE_HPP_

#include <cstddef>
#include <vector>

#include "stablearn/gf2.hpp"
#include "stablearn/hybrid_state.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/rng.hpp"

namespace stablearn {

// Supplier of fresh copies of one fixed n-qubit state, consumed one copy per
// measured row. The learner only ever talks to a state through this
// interface, which is what keeps its copy accounting honest: every row it
// sees costs exactly one copy, no matter how many operators the row covers.
class StateSource {
 public:
  virtual ~StateSource() = default;

  virtual std::size_t num_qubits() const = 0;

  // Total copies handed out so far.
  virtual std::size_t copies_consumed() const = 0;

  // Measures `copies` fresh copies, each in the full list `gens` of pairwise
  // commuting Hermitian operators, and appends one outcome row per copy to
  // `out` (bit i of a row is the outcome of gens[i], 0 for +1).
  virtual void measure_copies_in_basis(const std::vector<PauliOp>& gens,
                                       std::size_t copies, Rng& rng,
                                       BitMatrix& out) = 0;
};

// Source backed by a hybrid simulator state; copies are simulated.
class HybridStateSource final : public StateSource {
 public:
  explicit HybridStateSource(HybridState state);

  std::size_t num_qubits() const override { return state_.num_qubits(); }
  std::size_t copies_consumed() const override { return copies_; }

  void measure_copies_in_basis(const std::vector<PauliOp>& gens,
                               std::size_t copies, Rng& rng,
                               BitMatrix& out) override;

  const HybridState& state() const { return state_; }

 private:
  HybridState state_;
  std::size_t copies_ = 0;
};

}  // namespace stablearn

#endif  // STABLEARN_STATE_SOURCE_HPP_
