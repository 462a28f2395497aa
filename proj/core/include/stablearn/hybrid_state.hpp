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

#ifndef STABLEARN_HYBRID_STATE_HPP_
#define STABLEARN_HYBRID_STATE_HPP_

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stablearn/dense_state.hpp"
#include "stablearn/gates.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/stabilizer_group.hpp"
#include "stablearn/tableau.hpp"

namespace stablearn {

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Simulator state V(|0^r> (x) phi): a Clifford frame V around a small dense
// residual phi. Clifford gates cost O(n) bit operations, a non-Clifford
// Z-axis rotation grows the dense register by at most one qubit, and Pauli
// measurements keep r fixed. Global phase is not tracked.
//
// Internally the tableau stores U = V^dagger, so the operator a physical
// Pauli turns into inside the frame is a plain conjugation through U.
class HybridState {
 public:
  static constexpr std::size_t kDefaultDenseCap = 16;

  HybridState() = default;
  explicit HybridState(std::size_t n, std::size_t dense_cap = kDefaultDenseCap);

  static HybridState prepare(const Circuit& c,
                             std::size_t dense_cap = kDefaultDenseCap);

  std::size_t num_qubits() const { return n_; }
  std::size_t frozen_count() const { return n_ - dense_order_.size(); }
  std::size_t dense_count() const { return dense_order_.size(); }
  bool is_frozen(std::size_t q) const { return frozen_.at(q); }

  // Physical qubit carried by each dense axis, in axis order (axis l is bit
  // l of the phi index).
  const std::vector<std::size_t>& dense_order() const { return dense_order_; }
  const std::vector<std::complex<double>>& phi() const { return phi_; }

  // The frame inverse U = V^dagger maintained by the simulator.
  const CliffordTableau& frame_inverse() const { return u_; }

  void apply_gate(const Gate& g);
  void apply_circuit(const Circuit& c);

  // exp(-i theta/2 Z_q), up to global phase. Multiples of pi/2 stay in the
  // tableau; anything else touches the dense register and may grow it.
  void apply_z_rotation(std::size_t q, double theta);

  // Projective measurement of Hermitian g; returns the outcome bit (0 for
  // eigenvalue +1) and collapses the state in place.
  bool measure_pauli(const PauliOp& g, Rng& rng);

  // Sequential measurement of the generators of a commuting group on this
  // one copy; bit i is the outcome of generator i.
  BitVec measure_group_basis(const StabilizerGroup& t, Rng& rng);

  struct Residual {
    CliffordTableau v;
    std::size_t r = 0;
    std::vector<std::size_t> frozen;       // physical indices pinned to |0>
    std::vector<std::size_t> dense_order;  // physical index per phi axis
    std::vector<std::complex<double>> phi;
  };
  Residual residual_extract() const;

  // Full 2^n reconstruction; n must fit the dense-oracle cap.
  DenseState to_dense(std::size_t cap = DenseState::kDefaultCap) const;

 private:
  friend class BasisSampler;

  // Restriction of a frozen-x-free operator to the dense axes, full phase.
  PauliOp dense_restriction(const PauliOp& p) const;
  // Lowest frozen qubit where p acts with X or Y, or n when none.
  std::size_t frozen_x_pivot(const PauliOp& p) const;
  // Conjugates p to +/-X_j with gates anchored on frozen qubit j, mirroring
  // every gate onto the frame (u_ <- gate * u_). Requires p.x[j] == 1.
  void sweep_to_x(PauliOp& p, std::size_t j);

  std::size_t n_ = 0;
  std::size_t dense_cap_ = kDefaultDenseCap;
  CliffordTableau u_;
  std::vector<bool> frozen_;
  std::vector<std::size_t> dense_order_;
  std::vector<std::complex<double>> phi_;
  std::vector<std::complex<double>> scratch_;  // reused by measurements
};

}  // namespace stablearn

#endif  // STABLEARN_HYBRID_STATE_HPP_
