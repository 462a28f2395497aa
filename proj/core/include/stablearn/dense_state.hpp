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

#ifndef STABLEARN_DENSE_STATE_HPP_
#define STABLEARN_DENSE_STATE_HPP_

#include <complex>
#include <cstddef>
#include <vector>

#include "stablearn/gates.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/stabilizer_group.hpp"

namespace stablearn {

// Brute-force statevector on up to `cap` qubits. Basis index bit j is the
// state of qubit j (bit 0 least significant). Used as the reference oracle
// for everything else in this library.
class DenseState {
 public:
  static constexpr std::size_t kDefaultCap = 14;

  explicit DenseState(std::size_t n, std::size_t cap = kDefaultCap);
  static DenseState from_amplitudes(std::size_t n,
                                    std::vector<std::complex<double>> amps,
                                    std::size_t cap = kDefaultCap);

  std::size_t num_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }

  void apply_gate(const Gate& g);
  void apply_circuit(const Circuit& c);
  void apply_pauli(const PauliOp& p);

  std::complex<double> inner(const DenseState& o) const;

  // <psi| g |psi> for Hermitian g; throws otherwise.
  double pauli_expectation(const PauliOp& g) const;

  // Projective measurement of Hermitian g; returns the outcome bit
  // (0 for eigenvalue +1) and collapses the state.
  bool measure_pauli(const PauliOp& g, Rng& rng);

  void normalize();

 private:
  std::size_t n_ = 0;
  std::vector<std::complex<double>> amp_;
};

// Multiplies amp (length 2^k for a k-qubit p) by the matrix of p, in place.
void apply_pauli_inplace(std::vector<std::complex<double>>& amp, const PauliOp& p);

DenseState simulate_circuit(const Circuit& c, std::size_t cap = DenseState::kDefaultCap);

// sqrt(1 - |<a|b>|^2), the trace distance between pure states.
double trace_distance_pure(const DenseState& a, const DenseState& b);

// <psi| Pi |psi> for the code-space projector Pi = prod_i (I + g_i)/2.
double code_projection_weight(const DenseState& psi, const StabilizerGroup& s);

// sqrt(1 - <psi|Pi|psi>): the trace distance from psi to the code space of s.
double distance_to_code(const DenseState& psi, const StabilizerGroup& s);

}  // namespace stablearn

#endif  // STABLEARN_DENSE_STATE_HPP_
