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

#ifndef STABLEARN_TABLEAU_HPP_
#define STABLEARN_TABLEAU_HPP_

#include <cstddef>
#include <vector>

#include "stablearn/gates.hpp"
#include "stablearn/pauli.hpp"

namespace stablearn {

// A Clifford unitary U represented by the images of the basis Paulis:
// x-row q holds U X_q U^dagger and z-row q holds U Z_q U^dagger, signs
// included. Global phase is not represented.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  static CliffordTableau identity(std::size_t n);

  // Tableau of the unitary G_m ... G_1 for gates listed in application
  // order. Throws on T/RZ gates with non-Clifford angles; RZ at a multiple
  // of pi/2 is folded into S/Z powers.
  static CliffordTableau from_gates(std::size_t n, const std::vector<Gate>& gates);

  std::size_t num_qubits() const { return n_; }

  const PauliOp& x_image(std::size_t q) const { return xr_[q]; }
  const PauliOp& z_image(std::size_t q) const { return zr_[q]; }
  PauliOp& x_image(std::size_t q) { return xr_[q]; }
  PauliOp& z_image(std::size_t q) { return zr_[q]; }

  // U g U^dagger, expanded through the stored rows. Exact, phases included.
  PauliOp conjugate(const PauliOp& g) const;

  // this <- G * this for a single Clifford gate G: conjugates every row.
  void left_mul_gate(const Gate& g);
  void left_h(std::size_t q);
  void left_s(std::size_t q);
  void left_x(std::size_t q);
  void left_z(std::size_t q);
  void left_cx(std::size_t c, std::size_t t);
  void left_cz(std::size_t a, std::size_t b);

  // this <- this * G^dagger for a single Clifford gate G. This is the
  // cheap direction (touches only the rows of the affected qubits), used
  // when a physical gate G is appended to a circuit whose inverse this
  // tableau tracks.
  void right_mul_gate_inverse(const Gate& g);

  CliffordTableau inverse() const;

  // apply b first, then a.
  static CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);

  // Checks the symplectic and Hermiticity invariants of a well-formed
  // tableau. Intended for tests; O(n^3) bit operations.
  bool is_valid() const;

  // Synthesizes a gate list (H, S, CNOT, X, Z only) whose from_gates tableau
  // equals *this exactly. O(n^2) gates.
  std::vector<Gate> to_gates() const;

  bool operator==(const CliffordTableau& o) const {
    return n_ == o.n_ && xr_ == o.xr_ && zr_ == o.zr_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<PauliOp> xr_;
  std::vector<PauliOp> zr_;
};

}  // namespace stablearn

#endif  // STABLEARN_TABLEAU_HPP_
