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

#ifndef STABLEARN_PAULI_HPP_
#define STABLEARN_PAULI_HPP_

#include <cstdint>
#include <string>

#include "stablearn/bitvec.hpp"

namespace stablearn {

// An n-qubit Pauli operator i^phase * prod_j X_j^{x_j} Z_j^{z_j}, with the
// X factor written to the left of the Z factor on each qubit. Under this
// convention Y = i * X Z, and the operator is Hermitian exactly when
// phase == |x & z| (mod 2).
struct PauliOp {
  BitVec x;
  BitVec z;
  std::uint8_t phase = 0;  // exponent of i, mod 4

  PauliOp() = default;
  explicit PauliOp(std::size_t n) : x(n), z(n) {}

  std::size_t num_qubits() const { return x.size(); }

  static PauliOp identity(std::size_t n) { return PauliOp(n); }

  // Single-qubit X, Y, or Z embedded at qubit q, Hermitian with + sign.
  static PauliOp single_x(std::size_t n, std::size_t q);
  static PauliOp single_y(std::size_t n, std::size_t q);
  static PauliOp single_z(std::size_t n, std::size_t q);

  // Builds the Hermitian operator with the given bit pattern and sign
  // (sign_bit 1 means overall factor -1). Phase is |x & z| + 2*sign mod 4.
  static PauliOp from_bits(const BitVec& x, const BitVec& z, bool sign_bit);

  bool is_identity_pattern() const { return x.none() && z.none(); }

  // Hermitian operators square to +I; only these can be measured or serve as
  // stabilizer generators.
  bool is_hermitian() const {
    return (phase & 1) == (BitVec::and_popcount(x, z) & 1);
  }

  // For a Hermitian operator, 0 for +P and 1 for -P where P is the
  // positive-phase representative with the same bit pattern.
  bool sign_bit() const {
    return (((phase + 4 - (BitVec::and_popcount(x, z) & 3)) & 3) >> 1) & 1;
  }

  bool commutes(const PauliOp& o) const {
    return !(BitVec::and_parity(x, o.z) ^ BitVec::and_parity(z, o.x));
  }

  // In-place product this <- this * o (this applied after o as matrices,
  // i.e. ordinary matrix product with this on the left).
  void mul_inplace(const PauliOp& o) {
    // Moving o's X block left across this's Z block flips a sign per
    // overlapping qubit: Z X = -X Z.
    phase = static_cast<std::uint8_t>(
        (phase + o.phase + 2 * (BitVec::and_parity(z, o.x) ? 1 : 0)) & 3);
    x.xor_with(o.x);
    z.xor_with(o.z);
  }

  friend PauliOp operator*(PauliOp a, const PauliOp& b) {
    a.mul_inplace(b);
    return a;
  }

  bool operator==(const PauliOp& o) const {
    return phase == o.phase && x == o.x && z == o.z;
  }
  bool operator!=(const PauliOp& o) const { return !(*this == o); }

  // Concatenated (x | z) bits, the symplectic coordinates of the operator.
  BitVec symplectic_row() const;

  // Renders as sign prefix followed by one letter per qubit, qubit 0 first,
  // e.g. "+XIZY" or "-i" ... ; parse() accepts the same format.
  std::string to_string() const;

  // Parses strings like "+XIZY", "-ZZ", "+iXY", "YI". Throws
  // std::invalid_argument on malformed input.
  static PauliOp parse(const std::string& s);
};

// Conjugation of a Pauli by a single Clifford gate: p <- G p G^dagger.
// These update the operator in place and are the primitive the tableau
// machinery is built from.
void conj_h(PauliOp& p, std::size_t q);
void conj_s(PauliOp& p, std::size_t q);
void conj_x(PauliOp& p, std::size_t q);
void conj_z(PauliOp& p, std::size_t q);
void conj_cx(PauliOp& p, std::size_t c, std::size_t t);
void conj_cz(PauliOp& p, std::size_t a, std::size_t b);

}  // namespace stablearn

#endif  // STABLEARN_PAULI_HPP_
