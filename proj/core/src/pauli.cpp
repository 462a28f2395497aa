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

#include "stablearn/pauli.hpp"

#include <stdexcept>

namespace stablearn {

PauliOp PauliOp::single_x(std::size_t n, std::size_t q) {
  PauliOp p(n);
  p.x.set(q, true);
  return p;
}

PauliOp PauliOp::single_y(std::size_t n, std::size_t q) {
  PauliOp p(n);
  p.x.set(q, true);
  p.z.set(q, true);
  p.phase = 1;  // Y = i X Z
  return p;
}

PauliOp PauliOp::single_z(std::size_t n, std::size_t q) {
  PauliOp p(n);
  p.z.set(q, true);
  return p;
}

PauliOp PauliOp::from_bits(const BitVec& x, const BitVec& z, bool sign_bit) {
  PauliOp p;
  p.x = x;
  p.z = z;
  p.phase = static_cast<std::uint8_t>(
      (BitVec::and_popcount(p.x, p.z) + (sign_bit ? 2 : 0)) & 3);
  return p;
}

BitVec PauliOp::symplectic_row() const {
  const std::size_t n = num_qubits();
  BitVec v(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x.get(i)) v.set(i, true);
    if (z.get(i)) v.set(n + i, true);
  }
  return v;
}

std::string PauliOp::to_string() const {
  const std::size_t n = num_qubits();
  // Split the phase into the i factors absorbed by writing Y and a leading
  // sign or imaginary unit.
  const int residual = (phase + 4 - (BitVec::and_popcount(x, z) & 3)) & 3;
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string s = kPrefix[residual];
  for (std::size_t i = 0; i < n; ++i) {
    const bool xi = x.get(i);
    const bool zi = z.get(i);
    s += xi ? (zi ? 'Y' : 'X') : (zi ? 'Z' : 'I');
  }
  return s;
}

PauliOp PauliOp::parse(const std::string& s) {
  std::size_t pos = 0;
  int residual = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    residual = (s[pos] == '-') ? 2 : 0;
    ++pos;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'I')) {
      // "+i"/"-i" only when followed by at least one Pauli letter; a lone
      // trailing I after a sign is the identity qubit letter.
      bool rest_has_letter = pos + 1 < s.size();
      if (s[pos] == 'i' && rest_has_letter) {
        residual += 1;
        ++pos;
      } else if (s[pos] == 'i' && !rest_has_letter) {
        throw std::invalid_argument("Pauli string has imaginary prefix but no letters");
      }
    }
  }
  const std::size_t n = s.size() - pos;
  if (n == 0) throw std::invalid_argument("Pauli string has no letters");
  PauliOp p(n);
  int y_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    switch (s[pos + i]) {
      case 'I':
        break;
      case 'X':
        p.x.set(i, true);
        break;
      case 'Y':
        p.x.set(i, true);
        p.z.set(i, true);
        ++y_count;
        break;
      case 'Z':
        p.z.set(i, true);
        break;
      default:
        throw std::invalid_argument(std::string("bad Pauli letter '") +
                                    s[pos + i] + "' at position " +
                                    std::to_string(pos + i));
    }
  }
  p.phase = static_cast<std::uint8_t>((y_count + residual) & 3);
  return p;
}

void conj_h(PauliOp& p, std::size_t q) {
  const bool xq = p.x.get(q);
  const bool zq = p.z.get(q);
  if (xq && zq) p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
  p.x.set(q, zq);
  p.z.set(q, xq);
}

void conj_s(PauliOp& p, std::size_t q) {
  if (p.x.get(q)) {
    p.phase = static_cast<std::uint8_t>((p.phase + 1) & 3);
    p.z.flip(q);
  }
}

void conj_x(PauliOp& p, std::size_t q) {
  if (p.z.get(q)) p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
}

void conj_z(PauliOp& p, std::size_t q) {
  if (p.x.get(q)) p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
}

void conj_cx(PauliOp& p, std::size_t c, std::size_t t) {
  if (p.x.get(c)) p.x.flip(t);
  if (p.z.get(t)) p.z.flip(c);
}

void conj_cz(PauliOp& p, std::size_t a, std::size_t b) {
  if (p.x.get(a) && p.x.get(b)) {
    p.phase = static_cast<std::uint8_t>((p.phase + 2) & 3);
  }
  if (p.x.get(a)) p.z.flip(b);
  if (p.x.get(b)) p.z.flip(a);
}

}  // namespace stablearn
