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

#ifndef STABLEARN_GATES_HPP_
#define STABLEARN_GATES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace stablearn {

class Rng;

enum class GateKind { kH, kS, kCnot, kX, kZ, kT, kRz };

// True for T and RZ: the gates that leave the Clifford group.
inline bool is_non_clifford(GateKind k) {
  return k == GateKind::kT || k == GateKind::kRz;
}

struct Gate {
  GateKind kind;
  std::size_t q0 = 0;
  std::size_t q1 = 0;   // CNOT target; unused otherwise
  double theta = 0.0;   // RZ angle; T is RZ with theta = pi/4

  static Gate h(std::size_t q) { return {GateKind::kH, q, 0, 0.0}; }
  static Gate s(std::size_t q) { return {GateKind::kS, q, 0, 0.0}; }
  static Gate x(std::size_t q) { return {GateKind::kX, q, 0, 0.0}; }
  static Gate z(std::size_t q) { return {GateKind::kZ, q, 0, 0.0}; }
  static Gate t(std::size_t q) { return {GateKind::kT, q, 0, 0.0}; }
  static Gate cnot(std::size_t c, std::size_t t) { return {GateKind::kCnot, c, t, 0.0}; }
  static Gate rz(std::size_t q, double theta) { return {GateKind::kRz, q, 0, theta}; }

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && theta == o.theta;
  }
};

struct CircuitParseError : std::runtime_error {
  CircuitParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  std::size_t line_number;
};

// A gate list over a fixed register. The text form is one gate per line
// ("H 3", "CNOT 0 5", "RZ 4 0.7853981633974483"), with '#' comments and
// blank lines ignored. Qubits are 0-indexed.
struct Circuit {
  std::size_t num_qubits = 0;
  std::vector<Gate> gates;

  std::size_t doped_count() const {
    std::size_t c = 0;
    for (const Gate& g : gates) {
      if (is_non_clifford(g.kind)) ++c;
    }
    return c;
  }

  std::string to_text() const;

  // Parses the text form. When n_hint is 0 the register size is one more
  // than the highest qubit index mentioned; otherwise n_hint is used and
  // indices must stay below it.
  static Circuit parse_text(const std::string& text, std::size_t n_hint = 0);
};

// If theta is a multiple of pi/2 (within 1e-12 relative to the grid), the
// rotation exp(-i theta Z/2) is Clifford: returns the matching S power in
// 0..3. Returns -1 for genuinely non-Clifford angles.
int clifford_s_power(double theta);

// Uniform random Clifford circuit: `length` gates, each drawn uniformly from
// {H, S, CNOT} with uniform qubit choices (CNOT control != target).
Circuit random_clifford_circuit(std::size_t n, std::size_t length, Rng& rng);

// Random circuit of `length` gates of which exactly `t` are T gates, placed
// at positions drawn uniformly without replacement; the rest are Clifford as
// above. Requires t <= length and n >= 2 when length > 0.
Circuit random_doped_circuit(std::size_t n, std::size_t length, std::size_t t,
                             Rng& rng);

}  // namespace stablearn

#endif  // STABLEARN_GATES_HPP_
