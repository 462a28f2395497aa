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

#include "stablearn/encoding.hpp"

#include <stdexcept>

namespace stablearn {

// Strategy: conjugate the generator list by elementary gates until generator
// j reads exactly +Z_j, accumulating the gates. The accumulated product W
// then satisfies W g_j W^dagger = Z_j, so V = W^dagger, obtained by
// reversing and inverting the gate list.
EncodingCircuit encoding_circuit(const StabilizerGroup& s) {
  const std::size_t n = s.num_qubits();
  const std::size_t r = s.rank();
  std::vector<PauliOp> gens = s.generators();
  std::vector<Gate> applied;

  auto put = [&](const Gate& g) {
    for (PauliOp& p : gens) {
      switch (g.kind) {
        case GateKind::kH: conj_h(p, g.q0); break;
        case GateKind::kS: conj_s(p, g.q0); break;
        case GateKind::kX: conj_x(p, g.q0); break;
        case GateKind::kZ: conj_z(p, g.q0); break;
        case GateKind::kCnot: conj_cx(p, g.q0, g.q1); break;
        default: throw std::logic_error("non-Clifford gate in encoding sweep");
      }
    }
    applied.push_back(g);
  };
  auto put_cz = [&](std::size_t a, std::size_t b) {
    put(Gate::h(b));
    put(Gate::cnot(a, b));
    put(Gate::h(b));
  };
  auto put_swap = [&](std::size_t a, std::size_t b) {
    put(Gate::cnot(a, b));
    put(Gate::cnot(b, a));
    put(Gate::cnot(a, b));
  };

  for (std::size_t j = 0; j < r; ++j) {
    // Generator j commutes with the settled +Z_i (i < j), so its x-part
    // vanishes below j; z-part residue below j is cleared at the end.
    PauliOp& p = gens[j];

    std::size_t x_pivot = n;
    for (std::size_t u = j; u < n; ++u) {
      if (p.x.get(u)) {
        x_pivot = u;
        break;
      }
    }
    if (x_pivot < n) {
      const std::size_t u0 = x_pivot;
      for (std::size_t u = u0 + 1; u < n; ++u) {
        if (p.x.get(u)) put(Gate::cnot(u0, u));
      }
      for (std::size_t u = j; u < n; ++u) {
        if (u != u0 && p.z.get(u)) put_cz(u0, u);
      }
      if (p.z.get(u0)) put(Gate::s(u0));
      put(Gate::h(u0));
      if (u0 != j) put_swap(j, u0);
    } else {
      std::size_t z_pivot = n;
      for (std::size_t u = j; u < n; ++u) {
        if (p.z.get(u)) {
          z_pivot = u;
          break;
        }
      }
      if (z_pivot == n) throw std::invalid_argument("dependent generators in encoding");
      for (std::size_t u = z_pivot + 1; u < n; ++u) {
        if (p.z.get(u)) put(Gate::cnot(u, z_pivot));
      }
      if (z_pivot != j) put_swap(j, z_pivot);
    }
    // Now p = (sign) Z_j times Z factors strictly below j.
    for (std::size_t i = 0; i < j; ++i) {
      if (p.z.get(i)) put(Gate::cnot(i, j));
    }
    if (p.sign_bit()) put(Gate::x(j));
    if (!(p == PauliOp::single_z(n, j))) {
      throw std::logic_error("encoding sweep failed to normalize a generator");
    }
  }

  EncodingCircuit out;
  out.gates.reserve(applied.size() + 2 * n);
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    if (it->kind == GateKind::kS) {
      out.gates.push_back(Gate::s(it->q0));
      out.gates.push_back(Gate::s(it->q0));
      out.gates.push_back(Gate::s(it->q0));
    } else {
      out.gates.push_back(*it);
    }
  }
  out.tableau = CliffordTableau::from_gates(n, out.gates);
  return out;
}

}  // namespace stablearn
