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

#include "stablearn/tableau.hpp"

#include <cmath>
#include <stdexcept>

namespace stablearn {

CliffordTableau CliffordTableau::identity(std::size_t n) {
  CliffordTableau t;
  t.n_ = n;
  t.xr_.reserve(n);
  t.zr_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    t.xr_.push_back(PauliOp::single_x(n, q));
    t.zr_.push_back(PauliOp::single_z(n, q));
  }
  return t;
}

CliffordTableau CliffordTableau::from_gates(std::size_t n,
                                            const std::vector<Gate>& gates) {
  CliffordTableau t = identity(n);
  for (const Gate& g : gates) t.left_mul_gate(g);
  return t;
}

PauliOp CliffordTableau::conjugate(const PauliOp& g) const {
  if (g.num_qubits() != n_) throw std::invalid_argument("conjugate: size mismatch");
  PauliOp acc(n_);
  acc.phase = g.phase;
  for (std::size_t j = 0; j < n_; ++j) {
    if (g.x.get(j)) acc.mul_inplace(xr_[j]);
    if (g.z.get(j)) acc.mul_inplace(zr_[j]);
  }
  return acc;
}

void CliffordTableau::left_h(std::size_t q) {
  for (PauliOp& p : xr_) conj_h(p, q);
  for (PauliOp& p : zr_) conj_h(p, q);
}
void CliffordTableau::left_s(std::size_t q) {
  for (PauliOp& p : xr_) conj_s(p, q);
  for (PauliOp& p : zr_) conj_s(p, q);
}
void CliffordTableau::left_x(std::size_t q) {
  for (PauliOp& p : xr_) conj_x(p, q);
  for (PauliOp& p : zr_) conj_x(p, q);
}
void CliffordTableau::left_z(std::size_t q) {
  for (PauliOp& p : xr_) conj_z(p, q);
  for (PauliOp& p : zr_) conj_z(p, q);
}
void CliffordTableau::left_cx(std::size_t c, std::size_t t) {
  for (PauliOp& p : xr_) conj_cx(p, c, t);
  for (PauliOp& p : zr_) conj_cx(p, c, t);
}
void CliffordTableau::left_cz(std::size_t a, std::size_t b) {
  for (PauliOp& p : xr_) conj_cz(p, a, b);
  for (PauliOp& p : zr_) conj_cz(p, a, b);
}

void CliffordTableau::left_mul_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::kH:
      left_h(g.q0);
      return;
    case GateKind::kS:
      left_s(g.q0);
      return;
    case GateKind::kX:
      left_x(g.q0);
      return;
    case GateKind::kZ:
      left_z(g.q0);
      return;
    case GateKind::kCnot:
      left_cx(g.q0, g.q1);
      return;
    case GateKind::kT:
      throw std::logic_error("T gate is not Clifford");
    case GateKind::kRz: {
      const int k = clifford_s_power(g.theta);
      if (k < 0) throw std::logic_error("RZ angle is not Clifford");
      for (int i = 0; i < k; ++i) left_s(g.q0);
      return;
    }
  }
}

void CliffordTableau::right_mul_gate_inverse(const Gate& g) {
  // New rows follow from G^dagger B G for each basis Pauli B, pushed
  // through the old tableau; only rows of the touched qubits change.
  switch (g.kind) {
    case GateKind::kH:
      std::swap(xr_[g.q0], zr_[g.q0]);
      return;
    case GateKind::kS:
      // S^dagger X S = -i X Z
      xr_[g.q0].mul_inplace(zr_[g.q0]);
      xr_[g.q0].phase = static_cast<std::uint8_t>((xr_[g.q0].phase + 3) & 3);
      return;
    case GateKind::kX:
      zr_[g.q0].phase = static_cast<std::uint8_t>((zr_[g.q0].phase + 2) & 3);
      return;
    case GateKind::kZ:
      xr_[g.q0].phase = static_cast<std::uint8_t>((xr_[g.q0].phase + 2) & 3);
      return;
    case GateKind::kCnot:
      xr_[g.q0].mul_inplace(xr_[g.q1]);
      zr_[g.q1].mul_inplace(zr_[g.q0]);
      return;
    case GateKind::kT:
      throw std::logic_error("T gate is not Clifford");
    case GateKind::kRz: {
      const int k = clifford_s_power(g.theta);
      if (k < 0) throw std::logic_error("RZ angle is not Clifford");
      for (int i = 0; i < k; ++i) right_mul_gate_inverse(Gate::s(g.q0));
      return;
    }
  }
}

CliffordTableau CliffordTableau::inverse() const {
  // Bit pattern of the inverse is the symplectic transpose; each row's sign
  // is then pinned by conjugating the candidate back through this tableau.
  CliffordTableau inv;
  inv.n_ = n_;
  inv.xr_.assign(n_, PauliOp(n_));
  inv.zr_.assign(n_, PauliOp(n_));
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t u = 0; u < n_; ++u) {
      if (zr_[u].z.get(j)) inv.xr_[j].x.set(u, true);
      if (xr_[u].z.get(j)) inv.xr_[j].z.set(u, true);
      if (zr_[u].x.get(j)) inv.zr_[j].x.set(u, true);
      if (xr_[u].x.get(j)) inv.zr_[j].z.set(u, true);
    }
  }
  for (std::size_t j = 0; j < n_; ++j) {
    for (PauliOp* row : {&inv.xr_[j], &inv.zr_[j]}) {
      row->phase = static_cast<std::uint8_t>(BitVec::and_popcount(row->x, row->z) & 3);
      const PauliOp back = conjugate(*row);
      if (back.sign_bit()) row->phase = static_cast<std::uint8_t>((row->phase + 2) & 3);
    }
  }
  return inv;
}

CliffordTableau CliffordTableau::compose(const CliffordTableau& a,
                                         const CliffordTableau& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("compose: size mismatch");
  CliffordTableau c;
  c.n_ = a.n_;
  c.xr_.reserve(a.n_);
  c.zr_.reserve(a.n_);
  for (std::size_t j = 0; j < a.n_; ++j) {
    c.xr_.push_back(a.conjugate(b.xr_[j]));
    c.zr_.push_back(a.conjugate(b.zr_[j]));
  }
  return c;
}

bool CliffordTableau::is_valid() const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (!xr_[j].is_hermitian() || !zr_[j].is_hermitian()) return false;
    if (xr_[j].commutes(zr_[j])) return false;
    for (std::size_t k = j + 1; k < n_; ++k) {
      if (!xr_[j].commutes(xr_[k]) || !xr_[j].commutes(zr_[k]) ||
          !zr_[j].commutes(xr_[k]) || !zr_[j].commutes(zr_[k])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Gate> CliffordTableau::to_gates() const {
  CliffordTableau w = *this;
  std::vector<Gate> applied;  // gates left-multiplied onto w, in order

  auto put = [&](const Gate& g) {
    w.left_mul_gate(g);
    applied.push_back(g);
  };
  auto put_cz = [&](std::size_t a, std::size_t b) {
    // CZ(a,b) = H(b) CNOT(a,b) H(b); the triple is its own mirror image.
    put(Gate::h(b));
    put(Gate::cnot(a, b));
    put(Gate::h(b));
  };
  auto put_swap = [&](std::size_t a, std::size_t b) {
    put(Gate::cnot(a, b));
    put(Gate::cnot(b, a));
    put(Gate::cnot(a, b));
  };
  // Reduces row (either image of qubit j) to +/-X_j given x_j is set,
  // using only gates that fix Z_j.
  auto sweep_row_to_xj = [&](const PauliOp& (CliffordTableau::*get)(std::size_t) const,
                             std::size_t j) {
    for (std::size_t u = j + 1; u < n_; ++u) {
      if ((w.*get)(j).x.get(u)) put(Gate::cnot(j, u));
    }
    for (std::size_t u = j + 1; u < n_; ++u) {
      if ((w.*get)(j).z.get(u)) put_cz(j, u);
    }
    if ((w.*get)(j).z.get(j)) put(Gate::s(j));
  };

  for (std::size_t j = 0; j < n_; ++j) {
    // Rows j have no support below j once earlier pivots are settled, since
    // they commute with every X_i, Z_i for i < j.
    if (!w.x_image(j).x.get(j)) {
      std::size_t u = j;
      bool found_x = false;
      for (std::size_t v = j + 1; v < n_; ++v) {
        if (w.x_image(j).x.get(v)) {
          u = v;
          found_x = true;
          break;
        }
      }
      if (found_x) {
        put_swap(j, u);
      } else {
        const std::ptrdiff_t zpos = w.x_image(j).z.first_set();
        if (zpos < 0 || static_cast<std::size_t>(zpos) < j) {
          throw std::logic_error("to_gates: malformed tableau row");
        }
        u = static_cast<std::size_t>(zpos);
        put(Gate::h(u));
        if (u != j) put_swap(j, u);
      }
    }
    sweep_row_to_xj(&CliffordTableau::x_image, j);

    put(Gate::h(j));  // park the X image as +/-Z_j

    // The Z image anticommutes with the parked +/-Z_j, so x_j is set.
    if (!w.z_image(j).x.get(j)) throw std::logic_error("to_gates: lost anticommutation");
    sweep_row_to_xj(&CliffordTableau::z_image, j);

    put(Gate::h(j));

    if (w.x_image(j).sign_bit()) put(Gate::z(j));
    if (w.z_image(j).sign_bit()) put(Gate::x(j));
  }

  // applied_m ... applied_1 U = I, so U read as a circuit is the reversed
  // list with each gate inverted; only S is not an involution.
  std::vector<Gate> circuit;
  circuit.reserve(applied.size() + 2 * n_);
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    if (it->kind == GateKind::kS) {
      circuit.push_back(Gate::s(it->q0));
      circuit.push_back(Gate::s(it->q0));
      circuit.push_back(Gate::s(it->q0));
    } else {
      circuit.push_back(*it);
    }
  }
  return circuit;
}

}  // namespace stablearn
