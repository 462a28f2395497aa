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

#include "stablearn/hybrid_state.hpp"

#include <cmath>

namespace stablearn {

HybridState::HybridState(std::size_t n, std::size_t dense_cap)
    : n_(n),
      dense_cap_(dense_cap),
      u_(CliffordTableau::identity(n)),
      frozen_(n, true),
      phi_(1, 1.0) {}

HybridState HybridState::prepare(const Circuit& c, std::size_t dense_cap) {
  HybridState s(c.num_qubits, dense_cap);
  s.apply_circuit(c);
  return s;
}

void HybridState::apply_circuit(const Circuit& c) {
  if (c.num_qubits > n_) throw std::invalid_argument("circuit wider than state");
  for (const Gate& g : c.gates) apply_gate(g);
}

void HybridState::apply_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::kT:
      apply_z_rotation(g.q0, 0.7853981633974483);
      return;
    case GateKind::kRz:
      apply_z_rotation(g.q0, g.theta);
      return;
    default:
      // Physical gate G turns V into G V, i.e. U into U G^dagger.
      u_.right_mul_gate_inverse(g);
      return;
  }
}

PauliOp HybridState::dense_restriction(const PauliOp& p) const {
  PauliOp q(dense_order_.size());
  q.phase = p.phase;
  for (std::size_t l = 0; l < dense_order_.size(); ++l) {
    const std::size_t j = dense_order_[l];
    if (p.x.get(j)) q.x.set(l, true);
    if (p.z.get(j)) q.z.set(l, true);
  }
  return q;
}

std::size_t HybridState::frozen_x_pivot(const PauliOp& p) const {
  for (std::size_t j = 0; j < n_; ++j) {
    if (frozen_[j] && p.x.get(j)) return j;
  }
  return n_;
}

void HybridState::sweep_to_x(PauliOp& p, std::size_t j) {
  // All gates here act as the identity on |0>_j (x) anything: CNOT and CZ
  // are controlled on the frozen qubit j and S(j) is diagonal, so the
  // decomposition V(|0^r> (x) phi) survives absorbing them into the frame.
  for (std::size_t u = 0; u < n_; ++u) {
    if (u != j && p.x.get(u)) {
      conj_cx(p, j, u);
      u_.left_cx(j, u);
    }
  }
  for (std::size_t u = 0; u < n_; ++u) {
    if (u != j && p.z.get(u)) {
      conj_cz(p, j, u);
      u_.left_cz(j, u);
    }
  }
  if (p.z.get(j)) {
    conj_s(p, j);
    u_.left_s(j);
  }
}

void HybridState::apply_z_rotation(std::size_t q, double theta) {
  if (q >= n_) throw std::invalid_argument("rotation qubit out of range");
  const int spow = clifford_s_power(theta);
  if (spow >= 0) {
    for (int i = 0; i < spow; ++i) u_.right_mul_gate_inverse(Gate::s(q));
    return;
  }

  PauliOp p = u_.z_image(q);
  const double c = std::cos(theta / 2.0);
  const std::complex<double> ms(0.0, -std::sin(theta / 2.0));

  const std::size_t j = frozen_x_pivot(p);
  if (j < n_) {
    if (dense_order_.size() + 1 > dense_cap_) {
      throw CapacityError("dense register cap exceeded by rotation");
    }
    sweep_to_x(p, j);
    const double sigma = p.sign_bit() ? -1.0 : 1.0;
    // exp(-i theta/2 sigma X_j) splits |0>_j into cos|0> - i sigma sin |1>;
    // qubit j becomes the new top dense axis.
    frozen_[j] = false;
    dense_order_.push_back(j);
    const std::size_t half = phi_.size();
    phi_.resize(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      phi_[half + i] = sigma * ms * phi_[i];
      phi_[i] *= c;
    }
    return;
  }

  // Frozen part is diagonal: the rotation acts on phi alone.
  const PauliOp qop = dense_restriction(p);
  scratch_ = phi_;
  apply_pauli_inplace(scratch_, qop);
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    phi_[i] = c * phi_[i] + ms * scratch_[i];
  }
}

bool HybridState::measure_pauli(const PauliOp& g, Rng& rng) {
  if (g.num_qubits() != n_) throw std::invalid_argument("measurement size mismatch");
  if (!g.is_hermitian()) throw std::invalid_argument("measuring non-Hermitian operator");

  PauliOp p = u_.conjugate(g);
  const std::size_t j = frozen_x_pivot(p);
  if (j < n_) {
    // p anticommutes with the stabilizer Z_j of the frozen register: a fair
    // coin. Collapse replaces |0>_j by |+>_j or |->_j, absorbed as H (and X
    // for the minus branch) into the frame; r is unchanged.
    sweep_to_x(p, j);
    const bool m = rng.next_bit();
    const bool minus_branch = m ^ p.sign_bit();
    u_.left_h(j);
    if (minus_branch) u_.left_x(j);
    return m;
  }

  const PauliOp qop = dense_restriction(p);
  if (!qop.is_hermitian()) throw std::logic_error("dense restriction lost Hermiticity");
  scratch_ = phi_;
  apply_pauli_inplace(scratch_, qop);
  double e = 0.0;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    e += (std::conj(phi_[i]) * scratch_[i]).real();
  }
  const double p0 = std::min(1.0, std::max(0.0, (1.0 + e) / 2.0));
  const bool m = !(rng.next_double() < p0);
  const double sign = m ? -1.0 : 1.0;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < phi_.size(); ++i) {
    phi_[i] = (phi_[i] + sign * scratch_[i]) * 0.5;
    norm2 += std::norm(phi_[i]);
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : phi_) a *= inv;
  return m;
}

BitVec HybridState::measure_group_basis(const StabilizerGroup& t, Rng& rng) {
  BitVec out(t.rank());
  for (std::size_t i = 0; i < t.rank(); ++i) {
    if (measure_pauli(t.generator(i), rng)) out.set(i, true);
  }
  return out;
}

HybridState::Residual HybridState::residual_extract() const {
  Residual r;
  r.v = u_.inverse();
  r.r = frozen_count();
  for (std::size_t q = 0; q < n_; ++q) {
    if (frozen_[q]) r.frozen.push_back(q);
  }
  r.dense_order = dense_order_;
  r.phi = phi_;
  return r;
}

DenseState HybridState::to_dense(std::size_t cap) const {
  if (n_ > cap) throw std::invalid_argument("hybrid state exceeds dense cap");
  std::vector<std::complex<double>> full(std::size_t{1} << n_, 0.0);
  for (std::size_t d = 0; d < phi_.size(); ++d) {
    std::size_t idx = 0;
    for (std::size_t l = 0; l < dense_order_.size(); ++l) {
      if ((d >> l) & 1) idx |= std::size_t{1} << dense_order_[l];
    }
    full[idx] = phi_[d];
  }
  DenseState s = DenseState::from_amplitudes(n_, std::move(full), cap);
  const std::vector<Gate> v_gates = u_.inverse().to_gates();
  for (const Gate& g : v_gates) s.apply_gate(g);
  return s;
}

}  // namespace stablearn
