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

#include "stablearn/dense_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace stablearn {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

std::size_t checked_dim(std::size_t n, std::size_t cap) {
  if (n > cap) throw std::invalid_argument("dense register exceeds cap");
  return std::size_t{1} << n;
}

}  // namespace

DenseState::DenseState(std::size_t n, std::size_t cap)
    : n_(n), amp_(checked_dim(n, cap), 0.0) {
  amp_[0] = 1.0;
}

DenseState DenseState::from_amplitudes(std::size_t n,
                                       std::vector<std::complex<double>> amps,
                                       std::size_t cap) {
  if (amps.size() != checked_dim(n, cap)) {
    throw std::invalid_argument("amplitude vector has wrong dimension");
  }
  DenseState s(n, cap);
  s.amp_ = std::move(amps);
  return s;
}

void DenseState::apply_gate(const Gate& g) {
  const std::size_t dim = amp_.size();
  const std::size_t b0 = std::size_t{1} << g.q0;
  switch (g.kind) {
    case GateKind::kH:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) continue;
        const auto a = amp_[i];
        const auto b = amp_[i | b0];
        amp_[i] = (a + b) * kInvSqrt2;
        amp_[i | b0] = (a - b) * kInvSqrt2;
      }
      return;
    case GateKind::kS:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) amp_[i] *= std::complex<double>(0.0, 1.0);
      }
      return;
    case GateKind::kX:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & b0)) std::swap(amp_[i], amp_[i | b0]);
      }
      return;
    case GateKind::kZ:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) amp_[i] = -amp_[i];
      }
      return;
    case GateKind::kCnot: {
      const std::size_t b1 = std::size_t{1} << g.q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & b0) && !(i & b1)) std::swap(amp_[i], amp_[i | b1]);
      }
      return;
    }
    case GateKind::kT: {
      const std::complex<double> w(kInvSqrt2, kInvSqrt2);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) amp_[i] *= w;
      }
      return;
    }
    case GateKind::kRz: {
      const std::complex<double> w(std::cos(g.theta), std::sin(g.theta));
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & b0) amp_[i] *= w;
      }
      return;
    }
  }
}

void DenseState::apply_circuit(const Circuit& c) {
  if (c.num_qubits > n_) throw std::invalid_argument("circuit wider than state");
  for (const Gate& g : c.gates) apply_gate(g);
}

void apply_pauli_inplace(std::vector<std::complex<double>>& amp, const PauliOp& p) {
  const std::size_t k = p.num_qubits();
  if (amp.size() != (std::size_t{1} << k)) {
    throw std::invalid_argument("apply_pauli dimension mismatch");
  }
  // Bit masks of the pattern; k <= 63 in any dense context.
  std::size_t xm = 0;
  std::size_t zm = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (p.x.get(j)) xm |= std::size_t{1} << j;
    if (p.z.get(j)) zm |= std::size_t{1} << j;
  }
  static const std::complex<double> kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> ip = kI[p.phase & 3];
  // (X^x Z^z)|b> = (-1)^{b.z} |b^x>, so amplitude at b moves to b^x with
  // coefficient i^phase (-1)^{parity(b & z)}.
  auto coeff = [&](std::size_t b) {
    return (std::popcount(b & zm) & 1) ? -ip : ip;
  };
  if (xm == 0) {
    for (std::size_t b = 0; b < amp.size(); ++b) amp[b] *= coeff(b);
    return;
  }
  const std::size_t low = xm & (~xm + 1);
  for (std::size_t b = 0; b < amp.size(); ++b) {
    if (b & low) continue;
    const std::size_t b2 = b ^ xm;
    const auto t = amp[b];
    amp[b] = coeff(b2) * amp[b2];
    amp[b2] = coeff(b) * t;
  }
}

void DenseState::apply_pauli(const PauliOp& p) {
  if (p.num_qubits() != n_) throw std::invalid_argument("pauli size mismatch");
  apply_pauli_inplace(amp_, p);
}

std::complex<double> DenseState::inner(const DenseState& o) const {
  if (n_ != o.n_) throw std::invalid_argument("inner: size mismatch");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) acc += std::conj(amp_[i]) * o.amp_[i];
  return acc;
}

double DenseState::pauli_expectation(const PauliOp& g) const {
  if (!g.is_hermitian()) throw std::invalid_argument("expectation of non-Hermitian operator");
  DenseState t = *this;
  t.apply_pauli(g);
  return inner(t).real();
}

bool DenseState::measure_pauli(const PauliOp& g, Rng& rng) {
  const double e = pauli_expectation(g);
  const double p0 = std::min(1.0, std::max(0.0, (1.0 + e) / 2.0));
  const bool outcome = !(rng.next_double() < p0);
  DenseState t = *this;
  t.apply_pauli(g);
  const double sign = outcome ? -1.0 : 1.0;
  for (std::size_t i = 0; i < amp_.size(); ++i) {
    amp_[i] = (amp_[i] + sign * t.amp_[i]) * 0.5;
  }
  normalize();
  return outcome;
}

void DenseState::normalize() {
  double norm2 = 0.0;
  for (const auto& a : amp_) norm2 += std::norm(a);
  if (norm2 <= 0.0) throw std::runtime_error("cannot normalize zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : amp_) a *= inv;
}

DenseState simulate_circuit(const Circuit& c, std::size_t cap) {
  DenseState s(c.num_qubits, cap);
  s.apply_circuit(c);
  return s;
}

double trace_distance_pure(const DenseState& a, const DenseState& b) {
  const double f = std::norm(a.inner(b));
  return std::sqrt(std::max(0.0, 1.0 - f));
}

double code_projection_weight(const DenseState& psi, const StabilizerGroup& s) {
  if (psi.num_qubits() != s.num_qubits()) {
    throw std::invalid_argument("distance_to_code size mismatch");
  }
  // Pi = prod (I + g_i)/2; the factors commute, so ||Pi psi||^2 works out
  // by chaining the individual projections.
  std::vector<std::complex<double>> cur(psi.amplitudes());
  std::vector<std::complex<double>> moved;
  for (const PauliOp& g : s.generators()) {
    moved = cur;
    apply_pauli_inplace(moved, g);
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = (cur[i] + moved[i]) * 0.5;
  }
  double w = 0.0;
  for (const auto& a : cur) w += std::norm(a);
  return w;
}

double distance_to_code(const DenseState& psi, const StabilizerGroup& s) {
  return std::sqrt(std::max(0.0, 1.0 - code_projection_weight(psi, s)));
}

}  // namespace stablearn
