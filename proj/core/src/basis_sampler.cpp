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

#include "stablearn/basis_sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stablearn/dense_state.hpp"
#include "stablearn/gf2.hpp"
#include "stablearn/hybrid_state.hpp"

namespace stablearn {

namespace {

// Ordered product of the images selected by a. Because the images commute
// pairwise and square to the identity, this map is a group homomorphism from
// index combinations to operators, so outcome bits add over it exactly.
PauliOp combine(const std::vector<PauliOp>& imgs, const BitVec& a,
                std::size_t num_qubits) {
  PauliOp g = PauliOp::identity(num_qubits);
  for (std::size_t i = 0; i < imgs.size(); ++i) {
    if (a.get(i)) g.mul_inplace(imgs[i]);
  }
  return g;
}

}  // namespace

BasisSampler::BasisSampler(const HybridState& state,
                           const std::vector<PauliOp>& gens)
    : state_(state), num_ops_(gens.size()) {
  const std::size_t n = state.num_qubits();
  const std::size_t m = gens.size();

  std::vector<PauliOp> imgs;
  imgs.reserve(m);
  for (const PauliOp& g : gens) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("basis operator size mismatch");
    }
    if (!g.is_hermitian()) {
      throw std::invalid_argument("basis operator is not Hermitian");
    }
    imgs.push_back(state.u_.conjugate(g));
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!imgs[i].commutes(imgs[j])) {
        throw std::invalid_argument("basis operators must commute pairwise");
      }
    }
  }

  // Combinations with no X on any frozen qubit. Everything outside their
  // span picks up a uniform sign against |0...0>, so only this subgroup
  // carries outcome structure.
  std::vector<std::size_t> frozen_qubits;
  for (std::size_t q = 0; q < n; ++q) {
    if (state.is_frozen(q)) frozen_qubits.push_back(q);
  }
  BitMatrix frozen_x(frozen_qubits.size(), m);
  for (std::size_t r = 0; r < frozen_qubits.size(); ++r) {
    const std::size_t q = frozen_qubits[r];
    for (std::size_t i = 0; i < m; ++i) {
      if (imgs[i].x.get(q)) frozen_x.set(r, i, true);
    }
  }
  const std::vector<BitVec> kbasis = nullspace(frozen_x);
  const std::size_t d = kbasis.size();

  std::vector<PauliOp> kelems;
  kelems.reserve(d);
  for (const BitVec& a : kbasis) kelems.push_back(combine(imgs, a, n));

  // Split the subgroup by its action on the dense factor. Elements acting
  // as a scalar there have deterministic outcomes; a transversal of the
  // rest must be measured.
  const std::size_t k = state.dense_count();
  BitMatrix dense_bits(2 * k, d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t li = 0; li < k; ++li) {
      const std::size_t q = state.dense_order()[li];
      if (kelems[l].x.get(q)) dense_bits.set(li, l, true);
      if (kelems[l].z.get(q)) dense_bits.set(k + li, l, true);
    }
  }
  const std::vector<BitVec> scalar_coords = nullspace(dense_bits);
  const RrefResult dense_rref = rref(dense_bits);

  std::vector<BitVec> avecs;
  avecs.reserve(d);
  num_fixed_ = scalar_coords.size();
  outcome_base_ = BitVec(d);
  for (std::size_t s = 0; s < scalar_coords.size(); ++s) {
    BitVec a(m);
    for (std::size_t l = 0; l < d; ++l) {
      if (scalar_coords[s].get(l)) a.xor_with(kbasis[l]);
    }
    // x vanishes everywhere and z survives only on frozen qubits, where it
    // acts as +1 on |0>, so the outcome is the overall sign.
    const PauliOp e = combine(imgs, a, n);
    if (e.sign_bit()) outcome_base_.set(s, true);
    avecs.push_back(a);
  }
  for (const std::size_t pc : dense_rref.pivot_cols) {
    quotient_ops_.push_back(state.dense_restriction(kelems[pc]));
    avecs.push_back(kbasis[pc]);
  }

  // Solve system: outcome row b of the original operators satisfies
  // b . avecs[s] = constrained outcome bit s. The rows are a basis of the
  // constrained subgroup, so elimination with an identity tail yields an
  // exact row transform and one pivot column per row.
  std::vector<BitVec> aug;
  aug.reserve(d);
  for (std::size_t s = 0; s < d; ++s) {
    BitVec row(m + d);
    for (std::size_t i = 0; i < m; ++i) {
      if (avecs[s].get(i)) row.set(i, true);
    }
    row.set(m + s, true);
    aug.push_back(std::move(row));
  }
  std::size_t done = 0;
  for (std::size_t col = 0; col < m && done < d; ++col) {
    std::size_t piv = done;
    while (piv < d && !aug[piv].get(col)) ++piv;
    if (piv == d) continue;
    std::swap(aug[done], aug[piv]);
    for (std::size_t s = 0; s < d; ++s) {
      if (s != done && aug[s].get(col)) aug[s].xor_with(aug[done]);
    }
    solution_cols_.push_back(col);
    ++done;
  }
  if (done != d) {
    throw std::logic_error("constrained combination basis is dependent");
  }
  solve_rows_.reserve(d);
  for (std::size_t s = 0; s < d; ++s) {
    BitVec e(d);
    for (std::size_t j = 0; j < d; ++j) {
      if (aug[s].get(m + j)) e.set(j, true);
    }
    solve_rows_.push_back(std::move(e));
  }

  BitMatrix asys(d, m);
  for (std::size_t s = 0; s < d; ++s) asys.row(s) = avecs[s];
  free_basis_ = nullspace(asys);
}

BitVec BasisSampler::sample_row(Rng& rng) {
  BitVec c = outcome_base_;

  if (!quotient_ops_.empty()) {
    phi_scratch_ = state_.phi();
    for (std::size_t l = 0; l < quotient_ops_.size(); ++l) {
      pauli_scratch_ = phi_scratch_;
      apply_pauli_inplace(pauli_scratch_, quotient_ops_[l]);
      double e = 0.0;
      for (std::size_t i = 0; i < phi_scratch_.size(); ++i) {
        e += (std::conj(phi_scratch_[i]) * pauli_scratch_[i]).real();
      }
      const double p0 = std::min(1.0, std::max(0.0, (1.0 + e) / 2.0));
      const bool bit = !(rng.next_double() < p0);
      const double sign = bit ? -1.0 : 1.0;
      double norm2 = 0.0;
      for (std::size_t i = 0; i < phi_scratch_.size(); ++i) {
        phi_scratch_[i] = (phi_scratch_[i] + sign * pauli_scratch_[i]) * 0.5;
        norm2 += std::norm(phi_scratch_[i]);
      }
      const double inv = 1.0 / std::sqrt(norm2);
      for (auto& a : phi_scratch_) a *= inv;
      if (bit) c.set(num_fixed_ + l, true);
    }
  }

  BitVec b(num_ops_);
  for (std::size_t s = 0; s < solve_rows_.size(); ++s) {
    if (BitVec::and_parity(solve_rows_[s], c)) b.set(solution_cols_[s], true);
  }
  for (const BitVec& f : free_basis_) {
    if (rng.next_bit()) b.xor_with(f);
  }
  return b;
}

}  // namespace stablearn
