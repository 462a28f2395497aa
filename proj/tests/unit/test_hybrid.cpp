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

#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "stablearn/basis_sampler.hpp"
#include "stablearn/dense_state.hpp"
#include "stablearn/gates.hpp"
#include "stablearn/hybrid_state.hpp"
#include "stablearn/random_group.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/stabilizer_group.hpp"
#include "stablearn/state_source.hpp"
#include "stablearn/tableau.hpp"
#include "test_support.hpp"

using namespace stablearn;
using testsup::cd;

namespace {

double overlap_mod(const DenseState& a, const DenseState& b) {
  return std::abs(a.inner(b));
}

// Exact joint outcome distribution of measuring commuting Hermitian gens on
// psi: P(b) = || prod_j (I + (-1)^{b_j} g_j)/2 psi ||^2, straight from the
// dense amplitudes.
std::vector<double> exact_joint(const DenseState& psi,
                                const std::vector<PauliOp>& gens) {
  const std::size_t m = gens.size();
  std::vector<double> probs(std::size_t{1} << m, 0.0);
  for (std::size_t b = 0; b < probs.size(); ++b) {
    std::vector<cd> cur = psi.amplitudes();
    std::vector<cd> moved;
    for (std::size_t j = 0; j < m; ++j) {
      moved = cur;
      apply_pauli_inplace(moved, gens[j]);
      const double sign = (b >> j) & 1 ? -1.0 : 1.0;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] = 0.5 * (cur[i] + sign * moved[i]);
      }
    }
    for (const cd& v : cur) probs[b] += std::norm(v);
  }
  return probs;
}

void check_histogram(const std::vector<double>& probs,
                     const std::vector<std::size_t>& counts, std::size_t shots) {
  for (std::size_t b = 0; b < probs.size(); ++b) {
    const double p = probs[b];
    const double phat = static_cast<double>(counts[b]) / static_cast<double>(shots);
    const double sigma = std::sqrt(std::max(p * (1.0 - p) / static_cast<double>(shots), 0.0));
    CHECK(std::abs(phat - p) <= 5.5 * sigma + 1e-9);
  }
}

}  // namespace

TEST_SUITE("hybrid") {

TEST_CASE("prepared states reproduce the dense oracle") {
  Rng rng(91);
  for (int iter = 0; iter < 40; ++iter) {
    const std::size_t n = 2 + rng.next_below(7);
    const std::size_t t = rng.next_below(4);
    Rng crng = rng.stream("circuit", iter);
    const Circuit c = random_doped_circuit(n, 10 * n, t, crng);
    const HybridState h = HybridState::prepare(c);
    CHECK(h.dense_count() <= t);
    CHECK(overlap_mod(h.to_dense(), simulate_circuit(c)) >= 1.0 - 1e-9);
  }
}

TEST_CASE("clifford circuits never touch the dense register") {
  Rng rng(92);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 2 + rng.next_below(7);
    Rng crng = rng.stream("circuit", iter);
    const Circuit c = random_clifford_circuit(n, 12 * n, crng);
    const HybridState h = HybridState::prepare(c);
    CHECK(h.dense_count() == 0);
    CHECK(h.frozen_count() == n);
    CHECK(overlap_mod(h.to_dense(), simulate_circuit(c)) >= 1.0 - 1e-9);
  }
}

TEST_CASE("pi/2 rotation multiples stay in the tableau") {
  const double pi = 3.141592653589793;
  Rng rng(93);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 3;
    Rng crng = rng.stream("circuit", iter);
    const Circuit c = random_clifford_circuit(n, 15, crng);
    HybridState h = HybridState::prepare(c);
    DenseState d = simulate_circuit(c);
    const std::size_t q = rng.next_below(n);
    const int k = 1 + static_cast<int>(rng.next_below(3));
    h.apply_z_rotation(q, k * pi / 2.0);
    d.apply_gate(Gate::rz(q, k * pi / 2.0));
    CHECK(h.dense_count() == 0);
    CHECK(overlap_mod(h.to_dense(), d) >= 1.0 - 1e-9);
  }
}

TEST_CASE("each generic rotation grows the dense register by at most one") {
  Rng rng(94);
  HybridState h(5, 4);
  DenseState d(5);
  std::size_t last = 0;
  for (int k = 0; k < 4; ++k) {
    const std::size_t q = rng.next_below(5);
    h.apply_gate(Gate::h(q));
    d.apply_gate(Gate::h(q));
    const double theta = 0.2 + 0.4 * k;
    h.apply_z_rotation(q, theta);
    d.apply_gate(Gate::rz(q, theta));
    CHECK(h.dense_count() <= last + 1);
    last = h.dense_count();
    CHECK(overlap_mod(h.to_dense(), d) >= 1.0 - 1e-9);
  }
  // A fresh |+> qubit is never an eigenstate of the rotated axis, so each
  // rotation below must claim a dense slot; the third exceeds cap 2.
  CHECK_THROWS_AS(
      [] {
        HybridState tight(5, 2);
        for (std::size_t q = 0; q < 3; ++q) {
          tight.apply_gate(Gate::h(q));
          tight.apply_z_rotation(q, 0.3);
        }
      }(),
      CapacityError);
}

TEST_CASE("measure_pauli collapse agrees with the dense oracle branch") {
  Rng rng(95);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t n = 2 + rng.next_below(5);
    const std::size_t t = rng.next_below(3);
    Rng crng = rng.stream("circuit", iter);
    const Circuit c = random_doped_circuit(n, 8 * n, t, crng);
    HybridState h = HybridState::prepare(c);
    const DenseState psi = simulate_circuit(c);
    const PauliOp p = testsup::random_hermitian_pauli(n, rng);

    const bool outcome = h.measure_pauli(p, rng);

    // Project the oracle onto the same branch.
    std::vector<cd> cur = psi.amplitudes();
    std::vector<cd> moved = cur;
    apply_pauli_inplace(moved, p);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] = 0.5 * (cur[i] + (outcome ? -moved[i] : moved[i]));
      norm2 += std::norm(cur[i]);
    }
    REQUIRE(norm2 > 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& v : cur) v *= inv;
    const DenseState want = DenseState::from_amplitudes(n, std::move(cur));
    CHECK(overlap_mod(h.to_dense(), want) >= 1.0 - 1e-9);

    // Immediate repetition is deterministic.
    CHECK(h.measure_pauli(p, rng) == outcome);
  }
}

TEST_CASE("measure_group_basis matches the exact joint distribution") {
  Rng rng(96);
  for (int cfg = 0; cfg < 2; ++cfg) {
    const std::size_t n = 4;
    Rng crng = rng.stream("circuit", cfg);
    const Circuit c = random_doped_circuit(n, 30, cfg, crng);
    const HybridState base = HybridState::prepare(c);
    Rng grng = rng.stream("group", cfg);
    const StabilizerGroup t = random_stabilizer_group(n, 3 + cfg % 2, grng);

    const std::vector<double> probs = exact_joint(simulate_circuit(c), t.generators());
    const std::size_t shots = 20000;
    std::vector<std::size_t> counts(probs.size(), 0);
    HybridState work;
    for (std::size_t s = 0; s < shots; ++s) {
      work = base;
      const BitVec row = work.measure_group_basis(t, rng);
      std::size_t idx = 0;
      for (std::size_t j = 0; j < t.rank(); ++j) idx |= std::size_t{row.get(j)} << j;
      ++counts[idx];
    }
    check_histogram(probs, counts, shots);
  }
}

TEST_CASE("basis sampler rows match the exact joint distribution") {
  Rng rng(97);
  for (int cfg = 0; cfg < 3; ++cfg) {
    const std::size_t n = 4 + cfg % 2;
    Rng crng = rng.stream("circuit", cfg);
    const Circuit c = random_doped_circuit(n, 30, cfg, crng);
    Rng grng = rng.stream("group", cfg);
    const StabilizerGroup t = random_stabilizer_group(n, n - cfg % 2, grng);

    const std::vector<double> probs = exact_joint(simulate_circuit(c), t.generators());
    HybridStateSource source(HybridState::prepare(c));
    const std::size_t shots = 20000;
    BitMatrix rows(0, t.rank());
    source.measure_copies_in_basis(t.generators(), shots, rng, rows);
    CHECK(source.copies_consumed() == shots);
    REQUIRE(rows.num_rows() == shots);

    std::vector<std::size_t> counts(probs.size(), 0);
    for (std::size_t s = 0; s < shots; ++s) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < t.rank(); ++j) idx |= std::size_t{rows.get(s, j)} << j;
      ++counts[idx];
    }
    check_histogram(probs, counts, shots);
  }
}

TEST_CASE("deterministic outcomes for the state's own stabilizers") {
  Rng rng(98);
  for (int iter = 0; iter < 10; ++iter) {
    const std::size_t n = 5;
    Rng crng = rng.stream("circuit", iter);
    const Circuit c = random_clifford_circuit(n, 10 * n, crng);
    const CliffordTableau v = CliffordTableau::from_gates(n, c.gates);
    std::vector<PauliOp> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(v.z_image(j));

    HybridStateSource source(HybridState::prepare(c));
    BitMatrix rows(0, n);
    source.measure_copies_in_basis(gens, 50, rng, rows);
    for (std::size_t s = 0; s < rows.num_rows(); ++s) {
      for (std::size_t j = 0; j < n; ++j) {
        // g (sign included) stabilizes the state with eigenvalue +1, so the
        // outcome bit is always 0.
        CHECK(rows.get(s, j) == false);
      }
    }
  }
}

TEST_CASE("residual_extract rebuilds the same state") {
  Rng rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = 2 + rng.next_below(5);
    const std::size_t t = rng.next_below(3);
    Rng crng = rng.stream("circuit", iter);
    const Circuit c = random_doped_circuit(n, 8 * n, t, crng);
    const HybridState h = HybridState::prepare(c);
    const HybridState::Residual res = h.residual_extract();

    CHECK(res.frozen.size() + res.dense_order.size() == n);
    CHECK(res.r == res.frozen.size());
    CHECK(res.phi.size() == (std::size_t{1} << res.dense_order.size()));

    // Place phi on its physical axes, frozen qubits at |0>, then run v.
    std::vector<cd> amps(std::size_t{1} << n, cd(0.0, 0.0));
    for (std::size_t d = 0; d < res.phi.size(); ++d) {
      std::size_t idx = 0;
      for (std::size_t l = 0; l < res.dense_order.size(); ++l) {
        idx |= ((d >> l) & 1) << res.dense_order[l];
      }
      amps[idx] = res.phi[d];
    }
    DenseState rebuilt = DenseState::from_amplitudes(n, std::move(amps));
    for (const Gate& g : res.v.to_gates()) rebuilt.apply_gate(g);
    CHECK(overlap_mod(rebuilt, h.to_dense()) >= 1.0 - 1e-9);
  }
}

TEST_CASE("basis sampler rejects malformed generator lists") {
  HybridState h(3);
  std::vector<PauliOp> bad = {PauliOp::single_x(3, 0), PauliOp::single_z(3, 0)};
  CHECK_THROWS_AS(BasisSampler(h, bad), std::invalid_argument);  // anticommuting
  PauliOp nonherm(3);
  nonherm.x.set(0, true);
  nonherm.z.set(0, true);  // XZ with phase 0 is anti-Hermitian
  CHECK_THROWS_AS(BasisSampler(h, {nonherm}), std::invalid_argument);
}

}  // TEST_SUITE
