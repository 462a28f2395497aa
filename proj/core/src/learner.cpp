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

#include "stablearn/learner.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "stablearn/dense_state.hpp"
#include "stablearn/encoding.hpp"
#include "stablearn/hybrid_state.hpp"
#include "stablearn/random_group.hpp"

namespace stablearn {

namespace {

std::size_t ceil_count(double v) {
  if (!(v >= 0.0) || v > 9e15) {
    throw std::invalid_argument("copy budget out of range");
  }
  const double c = std::ceil(v);
  return static_cast<std::size_t>(c);
}

}  // namespace

double LearnerConfig::resolved_c1() const {
  if (c1 > 0.0) return c1;
  return profile == Profile::kPaper ? 10.0 : 4.0;
}

double LearnerConfig::resolved_c2() const {
  if (c2 > 0.0) return c2;
  return profile == Profile::kPaper ? 300.0 : 40.0;
}

double LearnerConfig::resolved_c3() const { return c3 > 0.0 ? c3 : 1.0; }

double LearnerConfig::group_epsilon() const {
  if (profile == Profile::kDesk) return epsilon / 4.0;
  const double e4 = epsilon * epsilon * epsilon * epsilon;
  return std::min(epsilon, e4 / (16.0 * std::ldexp(1.0, 2 * static_cast<int>(t_hint))));
}

std::size_t LearnerConfig::resolved_reps(std::size_t n) const {
  if (reps > 0) return reps;
  return ceil_count(resolved_c1() * static_cast<double>(n) *
                    std::ldexp(1.0, static_cast<int>(t_hint)));
}

std::size_t LearnerConfig::resolved_copies_per_rep(std::size_t n) const {
  if (copies_per_rep > 0) return copies_per_rep;
  return ceil_count(resolved_c2() * static_cast<double>(n));
}

std::size_t LearnerConfig::resolved_verify_copies(std::size_t n) const {
  return resolved_verify_copies(n, epsilon);
}

std::size_t LearnerConfig::resolved_verify_copies(std::size_t n,
                                                  double eps) const {
  if (verify_copies > 0) return verify_copies;
  const double nn = static_cast<double>(n);
  return ceil_count(resolved_c3() * (nn * nn + 2.0 * nn) / (eps * eps));
}

std::size_t LearnerConfig::resolved_tomography_copies() const {
  if (tomography_copies > 0) return tomography_copies;
  const double e4 = epsilon * epsilon * epsilon * epsilon;
  return ceil_count(std::ldexp(1.0, 2 * static_cast<int>(t_hint)) / e4);
}

void LearnerConfig::validate(std::size_t n) const {
  if (n == 0) throw std::invalid_argument("state must have at least one qubit");
  if (!(epsilon > 0.0) || epsilon > 1.0) {
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  }
  if (t_hint > 24) throw std::invalid_argument("t_hint too large for budgets");
  if (resolved_reps(n) == 0 || resolved_copies_per_rep(n) == 0 ||
      resolved_verify_copies(n, group_epsilon()) == 0 ||
      resolved_tomography_copies() == 0) {
    throw std::invalid_argument("all copy counts must be at least 1");
  }
}

std::vector<PauliOp> harvest_intersection(const BitMatrix& outcomes,
                                          const StabilizerGroup& basis) {
  if (outcomes.num_rows() == 0 || basis.rank() == 0) {
    throw std::invalid_argument("empty measurement record or basis");
  }
  if (outcomes.num_cols() != basis.rank()) {
    throw std::invalid_argument("record width does not match basis rank");
  }
  const ConstantRowSolutions sols = constant_row_solutions(outcomes);
  std::vector<PauliOp> found;
  found.reserve(sols.zero_basis.size() + 1);
  for (const BitVec& a : sols.zero_basis) {
    found.push_back(basis.combination(a));
  }
  if (sols.ones_consistent) {
    // Constant outcome 1 means the negated combination stabilizes.
    PauliOp g = basis.combination(sols.ones_particular);
    g.phase = static_cast<std::uint8_t>((g.phase + 2) & 3);
    found.push_back(g);
  }
  return found;
}

GroupLearnResult learn_stabilizer_group(StateSource& source,
                                        const LearnerConfig& cfg) {
  const std::size_t n = source.num_qubits();
  cfg.validate(n);
  Rng root(cfg.master_seed);

  const std::size_t reps = cfg.resolved_reps(n);
  const std::size_t per_rep = cfg.resolved_copies_per_rep(n);

  StabilizerGroup acc(n);
  std::size_t aborts = 0;
  for (std::size_t i = 0; i < reps; ++i) {
    Rng rep_rng = root.stream("rep", i);
    const StabilizerGroup basis = random_stabilizer_group(n, n, rep_rng);
    BitMatrix record;
    source.measure_copies_in_basis(basis.generators(), per_rep, rep_rng,
                                   record);
    for (const PauliOp& g : harvest_intersection(record, basis)) {
      if (!acc.commutes_with_all(g)) {
        // Sampling artifact: a true stabilizer commutes with every other.
        ++aborts;
        break;
      }
      acc.add_if_independent(g);
    }
  }

  GroupLearnResult out;
  out.group = acc.canonicalized();
  out.reps_run = reps;
  out.copies_used = reps * per_rep;
  out.anticommute_aborts = aborts;
  return out;
}

VerifyResult verify_group(StateSource& source,
                          const StabilizerGroup& candidate, std::size_t copies,
                          Rng& rng) {
  VerifyResult out;
  out.group = StabilizerGroup(candidate.num_qubits());
  if (candidate.rank() == 0) return out;
  if (copies == 0) throw std::invalid_argument("verification needs copies");

  BitMatrix record;
  source.measure_copies_in_basis(candidate.generators(), copies, rng, record);
  out.copies_used = copies;

  // Outcome bits are consistent under products within each copy, so the
  // never-violated combinations are exactly the nullspace of the record.
  StabilizerGroup kept(candidate.num_qubits());
  for (const BitVec& a : nullspace(record)) {
    kept.add_if_independent(candidate.combination(a));
  }
  out.removed = candidate.rank() - kept.rank();
  out.group = kept.canonicalized();
  return out;
}

VerifyResult verify_group(StateSource& source,
                          const StabilizerGroup& candidate,
                          const LearnerConfig& cfg) {
  Rng root(cfg.master_seed);
  Rng vrng = root.stream("verify");
  return verify_group(source, candidate,
                      cfg.resolved_verify_copies(source.num_qubits()), vrng);
}

ResidualTomography tomograph_residual(StateSource& source,
                                      const CliffordTableau& v, std::size_t r,
                                      std::size_t copies, Rng& rng,
                                      std::size_t dense_cap) {
  const std::size_t n = v.num_qubits();
  if (r > n) throw std::invalid_argument("rank exceeds qubit count");
  const std::size_t k = n - r;
  ResidualTomography out;
  if (k == 0) {
    out.phi = {std::complex<double>(1.0, 0.0)};
    return out;
  }
  if (k > dense_cap) throw CapacityError("residual register exceeds dense cap");
  const std::size_t num_paulis = (std::size_t{1} << (2 * k)) - 1;
  if (copies < num_paulis) {
    throw std::invalid_argument("need at least one copy per residual Pauli");
  }

  std::vector<PauliOp> basis;
  basis.reserve(r + 1);
  for (std::size_t j = 0; j < r; ++j) basis.push_back(v.z_image(j));

  const std::size_t dim = std::size_t{1} << k;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    rho(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) =
        1.0 / static_cast<double>(dim);
  }

  const std::size_t block_base = copies / num_paulis;
  const std::size_t block_rem = copies % num_paulis;
  static const std::complex<double> kPhases[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

  for (std::size_t w = 1; w <= num_paulis; ++w) {
    const std::size_t block = block_base + ((w - 1) < block_rem ? 1 : 0);

    // Letter of residual qubit l sits in base-4 digit l of w:
    // 1 -> X, 2 -> Z, 3 -> Y. Residual qubit l is physical qubit r + l.
    BitVec px(k);
    BitVec pz(k);
    std::uint64_t xmask = 0;
    std::uint64_t zmask = 0;
    PauliOp embedded(n);
    for (std::size_t l = 0; l < k; ++l) {
      const unsigned digit = (w >> (2 * l)) & 3u;
      if (digit & 1u) {
        px.set(l, true);
        xmask |= std::uint64_t{1} << l;
        embedded.x.set(r + l, true);
      }
      if (digit & 2u) {
        pz.set(l, true);
        zmask |= std::uint64_t{1} << l;
        embedded.z.set(r + l, true);
      }
    }
    const PauliOp local = PauliOp::from_bits(px, pz, false);
    embedded.phase = local.phase;

    basis.push_back(v.conjugate(embedded));
    BitMatrix record;
    source.measure_copies_in_basis(basis, block, rng, record);
    basis.pop_back();
    out.copies_used += block;

    double sum = 0.0;
    std::size_t accepted = 0;
    for (std::size_t c = 0; c < record.num_rows(); ++c) {
      const BitVec& row = record.row(c);
      bool clean = true;
      for (std::size_t j = 0; j < r && clean; ++j) clean = !row.get(j);
      if (!clean) {
        ++out.rejects;
        continue;
      }
      ++accepted;
      sum += row.get(r) ? -1.0 : 1.0;
    }
    const double est =
        accepted > 0 ? sum / static_cast<double>(accepted) : 0.0;

    // local |b> = i^phase (-1)^(b.z) |b xor x|, scaled by est / 2^k.
    const std::complex<double> scale =
        kPhases[local.phase & 3] * (est / static_cast<double>(dim));
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double par =
          (std::popcount(b & zmask) & 1u) != 0 ? -1.0 : 1.0;
      rho(static_cast<Eigen::Index>(b ^ xmask), static_cast<Eigen::Index>(b)) +=
          scale * par;
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("residual eigensolver failed");
  }
  Eigen::VectorXcd top = solver.eigenvectors().col(
      static_cast<Eigen::Index>(dim) - 1);

  // Fix the free global phase: largest amplitude becomes real positive.
  Eigen::Index imax = 0;
  top.cwiseAbs().maxCoeff(&imax);
  const std::complex<double> piv = top(imax);
  if (std::abs(piv) > 0.0) top *= std::conj(piv) / std::abs(piv);
  top.normalize();

  out.phi.resize(dim);
  for (std::size_t b = 0; b < dim; ++b) {
    out.phi[b] = top(static_cast<Eigen::Index>(b));
  }
  return out;
}

DenseState LearnedState::to_dense(std::size_t cap) const {
  const std::size_t n = v.num_qubits();
  if (n > cap) throw CapacityError("state exceeds dense cap");
  const std::size_t r = group.rank();
  std::vector<std::complex<double>> amps(std::size_t{1} << n,
                                         std::complex<double>(0.0, 0.0));
  for (std::size_t d = 0; d < phi_hat.size(); ++d) {
    amps[d << r] = phi_hat[d];
  }
  DenseState state = DenseState::from_amplitudes(n, std::move(amps), cap);
  for (const Gate& g : v_gates) state.apply_gate(g);
  return state;
}

LearnedState learn_doped_state(StateSource& source, const LearnerConfig& cfg) {
  const std::size_t n = source.num_qubits();
  cfg.validate(n);
  Rng root(cfg.master_seed);

  GroupLearnResult learned = learn_stabilizer_group(source, cfg);

  Rng vrng = root.stream("verify");
  const std::size_t vcopies =
      cfg.resolved_verify_copies(n, cfg.group_epsilon());
  VerifyResult verified = verify_group(source, learned.group, vcopies, vrng);

  const EncodingCircuit enc = encoding_circuit(verified.group);
  const std::size_t rank = verified.group.rank();

  Rng trng = root.stream("tomography");
  const ResidualTomography tomo =
      tomograph_residual(source, enc.tableau, rank,
                         rank == n ? 0 : cfg.resolved_tomography_copies(),
                         trng);

  LearnedState out;
  out.group = verified.group;
  out.v = enc.tableau;
  out.v_gates = enc.gates;
  out.phi_hat = tomo.phi;
  out.diagnostics.reps_run = learned.reps_run;
  out.diagnostics.learn_copies = learned.copies_used;
  out.diagnostics.verify_copies = verified.copies_used;
  out.diagnostics.tomography_copies = tomo.copies_used;
  out.diagnostics.total_copies =
      learned.copies_used + verified.copies_used + tomo.copies_used;
  out.diagnostics.anticommute_aborts = learned.anticommute_aborts;
  out.diagnostics.candidate_rank = learned.group.rank();
  out.diagnostics.verify_removed = verified.removed;
  out.diagnostics.tomography_rejects = tomo.rejects;
  return out;
}

IntersectionStats intersection_stats(std::size_t n, std::size_t r,
                                     std::size_t trials, Rng& rng) {
  if (r >= n) throw std::invalid_argument("reference rank must be below n");
  if (trials == 0) throw std::invalid_argument("trials must be positive");

  IntersectionStats out;
  out.num_qubits = n;
  out.reference_rank = r;
  out.trials = trials;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const StabilizerGroup t = random_stabilizer_group(n, n, rng);
    BitMatrix m = t.symplectic_rows();
    for (std::size_t j = 0; j < r; ++j) {
      BitVec zrow(2 * n);
      zrow.set(n + j, true);
      m.append_row(zrow);
    }
    // dim(span T) + dim(reference) exceeds dim of the sum exactly when the
    // spans share a nonzero vector.
    if (rank(m) < n + r) ++out.hits;
  }
  out.empirical_p =
      static_cast<double>(out.hits) / static_cast<double>(trials);
  out.bound = 1.0 / (std::ldexp(1.0, static_cast<int>(n - r + 1)) + 1.0);
  return out;
}

}  // namespace stablearn
