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

#ifndef STABLEARN_LEARNER_HPP_
#define STABLEARN_LEARNER_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "stablearn/dense_state.hpp"
#include "stablearn/gates.hpp"
#include "stablearn/gf2.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/stabilizer_group.hpp"
#include "stablearn/state_source.hpp"
#include "stablearn/tableau.hpp"

namespace stablearn {

// Constant profiles. The paper profile uses the published constants; the
// desk profile shrinks them for interactive runs and CI, trading the
// exponentially small failure probability for speed.
enum class Profile { kPaper, kDesk };

// Sample-budget knobs for the learning pipeline. A zero count or constant
// means "derive from the profile", so a default-constructed config with just
// epsilon, t_hint, profile and master_seed filled in is fully usable.
struct LearnerConfig {
  double epsilon = 0.1;        // target trace distance, in (0, 1]
  std::size_t t_hint = 0;      // assumed bound on non-Clifford gate count
  Profile profile = Profile::kDesk;
  std::uint64_t master_seed = 0;

  std::size_t reps = 0;               // default ceil(c1 * n * 2^t_hint)
  std::size_t copies_per_rep = 0;     // default ceil(c2 * n)
  std::size_t verify_copies = 0;      // default ceil(c3 * (n^2 + 2n) / eps^2)
  std::size_t tomography_copies = 0;  // default ceil(2^(2 t_hint) / eps^4)

  double c1 = 0.0;  // default 10 (paper) / 4 (desk)
  double c2 = 0.0;  // default 300 (paper) / 40 (desk)
  double c3 = 0.0;  // default 1 (both)

  double resolved_c1() const;
  double resolved_c2() const;
  double resolved_c3() const;

  // Internal accuracy for the group phase of the full pipeline. The paper
  // profile uses min(eps, eps^4 / (16 * 2^(2 t_hint))); the desk profile
  // uses eps / 4, which the zero-syndrome post-selection in the tomography
  // step makes sufficient at desk scale.
  double group_epsilon() const;

  std::size_t resolved_reps(std::size_t n) const;
  std::size_t resolved_copies_per_rep(std::size_t n) const;
  std::size_t resolved_verify_copies(std::size_t n) const;  // at this->epsilon
  std::size_t resolved_verify_copies(std::size_t n, double eps) const;
  std::size_t resolved_tomography_copies() const;

  // Enforces epsilon in (0, 1], t_hint small enough for the budget
  // formulas, and all resolved counts >= 1. Throws std::invalid_argument.
  void validate(std::size_t n) const;
};

struct LearnDiagnostics {
  std::size_t reps_run = 0;
  std::size_t learn_copies = 0;
  std::size_t verify_copies = 0;
  std::size_t tomography_copies = 0;
  std::size_t total_copies = 0;
  std::size_t anticommute_aborts = 0;
  std::size_t candidate_rank = 0;
  std::size_t verify_removed = 0;
  std::size_t tomography_rejects = 0;
};

// Solves for the group elements of `basis` with deterministic outcomes in
// the measurement record: combinations a with B a = 0 give generators with
// their recorded sign, and the all-ones solution, if consistent, recovers a
// negatively signed stabilizer. Product phases are exact. Throws when the
// record or the basis is empty.
std::vector<PauliOp> harvest_intersection(const BitMatrix& outcomes,
                                          const StabilizerGroup& basis);

struct GroupLearnResult {
  StabilizerGroup group;
  std::size_t reps_run = 0;
  std::size_t copies_used = 0;
  std::size_t anticommute_aborts = 0;
};

// Accumulates stabilizers of the source state: each repetition draws a
// random rank-n group, measures fresh copies in its basis, and harvests the
// combinations with constant outcomes. A harvested element that anticommutes
// with the accumulator signals a sampling artifact; the repetition is
// abandoned and counted. The returned group is in canonical form.
GroupLearnResult learn_stabilizer_group(StateSource& source,
                                        const LearnerConfig& cfg);

struct VerifyResult {
  StabilizerGroup group;
  std::size_t removed = 0;
  std::size_t copies_used = 0;
};

// Measures `copies` fresh copies in the candidate's own basis and keeps
// exactly the combinations whose outcome is zero in every copy (the
// nullspace of the outcome record), eliminating the violated directions.
// A candidate combination at distance > eps from stabilizing the state
// survives with probability at most (1 - eps^2)^copies.
VerifyResult verify_group(StateSource& source, const StabilizerGroup& candidate,
                          std::size_t copies, Rng& rng);

// Convenience wrapper using the config's copy budget and seed streams.
VerifyResult verify_group(StateSource& source, const StabilizerGroup& candidate,
                          const LearnerConfig& cfg);

struct ResidualTomography {
  std::vector<std::complex<double>> phi;  // dim 2^(n - r), unit norm
  std::size_t copies_used = 0;
  std::size_t rejects = 0;
};

// Estimates the residual factor phi of the decomposition V(|0^r> (x) phi).
// Copies are spread round-robin over the 4^k - 1 nontrivial k-qubit Paulis
// (k = n - r); each copy is measured in the code syndrome basis plus the
// frame image of one residual Pauli, and is rejected unless every syndrome
// outcome is zero. The surviving expectations assemble a density matrix by
// linear inversion whose top eigenvector is returned, with the largest
// amplitude rotated to the positive real axis. k = 0 yields the scalar 1.
// Throws CapacityError when k exceeds dense_cap and std::invalid_argument
// when copies < 4^k - 1.
ResidualTomography tomograph_residual(StateSource& source,
                                      const CliffordTableau& v, std::size_t r,
                                      std::size_t copies, Rng& rng,
                                      std::size_t dense_cap = 14);

struct LearnedState {
  StabilizerGroup group;                    // verified, canonical form
  CliffordTableau v;                        // encoding frame: V Z_j V+ = g_j
  std::vector<Gate> v_gates;                // circuit realizing v
  std::vector<std::complex<double>> phi_hat;  // residual, dim 2^(n - rank)
  LearnDiagnostics diagnostics;

  // The represented vector V(|0^r> (x) phi_hat) as a dense state.
  // Throws when num_qubits exceeds cap.
  DenseState to_dense(std::size_t cap = 14) const;
};

// Full pipeline: learn a candidate group, verify it at the internal
// accuracy group_epsilon(), synthesize the encoding frame, and reconstruct
// the residual by tomography. Copy accounting is exact:
// total = reps * copies_per_rep + verify_copies + tomography copies used.
LearnedState learn_doped_state(StateSource& source, const LearnerConfig& cfg);

struct IntersectionStats {
  std::size_t num_qubits = 0;
  std::size_t reference_rank = 0;
  std::size_t trials = 0;
  std::size_t hits = 0;
  double empirical_p = 0.0;
  double bound = 0.0;  // 1 / (2^(n - r + 1) + 1)
};

// Frequency with which a uniformly random rank-n stabilizer group has a
// nontrivial unsigned intersection with a fixed rank-r reference group,
// decided purely on symplectic row spaces. Throws when r >= n.
IntersectionStats intersection_stats(std::size_t n, std::size_t r,
                                     std::size_t trials, Rng& rng);

}  // namespace stablearn

#endif  // STABLEARN_LEARNER_HPP_
