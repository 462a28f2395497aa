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

// Micro-benchmarks for the hot paths: GF(2) row reduction, group sampling,
// single-copy measurement, and the end-to-end group learner.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "stablearn/gates.hpp"
#include "stablearn/gf2.hpp"
#include "stablearn/hybrid_state.hpp"
#include "stablearn/learner.hpp"
#include "stablearn/pauli.hpp"
#include "stablearn/random_group.hpp"
#include "stablearn/rng.hpp"
#include "stablearn/state_source.hpp"

namespace {

using namespace stablearn;

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.next_bit());
  }
  return m;
}

void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(11);
  const BitMatrix m = random_matrix(4 * n, 2 * n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rref(m));
  }
}
BENCHMARK(BM_rref)->Arg(16)->Arg(32)->Arg(64)->Arg(128)->Arg(256);

void BM_random_group(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_stabilizer_group(n, n, rng));
  }
}
BENCHMARK(BM_random_group)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

// One full single-copy group measurement: fresh copy of the state, one
// random full-rank basis, n joint outcome bits.
void BM_measure_copy(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(13);
  const Circuit c = random_doped_circuit(n, 3 * n, 1, rng);
  HybridStateSource source(HybridState::prepare(c));
  const StabilizerGroup basis = random_stabilizer_group(n, n, rng);
  std::vector<PauliOp> gens;
  for (std::size_t j = 0; j < n; ++j) gens.push_back(basis.generator(j));
  BitMatrix rows(0, n);
  for (auto _ : state) {
    source.measure_copies_in_basis(gens, 1, rng, rows);
    benchmark::DoNotOptimize(rows);
  }
}
BENCHMARK(BM_measure_copy)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_learn_group(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = static_cast<std::size_t>(state.range(1));
  Rng rng(14);
  const Circuit c = random_doped_circuit(n, 3 * n, t, rng);
  const HybridState base = HybridState::prepare(c);
  LearnerConfig cfg;
  cfg.profile = Profile::kDesk;
  cfg.t_hint = t;
  cfg.epsilon = 0.5;
  cfg.master_seed = 15;
  for (auto _ : state) {
    HybridStateSource source(base);
    benchmark::DoNotOptimize(learn_stabilizer_group(source, cfg));
  }
}
BENCHMARK(BM_learn_group)
    ->Args({8, 0})
    ->Args({16, 0})
    ->Args({32, 0})
    ->Args({32, 1})
    ->Args({64, 0})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
