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

#include "stablearn/state_source.hpp"

#include <utility>

#include "stablearn/basis_sampler.hpp"

namespace stablearn {

HybridStateSource::HybridStateSource(HybridState state)
    : state_(std::move(state)) {}

void HybridStateSource::measure_copies_in_basis(
    const std::vector<PauliOp>& gens, std::size_t copies, Rng& rng,
    BitMatrix& out) {
  BasisSampler sampler(state_, gens);
  for (std::size_t c = 0; c < copies; ++c) {
    out.append_row(sampler.sample_row(rng));
  }
  copies_ += copies;
}

}  // namespace stablearn
