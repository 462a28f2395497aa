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

#ifndef STABLEARN_RANDOM_GROUP_HPP_
#define STABLEARN_RANDOM_GROUP_HPP_

#include <cstddef>

#include "stablearn/rng.hpp"
#include "stablearn/stabilizer_group.hpp"

namespace stablearn {

// Uniformly random rank-r stabilizer group on n qubits, generator signs
// drawn independently and uniformly.
//
// The group is grown one generator at a time: each step draws a uniform
// element of the symplectic complement of the previous picks and rejects
// span members. Every ordered generating sequence of a fixed group is
// equally likely and every group admits the same number of sequences, so
// the induced distribution over groups is exactly uniform.
StabilizerGroup random_stabilizer_group(std::size_t n, std::size_t rank, Rng& rng);

}  // namespace stablearn

#endif  // STABLEARN_RANDOM_GROUP_HPP_
