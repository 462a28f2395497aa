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

#ifndef STABLEARN_ENCODING_HPP_
#define STABLEARN_ENCODING_HPP_

#include <vector>

#include "stablearn/gates.hpp"
#include "stablearn/stabilizer_group.hpp"
#include "stablearn/tableau.hpp"

namespace stablearn {

struct EncodingCircuit {
  CliffordTableau tableau;  // V
  std::vector<Gate> gates;  // circuit realizing V, application order
};

// Builds a Clifford V with V Z_j V^dagger = generator j of S, sign included,
// for j = 0..rank-1. Consequently V maps |0^r> (x) (anything) into the joint
// +1 eigenspace of S.
EncodingCircuit encoding_circuit(const StabilizerGroup& s);

}  // namespace stablearn

#endif  // STABLEARN_ENCODING_HPP_
