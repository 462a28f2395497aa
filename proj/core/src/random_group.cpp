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

#include "stablearn/random_group.hpp"

#include <stdexcept>

namespace stablearn {

StabilizerGroup random_stabilizer_group(std::size_t n, std::size_t rank, Rng& rng) {
  if (rank > n) throw std::invalid_argument("rank exceeds qubit count");
  const std::size_t dim = 2 * n;

  // Basis of the admissible space: vectors commuting with all picks so far.
  std::vector<BitVec> basis;
  basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    BitVec e(dim);
    e.set(i, true);
    basis.push_back(std::move(e));
  }
  // Echelon form of the picks, for span rejection.
  std::vector<BitVec> chosen_rows;
  std::vector<std::size_t> chosen_pivots;

  StabilizerGroup group(n);
  for (std::size_t step = 0; step < rank; ++step) {
    BitVec v(dim);
    while (true) {
      v.clear();
      for (const BitVec& b : basis) {
        if (rng.next_bit()) v.xor_with(b);
      }
      // Reject members of the span of earlier picks (the zero vector
      // included); acceptance probability is at least 3/4.
      BitVec red = v;
      for (std::size_t i = 0; i < chosen_rows.size(); ++i) {
        if (red.get(chosen_pivots[i])) red.xor_with(chosen_rows[i]);
      }
      if (red.any()) {
        chosen_pivots.push_back(static_cast<std::size_t>(red.first_set()));
        chosen_rows.push_back(std::move(red));
        break;
      }
    }

    // Shrink the admissible space to the symplectic complement of v. The
    // picks themselves span the radical of the admissible space and v is
    // outside it, so a nonconforming basis vector always exists here.
    std::size_t piv = basis.size();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (symplectic_product(basis[i], v)) {
        piv = i;
        break;
      }
    }
    if (piv == basis.size()) throw std::logic_error("degenerate admissible space");
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i != piv && symplectic_product(basis[i], v)) basis[i].xor_with(basis[piv]);
    }
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(piv));

    PauliOp g = PauliOp::from_bits(v.slice(0, n), v.slice(n, dim), rng.next_bit());
    if (!group.add_if_independent(g)) throw std::logic_error("dependent pick slipped through");
  }
  return group;
}

}  // namespace stablearn
