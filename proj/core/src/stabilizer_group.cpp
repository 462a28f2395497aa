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

#include "stablearn/stabilizer_group.hpp"

#include <stdexcept>

namespace stablearn {

namespace {

// Reduces v against echelon rows in place; returns true when v survives
// (is independent).
bool reduce_against(BitVec& v, const std::vector<BitVec>& rows,
                    const std::vector<std::size_t>& pivots) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (v.get(pivots[i])) v.xor_with(rows[i]);
  }
  return v.any();
}

}  // namespace

bool StabilizerGroup::add_if_independent(const PauliOp& g) {
  if (g.num_qubits() != n_) throw std::invalid_argument("generator size mismatch");
  if (!g.is_hermitian()) throw std::invalid_argument("generator is not Hermitian");
  if (!commutes_with_all(g)) {
    throw std::invalid_argument("generator anticommutes with the group");
  }
  BitVec row = g.symplectic_row();
  if (!reduce_against(row, reduced_rows_, reduced_pivots_)) return false;
  gens_.push_back(g);
  reduced_pivots_.push_back(static_cast<std::size_t>(row.first_set()));
  reduced_rows_.push_back(std::move(row));
  return true;
}

bool StabilizerGroup::commutes_with_all(const PauliOp& g) const {
  for (const PauliOp& h : gens_) {
    if (!h.commutes(g)) return false;
  }
  return true;
}

bool StabilizerGroup::contains_unsigned(const PauliOp& g) const {
  BitVec row = g.symplectic_row();
  return !reduce_against(row, reduced_rows_, reduced_pivots_);
}

PauliOp StabilizerGroup::combination(const BitVec& a) const {
  if (a.size() != gens_.size()) throw std::invalid_argument("combination length mismatch");
  PauliOp p = PauliOp::identity(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (a.get(i)) p.mul_inplace(gens_[i]);
  }
  return p;
}

BitMatrix StabilizerGroup::symplectic_rows() const {
  BitMatrix m(0, 2 * n_);
  for (const PauliOp& g : gens_) m.append_row(g.symplectic_row());
  return m;
}

StabilizerGroup StabilizerGroup::canonicalized() const {
  // Gaussian elimination on the symplectic rows with the row additions
  // mirrored as operator products, so signs stay correct.
  std::vector<PauliOp> ops = gens_;
  std::vector<BitVec> rows;
  rows.reserve(ops.size());
  for (const PauliOp& g : ops) rows.push_back(g.symplectic_row());

  StabilizerGroup out(n_);
  std::size_t next = 0;
  for (std::size_t c = 0; c < 2 * n_ && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    std::swap(ops[p], ops[next]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r].xor_with(rows[next]);
        ops[r].mul_inplace(ops[next]);
      }
    }
    ++next;
  }
  for (std::size_t i = 0; i < next; ++i) out.add_if_independent(ops[i]);
  return out;
}

}  // namespace stablearn
