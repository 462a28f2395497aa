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

#include "stablearn/gf2.hpp"

#include <stdexcept>

namespace stablearn {

void BitMatrix::append_row(const BitVec& v) {
  if (v.size() != cols_) {
    if (rows_.empty() && cols_ == 0) {
      cols_ = v.size();
    } else {
      throw std::invalid_argument("BitMatrix::append_row width mismatch");
    }
  }
  rows_.push_back(v);
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r].get(c)) t.set(c, r, true);
    }
  }
  return t;
}

namespace {

// Gaussian elimination in place on a copy of m, optionally dragging an
// augmented column along. Produces full RREF (eliminates above the pivots
// too), drops zero rows.
struct Elim {
  BitMatrix mat;
  std::vector<bool> aug;  // augmented bits, same order as mat rows
  std::vector<std::size_t> pivot_cols;
  bool aug_inconsistent = false;  // a zero row ended with aug bit 1
};

Elim eliminate(const BitMatrix& m, const std::vector<bool>* aug_in) {
  const std::size_t nr = m.num_rows();
  const std::size_t nc = m.num_cols();
  std::vector<BitVec> rows;
  rows.reserve(nr);
  for (std::size_t r = 0; r < nr; ++r) rows.push_back(m.row(r));
  std::vector<bool> aug(nr, false);
  if (aug_in) aug = *aug_in;

  Elim out;
  std::size_t next = 0;  // rows [0, next) are settled pivot rows
  for (std::size_t c = 0; c < nc && next < nr; ++c) {
    std::size_t p = next;
    while (p < nr && !rows[p].get(c)) ++p;
    if (p == nr) continue;
    std::swap(rows[p], rows[next]);
    std::swap(aug[p], aug[next]);
    for (std::size_t r = 0; r < nr; ++r) {
      if (r != next && rows[r].get(c)) {
        rows[r].xor_with(rows[next]);
        aug[r] = aug[r] ^ aug[next];
      }
    }
    out.pivot_cols.push_back(c);
    ++next;
  }

  for (std::size_t r = next; r < nr; ++r) {
    if (aug[r]) out.aug_inconsistent = true;
  }
  out.mat = BitMatrix(0, nc);
  for (std::size_t r = 0; r < next; ++r) out.mat.append_row(rows[r]);
  out.aug.assign(aug.begin(), aug.begin() + static_cast<std::ptrdiff_t>(next));
  return out;
}

}  // namespace

RrefResult rref(const BitMatrix& m) {
  Elim e = eliminate(m, nullptr);
  RrefResult r;
  r.mat = std::move(e.mat);
  r.pivot_cols = std::move(e.pivot_cols);
  r.rank = r.pivot_cols.size();
  return r;
}

std::size_t rank(const BitMatrix& m) { return rref(m).rank; }

std::vector<BitVec> nullspace(const BitMatrix& m) {
  const std::size_t nc = m.num_cols();
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(nc);
    v.set(f, true);
    for (std::size_t i = 0; i < r.rank; ++i) {
      if (r.mat.row(i).get(f)) v.set(r.pivot_cols[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BitVec> solve_linear(const BitMatrix& m, const BitVec& b) {
  if (b.size() != m.num_rows()) {
    throw std::invalid_argument("solve_linear rhs length mismatch");
  }
  std::vector<bool> aug(m.num_rows());
  for (std::size_t r = 0; r < m.num_rows(); ++r) aug[r] = b.get(r);
  Elim e = eliminate(m, &aug);
  if (e.aug_inconsistent) return std::nullopt;
  BitVec x(m.num_cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    if (e.aug[i]) x.set(e.pivot_cols[i], true);
  }
  return x;
}

ConstantRowSolutions constant_row_solutions(const BitMatrix& m) {
  ConstantRowSolutions out;
  out.zero_basis = nullspace(m);
  BitVec ones(m.num_rows());
  for (std::size_t r = 0; r < m.num_rows(); ++r) ones.set(r, true);
  if (auto x = solve_linear(m, ones)) {
    out.ones_consistent = true;
    out.ones_particular = std::move(*x);
  } else {
    out.ones_consistent = false;
    out.ones_particular = BitVec(m.num_cols());
  }
  return out;
}

bool symplectic_product(const BitVec& a, const BitVec& b) {
  if (a.size() != b.size() || a.size() % 2 != 0) {
    throw std::invalid_argument("symplectic_product needs equal even lengths");
  }
  const std::size_t n = a.size() / 2;
  const BitVec ax = a.slice(0, n);
  const BitVec az = a.slice(n, 2 * n);
  const BitVec bx = b.slice(0, n);
  const BitVec bz = b.slice(n, 2 * n);
  return BitVec::and_parity(ax, bz) ^ BitVec::and_parity(az, bx);
}

}  // namespace stablearn
