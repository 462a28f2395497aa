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

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include <doctest.h>

#include "stablearn/bitvec.hpp"
#include "stablearn/gf2.hpp"
#include "stablearn/rng.hpp"

using namespace stablearn;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.next_bit());
  }
  return m;
}

// Row r of m as a plain integer, bit c = column c. Only valid for cols <= 16.
std::uint32_t row_bits(const BitMatrix& m, std::size_t r) {
  std::uint32_t v = 0;
  for (std::size_t c = 0; c < m.num_cols(); ++c) {
    if (m.get(r, c)) v |= 1u << c;
  }
  return v;
}

std::uint32_t vec_bits(const BitVec& v) {
  std::uint32_t out = 0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v.get(c)) out |= 1u << c;
  }
  return out;
}

// M x over GF(2): returns 1-bit results packed per row.
bool mul_row(std::uint32_t row, std::uint32_t x) {
  return std::popcount(row & x) & 1;
}

// Exhaustive kernel of m for cols <= 16.
std::set<std::uint32_t> brute_kernel(const BitMatrix& m) {
  std::set<std::uint32_t> kernel;
  for (std::uint32_t x = 0; x < (1u << m.num_cols()); ++x) {
    bool ok = true;
    for (std::size_t r = 0; r < m.num_rows() && ok; ++r) {
      ok = !mul_row(row_bits(m, r), x);
    }
    if (ok) kernel.insert(x);
  }
  return kernel;
}

std::size_t brute_rank(const BitMatrix& m) {
  // |kernel| = 2^{cols - rank}.
  const std::set<std::uint32_t> k = brute_kernel(m);
  std::size_t log2k = 0;
  while ((std::size_t{1} << log2k) < k.size()) ++log2k;
  REQUIRE((std::size_t{1} << log2k) == k.size());
  return m.num_cols() - log2k;
}

// Span of the rows of m, as integers. cols <= 16, rank kept small by caller.
std::set<std::uint32_t> brute_row_span(const BitMatrix& m) {
  std::set<std::uint32_t> span = {0};
  for (std::size_t r = 0; r < m.num_rows(); ++r) {
    const std::uint32_t row = row_bits(m, r);
    std::set<std::uint32_t> next = span;
    for (std::uint32_t v : span) next.insert(v ^ row);
    span = next;
  }
  return span;
}

}  // namespace

TEST_SUITE("gf2") {

TEST_CASE("rref agrees with exhaustive row-space and kernel enumeration") {
  Rng rng(101);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t cols = 1 + rng.next_below(10);
    const std::size_t rows = rng.next_below(13);
    const BitMatrix m = random_matrix(rows, cols, rng);
    const RrefResult rr = rref(m);

    CHECK(rr.rank == brute_rank(m));
    CHECK(rr.rank == rr.pivot_cols.size());
    CHECK(rr.mat.num_rows() == rr.rank);
    CHECK(brute_row_span(rr.mat) == brute_row_span(m));

    // Canonical shape: strictly increasing pivots, each pivot column an
    // elementary vector, row leading bit at its pivot.
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
      if (i > 0) CHECK(rr.pivot_cols[i - 1] < rr.pivot_cols[i]);
      const std::size_t pc = rr.pivot_cols[i];
      CHECK(rr.mat.row(i).first_set() == pc);
      for (std::size_t r = 0; r < rr.mat.num_rows(); ++r) {
        CHECK(rr.mat.get(r, pc) == (r == i));
      }
    }

    // Idempotence: reducing an already reduced matrix changes nothing.
    const RrefResult again = rref(rr.mat);
    CHECK(again.rank == rr.rank);
    for (std::size_t r = 0; r < rr.mat.num_rows(); ++r) {
      CHECK(row_bits(again.mat, r) == row_bits(rr.mat, r));
    }
  }
}

TEST_CASE("nullspace spans exactly the exhaustive kernel") {
  Rng rng(202);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t cols = 1 + rng.next_below(10);
    const std::size_t rows = rng.next_below(13);
    const BitMatrix m = random_matrix(rows, cols, rng);
    const std::vector<BitVec> basis = nullspace(m);
    const std::set<std::uint32_t> kernel = brute_kernel(m);

    CHECK((std::size_t{1} << basis.size()) == kernel.size());
    for (const BitVec& v : basis) CHECK(kernel.count(vec_bits(v)) == 1);

    // Independence: stacking the basis loses no rank.
    BitMatrix stack(0, cols);
    for (const BitVec& v : basis) stack.append_row(v);
    CHECK(rank(stack) == basis.size());
  }
}

TEST_CASE("nullspace of a matrix with no rows is the full space") {
  const BitMatrix m(0, 5);
  const std::vector<BitVec> basis = nullspace(m);
  CHECK(basis.size() == 5);
  BitMatrix stack(0, 5);
  for (const BitVec& v : basis) stack.append_row(v);
  CHECK(rank(stack) == 5);
}

TEST_CASE("solve_linear matches brute-force solvability") {
  Rng rng(303);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t cols = 1 + rng.next_below(9);
    const std::size_t rows = 1 + rng.next_below(9);
    const BitMatrix m = random_matrix(rows, cols, rng);

    BitVec b(rows);
    if (rng.next_bit()) {
      // In-image target: b = M x for a random x.
      std::uint32_t x = static_cast<std::uint32_t>(rng.next_below(1u << cols));
      for (std::size_t r = 0; r < rows; ++r) b.set(r, mul_row(row_bits(m, r), x));
    } else {
      for (std::size_t r = 0; r < rows; ++r) b.set(r, rng.next_bit());
    }

    bool brute_solvable = false;
    for (std::uint32_t x = 0; x < (1u << cols) && !brute_solvable; ++x) {
      bool all = true;
      for (std::size_t r = 0; r < rows && all; ++r) {
        all = mul_row(row_bits(m, r), x) == b.get(r);
      }
      brute_solvable = all;
    }

    const auto sol = solve_linear(m, b);
    CHECK(sol.has_value() == brute_solvable);
    if (sol) {
      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(mul_row(row_bits(m, r), vec_bits(*sol)) == b.get(r));
      }
    }
  }
}

TEST_CASE("constant_row_solutions matches exhaustive enumeration") {
  Rng rng(404);
  for (int iter = 0; iter < 150; ++iter) {
    const std::size_t cols = 1 + rng.next_below(9);
    const std::size_t rows = rng.next_below(10);
    const BitMatrix m = random_matrix(rows, cols, rng);
    const ConstantRowSolutions cs = constant_row_solutions(m);

    std::set<std::uint32_t> zero_set;
    bool brute_ones = false;
    for (std::uint32_t x = 0; x < (1u << cols); ++x) {
      bool all0 = true;
      bool all1 = rows > 0;
      for (std::size_t r = 0; r < rows; ++r) {
        const bool y = mul_row(row_bits(m, r), x);
        all0 = all0 && !y;
        all1 = all1 && y;
      }
      if (all0) zero_set.insert(x);
      if (all1 && !brute_ones) brute_ones = true;
    }
    if (rows == 0) brute_ones = true;  // empty conjunction

    CHECK((std::size_t{1} << cs.zero_basis.size()) == zero_set.size());
    for (const BitVec& v : cs.zero_basis) CHECK(zero_set.count(vec_bits(v)) == 1);
    CHECK(cs.ones_consistent == brute_ones);
    if (cs.ones_consistent && rows > 0) {
      for (std::size_t r = 0; r < rows; ++r) {
        CHECK(mul_row(row_bits(m, r), vec_bits(cs.ones_particular)));
      }
    }
  }
}

TEST_CASE("BitVec bit kernels match a scalar reference") {
  Rng rng(505);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng.next_below(130);  // spans word boundaries
    BitVec a(n);
    BitVec b(n);
    std::size_t pop = 0;
    bool parity = false;
    std::size_t first = n;
    for (std::size_t i = 0; i < n; ++i) {
      const bool ab = rng.next_bit();
      const bool bb = rng.next_bit();
      a.set(i, ab);
      b.set(i, bb);
      if (ab) {
        ++pop;
        if (first == n) first = i;
      }
      parity ^= ab && bb;
    }
    CHECK(a.popcount() == pop);
    CHECK(BitVec::and_parity(a, b) == parity);
    CHECK((a.none() ? n : a.first_set()) == first);

    BitVec c = a;
    c.xor_with(b);
    for (std::size_t i = 0; i < n; ++i) CHECK(c.get(i) == (a.get(i) ^ b.get(i)));
  }
}

TEST_CASE("symplectic_product is the commutation form") {
  // Rows are (x|z) pairs; the product must be x1.z2 + z1.x2 mod 2.
  Rng rng(606);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + rng.next_below(20);
    BitVec a(2 * n);
    BitVec b(2 * n);
    bool want = false;
    for (std::size_t i = 0; i < 2 * n; ++i) {
      a.set(i, rng.next_bit());
      b.set(i, rng.next_bit());
    }
    for (std::size_t q = 0; q < n; ++q) {
      want ^= (a.get(q) && b.get(n + q)) ^ (a.get(n + q) && b.get(q));
    }
    CHECK(symplectic_product(a, b) == want);
    CHECK(symplectic_product(b, a) == want);
    CHECK(symplectic_product(a, a) == false);
  }
}

}  // TEST_SUITE
