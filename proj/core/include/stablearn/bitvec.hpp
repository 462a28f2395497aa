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

#ifndef STABLEARN_BITVEC_HPP_
#define STABLEARN_BITVEC_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stablearn {

// Fixed-length vector over GF(2), packed into 64-bit words.
//
// Trailing bits of the last word are kept zero at all times, so whole-word
// operations (xor, and, popcount) never need a final mask.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t len) : len_(len), w_((len + 63) / 64, 0) {}

  std::size_t size() const { return len_; }
  std::size_t num_words() const { return w_.size(); }
  std::uint64_t word(std::size_t i) const { return w_[i]; }
  std::uint64_t& word(std::size_t i) { return w_[i]; }

  bool get(std::size_t i) const {
    check_index(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i, bool v) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      w_[i >> 6] |= mask;
    } else {
      w_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) {
    check_index(i);
    w_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  void clear() { w_.assign(w_.size(), 0); }

  bool none() const {
    for (std::uint64_t w : w_) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !none(); }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the lowest set bit, or -1 when the vector is zero.
  std::ptrdiff_t first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i]) return static_cast<std::ptrdiff_t>(i * 64 + std::countr_zero(w_[i]));
    }
    return -1;
  }

  void xor_with(const BitVec& o) {
    check_same_length(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
  }

  static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    a.check_same_length(b);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(a.w_[i] & b.w_[i]));
    }
    return c;
  }

  // Parity of the AND of two vectors, i.e. the GF(2) inner product.
  static bool and_parity(const BitVec& a, const BitVec& b) {
    a.check_same_length(b);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
    return std::popcount(acc) & 1;
  }

  // Copies bits [begin, end) into a fresh vector.
  BitVec slice(std::size_t begin, std::size_t end) const {
    if (begin > end || end > len_) throw std::out_of_range("BitVec::slice range");
    BitVec out(end - begin);
    for (std::size_t i = begin; i < end; ++i) out.set(i - begin, get(i));
    return out;
  }

  bool operator==(const BitVec& o) const { return len_ == o.len_ && w_ == o.w_; }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  // Lexicographic order with bit 0 most significant; used only to build
  // canonical signatures in tests and diagnostics.
  bool operator<(const BitVec& o) const {
    if (len_ != o.len_) return len_ < o.len_;
    for (std::size_t i = 0; i < len_; ++i) {
      const bool a = get(i);
      const bool b = o.get(i);
      if (a != b) return b;
    }
    return false;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
      if (get(i)) s[i] = '1';
    }
    return s;
  }

  // Zeroes any bits that leaked past the logical length. Callers that write
  // whole words directly must restore this invariant before mixed use.
  void mask_tail() {
    const std::size_t tail = len_ & 63;
    if (tail != 0 && !w_.empty()) w_.back() &= (std::uint64_t{1} << tail) - 1;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVec index " + std::to_string(i) +
                                           " out of range " + std::to_string(len_));
  }
  void check_same_length(const BitVec& o) const {
    if (len_ != o.len_) throw std::invalid_argument("BitVec length mismatch");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace stablearn

#endif  // STABLEARN_BITVEC_HPP_
