// Copyright 2026 The mjdist Authors
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

#ifndef MJDIST_COMBINATORICS_HPP_
#define MJDIST_COMBINATORICS_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mjdist {

using BigInt = boost::multiprecision::cpp_int;

// Largest ground set supported by the 64-bit subset encoding.
inline constexpr int kMaxGroundSet = 40;

// Exact binomial coefficient; zero when r > n.
BigInt binom(unsigned n, unsigned r);

// Same value in 64 bits. Throws InvalidArgument on overflow.
std::uint64_t binom_u64(unsigned n, unsigned r);

BigInt factorial(unsigned n);

// A subset of the ground set [n] = {1, ..., n}. Element i is stored in bit
// i - 1 of the mask.
class KSubset {
 public:
  KSubset() = default;
  KSubset(std::uint64_t bits, int n);

  // Elements are 1-based; duplicates and out-of-range values are rejected.
  static KSubset from_elements(std::span<const int> elements, int n);
  static KSubset from_elements(std::initializer_list<int> elements, int n);

  std::uint64_t bits() const { return bits_; }
  int n() const { return n_; }
  int size() const;
  bool contains(int element) const;

  // Sorted 1-based elements.
  std::vector<int> elements() const;

  // [n] minus this set.
  KSubset complement() const;

  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset& a, const KSubset& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

// |M ∩ N|. Throws InvalidArgument when the ground sets differ.
int intersection_size(const KSubset& a, const KSubset& b);

// Colexicographic rank among the k-subsets of [n], k = a.size().
std::uint64_t rank(const KSubset& subset);

// Inverse of rank(). Throws InvalidArgument when index >= binom(n, k).
KSubset unrank(std::uint64_t index, int n, int k);

// A bijection of [n], optionally extended by a point "infinity" that is
// addressed as n + 1. Points are 1-based at the interface.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int n, bool extended = false);

  // images[j - 1] = phi(j), i.e. the one-line notation (i_1, ..., i_n).
  // With extended = true the vector has n + 1 entries and n + 1 stands for
  // infinity.
  static Permutation from_images(std::vector<int> images,
                                 bool extended = false);

  // Parses cycle notation such as "(1 2)(3 4 5)" over [n].
  static Permutation from_cycles(const std::string& text, int n);

  int n() const { return static_cast<int>(images_.size()) - (extended_ ? 1 : 0); }
  bool extended() const { return extended_; }
  int infinity() const { return n() + 1; }

  int operator()(int point) const;
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  // Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;  // 1-based values
  bool extended_ = false;
};

// compose(a, b)(x) = a(b(x)): apply b first, then a.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);

// tau_i exchanging i and i + 1, 1 <= i <= n - 1.
Permutation transposition(int i, int n);

// The cycle (1 2 ... n).
Permutation long_cycle(int n);

// Image of a subset under phi, elementwise.
KSubset apply(const Permutation& phi, const KSubset& subset);

// { phi(l), phi(l + 1), ..., phi(l + k - 1) } with indices read modulo n
// into 1..n. Any integer l is accepted.
KSubset window(const Permutation& phi, int ell, int k);

}  // namespace mjdist

#endif  // MJDIST_COMBINATORICS_HPP_
