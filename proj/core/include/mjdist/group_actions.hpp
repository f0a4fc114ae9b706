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

#ifndef MJDIST_GROUP_ACTIONS_HPP_
#define MJDIST_GROUP_ACTIONS_HPP_

#include <string>
#include <vector>

#include "mjdist/aut_search.hpp"
#include "mjdist/combinatorics.hpp"
#include "mjdist/graph.hpp"

namespace mjdist {

// The seven automorphism-group regimes of J(n,k)_I for 2 <= k <= n/2 and a
// proper nonempty I.
enum class AutCase {
  kSymmetric = 1,         // (1) 2 <= k < (n-1)/2, A = S_n
  kExceptional12_4 = 2,   // (2) J(12,4)_{1,3} or _{2,4}, A = O^-_10(2)
  kOddSymmetric = 3,      // (3) k = (n-1)/2, I != k+1-I, A = S_n
  kOddExtended = 4,       // (4) k = (n-1)/2, I == k+1-I, A = S_{n+1}
  kEvenDirect = 5,        // (5) k = n/2, I' != I'', A = S_2 x S_n
  kEvenPairSwap = 6,      // (6) k = n/2, I' == I'', A = S_2^e : S_n
  kEvenWreath = 7,        // (7) k = n/2, I = {k} or {1..k-1}, A = S_2 wr S_e
};

struct AutDescriptor {
  AutCase aut_case;
  std::string group_name;
  // Orbitals of A on ordered vertex pairs, as text.
  std::string orbitals;
  bool has_explicit_generators;
};

// Throws InvalidArgument for k < 2, non-canonical k, or I empty/full.
AutDescriptor classify(const MergedJohnsonSpec& spec);

// M -> sigma(M) on vertex indices.
VertexPermutation induced_vertex_perm(const Permutation& sigma,
                                      const MergedJohnsonSpec& spec);

// v -> [n] \ v, for n = 2k.
VertexPermutation complement_involution(const MergedJohnsonSpec& spec);

// Exchanges vertex v with its complement and fixes everything else. Needs
// n = 2k and I' = I''.
VertexPermutation pair_swap(std::size_t v, const MergedJohnsonSpec& spec);

// Action of a permutation of [n] ∪ {inf} through M <-> {M ∪ {inf}, [n] - M}.
// Needs n = 2k + 1 and I = k + 1 - I.
VertexPermutation extended_action(const Permutation& sigma_tilde,
                                  const MergedJohnsonSpec& spec);

struct GeneratorSet {
  std::vector<VertexPermutation> generators;
  // True when the generators are meant to generate the full group; false
  // for the exceptional case, where they only reach the S_n subgroup.
  bool complete = false;
  // Order of the group the generators are meant to generate.
  BigInt expected_order;
};

GeneratorSet generators(const AutDescriptor& descriptor,
                        const MergedJohnsonSpec& spec);

// An unordered split {P, [2m] \ P} into halves, stored by the half that
// contains 1.
class Equipartition {
 public:
  explicit Equipartition(const KSubset& half);

  const KSubset& part() const { return part_; }
  KSubset other() const { return part_.complement(); }

  friend bool operator==(const Equipartition&, const Equipartition&) = default;

 private:
  KSubset part_;
};

// All equipartitions of [2m], ordered by the colex rank of their part.
std::vector<Equipartition> equipartitions(int m);

// Number of equipartitions of [2m] that sigma maps to themselves, by direct
// enumeration. Throws InvalidArgument for odd n.
BigInt count_fixed_equipartitions(const Permutation& sigma);

// binom(2m - 2, m - 2): the largest fixed-equipartition count of a
// non-identity permutation. Needs m >= 4.
BigInt max_fixed_bound(int m);

// (2m)! * 3^(-x) with x = m * binom(2m-2, m-2) / (2(m-1)), kept exact.
class LemmaBound {
 public:
  explicit LemmaBound(int m);

  int m() const { return m_; }
  const BigInt& factorial_term() const { return factorial_; }
  // Exponent x = exponent_num / exponent_den in lowest terms.
  const BigInt& exponent_num() const { return exponent_num_; }
  const BigInt& exponent_den() const { return exponent_den_; }

  // (2m)!^den < 3^num, decided in integers.
  bool less_than_one() const;

  // Exact value as p/q when x is an integer. Not reduced: p = (2m)!,
  // q = 3^x. Throws Unsupported for a fractional exponent.
  std::pair<BigInt, BigInt> as_fraction() const;

  // Approximate value for display.
  double approx() const;

  // "40320/59049", or "(2m)!*3^(-a/b)" for a fractional exponent.
  std::string to_string() const;

 private:
  int m_;
  BigInt factorial_;
  BigInt exponent_num_;
  BigInt exponent_den_;
};

// Throws InvalidArgument for m < 4.
LemmaBound lemma_bound(int m);

}  // namespace mjdist

#endif  // MJDIST_GROUP_ACTIONS_HPP_
