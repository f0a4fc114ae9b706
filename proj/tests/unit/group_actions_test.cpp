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

#include "mjdist/group_actions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mjdist/errors.hpp"
#include "test_oracles.hpp"

namespace mjdist {
namespace {

Permutation product_of_transpositions(int count, int n) {
  std::string text;
  for (int t = 0; t < count; ++t) {
    text += "(" + std::to_string(2 * t + 1) + " " + std::to_string(2 * t + 2) + ")";
  }
  return Permutation::from_cycles(text, n);
}

// One permutation of [n] per cycle type, cycles laid out on consecutive points.
std::vector<Permutation> cycle_type_representatives(int n) {
  std::vector<Permutation> out;
  std::vector<int> parts;
  auto emit = [&] {
    std::vector<int> images(n);
    int start = 0;
    for (int len : parts) {
      for (int i = 0; i < len; ++i) images[start + i] = start + (i + 1) % len + 1;
      start += len;
    }
    out.push_back(Permutation::from_images(images));
  };
  auto rec = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      emit();
      return;
    }
    for (int len = std::min(remaining, largest); len >= 1; --len) {
      parts.push_back(len);
      self(self, remaining - len, len);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Permutation random_permutation(int n, std::mt19937_64& rng, bool extended = false) {
  std::vector<int> images(n + (extended ? 1 : 0));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images, extended);
}

TEST(Classify, AllSevenRegimes) {
  auto regime = [](int n, int k, std::vector<int> I) {
    return classify(MergedJohnsonSpec(n, k, std::move(I))).aut_case;
  };
  EXPECT_EQ(regime(8, 3, {1}), AutCase::kSymmetric);
  EXPECT_EQ(regime(12, 4, {1, 3}), AutCase::kExceptional12_4);
  EXPECT_EQ(regime(12, 4, {2, 4}), AutCase::kExceptional12_4);
  EXPECT_EQ(regime(12, 4, {1}), AutCase::kSymmetric);
  EXPECT_EQ(regime(5, 2, {2}), AutCase::kOddSymmetric);
  EXPECT_EQ(regime(7, 3, {1}), AutCase::kOddSymmetric);
  EXPECT_EQ(regime(7, 3, {1, 3}), AutCase::kOddExtended);
  EXPECT_EQ(regime(7, 3, {2}), AutCase::kOddExtended);
  EXPECT_EQ(regime(8, 4, {1}), AutCase::kEvenDirect);
  EXPECT_EQ(regime(8, 4, {1, 3}), AutCase::kEvenPairSwap);
  EXPECT_EQ(regime(8, 4, {2, 4}), AutCase::kEvenPairSwap);
  EXPECT_EQ(regime(8, 4, {4}), AutCase::kEvenWreath);
  EXPECT_EQ(regime(8, 4, {1, 2, 3}), AutCase::kEvenWreath);
  EXPECT_EQ(regime(4, 2, {1}), AutCase::kEvenWreath);
}

TEST(Classify, RejectsOutOfScope) {
  EXPECT_THROW(classify(MergedJohnsonSpec(6, 1, {1})), InvalidArgument);
  EXPECT_THROW(classify(MergedJohnsonSpec(6, 2, {1, 2})), InvalidArgument);
  EXPECT_THROW(classify(MergedJohnsonSpec(6, 2, {})), InvalidArgument);
  EXPECT_THROW(classify(MergedJohnsonSpec(6, 4, {1})), InvalidArgument);
}

TEST(Classify, TotalOverSmallSpecs) {
  for (int n = 4; n <= 14; ++n) {
    for (int k = 2; 2 * k <= n; ++k) {
      for (int mask = 1; mask < (1 << k) - 1; ++mask) {
        std::vector<int> I;
        for (int i = 1; i <= k; ++i) {
          if (mask >> (i - 1) & 1) I.push_back(i);
        }
        const AutDescriptor a = classify(MergedJohnsonSpec(n, k, I));
        const AutDescriptor b = classify(MergedJohnsonSpec(n, k, I));
        EXPECT_EQ(a.aut_case, b.aut_case);
        EXPECT_FALSE(a.group_name.empty());
        EXPECT_FALSE(a.orbitals.empty());
      }
    }
  }
}

TEST(InducedVertexPerm, IsAHomomorphism) {
  std::mt19937_64 rng(7);
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {8, 3}}) {
    const MergedJohnsonSpec spec(n, k, {1});
    const Graph g = build(spec);
    EXPECT_TRUE(induced_vertex_perm(Permutation::identity(n), spec).is_identity());
    for (int trial = 0; trial < 10; ++trial) {
      const Permutation a = random_permutation(n, rng);
      const Permutation b = random_permutation(n, rng);
      EXPECT_EQ(induced_vertex_perm(compose(a, b), spec),
                compose(induced_vertex_perm(a, spec), induced_vertex_perm(b, spec)));
      EXPECT_TRUE(is_automorphism(g, induced_vertex_perm(a, spec)));
    }
  }
}

TEST(ComplementInvolution, AutomorphismForEveryIndexSet) {
  for (std::vector<int> I : {std::vector<int>{1}, {2}, {3}, {1, 2}, {1, 3}}) {
    const MergedJohnsonSpec spec(6, 3, I);
    const VertexPermutation alpha = complement_involution(spec);
    EXPECT_TRUE(is_automorphism(build(spec), alpha));
    EXPECT_TRUE(compose(alpha, alpha).is_identity());
  }
  EXPECT_THROW(complement_involution(MergedJohnsonSpec(7, 3, {1})), InvalidArgument);
}

TEST(PairSwap, OnlyWhenPrimesAgree) {
  const MergedJohnsonSpec spec(8, 4, {1, 3});
  const Graph g = build(spec);
  for (std::size_t v : {0u, 17u, 69u}) {
    const VertexPermutation beta = pair_swap(v, spec);
    EXPECT_TRUE(is_automorphism(g, beta));
    EXPECT_EQ(beta[v], vertex_of(unrank(v, 8, 4).complement()));
  }
  EXPECT_THROW(pair_swap(0, MergedJohnsonSpec(8, 4, {1})), InvalidArgument);
  EXPECT_THROW(pair_swap(70, spec), InvalidArgument);
}

TEST(ExtendedAction, HandComputedImages) {
  // sigma~ = (inf 1) on [5] plus infinity.
  const Permutation swap_inf = Permutation::from_images({6, 2, 3, 4, 5, 1}, true);
  const MergedJohnsonSpec spec(5, 2, {1, 2});
  const VertexPermutation p = extended_action(swap_inf, spec);
  auto image = [&](std::initializer_list<int> m) {
    return unrank(p[vertex_of(KSubset::from_elements(m, 5))], 5, 2).elements();
  };
  // {1,2,inf} -> {inf,2,1}: the half holding inf is unchanged.
  EXPECT_EQ(image({1, 2}), (std::vector<int>{1, 2}));
  // {3,4,inf} -> {3,4,1} loses inf, so the vertex follows [5] - M = {1,2,5}.
  EXPECT_EQ(image({3, 4}), (std::vector<int>{2, 5}));
}

TEST(ExtendedAction, AutomorphismsAndHomomorphism) {
  std::mt19937_64 rng(11);
  for (std::vector<int> I : {std::vector<int>{1, 3}, {2}}) {
    const MergedJohnsonSpec spec(7, 3, I);
    const Graph g = build(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const Permutation a = random_permutation(7, rng, true);
      const Permutation b = random_permutation(7, rng, true);
      EXPECT_TRUE(is_automorphism(g, extended_action(a, spec)));
      EXPECT_EQ(extended_action(compose(a, b), spec),
                compose(extended_action(a, spec), extended_action(b, spec)));
    }
  }
}

TEST(ExtendedAction, RestrictsToInducedAction) {
  std::mt19937_64 rng(5);
  const MergedJohnsonSpec spec(9, 4, {1, 4});
  for (int trial = 0; trial < 10; ++trial) {
    const Permutation sigma = random_permutation(9, rng);
    std::vector<int> images = sigma.images();
    images.push_back(10);
    EXPECT_EQ(extended_action(Permutation::from_images(images, true), spec),
              induced_vertex_perm(sigma, spec));
  }
}

TEST(ExtendedAction, Preconditions) {
  const Permutation ext = Permutation::identity(7, true);
  EXPECT_THROW(extended_action(ext, MergedJohnsonSpec(7, 3, {1})), InvalidArgument);
  EXPECT_THROW(extended_action(Permutation::identity(7), MergedJohnsonSpec(7, 3, {2})),
               InvalidArgument);
  EXPECT_THROW(extended_action(Permutation::identity(8, true), MergedJohnsonSpec(8, 4, {2})),
               InvalidArgument);
}

TEST(Generators, AutomorphismsWithExpectedOrders) {
  struct Row {
    MergedJohnsonSpec spec;
    BigInt order;
  };
  const std::vector<Row> rows = {
      {MergedJohnsonSpec(7, 2, {1}), factorial(7)},
      {MergedJohnsonSpec(7, 3, {1}), factorial(7)},
      {MergedJohnsonSpec(7, 3, {1, 3}), factorial(8)},
      {MergedJohnsonSpec(6, 3, {1}), 2 * factorial(6)},
      {MergedJohnsonSpec(8, 4, {1, 3}), (BigInt(1) << 35) * factorial(8)},
      {MergedJohnsonSpec(6, 3, {3}), (BigInt(1) << 10) * factorial(10)},
  };
  for (const Row& row : rows) {
    const GeneratorSet gens = generators(classify(row.spec), row.spec);
    EXPECT_TRUE(gens.complete);
    EXPECT_EQ(gens.expected_order, row.order) << row.spec.to_string();
    const Graph g = build(row.spec);
    for (const VertexPermutation& p : gens.generators) EXPECT_TRUE(is_automorphism(g, p));
    EXPECT_EQ(search(g).group_order, row.order) << row.spec.to_string();
  }
}

TEST(Generators, ExceptionalCaseIsFlaggedIncomplete) {
  const MergedJohnsonSpec spec(12, 4, {1, 3});
  const GeneratorSet gens = generators(classify(spec), spec);
  EXPECT_FALSE(gens.complete);
  EXPECT_EQ(gens.expected_order, factorial(12));
}

TEST(Equipartitions, CountAndNormalForm) {
  for (int m = 1; m <= 6; ++m) {
    const auto parts = equipartitions(m);
    EXPECT_EQ(parts.size(), testing::pascal(2 * m, m) / 2);
    for (const Equipartition& p : parts) EXPECT_TRUE(p.part().contains(1));
  }
  EXPECT_THROW(Equipartition(KSubset::from_elements({1}, 4)), InvalidArgument);
  EXPECT_EQ(Equipartition(KSubset::from_elements({3, 4}, 4)).part().elements(),
            (std::vector<int>{1, 2}));
}

TEST(FixedEquipartitions, ClosedFormsByEnumeration) {
  for (int m = 3; m <= 5; ++m) {
    const int n = 2 * m;
    EXPECT_EQ(count_fixed_equipartitions(transposition(1, n)),
              testing::pascal(2 * m - 2, m - 2));
    const BigInt matching = count_fixed_equipartitions(product_of_transpositions(m, n));
    if (m % 2 == 1) {
      EXPECT_EQ(matching, BigInt(1) << (m - 1));
    } else {
      // Unions of pairs are counted as unordered splits, hence the half.
      EXPECT_EQ(matching, (BigInt(1) << (m - 1)) + testing::pascal(m, m / 2) / 2);
    }
  }
  EXPECT_EQ(count_fixed_equipartitions(Permutation::from_cycles("(1 2)", 8)), 15);
  EXPECT_EQ(count_fixed_equipartitions(Permutation::from_cycles("(1 2)(3 4)(5 6)", 6)), 4);
  EXPECT_EQ(count_fixed_equipartitions(Permutation::from_cycles("(1 2)(3 4)(5 6)(7 8)", 8)), 11);
  EXPECT_EQ(count_fixed_equipartitions(Permutation::identity(8)), 35);
  EXPECT_THROW(count_fixed_equipartitions(Permutation::identity(7)), InvalidArgument);
}

TEST(FixedEquipartitions, ConjugationInvariant) {
  std::mt19937_64 rng(3);
  for (int m : {3, 4}) {
    for (const Permutation& sigma : cycle_type_representatives(2 * m)) {
      const Permutation tau = random_permutation(2 * m, rng);
      EXPECT_EQ(count_fixed_equipartitions(sigma),
                count_fixed_equipartitions(compose(compose(tau, sigma), inverse(tau))));
    }
  }
}

TEST(FixedEquipartitions, MaximumOverCycleTypes) {
  BigInt best = 0;
  for (const Permutation& sigma : cycle_type_representatives(8)) {
    if (!sigma.is_identity()) best = std::max(best, count_fixed_equipartitions(sigma));
  }
  EXPECT_EQ(best, 15);
  EXPECT_EQ(max_fixed_bound(4), 15);
  EXPECT_EQ(max_fixed_bound(5), 56);
  EXPECT_THROW(max_fixed_bound(3), InvalidArgument);
}

TEST(LemmaBound, ExactValues) {
  const LemmaBound b4 = lemma_bound(4);
  EXPECT_EQ(b4.exponent_num(), 10);
  EXPECT_EQ(b4.exponent_den(), 1);
  EXPECT_EQ(b4.to_string(), "40320/59049");
  const auto [p, q] = b4.as_fraction();
  // 40320/3^10 is 4480/3^8.
  EXPECT_EQ(p * 6561, q * 4480);
  EXPECT_TRUE(b4.less_than_one());
  EXPECT_NEAR(b4.approx(), 40320.0 / 59049.0, 1e-12);

  const LemmaBound b5 = lemma_bound(5);
  EXPECT_EQ(b5.exponent_num(), 35);
  EXPECT_EQ(b5.factorial_term(), 3628800);
  EXPECT_TRUE(b5.less_than_one());
  for (int m = 4; m <= 10; ++m) EXPECT_TRUE(lemma_bound(m).less_than_one()) << m;
  EXPECT_THROW(lemma_bound(3), InvalidArgument);
}

}  // namespace
}  // namespace mjdist
