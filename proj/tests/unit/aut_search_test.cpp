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

#include "mjdist/aut_search.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mjdist/errors.hpp"
#include "test_oracles.hpp"

namespace mjdist {
namespace {

using testing::brute_force_aut_count;

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void expect_generators_valid(const Graph& g, const SearchResult& r) {
  for (const VertexPermutation& p : r.generators) {
    EXPECT_TRUE(is_automorphism(g, p));
    EXPECT_FALSE(p.is_identity());
  }
}

TEST(Coloring, Validates) {
  EXPECT_THROW(Coloring({0, 2}, 2), InvalidArgument);
  EXPECT_THROW(Coloring({-1}, 2), InvalidArgument);
  const Coloring c({0, 2, 2}, 3);
  EXPECT_EQ(c.distinct_colors(), 2);
  EXPECT_EQ(Coloring::uniform(4).num_colors(), 1);
}

TEST(VertexPermutation, ComposeAndInverse) {
  const VertexPermutation a({1, 2, 0});
  const VertexPermutation b({1, 0, 2});
  EXPECT_EQ(compose(a, b)[0], 2u);
  EXPECT_TRUE(compose(a, inverse(a)).is_identity());
  EXPECT_THROW(VertexPermutation({0, 0}), InvalidArgument);
}

TEST(Search, ClassicalGroupOrders) {
  EXPECT_EQ(search(testing::cycle_graph(5)).group_order, 10);
  EXPECT_EQ(search(testing::cycle_graph(12)).group_order, 24);
  EXPECT_EQ(search(testing::complete_graph(6)).group_order, 720);
  EXPECT_EQ(search(Graph(7)).group_order, 5040);
  EXPECT_EQ(search(testing::path_graph(6)).group_order, 2);
  EXPECT_EQ(search(testing::asymmetric_six()).group_order, 1);
  EXPECT_EQ(search(Graph(0)).group_order, 1);
}

TEST(Search, JohnsonGroupOrders) {
  // Petersen graph and its complement: S_5.
  EXPECT_EQ(search(build(MergedJohnsonSpec(5, 2, {2}))).group_order, 120);
  EXPECT_EQ(search(build(MergedJohnsonSpec(5, 2, {1}))).group_order, 120);
  // J(4,2) is the octahedron.
  EXPECT_EQ(search(build(MergedJohnsonSpec(4, 2, {1}))).group_order, 48);
  // Three disjoint edges.
  EXPECT_EQ(search(build(MergedJohnsonSpec(4, 2, {2}))).group_order, 48);
  EXPECT_EQ(search(build(MergedJohnsonSpec(9, 3, {2}))).group_order, factorial(9));
}

TEST(Search, AgreesWithBruteForceOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 4 + seed % 5;
    const Graph g = random_graph(n, seed % 3 == 0 ? 0.3 : 0.5, seed);
    const SearchResult r = search(g);
    EXPECT_EQ(r.group_order, brute_force_aut_count(g)) << "seed " << seed;
    expect_generators_valid(g, r);
  }
}

TEST(Search, ColoredAgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 5 + seed % 4;
    const Graph g = random_graph(n, 0.4, 100 + seed);
    std::mt19937_64 rng(seed);
    std::vector<int> colors(n);
    for (int& c : colors) c = static_cast<int>(rng() % 2);
    const SearchResult r = search(g, Coloring(colors, 2));
    EXPECT_EQ(r.group_order, brute_force_aut_count(g, colors)) << "seed " << seed;
    for (const VertexPermutation& p : r.generators) {
      for (std::size_t v = 0; v < n; ++v) EXPECT_EQ(colors[v], colors[p[v]]);
    }
  }
}

TEST(Search, FixedVerticesGivePointwiseStabilizer) {
  const Graph c6 = testing::cycle_graph(6);
  const std::vector<std::size_t> one = {0};
  const std::vector<std::size_t> opposite = {0, 3};
  const std::vector<std::size_t> adjacent = {0, 1};
  EXPECT_EQ(search(c6, one).group_order, 2);
  EXPECT_EQ(search(c6, opposite).group_order, 2);
  EXPECT_EQ(search(c6, adjacent).group_order, 1);
}

TEST(Search, GeneratorsAreAutomorphisms) {
  const Graph g = build(MergedJohnsonSpec(8, 4, {1, 3}));
  const SearchResult r = search(g);
  EXPECT_EQ(r.group_order, (BigInt(1) << 35) * factorial(8));
  expect_generators_valid(g, r);
  EXPECT_GT(r.stats.nodes, 0u);
}

TEST(Search, NodeBudget) {
  SearchOptions tiny;
  tiny.node_budget = 2;
  EXPECT_THROW(search(build(MergedJohnsonSpec(8, 4, {4})), {}, tiny), BudgetExceeded);
}

TEST(Search, RejectsBadArguments) {
  const Graph g = testing::cycle_graph(4);
  EXPECT_THROW(search(g, Coloring::uniform(3)), InvalidArgument);
  const std::vector<std::size_t> bad = {7};
  EXPECT_THROW(search(g, bad), InvalidArgument);
}

TEST(FindNontrivial, StopsEarlyOrReportsNone) {
  const Graph g = build(MergedJohnsonSpec(8, 4, {4}));
  const auto p = find_nontrivial_automorphism(g, Coloring::uniform(g.num_vertices()));
  ASSERT_TRUE(p.has_value());
  EXPECT_TRUE(is_automorphism(g, *p));
  EXPECT_FALSE(p->is_identity());
  const Graph a = testing::asymmetric_six();
  EXPECT_FALSE(find_nontrivial_automorphism(a, Coloring::uniform(6)).has_value());
}

TEST(Predicates, AsymmetricDeterminingDistinguishing) {
  EXPECT_TRUE(is_asymmetric(testing::asymmetric_six()));
  EXPECT_FALSE(is_asymmetric(testing::cycle_graph(5)));

  // Det(C_5) = 2: two adjacent vertices determine, one does not.
  const Graph c5 = testing::cycle_graph(5);
  const std::vector<std::size_t> single = {0};
  const std::vector<std::size_t> pair = {0, 1};
  EXPECT_FALSE(is_determining_set(c5, single));
  EXPECT_TRUE(is_determining_set(c5, pair));

  // C_6: coloring one path of three vertices breaks every symmetry.
  const Graph c6 = testing::cycle_graph(6);
  EXPECT_TRUE(is_distinguishing(c6, Coloring({1, 1, 1, 0, 0, 0}, 2)) ==
              (brute_force_aut_count(c6, {1, 1, 1, 0, 0, 0}) == 1));
  EXPECT_FALSE(is_distinguishing(c6, Coloring::uniform(6)));
  EXPECT_TRUE(is_distinguishing(c6, Coloring({1, 1, 0, 1, 0, 0}, 2)));
}

TEST(Predicates, SetDistinguishing) {
  const Graph c5 = testing::cycle_graph(5);
  const std::vector<std::size_t> pair = {0, 1};
  // The reflection swapping 0 and 1 maps the set onto itself.
  EXPECT_FALSE(is_set_distinguishing(c5, pair, std::vector<int>{0, 0}));
  EXPECT_TRUE(is_set_distinguishing(c5, pair, std::vector<int>{0, 1}));
  const std::vector<std::size_t> triple = {0, 1, 3};
  EXPECT_TRUE(is_set_distinguishing(c5, triple, std::vector<int>{0, 0, 0}) ==
              (brute_force_aut_count(c5, {0, 0, 1, 0, 1}) == 1));
}

}  // namespace
}  // namespace mjdist
