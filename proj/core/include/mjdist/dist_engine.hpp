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

#ifndef MJDIST_DIST_ENGINE_HPP_
#define MJDIST_DIST_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mjdist/aut_search.hpp"
#include "mjdist/graph.hpp"

namespace mjdist {

// The eight instance families of the main theorem, plus the degenerate
// complete or edgeless graphs (k = 1, I full, I empty).
enum class DistCase {
  kComplete = 0,
  kGeneric = 1,       // 2 <= k < (n-1)/2, not J(12,4)_{1,3} / _{2,4}
  kExceptional = 2,   // J(12,4)_{1,3} or _{2,4}
  kPetersen = 3,      // J(5,2)_{1} or _{2}
  kOddPlain = 4,      // k = (n-1)/2, I != k+1-I
  kOddReflexive = 5,  // k = (n-1)/2, I == k+1-I
  kEvenPlain = 6,     // k = n/2, I' != I'', I not {k} or {1..k-1}
  kEvenPairSwap = 7,  // k = n/2, I' == I'', I not {k} or {1..k-1}
  kEvenMatching = 8,  // k = n/2, I = {k} or {1..k-1}
};

// "complete" or the case number.
std::string to_string(DistCase c);

// Expects a canonical spec (k <= n/2). An empty index set is accepted and
// classified with the complete graphs.
DistCase dist_case(const MergedJohnsonSpec& spec);

struct DistOptions {
  std::uint64_t seed = 0;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  SearchOptions search;
  // Samples drawn by random_3_coloring and restarts of the set search.
  int max_attempts = 100;
};

struct Certificate {
  MergedJohnsonSpec spec{2, 1, {1}};
  DistCase dist_case = DistCase::kComplete;
  int dist = 0;
  Coloring coloring;
  std::string upper_method;
  std::vector<std::size_t> detset;
  std::optional<std::uint64_t> seed;
  std::string lower_method;
  std::string lower_detail;
};

// Computes Dist(J(n,k)_I) with a witness coloring and lower-bound evidence.
// The result has already passed verify_certificate. The spec must be
// canonical; an empty index set gives the edgeless graph.
Certificate distinguishing_number(const MergedJohnsonSpec& spec,
                                  const DistOptions& options = {});

// Same, for a raw triple: validates and canonicalizes first, and maps I = {}
// to the edgeless graph instead of rejecting it.
Certificate distinguishing_number(int n, int k, std::vector<int> index_set,
                                  const DistOptions& options = {});

// Smallest r with binom(r, 2) >= binom(2m, m) / 2, by integer search.
std::uint64_t case8_value(int m);

// Each complementary pair {v, v-bar} gets its own unordered pair of colors;
// the side containing 1 gets the smaller color. Components follow the colex
// order of that side, color pairs follow lexicographic order. Throws
// InvalidArgument when binom(r, 2) < binom(2m, m) / 2.
Coloring matching_coloring(int m, int r);

struct DeterminingSet {
  std::vector<std::size_t> vertices;
  std::string family;
};

// The explicit determining sets for J(12,4)_{1,3}, J(2m+1,m)_{1,m} and
// J(2m,m)_{1} (m >= 3), and for the instances sharing their automorphism
// group. Throws Unsupported for any other spec.
DeterminingSet determining_set_for(const MergedJohnsonSpec& spec);

struct UpperWitness {
  Coloring coloring;
  std::string method;
  std::vector<std::size_t> detset;
  std::optional<std::uint64_t> seed;
};

// The distinguishing coloring used as the upper bound for the spec's case.
UpperWitness case_coloring(const MergedJohnsonSpec& spec, const Graph& g,
                           const DistOptions& options = {});

// Extends the coloring `set_colors` of S by one fresh color on the rest of
// the graph. Throws InvalidArgument if S is not determining or the colors
// do not make S set-distinguishable.
Coloring coloring_from_detset(const Graph& g, std::span<const std::size_t> set,
                              std::span<const int> set_colors,
                              const SearchOptions& options = {});

// For n = 2m, m >= 4 and I' = I'', a non-identity automorphism of the graph
// that preserves the given coloring with at most two colors.
VertexPermutation breaking_automorphism(const MergedJohnsonSpec& spec,
                                        const Graph& g, const Coloring& c);
VertexPermutation breaking_automorphism(const MergedJohnsonSpec& spec,
                                        const Coloring& c);

struct RandomColoring {
  Coloring coloring;
  int attempts = 0;
};

// Samples colorings with c(u) != c(u-bar) until one is distinguishing.
// Throws BudgetExceeded after max_attempts failures.
RandomColoring random_3_coloring(const MergedJohnsonSpec& spec, const Graph& g,
                                 std::uint64_t seed, int max_attempts,
                                 const SearchOptions& options = {});

// Enumeration cap for exhaustive colorings, counted as r^|V|.
inline constexpr double kEnumerationBudget = 1e8;

// A distinguishing coloring with at most r colors, by enumerating colorings
// up to renaming of colors. Throws BudgetExceeded when r^|V| is too large.
std::optional<Coloring> find_distinguishing_coloring(
    const Graph& g, int r, const SearchOptions& options = {});

// Minimum r <= max_r admitting a distinguishing coloring. Throws
// BudgetExceeded if enumeration is too large or no r <= max_r works.
int brute_force_dist(const Graph& g, int max_r, const SearchOptions& options = {});

struct Verification {
  bool ok = false;
  std::string reason;
};

// Rebuilds the graph and re-checks the witness and the lower bound.
Verification verify_certificate(const Certificate& cert,
                                const DistOptions& options = {});

}  // namespace mjdist

#endif  // MJDIST_DIST_ENGINE_HPP_
