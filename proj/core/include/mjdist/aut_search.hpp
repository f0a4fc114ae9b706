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

#ifndef MJDIST_AUT_SEARCH_HPP_
#define MJDIST_AUT_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mjdist/combinatorics.hpp"
#include "mjdist/graph.hpp"

namespace mjdist {

// One color id in [0, num_colors) per vertex.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<int> colors, int num_colors);

  // Every vertex gets color 0.
  static Coloring uniform(std::size_t num_vertices);

  std::size_t size() const { return colors_.size(); }
  int num_colors() const { return num_colors_; }
  int operator[](std::size_t v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }

  // Number of colors that actually occur.
  int distinct_colors() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> colors_;
  int num_colors_ = 0;
};

// A bijection of the vertex indices of a graph.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<std::size_t> images);

  static VertexPermutation identity(std::size_t n);

  std::size_t size() const { return images_.size(); }
  std::size_t operator[](std::size_t v) const { return images_[v]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const VertexPermutation&,
                         const VertexPermutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// compose(a, b)[v] = a[b[v]].
VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b);
VertexPermutation inverse(const VertexPermutation& p);

struct SearchOptions {
  // Each individualize-and-refine step counts as one node.
  std::uint64_t node_budget = 100'000'000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::size_t depth = 0;  // length of the first path
  double seconds = 0.0;
};

struct SearchResult {
  std::vector<VertexPermutation> generators;
  BigInt group_order = 1;
  SearchStats stats;
};

bool is_automorphism(const Graph& g, const VertexPermutation& p);

// Generators and exact order of the group of automorphisms of g that keep
// every color class of `coloring` invariant and fix each vertex of `fixed`.
// Throws BudgetExceeded instead of returning a partial order.
SearchResult search(const Graph& g, const Coloring& coloring,
                    std::span<const std::size_t> fixed = {},
                    const SearchOptions& options = {});
SearchResult search(const Graph& g, std::span<const std::size_t> fixed = {},
                    const SearchOptions& options = {});

// Stops at the first non-identity automorphism respecting the constraints.
std::optional<VertexPermutation> find_nontrivial_automorphism(
    const Graph& g, const Coloring& coloring,
    std::span<const std::size_t> fixed = {}, const SearchOptions& options = {});

bool is_asymmetric(const Graph& g, const SearchOptions& options = {});

// True iff only the identity fixes every vertex of `vertices`.
bool is_determining_set(const Graph& g, std::span<const std::size_t> vertices,
                        const SearchOptions& options = {});

// True iff only the identity preserves every color class.
bool is_distinguishing(const Graph& g, const Coloring& coloring,
                       const SearchOptions& options = {});

// `set_colors[i]` is the color of `vertices[i]`. True iff every automorphism
// that maps each color class of the set onto itself fixes the set pointwise.
bool is_set_distinguishing(const Graph& g, std::span<const std::size_t> vertices,
                           std::span<const int> set_colors,
                           const SearchOptions& options = {});

}  // namespace mjdist

#endif  // MJDIST_AUT_SEARCH_HPP_
