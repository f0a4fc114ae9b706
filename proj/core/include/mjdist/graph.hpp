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

#ifndef MJDIST_GRAPH_HPP_
#define MJDIST_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mjdist/combinatorics.hpp"

namespace mjdist {

// Default cap on binom(n, k) for build(). Adjacency is stored as one bit row
// per vertex, so memory grows with the square of this number.
inline constexpr std::uint64_t kDefaultVertexBudget = 20000;

// The triple (n, k, I) describing J(n,k)_I, where two k-subsets are adjacent
// iff their intersection has k - i elements for some i in I.
class MergedJohnsonSpec {
 public:
  // Stores the triple as given; use canonicalize() for validated input.
  MergedJohnsonSpec(int n, int k, std::vector<int> index_set);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<int>& index_set() const { return index_set_; }
  bool contains(int i) const;

  // I = {1, ..., k}: every pair of distinct vertices is adjacent.
  bool is_full() const;

  // I' = I \ {k}.
  std::vector<int> i_prime() const;
  // I'' = k - I'.
  std::vector<int> i_double_prime() const;
  // t - I.
  std::vector<int> shifted(int t) const;

  // e = binom(n, n/2) / 2; only defined for even n.
  std::optional<BigInt> e() const;

  std::uint64_t num_vertices() const { return binom_u64(n_, k_); }

  // "J(12,4)_{1,3}"
  std::string to_string() const;

  friend bool operator==(const MergedJohnsonSpec&,
                         const MergedJohnsonSpec&) = default;

 private:
  int n_;
  int k_;
  std::vector<int> index_set_;  // sorted, distinct
};

// Validates (n, k, I) and replaces k by n - k when k > n/2.
// Throws EmptyIndexSet for I = {} and InvalidArgument for anything else out
// of range.
MergedJohnsonSpec canonicalize(int n, int k, std::vector<int> index_set);

// Simple undirected graph on vertices 0..n-1 with packed bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices);

  static Graph from_edges(std::size_t num_vertices,
                          std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t words_per_row() const { return words_; }

  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(std::size_t u) const {
    return {rows_.data() + u * words_, words_};
  }

  std::size_t degree(std::size_t u) const;
  std::size_t edge_count() const;

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Vertex subsets, set when the graph was built from a spec.
  const std::vector<KSubset>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  void set_labels(std::vector<KSubset> labels);

  // Index of each vertex in the graph this one was cut from; identity for
  // graphs that are not induced subgraphs.
  std::size_t origin(std::size_t v) const {
    return origin_.empty() ? v : origin_[v];
  }
  void set_origins(std::vector<std::size_t> origins);

  // Number of connected components.
  std::size_t component_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<KSubset> labels_;
  std::vector<std::size_t> origin_;
};

// All k-subsets of [n] in colexicographic order, adjacent when the
// intersection size lies in k - I. Throws BudgetExceeded when
// binom(n, k) > vertex_budget.
Graph build(const MergedJohnsonSpec& spec,
            std::uint64_t vertex_budget = kDefaultVertexBudget);

Graph complement(const Graph& g);

// Subgraph on the listed vertices, in the given order. Labels and origin
// indices are carried over.
Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices);

// Degree -> vertices of that degree, each list ascending.
std::map<std::size_t, std::vector<std::size_t>> degree_partition(const Graph& g);

// Vertex index of a subset in a graph built from a spec.
std::size_t vertex_of(const KSubset& subset);

}  // namespace mjdist

#endif  // MJDIST_GRAPH_HPP_
