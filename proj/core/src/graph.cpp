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

#include "mjdist/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "mjdist/errors.hpp"

namespace mjdist {

MergedJohnsonSpec::MergedJohnsonSpec(int n, int k, std::vector<int> index_set)
    : n_(n), k_(k), index_set_(std::move(index_set)) {
  std::sort(index_set_.begin(), index_set_.end());
  index_set_.erase(std::unique(index_set_.begin(), index_set_.end()),
                   index_set_.end());
}

bool MergedJohnsonSpec::contains(int i) const {
  return std::binary_search(index_set_.begin(), index_set_.end(), i);
}

bool MergedJohnsonSpec::is_full() const {
  return static_cast<int>(index_set_.size()) == k_ &&
         (index_set_.empty() || (index_set_.front() == 1 && index_set_.back() == k_));
}

std::vector<int> MergedJohnsonSpec::i_prime() const {
  std::vector<int> out;
  for (int i : index_set_) {
    if (i != k_) out.push_back(i);
  }
  return out;
}

std::vector<int> MergedJohnsonSpec::i_double_prime() const {
  std::vector<int> out;
  for (int i : i_prime()) out.push_back(k_ - i);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MergedJohnsonSpec::shifted(int t) const {
  std::vector<int> out;
  for (int i : index_set_) out.push_back(t - i);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<BigInt> MergedJohnsonSpec::e() const {
  if (n_ % 2 != 0) return std::nullopt;
  return binom(n_, n_ / 2) / 2;
}

std::string MergedJohnsonSpec::to_string() const {
  std::string out = "J(" + std::to_string(n_) + "," + std::to_string(k_) + ")_{";
  for (std::size_t i = 0; i < index_set_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(index_set_[i]);
  }
  return out + "}";
}

MergedJohnsonSpec canonicalize(int n, int k, std::vector<int> index_set) {
  if (n < 2 || n > kMaxGroundSet) {
    throw InvalidArgument("n must lie in 2.." + std::to_string(kMaxGroundSet));
  }
  if (k < 1 || k > n - 1) throw InvalidArgument("k must satisfy 1 <= k <= n - 1");
  if (index_set.empty()) {
    throw EmptyIndexSet("index set I is empty: J(n,k)_{} is the null graph");
  }
  const int top = std::min(k, n - k);
  for (int i : index_set) {
    if (i < 1 || i > top) {
      throw InvalidArgument("index " + std::to_string(i) + " outside 1.." +
                            std::to_string(top));
    }
  }
  if (2 * k > n) k = n - k;
  return MergedJohnsonSpec(n, k, std::move(index_set));
}

Graph::Graph(std::size_t num_vertices)
    : n_(num_vertices),
      words_((num_vertices + 63) / 64),
      rows_(num_vertices * ((num_vertices + 63) / 64), 0) {}

Graph Graph::from_edges(std::size_t num_vertices,
                        std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Graph g(num_vertices);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InvalidArgument("edge endpoint out of range");
  if (u == v) throw InvalidArgument("loops are not allowed");
  rows_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::size_t Graph::degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : rows_) total += std::popcount(w);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u) {
    auto r = row(u);
    for (std::size_t w = (u + 1) >> 6; w < words_; ++w) {
      std::uint64_t bits = r[w];
      if (w == ((u + 1) >> 6)) bits &= ~std::uint64_t{0} << ((u + 1) & 63);
      for (; bits != 0; bits &= bits - 1) {
        out.emplace_back(u, w * 64 + std::countr_zero(bits));
      }
    }
  }
  return out;
}

void Graph::set_labels(std::vector<KSubset> labels) {
  if (!labels.empty() && labels.size() != n_) {
    throw InvalidArgument("label table size differs from vertex count");
  }
  labels_ = std::move(labels);
}

void Graph::set_origins(std::vector<std::size_t> origins) {
  if (!origins.empty() && origins.size() != n_) {
    throw InvalidArgument("origin table size differs from vertex count");
  }
  origin_ = std::move(origins);
}

std::size_t Graph::component_count() const {
  std::vector<bool> seen(n_, false);
  std::vector<std::size_t> stack;
  std::size_t components = 0;
  for (std::size_t s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      auto r = row(u);
      for (std::size_t w = 0; w < words_; ++w) {
        for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
          const std::size_t v = w * 64 + std::countr_zero(bits);
          if (!seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
    }
  }
  return components;
}

Graph build(const MergedJohnsonSpec& spec, std::uint64_t vertex_budget) {
  const int n = spec.n();
  const int k = spec.k();
  const std::uint64_t count = spec.num_vertices();
  if (count > vertex_budget) {
    throw BudgetExceeded(spec.to_string() + " has " + std::to_string(count) +
                         " vertices, above the vertex budget of " +
                         std::to_string(vertex_budget));
  }
  // adjacent_size[s] is true when an intersection of size s is an edge.
  std::vector<bool> adjacent_size(k + 1, false);
  for (int i : spec.index_set()) adjacent_size[k - i] = true;

  std::vector<KSubset> labels;
  labels.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) labels.push_back(unrank(r, n, k));

  Graph g(count);
  for (std::size_t u = 0; u < count; ++u) {
    const std::uint64_t bu = labels[u].bits();
    for (std::size_t v = u + 1; v < count; ++v) {
      if (adjacent_size[std::popcount(bu & labels[v].bits())]) g.add_edge(u, v);
    }
  }
  g.set_labels(std::move(labels));
  return g;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Graph out(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  out.set_labels(g.labels());
  std::vector<std::size_t> origins;
  origins.reserve(n);
  bool identity = true;
  for (std::size_t v = 0; v < n; ++v) {
    origins.push_back(g.origin(v));
    identity = identity && g.origin(v) == v;
  }
  if (!identity) out.set_origins(std::move(origins));
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const std::size_t> vertices) {
  std::vector<bool> used(g.num_vertices(), false);
  for (std::size_t v : vertices) {
    if (v >= g.num_vertices()) throw InvalidArgument("vertex index out of range");
    if (used[v]) throw InvalidArgument("duplicate vertex in induced subgraph");
    used[v] = true;
  }
  const std::size_t m = vertices.size();
  Graph out(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (g.adjacent(vertices[a], vertices[b])) out.add_edge(a, b);
    }
  }
  if (g.has_labels()) {
    std::vector<KSubset> labels;
    labels.reserve(m);
    for (std::size_t v : vertices) labels.push_back(g.labels()[v]);
    out.set_labels(std::move(labels));
  }
  std::vector<std::size_t> origins;
  origins.reserve(m);
  for (std::size_t v : vertices) origins.push_back(g.origin(v));
  out.set_origins(std::move(origins));
  return out;
}

std::map<std::size_t, std::vector<std::size_t>> degree_partition(const Graph& g) {
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    out[g.degree(v)].push_back(v);
  }
  return out;
}

std::size_t vertex_of(const KSubset& subset) {
  return static_cast<std::size_t>(rank(subset));
}

}  // namespace mjdist
