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

#ifndef MJDIST_TESTS_TEST_ORACLES_HPP_
#define MJDIST_TESTS_TEST_ORACLES_HPP_

// Independent reference implementations used to check the library. They
// favor obviousness over speed and share no code with core/.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "mjdist/graph.hpp"

namespace mjdist::testing {

// Pascal's rule in 64 bits, rows up to 62.
inline std::uint64_t pascal(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::vector<std::vector<std::uint64_t>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[n][r];
}

// All k-subsets of {1..n} as sorted element lists, in colex order: compare
// the largest elements first.
inline std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) s.push_back(i + 1);
    }
    out.push_back(s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

// Adjacency matrix of J(n,k)_I straight from the definition.
inline std::vector<std::vector<bool>> johnson_matrix(int n, int k, const std::vector<int>& I) {
  const auto subsets = colex_subsets(n, k);
  const std::size_t count = subsets.size();
  std::vector<std::vector<bool>> adj(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      std::vector<int> common;
      std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                            subsets[b].end(), std::back_inserter(common));
      const int i = k - static_cast<int>(common.size());
      adj[a][b] = std::find(I.begin(), I.end(), i) != I.end();
    }
  }
  return adj;
}

// Every permutation of the vertices that preserves adjacency and colors.
// Only for graphs with at most about 9 vertices.
inline std::uint64_t brute_force_aut_count(const Graph& g, const std::vector<int>& colors = {}) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      if (!colors.empty() && colors[u] != colors[p[u]]) ok = false;
      for (std::size_t v = u + 1; v < n && ok; ++v) {
        if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) ok = false;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Six vertices, no symmetry: triangle 1-2-5 with a pendant 0 on vertex 1
// and a two-edge tail 3-4 on vertex 2.
inline Graph asymmetric_six() {
  Graph g(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {1, 5}}) {
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace mjdist::testing

#endif  // MJDIST_TESTS_TEST_ORACLES_HPP_
