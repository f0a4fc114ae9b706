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

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <numeric>
#include <string>

#include "mjdist/errors.hpp"

namespace mjdist {

Coloring::Coloring(std::vector<int> colors, int num_colors)
    : colors_(std::move(colors)), num_colors_(num_colors) {
  if (num_colors_ < 0) throw InvalidArgument("negative color count");
  for (int c : colors_) {
    if (c < 0 || c >= num_colors_) {
      throw InvalidArgument("color id " + std::to_string(c) + " outside [0, " +
                            std::to_string(num_colors_) + ")");
    }
  }
}

Coloring Coloring::uniform(std::size_t num_vertices) {
  return Coloring(std::vector<int>(num_vertices, 0), 1);
}

int Coloring::distinct_colors() const {
  std::vector<bool> used(num_colors_, false);
  int count = 0;
  for (int c : colors_) {
    if (!used[c]) {
      used[c] = true;
      ++count;
    }
  }
  return count;
}

VertexPermutation::VertexPermutation(std::vector<std::size_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InvalidArgument("vertex map is not a bijection");
    }
    seen[v] = true;
  }
}

VertexPermutation VertexPermutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return VertexPermutation(std::move(images));
}

bool VertexPermutation::is_identity() const {
  for (std::size_t v = 0; v < images_.size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("vertex maps of different sizes");
  std::vector<std::size_t> images(a.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = a[b[v]];
  return VertexPermutation(std::move(images));
}

VertexPermutation inverse(const VertexPermutation& p) {
  std::vector<std::size_t> images(p.size());
  for (std::size_t v = 0; v < images.size(); ++v) images[p[v]] = v;
  return VertexPermutation(std::move(images));
}

namespace {

// Edge-preservation check on raw images; with a bijection and equal edge
// counts on both sides this is equivalent to being an automorphism.
template <typename Images>
bool preserves_edges(const Graph& g, const Images& images) {
  const std::size_t words = g.words_per_row();
  for (std::size_t u = 0; u < g.num_vertices(); ++u) {
    auto r = g.row(u);
    const std::size_t gu = images[u];
    for (std::size_t w = 0; w < words; ++w) {
      for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        const std::size_t v = w * 64 + std::countr_zero(bits);
        if (!g.adjacent(gu, images[v])) return false;
      }
    }
  }
  return true;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
  }
  void absorb(const std::vector<int>& images) {
    for (std::size_t v = 0; v < images.size(); ++v) {
      unite(static_cast<int>(v), images[v]);
    }
  }

 private:
  std::vector<int> parent_;
};

// Ordered partition of the vertex set. Cells are identified by the position
// of their first element.
struct Partition {
  std::vector<int> elems;
  std::vector<int> pos;
  std::vector<int> cell_of;
  std::vector<int> cell_len;
  int num_cells = 0;

  bool discrete() const { return num_cells == static_cast<int>(elems.size()); }
};

inline void mix(std::uint64_t& h, std::uint64_t value) {
  h ^= value + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
}

// Equitable refinement by adjacency counts. The result and the returned
// trace depend only on the cell structure, so two partitions related by an
// automorphism refine to partitions related by the same automorphism and
// produce equal traces.
class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        n_(static_cast<int>(g.num_vertices())),
        count_(g.num_vertices(), 0),
        mask_(g.words_per_row(), 0),
        in_queue_(g.num_vertices(), 0) {}

  std::uint64_t refine(Partition& p, std::span<const int> splitters) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    queue_.clear();
    for (int s : splitters) push(s);
    std::size_t head = 0;
    while (head < queue_.size()) {
      const int w = queue_[head++];
      in_queue_[w] = 0;
      if (p.discrete()) continue;
      const int wlen = p.cell_len[w];
      mix(h, static_cast<std::uint64_t>(w));
      int single = -1;
      if (wlen == 1) {
        single = p.elems[w];
      } else {
        std::fill(mask_.begin(), mask_.end(), 0);
        for (int i = w; i < w + wlen; ++i) {
          const int v = p.elems[i];
          mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
        }
      }
      for (int s = 0; s < n_;) {
        const int len = p.cell_len[s];
        const int next = s + len;
        if (len > 1) {
          int lo = INT_MAX;
          int hi = -1;
          for (int i = s; i < next; ++i) {
            const int u = p.elems[i];
            int c;
            if (single >= 0) {
              c = g_.adjacent(u, single) ? 1 : 0;
            } else {
              c = 0;
              auto r = g_.row(u);
              for (std::size_t x = 0; x < mask_.size(); ++x) {
                c += std::popcount(r[x] & mask_[x]);
              }
            }
            count_[u] = c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo != hi) {
            split(p, s, len, h);
          } else {
            mix(h, (static_cast<std::uint64_t>(s) << 32) ^ static_cast<std::uint64_t>(lo));
          }
        }
        s = next;
      }
    }
    for (int s : queue_) in_queue_[s] = 0;
    mix(h, static_cast<std::uint64_t>(p.num_cells));
    return h;
  }

 private:
  void push(int s) {
    if (!in_queue_[s]) {
      in_queue_[s] = 1;
      queue_.push_back(s);
    }
  }

  void split(Partition& p, int s, int len, std::uint64_t& h) {
    auto first = p.elems.begin() + s;
    std::sort(first, first + len, [&](int a, int b) {
      return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
    });
    const bool was_queued = in_queue_[s] != 0;
    fragments_.clear();
    int start = s;
    for (int i = s; i <= s + len; ++i) {
      if (i == s + len || (i > start && count_[p.elems[i]] != count_[p.elems[start]])) {
        fragments_.push_back({start, i - start});
        mix(h, (static_cast<std::uint64_t>(start) << 40) ^
                   (static_cast<std::uint64_t>(count_[p.elems[start]]) << 20) ^
                   static_cast<std::uint64_t>(i - start));
        start = i;
      }
    }
    for (const auto& [fs, fl] : fragments_) {
      p.cell_len[fs] = fl;
      for (int i = fs; i < fs + fl; ++i) {
        p.cell_of[p.elems[i]] = fs;
        p.pos[p.elems[i]] = i;
      }
    }
    p.num_cells += static_cast<int>(fragments_.size()) - 1;
    if (was_queued) {
      for (std::size_t f = 1; f < fragments_.size(); ++f) push(fragments_[f].first);
    } else {
      std::size_t largest = 0;
      for (std::size_t f = 1; f < fragments_.size(); ++f) {
        if (fragments_[f].second > fragments_[largest].second) largest = f;
      }
      for (std::size_t f = 0; f < fragments_.size(); ++f) {
        if (f != largest) push(fragments_[f].first);
      }
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> count_;
  std::vector<std::uint64_t> mask_;
  std::vector<char> in_queue_;
  std::vector<int> queue_;
  std::vector<std::pair<int, int>> fragments_;
};

// Individualization-refinement search. The first path is followed to a
// discrete leaf; then, level by level from the bottom up, every vertex of
// the target cell is tested for membership in the orbit of the first-path
// vertex under the pointwise stabilizer of the levels above. The group order
// is the product of these orbit lengths.
class Searcher {
 public:
  Searcher(const Graph& g, const SearchOptions& options, bool stop_at_first)
      : g_(g),
        n_(static_cast<int>(g.num_vertices())),
        refiner_(g),
        options_(options),
        stop_at_first_(stop_at_first),
        orbits_(g.num_vertices()) {}

  SearchResult run(const Coloring& coloring, std::span<const std::size_t> fixed) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult result;
    if (n_ > 0) explore(initial_partition(coloring, fixed));
    result.group_order = order_;
    for (auto& images : generators_) {
      std::vector<std::size_t> im(images.begin(), images.end());
      result.generators.emplace_back(std::move(im));
    }
    result.stats = stats_;
    result.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  }

 private:
  Partition initial_partition(const Coloring& coloring,
                              std::span<const std::size_t> fixed) {
    if (coloring.size() != g_.num_vertices()) {
      throw InvalidArgument("coloring does not cover the vertex set");
    }
    std::vector<bool> is_fixed(n_, false);
    for (std::size_t v : fixed) {
      if (v >= g_.num_vertices()) throw InvalidArgument("fixed vertex out of range");
      is_fixed[v] = true;
    }
    // Initial cells: per color, fixed vertices as singletons, then the rest.
    cell_id_.assign(n_, 0);
    std::vector<std::vector<int>> cells;
    for (int c = 0; c < coloring.num_colors(); ++c) {
      std::vector<int> rest;
      for (int v = 0; v < n_; ++v) {
        if (coloring[v] != c) continue;
        if (is_fixed[v]) {
          cells.push_back({v});
        } else {
          rest.push_back(v);
        }
      }
      if (!rest.empty()) cells.push_back(std::move(rest));
    }
    Partition p;
    p.elems.reserve(n_);
    p.pos.assign(n_, 0);
    p.cell_of.assign(n_, 0);
    p.cell_len.assign(n_, 0);
    std::vector<int> starts;
    for (std::size_t id = 0; id < cells.size(); ++id) {
      const int start = static_cast<int>(p.elems.size());
      starts.push_back(start);
      p.cell_len[start] = static_cast<int>(cells[id].size());
      for (int v : cells[id]) {
        p.pos[v] = static_cast<int>(p.elems.size());
        p.cell_of[v] = start;
        cell_id_[v] = static_cast<int>(id);
        p.elems.push_back(v);
      }
    }
    p.num_cells = static_cast<int>(cells.size());
    count_node();
    first_trace_.push_back(refiner_.refine(p, starts));
    return p;
  }

  void count_node() {
    if (++stats_.nodes > options_.node_budget) {
      throw BudgetExceeded("automorphism search exceeded its node budget of " +
                           std::to_string(options_.node_budget));
    }
  }

  int target_cell(const Partition& p) const {
    int best = -1;
    int best_len = INT_MAX;
    for (int s = 0; s < n_; s += p.cell_len[s]) {
      const int len = p.cell_len[s];
      if (len > 1 && len < best_len) {
        best = s;
        best_len = len;
      }
    }
    return best;
  }

  std::vector<int> cell_members(const Partition& p, int start) const {
    std::vector<int> out(p.elems.begin() + start,
                         p.elems.begin() + start + p.cell_len[start]);
    std::sort(out.begin(), out.end());
    return out;
  }

  Partition individualize(const Partition& parent, int v, std::uint64_t& trace) {
    count_node();
    Partition p = parent;
    const int s = p.cell_of[v];
    const int len = p.cell_len[s];
    const int at = p.pos[v];
    const int other = p.elems[s];
    std::swap(p.elems[s], p.elems[at]);
    p.pos[other] = at;
    p.pos[v] = s;
    p.cell_len[s] = 1;
    p.cell_len[s + 1] = len - 1;
    for (int i = s + 1; i < s + len; ++i) p.cell_of[p.elems[i]] = s + 1;
    ++p.num_cells;
    const int splitter[] = {s};
    trace = refiner_.refine(p, splitter);
    return p;
  }

  void explore(Partition root) {
    // First path.
    std::vector<Partition> levels;
    Partition p = std::move(root);
    while (!p.discrete()) {
      const int s = target_cell(p);
      const int v = cell_members(p, s).front();
      first_target_.push_back(s);
      first_path_.push_back(v);
      std::uint64_t trace = 0;
      Partition next = individualize(p, v, trace);
      first_trace_.push_back(trace);
      levels.push_back(std::move(p));
      p = std::move(next);
    }
    first_leaf_ = p.elems;
    stats_.leaves = 1;
    const int depth = static_cast<int>(first_path_.size());
    stats_.depth = static_cast<std::size_t>(depth);

    for (int d = depth - 1; d >= 0; --d) {
      const Partition& parent = levels[d];
      const int v = first_path_[d];
      const std::vector<int> members = cell_members(parent, first_target_[d]);
      std::vector<int> failed;
      for (int w : members) {
        if (w == v || orbits_.find(w) == orbits_.find(v)) continue;
        bool known_bad = false;
        for (int f : failed) {
          if (orbits_.find(f) == orbits_.find(w)) {
            known_bad = true;
            break;
          }
        }
        if (known_bad) continue;
        std::uint64_t trace = 0;
        Partition child = individualize(parent, w, trace);
        path_.assign(first_path_.begin(), first_path_.begin() + d);
        path_.push_back(w);
        if (trace == first_trace_[d + 1] && find_equivalent(child, d + 1)) {
          if (stop_at_first_) return;
        } else {
          failed.push_back(w);
        }
      }
      std::size_t orbit = 0;
      for (int w : members) {
        if (orbits_.find(w) == orbits_.find(v)) ++orbit;
      }
      order_ *= orbit;
    }
  }

  bool find_equivalent(const Partition& p, int depth) {
    if (p.discrete()) return try_leaf(p);
    if (depth >= static_cast<int>(first_path_.size())) return false;
    const int s = target_cell(p);
    if (s != first_target_[depth]) return false;
    const std::vector<int> members = cell_members(p, s);
    std::vector<int> tried;
    std::optional<UnionFind> local;
    for (int x : members) {
      if (local) {
        bool equivalent = false;
        for (int t : tried) {
          if (local->find(t) == local->find(x)) {
            equivalent = true;
            break;
          }
        }
        if (equivalent) continue;
      }
      std::uint64_t trace = 0;
      Partition child = individualize(p, x, trace);
      path_.push_back(x);
      const bool found = trace == first_trace_[depth + 1] && find_equivalent(child, depth + 1);
      path_.pop_back();
      if (found) return true;
      tried.push_back(x);
      if (!local) local = stabilizer_orbits();
    }
    return false;
  }

  // Orbits of the known generators that fix the current path pointwise.
  UnionFind stabilizer_orbits() const {
    UnionFind uf(g_.num_vertices());
    for (const auto& images : generators_) {
      bool fixes = true;
      for (int v : path_) {
        if (images[v] != v) {
          fixes = false;
          break;
        }
      }
      if (fixes) uf.absorb(images);
    }
    return uf;
  }

  bool try_leaf(const Partition& leaf) {
    ++stats_.leaves;
    std::vector<int> images(n_);
    for (int i = 0; i < n_; ++i) {
      const int from = first_leaf_[i];
      const int to = leaf.elems[i];
      if (cell_id_[from] != cell_id_[to]) return false;
      images[from] = to;
    }
    if (!preserves_edges(g_, images)) return false;
    orbits_.absorb(images);
    generators_.push_back(std::move(images));
    return true;
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  SearchOptions options_;
  bool stop_at_first_;
  UnionFind orbits_;
  std::vector<int> cell_id_;
  std::vector<std::uint64_t> first_trace_;
  std::vector<int> first_target_;
  std::vector<int> first_path_;
  std::vector<int> first_leaf_;
  std::vector<int> path_;
  std::vector<std::vector<int>> generators_;
  BigInt order_ = 1;
  SearchStats stats_;
};

}  // namespace

bool is_automorphism(const Graph& g, const VertexPermutation& p) {
  if (p.size() != g.num_vertices()) {
    throw InvalidArgument("vertex map size differs from the graph order");
  }
  return preserves_edges(g, p.images());
}

SearchResult search(const Graph& g, const Coloring& coloring,
                    std::span<const std::size_t> fixed,
                    const SearchOptions& options) {
  return Searcher(g, options, false).run(coloring, fixed);
}

SearchResult search(const Graph& g, std::span<const std::size_t> fixed,
                    const SearchOptions& options) {
  return search(g, Coloring::uniform(g.num_vertices()), fixed, options);
}

std::optional<VertexPermutation> find_nontrivial_automorphism(
    const Graph& g, const Coloring& coloring, std::span<const std::size_t> fixed,
    const SearchOptions& options) {
  SearchResult r = Searcher(g, options, true).run(coloring, fixed);
  if (r.generators.empty()) return std::nullopt;
  return r.generators.front();
}

bool is_asymmetric(const Graph& g, const SearchOptions& options) {
  return !find_nontrivial_automorphism(g, Coloring::uniform(g.num_vertices()), {},
                                       options);
}

bool is_determining_set(const Graph& g, std::span<const std::size_t> vertices,
                        const SearchOptions& options) {
  return !find_nontrivial_automorphism(g, Coloring::uniform(g.num_vertices()),
                                       vertices, options);
}

bool is_distinguishing(const Graph& g, const Coloring& coloring,
                       const SearchOptions& options) {
  return !find_nontrivial_automorphism(g, coloring, {}, options);
}

bool is_set_distinguishing(const Graph& g, std::span<const std::size_t> vertices,
                           std::span<const int> set_colors,
                           const SearchOptions& options) {
  if (vertices.size() != set_colors.size()) {
    throw InvalidArgument("set coloring must give one color per set vertex");
  }
  int max_color = -1;
  for (int c : set_colors) {
    if (c < 0) throw InvalidArgument("negative color id");
    max_color = std::max(max_color, c);
  }
  // Vertices outside the set form one extra class.
  const int outside = max_color + 1;
  std::vector<int> colors(g.num_vertices(), outside);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices()) throw InvalidArgument("vertex out of range");
    if (colors[vertices[i]] != outside) throw InvalidArgument("duplicate set vertex");
    colors[vertices[i]] = set_colors[i];
  }
  const SearchResult r = search(g, Coloring(std::move(colors), outside + 1), {}, options);
  for (const VertexPermutation& gen : r.generators) {
    for (std::size_t v : vertices) {
      if (gen[v] != v) return false;
    }
  }
  return true;
}

}  // namespace mjdist
