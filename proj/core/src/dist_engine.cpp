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

#include "mjdist/dist_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mjdist/errors.hpp"
#include "mjdist/group_actions.hpp"

namespace mjdist {

namespace {

bool is_prefix_set(const std::vector<int>& index_set, int last) {
  if (static_cast<int>(index_set.size()) != last) return false;
  for (int i = 0; i < last; ++i) {
    if (index_set[i] != i + 1) return false;
  }
  return true;
}

bool is_exceptional_12_4(const MergedJohnsonSpec& spec) {
  return spec.n() == 12 && spec.k() == 4 &&
         (spec.index_set() == std::vector<int>{1, 3} ||
          spec.index_set() == std::vector<int>{2, 4});
}

// Uniform draws taken straight from the engine's output, so sequences do not
// depend on the standard library's distribution implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

std::size_t vertex_of_elements(std::initializer_list<int> elements, int n) {
  return vertex_of(KSubset::from_elements(elements, n));
}

std::vector<std::size_t> windows(const MergedJohnsonSpec& spec, int count) {
  const Permutation id = Permutation::identity(spec.n());
  std::vector<std::size_t> out;
  for (int ell = 1; ell <= count; ++ell) out.push_back(vertex_of(window(id, ell, spec.k())));
  return out;
}

// {from, ..., to} plus `extra` as a vertex; nullopt if an element exceeds n.
std::optional<std::size_t> prescribed(int from, int to, std::vector<int> extra, int n) {
  std::vector<int> elements;
  for (int x = from; x <= to; ++x) elements.push_back(x);
  elements.insert(elements.end(), extra.begin(), extra.end());
  for (int x : elements) {
    if (x > n) return std::nullopt;
  }
  return vertex_of(KSubset::from_elements(elements, n));
}

void append_unique(std::vector<std::size_t>& out, std::size_t v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

struct CaseSet {
  std::vector<std::size_t> vertices;
  bool complete = true;  // every prescribed subset fits in [n]
};

// The vertex sets whose induced subgraphs are shown to be asymmetric for
// Cases 2, 5 and 6, keeping only the subsets that exist for this n.
CaseSet prescribed_case_set(const MergedJohnsonSpec& spec, DistCase c) {
  const int n = spec.n();
  const int m = spec.k();
  CaseSet out;
  switch (c) {
    case DistCase::kExceptional:
      out.vertices = determining_set_for(spec).vertices;
      append_unique(out.vertices, vertex_of_elements({1, 3, 5, 7}, n));
      break;
    case DistCase::kOddReflexive:
      out.vertices = windows(spec, m + 2);
      for (auto v : {prescribed(1, m - 2, {m, m + 2}, n),
                     prescribed(2, m - 1, {m + 1, m + 3}, n)}) {
        if (v) append_unique(out.vertices, *v);
        out.complete = out.complete && v.has_value();
      }
      break;
    case DistCase::kEvenPlain:
      out.vertices = windows(spec, 2 * m);
      for (auto v : {prescribed(1, m - 2, {m, m + 2}, n),
                     prescribed(2, m - 1, {m + 1, m + 3}, n),
                     prescribed(4, m + 1, {m + 3, m + 5}, n)}) {
        if (v) append_unique(out.vertices, *v);
        out.complete = out.complete && v.has_value();
      }
      break;
    default:
      throw InvalidArgument("no prescribed set for case " + to_string(c));
  }
  return out;
}

bool is_asymmetric_determining(const Graph& g, const std::vector<std::size_t>& set,
                               const SearchOptions& options) {
  if (set.empty() || set.size() == g.num_vertices()) return false;
  return is_asymmetric(induced_subgraph(g, set), options) &&
         is_determining_set(g, set, options);
}

// Grows `initial` by random vertices until it is a determining set with an
// asymmetric induced subgraph; restarts from `initial` when the set fills up.
std::vector<std::size_t> search_asymmetric_detset(const Graph& g,
                                                  std::vector<std::size_t> initial,
                                                  std::uint64_t seed, int attempts,
                                                  const SearchOptions& options) {
  const std::size_t count = g.num_vertices();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<std::size_t> set = initial;
    std::vector<bool> in_set(count, false);
    for (std::size_t v : set) in_set[v] = true;
    while (set.size() < count) {
      if (is_asymmetric_determining(g, set, options)) return set;
      std::size_t v;
      do {
        v = draw_below(rng, count);
      } while (in_set[v]);
      in_set[v] = true;
      set.push_back(v);
    }
  }
  throw BudgetExceeded("no asymmetric determining set found after " +
                       std::to_string(attempts) + " attempts");
}

std::vector<std::size_t> complement_partners(const MergedJohnsonSpec& spec) {
  const std::size_t count = spec.num_vertices();
  std::vector<std::size_t> partner(count);
  for (std::size_t v = 0; v < count; ++v) {
    partner[v] = vertex_of(unrank(v, spec.n(), spec.k()).complement());
  }
  return partner;
}

bool preserves_coloring(const VertexPermutation& p, const Coloring& c) {
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (c[v] != c[p[v]]) return false;
  }
  return true;
}

void require_pair_swap_family(const MergedJohnsonSpec& spec) {
  if (spec.n() != 2 * spec.k() || spec.k() < 4) {
    throw InvalidArgument("needs n = 2m with m >= 4");
  }
  if (spec.index_set().empty() || spec.is_full() ||
      spec.i_prime() != spec.i_double_prime()) {
    throw InvalidArgument("needs a proper index set with I' = I''");
  }
}

std::string pigeonhole_detail(std::uint64_t r, std::uint64_t e) {
  return "binom(" + std::to_string(r - 1) + ",2) = " +
         std::to_string((r - 1) * (r - 2) / 2) + " < e = " + std::to_string(e);
}

}  // namespace

std::string to_string(DistCase c) {
  if (c == DistCase::kComplete) return "complete";
  return std::to_string(static_cast<int>(c));
}

DistCase dist_case(const MergedJohnsonSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  if (k < 1 || 2 * k > n) throw InvalidArgument("spec is not canonical: need 1 <= k <= n/2");
  const auto& index_set = spec.index_set();
  if (k == 1 || index_set.empty() || spec.is_full()) return DistCase::kComplete;
  if (n == 5 && k == 2) return DistCase::kPetersen;
  if (2 * k + 1 < n) {
    return is_exceptional_12_4(spec) ? DistCase::kExceptional : DistCase::kGeneric;
  }
  if (2 * k + 1 == n) {
    return spec.shifted(k + 1) == index_set ? DistCase::kOddReflexive
                                            : DistCase::kOddPlain;
  }
  if ((index_set.size() == 1 && index_set[0] == k) || is_prefix_set(index_set, k - 1)) {
    return DistCase::kEvenMatching;
  }
  if (spec.i_prime() == spec.i_double_prime()) return DistCase::kEvenPairSwap;
  return DistCase::kEvenPlain;
}

std::uint64_t case8_value(int m) {
  if (m < 2 || m > 32) throw InvalidArgument("case8_value needs 2 <= m <= 32");
  const unsigned __int128 e = binom_u64(2 * m, m) / 2;
  auto pairs = [](unsigned __int128 r) { return r * (r - 1) / 2; };
  std::uint64_t lo = 2;
  std::uint64_t hi = std::uint64_t{1} << 33;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pairs(mid) >= e) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

Coloring matching_coloring(int m, int r) {
  if (m < 1 || 2 * m > kMaxGroundSet) throw InvalidArgument("m out of range");
  const std::uint64_t e = binom_u64(2 * m, m) / 2;
  if (r < 2 || static_cast<std::uint64_t>(r) * (r - 1) / 2 < e) {
    throw InvalidArgument(std::to_string(r) + " colors give fewer than " +
                          std::to_string(e) + " distinct color pairs");
  }
  std::vector<int> colors(2 * e);
  int a = 0;
  int b = 1;
  for (const Equipartition& p : equipartitions(m)) {
    colors[vertex_of(p.part())] = a;
    colors[vertex_of(p.other())] = b;
    if (++b == r) {
      ++a;
      b = a + 1;
    }
  }
  return Coloring(std::move(colors), r);
}

DeterminingSet determining_set_for(const MergedJohnsonSpec& spec) {
  const int n = spec.n();
  const int m = spec.k();
  if (is_exceptional_12_4(spec)) {
    DeterminingSet out{windows(spec, 12), "J(12,4)_{1,3} windows under id, tau_1, tau_2"};
    for (int i : {1, 2}) {
      const Permutation tau = transposition(i, n);
      for (int ell = 1; ell <= 12; ++ell) {
        append_unique(out.vertices, vertex_of(window(tau, ell, 4)));
      }
    }
    return out;
  }
  if (m >= 3 && n == 2 * m + 1 && !spec.index_set().empty() && !spec.is_full() &&
      spec.shifted(m + 1) == spec.index_set()) {
    return {windows(spec, m + 2), "J(2m+1,m)_{1,m} windows V_1..V_{m+2}"};
  }
  if (m >= 3 && n == 2 * m && dist_case(spec) == DistCase::kEvenPlain) {
    DeterminingSet out{windows(spec, 2 * m), "J(2m,m)_{1} windows V_1..V_{2m} plus X"};
    append_unique(out.vertices, *prescribed(1, m - 2, {m, m + 2}, n));
    if (m == 3) {
      // At m = 3 the complement composed with i <-> i+3 fixes {1,3,5} and
      // every window, so one more vertex is needed.
      out.vertices.push_back(vertex_of(KSubset::from_elements({1, 2, 4}, n)));
      out.family += " and {1,2,4}";
    }
    return out;
  }
  throw Unsupported("no explicit determining set for " + spec.to_string());
}

Coloring coloring_from_detset(const Graph& g, std::span<const std::size_t> set,
                              std::span<const int> set_colors,
                              const SearchOptions& options) {
  if (set.size() != set_colors.size()) {
    throw InvalidArgument("one color per set vertex is required");
  }
  if (!is_determining_set(g, set, options)) {
    throw InvalidArgument("the set is not a determining set");
  }
  if (!is_set_distinguishing(g, set, set_colors, options)) {
    throw InvalidArgument("the set coloring does not make the set distinguishable");
  }
  int fresh = 0;
  for (int c : set_colors) {
    if (c < 0) throw InvalidArgument("negative color id");
    fresh = std::max(fresh, c + 1);
  }
  std::vector<int> colors(g.num_vertices(), fresh);
  for (std::size_t i = 0; i < set.size(); ++i) colors[set[i]] = set_colors[i];
  const bool fresh_used = set.size() < g.num_vertices();
  return Coloring(std::move(colors), fresh + (fresh_used ? 1 : 0));
}

VertexPermutation breaking_automorphism(const MergedJohnsonSpec& spec,
                                        const Graph& g, const Coloring& c) {
  require_pair_swap_family(spec);
  if (c.size() != g.num_vertices() || g.num_vertices() != spec.num_vertices()) {
    throw InvalidArgument("coloring, graph and spec sizes differ");
  }
  if (c.distinct_colors() > 2) throw InvalidArgument("coloring uses more than two colors");
  const std::vector<std::size_t> partner = complement_partners(spec);

  VertexPermutation psi;
  const auto same = std::find_if(partner.begin(), partner.end(), [&](std::size_t w) {
    return c[w] == c[partner[w]];
  });
  if (same != partner.end()) {
    psi = pair_swap(*same, spec);
  } else {
    // Every pair is split, so swapping a pair exchanges its two colors. Follow
    // tau_1 and swap each image pair whose colors came out reversed.
    const VertexPermutation phi = induced_vertex_perm(transposition(1, spec.n()), spec);
    std::vector<std::size_t> images(phi.size());
    for (std::size_t v = 0; v < phi.size(); ++v) {
      images[v] = c[phi[v]] == c[v] ? phi[v] : partner[phi[v]];
    }
    psi = VertexPermutation(std::move(images));
  }
  if (psi.is_identity() || !preserves_coloring(psi, c) || !is_automorphism(g, psi)) {
    throw Error("breaker construction failed to verify");
  }
  return psi;
}

VertexPermutation breaking_automorphism(const MergedJohnsonSpec& spec,
                                        const Coloring& c) {
  return breaking_automorphism(spec, build(spec), c);
}

RandomColoring random_3_coloring(const MergedJohnsonSpec& spec, const Graph& g,
                                 std::uint64_t seed, int max_attempts,
                                 const SearchOptions& options) {
  if (spec.n() != 2 * spec.k() || spec.k() < 4) {
    throw InvalidArgument("random_3_coloring needs n = 2m with m >= 4");
  }
  if (g.num_vertices() != spec.num_vertices()) {
    throw InvalidArgument("graph and spec sizes differ");
  }
  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::pair<std::size_t, std::size_t>> components;
  for (const Equipartition& p : equipartitions(spec.k())) {
    components.emplace_back(vertex_of(p.part()), vertex_of(p.other()));
  }
  std::mt19937_64 rng(seed);
  std::vector<int> colors(g.num_vertices());
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    for (const auto& [u, w] : components) {
      const auto& pair = kPairs[draw_below(rng, 3)];
      const bool flip = draw_below(rng, 2) == 1;
      colors[u] = pair[flip ? 1 : 0];
      colors[w] = pair[flip ? 0 : 1];
    }
    Coloring c(colors, 3);
    if (is_distinguishing(g, c, options)) return {std::move(c), attempt};
  }
  throw BudgetExceeded("no distinguishing 3-coloring in " +
                       std::to_string(max_attempts) + " attempts");
}

std::optional<Coloring> find_distinguishing_coloring(const Graph& g, int r,
                                                     const SearchOptions& options) {
  if (r < 1) throw InvalidArgument("need at least one color");
  const std::size_t count = g.num_vertices();
  if (count * std::log(static_cast<double>(r)) > std::log(kEnumerationBudget)) {
    throw BudgetExceeded("enumerating " + std::to_string(r) + "-colorings of " +
                         std::to_string(count) + " vertices exceeds the budget");
  }
  if (count == 0) return Coloring({}, r);
  // Restricted growth strings: colors[i] <= 1 + max(colors[0..i-1]).
  std::vector<int> colors(count, 0);
  std::vector<int> prefix_max(count, 0);
  std::size_t i = count - 1;
  for (;;) {
    Coloring c(colors, r);
    if (is_distinguishing(g, c, options)) return c;
    // Advance to the next string.
    for (;;) {
      const int limit = i == 0 ? 0 : std::min(r - 1, prefix_max[i] + 1);
      if (colors[i] < limit) {
        ++colors[i];
        break;
      }
      if (i == 0) return std::nullopt;
      colors[i] = 0;
      --i;
    }
    for (std::size_t j = i + 1; j < count; ++j) {
      prefix_max[j] = std::max(prefix_max[j - 1], colors[j - 1]);
      colors[j] = 0;
    }
    i = count - 1;
  }
}

int brute_force_dist(const Graph& g, int max_r, const SearchOptions& options) {
  for (int r = 1; r <= max_r; ++r) {
    if (find_distinguishing_coloring(g, r, options)) return r;
  }
  throw BudgetExceeded("no distinguishing coloring with at most " +
                       std::to_string(max_r) + " colors");
}

UpperWitness case_coloring(const MergedJohnsonSpec& spec, const Graph& g,
                           const DistOptions& options) {
  const DistCase c = dist_case(spec);
  const std::size_t count = g.num_vertices();
  UpperWitness out;
  auto two_coloring_from = [&](std::vector<std::size_t> set) {
    out.coloring = coloring_from_detset(g, set, std::vector<int>(set.size(), 0),
                                        options.search);
    out.method = "detset-asymmetric";
    out.detset = std::move(set);
  };
  switch (c) {
    case DistCase::kComplete: {
      std::vector<int> colors(count);
      for (std::size_t v = 0; v < count; ++v) colors[v] = static_cast<int>(v);
      out.coloring = Coloring(std::move(colors), static_cast<int>(count));
      out.method = "complete-graph";
      break;
    }
    case DistCase::kGeneric:
    case DistCase::kOddPlain:
      two_coloring_from(search_asymmetric_detset(g, windows(spec, spec.n()), options.seed,
                                                 options.max_attempts, options.search));
      out.seed = options.seed;
      break;
    case DistCase::kExceptional:
    case DistCase::kOddReflexive:
    case DistCase::kEvenPlain: {
      CaseSet set = prescribed_case_set(spec, c);
      if (set.complete && is_asymmetric_determining(g, set.vertices, options.search)) {
        two_coloring_from(std::move(set.vertices));
      } else {
        two_coloring_from(search_asymmetric_detset(g, std::move(set.vertices), options.seed,
                                                   options.max_attempts, options.search));
        out.seed = options.seed;
      }
      break;
    }
    case DistCase::kPetersen: {
      auto found = find_distinguishing_coloring(g, 3, options.search);
      if (!found) throw Error("no distinguishing 3-coloring of " + spec.to_string());
      out.coloring = std::move(*found);
      out.method = "exhaustive";
      break;
    }
    case DistCase::kEvenPairSwap:
      out.coloring =
          random_3_coloring(spec, g, options.seed, options.max_attempts, options.search)
              .coloring;
      out.method = "random-3";
      out.seed = options.seed;
      break;
    case DistCase::kEvenMatching: {
      const int m = spec.k();
      out.coloring = matching_coloring(m, static_cast<int>(case8_value(m)));
      out.method = "matching-formula";
      break;
    }
  }
  return out;
}

Certificate distinguishing_number(const MergedJohnsonSpec& spec,
                                  const DistOptions& options) {
  Certificate cert;
  cert.spec = spec;
  cert.dist_case = dist_case(spec);
  const Graph g = build(spec, options.vertex_budget);
  UpperWitness upper = case_coloring(spec, g, options);
  cert.coloring = std::move(upper.coloring);
  cert.upper_method = std::move(upper.method);
  cert.detset = std::move(upper.detset);
  cert.seed = upper.seed;

  const std::size_t count = g.num_vertices();
  switch (cert.dist_case) {
    case DistCase::kComplete:
      cert.dist = static_cast<int>(count);
      cert.lower_method = "pigeonhole-count";
      cert.lower_detail = std::string(g.edge_count() == 0 ? "edgeless" : "complete") +
                          " graph on " + std::to_string(count) +
                          " vertices: two equal colors can be swapped";
      break;
    case DistCase::kPetersen:
      cert.dist = 3;
      cert.lower_method = "exhaustive-(r-1)";
      cert.lower_detail = "no 2-coloring of the 10 vertices is distinguishing";
      break;
    case DistCase::kEvenPairSwap:
      cert.dist = 3;
      cert.lower_method = "pair-swap-construction";
      cert.lower_detail = "every 2-coloring admits a color-preserving automorphism "
                          "built from pair swaps";
      break;
    case DistCase::kEvenMatching: {
      cert.dist = static_cast<int>(case8_value(spec.k()));
      cert.lower_method = "pigeonhole-count";
      cert.lower_detail = pigeonhole_detail(cert.dist, count / 2);
      break;
    }
    default:
      cert.dist = 2;
      cert.lower_method = "trivial";
      cert.lower_detail = "the graph has a nontrivial automorphism";
      break;
  }
  const Verification check = verify_certificate(cert, options);
  if (!check.ok) {
    throw Error("certificate for " + spec.to_string() + " failed verification: " +
                check.reason);
  }
  return cert;
}

Certificate distinguishing_number(int n, int k, std::vector<int> index_set,
                                  const DistOptions& options) {
  if (index_set.empty()) {
    const MergedJohnsonSpec shape = canonicalize(n, k, {1});
    return distinguishing_number(MergedJohnsonSpec(shape.n(), shape.k(), {}), options);
  }
  return distinguishing_number(canonicalize(n, k, std::move(index_set)), options);
}

Verification verify_certificate(const Certificate& cert, const DistOptions& options) {
  const MergedJohnsonSpec& spec = cert.spec;
  const SearchOptions& search_options = options.search;
  auto fail = [](std::string reason) { return Verification{false, std::move(reason)}; };

  try {
    const MergedJohnsonSpec canonical =
        spec.index_set().empty()
            ? MergedJohnsonSpec(canonicalize(spec.n(), spec.k(), {1}).n(),
                                canonicalize(spec.n(), spec.k(), {1}).k(), {})
            : canonicalize(spec.n(), spec.k(), spec.index_set());
    if (!(canonical == spec)) return fail("spec is not in canonical form");
  } catch (const InvalidArgument& e) {
    return fail(std::string("invalid spec: ") + e.what());
  }
  const DistCase c = dist_case(spec);
  const Graph g = build(spec, options.vertex_budget);
  const std::size_t count = g.num_vertices();

  if (cert.coloring.size() != count) return fail("coloring does not cover every vertex");
  if (cert.dist < 1) return fail("claimed value is below 1");
  if (cert.coloring.num_colors() > cert.dist) {
    return fail("coloring uses more colors than claimed");
  }
  if (!is_distinguishing(g, cert.coloring, search_options)) {
    return fail("color-preserving automorphism found");
  }

  if (cert.upper_method == "detset-asymmetric") {
    for (std::size_t v : cert.detset) {
      if (v >= count) return fail("recorded set has a vertex outside the graph");
    }
    std::vector<std::size_t> sorted = cert.detset;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      return fail("recorded set repeats a vertex");
    }
    if (!is_asymmetric_determining(g, cert.detset, search_options)) {
      return fail("recorded set is not an asymmetric determining set");
    }
  }

  const std::string& lower = cert.lower_method;
  if (lower == "trivial") {
    if (cert.dist > 2) return fail("lower-bound method does not cover the claim");
    if (cert.dist == 2 &&
        !find_nontrivial_automorphism(g, Coloring::uniform(count), {}, search_options)) {
      return fail("graph is asymmetric, so one color suffices");
    }
  } else if (lower == "exhaustive-(r-1)") {
    if (cert.dist < 2) return fail("lower-bound method does not cover the claim");
    try {
      if (find_distinguishing_coloring(g, cert.dist - 1, search_options)) {
        return fail("a coloring with fewer colors is distinguishing");
      }
    } catch (const BudgetExceeded&) {
      return fail("exhaustive lower bound is too large to re-enumerate");
    }
  } else if (lower == "pair-swap-construction") {
    if (cert.dist != 3) return fail("lower-bound method does not cover the claim");
    if (c != DistCase::kEvenPairSwap) {
      return fail("pair-swap construction does not apply to this spec");
    }
    std::vector<Coloring> samples;
    samples.push_back(Coloring::uniform(count));
    std::vector<int> projected(count);
    for (std::size_t v = 0; v < count; ++v) projected[v] = cert.coloring[v] == 0 ? 0 : 1;
    samples.emplace_back(projected, 2);
    const std::vector<std::size_t> partner = complement_partners(spec);
    std::vector<int> split(count);
    for (std::size_t v = 0; v < count; ++v) split[v] = v < partner[v] ? 0 : 1;
    samples.emplace_back(split, 2);
    std::mt19937_64 rng(options.seed);
    for (int s = 0; s < 32; ++s) {
      std::vector<int> colors(count);
      for (int& x : colors) x = static_cast<int>(draw_below(rng, 2));
      samples.emplace_back(std::move(colors), 2);
    }
    try {
      for (const Coloring& sample : samples) breaking_automorphism(spec, g, sample);
    } catch (const Error& e) {
      return fail(std::string("pair-swap construction failed: ") + e.what());
    }
  } else if (lower == "pigeonhole-count") {
    if (c == DistCase::kComplete) {
      const std::size_t pairs = count * (count - 1) / 2;
      if (g.edge_count() != 0 && g.edge_count() != pairs) {
        return fail("pigeonhole count needs a complete or edgeless graph");
      }
      if (static_cast<std::size_t>(cert.dist) != count) {
        return fail("a complete or edgeless graph needs one color per vertex");
      }
    } else if (c == DistCase::kEvenMatching) {
      const std::uint64_t r = static_cast<std::uint64_t>(cert.dist);
      const std::uint64_t e = count / 2;
      if (r < 2 || (r - 1) * (r - 2) / 2 >= e) {
        return fail("pigeonhole count does not exclude " + std::to_string(r - 1) + " colors");
      }
    } else {
      return fail("pigeonhole count does not apply to this spec");
    }
  } else {
    return fail("unknown lower-bound method '" + lower + "'");
  }
  return {true, ""};
}

}  // namespace mjdist
