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

#include <cmath>
#include <functional>
#include <numeric>

#include "mjdist/errors.hpp"

namespace mjdist {

namespace {

bool is_reflection_closed(const MergedJohnsonSpec& spec, int t) {
  return spec.shifted(t) == spec.index_set();
}

bool is_prefix_set(const MergedJohnsonSpec& spec, int last) {
  if (static_cast<int>(spec.index_set().size()) != last) return false;
  for (int i = 0; i < last; ++i) {
    if (spec.index_set()[i] != i + 1) return false;
  }
  return true;
}

void require_even_middle(const MergedJohnsonSpec& spec) {
  if (spec.n() != 2 * spec.k()) throw InvalidArgument("requires n = 2k");
}

std::vector<std::size_t> all_vertex_labels_map(
    const MergedJohnsonSpec& spec,
    const std::function<KSubset(const KSubset&)>& map) {
  const std::uint64_t count = spec.num_vertices();
  std::vector<std::size_t> images(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    images[v] = vertex_of(map(unrank(v, spec.n(), spec.k())));
  }
  return images;
}

}  // namespace

AutDescriptor classify(const MergedJohnsonSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  if (k < 2 || 2 * k > n) throw InvalidArgument("classify needs 2 <= k <= n/2");
  if (spec.index_set().empty() || spec.is_full()) {
    throw InvalidArgument("classify needs a proper nonempty index set");
  }
  if (2 * k + 1 < n) {
    if (n == 12 && k == 4 &&
        (spec.index_set() == std::vector<int>{1, 3} ||
         spec.index_set() == std::vector<int>{2, 4})) {
      return {AutCase::kExceptional12_4, "O^-_10(2)",
              "Gamma_0, Gamma_1 u Gamma_3, Gamma_2 u Gamma_4", false};
    }
    return {AutCase::kSymmetric, "S_n", "Gamma_0, Gamma_1, ..., Gamma_k", true};
  }
  if (2 * k + 1 == n) {
    if (is_reflection_closed(spec, k + 1)) {
      return {AutCase::kOddExtended, "S_{n+1}",
              "Gamma_0, Gamma_i u Gamma_{k+1-i} for i = 1..floor((k+1)/2)", true};
    }
    return {AutCase::kOddSymmetric, "S_n", "Gamma_0, Gamma_1, ..., Gamma_k", true};
  }
  if ((spec.index_set().size() == 1 && spec.index_set()[0] == k) ||
      is_prefix_set(spec, k - 1)) {
    return {AutCase::kEvenWreath, "S_2 wr S_e",
            "Gamma_0, Gamma_1 u ... u Gamma_{k-1}, Gamma_k", true};
  }
  if (spec.i_prime() == spec.i_double_prime()) {
    return {AutCase::kEvenPairSwap, "S_2^e : S_n",
            "Gamma_0, Gamma_i u Gamma_{k-i} for i = 1..floor(k/2), Gamma_k", true};
  }
  return {AutCase::kEvenDirect, "S_2 x S_n", "Gamma_0, Gamma_1, ..., Gamma_k", true};
}

VertexPermutation induced_vertex_perm(const Permutation& sigma,
                                      const MergedJohnsonSpec& spec) {
  if (sigma.n() != spec.n() || sigma.extended()) {
    throw InvalidArgument("permutation must act on [n]");
  }
  return VertexPermutation(all_vertex_labels_map(
      spec, [&](const KSubset& m) { return apply(sigma, m); }));
}

VertexPermutation complement_involution(const MergedJohnsonSpec& spec) {
  require_even_middle(spec);
  return VertexPermutation(
      all_vertex_labels_map(spec, [](const KSubset& m) { return m.complement(); }));
}

VertexPermutation pair_swap(std::size_t v, const MergedJohnsonSpec& spec) {
  require_even_middle(spec);
  if (spec.i_prime() != spec.i_double_prime()) {
    throw InvalidArgument("pair swaps are automorphisms only when I' = I''");
  }
  if (v >= spec.num_vertices()) throw InvalidArgument("vertex out of range");
  std::vector<std::size_t> images(spec.num_vertices());
  std::iota(images.begin(), images.end(), std::size_t{0});
  const std::size_t partner = vertex_of(unrank(v, spec.n(), spec.k()).complement());
  std::swap(images[v], images[partner]);
  return VertexPermutation(std::move(images));
}

VertexPermutation extended_action(const Permutation& sigma_tilde,
                                  const MergedJohnsonSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  if (n != 2 * k + 1) throw InvalidArgument("extended action needs n = 2k + 1");
  if (!is_reflection_closed(spec, k + 1)) {
    throw InvalidArgument("extended action needs I = k + 1 - I");
  }
  if (!sigma_tilde.extended() || sigma_tilde.n() != n) {
    throw InvalidArgument("permutation must act on [n] plus infinity");
  }
  const int inf = sigma_tilde.infinity();
  return VertexPermutation(all_vertex_labels_map(spec, [&](const KSubset& m) {
    // Image of the half M ∪ {inf}; if it no longer holds inf, the vertex is
    // the image of the other half [n] - M.
    std::uint64_t with_inf = 0;
    bool holds_inf = sigma_tilde(inf) == inf;
    for (int e : m.elements()) {
      const int img = sigma_tilde(e);
      if (img == inf) {
        holds_inf = true;
      } else {
        with_inf |= std::uint64_t{1} << (img - 1);
      }
    }
    if (holds_inf) {
      if (sigma_tilde(inf) != inf) with_inf |= std::uint64_t{1} << (sigma_tilde(inf) - 1);
      return KSubset(with_inf, n);
    }
    std::uint64_t other = 0;
    for (int e : m.complement().elements()) {
      const int img = sigma_tilde(e);
      if (img != inf) other |= std::uint64_t{1} << (img - 1);
    }
    return KSubset(other, n);
  }));
}

GeneratorSet generators(const AutDescriptor& descriptor,
                        const MergedJohnsonSpec& spec) {
  const int n = spec.n();
  GeneratorSet out;
  out.generators.push_back(induced_vertex_perm(transposition(1, n), spec));
  out.generators.push_back(induced_vertex_perm(long_cycle(n), spec));
  out.complete = true;
  out.expected_order = factorial(n);
  switch (descriptor.aut_case) {
    case AutCase::kSymmetric:
    case AutCase::kOddSymmetric:
      break;
    case AutCase::kExceptional12_4:
      out.complete = false;
      break;
    case AutCase::kOddExtended: {
      out.generators.clear();
      std::vector<int> swap_images(n + 1);
      std::iota(swap_images.begin(), swap_images.end(), 1);
      std::swap(swap_images[0], swap_images[1]);
      std::vector<int> cycle_images(n + 1);
      for (int i = 0; i <= n; ++i) cycle_images[i] = (i + 1) % (n + 1) + 1;
      out.generators.push_back(
          extended_action(Permutation::from_images(swap_images, true), spec));
      out.generators.push_back(
          extended_action(Permutation::from_images(cycle_images, true), spec));
      out.expected_order = factorial(n + 1);
      break;
    }
    case AutCase::kEvenDirect:
      out.generators.push_back(complement_involution(spec));
      out.expected_order *= 2;
      break;
    case AutCase::kEvenPairSwap: {
      out.generators.push_back(pair_swap(0, spec));
      const unsigned e = static_cast<unsigned>(*spec.e());
      out.expected_order *= BigInt(1) << e;
      break;
    }
    case AutCase::kEvenWreath: {
      // The components {v, v-bar} can be permuted freely: add one pair swap,
      // a transposition of two components and a cycle through all of them.
      const auto parts = equipartitions(spec.k());
      const std::size_t e = parts.size();
      out.generators.push_back(pair_swap(0, spec));
      auto component_map = [&](const std::vector<std::size_t>& target) {
        std::vector<std::size_t> images(spec.num_vertices());
        for (std::size_t c = 0; c < e; ++c) {
          const Equipartition& from = parts[c];
          const Equipartition& to = parts[target[c]];
          images[vertex_of(from.part())] = vertex_of(to.part());
          images[vertex_of(from.other())] = vertex_of(to.other());
        }
        return VertexPermutation(std::move(images));
      };
      std::vector<std::size_t> swap01(e);
      std::iota(swap01.begin(), swap01.end(), std::size_t{0});
      if (e >= 2) std::swap(swap01[0], swap01[1]);
      std::vector<std::size_t> rotate(e);
      for (std::size_t c = 0; c < e; ++c) rotate[c] = (c + 1) % e;
      out.generators.push_back(component_map(swap01));
      out.generators.push_back(component_map(rotate));
      out.expected_order = (BigInt(1) << static_cast<unsigned>(e)) *
                           factorial(static_cast<unsigned>(e));
      break;
    }
  }
  return out;
}

Equipartition::Equipartition(const KSubset& half) : part_(half) {
  if (half.n() % 2 != 0 || 2 * half.size() != half.n()) {
    throw InvalidArgument("an equipartition half must have exactly n/2 elements");
  }
  if (!part_.contains(1)) part_ = part_.complement();
}

std::vector<Equipartition> equipartitions(int m) {
  if (m < 1 || 2 * m > kMaxGroundSet) throw InvalidArgument("m out of range");
  std::vector<Equipartition> out;
  const std::uint64_t count = binom_u64(2 * m, m);
  for (std::uint64_t r = 0; r < count; ++r) {
    KSubset half = unrank(r, 2 * m, m);
    if (half.contains(1)) out.emplace_back(half);
  }
  return out;
}

BigInt count_fixed_equipartitions(const Permutation& sigma) {
  if (sigma.extended() || sigma.n() % 2 != 0) {
    throw InvalidArgument("equipartitions need an even ground set");
  }
  BigInt count = 0;
  for (const Equipartition& p : equipartitions(sigma.n() / 2)) {
    const KSubset image = apply(sigma, p.part());
    if (image == p.part() || image == p.other()) ++count;
  }
  return count;
}

BigInt max_fixed_bound(int m) {
  if (m < 4) throw InvalidArgument("the fixed-point bound needs m >= 4");
  return binom(2 * m - 2, m - 2);
}

LemmaBound::LemmaBound(int m) : m_(m) {
  if (m < 4) throw InvalidArgument("the probability bound needs m >= 4");
  factorial_ = factorial(2 * m);
  BigInt num = BigInt(m) * binom(2 * m - 2, m - 2);
  BigInt den = 2 * (m - 1);
  const BigInt g = boost::multiprecision::gcd(num, den);
  exponent_num_ = num / g;
  exponent_den_ = den / g;
}

bool LemmaBound::less_than_one() const {
  const unsigned den = exponent_den_.convert_to<unsigned>();
  const unsigned num = exponent_num_.convert_to<unsigned>();
  return boost::multiprecision::pow(factorial_, den) <
         boost::multiprecision::pow(BigInt(3), num);
}

std::pair<BigInt, BigInt> LemmaBound::as_fraction() const {
  if (exponent_den_ != 1) {
    throw Unsupported("the exponent is fractional; no exact rational value");
  }
  return {factorial_, boost::multiprecision::pow(BigInt(3), exponent_num_.convert_to<unsigned>())};
}

double LemmaBound::approx() const {
  const double log_value = std::lgamma(2.0 * m_ + 1.0) -
                           exponent_num_.convert_to<double>() /
                               exponent_den_.convert_to<double>() * std::log(3.0);
  return std::exp(log_value);
}

std::string LemmaBound::to_string() const {
  if (exponent_den_ == 1) {
    const auto [p, q] = as_fraction();
    return p.str() + "/" + q.str();
  }
  return factorial_.str() + "*3^(-" + exponent_num_.str() + "/" + exponent_den_.str() + ")";
}

LemmaBound lemma_bound(int m) { return LemmaBound(m); }

}  // namespace mjdist
