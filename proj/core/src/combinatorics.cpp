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

#include "mjdist/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <sstream>

#include "mjdist/errors.hpp"

namespace mjdist {

BigInt binom(unsigned n, unsigned r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

namespace {

// Pascal's triangle up to row 64; every entry fits in 64 bits.
constexpr int kTableRows = 65;

struct BinomialTable {
  std::uint64_t entry[kTableRows][kTableRows] = {};
  constexpr BinomialTable() {
    for (int n = 0; n < kTableRows; ++n) {
      entry[n][0] = 1;
      for (int r = 1; r <= n; ++r) entry[n][r] = entry[n - 1][r - 1] + entry[n - 1][r];
    }
  }
};

constexpr BinomialTable kBinomials;

}  // namespace

std::uint64_t binom_u64(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (n < kTableRows) return kBinomials.entry[n][r];
  BigInt value = binom(n, r);
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw InvalidArgument("binomial coefficient does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

namespace {

void check_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet) {
    throw InvalidArgument("ground set size must lie in 0.." +
                          std::to_string(kMaxGroundSet));
  }
}

std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

KSubset::KSubset(std::uint64_t bits, int n) : bits_(bits), n_(n) {
  check_ground_set(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw InvalidArgument("subset has elements outside [n]");
  }
}

KSubset KSubset::from_elements(std::span<const int> elements, int n) {
  check_ground_set(n);
  std::uint64_t bits = 0;
  for (int e : elements) {
    if (e < 1 || e > n) {
      throw InvalidArgument("element " + std::to_string(e) +
                            " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    if (bits & bit) {
      throw InvalidArgument("duplicate element " + std::to_string(e));
    }
    bits |= bit;
  }
  return KSubset(bits, n);
}

KSubset KSubset::from_elements(std::initializer_list<int> elements, int n) {
  return from_elements(std::span<const int>(elements.begin(), elements.size()),
                       n);
}

int KSubset::size() const { return std::popcount(bits_); }

bool KSubset::contains(int element) const {
  return element >= 1 && element <= n_ && ((bits_ >> (element - 1)) & 1U);
}

std::vector<int> KSubset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

KSubset KSubset::complement() const {
  return KSubset(~bits_ & full_mask(n_), n_);
}

std::string KSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

int intersection_size(const KSubset& a, const KSubset& b) {
  if (a.n() != b.n()) throw InvalidArgument("subsets over different ground sets");
  return std::popcount(a.bits() & b.bits());
}

std::uint64_t rank(const KSubset& subset) {
  std::uint64_t r = 0;
  unsigned j = 1;
  for (std::uint64_t b = subset.bits(); b != 0; b &= b - 1, ++j) {
    r += binom_u64(static_cast<unsigned>(std::countr_zero(b)), j);
  }
  return r;
}

KSubset unrank(std::uint64_t index, int n, int k) {
  check_ground_set(n);
  if (k < 0 || k > n) throw InvalidArgument("subset size outside [0, n]");
  if (index >= binom_u64(n, k)) {
    throw InvalidArgument("subset rank " + std::to_string(index) +
                          " out of range");
  }
  std::uint64_t bits = 0;
  int c = n - 1;
  for (int j = k; j >= 1; --j) {
    // Largest c with binom(c, j) <= index.
    while (binom_u64(c, j) > index) --c;
    bits |= std::uint64_t{1} << c;
    index -= binom_u64(c, j);
    --c;
  }
  return KSubset(bits, n);
}

Permutation Permutation::identity(int n, bool extended) {
  Permutation p;
  p.extended_ = extended;
  p.images_.resize(n + (extended ? 1 : 0));
  for (std::size_t i = 0; i < p.images_.size(); ++i) {
    p.images_[i] = static_cast<int>(i) + 1;
  }
  return p;
}

Permutation Permutation::from_images(std::vector<int> images, bool extended) {
  const int size = static_cast<int>(images.size());
  if (size - (extended ? 1 : 0) > kMaxGroundSet) {
    throw InvalidArgument("permutation ground set too large");
  }
  std::vector<bool> seen(size, false);
  for (int v : images) {
    if (v < 1 || v > size || seen[v - 1]) {
      throw InvalidArgument("image table is not a bijection");
    }
    seen[v - 1] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  p.extended_ = extended;
  return p;
}

Permutation Permutation::from_cycles(const std::string& text, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<bool> used(n + 1, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw InvalidArgument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      skip_space();
      if (pos >= text.size()) throw InvalidArgument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw InvalidArgument("unexpected character in cycle notation");
      }
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > kMaxGroundSet) throw InvalidArgument("cycle point out of range");
        ++pos;
      }
      if (value < 1 || value > n) throw InvalidArgument("cycle point out of range");
      if (used[value]) throw InvalidArgument("point repeated in cycle notation");
      used[value] = true;
      cycle.push_back(value);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  return from_images(std::move(images));
}

int Permutation::operator()(int point) const {
  if (point < 1 || point > static_cast<int>(images_.size())) {
    throw InvalidArgument("point outside the permutation's domain");
  }
  return images_[point - 1];
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= static_cast<int>(images_.size()); ++start) {
    if (seen[start] || images_[start - 1] == start) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = images_[x - 1]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ", ";
    if (extended_ && images_[i] == infinity()) {
      os << "inf";
    } else {
      os << images_[i];
    }
  }
  os << ")";
  return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.images().size() != b.images().size() || a.extended() != b.extended()) {
    throw InvalidArgument("composing permutations of different ground sets");
  }
  std::vector<int> images(b.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[i] = a.images()[b.images()[i] - 1];
  }
  return Permutation::from_images(std::move(images), a.extended());
}

Permutation inverse(const Permutation& p) {
  std::vector<int> images(p.images().size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[p.images()[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation::from_images(std::move(images), p.extended());
}

Permutation transposition(int i, int n) {
  if (i < 1 || i > n - 1) {
    throw InvalidArgument("transposition index must satisfy 1 <= i <= n - 1");
  }
  Permutation id = Permutation::identity(n);
  std::vector<int> images = id.images();
  std::swap(images[i - 1], images[i]);
  return Permutation::from_images(std::move(images));
}

Permutation long_cycle(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
  return Permutation::from_images(std::move(images));
}

KSubset apply(const Permutation& phi, const KSubset& subset) {
  if (phi.n() != subset.n()) {
    throw InvalidArgument("permutation and subset over different ground sets");
  }
  std::uint64_t bits = 0;
  for (std::uint64_t b = subset.bits(); b != 0; b &= b - 1) {
    bits |= std::uint64_t{1} << (phi(std::countr_zero(b) + 1) - 1);
  }
  return KSubset(bits, subset.n());
}

KSubset window(const Permutation& phi, int ell, int k) {
  const int n = phi.n();
  if (k < 1 || 2 * k > n) throw InvalidArgument("window size must satisfy 1 <= k <= n/2");
  std::uint64_t bits = 0;
  for (int t = 0; t < k; ++t) {
    const int index = ((ell - 1 + t) % n + n) % n + 1;
    bits |= std::uint64_t{1} << (phi(index) - 1);
  }
  return KSubset(bits, n);
}

}  // namespace mjdist
