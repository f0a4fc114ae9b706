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

#include "mjdist/certificate_json.hpp"

#include <algorithm>

#include "json.hpp"
#include "mjdist/errors.hpp"

namespace mjdist {

namespace {

using Json = nlohmann::ordered_json;

Json subset_json(std::size_t v, const MergedJohnsonSpec& spec) {
  return unrank(v, spec.n(), spec.k()).elements();
}

const Json& field(const Json& object, const char* name) {
  if (!object.is_object() || !object.contains(name)) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return object.at(name);
}

std::int64_t integer(const Json& value, const char* what) {
  if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return value.get<std::int64_t>();
}

std::string text(const Json& value, const char* what) {
  if (!value.is_string()) throw ParseError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::size_t vertex(const Json& value, const MergedJohnsonSpec& spec) {
  if (!value.is_array()) throw ParseError("a vertex must be a list of elements");
  std::vector<int> elements;
  for (const Json& e : value) {
    const std::int64_t x = integer(e, "a vertex element");
    if (x < 1 || x > spec.n()) throw ParseError("vertex element outside [1, n]");
    elements.push_back(static_cast<int>(x));
  }
  if (static_cast<int>(elements.size()) != spec.k()) {
    throw ParseError("a vertex must have exactly k elements");
  }
  try {
    return vertex_of(KSubset::from_elements(elements, spec.n()));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string to_json(const Certificate& cert) {
  const MergedJohnsonSpec& spec = cert.spec;
  Json out;
  out["n"] = spec.n();
  out["k"] = spec.k();
  out["I"] = spec.index_set();
  out["dist"] = cert.dist;
  Json coloring = Json::array();
  for (std::size_t v = 0; v < cert.coloring.size(); ++v) {
    Json entry;
    entry["vertex"] = subset_json(v, spec);
    entry["color"] = cert.coloring[v] + 1;
    coloring.push_back(std::move(entry));
  }
  out["coloring"] = std::move(coloring);
  Json upper;
  upper["method"] = cert.upper_method;
  if (!cert.detset.empty()) {
    Json detset = Json::array();
    for (std::size_t v : cert.detset) detset.push_back(subset_json(v, spec));
    upper["detset"] = std::move(detset);
  }
  if (cert.seed) upper["seed"] = *cert.seed;
  out["upper"] = std::move(upper);
  Json lower;
  lower["method"] = cert.lower_method;
  lower["detail"] = cert.lower_detail;
  out["lower"] = std::move(lower);
  return out.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view input) {
  Json doc;
  try {
    doc = Json::parse(input);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("certificate must be a JSON object");

  const std::int64_t n = integer(field(doc, "n"), "n");
  const std::int64_t k = integer(field(doc, "k"), "k");
  if (n < 2 || n > kMaxGroundSet || k < 1 || k >= n) {
    throw ParseError("n or k out of range");
  }
  const Json& index_json = field(doc, "I");
  if (!index_json.is_array()) throw ParseError("I must be a list");
  std::vector<int> index_set;
  for (const Json& i : index_json) {
    const std::int64_t x = integer(i, "an element of I");
    if (x < 1 || x > k) throw ParseError("element of I outside [1, k]");
    index_set.push_back(static_cast<int>(x));
  }

  Certificate cert;
  cert.spec = MergedJohnsonSpec(static_cast<int>(n), static_cast<int>(k), index_set);
  if (cert.spec.num_vertices() > kDefaultVertexBudget * 100) {
    throw ParseError("graph is too large to describe in a certificate");
  }
  try {
    cert.dist_case = dist_case(cert.spec);
  } catch (const InvalidArgument&) {
    // Non-canonical spec; verify_certificate reports it.
  }
  const std::int64_t dist = integer(field(doc, "dist"), "dist");
  if (dist < 0 || dist > static_cast<std::int64_t>(cert.spec.num_vertices())) {
    throw ParseError("dist out of range");
  }
  cert.dist = static_cast<int>(dist);

  const Json& coloring = field(doc, "coloring");
  if (!coloring.is_array()) throw ParseError("coloring must be a list");
  const std::size_t count = cert.spec.num_vertices();
  std::vector<int> colors(count, -1);
  int num_colors = 0;
  for (const Json& entry : coloring) {
    const std::size_t v = vertex(field(entry, "vertex"), cert.spec);
    const std::int64_t color = integer(field(entry, "color"), "color");
    if (color < 1 || color > static_cast<std::int64_t>(count)) {
      throw ParseError("color out of range");
    }
    if (colors[v] != -1) throw ParseError("coloring lists a vertex twice");
    colors[v] = static_cast<int>(color - 1);
    num_colors = std::max(num_colors, static_cast<int>(color));
  }
  if (std::find(colors.begin(), colors.end(), -1) != colors.end()) {
    throw ParseError("coloring does not list every vertex");
  }
  cert.coloring = Coloring(std::move(colors), num_colors);

  const Json& upper = field(doc, "upper");
  cert.upper_method = text(field(upper, "method"), "upper.method");
  if (upper.contains("detset")) {
    const Json& detset = upper.at("detset");
    if (!detset.is_array()) throw ParseError("upper.detset must be a list");
    for (const Json& v : detset) cert.detset.push_back(vertex(v, cert.spec));
  }
  if (upper.contains("seed")) {
    const Json& seed = upper.at("seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
      throw ParseError("upper.seed must be a non-negative integer");
    }
    cert.seed = seed.get<std::uint64_t>();
  }
  const Json& lower = field(doc, "lower");
  cert.lower_method = text(field(lower, "method"), "lower.method");
  cert.lower_detail = text(field(lower, "detail"), "lower.detail");
  return cert;
}

}  // namespace mjdist
