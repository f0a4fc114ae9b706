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

#ifndef MJDIST_CERTIFICATE_JSON_HPP_
#define MJDIST_CERTIFICATE_JSON_HPP_

#include <string>
#include <string_view>

#include "mjdist/dist_engine.hpp"

namespace mjdist {

// Serializes with keys in the fixed order n, k, I, dist, coloring, upper,
// lower. Vertices are written as sorted 1-based element lists and colors
// are 1-based.
std::string to_json(const Certificate& cert);

// Inverse of to_json(). Throws ParseError on invalid JSON, missing or
// mistyped fields, vertices that are not k-subsets of [n], or a coloring
// that does not list every vertex exactly once. Semantic checks are left to
// verify_certificate().
Certificate certificate_from_json(std::string_view text);

}  // namespace mjdist

#endif  // MJDIST_CERTIFICATE_JSON_HPP_
