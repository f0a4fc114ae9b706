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

#ifndef MJDIST_ERRORS_HPP_
#define MJDIST_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mjdist {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (bad range, mismatched ground
// sets, malformed permutation, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The index set I of a merged Johnson graph was empty.
class EmptyIndexSet : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// A configured resource limit (vertex budget, search nodes, enumeration
// size, retry count) ran out before an exact answer was available.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed external input such as a certificate file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The requested construction does not cover the given instance.
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace mjdist

#endif  // MJDIST_ERRORS_HPP_
