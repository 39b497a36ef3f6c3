// Copyright 2026 The Authors.
//
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

#ifndef MATROIDSWAP_ERRORS_H_
#define MATROIDSWAP_ERRORS_H_

#include <stdexcept>

namespace matroidswap {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed instance, allocation or priority input.
class InstanceError : public Error {
 public:
  using Error::Error;
};

// A valuation oracle was queried outside its domain (unknown good, missing
// explicit-table entry, marginal of a good already in the set).
class OracleError : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration would exceed its configured limits.
class GuardError : public Error {
 public:
  using Error::Error;
};

// A transfer path no longer matches the allocation it is applied to.
class StalePathError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed. Always indicates a bug in this library.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace matroidswap

#endif  // MATROIDSWAP_ERRORS_H_
