// Copyright 2026 The wcrte Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WCRTE_ERROR_H_
#define WCRTE_ERROR_H_

#include <stdexcept>
#include <string>

namespace wcrte {

// Root of the library's exception hierarchy. The CLI maps each subclass to a
// distinct exit code (parse 2, domain 3, numeric 4).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input: model/estimator strings, data files, config JSON.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value outside the mathematical domain of an operation: nonpositive
// parameters, u outside (0,1), a window m >= n/2, a diverging measure.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical procedure failed to reach its tolerance (quadrature).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace wcrte

#endif  // WCRTE_ERROR_H_
