// Copyright 2026 The zfcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace zfc {

/// Invalid input: malformed graph, bad id, violated precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters outside the region where the algorithm is guaranteed.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Enumeration cap exceeded or similar resource limit.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quantity that must be nonzero vanished numerically.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Series division by a series with vanishing constant term.
class DivisionError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Truncation schedule exhausted without stabilizing.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Too few usable data points for a fit.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zfc
