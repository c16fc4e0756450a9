// Copyright 2026 The wignerlab Authors
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

#ifndef WIGNERLAB_ERRORS_H
#define WIGNERLAB_ERRORS_H

#include <stdexcept>
#include <string>

namespace wignerlab {

/// Operands built over different site layouts were combined.
class LayoutMismatch : public std::invalid_argument {
 public:
  explicit LayoutMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A dense materialization or solve would exceed the configured site cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  DimensionCapExceeded(const std::string& what, size_t requested_sites, size_t cap_sites)
      : std::runtime_error(what), requested_sites(requested_sites), cap_sites(cap_sites) {}
  size_t requested_sites;
  size_t cap_sites;
};

/// Iterative eigensolver hit its step cap.
class ConvergenceFailure : public std::runtime_error {
 public:
  ConvergenceFailure(const std::string& what, double residual)
      : std::runtime_error(what), residual(residual) {}
  double residual;
};

/// Malformed text in one of the serialization formats.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace wignerlab

#endif  // WIGNERLAB_ERRORS_H
