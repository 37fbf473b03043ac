// Copyright 2026 The mda-solvers Authors.
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

#ifndef MDA_ERRORS_H_
#define MDA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mda {

// Two objects that must live on the same strategy grid do not.
class GridMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative numeric procedure (bisection, fixed point) failed to reach
// its tolerance. Carries the final residual and iteration count.
class NumericError : public std::runtime_error {
 public:
  NumericError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what + " (residual=" + std::to_string(residual) +
                           ", iterations=" + std::to_string(iterations) + ")"),
        residual_(residual),
        iterations_(iterations) {}

  double residual() const { return residual_; }
  int iterations() const { return iterations_; }

 private:
  double residual_;
  int iterations_;
};

// Operation is not defined for the given geometry or payoff family.
class UnsupportedOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Experiment configuration is malformed or references unknown names.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Reading or writing result files failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mda

#endif  // MDA_ERRORS_H_
