// Copyright 2026 The ibsplan Authors
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
//

#ifndef IBS_ERRORS_H_
#define IBS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ibs {

// An argument lies outside the mathematical domain of an operation
// (probability outside (0,1), negative time, r < 3, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A structurally valid argument that the operation is not defined for,
// e.g. asking for the d = 1 sufficient condition with a different shift.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A design search ran into its cap. Carries the best candidate seen so the
// caller can still report something useful.
class UnreachableTarget : public std::runtime_error {
 public:
  UnreachableTarget(const std::string& what, int best_r, double best_c_star)
      : std::runtime_error(what), best_r_(best_r), best_c_star_(best_c_star) {}

  int best_r() const { return best_r_; }
  double best_c_star() const { return best_c_star_; }

 private:
  int best_r_;
  double best_c_star_;
};

}  // namespace ibs

#endif  // IBS_ERRORS_H_
