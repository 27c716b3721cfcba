// Copyright 2026 The RBN Authors
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

#ifndef RBN_VERIFY_HPP
#define RBN_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rbn {

/// Outcome of one executable property over `samples` random instances.
struct PropertyResult {
  std::string name;
  int samples = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Runs every property suite with instances drawn from `seed`. Throws
/// InvalidArgument when samples < 1.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed, int samples);

}  // namespace rbn

#endif  // RBN_VERIFY_HPP
