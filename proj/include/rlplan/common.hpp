// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlplan {

using Count = std::int64_t;
using Bytes = std::int64_t;
using Seconds = double;
using NodeId = int;
using DeviceId = int;  // global index: node * gpus_per_node + gpu

inline bool is_power_of_two(Count x) { return x > 0 && (x & (x - 1)) == 0; }

inline Count ceil_div(Count a, Count b) { return (a + b - 1) / b; }

// Thrown when a spec'd invariant on an input value is violated.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// Non-throwing check result used by graph/plan validators.
struct Violation {
  std::string message;
};

}  // namespace rlplan
