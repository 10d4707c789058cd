// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You may
// obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEDIANQMC_COMMON_HPP
#define MEDIANQMC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mqmc {

/// Thrown when an exhaustive computation would exceed its hard budget.
/// Callers can catch this to report a refusal instead of hanging.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline void require_prime_base(int b) {
  require(is_prime(b), "base must be a prime, got " + std::to_string(b));
}

/// b^e for small arguments, with overflow guard.
inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) throw InstanceTooLarge("integer power overflows 64 bits");
    r *= b;
  }
  return r;
}

}  // namespace detail
}  // namespace mqmc

#endif
