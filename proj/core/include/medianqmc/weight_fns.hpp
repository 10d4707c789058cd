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

#ifndef MEDIANQMC_WEIGHT_FNS_HPP
#define MEDIANQMC_WEIGHT_FNS_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace mqmc {

/// Nonzero base-b digits of k: positions c_1 > c_2 > ... > c_v > 0 and the
/// digit values kappa_1..kappa_v, so that k = sum_i kappa_i b^{c_i - 1}.
struct DigitProfile {
  std::uint64_t k = 0;
  int base = 2;
  std::vector<int> positions;          // descending
  std::vector<std::uint8_t> digits;    // matching kappa_i
  int count() const { return static_cast<int>(positions.size()); }
};

DigitProfile digit_profile(std::uint64_t k, int base);

/// NRT weight: position of the highest nonzero base-b digit; 0 at k = 0.
int mu1(std::uint64_t k, int base);
long long mu1_vec(std::span<const std::uint64_t> k, int base);

/// Dick weight of order alpha >= 2: sum of the alpha largest digit positions.
long long mu_alpha(std::uint64_t k, int alpha, int base);
long long mu_alpha_vec(std::span<const std::uint64_t> k, int alpha, int base);

/// Modified infinite Dick weight: sum_i (c_i + a) over all nonzero digits.
double mu_inf_a(std::uint64_t k, double a, int base);
double mu_inf_a_vec(std::span<const std::uint64_t> k, std::span<const double> a, int base);

/// Discrepancy kernel: 1 at k = 0, otherwise b^{-a} (sin(pi kappa / b))^{-2}
/// with a the top digit position and kappa the leading digit.
double rtilde(std::uint64_t k, int base);

}  // namespace mqmc

#endif
