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

#include "medianqmc/weight_fns.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "medianqmc/common.hpp"

namespace mqmc {

DigitProfile digit_profile(std::uint64_t k, int base) {
  detail::require_prime_base(base);
  DigitProfile p;
  p.k = k;
  p.base = base;
  int pos = 1;
  while (k != 0) {
    const auto d = static_cast<std::uint8_t>(k % base);
    if (d != 0) {
      p.positions.push_back(pos);
      p.digits.push_back(d);
    }
    k /= base;
    ++pos;
  }
  std::reverse(p.positions.begin(), p.positions.end());
  std::reverse(p.digits.begin(), p.digits.end());
  return p;
}

int mu1(std::uint64_t k, int base) {
  if (k == 0) return 0;
  if (base == 2) return 64 - static_cast<int>(std::countl_zero(k));
  int pos = 0;
  while (k != 0) {
    k /= static_cast<unsigned>(base);
    ++pos;
  }
  return pos;
}

long long mu1_vec(std::span<const std::uint64_t> k, int base) {
  long long s = 0;
  for (std::uint64_t kj : k) s += mu1(kj, base);
  return s;
}

long long mu_alpha(std::uint64_t k, int alpha, int base) {
  detail::require(alpha >= 2, "mu_alpha requires alpha >= 2; use mu1 for alpha = 1");
  const DigitProfile p = digit_profile(k, base);
  long long s = 0;
  const int take = std::min<int>(alpha, p.count());
  for (int i = 0; i < take; ++i) s += p.positions[i];
  return s;
}

long long mu_alpha_vec(std::span<const std::uint64_t> k, int alpha, int base) {
  long long s = 0;
  for (std::uint64_t kj : k) s += mu_alpha(kj, alpha, base);
  return s;
}

double mu_inf_a(std::uint64_t k, double a, int base) {
  const DigitProfile p = digit_profile(k, base);
  double s = 0.0;
  for (int c : p.positions) s += c + a;
  return s;
}

double mu_inf_a_vec(std::span<const std::uint64_t> k, std::span<const double> a, int base) {
  detail::require(a.size() >= k.size(), "need one decay exponent per coordinate");
  double s = 0.0;
  for (std::size_t j = 0; j < k.size(); ++j) s += mu_inf_a(k[j], a[j], base);
  return s;
}

double rtilde(std::uint64_t k, int base) {
  detail::require_prime_base(base);
  if (k == 0) return 1.0;
  const int a = mu1(k, base);
  std::uint64_t top = k;
  for (int i = 1; i < a; ++i) top /= static_cast<unsigned>(base);
  const double s = std::sin(std::numbers::pi * static_cast<double>(top) / base);
  return std::pow(static_cast<double>(base), -a) / (s * s);
}

}  // namespace mqmc
