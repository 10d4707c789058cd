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

#include <cmath>

#include "doctest.h"
#include "medianqmc/weight_fns.hpp"

using namespace mqmc;

TEST_CASE("nrt weight") {
  CHECK(mu1(0, 2) == 0);
  CHECK(mu1(6, 2) == 3);
  CHECK(mu1(1, 2) == 1);
  CHECK(mu1(8, 3) == 2);  // 8 = 2*3 + 2

  const std::uint64_t k[3] = {6, 1, 0};
  CHECK(mu1_vec(k, 2) == 4);
}

TEST_CASE("dick weight") {
  CHECK(mu_alpha(6, 2, 2) == 5);
  CHECK(mu_alpha(1, 2, 2) == 1);
  CHECK(mu_alpha(7, 3, 2) == 6);
  CHECK(mu_alpha(0, 2, 2) == 0);
  CHECK_THROWS_AS(mu_alpha(6, 1, 2), std::invalid_argument);
}

TEST_CASE("modified infinite dick weight") {
  CHECK(mu_inf_a(6, 1.0, 2) == doctest::Approx(7.0));
  CHECK(mu_inf_a(6, 0.0, 2) == doctest::Approx(5.0));  // full digit-position sum
  CHECK(mu_inf_a(0, 3.5, 2) == 0.0);

  const std::uint64_t k[2] = {6, 1};
  const double a[2] = {1.0, 2.0};
  CHECK(mu_inf_a_vec(k, a, 2) == doctest::Approx(7.0 + 3.0));
}

TEST_CASE("weight ordering") {
  for (int base : {2, 3}) {
    for (std::uint64_t k = 0; k <= (1u << 16); k += 7) {
      const long long m1 = mu1(k, base);
      long long prev = m1;
      for (int alpha : {2, 3, 4}) {
        const long long ma = mu_alpha(k, alpha, base);
        CHECK(ma >= prev);
        prev = ma;
      }
      CHECK(static_cast<double>(prev) <= mu_inf_a(k, 0.0, base) + 1e-12);
    }
  }
}

TEST_CASE("rtilde") {
  CHECK(rtilde(0, 2) == 1.0);
  CHECK(rtilde(5, 2) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(rtilde(2, 3) == doctest::Approx(4.0 / 9.0).epsilon(1e-14));

  // b = 2, m = 2: 1/2 + 1/4 + 1/4 = 1 = m (b^2-1)/(3b)
  double sum = 0.0;
  for (std::uint64_t k = 1; k < 4; ++k) sum += rtilde(k, 2);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("digit profile reconstruction") {
  for (int base : {2, 3, 5}) {
    for (std::uint64_t k : {0ull, 1ull, 17ull, 12345ull}) {
      const DigitProfile p = digit_profile(k, base);
      std::uint64_t rebuilt = 0;
      for (int i = 0; i < p.count(); ++i) {
        std::uint64_t place = 1;
        for (int e = 1; e < p.positions[i]; ++e) place *= static_cast<unsigned>(base);
        rebuilt += p.digits[i] * place;
      }
      CHECK(rebuilt == k);
      CHECK((p.count() == 0) == (k == 0));
      for (int i = 1; i < p.count(); ++i) CHECK(p.positions[i - 1] > p.positions[i]);
    }
  }
}
