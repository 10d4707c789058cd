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

#include "doctest.h"
#include "medianqmc/gf_poly.hpp"

using namespace mqmc;

TEST_CASE("scalar and polynomial construction") {
  CHECK_THROWS_AS(GfScalar(4, 1), std::invalid_argument);  // base must be prime
  CHECK_THROWS_AS(GfScalar(3, 3), std::invalid_argument);
  CHECK(GfScalar(5, 4).value == 4);

  const GfPoly zero(2);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == GfPoly::kZeroDegree);

  // trailing zeros are stripped to canonical form
  const GfPoly p(2, {1, 1, 0, 0});
  CHECK(p.degree() == 1);
  CHECK(p == GfPoly(2, {1, 1}));

  CHECK(GfPoly::from_integer(2, 6) == GfPoly(2, {0, 1, 1}));
  CHECK(GfPoly::from_integer(3, 7) == GfPoly(3, {1, 2}));
  CHECK(GfPoly::from_integer(2, 11).to_integer() == 11);
}

TEST_CASE("poly_mulmod") {
  const GfPoly p(2, {1, 1, 1});  // x^2 + x + 1
  const GfPoly x_plus_1(2, {1, 1});

  CHECK(poly_mulmod(x_plus_1, x_plus_1, p) == GfPoly(2, {0, 1}));  // (x+1)^2 = x mod p

  const GfPoly a = GfPoly::from_integer(2, 13);
  CHECK(poly_mulmod(a, GfPoly(2), p).is_zero());
  const GfPoly c(2, {1, 1});
  CHECK(poly_mulmod(GfPoly::one(2), c, p) == c);

  CHECK_THROWS_AS(poly_mulmod(GfPoly::one(3), c, p), std::invalid_argument);
  CHECK_THROWS_AS(poly_mulmod(a, c, GfPoly(2)), std::invalid_argument);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible(GfPoly(2, {1, 1, 1})));
  CHECK_FALSE(is_irreducible(GfPoly(2, {0, 0, 1})));  // x^2 = x * x
  CHECK_THROWS_AS(is_irreducible(GfPoly::one(2)), std::invalid_argument);

  // exactly two monic irreducible cubics over F_2
  int count = 0;
  std::vector<GfPoly> found;
  for (int v = 0; v < 8; ++v) {
    GfPoly p(2, {static_cast<std::uint8_t>(v & 1), static_cast<std::uint8_t>((v >> 1) & 1),
                 static_cast<std::uint8_t>((v >> 2) & 1), 1});
    if (is_irreducible(p)) {
      ++count;
      found.push_back(p);
    }
  }
  CHECK(count == 2);
  CHECK(found[0] == GfPoly(2, {1, 1, 0, 1}));  // x^3 + x + 1
  CHECK(found[1] == GfPoly(2, {1, 0, 1, 1}));  // x^3 + x^2 + 1
}

TEST_CASE("modulus enumeration and sampling") {
  CHECK(enumerate_moduli(2, 3).members().size() == 2);
  CHECK(enumerate_moduli(3, 2).members().size() == 3);

  const auto& deg1 = enumerate_moduli(2, 1).members();
  REQUIRE(deg1.size() == 2);
  CHECK(deg1[0] == GfPoly(2, {0, 1}));  // x
  CHECK(deg1[1] == GfPoly(2, {1, 1}));  // x + 1

  Rng a(123), b(123);
  CHECK(sample_modulus(2, 4, a) == sample_modulus(2, 4, b));
  Rng c(5);
  for (int i = 0; i < 20; ++i) {
    const GfPoly p = sample_modulus(2, 4, c);
    CHECK(p.degree() == 4);
    CHECK(p.is_monic());
    CHECK(is_irreducible(p));
  }
}

TEST_CASE("laurent digits") {
  const GfPoly p(2, {1, 1, 1});
  const auto d = laurent_digits(GfPoly::one(2), p, 6);
  CHECK(d == std::vector<std::uint8_t>{0, 1, 1, 0, 1, 1});

  CHECK(laurent_digits(GfPoly(2), p, 4) == std::vector<std::uint8_t>{0, 0, 0, 0});
  CHECK(laurent_digits(GfPoly::one(2), GfPoly(2, {0, 1}), 4) ==
        std::vector<std::uint8_t>{1, 0, 0, 0});

  CHECK_THROWS_AS(laurent_digits(GfPoly(2, {1, 1, 1}), p, 4), std::invalid_argument);
  CHECK_THROWS_AS(laurent_digits(GfPoly::one(2), p, 0), std::invalid_argument);

  // p * (truncated series) reproduces g up to the truncation order:
  // multiply back and check the x^{-1}..x^{-4} coefficients vanish
  // around the known expansion 1/p = x^-2 + x^-3 + x^-5 + x^-6 + ...
  const auto d10 = laurent_digits(GfPoly::one(2), p, 10);
  for (int i = 0; i < 4; ++i) {
    // coefficient of x^{-(i+1)} in p * sum u_j x^{-j}: sum over l of p_l u_{l+i+1}
    int acc = 0;
    for (int l = 0; l <= p.degree(); ++l) acc += p.coeff(l) * d10[l + i];
    // the product must equal 1 = x^0, so every negative-power coefficient is 0
    // (index shift: x^{-(i+1)} collects p_l u_{l+i+1}, 1-based u)
    CHECK(acc % 2 == 0);
  }
}
