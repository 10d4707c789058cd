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
#include "medianqmc/poly_lattice.hpp"

using namespace mqmc;

namespace {
const GfPoly kQuadratic(2, {1, 1, 1});  // x^2 + x + 1
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PlrSpec(2, 2, GfPoly(2, {0, 0, 1}), {GfPoly::one(2)}, 4),
                  std::invalid_argument);  // reducible modulus
  CHECK_THROWS_AS(PlrSpec(2, 2, kQuadratic, {GfPoly(2)}, 4), std::invalid_argument);  // zero g
  CHECK_THROWS_AS(PlrSpec(2, 2, kQuadratic, {GfPoly::one(2)}, 1), std::invalid_argument);  // w < m
  CHECK_THROWS_AS(PlrSpec(2, 2, kQuadratic, {GfPoly(2, {1, 1, 1})}, 4),
                  std::invalid_argument);  // deg g >= m
}

TEST_CASE("worked point set") {
  const PlrSpec spec(2, 2, kQuadratic, {GfPoly::one(2)}, 4);
  const PointSet p = plr_points(spec);
  REQUIRE(p.size() == 4);
  CHECK(p.coord(0, 0) == 0.0);
  CHECK(p.coord(1, 0) == 0.375);
  CHECK(p.coord(2, 0) == 0.8125);
  CHECK(p.coord(3, 0) == 0.6875);
}

TEST_CASE("hankel generating matrices") {
  const PlrSpec spec(2, 2, kQuadratic, {GfPoly::one(2)}, 4);
  const GenMatrixSet g = plr_gen_matrices(spec);
  REQUIRE(g.rows() == 4);
  REQUIRE(g.cols() == 2);
  const std::uint8_t col0[4] = {0, 1, 1, 0};
  const std::uint8_t col1[4] = {1, 1, 0, 1};
  for (int i = 0; i < 4; ++i) {
    CHECK(g.matrix(0).at(i, 0) == col0[i]);
    CHECK(g.matrix(0).at(i, 1) == col1[i]);
  }

  // Hankel structure: entry (i, r) == entry (i-1, r+1)
  const PlrSpec spec3(2, 3, GfPoly(2, {1, 1, 0, 1}), {GfPoly(2, {1, 1})}, 8);
  const GenMatrixSet g3 = plr_gen_matrices(spec3);
  for (int i = 1; i < g3.rows(); ++i)
    for (int r = 0; r + 1 < g3.cols(); ++r)
      CHECK(g3.matrix(0).at(i, r) == g3.matrix(0).at(i - 1, r + 1));

  // m = 1 with p = x: the single column is the expansion of 1/x
  const PlrSpec spec1(2, 1, GfPoly(2, {0, 1}), {GfPoly::one(2)}, 4);
  const GenMatrixSet g1 = plr_gen_matrices(spec1);
  CHECK(g1.matrix(0).at(0, 0) == 1);
  for (int i = 1; i < 4; ++i) CHECK(g1.matrix(0).at(i, 0) == 0);

  // the two construction routes agree bit for bit
  CHECK(plr_points(spec) == generate_points(g));
  CHECK(plr_points(spec3) == generate_points(g3));
}

TEST_CASE("dual membership") {
  const PlrSpec spec(2, 2, kQuadratic, {GfPoly::one(2), GfPoly::one(2)}, 4);
  const std::uint64_t k11[2] = {1, 1};
  CHECK(plr_dual_member(k11, spec));
  const std::uint64_t k00[2] = {0, 0};
  CHECK(plr_dual_member(k00, spec));
  const std::uint64_t k10[2] = {1, 0};
  CHECK_FALSE(plr_dual_member(k10, spec));

  // exhaustive over P_2 x G_2^2: k = (1,1) is dual for exactly 1/3 of draws
  std::uint64_t member = 0, total = 0;
  for (std::uint64_t g1 = 1; g1 < 4; ++g1)
    for (std::uint64_t g2 = 1; g2 < 4; ++g2) {
      const PlrSpec s(2, 2, kQuadratic,
                      {GfPoly::from_integer(2, g1), GfPoly::from_integer(2, g2)}, 4);
      ++total;
      if (plr_dual_member(k11, s)) ++member;
    }
  CHECK(total == 9);
  CHECK(member == 3);
}

TEST_CASE("sampling") {
  const SeedSpec seed{2024, 5, 0};
  const PlrSpec a = sample_plr(2, 3, 4, 52, seed);
  const PlrSpec b = sample_plr(2, 3, 4, 52, seed);
  CHECK(a.modulus == b.modulus);
  for (int j = 0; j < 4; ++j) {
    CHECK(a.generators[j] == b.generators[j]);
    CHECK_FALSE(a.generators[j].is_zero());
    CHECK(a.generators[j].degree() < 3);
  }
  CHECK(a.modulus.degree() == 3);
  CHECK(is_irreducible(a.modulus));
}
