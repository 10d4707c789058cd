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
#include "medianqmc/digital_net.hpp"

using namespace mqmc;

#ifndef MQMC_SOURCE_DATA_DIR
#define MQMC_SOURCE_DATA_DIR "."
#endif

TEST_CASE("psi") {
  const std::uint8_t d1[3] = {1, 0, 1};
  CHECK(psi(d1, 2) == 0.625);
  const std::uint8_t d2[4] = {0, 0, 0, 0};
  CHECK(psi(d2, 2) == 0.0);
  const std::uint8_t d3[2] = {2, 1};
  CHECK(psi(d3, 3) == doctest::Approx(7.0 / 9.0).epsilon(1e-15));
  const std::uint8_t bad[2] = {2, 0};
  CHECK_THROWS_AS(psi(bad, 2), std::invalid_argument);
}

TEST_CASE("point generation") {
  const GenMatrixSet id2(std::vector<GenMatrix>{GenMatrix::identity(2, 2)});
  const PointSet p = generate_points(id2);
  REQUIRE(p.size() == 4);
  CHECK(p.coord(0, 0) == 0.0);
  CHECK(p.coord(1, 0) == 0.5);
  CHECK(p.coord(2, 0) == 0.25);
  CHECK(p.coord(3, 0) == 0.75);

  const GenMatrixSet zero(std::vector<GenMatrix>{GenMatrix(2, 3, 3), GenMatrix(2, 3, 3)});
  const PointSet pz = generate_points(zero);
  for (std::uint64_t k = 0; k < pz.size(); ++k)
    for (int j = 0; j < 2; ++j) CHECK(pz.coord(k, j) == 0.0);

  // base 3 generation along the identity is the van der Corput ordering
  const GenMatrixSet id3(std::vector<GenMatrix>{GenMatrix::identity(3, 2)});
  const PointSet p3 = generate_points(id3);
  REQUIRE(p3.size() == 9);
  CHECK(p3.coord(1, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(p3.coord(2, 0) == doctest::Approx(2.0 / 3.0));
  CHECK(p3.coord(3, 0) == doctest::Approx(1.0 / 9.0));
  CHECK(p3.coord(8, 0) == doctest::Approx(8.0 / 9.0));
}

TEST_CASE("t-value by rank and dual") {
  const GenMatrixSet id(std::vector<GenMatrix>{GenMatrix::identity(2, 4)});
  CHECK(t_value_rank(id) == 0);
  CHECK(t_value_dual(id) == 0);

  GenMatrix anti(2, 2, 2);
  anti.set(0, 1, 1);
  anti.set(1, 0, 1);
  const GenMatrixSet mixed(std::vector<GenMatrix>{GenMatrix::identity(2, 2), anti});
  CHECK(t_value_rank(mixed) == 0);
  CHECK(t_value_dual(mixed) == 0);

  const GenMatrixSet twin(
      std::vector<GenMatrix>{GenMatrix::identity(2, 2), GenMatrix::identity(2, 2)});
  CHECK(t_value_rank(twin) == 1);
  CHECK(t_value_dual(twin) == 1);

  // refusal beyond the enumeration budget: 2^(13*2) > 2^24
  const GenMatrixSet big(
      std::vector<GenMatrix>{GenMatrix::identity(2, 13), GenMatrix::identity(2, 13)});
  CHECK_THROWS_AS(t_value_dual(big), InstanceTooLarge);
}

TEST_CASE("geometric net definition") {
  const PointSet quarters = PointSet::from_coords(2, 2, {{0.0}, {0.25}, {0.5}, {0.75}});
  CHECK(is_tms_net_geometric(quarters, 0));
  CHECK_THROWS_AS(is_tms_net_geometric(quarters, -1), std::invalid_argument);

  const GenMatrixSet sobol = sobol_matrices(2, 4);
  const PointSet p = generate_points(sobol);
  const int t = t_value_rank(sobol);
  CHECK(t == 0);
  CHECK(is_tms_net_geometric(p, t));
  // coarser interval families must also balance
  CHECK(is_tms_net_geometric(p, t + 1));
  CHECK(is_tms_net_geometric(p, t + 2));

  // a clumped set fails at t = 0
  const PointSet clump = PointSet::from_coords(2, 3, {{0.0}, {0.125}, {0.5}, {0.75}});
  CHECK_FALSE(is_tms_net_geometric(clump, 0));
}

TEST_CASE("niederreiter t-value bound") {
  const int u1[1] = {1};
  CHECK(niederreiter_tu_bound(u1, 2) == doctest::Approx(1.6644487074538894).epsilon(1e-12));
  const int u12[2] = {1, 2};
  CHECK(niederreiter_tu_bound(u12, 2) == doctest::Approx(4.664448707453889).epsilon(1e-12));
  CHECK_THROWS_AS(niederreiter_tu_bound(std::span<const int>{}, 2), std::invalid_argument);
  // the j = 1 term tends to 1 for large bases
  CHECK(niederreiter_tu_bound(u1, 1000003) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("sobol matrices") {
  for (int m : {1, 3, 5}) {
    const GenMatrixSet g = sobol_matrices(1, m);
    CHECK(g.matrix(0) == GenMatrix::identity(2, m));
  }
  CHECK(t_value_rank(sobol_matrices(2, 4)) == 0);
  CHECK(t_value_rank(sobol_matrices(3, 6)) == 1);
  for (int j = 0; j < 4; ++j) CHECK(sobol_matrices(4, 6).matrix(j).upper_block_nonsingular());

  CHECK_THROWS_AS(sobol_matrices(1000, 4), std::invalid_argument);
  CHECK_THROWS_AS(sobol_matrices(2, 60), std::invalid_argument);

  const DirectionTable& bundled = DirectionTable::bundled();
  CHECK(bundled.max_dimension() >= 64);
  const DirectionTable from_file =
      DirectionTable::load_file(std::string(MQMC_SOURCE_DATA_DIR) + "/joe-kuo-like-64.txt");
  CHECK(from_file.max_dimension() == bundled.max_dimension());
  CHECK(from_file.direction_integers(17, 20) == bundled.direction_integers(17, 20));
}

TEST_CASE("niederreiter matrices") {
  const GenMatrixSet g = niederreiter_matrices(2, 4, 2);
  const int u12[2] = {1, 2};
  CHECK(t_value_rank(g) <= niederreiter_tu_bound(u12, 2));
  for (int j = 0; j < 2; ++j) CHECK(g.matrix(j).upper_block_nonsingular());
  CHECK(g.matrix(0) == GenMatrix::identity(2, 4));  // modulus x gives van der Corput

  // extended rows stay consistent with the square block
  const GenMatrixSet tall = niederreiter_matrices(3, 3, 3, 10);
  CHECK(tall.rows() == 10);
  for (int j = 0; j < 3; ++j) {
    CHECK(tall.matrix(j).upper_block_nonsingular());
    for (int i = 0; i < 3; ++i)
      for (int r = 0; r < 3; ++r)
        CHECK(tall.matrix(j).at(i, r) == niederreiter_matrices(3, 3, 3).matrix(j).at(i, r));
  }
}

TEST_CASE("local discrepancy") {
  const PointSet two = PointSet::from_coords(2, 2, {{0.0}, {0.5}});
  const double y1[1] = {0.5};
  CHECK(local_discrepancy(two, y1) == 0.0);
  const double y2[1] = {1.0};
  CHECK(local_discrepancy(two, y2) == 0.0);

  const PointSet four = PointSet::from_coords(2, 2, {{0.0}, {0.25}, {0.5}, {0.75}});
  const double y3[1] = {0.3};
  CHECK(local_discrepancy(four, y3) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("matmul") {
  GenMatrix a(3, 2, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(1, 1, 1);
  const GenMatrix prod = matmul(a, GenMatrix::identity(3, 2));
  CHECK(prod == a);
}
