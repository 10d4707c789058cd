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
#include "medianqmc/scramble.hpp"

using namespace mqmc;

TEST_CASE("sampling shape and determinism") {
  CHECK_THROWS_AS(sample_scramble(2, 2, 3, SeedSpec{}), std::invalid_argument);

  const SeedSpec seed{42, 3, 1};
  const LowerTriScramble a = sample_scramble(2, 6, 4, seed);
  const LowerTriScramble b = sample_scramble(2, 6, 4, seed);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a.at(i, j) == b.at(i, j));

  // base 2 forces every diagonal entry to 1; above the diagonal is zero
  for (int i = 0; i < 4; ++i) CHECK(a.at(i, i) == 1);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(a.at(i, j) == 0);

  // distinct replicate or dimension indices give distinct draws
  const LowerTriScramble c = sample_scramble(2, 6, 4, SeedSpec{42, 4, 1});
  bool all_equal = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) all_equal = all_equal && a.at(i, j) == c.at(i, j);
  CHECK_FALSE(all_equal);
}

TEST_CASE("apply_scramble") {
  // identity scramble zero-pads C below row m
  GenMatrix c(2, 2, 2);
  c.set(0, 0, 1);
  c.set(1, 1, 1);
  const GenMatrix padded = apply_scramble(LowerTriScramble::identity(2, 5, 2), c);
  CHECK(padded.rows() == 5);
  for (int i = 0; i < 2; ++i)
    for (int r = 0; r < 2; ++r) CHECK(padded.at(i, r) == c.at(i, r));
  for (int i = 2; i < 5; ++i)
    for (int r = 0; r < 2; ++r) CHECK(padded.at(i, r) == 0);

  // single sub-diagonal 1 at (2,1): rows become (1,0) and (1,1)
  LowerTriScramble l(2, 2, 2);
  l.set(1, 0, 1);
  const GenMatrix prod = apply_scramble(l, GenMatrix::identity(2, 2));
  CHECK(prod.at(0, 0) == 1);
  CHECK(prod.at(0, 1) == 0);
  CHECK(prod.at(1, 0) == 1);
  CHECK(prod.at(1, 1) == 1);

  CHECK_THROWS_AS(apply_scramble(l, GenMatrix::identity(2, 3)), std::invalid_argument);
}

TEST_CASE("composition is associative") {
  for (int b : {2, 3}) {
    Rng dummy(0);
    for (int trial = 0; trial < 20; ++trial) {
      const SeedSpec s1{7, static_cast<std::uint64_t>(trial), 0};
      const SeedSpec s2{7, static_cast<std::uint64_t>(trial), 1};
      const LowerTriScramble l1 = sample_scramble(b, 6, 4, s1);
      const LowerTriScramble l2 = sample_scramble(b, 4, 4, s2);
      GenMatrix cmat(b, 4, 3);
      Rng rng = make_stream(11, {static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(trial)});
      for (int i = 0; i < 4; ++i)
        for (int r = 0; r < 3; ++r)
          cmat.set(i, r, static_cast<std::uint8_t>(rng.below(static_cast<std::uint32_t>(b))));

      // L2 as a plain matrix
      GenMatrix l2mat(b, 4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) l2mat.set(i, j, l2.at(i, j));

      const GenMatrix left = matmul(apply_scramble(l1, l2mat), cmat);
      const GenMatrix right = apply_scramble(l1, apply_scramble(l2, cmat));
      CHECK(left == right);
    }
  }
}

TEST_CASE("family enumeration") {
  CHECK(LowerTriScramble::family_size(2, 2, 2) == 2);
  CHECK(LowerTriScramble::family_size(2, 3, 2) == 8);
  CHECK(LowerTriScramble::family_size(2, 3, 3) == 8);
  CHECK(LowerTriScramble::family_size(3, 2, 2) == 4 * 3);

  // decode covers the family without repetition
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < 8; ++i) {
    const LowerTriScramble l = LowerTriScramble::from_index(2, 3, 2, i);
    std::string key;
    for (int r = 0; r < 3; ++r)
      for (int j = 0; j < 2; ++j) key += static_cast<char>('0' + l.at(r, j));
    seen.insert(key);
  }
  CHECK(seen.size() == 8);
}

TEST_CASE("scrambled draws preserve the t-value") {
  const GenMatrixSet base = sobol_matrices(2, 4);
  const int t0 = t_value_rank(base);
  for (int rep = 0; rep < 10; ++rep) {
    const GenMatrixSet drawn = draw_scrambled_net(base, 52, 99, rep);
    CHECK(drawn.rows() == 52);
    CHECK(t_value_rank(drawn) == t0);
  }

  GenMatrix singular(2, 2, 2);
  singular.set(0, 0, 1);  // second row zero
  CHECK_THROWS_AS(draw_scrambled_net(GenMatrixSet(std::vector<GenMatrix>{singular}), 52, 0, 0),
                  std::invalid_argument);
}
