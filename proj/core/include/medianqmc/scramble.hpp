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

#ifndef MEDIANQMC_SCRAMBLE_HPP
#define MEDIANQMC_SCRAMBLE_HPP

#include <cstdint>
#include <vector>

#include "medianqmc/digital_net.hpp"
#include "medianqmc/rng.hpp"

namespace mqmc {

/// Non-singular lower triangular w x n matrix over F_b: zero above the
/// diagonal, nonzero on it, free below.
class LowerTriScramble {
 public:
  LowerTriScramble(int base, int rows, int cols);
  static LowerTriScramble identity(int base, int rows, int cols);

  int base() const { return base_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint8_t at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, std::uint8_t v);

  /// |L_{w,n}| = (b-1)^n * b^{#free cells}; overflows are reported.
  static std::uint64_t family_size(int base, int rows, int cols);
  /// Bijective decoding of 0..family_size-1, for exhaustive enumeration.
  static LowerTriScramble from_index(int base, int rows, int cols, std::uint64_t index);

 private:
  int base_;
  int rows_;
  int cols_;
  std::vector<std::uint8_t> data_;  // row-major
};

/// Diagonal uniform on {1..b-1}, sub-diagonal uniform on {0..b-1},
/// independent entries; deterministic given the seed. Requires w >= n.
LowerTriScramble sample_scramble(int b, int w, int n, const SeedSpec& seed);

/// Exact F_b product L * C with L of shape w x n and C of shape n x m.
GenMatrix apply_scramble(const LowerTriScramble& l, const GenMatrix& c);

/// One draw from the scrambled family: independent L_j of shape w x m
/// applied to square non-singular base matrices.
GenMatrixSet draw_scrambled_net(const GenMatrixSet& base, int w, std::uint64_t master_seed,
                                std::uint64_t replicate);

}  // namespace mqmc

#endif
