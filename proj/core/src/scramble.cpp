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

#include "medianqmc/scramble.hpp"

#include <algorithm>
#include <bit>

namespace mqmc {

LowerTriScramble::LowerTriScramble(int base, int rows, int cols)
    : base_(base), rows_(rows), cols_(cols) {
  detail::require_prime_base(base);
  detail::require(rows >= cols && cols >= 1, "scramble shape needs w >= n >= 1");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < cols; ++i) data_[static_cast<std::size_t>(i) * cols + i] = 1;
}

LowerTriScramble LowerTriScramble::identity(int base, int rows, int cols) {
  return LowerTriScramble(base, rows, cols);
}

void LowerTriScramble::set(int i, int j, std::uint8_t v) {
  detail::require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "index out of range");
  detail::require(v < base_, "entry out of range for base");
  detail::require(i >= j, "entries above the diagonal are fixed at zero");
  if (i == j) detail::require(v != 0, "diagonal entries must be nonzero");
  data_[static_cast<std::size_t>(i) * cols_ + j] = v;
}

std::uint64_t LowerTriScramble::family_size(int base, int rows, int cols) {
  // free sub-diagonal cells: row i (0-based) has min(i, cols) of them
  std::uint64_t n = 1;
  for (int j = 0; j < cols; ++j) {
    if (n > UINT64_MAX / static_cast<unsigned>(base - 1)) throw InstanceTooLarge("family too large");
    n *= static_cast<unsigned>(base - 1);
  }
  for (int i = 0; i < rows; ++i) {
    const int free_cells = std::min(i, cols);
    for (int c = 0; c < free_cells; ++c) {
      if (n > UINT64_MAX / static_cast<unsigned>(base)) throw InstanceTooLarge("family too large");
      n *= static_cast<unsigned>(base);
    }
  }
  return n;
}

LowerTriScramble LowerTriScramble::from_index(int base, int rows, int cols, std::uint64_t index) {
  LowerTriScramble l(base, rows, cols);
  for (int j = 0; j < cols; ++j) {
    l.set(j, j, static_cast<std::uint8_t>(1 + index % (base - 1)));
    index /= base - 1;
  }
  for (int i = 1; i < rows; ++i)
    for (int j = 0; j < std::min(i, cols); ++j) {
      l.data_[static_cast<std::size_t>(i) * cols + j] = static_cast<std::uint8_t>(index % base);
      index /= base;
    }
  detail::require(index == 0, "scramble index out of range");
  return l;
}

LowerTriScramble sample_scramble(int b, int w, int n, const SeedSpec& seed) {
  detail::require(w >= n && n >= 1, "sample_scramble needs w >= n >= 1");
  LowerTriScramble l(b, w, n);
  for (int i = 0; i < w; ++i) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(i));
    if (i < n) l.set(i, i, static_cast<std::uint8_t>(1 + rng.below(static_cast<std::uint32_t>(b - 1))));
    for (int j = 0; j < std::min(i, n); ++j)
      l.data_[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(rng.below(static_cast<std::uint32_t>(b)));
  }
  return l;
}

GenMatrix apply_scramble(const LowerTriScramble& l, const GenMatrix& c) {
  detail::require(l.base() == c.base(), "mismatched bases");
  detail::require(l.cols() == c.rows(), "shape mismatch: L is w x n, C must be n x m");
  const int b = l.base();
  const int w = l.rows();
  const int n = l.cols();
  const int m = c.cols();
  GenMatrix out(b, w, m);
  if (b == 2) {
    std::vector<std::uint64_t> lrows(w);
    for (int i = 0; i < w; ++i) {
      std::uint64_t mask = 0;
      for (int j = 0; j < n; ++j)
        if (l.at(i, j)) mask |= std::uint64_t{1} << j;
      lrows[i] = mask;
    }
    for (int r = 0; r < m; ++r) {
      const std::uint64_t col = c.col_mask(r);
      for (int i = 0; i < w; ++i)
        if (std::popcount(lrows[i] & col) & 1) out.set(i, r, 1);
    }
    return out;
  }
  for (int r = 0; r < m; ++r)
    for (int i = 0; i < w; ++i) {
      int acc = 0;
      for (int j = 0; j <= std::min(i, n - 1); ++j) acc += l.at(i, j) * c.at(j, r);
      if (acc % b) out.set(i, r, static_cast<std::uint8_t>(acc % b));
    }
  return out;
}

GenMatrixSet draw_scrambled_net(const GenMatrixSet& base, int w, std::uint64_t master_seed,
                                std::uint64_t replicate) {
  detail::require(base.rows() == base.cols(), "scrambled draws need square base matrices");
  detail::require(w >= base.rows(), "precision w must be at least m");
  for (int j = 0; j < base.dim(); ++j)
    detail::require(base.matrix(j).upper_block_nonsingular(), "base matrices must be non-singular");
  std::vector<GenMatrix> mats;
  mats.reserve(base.dim());
  for (int j = 0; j < base.dim(); ++j) {
    const SeedSpec seed{master_seed, replicate, static_cast<std::uint64_t>(j)};
    const LowerTriScramble l = sample_scramble(base.base(), w, base.rows(), seed);
    mats.push_back(apply_scramble(l, base.matrix(j)));
  }
  return GenMatrixSet(std::move(mats));
}

}  // namespace mqmc
