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

#include "medianqmc/digital_net.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "medianqmc/gf_poly.hpp"
#include "medianqmc/weight_fns.hpp"

namespace mqmc {

namespace detail {
const char* bundled_direction_table_text();
const char* bundled_direction_table_id();
}  // namespace detail

// ---------------------------------------------------------------------------
// GenMatrix / GenMatrixSet

GenMatrix::GenMatrix(int base, int rows, int cols) : base_(base), rows_(rows), cols_(cols) {
  detail::require_prime_base(base);
  detail::require(rows >= 1 && cols >= 1, "matrix shape must be positive");
  if (base == 2)
    detail::require(rows <= 64 && cols <= 64, "base-2 matrices are limited to 64 rows/cols");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

GenMatrix GenMatrix::identity(int base, int n) {
  GenMatrix m(base, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void GenMatrix::set(int i, int r, std::uint8_t v) {
  detail::require(i >= 0 && i < rows_ && r >= 0 && r < cols_, "matrix index out of range");
  detail::require(v < base_, "matrix entry out of range for base");
  data_[static_cast<std::size_t>(r) * rows_ + i] = v;
}

std::uint64_t GenMatrix::row_mask(int i) const {
  std::uint64_t mask = 0;
  for (int r = 0; r < cols_; ++r)
    if (at(i, r)) mask |= std::uint64_t{1} << r;
  return mask;
}

std::uint64_t GenMatrix::col_mask(int r) const {
  std::uint64_t mask = 0;
  for (int i = 0; i < rows_; ++i)
    if (at(i, r)) mask |= std::uint64_t{1} << i;
  return mask;
}

namespace {

// Gaussian elimination rank over F_b on dense byte rows of width `cols`.
int rank_dense(std::vector<std::vector<std::uint8_t>>& rows, int cols, int b) {
  int rank = 0;
  const int n = static_cast<int>(rows.size());
  for (int c = 0; c < cols && rank < n; ++c) {
    int pivot = -1;
    for (int i = rank; i < n; ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    // normalize pivot row
    int inv = 1;
    {
      int x = rows[rank][c];
      for (int e = b - 2; e > 0; e >>= 1) {
        if (e & 1) inv = inv * x % b;
        x = x * x % b;
      }
    }
    for (int cc = c; cc < cols; ++cc)
      rows[rank][cc] = static_cast<std::uint8_t>(rows[rank][cc] * inv % b);
    for (int i = 0; i < n; ++i) {
      if (i == rank || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (int cc = c; cc < cols; ++cc)
        rows[i][cc] = static_cast<std::uint8_t>((rows[i][cc] + (b - f) * rows[rank][cc]) % b);
    }
    ++rank;
  }
  return rank;
}

int rank_bits(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t p = rows[i];
    if (p == 0) continue;
    const int hb = 63 - std::countl_zero(p);
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && ((rows[j] >> hb) & 1u)) rows[j] ^= p;
    ++rank;
  }
  return rank;
}

}  // namespace

bool GenMatrix::upper_block_nonsingular() const {
  detail::require(rows_ >= cols_, "upper block requires rows >= cols");
  if (base_ == 2) {
    std::vector<std::uint64_t> rows;
    rows.reserve(cols_);
    for (int i = 0; i < cols_; ++i) rows.push_back(row_mask(i));
    return rank_bits(std::move(rows)) == cols_;
  }
  std::vector<std::vector<std::uint8_t>> rows;
  for (int i = 0; i < cols_; ++i) {
    std::vector<std::uint8_t> row(cols_);
    for (int r = 0; r < cols_; ++r) row[r] = at(i, r);
    rows.push_back(std::move(row));
  }
  return rank_dense(rows, cols_, base_) == cols_;
}

GenMatrixSet::GenMatrixSet(std::vector<GenMatrix> mats) : mats_(std::move(mats)) {
  detail::require(!mats_.empty(), "a digital net needs at least one generating matrix");
  base_ = mats_[0].base();
  rows_ = mats_[0].rows();
  cols_ = mats_[0].cols();
  for (const auto& m : mats_) {
    detail::require(m.base() == base_ && m.rows() == rows_ && m.cols() == cols_,
                    "all generating matrices must share (b, n, m)");
  }
  detail::require(rows_ >= cols_, "generating matrices need n >= m");
}

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(int base, int precision, int dim, std::uint64_t count)
    : base_(base), precision_(precision), dim_(dim), count_(count) {
  detail::require_prime_base(base);
  detail::require(precision >= 1 && dim >= 1, "invalid point set shape");
  if (base == 2) {
    detail::require(precision <= 64, "base-2 precision is limited to 64 digits");
    words_.assign(count * dim, 0);
  } else {
    digits_.assign(count * dim * static_cast<std::uint64_t>(precision), 0);
  }
}

PointSet PointSet::from_coords(int base, int precision,
                               const std::vector<std::vector<double>>& pts) {
  detail::require(!pts.empty(), "empty point list");
  const int dim = static_cast<int>(pts[0].size());
  PointSet p(base, precision, dim, pts.size());
  for (std::uint64_t k = 0; k < pts.size(); ++k) {
    detail::require(static_cast<int>(pts[k].size()) == dim, "ragged point list");
    for (int j = 0; j < dim; ++j) {
      double x = pts[k][j];
      detail::require(x >= 0.0 && x < 1.0, "coordinates must lie in [0,1)");
      for (int pos = 1; pos <= precision; ++pos) {
        x *= base;
        const int d = static_cast<int>(x);
        x -= d;
        p.set_digit(k, j, pos, static_cast<std::uint8_t>(d));
      }
      detail::require(x == 0.0, "coordinate does not terminate within the precision");
    }
  }
  return p;
}

double PointSet::coord(std::uint64_t k, int j) const {
  if (base_ == 2) return std::ldexp(static_cast<double>(words_[k * dim_ + j]), -precision_);
  const std::uint8_t* d = &digits_[(k * dim_ + j) * precision_];
  double x = 0.0;
  for (int pos = precision_ - 1; pos >= 0; --pos) x = (x + d[pos]) / base_;
  return x;
}

std::uint8_t PointSet::digit(std::uint64_t k, int j, int pos) const {
  detail::require(pos >= 1 && pos <= precision_, "digit position out of range");
  if (base_ == 2) return static_cast<std::uint8_t>((words_[k * dim_ + j] >> (precision_ - pos)) & 1u);
  return digits_[(k * dim_ + j) * precision_ + (pos - 1)];
}

std::uint64_t PointSet::packed(std::uint64_t k, int j) const {
  detail::require(base_ == 2, "packed words exist only in base 2");
  return words_[k * dim_ + j];
}

void PointSet::set_packed(std::uint64_t k, int j, std::uint64_t word) {
  detail::require(base_ == 2, "packed words exist only in base 2");
  words_[k * dim_ + j] = word;
}

void PointSet::set_digit(std::uint64_t k, int j, int pos, std::uint8_t v) {
  detail::require(pos >= 1 && pos <= precision_, "digit position out of range");
  detail::require(v < base_, "digit out of range for base");
  if (base_ == 2) {
    const std::uint64_t bit = std::uint64_t{1} << (precision_ - pos);
    auto& w = words_[k * dim_ + j];
    w = v ? (w | bit) : (w & ~bit);
  } else {
    digits_[(k * dim_ + j) * precision_ + (pos - 1)] = v;
  }
}

GenMatrix matmul(const GenMatrix& a, const GenMatrix& b) {
  detail::require(a.base() == b.base(), "mismatched bases");
  detail::require(a.cols() == b.rows(), "shape mismatch");
  const int p = a.base();
  GenMatrix out(p, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int r = 0; r < b.cols(); ++r) {
      int acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, r);
      if (acc % p) out.set(i, r, static_cast<std::uint8_t>(acc % p));
    }
  return out;
}

// ---------------------------------------------------------------------------
// psi and point generation

double psi(std::span<const std::uint8_t> digits, int base) {
  detail::require_prime_base(base);
  double x = 0.0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    detail::require(digits[i] < base, "digit out of range for base");
    x = (x + digits[i]) / base;
  }
  return x;
}

PointSet generate_points(const GenMatrixSet& g) {
  const int b = g.base();
  const int w = g.rows();
  const int m = g.cols();
  const int s = g.dim();
  const std::uint64_t n = detail::ipow(b, m);
  if (n * static_cast<std::uint64_t>(s) > (std::uint64_t{1} << 28))
    throw InstanceTooLarge("point set would exceed the in-memory budget");
  PointSet out(b, w, s, n);

  if (b == 2) {
    // packed columns: bit (w - i) of a coordinate word is digit i
    std::vector<std::uint64_t> cols(static_cast<std::size_t>(s) * m, 0);
    for (int j = 0; j < s; ++j)
      for (int r = 0; r < m; ++r) {
        std::uint64_t c = 0;
        for (int i = 0; i < w; ++i)
          if (g.matrix(j).at(i, r)) c |= std::uint64_t{1} << (w - 1 - i);
        cols[static_cast<std::size_t>(j) * m + r] = c;
      }
    std::vector<std::uint64_t> y(s, 0);
    for (std::uint64_t k = 0;; ++k) {
      for (int j = 0; j < s; ++j) out.set_packed(k, j, y[j]);
      if (k + 1 == n) break;
      std::uint64_t delta = k ^ (k + 1);  // flipped digits of the counter
      while (delta != 0) {
        const int r = std::countr_zero(delta);
        delta &= delta - 1;
        for (int j = 0; j < s; ++j) y[j] ^= cols[static_cast<std::size_t>(j) * m + r];
      }
    }
    return out;
  }

  // generic base: one digit per byte, odometer increments add one column mod b
  std::vector<std::uint8_t> y(static_cast<std::size_t>(s) * w, 0);
  std::vector<std::uint8_t> kdigits(m, 0);
  auto add_col = [&](int r) {
    for (int j = 0; j < s; ++j) {
      const GenMatrix& mat = g.matrix(j);
      std::uint8_t* yj = &y[static_cast<std::size_t>(j) * w];
      for (int i = 0; i < w; ++i) {
        const std::uint8_t v = mat.at(i, r);
        if (v) yj[i] = static_cast<std::uint8_t>((yj[i] + v) % b);
      }
    }
  };
  for (std::uint64_t k = 0;; ++k) {
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < w; ++i)
        out.set_digit(k, j, i + 1, y[static_cast<std::size_t>(j) * w + i]);
    if (k + 1 == n) break;
    // every digit that changes in a base-b increment changes by +1 mod b
    int r = 0;
    while (kdigits[r] == b - 1) {
      kdigits[r] = 0;
      add_col(r);
      ++r;
    }
    ++kdigits[r];
    add_col(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// t-value computations

namespace detail {

bool for_each_composition(int total, int parts, std::vector<int>& scratch,
                          const std::function<bool(std::span<const int>)>& f) {
  if (parts == 1) {
    scratch.push_back(total);
    const bool keep = f(scratch);
    scratch.pop_back();
    return keep;
  }
  for (int first = 0; first <= total; ++first) {
    scratch.push_back(first);
    const bool keep = for_each_composition(total - first, parts - 1, scratch, f);
    scratch.pop_back();
    if (!keep) return false;
  }
  return true;
}

}  // namespace detail

namespace {

std::uint64_t composition_count(int total, int parts) {
  // C(total + parts - 1, parts - 1) with saturation
  long double v = 1.0L;
  for (int i = 1; i <= parts - 1; ++i) v = v * (total + i) / i;
  return v > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(v);
}

int t_value_rank_impl(const GenMatrixSet& g, const std::vector<int>& dims) {
  const int b = g.base();
  const int m = g.cols();
  const int s = static_cast<int>(dims.size());
  detail::require(s >= 1, "projection must be non-empty");
  if (composition_count(m, s) > (std::uint64_t{1} << 24))
    throw InstanceTooLarge("too many row compositions for the rank test");

  for (int t = 0; t <= m; ++t) {
    std::vector<int> scratch;
    bool all_ok = true;
    auto visit = [&](std::span<const int> comp) {
      if (b == 2) {
        std::vector<std::uint64_t> rows;
        rows.reserve(m - t);
        for (int jj = 0; jj < s; ++jj)
          for (int i = 0; i < comp[jj]; ++i) rows.push_back(g.matrix(dims[jj]).row_mask(i));
        if (rank_bits(std::move(rows)) != m - t) {
          all_ok = false;
          return false;
        }
        return true;
      }
      std::vector<std::vector<std::uint8_t>> rows;
      for (int jj = 0; jj < s; ++jj)
        for (int i = 0; i < comp[jj]; ++i) {
          std::vector<std::uint8_t> row(m);
          for (int r = 0; r < m; ++r) row[r] = g.matrix(dims[jj]).at(i, r);
          rows.push_back(std::move(row));
        }
      if (rank_dense(rows, m, b) != m - t) {
        all_ok = false;
        return false;
      }
      return true;
    };
    detail::for_each_composition(m - t, s, scratch, visit);
    if (all_ok) return t;
  }
  return m;
}

}  // namespace

int t_value_rank(const GenMatrixSet& g) {
  std::vector<int> dims(g.dim());
  for (int j = 0; j < g.dim(); ++j) dims[j] = j;
  return t_value_rank_impl(g, dims);
}

int t_value_rank(const GenMatrixSet& g, std::span<const int> dims) {
  return t_value_rank_impl(g, std::vector<int>(dims.begin(), dims.end()));
}

int t_value_dual(const GenMatrixSet& g) {
  const int b = g.base();
  const int m = g.cols();
  const int s = g.dim();
  long double total = std::pow(static_cast<long double>(b), static_cast<long double>(m) * s);
  if (total > static_cast<long double>(std::uint64_t{1} << 24))
    throw InstanceTooLarge("dual scan of b^(ms) vectors exceeds the 2^24 budget");
  const std::uint64_t bm = detail::ipow(b, m);

  std::vector<int> mu1_of(bm);
  for (std::uint64_t v = 0; v < bm; ++v) mu1_of[v] = mu1(v, b);

  int best = m + 1;  // cap: vectors outside the box have mu1 > m

  if (b == 2) {
    // syndrome tables: C_j^T tr(k_j) as a bit mask over the m columns
    std::vector<std::vector<std::uint32_t>> syn(s, std::vector<std::uint32_t>(bm, 0));
    for (int j = 0; j < s; ++j) {
      std::vector<std::uint32_t> rowmask(m);
      for (int i = 0; i < m; ++i) rowmask[i] = static_cast<std::uint32_t>(g.matrix(j).row_mask(i));
      for (std::uint64_t v = 1; v < bm; ++v)
        syn[j][v] = syn[j][v & (v - 1)] ^ rowmask[std::countr_zero(v)];
    }
    std::vector<std::uint64_t> k(s, 0);
    for (std::uint64_t idx = 1; idx < detail::ipow(bm, s); ++idx) {
      int p = 0;
      while (k[p] == bm - 1) k[p++] = 0;
      ++k[p];
      std::uint32_t acc = 0;
      long long mu = 0;
      for (int j = 0; j < s; ++j) {
        acc ^= syn[j][k[j]];
        mu += mu1_of[k[j]];
      }
      if (acc == 0 && mu < best) best = static_cast<int>(mu);
      if (best == 1) break;
    }
  } else {
    std::vector<std::vector<std::uint8_t>> syn(s);
    for (int j = 0; j < s; ++j) {
      syn[j].assign(bm * m, 0);
      for (std::uint64_t v = 0; v < bm; ++v) {
        std::uint64_t t = v;
        for (int i = 0; i < m && t != 0; ++i, t /= b) {
          const int d = static_cast<int>(t % b);
          if (d == 0) continue;
          for (int r = 0; r < m; ++r)
            syn[j][v * m + r] =
                static_cast<std::uint8_t>((syn[j][v * m + r] + d * g.matrix(j).at(i, r)) % b);
        }
      }
    }
    std::vector<std::uint64_t> k(s, 0);
    for (std::uint64_t idx = 1; idx < detail::ipow(bm, s); ++idx) {
      int p = 0;
      while (k[p] == bm - 1) k[p++] = 0;
      ++k[p];
      long long mu = 0;
      bool zero = true;
      for (int r = 0; r < m && zero; ++r) {
        int sum = 0;
        for (int j = 0; j < s; ++j) sum += syn[j][k[j] * m + r];
        if (sum % b != 0) zero = false;
      }
      for (int j = 0; j < s; ++j) mu += mu1_of[k[j]];
      if (zero && mu < best) best = static_cast<int>(mu);
      if (best == 1) break;
    }
  }
  return m - std::min(best, m + 1) + 1;
}

bool is_tms_net_geometric(const PointSet& p, int t) {
  detail::require(t >= 0, "t must be non-negative");
  const int b = p.base();
  int m = 0;
  {
    std::uint64_t n = p.size();
    while (n > 1) {
      detail::require(n % b == 0, "point count is not a power of the base");
      n /= b;
      ++m;
    }
  }
  detail::require(t <= m, "t exceeds m");
  const int d = m - t;
  detail::require(d <= p.precision(), "interval depth exceeds the stored precision");
  const std::uint64_t boxes = detail::ipow(b, d);
  const std::uint64_t expect = detail::ipow(b, t);

  std::vector<int> scratch;
  std::vector<std::uint64_t> counts;
  bool ok = true;
  auto visit = [&](std::span<const int> comp) {
    counts.assign(boxes, 0);
    for (std::uint64_t k = 0; k < p.size(); ++k) {
      std::uint64_t key = 0;
      for (int j = 0; j < p.dim(); ++j)
        for (int pos = 1; pos <= comp[j]; ++pos) key = key * b + p.digit(k, j, pos);
      ++counts[key];
    }
    for (std::uint64_t c : counts)
      if (c != expect) {
        ok = false;
        return false;
      }
    return true;
  };
  detail::for_each_composition(d, p.dim(), scratch, visit);
  return ok;
}

double niederreiter_tu_bound(std::span<const int> u, int b) {
  detail::require(!u.empty(), "the projection subset must be non-empty");
  const double lb = std::log(static_cast<double>(b));
  double total = 0.0;
  for (int j : u) {
    detail::require(j >= 1, "dimensions are 1-based");
    const double logb_j = std::log(static_cast<double>(j)) / lb;
    const double logb_jb = std::log(static_cast<double>(j) + b) / lb;
    total += logb_j + std::log(logb_jb) / lb + 1.0;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Direction tables and classical constructions

DirectionTable DirectionTable::parse(std::string_view text, std::string id) {
  DirectionTable t;
  t.id_ = std::move(id);
  std::istringstream in{std::string(text)};
  std::string line;
  int expect_dim = 2;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    Record rec;
    if (!(ls >> rec.dim)) continue;  // header or junk line
    detail::require(rec.dim == expect_dim, "direction table dimensions must be contiguous from 2");
    detail::require(static_cast<bool>(ls >> rec.degree >> rec.a), "malformed direction table record");
    detail::require(rec.degree >= 1, "polynomial degree must be positive");
    detail::require(rec.a < (std::uint64_t{1} << (rec.degree >= 1 ? rec.degree - 1 : 0)) || rec.degree == 1,
                    "polynomial code out of range");
    std::uint64_t v;
    while (ls >> v) rec.m_init.push_back(v);
    detail::require(static_cast<int>(rec.m_init.size()) == rec.degree,
                    "direction table record needs one initial value per degree");
    for (std::size_t i = 0; i < rec.m_init.size(); ++i) {
      detail::require(rec.m_init[i] % 2 == 1, "initial direction integers must be odd");
      detail::require(rec.m_init[i] < (std::uint64_t{1} << (i + 1)), "initial direction integer too large");
    }
    t.records_.push_back(std::move(rec));
    ++expect_dim;
  }
  detail::require(!t.records_.empty(), "direction table has no records");
  return t;
}

DirectionTable DirectionTable::load_file(const std::string& path) {
  std::ifstream in(path);
  detail::require(in.good(), "cannot open direction-number file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const DirectionTable& DirectionTable::bundled() {
  static const DirectionTable t =
      parse(detail::bundled_direction_table_text(), detail::bundled_direction_table_id());
  return t;
}

std::vector<std::uint64_t> DirectionTable::direction_integers(int dim, int count) const {
  detail::require(dim >= 2 && dim <= max_dimension(),
                  "direction table does not cover dimension " + std::to_string(dim));
  const Record& rec = records_[dim - 2];
  std::vector<std::uint64_t> m = rec.m_init;
  const int deg = rec.degree;
  while (static_cast<int>(m.size()) < count) {
    const std::size_t k = m.size();
    std::uint64_t next = m[k - deg] ^ (m[k - deg] << deg);
    for (int i = 1; i < deg; ++i)
      if ((rec.a >> (deg - 1 - i)) & 1u) next ^= m[k - i] << i;
    m.push_back(next);
  }
  m.resize(count);
  return m;
}

GenMatrixSet sobol_matrices(int s, int m, const DirectionTable& table) {
  detail::require(s >= 1, "dimension must be positive");
  detail::require(m >= 1 && m <= 52, "m must lie in 1..52 (direction bit budget)");
  detail::require(s <= table.max_dimension(),
                  "direction table covers only " + std::to_string(table.max_dimension()) + " dimensions");
  std::vector<GenMatrix> mats;
  mats.push_back(GenMatrix::identity(2, m));
  for (int d = 2; d <= s; ++d) {
    const auto dir = table.direction_integers(d, m);
    GenMatrix c(2, m, m);
    for (int col = 0; col < m; ++col)
      for (int i = 0; i < m; ++i) {
        const int shift = col - i;  // digit i+1 of v_{col+1} = bit (col - i) of m_{col+1}
        if (shift >= 0 && ((dir[col] >> shift) & 1u)) c.set(i, col, 1);
      }
    mats.push_back(std::move(c));
  }
  return GenMatrixSet(std::move(mats));
}

namespace {

// monic irreducibles ordered by (degree, integer encoding)
std::vector<GfPoly> first_irreducibles(int b, int count) {
  std::vector<GfPoly> out;
  for (int deg = 1; static_cast<int>(out.size()) < count; ++deg) {
    const auto& set = ModulusSet::get(b, deg);
    for (const auto& p : set.members()) {
      out.push_back(p);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  return out;
}

}  // namespace

GenMatrixSet niederreiter_matrices(int s, int m, int b, int rows) {
  detail::require_prime_base(b);
  detail::require(s >= 1 && m >= 1, "invalid shape");
  if (rows < 0) rows = m;
  detail::require(rows >= m, "need at least m rows");
  const auto polys = first_irreducibles(b, s);
  std::vector<GenMatrix> mats;
  for (int j = 0; j < s; ++j) {
    const GfPoly& p = polys[j];
    const int e = p.degree();
    GenMatrix c(b, rows, m);
    for (int i = 0; i < rows; ++i) {
      const int block = i / e;      // expansion order Q
      const int offset = i % e;     // position within the degree block
      // numerator x^{e-1-offset} makes row i lead at column i, which keeps the
      // upper square block unit upper triangular.
      const GfPoly num = GfPoly::monomial(b, e - 1 - offset);
      const GfPoly den = pow(p, static_cast<unsigned>(block + 1));
      const auto digits = laurent_digits(num, den, m);
      for (int r = 0; r < m; ++r)
        if (digits[r]) c.set(i, r, digits[r]);
    }
    mats.push_back(std::move(c));
  }
  return GenMatrixSet(std::move(mats));
}

double local_discrepancy(const PointSet& p, std::span<const double> y) {
  detail::require(static_cast<int>(y.size()) == p.dim(), "query point has wrong dimension");
  std::uint64_t inside = 0;
  for (std::uint64_t k = 0; k < p.size(); ++k) {
    bool in = true;
    for (int j = 0; j < p.dim() && in; ++j) in = p.coord(k, j) < y[j];
    inside += in ? 1 : 0;
  }
  double vol = 1.0;
  for (double yj : y) vol *= yj;
  return static_cast<double>(inside) / static_cast<double>(p.size()) - vol;
}

}  // namespace mqmc
