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

#ifndef MEDIANQMC_DIGITAL_NET_HPP
#define MEDIANQMC_DIGITAL_NET_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "medianqmc/common.hpp"

namespace mqmc {

/// n x m matrix over F_b. Entries stored dense; helpers expose bit-packed
/// rows/columns for the b = 2 fast paths (n, m <= 64 there).
class GenMatrix {
 public:
  GenMatrix(int base, int rows, int cols);
  static GenMatrix identity(int base, int n);

  int base() const { return base_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint8_t at(int i, int r) const { return data_[static_cast<std::size_t>(r) * rows_ + i]; }
  void set(int i, int r, std::uint8_t v);

  /// Row i as a bit mask over columns (base 2 only).
  std::uint64_t row_mask(int i) const;
  /// Column r as a bit mask over rows (base 2 only).
  std::uint64_t col_mask(int r) const;

  /// Rank of the top cols x cols block equals cols.
  bool upper_block_nonsingular() const;

  friend bool operator==(const GenMatrix&, const GenMatrix&) = default;

 private:
  int base_;
  int rows_;
  int cols_;
  std::vector<std::uint8_t> data_;  // column-major
};

/// The s generating matrices of a digital net; all share (b, n, m) and
/// n >= m is required.
class GenMatrixSet {
 public:
  explicit GenMatrixSet(std::vector<GenMatrix> mats);

  int base() const { return base_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int dim() const { return static_cast<int>(mats_.size()); }
  const GenMatrix& matrix(int j) const { return mats_[j]; }
  const std::vector<GenMatrix>& matrices() const { return mats_; }

 private:
  int base_;
  int rows_;
  int cols_;
  std::vector<GenMatrix> mats_;
};

/// b^m points in [0,1)^s at digit precision w. For b = 2 each coordinate is
/// one 64-bit word with digit i at bit (w - i); otherwise digits are stored
/// one per byte.
class PointSet {
 public:
  PointSet(int base, int precision, int dim, std::uint64_t count);

  /// Build from exact coordinates; every value must terminate within
  /// `precision` base-b digits.
  static PointSet from_coords(int base, int precision,
                              const std::vector<std::vector<double>>& pts);

  int base() const { return base_; }
  int precision() const { return precision_; }
  int dim() const { return dim_; }
  std::uint64_t size() const { return count_; }

  double coord(std::uint64_t k, int j) const;
  /// Digit at position pos in 1..precision (most significant first).
  std::uint8_t digit(std::uint64_t k, int j, int pos) const;

  std::uint64_t packed(std::uint64_t k, int j) const;           // base 2 only
  void set_packed(std::uint64_t k, int j, std::uint64_t word);  // base 2 only
  void set_digit(std::uint64_t k, int j, int pos, std::uint8_t v);

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int base_;
  int precision_;
  int dim_;
  std::uint64_t count_;
  std::vector<std::uint64_t> words_;   // base 2
  std::vector<std::uint8_t> digits_;   // base > 2
};

/// Plain F_b matrix product.
GenMatrix matmul(const GenMatrix& a, const GenMatrix& b);

/// psi maps a digit vector (most significant first) to [0,1).
double psi(std::span<const std::uint8_t> digits, int base);

/// Point k is psi applied to C_j times the base-b digit vector of k.
PointSet generate_points(const GenMatrixSet& g);

/// Least t by the rank criterion: smallest t >= 0 such that every
/// composition a_1+...+a_s = m-t of leading rows is linearly independent.
int t_value_rank(const GenMatrixSet& g);
/// Same, restricted to the projection onto the given 0-based dimensions.
int t_value_rank(const GenMatrixSet& g, std::span<const int> dims);

/// Least t via the dual net: scans all k in [0,b^m)^s \ {0} for dual
/// membership and returns m - min(mu_1) + 1 with mu_1 capped at m+1.
/// Refuses instances with b^{ms} > 2^24.
int t_value_dual(const GenMatrixSet& g);

/// Definition check: every b-adic elementary interval of volume b^{t-m}
/// contains exactly b^t points.
bool is_tms_net_geometric(const PointSet& p, int t);

/// Right-hand side of the Niederreiter t-value bound for the projection onto
/// the (1-based, non-empty) dimension subset u.
double niederreiter_tu_bound(std::span<const int> u, int b);

/// Direction-number table in the Joe-Kuo text layout: header line
/// "d s a m_i", then one line per dimension >= 2. Dimension 1 is implicit
/// (identity matrix).
class DirectionTable {
 public:
  struct Record {
    int dim = 0;
    int degree = 0;
    std::uint64_t a = 0;
    std::vector<std::uint64_t> m_init;
  };

  static DirectionTable parse(std::string_view text, std::string id);
  static DirectionTable load_file(const std::string& path);
  static const DirectionTable& bundled();

  const std::string& id() const { return id_; }
  int max_dimension() const { return static_cast<int>(records_.size()) + 1; }

  /// Direction integers m_1..m_count for dimension dim >= 2, extended by the
  /// primitive-polynomial recurrence as needed.
  std::vector<std::uint64_t> direction_integers(int dim, int count) const;

 private:
  std::string id_;
  std::vector<Record> records_;  // records_[0] is dimension 2
};

/// Square m x m Sobol' generating matrices for dimensions 1..s.
GenMatrixSet sobol_matrices(int s, int m, const DirectionTable& table = DirectionTable::bundled());

/// Niederreiter matrices over F_b with `rows` rows (default m). Rows are
/// ordered so the upper m x m block is unit upper triangular, hence
/// non-singular in every dimension.
GenMatrixSet niederreiter_matrices(int s, int m, int b, int rows = -1);

/// Local discrepancy at y: fraction of points in [0,y) minus vol[0,y).
double local_discrepancy(const PointSet& p, std::span<const double> y);

namespace detail {
/// Enumerates compositions a_1+...+a_s = total; f returns false to abort.
bool for_each_composition(int total, int parts, std::vector<int>& scratch,
                          const std::function<bool(std::span<const int>)>& f);
}  // namespace detail

}  // namespace mqmc

#endif
