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

#ifndef MEDIANQMC_ERROR_BOUNDS_HPP
#define MEDIANQMC_ERROR_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "medianqmc/common.hpp"

namespace mqmc {

/// Which random point-set family a probabilistic bound refers to.
enum class Family { Net, Plr };

/// Weights gamma_u on variable subsets: either product weights given by a
/// one-dimensional sequence, or an explicit map from subset bit masks to
/// values (refused beyond s = 20).
class WeightModel {
 public:
  static WeightModel product(std::vector<double> gamma_j);
  /// Subsets are bit masks over dimensions 1..s (bit j-1 <-> dimension j).
  /// Missing subsets carry weight 0; the empty set is implicitly 1.
  static WeightModel explicit_map(int s, std::map<std::uint32_t, double> gamma_u);

  bool is_product() const { return product_; }
  int explicit_dim() const { return explicit_dim_; }
  double gamma_j(int j) const;                    // 1-based, product form
  double gamma_u(std::uint32_t mask) const;       // explicit form
  const std::vector<double>& sequence() const { return seq_; }

 private:
  WeightModel() = default;
  bool product_ = true;
  int explicit_dim_ = 0;
  std::vector<double> seq_;
  std::map<std::uint32_t, double> map_;
};

/// Decay sequence u_1 >= u_2 >= ... > 0 for the infinitely smooth space,
/// with the derived exponents a_j = -log_b(C_b u_j / m_b).
struct SmoothWeightSeq {
  explicit SmoothWeightSeq(std::vector<double> u);
  std::vector<double> u;
  std::vector<double> exponents(int b, int s) const;  // a_1..a_s
};

struct BoundConstants {
  double m_b;  // 2 sin(pi/b)
  double M_b;  // parity cases
  double C_b;  // base-dependent constant
};
BoundConstants constants(int b);

/// The order-alpha constant; the two quantities under the ambiguous max in
/// the source display are combined with a two-argument max, recorded in
/// bound output metadata.
double c_alpha(int b, int alpha);

/// Closed form of A_{alpha,lambda}; finite only for lambda in (1/alpha, 1].
double a_alpha_lambda(int b, int alpha, double lambda);

struct SeriesValue {
  double value = 0.0;
  bool capped = false;       // the hard term cap bound before convergence
  std::size_t terms = 0;
};

/// A_{inf,lambda} as a truncated infinite product.
SeriesValue a_inf_lambda(int b, double lambda);

/// Median amplification: failure probability binom(r,(r+1)/2) delta^{(r+1)/2}
/// for odd r. amplify_loose is the weaker closed bound (4 delta)^{(r+1)/2}/4.
double amplify(double delta, int r);
double amplify_loose(double delta, int r);

struct EpsResult {
  double epsilon = 0.0;
  double lambda = 0.0;          // minimizing lambda (0 when not applicable)
  double tau = 0.0;             // minimizing tau (0 when not applicable)
  bool vacuous = false;         // epsilon > 1; the value is still the bound
  bool series_capped = false;
};

/// First-order Sobolev bound, exact closed form of the respective theorem.
double eps_sob1(int m, int s, double delta, const WeightModel& w, Family family, int b);

/// Order-alpha Sobolev bound with the infimum over lambda (net) or
/// (lambda, tau) (plr); fixed values bypass the search.
EpsResult eps_sob_alpha(int m, int s, int alpha, double delta, const WeightModel& w,
                        Family family, int b,
                        std::optional<double> fixed_lambda = std::nullopt,
                        std::optional<double> fixed_tau = std::nullopt);

enum class InfRegime { Unweighted, Weighted };
struct InfRegimeSpec {
  InfRegime kind = InfRegime::Unweighted;
  double a = 0.0;  // unweighted: the common exponent; weighted: scale in a(j-1)^q
  double q = 1.0;  // weighted only
};

/// Infinitely-smooth-space bound. The net family needs no regime; the plr
/// family requires b >= 3, a_1 >= 0 and a regime specification.
EpsResult eps_inf(int m, int s, double delta, const SmoothWeightSeq& useq, Family family,
                  std::optional<InfRegimeSpec> regime, int b,
                  std::optional<double> fixed_lambda = std::nullopt,
                  std::optional<double> fixed_tau = std::nullopt);

/// The concave map used by the plr infinite-smoothness theorem (b >= 3) and
/// its inverse.
double phi_concave(double x, double lambda, int b);
double phi_inverse(double y, double lambda, int b);

SeriesValue c_s_lambda_tau(int s, double lambda, double tau, int b);
SeriesValue c_aq_lambda_tau(double a, double q, double lambda, double tau, int b);

}  // namespace mqmc

#endif
