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

#include "medianqmc/error_bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace mqmc {

namespace {

constexpr double kEndpointShrink = 1e-6;
constexpr double kGridSpacing = 1e-3;
constexpr double kGoldenTol = 1e-8;
constexpr std::size_t kSeriesCap = 1000000;
constexpr double kSeriesRelTol = 1e-16;

double logb(double x, int b) { return std::log(x) / std::log(static_cast<double>(b)); }

/// Grid scan at fixed spacing followed by golden-section refinement around
/// the best cell. The objective may return +inf for invalid arguments.
template <class F>
std::pair<double, double> grid_golden_min(F&& f, double lo, double hi) {
  lo += kEndpointShrink;
  hi -= kEndpointShrink;
  if (lo >= hi) {
    const double x = 0.5 * (lo + hi);
    return {x, f(x)};
  }
  double best_x = lo, best_v = std::numeric_limits<double>::infinity();
  const int cells = std::max(1, static_cast<int>((hi - lo) / kGridSpacing));
  for (int i = 0; i <= cells; ++i) {
    const double x = lo + (hi - lo) * i / cells;
    const double v = f(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double a = std::max(lo, best_x - (hi - lo) / cells);
  double b = std::min(hi, best_x + (hi - lo) / cells);
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > kGoldenTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  const double x = (fc < fd) ? c : d;
  const double v = std::min({fc, fd, best_v});
  return v < best_v ? std::pair{x, v} : std::pair{best_x, best_v};
}

}  // namespace

// ---------------------------------------------------------------------------
// weights

WeightModel WeightModel::product(std::vector<double> gamma_j) {
  detail::require(!gamma_j.empty(), "product weights need at least one entry");
  for (double g : gamma_j) detail::require(g >= 0.0 && g <= 1.0, "weights must lie in [0,1]");
  WeightModel w;
  w.product_ = true;
  w.seq_ = std::move(gamma_j);
  return w;
}

WeightModel WeightModel::explicit_map(int s, std::map<std::uint32_t, double> gamma_u) {
  detail::require(s >= 1, "dimension must be positive");
  if (s > 20) throw InstanceTooLarge("explicit weights are refused beyond s = 20 (2^s subsets)");
  const std::uint32_t full = (s == 32) ? ~0u : ((1u << s) - 1u);
  for (const auto& [mask, g] : gamma_u) {
    detail::require(mask != 0, "the empty set has fixed weight 1; do not specify it");
    detail::require((mask & ~full) == 0, "subset mask exceeds the dimension");
    detail::require(g >= 0.0 && g <= 1.0, "weights must lie in [0,1]");
  }
  WeightModel w;
  w.product_ = false;
  w.explicit_dim_ = s;
  w.map_ = std::move(gamma_u);
  return w;
}

double WeightModel::gamma_j(int j) const {
  detail::require(product_, "gamma_j is only defined for product weights");
  detail::require(j >= 1 && j <= static_cast<int>(seq_.size()),
                  "product weight sequence too short for dimension " + std::to_string(j));
  return seq_[j - 1];
}

double WeightModel::gamma_u(std::uint32_t mask) const {
  if (mask == 0) return 1.0;
  if (product_) {
    double g = 1.0;
    std::uint32_t rest = mask;
    while (rest) {
      const int j = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      g *= gamma_j(j);
    }
    return g;
  }
  const auto it = map_.find(mask);
  return it == map_.end() ? 0.0 : it->second;
}

SmoothWeightSeq::SmoothWeightSeq(std::vector<double> u_in) : u(std::move(u_in)) {
  detail::require(!u.empty(), "decay sequence must be non-empty");
  for (std::size_t j = 0; j < u.size(); ++j) {
    detail::require(u[j] > 0.0, "decay sequence must be positive");
    if (j > 0) detail::require(u[j] <= u[j - 1] + 1e-15, "decay sequence must be non-increasing");
  }
}

std::vector<double> SmoothWeightSeq::exponents(int b, int s) const {
  detail::require(s <= static_cast<int>(u.size()), "decay sequence too short for dimension");
  const BoundConstants c = constants(b);
  std::vector<double> a(s);
  for (int j = 0; j < s; ++j) a[j] = -logb(c.C_b * u[j] / c.m_b, b);
  return a;
}

// ---------------------------------------------------------------------------
// constants

BoundConstants constants(int b) {
  detail::require_prime_base(b);
  BoundConstants c{};
  c.m_b = 2.0 * std::sin(std::numbers::pi / b);
  c.M_b = (b % 2 == 0) ? 2.0 : 2.0 * std::sin((b + 1) * std::numbers::pi / (2.0 * b));
  c.C_b = (b == 2) ? 2.0 : c.M_b + b * c.m_b / (b - c.M_b);
  return c;
}

double c_alpha(int b, int alpha) {
  detail::require(alpha >= 2, "c_alpha requires alpha >= 2");
  const double mb = 2.0 * std::sin(std::numbers::pi / b);
  const double f1 = std::pow(1.0 + 1.0 / b + 1.0 / (b * (b + 1.0)), alpha - 2);
  const double f2 = 3.0 + 2.0 / b + (2.0 * b + 1.0) / (b - 1.0);
  double tau_max = 0.0;
  for (int tau = 1; tau < alpha; ++tau) tau_max = std::max(tau_max, std::pow(mb, -tau));
  const double f3 = std::max(2.0 * std::pow(mb, -alpha), tau_max);
  return f1 * f2 * f3;
}

double a_alpha_lambda(int b, int alpha, double lambda) {
  detail::require(alpha >= 2, "a_alpha_lambda requires alpha >= 2");
  if (!(lambda > 1.0 / alpha && lambda <= 1.0)) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  double prod = 1.0;
  for (int tau = 1; tau <= alpha - 1; ++tau) {
    prod *= (b - 1.0) / (std::pow(static_cast<double>(b), lambda * tau) - 1.0);
    sum += prod;
  }
  const double bla = std::pow(static_cast<double>(b), lambda * alpha);
  prod *= (b - 1.0) / (bla - 1.0);
  return sum + (bla - 1.0) / (bla - b) * prod;
}

SeriesValue a_inf_lambda(int b, double lambda) {
  detail::require(lambda > 0.0 && lambda <= 1.0, "a_inf_lambda requires lambda in (0,1]");
  SeriesValue out;
  double log_prod = 0.0;
  const double r = std::pow(static_cast<double>(b), -lambda);
  double term = (b - 1.0) * r;
  std::size_t l = 1;
  for (; l <= kSeriesCap; ++l) {
    log_prod += std::log1p(term);
    // remaining tail of sum(log1p(..)) is below term * r/(1-r)
    if (term * r / (1.0 - r) < kSeriesRelTol) break;
    term *= r;
  }
  out.capped = (l > kSeriesCap);
  out.terms = std::min(l, kSeriesCap);
  out.value = std::exp(log_prod) - 1.0;
  return out;
}

double amplify(double delta, int r) {
  detail::require(r >= 1 && r % 2 == 1, "the replicate count r must be odd");
  detail::require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  const int half = (r + 1) / 2;
  long double binom = 1.0L;
  for (int i = 1; i <= half; ++i) binom = binom * (r - half + i) / i;
  return static_cast<double>(binom * std::pow(static_cast<long double>(delta), half));
}

double amplify_loose(double delta, int r) {
  detail::require(r >= 1 && r % 2 == 1, "the replicate count r must be odd");
  detail::require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  return std::pow(4.0 * delta, (r + 1) / 2) / 4.0;
}

// ---------------------------------------------------------------------------
// first order

namespace {

double sob1_bracket_net(int m, std::uint32_t mask, int b, double mfac) {
  const int card = std::popcount(mask);
  const double x = std::pow(static_cast<double>(b), -m);
  double prod = 1.0;
  std::uint32_t rest = mask;
  while (rest) {
    const int j = std::countr_zero(rest) + 1;
    rest &= rest - 1;
    prod *= 1.0 + mfac * j * logb(j + static_cast<double>(b), b);
  }
  return 1.0 - x - std::pow(1.0 - x, card) + card * x + x * prod;
}

double sob1_bracket_plr(int m, std::uint32_t mask, int b, double kfac) {
  const int card = std::popcount(mask);
  const double x = std::pow(static_cast<double>(b), -m);
  const double bm1 = std::pow(static_cast<double>(b), m) - 1.0;
  return 1.0 - std::pow(1.0 - x, card) + card * x + (std::pow(1.0 + kfac, card) - 1.0) / bm1;
}

}  // namespace

double eps_sob1(int m, int s, double delta, const WeightModel& w, Family family, int b) {
  detail::require(m >= 1 && s >= 1, "invalid shape");
  detail::require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  detail::require_prime_base(b);
  const double x = std::pow(static_cast<double>(b), -m);
  const double mfac = m * b * (b + 1.0) / 3.0;           // net per-coordinate factor
  const double kfac = m * (b * b - 1.0) / (3.0 * b);     // plr r-tilde sum

  if (!w.is_product()) {
    detail::require(w.explicit_dim() == s, "explicit weights were built for a different dimension");
    double total = 0.0;
    const std::uint32_t full = (1u << s) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const double g = w.gamma_u(mask);
      if (g == 0.0) continue;
      total += g * (family == Family::Net ? sob1_bracket_net(m, mask, b, mfac)
                                          : sob1_bracket_plr(m, mask, b, kfac));
    }
    return total / delta;
  }

  // product weights: the sum over subsets factorizes exactly
  double p1 = 1.0;        // prod (1 + gamma_j)
  double p2 = 1.0;        // prod (1 + gamma_j (1 - x))
  double psum = 0.0;      // sum gamma_j / (1 + gamma_j), for sum gamma_u |u|
  double pnet = 1.0;      // prod (1 + gamma_j (1 + mfac j log_b(j+b)))
  double pplr = 1.0;      // prod (1 + gamma_j (1 + kfac))
  for (int j = 1; j <= s; ++j) {
    const double g = w.gamma_j(j);
    p1 *= 1.0 + g;
    p2 *= 1.0 + g * (1.0 - x);
    psum += g / (1.0 + g);
    pnet *= 1.0 + g * (1.0 + mfac * j * logb(j + static_cast<double>(b), b));
    pplr *= 1.0 + g * (1.0 + kfac);
  }
  if (family == Family::Net) {
    const double total = (1.0 - x) * (p1 - 1.0) - (p2 - 1.0) + x * p1 * psum + x * (pnet - 1.0);
    return total / delta;
  }
  const double bm1 = std::pow(static_cast<double>(b), m) - 1.0;
  const double total = (p1 - p2) + x * p1 * psum + (pplr - p1) / bm1;
  return total / delta;
}

// ---------------------------------------------------------------------------
// order alpha

namespace {

// sum over non-empty u of gamma_u^lambda * factor^{|u|} * prod_{j in u} extra_j
double weighted_subset_sum(const WeightModel& w, int s, double lambda, double factor,
                           const std::function<double(int)>& extra) {
  if (w.is_product()) {
    double prod = 1.0;
    for (int j = 1; j <= s; ++j)
      prod *= 1.0 + std::pow(w.gamma_j(j), lambda) * factor * extra(j);
    return prod - 1.0;
  }
  double total = 0.0;
  const std::uint32_t full = (1u << s) - 1u;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const double g = w.gamma_u(mask);
    if (g == 0.0) continue;
    double term = std::pow(g, lambda);
    std::uint32_t rest = mask;
    while (rest) {
      const int j = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      term *= factor * extra(j);
    }
    total += term;
  }
  return total;
}

}  // namespace

EpsResult eps_sob_alpha(int m, int s, int alpha, double delta, const WeightModel& w,
                        Family family, int b, std::optional<double> fixed_lambda,
                        std::optional<double> fixed_tau) {
  detail::require(m >= 1 && s >= 1, "invalid shape");
  detail::require(alpha >= 2, "alpha must be at least 2");
  detail::require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  detail::require_prime_base(b);
  if (!w.is_product())
    detail::require(w.explicit_dim() == s, "explicit weights were built for a different dimension");
  const double ca = c_alpha(b, alpha);

  if (family == Family::Net) {
    auto objective = [&](double lambda) {
      if (!(lambda > 1.0 / alpha && lambda <= 1.0)) return std::numeric_limits<double>::infinity();
      const double a = a_alpha_lambda(b, alpha, lambda);
      const double factor = (b * static_cast<double>(b) / (b - 1.0)) * std::pow(ca, lambda) * a;
      const double sum = weighted_subset_sum(w, s, lambda, factor, [&](int j) {
        return j * logb(j + static_cast<double>(b), b);
      });
      if (sum == 0.0) return 0.0;
      return std::pow(sum / (delta * std::pow(static_cast<double>(b), m)), 1.0 / lambda);
    };
    EpsResult out;
    if (fixed_lambda) {
      out.lambda = *fixed_lambda;
      out.epsilon = objective(*fixed_lambda);
    } else {
      auto [lam, val] = grid_golden_min(objective, 1.0 / alpha, 1.0 + kEndpointShrink);
      out.lambda = lam;
      out.epsilon = val;
    }
    out.vacuous = out.epsilon > 1.0;
    return out;
  }

  // plr family: infimum over lambda in (1/alpha, 1] and tau in (0, lambda - 1/alpha)
  const double bm1 = std::pow(static_cast<double>(b), m) - 1.0;
  auto objective = [&](double lambda, double tau) {
    if (!(lambda > 1.0 / alpha && lambda <= 1.0)) return std::numeric_limits<double>::infinity();
    if (!(tau > 0.0 && tau < lambda - 1.0 / alpha)) return std::numeric_limits<double>::infinity();
    const double a = a_alpha_lambda(b, alpha, lambda - tau);
    const double factor = std::pow(ca, lambda) * a;
    const double sum = weighted_subset_sum(w, s, lambda, factor, [](int) { return 1.0; });
    if (sum == 0.0) return 0.0;
    const double front = 3.0 / (bm1 * delta * tau * std::numbers::e * std::log(static_cast<double>(b)));
    return std::pow(front * sum, 1.0 / lambda);
  };
  EpsResult out;
  if (fixed_lambda && fixed_tau) {
    out.lambda = *fixed_lambda;
    out.tau = *fixed_tau;
    out.epsilon = objective(*fixed_lambda, *fixed_tau);
  } else {
    auto outer = [&](double lambda) {
      const double hi = lambda - 1.0 / alpha;
      if (hi <= 2 * kEndpointShrink) return std::numeric_limits<double>::infinity();
      return grid_golden_min([&](double tau) { return objective(lambda, tau); }, 0.0, hi).second;
    };
    auto [lam, val] = grid_golden_min(outer, 1.0 / alpha, 1.0 + kEndpointShrink);
    out.lambda = lam;
    out.epsilon = val;
    out.tau = grid_golden_min([&](double tau) { return objective(lam, tau); }, 0.0,
                              lam - 1.0 / alpha)
                  .first;
  }
  out.vacuous = out.epsilon > 1.0;
  return out;
}

// ---------------------------------------------------------------------------
// infinite smoothness

double phi_concave(double x, double lambda, int b) {
  detail::require(b >= 3, "the concave map is implemented for b >= 3");
  detail::require(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0,1]");
  detail::require(x >= 0.0, "phi is defined on [0,inf)");
  if (x == 0.0) return 0.0;
  if (x <= 1.0 / b) return std::pow(static_cast<double>(b), -std::pow(-logb(x, b), lambda));
  return lambda * (x - 1.0 / b) + 1.0 / b;
}

double phi_inverse(double y, double lambda, int b) {
  detail::require(b >= 3, "the concave map is implemented for b >= 3");
  detail::require(lambda > 0.0 && lambda <= 1.0, "lambda must lie in (0,1]");
  detail::require(y >= 0.0, "phi inverse is defined on [0,inf)");
  if (y == 0.0) return 0.0;
  if (y <= 1.0 / b) return std::pow(static_cast<double>(b), -std::pow(-logb(y, b), 1.0 / lambda));
  return (y - 1.0 / b) / lambda + 1.0 / b;
}

namespace {

// log-sum-exp accumulation of sum_i exp(g(i)) for i = 1, 2, ...
SeriesValue logsumexp_series(const std::function<double(double)>& g) {
  double max_seen = -std::numeric_limits<double>::infinity();
  double acc = 0.0;  // sum of exp(g_i - max_seen)
  SeriesValue out;
  std::size_t i = 1;
  for (; i <= kSeriesCap; ++i) {
    const double gi = g(static_cast<double>(i));
    if (gi > max_seen) {
      acc = acc * std::exp(max_seen - gi) + 1.0;
      max_seen = gi;
    } else {
      const double t = std::exp(gi - max_seen);
      acc += t;
      // past the peak and the term is negligible relative to the total
      if (gi < g(static_cast<double>(i) - 1.0) && t < kSeriesRelTol * acc) break;
    }
  }
  out.capped = (i > kSeriesCap);
  out.terms = std::min(i, kSeriesCap);
  // value in log space to survive huge sums; exp may overflow to +inf,
  // which phi_inverse handles as a vacuous bound
  out.value = std::exp(max_seen + std::log(acc));
  return out;
}

}  // namespace

SeriesValue c_s_lambda_tau(int s, double lambda, double tau, int b) {
  const double lb = std::log(static_cast<double>(b));
  return logsumexp_series([=](double i) {
    return 2.0 * std::sqrt(s * (b - 1.0) * (i + 1.0)) -
           (std::pow(i, lambda) - std::pow(i, tau)) * lb;
  });
}

SeriesValue c_aq_lambda_tau(double a, double q, double lambda, double tau, int b) {
  detail::require(a > 0.0 && q > 0.0, "weighted regime needs a > 0 and q > 0");
  const double lb = std::log(static_cast<double>(b));
  const double a_aq = 1.0 + (b - 1.0) * (1.0 + std::tgamma(1.0 / q) / (q * std::pow(a, 1.0 / q)));
  const double expo = (q + 1.0) / (2.0 * q + 1.0);
  return logsumexp_series([=](double i) {
    return a_aq * std::pow(i + 1.0, expo) - (std::pow(i, lambda) - std::pow(i, tau)) * lb;
  });
}

EpsResult eps_inf(int m, int s, double delta, const SmoothWeightSeq& useq, Family family,
                  std::optional<InfRegimeSpec> regime, int b,
                  std::optional<double> fixed_lambda, std::optional<double> fixed_tau) {
  detail::require(m >= 1 && s >= 1, "invalid shape");
  detail::require(delta > 0.0 && delta < 1.0, "delta must lie in (0,1)");
  detail::require_prime_base(b);
  const auto a = useq.exponents(b, s);

  if (family == Family::Net) {
    bool capped = false;
    auto objective = [&](double lambda) {
      if (!(lambda > 0.0 && lambda <= 1.0)) return std::numeric_limits<double>::infinity();
      const SeriesValue ai = a_inf_lambda(b, lambda);
      if (ai.capped) capped = true;
      double prod = 1.0;
      for (int j = 1; j <= s; ++j) {
        prod *= 1.0 + (b / (b - 1.0)) * ai.value *
                          std::pow(static_cast<double>(b), -lambda * a[j - 1]) * j *
                          logb(j + static_cast<double>(b), b);
      }
      const double bracket = (prod - 1.0) / (delta * std::pow(static_cast<double>(b), m));
      return std::pow(bracket, 1.0 / lambda);
    };
    EpsResult out;
    if (fixed_lambda) {
      out.lambda = *fixed_lambda;
      out.epsilon = objective(*fixed_lambda);
    } else {
      auto [lam, val] = grid_golden_min(objective, 0.0, 1.0 + kEndpointShrink);
      out.lambda = lam;
      out.epsilon = val;
    }
    out.vacuous = out.epsilon > 1.0;
    out.series_capped = capped;
    return out;
  }

  // plr family, b >= 3 branch only
  if (b == 2)
    throw std::invalid_argument(
        "the plr infinite-smoothness bound is implemented for b >= 3 only");
  detail::require(regime.has_value(), "the plr family requires a regime specification");
  detail::require(a[0] >= -1e-12, "the plr bound assumes a_1 >= 0 (u_1 <= m_b/C_b)");
  const double lb = std::log(static_cast<double>(b));
  const double bm1 = std::pow(static_cast<double>(b), m) - 1.0;

  double lambda_lo;
  if (regime->kind == InfRegime::Unweighted) {
    for (int j = 0; j < s; ++j)
      detail::require(std::abs(a[j] - regime->a) < 1e-9,
                      "unweighted regime requires a constant exponent sequence");
    detail::require(regime->a >= 0.0, "unweighted regime needs a >= 0");
    lambda_lo = 0.5;
  } else {
    for (int j = 0; j < s; ++j)
      detail::require(a[j] >= regime->a * std::pow(j, regime->q) - 1e-9,
                      "weighted regime requires a_j >= a (j-1)^q");
    lambda_lo = (regime->q + 1.0) / (2.0 * regime->q + 1.0);
  }

  bool capped = false;
  auto objective = [&](double lambda, double tau) {
    if (!(lambda > lambda_lo && lambda < 1.0)) return std::numeric_limits<double>::infinity();
    if (!(tau > 0.0 && tau < std::min(lambda, 1.0 / lb))) return std::numeric_limits<double>::infinity();
    const SeriesValue c = (regime->kind == InfRegime::Unweighted)
                              ? c_s_lambda_tau(s, lambda, tau, b)
                              : c_aq_lambda_tau(regime->a, regime->q, lambda, tau, b);
    if (c.capped) capped = true;
    const double y = 3.0 * c.value / (bm1 * delta * std::pow(tau * std::numbers::e * lb, 1.0 / tau));
    return phi_inverse(y, lambda, b);
  };
  EpsResult out;
  if (fixed_lambda && fixed_tau) {
    out.lambda = *fixed_lambda;
    out.tau = *fixed_tau;
    out.epsilon = objective(*fixed_lambda, *fixed_tau);
  } else {
    auto outer = [&](double lambda) {
      const double hi = std::min(lambda, 1.0 / lb);
      if (hi <= 2 * kEndpointShrink) return std::numeric_limits<double>::infinity();
      return grid_golden_min([&](double tau) { return objective(lambda, tau); }, 0.0, hi).second;
    };
    auto [lam, val] = grid_golden_min(outer, lambda_lo, 1.0);
    out.lambda = lam;
    out.epsilon = val;
    out.tau =
        grid_golden_min([&](double tau) { return objective(lam, tau); }, 0.0,
                        std::min(lam, 1.0 / lb))
            .first;
  }
  out.vacuous = out.epsilon > 1.0;
  out.series_capped = capped;
  return out;
}

}  // namespace mqmc
