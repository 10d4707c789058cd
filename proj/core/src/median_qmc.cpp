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

#include "medianqmc/median_qmc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace mqmc {

RuleSpec RuleSpec::scrambled_net(GenMatrixSet base, int w, int r, std::uint64_t seed) {
  detail::require(r >= 1 && r % 2 == 1, "the replicate count r must be odd");
  detail::require(base.rows() == base.cols(), "scrambled rules need square base matrices");
  detail::require(w >= base.cols(), "precision w must be at least m");
  RuleSpec rule;
  rule.family = Family::ScrambledNet;
  rule.b = base.base();
  rule.m = base.cols();
  rule.s = base.dim();
  rule.base = std::move(base);
  rule.w = w;
  rule.r = r;
  rule.seed = seed;
  return rule;
}

RuleSpec RuleSpec::poly_lattice(int b, int m, int s, int w, int r, std::uint64_t seed) {
  detail::require(r >= 1 && r % 2 == 1, "the replicate count r must be odd");
  detail::require(w >= m, "precision w must be at least m");
  RuleSpec rule;
  rule.family = Family::PolyLattice;
  rule.b = b;
  rule.m = m;
  rule.s = s;
  rule.w = w;
  rule.r = r;
  rule.seed = seed;
  return rule;
}

PointSet draw_point_set(const RuleSpec& rule, std::uint64_t replicate) {
  if (rule.family == RuleSpec::Family::ScrambledNet) {
    const GenMatrixSet drawn = draw_scrambled_net(*rule.base, rule.w, rule.seed, replicate);
    return generate_points(drawn);
  }
  const SeedSpec seed{rule.seed, replicate, 0};
  const PlrSpec spec = sample_plr(rule.b, rule.m, rule.s, rule.w, seed);
  // generating-matrix route; bit-identical to the per-point Laurent expansion
  return generate_points(plr_gen_matrices(spec));
}

double qmc_mean(const PointSet& p, const Integrand& f) {
  std::vector<double> x(p.dim());
  double sum = 0.0;
  double comp = 0.0;  // Kahan correction
  for (std::uint64_t k = 0; k < p.size(); ++k) {
    for (int j = 0; j < p.dim(); ++j) x[j] = p.coord(k, j);
    const double v = f(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrand returned a non-finite value at point " << k << " = (";
      for (int j = 0; j < p.dim(); ++j) msg << (j ? ", " : "") << x[j];
      msg << ")";
      throw std::domain_error(msg.str());
    }
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum / static_cast<double>(p.size());
}

namespace {

int worker_count(int replicates) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("MQMC_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) n = v;
  }
  return std::min(n, replicates);
}

}  // namespace

double median_of(std::span<const double> values) {
  detail::require(!values.empty() && values.size() % 2 == 1,
                  "the median is taken over an odd number of values");
  std::vector<double> sorted(values.begin(), values.end());
  const std::size_t mid = sorted.size() / 2;
  std::nth_element(sorted.begin(), sorted.begin() + mid, sorted.end());
  return sorted[mid];
}

MedianEstimate median_estimate(const RuleSpec& rule, const Integrand& f) {
  detail::require(rule.r >= 1 && rule.r % 2 == 1, "the replicate count r must be odd");
  MedianEstimate est;
  est.replicate_values.assign(rule.r, 0.0);

  std::vector<std::exception_ptr> errors(rule.r);
  const int workers = worker_count(rule.r);
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= rule.r) return;
      try {
        const PointSet p = draw_point_set(rule, static_cast<std::uint64_t>(i));
        est.replicate_values[i] = qmc_mean(p, f);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  est.value = median_of(est.replicate_values);
  return est;
}

}  // namespace mqmc
