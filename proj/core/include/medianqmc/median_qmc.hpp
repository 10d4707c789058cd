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

#ifndef MEDIANQMC_MEDIAN_QMC_HPP
#define MEDIANQMC_MEDIAN_QMC_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "medianqmc/digital_net.hpp"
#include "medianqmc/poly_lattice.hpp"
#include "medianqmc/scramble.hpp"

namespace mqmc {

using Integrand = std::function<double(std::span<const double>)>;

/// Description of the random point-set family of the median rule: linearly
/// scrambled digital nets around fixed base matrices, or random polynomial
/// lattice point sets. r must be odd.
struct RuleSpec {
  enum class Family { ScrambledNet, PolyLattice };

  static RuleSpec scrambled_net(GenMatrixSet base, int w, int r, std::uint64_t seed);
  static RuleSpec poly_lattice(int b, int m, int s, int w, int r, std::uint64_t seed);

  Family family = Family::ScrambledNet;
  std::optional<GenMatrixSet> base;  // ScrambledNet only
  int b = 2;
  int m = 1;
  int s = 1;
  int w = 52;
  int r = 15;
  std::uint64_t seed = 0;
};

/// One draw from the rule's family (replicate index selects the stream).
PointSet draw_point_set(const RuleSpec& rule, std::uint64_t replicate);

/// Equal-weight average in ascending point order with compensated summation.
/// A non-finite integrand value raises an error carrying the point.
double qmc_mean(const PointSet& p, const Integrand& f);

struct MedianEstimate {
  double value = 0.0;
  std::vector<double> replicate_values;
};

/// Middle order statistic of an odd-length sample.
double median_of(std::span<const double> values);

/// Draws r independent point sets, evaluates the QMC mean on each (in
/// parallel; MQMC_THREADS caps the worker count) and returns the middle
/// order statistic. Deterministic given the rule's seed.
MedianEstimate median_estimate(const RuleSpec& rule, const Integrand& f);

}  // namespace mqmc

#endif
