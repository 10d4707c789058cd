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

#ifndef MEDIANQMC_TESTBED_HPP
#define MEDIANQMC_TESTBED_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "medianqmc/median_qmc.hpp"

namespace mqmc {

enum class TestFn { F1, F2, F3, F4, F5 };

std::string to_string(TestFn fn);
TestFn test_fn_from_string(const std::string& name);

/// The benchmark integrands. f1-f3 are one-dimensional; f4 defaults to
/// s = 20 and f5 to s = 5; c parametrizes f4 (smoothness) and f5 (decay).
struct TestFunction {
  TestFn id = TestFn::F1;
  int s = 1;
  double c = 0.0;

  static TestFunction make(TestFn id, int s = 0, double c = -1.0);  // 0/-1: defaults
};

double eval(const TestFunction& tf, std::span<const double> x);
double exact_integral(const TestFunction& tf);
Integrand integrand(const TestFunction& tf);

enum class RuleKind { Sobol, MedianScrambledSobol, MedianPlr };

std::string to_string(RuleKind rule);
RuleKind rule_kind_from_string(const std::string& name);

struct ConvergenceRecord {
  RuleKind rule = RuleKind::Sobol;
  TestFn fn = TestFn::F1;
  double c = 0.0;
  int s = 1;
  int b = 2;
  int m = 0;
  std::uint64_t n = 0;
  int r = 1;
  int w = 52;
  std::uint64_t seed = 0;
  double abs_error = 0.0;
  std::vector<double> replicate_errors;  // empty for the deterministic rule
};

/// One record per m in [m_lo, m_hi]; derived seeds per record and replicate.
/// Records for different m are computed independently.
std::vector<ConvergenceRecord> run_convergence(RuleKind rule, const TestFunction& tf, int m_lo,
                                               int m_hi, int r, int w, std::uint64_t seed,
                                               const DirectionTable& table = DirectionTable::bundled());

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  int used = 0;
  int dropped_zero = 0;    // exact zeros, excluded
  int dropped_floor = 0;   // below the double-precision noise floor
  int dropped_pre = 0;     // m < 6, pre-asymptotic
};

/// Least-squares slope of log2(error) against m, using m >= 6 and errors in
/// [1e-13, inf). Throws if no usable records remain.
SlopeFit fit_slope(std::span<const ConvergenceRecord> records);

/// CSV schema: header "rule,function,c,s,b,m,N,r,w,seed,abs_error"; doubles
/// are emitted with 17 significant digits so a round trip is bit exact.
/// Lines starting with '#' carry the configuration echo and are skipped on
/// read.
void write_records_csv(std::ostream& out, std::span<const ConvergenceRecord> records,
                       std::span<const std::string> header_comments);
std::vector<ConvergenceRecord> read_records_csv(std::istream& in);

/// Companion schema with one row per replicate:
/// "rule,function,c,s,b,m,N,r,w,seed,replicate,abs_error".
void write_replicates_csv(std::ostream& out, std::span<const ConvergenceRecord> records,
                          std::span<const std::string> header_comments);

}  // namespace mqmc

#endif
