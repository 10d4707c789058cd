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

#ifndef MEDIANQMC_VERIFICATION_HPP
#define MEDIANQMC_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mqmc {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  int base = 0;    // 0: every base a check specifies; otherwise restrict to one
  int max_m = 4;   // cap on m for the exhaustive scans
  std::uint64_t seed = 0;
};

/// Runs the exhaustive combinatorial checks behind the probabilistic
/// machinery: dual/rank agreement, scrambling distribution facts, dual
/// membership probabilities, cross-construction identities and the counting
/// identities of the polynomial layer.
std::vector<CheckResult> run_verification(const VerifyOptions& opt);

}  // namespace mqmc

#endif
