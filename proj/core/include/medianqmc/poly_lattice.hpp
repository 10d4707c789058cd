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

#ifndef MEDIANQMC_POLY_LATTICE_HPP
#define MEDIANQMC_POLY_LATTICE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "medianqmc/digital_net.hpp"
#include "medianqmc/gf_poly.hpp"
#include "medianqmc/rng.hpp"

namespace mqmc {

/// Polynomial lattice point set description: monic irreducible modulus p of
/// degree m and nonzero generators g_j of degree < m, at precision w >= m.
struct PlrSpec {
  int base = 2;
  int m = 1;
  GfPoly modulus;
  std::vector<GfPoly> generators;
  int precision = 52;

  PlrSpec(int base, int m, GfPoly modulus, std::vector<GfPoly> generators, int precision);
  int dim() const { return static_cast<int>(generators.size()); }
};

/// Uniform draw: p from the enumerated modulus set, each g_j independently
/// uniform on the nonzero polynomials of degree < m.
PlrSpec sample_plr(int b, int m, int s, int w, const SeedSpec& seed);

/// Point k, coordinate j is nu_w applied to the Laurent series of
/// k(x) g_j(x) / p(x); the polynomial part is discarded by reducing
/// k * g_j modulo p before the expansion.
PointSet plr_points(const PlrSpec& spec);

/// The w x m Hankel generating matrices built from the Laurent digits of
/// g_j / p.
GenMatrixSet plr_gen_matrices(const PlrSpec& spec);

/// Dual membership at infinite precision: sum_j k_j(x) g_j(x) = 0 mod p(x).
bool plr_dual_member(std::span<const std::uint64_t> k, const PlrSpec& spec);

}  // namespace mqmc

#endif
