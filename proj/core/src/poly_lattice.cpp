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

#include "medianqmc/poly_lattice.hpp"

namespace mqmc {

PlrSpec::PlrSpec(int base_in, int m_in, GfPoly modulus_in, std::vector<GfPoly> generators_in,
                 int precision_in)
    : base(base_in),
      m(m_in),
      modulus(std::move(modulus_in)),
      generators(std::move(generators_in)),
      precision(precision_in) {
  detail::require_prime_base(base);
  detail::require(m >= 1, "m must be positive");
  detail::require(precision >= m, "precision w must be at least m");
  if (base == 2) detail::require(precision <= 52, "precision is limited to 52 in base 2");
  detail::require(modulus.base() == base && modulus.degree() == m && modulus.is_monic(),
                  "modulus must be monic of degree m over the same base");
  detail::require(is_irreducible(modulus), "modulus must be irreducible");
  detail::require(!generators.empty(), "need at least one generator");
  for (const auto& g : generators)
    detail::require(g.base() == base && !g.is_zero() && g.degree() < m,
                    "generators must be nonzero of degree < m");
}

PlrSpec sample_plr(int b, int m, int s, int w, const SeedSpec& seed) {
  detail::require(m >= 1 && s >= 1, "invalid shape");
  SeedSpec mod_seed = seed;
  mod_seed.dimension = ~std::uint64_t{0};  // modulus stream, distinct from all g_j streams
  Rng mod_rng = make_stream(mod_seed);
  GfPoly p = sample_modulus(b, m, mod_rng);

  const std::uint64_t gm = detail::ipow(b, m) - 1;  // |G_m|
  std::vector<GfPoly> gs;
  gs.reserve(s);
  for (int j = 0; j < s; ++j) {
    SeedSpec gj_seed = seed;
    gj_seed.dimension = static_cast<std::uint64_t>(j);
    Rng rng = make_stream(gj_seed);
    const std::uint64_t v = 1 + rng.below(static_cast<std::uint32_t>(gm));
    gs.push_back(GfPoly::from_integer(b, v));
  }
  return PlrSpec(b, m, std::move(p), std::move(gs), w);
}

PointSet plr_points(const PlrSpec& spec) {
  const int b = spec.base;
  const int w = spec.precision;
  const int s = spec.dim();
  const std::uint64_t n = detail::ipow(b, spec.m);
  PointSet out(b, w, s, n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const GfPoly kx = GfPoly::from_integer(b, k);
    for (int j = 0; j < s; ++j) {
      const GfPoly num = poly_mulmod(kx, spec.generators[j], spec.modulus);
      const auto digits = laurent_digits(num, spec.modulus, w);
      for (int pos = 1; pos <= w; ++pos) out.set_digit(k, j, pos, digits[pos - 1]);
    }
  }
  return out;
}

GenMatrixSet plr_gen_matrices(const PlrSpec& spec) {
  const int b = spec.base;
  const int w = spec.precision;
  const int m = spec.m;
  std::vector<GenMatrix> mats;
  mats.reserve(spec.dim());
  for (const GfPoly& g : spec.generators) {
    const auto u = laurent_digits(g, spec.modulus, w + m - 1);
    GenMatrix c(b, w, m);
    // Hankel: entry (i, r) = u_{i+r-1} with 1-based i, r
    for (int i = 0; i < w; ++i)
      for (int r = 0; r < m; ++r)
        if (u[i + r]) c.set(i, r, u[i + r]);
    mats.push_back(std::move(c));
  }
  return GenMatrixSet(std::move(mats));
}

bool plr_dual_member(std::span<const std::uint64_t> k, const PlrSpec& spec) {
  detail::require(static_cast<int>(k.size()) == spec.dim(), "vector dimension mismatch");
  GfPoly acc(spec.base);
  for (int j = 0; j < spec.dim(); ++j) {
    const GfPoly kx = GfPoly::from_integer(spec.base, k[j]);
    acc = add(acc, poly_mulmod(kx, spec.generators[j], spec.modulus));
  }
  return poly_mod(acc, spec.modulus).is_zero();
}

}  // namespace mqmc
