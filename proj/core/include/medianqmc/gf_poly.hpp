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

#ifndef MEDIANQMC_GF_POLY_HPP
#define MEDIANQMC_GF_POLY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "medianqmc/common.hpp"
#include "medianqmc/rng.hpp"

namespace mqmc {

/// One element of the prime field F_b. The base is validated by trial
/// division at construction.
struct GfScalar {
  GfScalar(int base, std::uint8_t value);
  int base;
  std::uint8_t value;
};

/// Dense polynomial over F_b, coefficients stored lowest degree first in
/// canonical form (no trailing zero coefficient).
class GfPoly {
 public:
  /// degree() of the zero polynomial; stands in for "minus infinity".
  static constexpr int kZeroDegree = -0x40000000;

  explicit GfPoly(int base);  // the zero polynomial
  GfPoly(int base, std::vector<std::uint8_t> coeffs);

  /// k(x) = kappa_0 + kappa_1 x + ... from the base-b digits of k.
  static GfPoly from_integer(int base, std::uint64_t k);
  static GfPoly monomial(int base, int degree, std::uint8_t coeff = 1);
  static GfPoly one(int base) { return monomial(base, 0); }

  int base() const { return base_; }
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  std::uint8_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
  }
  std::span<const std::uint8_t> coeffs() const { return coeffs_; }

  /// Integer whose base-b digits are the coefficients. Requires b^(deg+1) to
  /// fit in 64 bits.
  std::uint64_t to_integer() const;

  friend bool operator==(const GfPoly&, const GfPoly&) = default;

 private:
  int base_;
  std::vector<std::uint8_t> coeffs_;
  void canonicalize();
};

GfPoly add(const GfPoly& a, const GfPoly& c);
GfPoly sub(const GfPoly& a, const GfPoly& c);
GfPoly mul(const GfPoly& a, const GfPoly& c);
GfPoly pow(const GfPoly& a, unsigned e);

/// Remainder of a modulo p. p must be nonzero and share a's base.
GfPoly poly_mod(const GfPoly& a, const GfPoly& p);

/// (a*c) mod p in canonical form.
GfPoly poly_mulmod(const GfPoly& a, const GfPoly& c, const GfPoly& p);

/// Exhaustive trial division by monic divisors of degree 1..deg/2.
/// Requires deg(p) >= 1.
bool is_irreducible(const GfPoly& p);

/// All monic irreducible polynomials of degree m over F_b, enumerated once
/// per (b, m) and cached. Read-only after construction.
class ModulusSet {
 public:
  static const ModulusSet& get(int base, int m);
  int base() const { return base_; }
  int degree() const { return degree_; }
  const std::vector<GfPoly>& members() const { return members_; }

 private:
  ModulusSet(int base, int m);
  int base_;
  int degree_;
  std::vector<GfPoly> members_;
};

inline const ModulusSet& enumerate_moduli(int base, int m) { return ModulusSet::get(base, m); }

/// Uniform draw from the cached modulus set P_m.
GfPoly sample_modulus(int base, int m, Rng& rng);

/// First `count` coefficients u_1, u_2, ... of the Laurent expansion
/// g/p = sum_i u_i x^{-i} in F_b((x^{-1})). Requires deg(g) < deg(p).
std::vector<std::uint8_t> laurent_digits(const GfPoly& g, const GfPoly& p, int count);

}  // namespace mqmc

#endif
