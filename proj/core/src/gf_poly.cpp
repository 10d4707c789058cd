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

#include "medianqmc/gf_poly.hpp"

#include <map>
#include <mutex>
#include <string>

namespace mqmc {

namespace {

void require_same_base(const GfPoly& a, const GfPoly& c) {
  detail::require(a.base() == c.base(), "mismatched polynomial bases");
}

// modular inverse in F_b via Fermat (b prime, tiny)
std::uint8_t inv_mod(std::uint8_t a, int b) {
  int r = 1, x = a;
  for (int e = b - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * x % b;
    x = x * x % b;
  }
  return static_cast<std::uint8_t>(r);
}

}  // namespace

GfScalar::GfScalar(int base_in, std::uint8_t value_in) : base(base_in), value(value_in) {
  detail::require_prime_base(base);
  detail::require(value < base, "field element out of range");
}

GfPoly::GfPoly(int base) : base_(base) { detail::require_prime_base(base); }

GfPoly::GfPoly(int base, std::vector<std::uint8_t> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
  detail::require_prime_base(base);
  for (std::uint8_t c : coeffs_)
    detail::require(c < base, "coefficient out of range for base");
  canonicalize();
}

void GfPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

GfPoly GfPoly::from_integer(int base, std::uint64_t k) {
  GfPoly p(base);
  while (k != 0) {
    p.coeffs_.push_back(static_cast<std::uint8_t>(k % base));
    k /= base;
  }
  return p;
}

GfPoly GfPoly::monomial(int base, int degree, std::uint8_t coeff) {
  detail::require(degree >= 0, "monomial degree must be non-negative");
  GfPoly p(base);
  if (coeff % base == 0) return p;
  p.coeffs_.assign(degree + 1, 0);
  p.coeffs_[degree] = static_cast<std::uint8_t>(coeff % base);
  return p;
}

std::uint64_t GfPoly::to_integer() const {
  std::uint64_t v = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (v > (UINT64_MAX - *it) / base_) throw InstanceTooLarge("polynomial too large for 64-bit encoding");
    v = v * base_ + *it;
  }
  return v;
}

GfPoly add(const GfPoly& a, const GfPoly& c) {
  require_same_base(a, c);
  const int b = a.base();
  std::vector<std::uint8_t> out(std::max(a.coeffs().size(), c.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((a.coeff(static_cast<int>(i)) + c.coeff(static_cast<int>(i))) % b);
  return GfPoly(b, std::move(out));
}

GfPoly sub(const GfPoly& a, const GfPoly& c) {
  require_same_base(a, c);
  const int b = a.base();
  std::vector<std::uint8_t> out(std::max(a.coeffs().size(), c.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = static_cast<std::uint8_t>((a.coeff(static_cast<int>(i)) + b - c.coeff(static_cast<int>(i))) % b);
  return GfPoly(b, std::move(out));
}

GfPoly mul(const GfPoly& a, const GfPoly& c) {
  require_same_base(a, c);
  const int b = a.base();
  if (a.is_zero() || c.is_zero()) return GfPoly(b);
  std::vector<std::uint8_t> out(a.coeffs().size() + c.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < c.coeffs().size(); ++j)
      out[i + j] = static_cast<std::uint8_t>((out[i + j] + a.coeffs()[i] * c.coeffs()[j]) % b);
  }
  return GfPoly(b, std::move(out));
}

GfPoly pow(const GfPoly& a, unsigned e) {
  GfPoly r = GfPoly::one(a.base());
  GfPoly x = a;
  while (e > 0) {
    if (e & 1u) r = mul(r, x);
    x = mul(x, x);
    e >>= 1u;
  }
  return r;
}

GfPoly poly_mod(const GfPoly& a, const GfPoly& p) {
  require_same_base(a, p);
  detail::require(!p.is_zero(), "modulus must be nonzero");
  const int b = a.base();
  const int dp = p.degree();
  if (a.degree() < dp) return a;
  std::vector<std::uint8_t> rem(a.coeffs().begin(), a.coeffs().end());
  const std::uint8_t lead_inv = inv_mod(p.coeff(dp), b);
  for (int d = static_cast<int>(rem.size()) - 1; d >= dp; --d) {
    if (rem[d] == 0) continue;
    const int factor = rem[d] * lead_inv % b;
    for (int i = 0; i <= dp; ++i) {
      const int pos = d - dp + i;
      rem[pos] = static_cast<std::uint8_t>((rem[pos] + b * b - factor * p.coeff(i) % b) % b);
    }
  }
  rem.resize(dp > 0 ? dp : 0);
  return GfPoly(b, std::move(rem));
}

GfPoly poly_mulmod(const GfPoly& a, const GfPoly& c, const GfPoly& p) {
  require_same_base(a, c);
  return poly_mod(mul(a, c), p);
}

bool is_irreducible(const GfPoly& p) {
  detail::require(p.degree() >= 1, "irreducibility is undefined for constant polynomials");
  const int b = p.base();
  const int half = p.degree() / 2;
  // candidates: all monic polynomials of degree 1..half
  for (int d = 1; d <= half; ++d) {
    std::vector<std::uint8_t> c(d + 1, 0);
    c[d] = 1;
    const std::uint64_t combos = detail::ipow(b, d);
    for (std::uint64_t v = 0; v < combos; ++v) {
      std::uint64_t t = v;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<std::uint8_t>(t % b);
        t /= b;
      }
      if (poly_mod(p, GfPoly(b, c)).is_zero()) return false;
    }
  }
  return true;
}

ModulusSet::ModulusSet(int base, int m) : base_(base), degree_(m) {
  detail::require(m >= 1, "modulus degree must be at least 1");
  const std::uint64_t combos = detail::ipow(base, m);
  std::vector<std::uint8_t> c(m + 1, 0);
  c[m] = 1;
  for (std::uint64_t v = 0; v < combos; ++v) {
    std::uint64_t t = v;
    for (int i = 0; i < m; ++i) {
      c[i] = static_cast<std::uint8_t>(t % base);
      t /= base;
    }
    GfPoly cand(base, c);
    if (is_irreducible(cand)) members_.push_back(std::move(cand));
  }
}

const ModulusSet& ModulusSet::get(int base, int m) {
  detail::require_prime_base(base);
  static std::mutex mtx;
  static std::map<std::pair<int, int>, ModulusSet> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find({base, m});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(base, m), ModulusSet(base, m)).first;
  return it->second;
}

GfPoly sample_modulus(int base, int m, Rng& rng) {
  const auto& set = ModulusSet::get(base, m);
  return set.members()[rng.below(static_cast<std::uint32_t>(set.members().size()))];
}

std::vector<std::uint8_t> laurent_digits(const GfPoly& g, const GfPoly& p, int count) {
  require_same_base(g, p);
  detail::require(!p.is_zero(), "modulus must be nonzero");
  detail::require(g.degree() < p.degree(), "laurent_digits requires deg(g) < deg(p)");
  detail::require(count >= 1, "digit count must be positive");
  const int b = g.base();
  const int e = p.degree();
  const std::uint8_t lead_inv = inv_mod(p.coeff(e), b);

  // Invariant: g/p = sum_{j<=i} u_j x^{-j} + r/(p x^i) with deg(r) < e.
  std::vector<std::uint8_t> r(e, 0);
  for (int i = 0; i <= g.degree(); ++i) r[i] = g.coeff(i);
  std::vector<std::uint8_t> digits(count, 0);
  for (int i = 0; i < count; ++i) {
    // r <- r*x; the coefficient at x^e determines u_{i+1}; subtract u*p.
    const std::uint8_t top = (e >= 1) ? r[e - 1] : 0;
    const std::uint8_t u = static_cast<std::uint8_t>(top * lead_inv % b);
    for (int d = e - 1; d >= 1; --d) r[d] = r[d - 1];
    if (e >= 1) r[0] = 0;
    if (u != 0) {
      for (int d = 0; d < e; ++d)
        r[d] = static_cast<std::uint8_t>((r[d] + b * b - u * p.coeff(d) % b) % b);
    }
    digits[i] = u;
  }
  return digits;
}

}  // namespace mqmc
