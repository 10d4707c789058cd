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

#include "medianqmc/verification.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "medianqmc/digital_net.hpp"
#include "medianqmc/gf_poly.hpp"
#include "medianqmc/poly_lattice.hpp"
#include "medianqmc/scramble.hpp"
#include "medianqmc/weight_fns.hpp"

namespace mqmc {

namespace {

struct Tally {
  std::vector<CheckResult> results;
  void add(std::string name, bool pass, std::string detail) {
    results.push_back({std::move(name), pass, std::move(detail)});
  }
};

GenMatrixSet random_square_net(int b, int m, int s, Rng& rng) {
  std::vector<GenMatrix> mats;
  for (int j = 0; j < s; ++j) {
    GenMatrix c(b, m, m);
    for (int i = 0; i < m; ++i)
      for (int r = 0; r < m; ++r)
        c.set(i, r, static_cast<std::uint8_t>(rng.below(static_cast<std::uint32_t>(b))));
    mats.push_back(std::move(c));
  }
  return GenMatrixSet(std::move(mats));
}

// l = L^T k on digit vectors of length c, returned as an integer
std::uint64_t transpose_apply(const LowerTriScramble& l, std::uint64_t k, int c, int b) {
  std::vector<int> kd(c, 0);
  for (int i = 0; i < c; ++i) {
    kd[i] = static_cast<int>(k % b);
    k /= b;
  }
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < c; ++i) {
    int acc = 0;
    for (int j = i; j < c; ++j) acc += l.at(j, i) * kd[j];
    out += static_cast<std::uint64_t>(acc % b) * place;
    place *= static_cast<unsigned>(b);
  }
  return out;
}

void enumerate_scrambles(int b, int rows, int cols,
                         const std::function<void(const LowerTriScramble&)>& fn) {
  const std::uint64_t n = LowerTriScramble::family_size(b, rows, cols);
  if (n > (std::uint64_t{1} << 20)) throw InstanceTooLarge("scramble family too large to enumerate");
  for (std::uint64_t i = 0; i < n; ++i) fn(LowerTriScramble::from_index(b, rows, cols, i));
}

bool in_dual(const GenMatrixSet& g, std::span<const std::uint64_t> k) {
  // syndrome over the first ceil(max digits) rows; row count must cover the digits
  const int b = g.base();
  const int m = g.cols();
  int need = 0;
  for (std::uint64_t kj : k) need = std::max(need, mu1(kj, b));
  detail::require(need <= g.rows(), "vector digits exceed matrix rows");
  for (int r = 0; r < m; ++r) {
    int acc = 0;
    for (int j = 0; j < g.dim(); ++j) {
      std::uint64_t v = k[j];
      for (int i = 0; v != 0; ++i, v /= b) {
        const int d = static_cast<int>(v % b);
        if (d) acc += d * g.matrix(j).at(i, r);
      }
    }
    if (acc % b != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

void check_rank_vs_dual(Tally& t, const VerifyOptions& opt) {
  // structured instances
  bool ok = true;
  std::ostringstream why;
  {
    const GenMatrixSet id1(std::vector<GenMatrix>{GenMatrix::identity(2, 3)});
    if (t_value_rank(id1) != 0 || t_value_dual(id1) != 0) {
      ok = false;
      why << "identity s=1 failed; ";
    }
    GenMatrix anti(2, 2, 2);
    anti.set(0, 1, 1);
    anti.set(1, 0, 1);
    const GenMatrixSet pair1(std::vector<GenMatrix>{GenMatrix::identity(2, 2), anti});
    if (t_value_rank(pair1) != 0 || t_value_dual(pair1) != 0) {
      ok = false;
      why << "identity+antidiagonal failed; ";
    }
    const GenMatrixSet pair2(
        std::vector<GenMatrix>{GenMatrix::identity(2, 2), GenMatrix::identity(2, 2)});
    if (t_value_rank(pair2) != 1 || t_value_dual(pair2) != 1) {
      ok = false;
      why << "duplicated identity should give t=1; ";
    }
  }
  t.add("tvalue-rank-vs-dual-structured", ok, ok ? "3 structured instances agree" : why.str());

  // random instances
  int tested = 0;
  bool agree = true;
  std::ostringstream detail;
  Rng rng = make_stream(opt.seed, {0x7261});
  for (int b : {2, 3}) {
    if (opt.base != 0 && b != opt.base) continue;
    for (int i = 0; i < 25; ++i) {
      const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(std::min(opt.max_m, 4))));
      const int smax = (b == 2) ? 3 : 2;
      const int s = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(smax)));
      const GenMatrixSet g = random_square_net(b, m, s, rng);
      const int tr = t_value_rank(g);
      const int td = t_value_dual(g);
      ++tested;
      if (tr != td) {
        agree = false;
        detail << "mismatch b=" << b << " m=" << m << " s=" << s << " rank=" << tr
               << " dual=" << td << "; ";
      }
    }
  }
  t.add("tvalue-rank-vs-dual-random", agree,
        agree ? "agreement on " + std::to_string(tested) + " random nets" : detail.str());
}

void check_scramble_preserves_tvalue(Tally& t, const VerifyOptions& opt) {
  struct Base {
    const char* name;
    GenMatrixSet g;
  };
  std::vector<Base> bases;
  bases.push_back({"sobol s=2 m=4", sobol_matrices(2, std::min(4, opt.max_m))});
  bases.push_back({"sobol s=3 m=3", sobol_matrices(3, std::min(3, opt.max_m))});
  if (opt.base == 0 || opt.base == 3)
    bases.push_back({"niederreiter b=3 s=2 m=2", niederreiter_matrices(2, 2, 3)});
  bool ok = true;
  std::ostringstream why;
  for (const auto& base : bases) {
    const int t0 = t_value_rank(base.g);
    for (int rep = 0; rep < 100; ++rep) {
      const GenMatrixSet drawn = draw_scrambled_net(base.g, 52, opt.seed, rep);
      if (t_value_rank(drawn) != t0) {
        ok = false;
        why << base.name << " draw " << rep << " changed t; ";
        break;
      }
    }
  }
  t.add("scramble-preserves-tvalue", ok, ok ? "t unchanged over 100 draws per base" : why.str());
}

void check_scramble_conditional_prob(Tally& t, const VerifyOptions& opt) {
  // enumerate L_{c,c} over F_2; every k' with the same top digit position is
  // hit by exactly |L| / ((b-1) b^{c-1}) matrices
  const int b = 2;
  bool ok = true;
  std::ostringstream why;
  for (int c = 1; c <= std::min(4, opt.max_m); ++c) {
    const std::uint64_t k = std::uint64_t{1} << (c - 1);  // mu1(k) = c
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total = 0;
    enumerate_scrambles(b, c, c, [&](const LowerTriScramble& l) {
      ++total;
      ++counts[transpose_apply(l, k, c, b)];
    });
    const std::uint64_t expected = total / ((b - 1) * detail::ipow(b, c - 1));
    for (std::uint64_t kp = std::uint64_t{1} << (c - 1); kp < (std::uint64_t{1} << c); ++kp) {
      if (counts[kp] != expected) {
        ok = false;
        why << "c=" << c << " k'=" << kp << " count=" << counts[kp] << " want=" << expected
            << "; ";
      }
    }
  }
  t.add("scramble-conditional-prob", ok,
        ok ? "exact 1/((b-1)b^(c-1)) for c <= " + std::to_string(std::min(4, opt.max_m)) : why.str());
}

void check_scramble_mu1_invariance(Tally& t, const VerifyOptions& opt) {
  const int b = 2;
  bool ok = true;
  std::ostringstream why;
  for (int c = 1; c <= std::min(4, opt.max_m); ++c) {
    enumerate_scrambles(b, c, c, [&](const LowerTriScramble& l) {
      for (std::uint64_t k = 1; k < (std::uint64_t{1} << c); ++k) {
        if (mu1(transpose_apply(l, k, c, b), b) != mu1(k, b)) {
          ok = false;
          why << "c=" << c << " k=" << k << "; ";
        }
      }
    });
  }
  t.add("scramble-mu1-invariance", ok, ok ? "mu1(L^T k) = mu1(k) exhaustively" : why.str());
}

void check_gain_coefficient(Tally& t, const VerifyOptions& opt) {
  const int b = 2;
  const int s = 2;
  bool ok = true;
  std::ostringstream why;
  Rng rng = make_stream(opt.seed, {0x6763});
  for (int m = 2; m <= std::min(4, opt.max_m); ++m) {
    std::vector<GenMatrixSet> nets;
    nets.push_back(sobol_matrices(s, m));
    nets.push_back(niederreiter_matrices(s, m, b));
    for (int i = 0; i < 3; ++i) nets.push_back(random_square_net(b, m, s, rng));
    for (const auto& g : nets) {
      // exact dual counts per profile (c1, c2) with zeros marking excluded dims
      std::map<std::pair<int, int>, std::uint64_t> counts;
      const std::uint64_t bm = detail::ipow(b, m);
      std::vector<std::uint64_t> k(2);
      for (k[0] = 0; k[0] < bm; ++k[0])
        for (k[1] = 0; k[1] < bm; ++k[1]) {
          if (k[0] == 0 && k[1] == 0) continue;
          if (!in_dual(g, k)) continue;
          ++counts[{mu1(k[0], b), mu1(k[1], b)}];
        }
      const std::vector<int> d0{0};
      const std::vector<int> d1{1};
      const int tu0 = t_value_rank(g, d0);
      const int tu1 = t_value_rank(g, d1);
      const int tu01 = t_value_rank(g);
      for (const auto& [profile, count] : counts) {
        const auto [c1, c2] = profile;
        int tu, card, csum;
        if (c1 > 0 && c2 > 0) {
          tu = tu01;
          card = 2;
          csum = c1 + c2;
        } else if (c1 > 0) {
          tu = tu0;
          card = 1;
          csum = c1;
        } else {
          tu = tu1;
          card = 1;
          csum = c2;
        }
        double bound;
        if (csum <= m - tu)
          bound = 0.0;
        else if (csum <= m - tu + card)
          bound = std::pow(b - 1.0, csum - (m - tu));
        else
          bound = std::pow(b - 1.0, card) * std::pow(static_cast<double>(b), csum - (m - tu + card));
        const double simple = ((b - 1.0) / b) * std::pow(static_cast<double>(b), csum - (m - tu));
        if (static_cast<double>(count) > bound + 1e-9 ||
            static_cast<double>(count) > simple + 1e-9) {
          ok = false;
          why << "m=" << m << " profile(" << c1 << "," << c2 << ") count=" << count
              << " bound=" << bound << "; ";
        }
      }
    }
  }
  t.add("gain-coefficient-bound", ok,
        ok ? "all NRT-profile dual counts respect the three-case bound" : why.str());
}

void check_dual_probability_claims(Tally& t, const VerifyOptions&) {
  // k = 1 is never scrambled into the dual of the identity net (b=2, m=2)
  bool ok1 = true;
  {
    std::uint64_t member = 0, total = 0;
    enumerate_scrambles(2, 2, 2, [&](const LowerTriScramble& l) {
      const GenMatrix lc = apply_scramble(l, GenMatrix::identity(2, 2));
      const GenMatrixSet net(std::vector<GenMatrix>{lc});
      const std::uint64_t k[1] = {1};
      ++total;
      if (in_dual(net, k)) ++member;
    });
    ok1 = (member == 0) && total == 2;
    t.add("dual-prob-k1-never", ok1,
          "membership 0/" + std::to_string(total) + " <= b^(-m+t) = 0.25");
  }
  // k = 4 >= b^m: membership frequency exactly 1/b^m over L_{3,2}
  {
    std::uint64_t member = 0, total = 0;
    enumerate_scrambles(2, 3, 2, [&](const LowerTriScramble& l) {
      const GenMatrix lc = apply_scramble(l, GenMatrix::identity(2, 2));
      const GenMatrixSet net(std::vector<GenMatrix>{lc});
      const std::uint64_t k[1] = {4};
      ++total;
      if (in_dual(net, k)) ++member;
    });
    const bool ok2 = (4 * member == total);
    t.add("dual-prob-highk-exact", ok2,
          "membership " + std::to_string(member) + "/" + std::to_string(total) + " = 1/b^m");
  }
}

void check_plr_dual_probability(Tally& t, const VerifyOptions&) {
  const int b = 2, m = 2;
  const auto& mods = ModulusSet::get(b, m);
  std::vector<GfPoly> gens;
  for (std::uint64_t v = 1; v < detail::ipow(b, m); ++v) gens.push_back(GfPoly::from_integer(b, v));

  auto frequency = [&](std::uint64_t k1, std::uint64_t k2) {
    std::uint64_t member = 0, total = 0;
    for (const auto& p : mods.members())
      for (const auto& g1 : gens)
        for (const auto& g2 : gens) {
          const PlrSpec spec(b, m, p, {g1, g2}, m);
          const std::uint64_t k[2] = {k1, k2};
          ++total;
          if (plr_dual_member(k, spec)) ++member;
        }
    return std::pair{member, total};
  };

  const auto [m11, t11] = frequency(1, 1);
  const bool exact = (3 * m11 == t11);
  t.add("plr-dual-prob-exact", exact,
        "k=(1,1): " + std::to_string(m11) + "/" + std::to_string(t11) + " = 1/(b^m-1)");

  bool ok = true;
  std::ostringstream why;
  for (auto [k1, k2] : {std::pair<std::uint64_t, std::uint64_t>{4, 1}, {5, 2}}) {
    const auto [mem, tot] = frequency(k1, k2);
    const std::uint64_t kvec[2] = {k1, k2};
    const double bound = 3.0 * static_cast<double>(mu1_vec(kvec, b)) / (detail::ipow(b, m) - 1);
    if (static_cast<double>(mem) / static_cast<double>(tot) > bound) {
      ok = false;
      why << "k=(" << k1 << "," << k2 << ") freq " << mem << "/" << tot << " > " << bound << "; ";
    }
  }
  t.add("plr-dual-prob-bound", ok, ok ? "k=(4,1),(5,2) within 3 mu1(k)/(b^m-1)" : why.str());
}

void check_plr_cross_construction(Tally& t, const VerifyOptions& opt) {
  const int b = 2;
  bool ok = true;
  std::ostringstream why;
  for (int m = 1; m <= std::min(3, opt.max_m); ++m) {
    const auto& mods = ModulusSet::get(b, m);
    for (const auto& p : mods.members())
      for (std::uint64_t gv = 1; gv < detail::ipow(b, m); ++gv)
        for (int w : {m, 2 * m, 52}) {
          const PlrSpec spec(b, m, p, {GfPoly::from_integer(b, gv)}, w);
          const PointSet direct = plr_points(spec);
          const PointSet via_mats = generate_points(plr_gen_matrices(spec));
          if (!(direct == via_mats)) {
            ok = false;
            why << "m=" << m << " g=" << gv << " w=" << w << " differ; ";
          }
        }
  }
  // the worked set at (p = x^2+x+1, g = 1, w = 4)
  {
    const PlrSpec spec(b, 2, GfPoly(b, {1, 1, 1}), {GfPoly::one(b)}, 4);
    const PointSet pts = plr_points(spec);
    const double want[4] = {0.0, 0.375, 0.8125, 0.6875};
    for (int k = 0; k < 4; ++k)
      if (pts.coord(k, 0) != want[k]) {
        ok = false;
        why << "worked set point " << k << " = " << pts.coord(k, 0) << "; ";
      }
  }
  t.add("plr-cross-construction", ok,
        ok ? "per-point expansion matches Hankel matrices bit for bit" : why.str());
}

void check_moduli_counts(Tally& t, const VerifyOptions& opt) {
  // Gauss necklace count via Moebius mu
  auto moebius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
    if (n > 1) result = -result;
    return result;
  };
  bool ok = true;
  std::ostringstream why;
  for (int b : {2, 3, 5}) {
    if (opt.base != 0 && b != opt.base) continue;
    for (int m = 1; m <= std::min(6, opt.max_m + 2); ++m) {
      long long want = 0;
      for (int d = 1; d <= m; ++d)
        if (m % d == 0) want += moebius(d) * static_cast<long long>(detail::ipow(b, m / d));
      want /= m;
      const auto& set = ModulusSet::get(b, m);
      const auto got = static_cast<long long>(set.members().size());
      if (got != want) {
        ok = false;
        why << "b=" << b << " m=" << m << " got " << got << " want " << want << "; ";
      }
      if (static_cast<double>(got) < std::pow(static_cast<double>(b), m) / (2.0 * m)) {
        ok = false;
        why << "b=" << b << " m=" << m << " below b^m/(2m); ";
      }
      for (const auto& p : set.members())
        if (!is_irreducible(p) || !p.is_monic()) {
          ok = false;
          why << "b=" << b << " m=" << m << " bad member; ";
        }
    }
  }
  t.add("moduli-count-necklace", ok, ok ? "|P_m| matches the necklace count" : why.str());
}

void check_rtilde_sum(Tally& t, const VerifyOptions& opt) {
  bool ok = true;
  std::ostringstream why;
  for (int b : {2, 3, 5}) {
    if (opt.base != 0 && b != opt.base) continue;
    const int mmax = std::min(8, opt.max_m + 4);
    for (int m = 1; m <= mmax; ++m) {
      const std::uint64_t bm = detail::ipow(b, m);
      double sum = 0.0;
      for (std::uint64_t k = 1; k < bm; ++k) sum += rtilde(k, b);
      const double want = m * (static_cast<double>(b) * b - 1.0) / (3.0 * b);
      if (std::abs(sum - want) > 1e-9 * want) {
        ok = false;
        why << "b=" << b << " m=" << m << " sum=" << sum << " want=" << want << "; ";
      }
    }
  }
  t.add("rtilde-sum", ok, ok ? "sum r~_b(k) = m(b^2-1)/(3b) for b in {2,3,5}" : why.str());
}

void check_laurent_periodicity(Tally& t, const VerifyOptions& opt) {
  bool ok = true;
  std::ostringstream why;
  for (int b : {2, 3}) {
    if (opt.base != 0 && b != opt.base) continue;
    for (int m = 1; m <= std::min(4, opt.max_m); ++m) {
      const auto& mods = ModulusSet::get(b, m);
      const int period = static_cast<int>(detail::ipow(b, m)) - 1;
      if (period == 0) continue;
      for (const auto& p : mods.members())
        for (std::uint64_t gv = 1; gv < detail::ipow(b, m); ++gv) {
          const auto d = laurent_digits(GfPoly::from_integer(b, gv), p, 2 * period);
          for (int i = 0; i < period; ++i)
            if (d[i] != d[i + period]) {
              ok = false;
              why << "b=" << b << " m=" << m << " g=" << gv << " aperiodic; ";
            }
        }
    }
  }
  t.add("laurent-periodicity", ok, ok ? "digit streams repeat with period | b^m - 1" : why.str());
}

void check_mulmod_properties(Tally& t, const VerifyOptions& opt) {
  bool ok = true;
  std::ostringstream why;
  Rng rng = make_stream(opt.seed, {0x6d6d});
  for (int b : {2, 3, 5}) {
    if (opt.base != 0 && b != opt.base) continue;
    for (int m : {2, 3}) {
      const auto& mods = ModulusSet::get(b, m);
      const GfPoly& p = mods.members().front();
      const std::uint64_t range = detail::ipow(b, m + 2);
      for (int i = 0; i < 200; ++i) {
        const GfPoly a = GfPoly::from_integer(b, rng.next() % range);
        const GfPoly c = GfPoly::from_integer(b, rng.next() % range);
        const GfPoly d = GfPoly::from_integer(b, rng.next() % range);
        if (poly_mulmod(a, c, p) != poly_mulmod(c, a, p)) {
          ok = false;
          why << "commutativity b=" << b << "; ";
        }
        if (poly_mulmod(poly_mulmod(a, c, p), d, p) != poly_mulmod(a, poly_mulmod(c, d, p), p)) {
          ok = false;
          why << "associativity b=" << b << "; ";
        }
      }
    }
  }
  t.add("mulmod-properties", ok, ok ? "commutative and associative on 200 triples per (b,m)" : why.str());
}

void check_sampling_uniformity(Tally& t, const VerifyOptions& opt) {
  // chi-square style 5-sigma screens on the seeded samplers
  bool ok = true;
  std::ostringstream why;
  {
    const int b = 3, draws = 10000;
    std::uint64_t sub_counts[3] = {0, 0, 0};
    std::uint64_t diag_counts[2] = {0, 0};
    for (int i = 0; i < draws; ++i) {
      const LowerTriScramble l = sample_scramble(b, 4, 4, SeedSpec{opt.seed, static_cast<std::uint64_t>(i), 0});
      ++sub_counts[l.at(2, 1)];
      ++diag_counts[l.at(1, 1) - 1];
    }
    const double mean_sub = draws / 3.0;
    const double sd_sub = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
    for (int v = 0; v < 3; ++v)
      if (std::abs(sub_counts[v] - mean_sub) > 5 * sd_sub) {
        ok = false;
        why << "sub-diagonal value " << v << " count " << sub_counts[v] << "; ";
      }
    const double mean_diag = draws / 2.0;
    const double sd_diag = std::sqrt(draws * 0.25);
    for (int v = 0; v < 2; ++v)
      if (std::abs(diag_counts[v] - mean_diag) > 5 * sd_diag) {
        ok = false;
        why << "diagonal value " << (v + 1) << " count " << diag_counts[v] << "; ";
      }
  }
  {
    const int b = 2, m = 3, draws = 10000;
    std::map<std::uint64_t, int> mod_counts;
    for (int i = 0; i < draws; ++i) {
      const PlrSpec spec = sample_plr(b, m, 2, m, SeedSpec{opt.seed, static_cast<std::uint64_t>(i), 0});
      ++mod_counts[spec.modulus.to_integer()];
      for (const auto& g : spec.generators)
        if (g.is_zero()) {
          ok = false;
          why << "zero generator drawn; ";
        }
    }
    if (mod_counts.size() != 2) {
      ok = false;
      why << "expected 2 cubic moduli, saw " << mod_counts.size() << "; ";
    }
    const double mean = draws / 2.0;
    const double sd = std::sqrt(draws * 0.25);
    for (const auto& [mod, count] : mod_counts)
      if (std::abs(count - mean) > 5 * sd) {
        ok = false;
        why << "modulus " << mod << " count " << count << "; ";
      }
    // determinism
    const PlrSpec a = sample_plr(b, m, 2, m, SeedSpec{opt.seed, 7, 0});
    const PlrSpec c = sample_plr(b, m, 2, m, SeedSpec{opt.seed, 7, 0});
    if (!(a.modulus == c.modulus) || !(a.generators[0] == c.generators[0])) {
      ok = false;
      why << "plr draw not deterministic; ";
    }
  }
  t.add("sampling-uniformity", ok, ok ? "5-sigma screens pass on 10^4 draws" : why.str());
}

void check_projection_distinct(Tally& t, const VerifyOptions& opt) {
  // non-singular upper blocks make every 1-D projection a (0,m,1)-net
  bool ok = true;
  std::ostringstream why;
  const int m = std::min(4, opt.max_m);
  {
    const GenMatrixSet drawn = draw_scrambled_net(sobol_matrices(3, m), 52, opt.seed, 1);
    const PointSet pts = generate_points(drawn);
    for (int j = 0; j < 3 && ok; ++j) {
      std::vector<bool> seen(std::size_t{1} << m, false);
      for (std::uint64_t k = 0; k < pts.size(); ++k) {
        std::uint64_t cell = 0;
        for (int pos = 1; pos <= m; ++pos) cell = cell * 2 + pts.digit(k, j, pos);
        if (seen[cell]) {
          ok = false;
          why << "scrambled sobol dim " << j << " repeats cell; ";
          break;
        }
        seen[cell] = true;
      }
    }
  }
  {
    const PlrSpec spec = sample_plr(2, m, 3, 52, SeedSpec{opt.seed, 0, 0});
    const PointSet pts = plr_points(spec);
    for (int j = 0; j < 3 && ok; ++j) {
      std::vector<bool> seen(std::size_t{1} << m, false);
      for (std::uint64_t k = 0; k < pts.size(); ++k) {
        std::uint64_t cell = 0;
        for (int pos = 1; pos <= m; ++pos) cell = cell * 2 + pts.digit(k, j, pos);
        if (seen[cell]) {
          ok = false;
          why << "plr dim " << j << " repeats cell; ";
          break;
        }
        seen[cell] = true;
      }
    }
  }
  t.add("projection-1d-distinct", ok,
        ok ? "every 1-D projection hits each cell of width b^-m once" : why.str());
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
  Tally t;
  check_rank_vs_dual(t, opt);
  check_scramble_preserves_tvalue(t, opt);
  check_scramble_conditional_prob(t, opt);
  check_scramble_mu1_invariance(t, opt);
  check_gain_coefficient(t, opt);
  check_dual_probability_claims(t, opt);
  check_plr_dual_probability(t, opt);
  check_plr_cross_construction(t, opt);
  check_moduli_counts(t, opt);
  check_rtilde_sum(t, opt);
  check_laurent_periodicity(t, opt);
  check_mulmod_properties(t, opt);
  check_sampling_uniformity(t, opt);
  check_projection_distinct(t, opt);
  return t.results;
}

}  // namespace mqmc
