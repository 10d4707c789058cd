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

#include "medianqmc/testbed.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace mqmc {

std::string to_string(TestFn fn) {
  switch (fn) {
    case TestFn::F1: return "f1";
    case TestFn::F2: return "f2";
    case TestFn::F3: return "f3";
    case TestFn::F4: return "f4";
    case TestFn::F5: return "f5";
  }
  return "?";
}

TestFn test_fn_from_string(const std::string& name) {
  if (name == "f1") return TestFn::F1;
  if (name == "f2") return TestFn::F2;
  if (name == "f3") return TestFn::F3;
  if (name == "f4") return TestFn::F4;
  if (name == "f5") return TestFn::F5;
  throw std::invalid_argument("unknown test function: " + name);
}

std::string to_string(RuleKind rule) {
  switch (rule) {
    case RuleKind::Sobol: return "sobol";
    case RuleKind::MedianScrambledSobol: return "median-scrambled-sobol";
    case RuleKind::MedianPlr: return "median-plr";
  }
  return "?";
}

RuleKind rule_kind_from_string(const std::string& name) {
  if (name == "sobol") return RuleKind::Sobol;
  if (name == "median-scrambled-sobol") return RuleKind::MedianScrambledSobol;
  if (name == "median-plr") return RuleKind::MedianPlr;
  throw std::invalid_argument("unknown rule: " + name);
}

TestFunction TestFunction::make(TestFn id, int s, double c) {
  TestFunction tf;
  tf.id = id;
  switch (id) {
    case TestFn::F1:
    case TestFn::F2:
    case TestFn::F3:
      detail::require(s == 0 || s == 1, "f1-f3 are one-dimensional");
      tf.s = 1;
      tf.c = 0.0;
      break;
    case TestFn::F4:
      tf.s = (s == 0) ? 20 : s;
      detail::require(c > 0.0 || c == -1.0, "f4 needs c > 0");
      tf.c = (c == -1.0) ? 1.5 : c;
      break;
    case TestFn::F5:
      tf.s = (s == 0) ? 5 : s;
      detail::require(c >= 0.0 || c == -1.0, "f5 needs c >= 0");
      tf.c = (c == -1.0) ? 1.0 : c;
      break;
  }
  detail::require(tf.s >= 1, "dimension must be positive");
  return tf;
}

double eval(const TestFunction& tf, std::span<const double> x) {
  detail::require(static_cast<int>(x.size()) == tf.s, "point dimension mismatch");
  switch (tf.id) {
    case TestFn::F1:
      return std::sqrt(x[0]);
    case TestFn::F2:
      // x^2 (log x + 1/3), continuously extended by 0 at the origin
      return x[0] == 0.0 ? 0.0 : x[0] * x[0] * (std::log(x[0]) + 1.0 / 3.0);
    case TestFn::F3:
      return x[0] * std::exp(x[0]);
    case TestFn::F4: {
      const double ceil_c = std::ceil(tf.c);
      double prod = 1.0;
      for (int j = 1; j <= tf.s; ++j)
        prod *= 1.0 + (std::pow(x[j - 1], tf.c) - 1.0 / (1.0 + tf.c)) / std::exp(ceil_c * j);
      return prod;
    }
    case TestFn::F5: {
      double sum = 0.0;
      for (int j = 1; j <= tf.s; ++j)
        sum += x[j - 1] / std::exp2(std::pow(static_cast<double>(j), tf.c));
      return std::exp(-sum);
    }
  }
  return 0.0;
}

double exact_integral(const TestFunction& tf) {
  switch (tf.id) {
    case TestFn::F1:
      return 2.0 / 3.0;
    case TestFn::F2:
      return 0.0;  // the log term integrates to -1/9 and cancels the x^2/3 term
    case TestFn::F3:
      return 1.0;
    case TestFn::F4:
      return 1.0;  // each factor's bracket integrates to 0
    case TestFn::F5: {
      double prod = 1.0;
      for (int j = 1; j <= tf.s; ++j) {
        const double u = std::exp2(std::pow(static_cast<double>(j), tf.c));
        prod *= u * (1.0 - std::exp(-1.0 / u));
      }
      return prod;
    }
  }
  return 0.0;
}

Integrand integrand(const TestFunction& tf) {
  return [tf](std::span<const double> x) { return eval(tf, x); };
}

std::vector<ConvergenceRecord> run_convergence(RuleKind rule, const TestFunction& tf, int m_lo,
                                               int m_hi, int r, int w, std::uint64_t seed,
                                               const DirectionTable& table) {
  detail::require(m_lo >= 1 && m_lo <= m_hi, "m range must be ascending and positive");
  const double exact = exact_integral(tf);
  const Integrand f = integrand(tf);
  std::vector<ConvergenceRecord> records;
  for (int m = m_lo; m <= m_hi; ++m) {
    ConvergenceRecord rec;
    rec.rule = rule;
    rec.fn = tf.id;
    rec.c = tf.c;
    rec.s = tf.s;
    rec.b = 2;
    rec.m = m;
    rec.n = std::uint64_t{1} << m;
    rec.w = w;
    rec.seed = seed;
    if (rule == RuleKind::Sobol) {
      rec.r = 1;
      const PointSet p = generate_points(sobol_matrices(tf.s, m, table));
      rec.abs_error = std::abs(qmc_mean(p, f) - exact);
    } else {
      rec.r = r;
      // each record owns a derived stream; the rule id keeps the two median
      // families decoupled
      const std::uint64_t rule_tag = (rule == RuleKind::MedianScrambledSobol) ? 1 : 2;
      Rng h = make_stream(seed, {rule_tag, static_cast<std::uint64_t>(tf.id),
                                 static_cast<std::uint64_t>(m),
                                 static_cast<std::uint64_t>(tf.c * 4096.0)});
      const std::uint64_t record_seed = h.next();
      const RuleSpec spec =
          (rule == RuleKind::MedianScrambledSobol)
              ? RuleSpec::scrambled_net(sobol_matrices(tf.s, m, table), w, r, record_seed)
              : RuleSpec::poly_lattice(2, m, tf.s, w, r, record_seed);
      const MedianEstimate est = median_estimate(spec, f);
      rec.abs_error = std::abs(est.value - exact);
      rec.replicate_errors.reserve(est.replicate_values.size());
      for (double v : est.replicate_values) rec.replicate_errors.push_back(std::abs(v - exact));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

SlopeFit fit_slope(std::span<const ConvergenceRecord> records) {
  SlopeFit fit;
  std::vector<std::pair<double, double>> pts;  // (m, log2 error)
  for (const auto& rec : records) {
    if (rec.m < 6) {
      ++fit.dropped_pre;
      continue;
    }
    if (rec.abs_error == 0.0) {
      ++fit.dropped_zero;
      continue;
    }
    if (rec.abs_error < 1e-13) {
      ++fit.dropped_floor;
      continue;
    }
    pts.emplace_back(static_cast<double>(rec.m), std::log2(rec.abs_error));
  }
  detail::require(pts.size() >= 2, "slope fit needs at least two usable records");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.used = static_cast<int>(pts.size());
  return fit;
}

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const ConvergenceRecord> records,
                       std::span<const std::string> header_comments) {
  for (const auto& line : header_comments) out << "# " << line << "\n";
  out << "rule,function,c,s,b,m,N,r,w,seed,abs_error\n";
  for (const auto& rec : records) {
    out << to_string(rec.rule) << ',' << to_string(rec.fn) << ',' << fmt_double(rec.c) << ','
        << rec.s << ',' << rec.b << ',' << rec.m << ',' << rec.n << ',' << rec.r << ',' << rec.w
        << ',' << rec.seed << ',' << fmt_double(rec.abs_error) << "\n";
  }
}

void write_replicates_csv(std::ostream& out, std::span<const ConvergenceRecord> records,
                          std::span<const std::string> header_comments) {
  for (const auto& line : header_comments) out << "# " << line << "\n";
  out << "rule,function,c,s,b,m,N,r,w,seed,replicate,abs_error\n";
  for (const auto& rec : records)
    for (std::size_t i = 0; i < rec.replicate_errors.size(); ++i)
      out << to_string(rec.rule) << ',' << to_string(rec.fn) << ',' << fmt_double(rec.c) << ','
          << rec.s << ',' << rec.b << ',' << rec.m << ',' << rec.n << ',' << rec.r << ',' << rec.w
          << ',' << rec.seed << ',' << i << ',' << fmt_double(rec.replicate_errors[i]) << "\n";
}

std::vector<ConvergenceRecord> read_records_csv(std::istream& in) {
  std::vector<ConvergenceRecord> records;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column header
      continue;
    }
    std::istringstream ls(line);
    std::string field;
    auto next = [&]() {
      detail::require(static_cast<bool>(std::getline(ls, field, ',')), "truncated CSV row");
      return field;
    };
    ConvergenceRecord rec;
    rec.rule = rule_kind_from_string(next());
    rec.fn = test_fn_from_string(next());
    rec.c = std::stod(next());
    rec.s = std::stoi(next());
    rec.b = std::stoi(next());
    rec.m = std::stoi(next());
    rec.n = std::stoull(next());
    rec.r = std::stoi(next());
    rec.w = std::stoi(next());
    rec.seed = std::stoull(next());
    rec.abs_error = std::stod(next());
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace mqmc
