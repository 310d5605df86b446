// Copyright 2026 The dnsga Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dnsga/stats.hpp"

#include <cmath>
#include <limits>

#include "dnsga/error.hpp"

namespace dnsga::stats {

namespace {

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_fraction(double a, double b, double x) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

Verdict decide(double p, double alpha, double mean_a, double mean_b, Direction direction) {
  if (p >= alpha) return Verdict::kTie;
  const bool a_higher = mean_a > mean_b;
  const bool a_better = direction == Direction::kHigherIsBetter ? a_higher : !a_higher;
  return a_better ? Verdict::kWin : Verdict::kLoss;
}

void require_two(std::span<const double> xs, const char* what) {
  if (xs.size() < 2) throw InvalidArgument(std::string(what) + ": need at least two samples");
}

TestResult finish(double diff, double se, double df, double mean_a, double mean_b, Direction direction,
                  double alpha) {
  TestResult r;
  r.df = df;
  if (se == 0.0) {
    // Both samples constant.
    r.t = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    r.p_value = diff == 0.0 ? 1.0 : 0.0;
  } else {
    r.t = diff / se;
    r.p_value = incomplete_beta(df / 2.0, 0.5, df / (df + r.t * r.t));
  }
  r.verdict = decide(r.p_value, alpha, mean_a, mean_b, direction);
  return r;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw InvalidArgument("incomplete_beta: shape parameters must be positive");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_fraction(a, b, x) / a;
  return 1.0 - front * beta_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (!(df > 0.0)) throw InvalidArgument("student_t_cdf: degrees of freedom must be positive");
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
  return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double df) {
  if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("student_t_quantile: p outside (0, 1)");
  if (p == 0.5) return 0.0;
  if (p < 0.5) return -student_t_quantile(1.0 - p, df);
  double lo = 0.0;
  double hi = 1.0;
  while (student_t_cdf(hi, df) < p) hi *= 2.0;
  // Bisection to full double resolution; the cdf is monotone.
  for (int i = 0; i < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    (student_t_cdf(mid, df) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double mean(std::span<const double> xs) {
  if (xs.empty()) throw InvalidArgument("mean: empty sample");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  require_two(xs, "variance");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

Interval mean_ci95(std::span<const double> xs) {
  require_two(xs, "mean_ci95");
  const double m = mean(xs);
  const double n = static_cast<double>(xs.size());
  const double half = student_t_quantile(0.975, n - 1.0) * std::sqrt(variance(xs) / n);
  return {m, m - half, m + half};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kWin:
      return "win";
    case Verdict::kTie:
      return "tie";
    case Verdict::kLoss:
      return "loss";
  }
  return "?";
}

TestResult welch_t_test(std::span<const double> a, std::span<const double> b, Direction direction, double alpha) {
  require_two(a, "welch_t_test");
  require_two(b, "welch_t_test");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean(a);
  const double mb = mean(b);
  const double qa = variance(a) / na;
  const double qb = variance(b) / nb;
  const double se2 = qa + qb;
  const double df = se2 == 0.0 ? na + nb - 2.0 : se2 * se2 / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
  return finish(ma - mb, std::sqrt(se2), df, ma, mb, direction, alpha);
}

TestResult pooled_t_test(std::span<const double> a, std::span<const double> b, Direction direction, double alpha) {
  require_two(a, "pooled_t_test");
  require_two(b, "pooled_t_test");
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double ma = mean(a);
  const double mb = mean(b);
  const double df = na + nb - 2.0;
  const double sp2 = ((na - 1.0) * variance(a) + (nb - 1.0) * variance(b)) / df;
  return finish(ma - mb, std::sqrt(sp2 * (1.0 / na + 1.0 / nb)), df, ma, mb, direction, alpha);
}

}  // namespace dnsga::stats
