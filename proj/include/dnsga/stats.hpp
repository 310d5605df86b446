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

#pragma once

#include <span>
#include <string_view>

namespace dnsga::stats {

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double df);
// Inverse of student_t_cdf for p in (0, 1).
double student_t_quantile(double p, double df);

double mean(std::span<const double> xs);
// Sample variance (n - 1 denominator).
double variance(std::span<const double> xs);

struct Interval {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

// mean +- t(0.975, n-1) * s / sqrt(n). Throws InvalidArgument for n < 2.
Interval mean_ci95(std::span<const double> xs);

enum class Direction { kHigherIsBetter, kLowerIsBetter };
enum class Verdict { kWin, kTie, kLoss };

std::string_view to_string(Verdict v);

struct TestResult {
  double t = 0.0;
  double df = 0.0;
  double p_value = 1.0;
  Verdict verdict = Verdict::kTie;
};

// Two-sided Welch test of a against b; the verdict is from a's side.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b, Direction direction,
                        double alpha = 0.05);

// Pooled-variance Student test, same conventions.
TestResult pooled_t_test(std::span<const double> a, std::span<const double> b, Direction direction,
                         double alpha = 0.05);

}  // namespace dnsga::stats
