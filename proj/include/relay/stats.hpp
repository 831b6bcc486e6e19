/*
 * Copyright 2026 The relayrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cmath>
#include <limits>
#include <span>

#include "relay/errors.hpp"

namespace relay {

/// A probability, validated to lie in [0, 1] (NaN rejected).
class Probability {
 public:
  Probability(double p) : p_(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("probability outside [0, 1]");
    }
  }
  operator double() const noexcept { return p_; }
  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// Parameters of a lognormal distribution on the natural-log scale
/// (log-minutes). sigma must be strictly positive for every consumer;
/// a zero sigma is a degenerate (point-mass) distribution.
struct LognormalParams {
  double mu = 0.0;
  double sigma = 0.0;
};

namespace detail {
inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;

inline double std_normal_pdf(double z) {
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}
}  // namespace detail

/// Standard normal cumulative distribution function. Evaluated through the
/// complementary error function, which keeps the absolute error at the
/// 1e-15 level over the whole real line.
inline Probability std_normal_cdf(double z) {
  if (!std::isfinite(z)) {
    throw DomainError("std_normal_cdf: non-finite input");
  }
  return Probability(0.5 * std::erfc(-z / detail::kSqrt2));
}

/// Inverse of std_normal_cdf on the open interval (0, 1).
///
/// Acklam's rational approximation gives ~1e-9 relative accuracy; two
/// Halley refinements against std_normal_cdf push the result to full
/// double precision.
inline double std_normal_quantile(Probability p) {
  const double pv = p.value();
  if (pv <= 0.0 || pv >= 1.0) {
    throw DomainError("std_normal_quantile: p must lie strictly inside (0, 1)");
  }

  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;

  double x;
  if (pv < p_low) {
    const double q = std::sqrt(-2.0 * std::log(pv));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (pv <= 1.0 - p_low) {
    const double q = pv - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - pv));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  for (int i = 0; i < 2; ++i) {
    const double err = 0.5 * std::erfc(-x / detail::kSqrt2) - pv;
    const double u = err / detail::std_normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);  // Halley step
  }
  return x;
}

/// Lognormal cdf: Phi((log x - mu) / sigma). Requires x > 0 and sigma > 0.
inline Probability lognormal_cdf(double x, const LognormalParams& params) {
  if (!(params.sigma > 0.0)) {
    throw DomainError("lognormal_cdf: sigma must be positive");
  }
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("lognormal_cdf: x must be a positive finite time");
  }
  return std_normal_cdf((std::log(x) - params.mu) / params.sigma);
}

/// Lognormal quantile function: exp(mu + sigma * Phi^-1(p)).
inline double lognormal_quantile(Probability p, const LognormalParams& params) {
  if (!(params.sigma > 0.0)) {
    throw DomainError("lognormal_quantile: sigma must be positive");
  }
  return std::exp(params.mu + params.sigma * std_normal_quantile(p));
}

/// Maximum-likelihood lognormal fit: mu is the mean of the log values,
/// sigma the square root of their population variance (divisor c, no
/// Bessel correction). Needs at least two observations with spread;
/// an all-identical sample is rejected as degenerate.
inline LognormalParams fit_lognormal_mle(std::span<const double> xs) {
  if (xs.size() < 2) {
    throw InsufficientDataError("fit_lognormal_mle: need at least 2 observations");
  }
  for (double x : xs) {
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError("fit_lognormal_mle: observations must be positive finite times");
    }
  }
  bool all_equal = true;
  for (double x : xs) {
    if (x != xs.front()) {
      all_equal = false;
      break;
    }
  }
  if (all_equal) {
    throw DegenerateSampleError("fit_lognormal_mle: sample has zero variance");
  }

  const double c = static_cast<double>(xs.size());
  double mean = 0.0;
  for (double x : xs) mean += std::log(x);
  mean /= c;
  double var = 0.0;
  for (double x : xs) {
    const double d = std::log(x) - mean;
    var += d * d;
  }
  var /= c;
  return LognormalParams{mean, std::sqrt(var)};
}

/// Mean of the r-th order statistic of n independent standard uniforms,
/// which follows Beta(r, n - r + 1): exactly r / (n + 1).
inline Probability uniform_order_stat_mean(int r, int n) {
  if (r < 1 || n < 1 || r > n) {
    throw DomainError("uniform_order_stat_mean: need 1 <= r <= n");
  }
  return Probability(static_cast<double>(r) / (static_cast<double>(n) + 1.0));
}

}  // namespace relay
