// Copyright 2026 The gkplat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gkplat/rates.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkplat {

namespace {

constexpr double kE = std::numbers::e;

double positive_log2(double x) { return x > 1.0 ? std::log2(x) : 0.0; }

void require_positive(const NoiseModel& noise) {
  validate(noise);
  if (noise.sigma_sq <= 0.0) {
    throw std::invalid_argument("sigma_sq must be positive");
  }
}

}  // namespace

std::string to_string(RateKind kind) {
  switch (kind) {
    case RateKind::kCoherentInfo:
      return "coherent_info";
    case RateKind::kHwUpper:
      return "hw_upper";
    case RateKind::kSpherePacking:
      return "sphere_packing";
    case RateKind::kOverlapRate:
      return "overlap_rate";
    case RateKind::kIntegerLambda:
      return "integer_lambda";
  }
  return "unknown";
}

double coherent_information(const NoiseModel& noise) {
  require_positive(noise);
  return positive_log2(1.0 / (kE * noise.reduced_variance()));
}

double hw_upper_bound(const NoiseModel& noise) {
  require_positive(noise);
  return positive_log2(1.0 / noise.reduced_variance());
}

double sphere_packing_rate(const NoiseModel& noise) {
  require_positive(noise);
  return positive_log2(1.0 / (4.0 * kE * noise.reduced_variance()));
}

double overlap_rate(const NoiseModel& noise) { return coherent_information(noise); }

RatePoint rate_point(const NoiseModel& noise, RateKind kind) {
  double v = 0.0;
  switch (kind) {
    case RateKind::kCoherentInfo:
      v = coherent_information(noise);
      break;
    case RateKind::kHwUpper:
      v = hw_upper_bound(noise);
      break;
    case RateKind::kSpherePacking:
      v = sphere_packing_rate(noise);
      break;
    case RateKind::kOverlapRate:
      v = overlap_rate(noise);
      break;
    case RateKind::kIntegerLambda:
      v = best_integer_lambda(noise).rate;
      break;
  }
  return {noise.sigma_sq, v, kind};
}

IntegerLambda best_integer_lambda(const NoiseModel& noise) {
  require_positive(noise);
  const double bound = (1.0 / (kE * noise.reduced_variance())) * (1.0 - 1e-12);
  IntegerLambda out;
  if (!(bound > 0.0)) {
    return out;
  }
  const double lam = std::ceil(bound) - 1.0;
  if (lam >= 1.8e19) {
    throw std::overflow_error("best_integer_lambda: lambda out of range");
  }
  out.lambda = lam > 0.0 ? static_cast<unsigned long>(lam) : 0;
  out.rate = out.lambda > 1 ? std::log2(static_cast<double>(out.lambda)) : 0.0;
  return out;
}

double error_probability_bound(double rate, const NoiseModel& noise, double eps, unsigned long modes) {
  validate(noise);
  if (eps < 0.0) {
    throw std::invalid_argument("eps must be nonnegative");
  }
  const double base = kE * (noise.sigma_sq + eps) / noise.hbar * std::exp2(rate);
  return std::pow(base, static_cast<double>(modes));
}

double sphere_volume(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("sphere_volume: dimension must be positive");
  }
  const double half = 0.5 * static_cast<double>(n);
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
}

double minkowski_radius_sq(unsigned n) {
  return static_cast<double>(n) / (8.0 * std::numbers::pi * kE);
}

}  // namespace gkplat
