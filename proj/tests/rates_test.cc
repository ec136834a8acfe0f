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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gkplat {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kUlps = 4e-16;

NoiseModel noise(double sigma_sq, double hbar = 1.0) { return {sigma_sq, hbar}; }

TEST(CoherentInformation, Thresholds) {
  EXPECT_NEAR(coherent_information(noise(1 / kE)), 0.0, kUlps);
  EXPECT_NEAR(coherent_information(noise(1 / (2 * kE))), 1.0, kUlps);
  EXPECT_NEAR(coherent_information(noise(1 / (8 * kE))), 3.0, 2 * kUlps);
  EXPECT_EQ(coherent_information(noise(1.0)), 0.0);
  EXPECT_EQ(coherent_information(noise(0.5)), 0.0);
  EXPECT_THROW(coherent_information(noise(0.0)), std::invalid_argument);
  EXPECT_THROW(coherent_information(noise(0.1, 0.0)), std::invalid_argument);
}

TEST(HwUpper, Examples) {
  EXPECT_EQ(hw_upper_bound(noise(1.0)), 0.0);
  EXPECT_EQ(hw_upper_bound(noise(0.25)), 2.0);
  EXPECT_EQ(hw_upper_bound(noise(3.0)), 0.0);
}

TEST(SpherePacking, Examples) {
  EXPECT_NEAR(sphere_packing_rate(noise(1 / (4 * kE))), 0.0, kUlps);
  EXPECT_NEAR(sphere_packing_rate(noise(1 / (8 * kE))), 1.0, kUlps);
}

TEST(Rates, OrderingOnGrid) {
  for (int i = 0; i <= 200; ++i) {
    const NoiseModel n = noise(std::pow(10.0, -6.0 + 6.0 * i / 200));
    const double ci = coherent_information(n);
    const double sp = sphere_packing_rate(n);
    EXPECT_LE(ci, hw_upper_bound(n));
    EXPECT_EQ(overlap_rate(n), ci);
    if (sp > 0.0) {
      EXPECT_NEAR(sp + 2.0, ci, 1e-12);
    }
    EXPECT_LE(best_integer_lambda(n).rate, ci);
    if (ci > 0.0) {
      EXPECT_GT(hw_upper_bound(n), ci);
    }
  }
}

TEST(Rates, ScaleInvariant) {
  for (double c : {0.5, 2.0, 8.0}) {
    for (double s : {1e-4, 0.01, 0.1}) {
      EXPECT_NEAR(coherent_information(noise(c * s, c)), coherent_information(noise(s)), 1e-13);
      EXPECT_NEAR(hw_upper_bound(noise(c * s, c)), hw_upper_bound(noise(s)), 1e-13);
      EXPECT_NEAR(sphere_packing_rate(noise(c * s, c)), sphere_packing_rate(noise(s)), 1e-13);
      EXPECT_EQ(best_integer_lambda(noise(c * s, c)).lambda, best_integer_lambda(noise(s)).lambda);
    }
  }
}

TEST(Rates, NonincreasingInSigma) {
  double last[4] = {1e300, 1e300, 1e300, 1e300};
  for (int i = 0; i <= 300; ++i) {
    const NoiseModel n = noise(std::pow(10.0, -5.0 + 5.5 * i / 300));
    const double v[4] = {coherent_information(n), hw_upper_bound(n), sphere_packing_rate(n),
                         best_integer_lambda(n).rate};
    for (int k = 0; k < 4; ++k) {
      EXPECT_LE(v[k], last[k]);
      last[k] = v[k];
    }
  }
}

TEST(IntegerLambda, Examples) {
  const IntegerLambda a = best_integer_lambda(noise(0.1));
  EXPECT_EQ(a.lambda, 3u);
  EXPECT_DOUBLE_EQ(a.rate, std::log2(3.0));
  const IntegerLambda strict = best_integer_lambda(noise(1 / (2 * kE)));
  EXPECT_EQ(strict.lambda, 1u);
  EXPECT_EQ(strict.rate, 0.0);
  EXPECT_EQ(best_integer_lambda(noise(1 / kE)).rate, 0.0);
  EXPECT_LE(best_integer_lambda(noise(1 / kE)).lambda, 1u);
  EXPECT_EQ(best_integer_lambda(noise(2.0)).rate, 0.0);
  EXPECT_EQ(best_integer_lambda(noise(1 / (5 * kE))).lambda, 4u);
}

TEST(ErrorBound, Examples) {
  const double at_threshold = error_probability_bound(0.0, noise(1 / kE - 0.01), 0.01, 1);
  EXPECT_NEAR(at_threshold, 1.0, 1e-15);
  EXPECT_NEAR(error_probability_bound(0.0, noise(1 / kE - 0.01), 0.01, 500), 1.0, 1e-12);
  const NoiseModel n = noise(0.02);
  const double b10 = error_probability_bound(2.0, n, 1e-3, 10);
  EXPECT_NEAR(error_probability_bound(2.0, n, 1e-3, 20), b10 * b10, 1e-14 * b10);
  const double rate = coherent_information(noise(0.02 + 1e-3)) - 0.1;
  EXPECT_LT(error_probability_bound(rate, n, 1e-3, 1000), 1e-20);
  EXPECT_THROW(error_probability_bound(1.0, n, -1.0, 4), std::invalid_argument);
}

TEST(ErrorBound, VanishesBelowOverlapRate) {
  for (double s : {0.001, 0.01, 0.1}) {
    const double eps = 1e-4;
    const double limit = coherent_information(noise(s + eps));
    double prev = 2.0;
    for (unsigned long modes : {10ul, 100ul, 1000ul, 10000ul}) {
      const double b = error_probability_bound(0.95 * limit, noise(s), eps, modes);
      EXPECT_LT(b, prev);
      prev = b;
    }
    EXPECT_LT(prev, 1e-6);
  }
}

TEST(SphereVolume, Examples) {
  EXPECT_NEAR(sphere_volume(2), std::numbers::pi, 1e-14);
  EXPECT_NEAR(sphere_volume(3), 4 * std::numbers::pi / 3, 1e-14);
  EXPECT_NEAR(sphere_volume(8), std::pow(std::numbers::pi, 4) / 24, 1e-13);
  EXPECT_THROW(sphere_volume(0), std::invalid_argument);
}

TEST(SphereVolume, StirlingBound) {
  for (unsigned n = 1; n <= 200; ++n) {
    EXPECT_LE(sphere_volume(n), std::pow(2 * std::numbers::pi * kE / n, n / 2.0)) << n;
  }
}

TEST(Minkowski, RadiusBound) {
  EXPECT_NEAR(minkowski_radius_sq(2), 0.02927, 1e-5);
  EXPECT_DOUBLE_EQ(minkowski_radius_sq(2), 1 / (4 * std::numbers::pi * kE));
  for (unsigned n = 1; n <= 200; ++n) {
    EXPECT_NEAR(minkowski_radius_sq(2 * n) / minkowski_radius_sq(n), 2.0, 1e-15);
    const double packing = 0.25 * std::pow(2.0 / sphere_volume(n), 2.0 / n);
    EXPECT_GE(packing, minkowski_radius_sq(n)) << n;
  }
}

TEST(RatePoint, Dispatch) {
  const NoiseModel n = noise(0.01);
  EXPECT_EQ(rate_point(n, RateKind::kHwUpper).value_qubits, hw_upper_bound(n));
  EXPECT_EQ(rate_point(n, RateKind::kIntegerLambda).value_qubits, best_integer_lambda(n).rate);
  EXPECT_EQ(rate_point(n, RateKind::kCoherentInfo).sigma_sq, 0.01);
  EXPECT_EQ(to_string(RateKind::kSpherePacking), "sphere_packing");
}

}  // namespace
}  // namespace gkplat
