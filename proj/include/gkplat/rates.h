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

#ifndef GKPLAT_RATES_H
#define GKPLAT_RATES_H

#include <string>

#include "gkplat/channel_sim.h"

namespace gkplat {

// Quantum rates in qubits per oscillator. Every formula is clamped at zero where its
// log2 argument is <= 1, and depends on (sigma_sq, hbar) only through sigma_sq / hbar.

enum class RateKind { kCoherentInfo, kHwUpper, kSpherePacking, kOverlapRate, kIntegerLambda };

struct RatePoint {
  double sigma_sq = 0.0;
  double value_qubits = 0.0;
  RateKind kind = RateKind::kCoherentInfo;
};

std::string to_string(RateKind kind);

/// Gaussian-input optimum of the coherent information, log2(hbar / (e sigma^2)).
double coherent_information(const NoiseModel& noise);
/// log2(hbar / sigma^2).
double hw_upper_bound(const NoiseModel& noise);
/// Non-overlapping sphere packing rate, log2(hbar / (4 e sigma^2)).
double sphere_packing_rate(const NoiseModel& noise);
/// Rate achieved with overlapping decoding spheres; equal to coherent_information.
double overlap_rate(const NoiseModel& noise);

RatePoint rate_point(const NoiseModel& noise, RateKind kind);

struct IntegerLambda {
  unsigned long lambda = 0;
  double rate = 0.0;
};

/// Largest integer lambda with lambda < hbar / (e sigma^2). The bound is taken with a
/// relative allowance of 1e-12, so a bound that is an integer up to rounding of the
/// inputs still excludes that integer.
IntegerLambda best_integer_lambda(const NoiseModel& noise);

/// ((e (sigma^2 + eps) / hbar) * 2^rate)^modes. Not clamped; meaningful only below 1.
double error_probability_bound(double rate, const NoiseModel& noise, double eps, unsigned long modes);

/// Volume of the unit ball in n dimensions, via lgamma.
double sphere_volume(unsigned n);
/// n / (8 pi e).
double minkowski_radius_sq(unsigned n);

}  // namespace gkplat

#endif  // GKPLAT_RATES_H
