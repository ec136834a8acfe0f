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

#ifndef GKPLAT_CLASSICAL_CHANNEL_H
#define GKPLAT_CLASSICAL_CHANNEL_H

namespace gkplat {

/// Classical Gaussian channel with average power constraint. Rates are in bits per
/// real variable and depend only on power / sigma_sq.
struct ClassicalParams {
  double power = 1.0;
  double sigma_sq = 1.0;

  double snr() const { return power / sigma_sq; }
};

/// Throws std::invalid_argument unless both fields are positive and finite.
void validate(const ClassicalParams& params);

double shannon_capacity(const ClassicalParams& params);
/// Capacity minus one bit, clamped at 0.
double minkowski_lattice_rate(const ClassicalParams& params);
/// (1/2) log2(P / sigma^2), clamped at 0.
double debuda_rate(const ClassicalParams& params);

/// erfc(sqrt(3P / (2 d^2 sigma^2))): error bound for d evenly spaced levels.
double classical_dit_error_prob(unsigned long d, const ClassicalParams& params);
/// Half the level spacing, sqrt(3P) / d.
double classical_half_spacing(unsigned long d, double power);

/// log2(d) (1 - H_d(p) - p log_d(d - 1)), clamped at 0.
double classical_concat_rate(unsigned long d, double p);

struct ClassicalDesign {
  unsigned long d_opt = 0;
  double p = 0.0;
  double rate = 0.0;
};

/// ceil(8 sqrt(P / sigma^2)), at least 2.
unsigned long default_dit_scan_limit(const ClassicalParams& params);

/// Exhaustive scan of d in [2, d_max]; ties to the smallest d. d_max = 0 selects the default.
ClassicalDesign optimize_classical_d(const ClassicalParams& params, unsigned long d_max = 0);

}  // namespace gkplat

#endif  // GKPLAT_CLASSICAL_CHANNEL_H
