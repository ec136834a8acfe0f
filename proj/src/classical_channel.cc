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

#include "gkplat/classical_channel.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gkplat/concatenated.h"

namespace gkplat {

void validate(const ClassicalParams& params) {
  if (!(params.power > 0.0) || !std::isfinite(params.power) || !(params.sigma_sq > 0.0) ||
      !std::isfinite(params.sigma_sq)) {
    throw std::invalid_argument("power and sigma_sq must be finite and positive");
  }
}

double shannon_capacity(const ClassicalParams& params) {
  validate(params);
  return 0.5 * std::log2(1.0 + params.snr());
}

double minkowski_lattice_rate(const ClassicalParams& params) {
  return std::max(0.0, shannon_capacity(params) - 1.0);
}

double debuda_rate(const ClassicalParams& params) {
  validate(params);
  return std::max(0.0, 0.5 * std::log2(params.snr()));
}

double classical_half_spacing(unsigned long d, double power) {
  return std::sqrt(3.0 * power) / static_cast<double>(d);
}

double classical_dit_error_prob(unsigned long d, const ClassicalParams& params) {
  validate(params);
  if (d < 2) {
    throw std::invalid_argument("classical_dit_error_prob: d must be at least 2");
  }
  const double dd = static_cast<double>(d);
  return std::erfc(std::sqrt(3.0 * params.snr() / (2.0 * dd * dd)));
}

double classical_concat_rate(unsigned long d, double p) {
  if (d < 2) {
    throw std::invalid_argument("classical_concat_rate: d must be at least 2");
  }
  const double log_d_dm1 = std::log(static_cast<double>(d - 1)) / std::log(static_cast<double>(d));
  const double per_dit = 1.0 - entropy_base_d(p, d) - p * log_d_dm1;
  return std::log2(static_cast<double>(d)) * std::max(0.0, per_dit);
}

unsigned long default_dit_scan_limit(const ClassicalParams& params) {
  validate(params);
  const double limit = std::ceil(8.0 * std::sqrt(params.snr()));
  if (limit >= 1e12) {
    throw std::invalid_argument("SNR too large for an exhaustive dit scan");
  }
  return std::max(2UL, static_cast<unsigned long>(limit));
}

ClassicalDesign optimize_classical_d(const ClassicalParams& params, unsigned long d_max) {
  if (d_max == 0) {
    d_max = default_dit_scan_limit(params);
  }
  if (d_max < 2) {
    throw std::invalid_argument("optimize_classical_d: d_max must be at least 2");
  }
  ClassicalDesign best;
  best.rate = -1.0;
  for (unsigned long d = 2; d <= d_max; ++d) {
    const double p = classical_dit_error_prob(d, params);
    const double rate = classical_concat_rate(d, p);
    if (rate > best.rate) {
      best = {d, p, rate};
    }
  }
  return best;
}

}  // namespace gkplat
