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

#include "gkplat/concatenated.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gkplat {

namespace {

// Bound on the number of error patterns visited while filling a decoding table.
constexpr std::uint64_t kTableEnumerationBudget = 20'000'000;

void require_positive_variance(const NoiseModel& noise) {
  validate(noise);
  if (noise.sigma_sq <= 0.0) {
    throw std::invalid_argument("sigma_sq must be positive");
  }
}

int mod(long long v, unsigned long d) {
  const long long r = v % static_cast<long long>(d);
  return static_cast<int>(r < 0 ? r + static_cast<long long>(d) : r);
}

// Nonzero exponents ordered by circular distance from 0: 1, d-1, 2, d-2, ...
std::vector<int> exponents_by_size(unsigned long d) {
  std::vector<int> out;
  for (unsigned long k = 1; 2 * k <= d; ++k) {
    out.push_back(static_cast<int>(k));
    if (d - k != k) {
      out.push_back(static_cast<int>(d - k));
    }
  }
  return out;
}

std::vector<int> apply_checks(const CssCode::Matrix& checks, const std::vector<int>& v, unsigned long d) {
  std::vector<int> s(checks.size(), 0);
  for (std::size_t r = 0; r < checks.size(); ++r) {
    long long acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      acc += static_cast<long long>(checks[r][i]) * v[i];
    }
    s[r] = mod(acc, d);
  }
  return s;
}

bool is_zero(const std::vector<int>& v) {
  for (int x : v) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool commutes_with_all(const CssCode::Matrix& logicals, const std::vector<int>& v, unsigned long d) {
  return is_zero(apply_checks(logicals, v, d));
}

}  // namespace

double qudit_grid_spacing(unsigned long d, double hbar) {
  return std::sqrt(2.0 * std::numbers::pi * hbar / static_cast<double>(d));
}

double gkp_qudit_error_prob(unsigned long d, const NoiseModel& noise) {
  require_positive_variance(noise);
  if (d < 1) {
    throw std::invalid_argument("gkp_qudit_error_prob: d must be positive");
  }
  return std::erfc(std::sqrt(std::numbers::pi / (4.0 * static_cast<double>(d) * noise.reduced_variance())));
}

QuditPauliError gkp_qudit_channel_sample(unsigned long d, const NoiseModel& noise, PhiloxStream& rng) {
  validate(noise);
  if (d < 2) {
    throw std::invalid_argument("gkp_qudit_channel_sample: d must be at least 2");
  }
  const double sd = std::sqrt(noise.sigma_sq);
  const double spacing = qudit_grid_spacing(d, noise.hbar);
  const double dq = sd * standard_normal(rng);
  const double dp = sd * standard_normal(rng);
  return {mod(std::llround(dq / spacing), d), mod(std::llround(dp / spacing), d)};
}

double entropy_base_d(double p, unsigned long d) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("entropy_base_d: p must lie in [0, 1]");
  }
  if (d < 2) {
    throw std::invalid_argument("entropy_base_d: d must be at least 2");
  }
  if (p == 0.0 || p == 1.0) {
    return 0.0;
  }
  return (-p * std::log(p) - (1.0 - p) * std::log1p(-p)) / std::log(static_cast<double>(d));
}

double css_rate_qudits(unsigned long d, double p_x, double p_z) {
  if (d < 2) {
    throw std::invalid_argument("css_rate_qudits: d must be at least 2");
  }
  const double log_d_dm1 = std::log(static_cast<double>(d - 1)) / std::log(static_cast<double>(d));
  const auto one_side = [&](double p) { return 1.0 - 2.0 * entropy_base_d(p, d) - 2.0 * p * log_d_dm1; };
  return std::max(0.0, std::min(one_side(p_x), one_side(p_z)));
}

double concat_rate_qubits(unsigned long d, const NoiseModel& noise) {
  const double p = gkp_qudit_error_prob(d, noise);
  return std::log2(static_cast<double>(d)) * css_rate_qudits(d, p, p);
}

unsigned long default_qudit_scan_limit(const NoiseModel& noise) {
  require_positive_variance(noise);
  const double limit = std::ceil(8.0 / noise.reduced_variance());
  if (limit >= 1e12) {
    throw std::invalid_argument("sigma_sq / hbar too small for an exhaustive qudit scan");
  }
  return std::max(2UL, static_cast<unsigned long>(limit));
}

ConcatDesign optimize_qudit_dimension(const NoiseModel& noise, unsigned long d_max) {
  require_positive_variance(noise);
  if (d_max == 0) {
    d_max = default_qudit_scan_limit(noise);
  }
  if (d_max < 2) {
    throw std::invalid_argument("optimize_qudit_dimension: d_max must be at least 2");
  }
  ConcatDesign best;
  best.sigma_sq = noise.sigma_sq;
  best.hbar = noise.hbar;
  best.rate_qubits = -1.0;
  for (unsigned long d = 2; d <= d_max; ++d) {
    const double rate = concat_rate_qubits(d, noise);
    if (rate > best.rate_qubits) {
      best.rate_qubits = rate;
      best.d_opt = d;
    }
  }
  best.p = gkp_qudit_error_prob(best.d_opt, noise);
  best.c_sq = std::exp2(best.rate_qubits) * noise.reduced_variance();
  return best;
}

MinDistanceComparison min_distance_comparison(double rate, unsigned long modes, const NoiseModel& noise) {
  validate(noise);
  if (!(rate > 0.0) || modes == 0) {
    throw std::invalid_argument("min_distance_comparison: need rate > 0 and modes > 0");
  }
  MinDistanceComparison out;
  const double shrink = std::exp2(-rate);
  out.l_sq_concat = 2.0 * std::numbers::pi * noise.hbar * shrink;
  out.l_sq_packing = 8.0 * static_cast<double>(modes) * noise.hbar / std::numbers::e * shrink;
  out.ratio = std::sqrt(out.l_sq_packing / out.l_sq_concat);
  return out;
}

CssCode::CssCode(unsigned long d, std::size_t block_length, Matrix hz, Matrix hx, Matrix logical_x,
                 Matrix logical_z)
    : d_(d),
      n_(block_length),
      hz_(std::move(hz)),
      hx_(std::move(hx)),
      logical_x_(std::move(logical_x)),
      logical_z_(std::move(logical_z)) {
  if (d_ < 2) {
    throw std::invalid_argument("CssCode: d must be at least 2");
  }
  if (n_ == 0) {
    throw std::invalid_argument("CssCode: block length must be positive");
  }
  for (Matrix* m : {&hz_, &hx_, &logical_x_, &logical_z_}) {
    for (auto& row : *m) {
      if (row.size() != n_) {
        throw std::invalid_argument("CssCode: row length does not match block length");
      }
      for (int& v : row) {
        v = mod(v, d_);
      }
    }
  }
  if (logical_x_.size() != logical_z_.size()) {
    throw std::invalid_argument("CssCode: logical X and Z counts differ");
  }
  for (const auto& x_row : hx_) {
    if (!is_zero(apply_checks(hz_, x_row, d_))) {
      throw std::invalid_argument("CssCode: hx * hz^T is not zero mod d");
    }
  }
  for (const auto& lx : logical_x_) {
    if (!is_zero(apply_checks(hz_, lx, d_))) {
      throw std::invalid_argument("CssCode: logical X does not commute with Z checks");
    }
  }
  for (const auto& lz : logical_z_) {
    if (!is_zero(apply_checks(hx_, lz, d_))) {
      throw std::invalid_argument("CssCode: logical Z does not commute with X checks");
    }
  }
  const double key_bits = static_cast<double>(std::max(hz_.size(), hx_.size())) * std::log2(static_cast<double>(d_));
  if (key_bits > 63.0) {
    throw std::invalid_argument("CssCode: syndrome space too large");
  }
  x_table_ = build_table(hz_);
  z_table_ = build_table(hx_);
}

std::uint64_t CssCode::syndrome_key(const std::vector<int>& syndrome) const {
  std::uint64_t key = 0;
  for (int s : syndrome) {
    key = key * d_ + static_cast<std::uint64_t>(s);
  }
  return key;
}

CssCode::Table CssCode::build_table(const Matrix& checks) const {
  Table table;
  const std::size_t rows = checks.size();
  double capacity = 1.0;
  for (std::size_t r = 0; r < rows; ++r) {
    capacity *= static_cast<double>(d_);
  }
  const std::vector<int> values = exponents_by_size(d_);
  std::vector<int> error(n_, 0);
  std::vector<int> syndrome(rows, 0);
  std::uint64_t visited = 0;

  // Depth-first over positions >= start with `remaining` more nonzero entries.
  auto place = [&](auto&& self, std::size_t start, std::size_t remaining) -> void {
    if (visited >= kTableEnumerationBudget || static_cast<double>(table.size()) >= capacity) {
      return;
    }
    if (remaining == 0) {
      ++visited;
      table.try_emplace(syndrome_key(syndrome), error);
      return;
    }
    for (std::size_t i = start; i + remaining <= n_; ++i) {
      for (int v : values) {
        for (std::size_t r = 0; r < rows; ++r) {
          syndrome[r] = mod(syndrome[r] + static_cast<long long>(checks[r][i]) * v, d_);
        }
        error[i] = v;
        self(self, i + 1, remaining - 1);
        error[i] = 0;
        for (std::size_t r = 0; r < rows; ++r) {
          syndrome[r] = mod(syndrome[r] - static_cast<long long>(checks[r][i]) * v, d_);
        }
      }
    }
  };
  for (std::size_t w = 0; w <= n_; ++w) {
    place(place, 0, w);
    if (visited >= kTableEnumerationBudget || static_cast<double>(table.size()) >= capacity) {
      break;
    }
  }
  return table;
}

std::vector<int> CssCode::x_syndrome(const std::vector<int>& a) const { return apply_checks(hz_, a, d_); }

std::vector<int> CssCode::z_syndrome(const std::vector<int>& b) const { return apply_checks(hx_, b, d_); }

const std::vector<int>* CssCode::x_correction(const std::vector<int>& syndrome) const {
  auto it = x_table_.find(syndrome_key(syndrome));
  return it == x_table_.end() ? nullptr : &it->second;
}

const std::vector<int>* CssCode::z_correction(const std::vector<int>& syndrome) const {
  auto it = z_table_.find(syndrome_key(syndrome));
  return it == z_table_.end() ? nullptr : &it->second;
}

bool CssCode::x_residual_is_trivial(const std::vector<int>& a) const {
  return is_zero(x_syndrome(a)) && commutes_with_all(logical_z_, a, d_);
}

bool CssCode::z_residual_is_trivial(const std::vector<int>& b) const {
  return is_zero(z_syndrome(b)) && commutes_with_all(logical_x_, b, d_);
}

CssCode shor9_code(unsigned long d) {
  CssCode::Matrix hz;
  for (int block = 0; block < 3; ++block) {
    for (int i = 0; i < 2; ++i) {
      std::vector<int> row(9, 0);
      row[3 * block + i] = 1;
      row[3 * block + i + 1] = -1;
      hz.push_back(std::move(row));
    }
  }
  CssCode::Matrix hx;
  for (int block = 0; block < 2; ++block) {
    std::vector<int> row(9, 0);
    for (int i = 0; i < 3; ++i) {
      row[3 * block + i] = 1;
      row[3 * (block + 1) + i] = -1;
    }
    hx.push_back(std::move(row));
  }
  CssCode::Matrix lx{{1, 1, 1, 0, 0, 0, 0, 0, 0}};
  CssCode::Matrix lz{{1, 0, 0, 1, 0, 0, 1, 0, 0}};
  return CssCode(d, 9, std::move(hz), std::move(hx), std::move(lx), std::move(lz));
}

CssCode trivial_code(unsigned long d) { return CssCode(d, 1, {}, {}, {{1}}, {{1}}); }

CssDecodeOutcome css_decode(const CssCode& code, const std::vector<QuditPauliError>& error) {
  const std::size_t n = code.block_length();
  if (error.size() != n) {
    throw std::invalid_argument("css_decode: error length " + std::to_string(error.size()) +
                                " does not match block length " + std::to_string(n));
  }
  const unsigned long d = code.d();
  std::vector<int> a(n);
  std::vector<int> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = mod(error[i].a, d);
    b[i] = mod(error[i].b, d);
  }
  CssDecodeOutcome out;
  out.correction.assign(n, QuditPauliError{});
  const std::vector<int>* corr_a = code.x_correction(code.x_syndrome(a));
  const std::vector<int>* corr_b = code.z_correction(code.z_syndrome(b));
  if (corr_a == nullptr || corr_b == nullptr) {
    out.logical_failure = true;
    return out;
  }
  std::vector<int> res_a(n);
  std::vector<int> res_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    // The table stores the error that produced the syndrome; undo it.
    out.correction[i] = {mod(-(*corr_a)[i], d), mod(-(*corr_b)[i], d)};
    res_a[i] = mod(a[i] + out.correction[i].a, d);
    res_b[i] = mod(b[i] + out.correction[i].b, d);
  }
  out.logical_failure = !code.x_residual_is_trivial(res_a) || !code.z_residual_is_trivial(res_b);
  return out;
}

ErrorEstimate simulate_concatenated(const CssCode& code, const NoiseModel& noise, std::uint64_t trials,
                                    std::uint64_t seed, std::size_t workers) {
  validate(noise);
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  const std::size_t n = code.block_length();
  const std::uint64_t failures = count_failures(trials, seed, workers, [&](PhiloxStream& rng) {
    std::vector<QuditPauliError> error(n);
    for (auto& e : error) {
      e = gkp_qudit_channel_sample(code.d(), noise, rng);
    }
    return css_decode(code, error).logical_failure;
  });
  return wilson_estimate(failures, trials, seed);
}

}  // namespace gkplat
