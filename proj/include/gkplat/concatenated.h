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

#ifndef GKPLAT_CONCATENATED_H
#define GKPLAT_CONCATENATED_H

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gkplat/channel_sim.h"
#include "gkplat/philox.h"

namespace gkplat {

// ---- Inner code: one qudit per oscillator on a square grid -------------------

/// erfc(sqrt(pi hbar / (4 d sigma^2))): probability bound for an X (or Z) error on a
/// grid qudit of dimension d. Used with equality for design curves.
double gkp_qudit_error_prob(unsigned long d, const NoiseModel& noise);

/// Grid spacing sqrt(2 pi hbar / d) of the qudit normalizer.
double qudit_grid_spacing(unsigned long d, double hbar);

/// X^a Z^b on one qudit, exponents reduced mod d.
struct QuditPauliError {
  int a = 0;
  int b = 0;
  bool operator==(const QuditPauliError&) const = default;
};

/// Samples physical shifts (dq, dp) ~ normal(0, sigma_sq) and rounds each to the
/// nearest multiple of the grid spacing.
QuditPauliError gkp_qudit_channel_sample(unsigned long d, const NoiseModel& noise, PhiloxStream& rng);

// ---- Outer code rate formulas --------------------------------------------------

/// H_d(p) = -p log_d p - (1-p) log_d (1-p). Throws std::invalid_argument outside [0, 1].
double entropy_base_d(double p, unsigned long d);

/// min over X and Z of 1 - 2 H_d(p) - 2 p log_d(d - 1), clamped at 0 (qudits per qudit).
double css_rate_qudits(unsigned long d, double p_x, double p_z);

/// log2(d) * css_rate_qudits(d, p, p) with p from gkp_qudit_error_prob.
double concat_rate_qubits(unsigned long d, const NoiseModel& noise);

struct ConcatDesign {
  double sigma_sq = 0.0;
  double hbar = 1.0;
  unsigned long d_opt = 0;
  double p = 0.0;
  double rate_qubits = 0.0;
  /// 2^rate * sigma^2 / hbar.
  double c_sq = 0.0;
};

/// ceil(8 hbar / sigma^2), at least 2.
unsigned long default_qudit_scan_limit(const NoiseModel& noise);

/// Exhaustive scan of d in [2, d_max]; ties go to the smallest d. d_max = 0 selects
/// default_qudit_scan_limit.
ConcatDesign optimize_qudit_dimension(const NoiseModel& noise, unsigned long d_max = 0);

struct MinDistanceComparison {
  double l_sq_concat = 0.0;
  double l_sq_packing = 0.0;
  double ratio = 0.0;
};

/// Squared normalizer minimum distance of a concatenated code with d = 2^R versus an
/// efficient sphere packing of the same rate over N oscillators.
MinDistanceComparison min_distance_comparison(double rate, unsigned long modes, const NoiseModel& noise);

// ---- Explicit qudit CSS codes ----------------------------------------------------

/// CSS code over Z_d. Z-type checks (hz) detect X errors; X-type checks (hx) detect
/// Z errors. Logical operators are used to decide whether a zero-syndrome residual
/// acts trivially on the code space.
class CssCode {
 public:
  using Matrix = std::vector<std::vector<int>>;

  /// Throws std::invalid_argument if hx * hz^T != 0 mod d, shapes disagree, or d < 2.
  CssCode(unsigned long d, std::size_t block_length, Matrix hz, Matrix hx, Matrix logical_x, Matrix logical_z);

  unsigned long d() const noexcept { return d_; }
  std::size_t block_length() const noexcept { return n_; }
  std::size_t logical_qudits() const noexcept { return logical_x_.size(); }
  const Matrix& hz_checks() const noexcept { return hz_; }
  const Matrix& hx_checks() const noexcept { return hx_; }
  const Matrix& logical_x() const noexcept { return logical_x_; }
  const Matrix& logical_z() const noexcept { return logical_z_; }

  /// hz * a mod d, for X exponents a.
  std::vector<int> x_syndrome(const std::vector<int>& a) const;
  /// hx * b mod d, for Z exponents b.
  std::vector<int> z_syndrome(const std::vector<int>& b) const;

  /// Minimal-weight correction for a syndrome, or nullptr if none is tabulated.
  const std::vector<int>* x_correction(const std::vector<int>& syndrome) const;
  const std::vector<int>* z_correction(const std::vector<int>& syndrome) const;

  /// True iff the zero-syndrome X-part commutes with every Z logical.
  bool x_residual_is_trivial(const std::vector<int>& a) const;
  bool z_residual_is_trivial(const std::vector<int>& b) const;

  std::size_t x_table_size() const noexcept { return x_table_.size(); }
  std::size_t z_table_size() const noexcept { return z_table_.size(); }

 private:
  using Table = std::unordered_map<std::uint64_t, std::vector<int>>;
  std::uint64_t syndrome_key(const std::vector<int>& syndrome) const;
  Table build_table(const Matrix& checks) const;

  unsigned long d_;
  std::size_t n_;
  Matrix hz_;
  Matrix hx_;
  Matrix logical_x_;
  Matrix logical_z_;
  Table x_table_;
  Table z_table_;
};

/// Nine-qudit Shor code over Z_d: six neighbour-difference Z checks inside each
/// block of three, two block-sum-difference X checks. k = 1.
CssCode shor9_code(unsigned long d);

/// One qudit, no checks, k = 1: failure iff the qudit itself is hit.
CssCode trivial_code(unsigned long d);

struct CssDecodeOutcome {
  std::vector<QuditPauliError> correction;
  bool logical_failure = false;
};

/// Throws std::invalid_argument if error.size() != block length.
CssDecodeOutcome css_decode(const CssCode& code, const std::vector<QuditPauliError>& error);

ErrorEstimate simulate_concatenated(const CssCode& code, const NoiseModel& noise, std::uint64_t trials,
                                    std::uint64_t seed, std::size_t workers = 0);

}  // namespace gkplat

#endif  // GKPLAT_CONCATENATED_H
