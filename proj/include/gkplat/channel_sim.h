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

#ifndef GKPLAT_CHANNEL_SIM_H
#define GKPLAT_CHANNEL_SIM_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gkplat/lattice_decoder.h"
#include "gkplat/philox.h"
#include "gkplat/symplectic_lattice.h"

namespace gkplat {

/// Gaussian displacement channel: q and p each shifted by normal(0, sigma_sq).
/// Physical displacement = sqrt(2 pi hbar) * lattice coordinate.
struct NoiseModel {
  double sigma_sq = 0.0;
  double hbar = 1.0;

  /// sigma_sq / (2 pi hbar), evaluated as (sigma_sq / hbar) / (2 pi) so that
  /// (sigma_sq, hbar) and (sigma_sq / hbar, 1) agree bit for bit.
  double lattice_variance() const;
  /// sigma_sq / hbar.
  double reduced_variance() const { return sigma_sq / hbar; }
};

/// Throws std::invalid_argument unless sigma_sq >= 0 and hbar > 0.
void validate(const NoiseModel& noise);

double to_physical_length(double lattice_length, double hbar);

enum class Criterion { kVoronoi, kCoset };
Criterion parse_criterion(const std::string& name);
std::string to_string(Criterion criterion);

struct TrialOutcome {
  enum class Kind { kSuccess, kLogicalError, kTie };
  Kind kind = Kind::kSuccess;
  /// For kLogicalError: class of the decoded normalizer point in L_perp / L, as the
  /// numerators of its fractional stabilizer coordinates over `coset_denominator`.
  std::vector<std::int64_t> coset;
  std::int64_t coset_denominator = 1;

  bool success() const { return kind == Kind::kSuccess; }
};

struct ErrorEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
};

/// 95% Wilson score interval.
ErrorEstimate wilson_estimate(std::uint64_t failures, std::uint64_t trials, std::uint64_t seed);
double wilson_half_width(const ErrorEstimate& e);

/// n iid normal(0, lattice_variance) values.
std::vector<double> sample_displacement(const NoiseModel& noise, std::size_t n, PhiloxStream& rng);

/// Recovery for one code: decoders and the exact normalizer-to-stabilizer map are
/// built once.
class RecoveryEngine {
 public:
  explicit RecoveryEngine(LatticeCode code);

  const LatticeCode& code() const noexcept { return code_; }
  TrialOutcome outcome(std::span<const double> xi, Criterion criterion) const;

 private:
  LatticeCode code_;
  LatticeDecoder normalizer_decoder_;
  // normalizer_in_stabilizer scaled to integers over a common denominator.
  std::vector<std::int64_t> transition_num_;
  std::int64_t transition_den_ = 1;
};

TrialOutcome recovery_outcome(const LatticeCode& code, std::span<const double> xi, Criterion criterion);

/// Number of workers: GKPLAT_WORKERS if set and positive, else hardware concurrency.
std::size_t default_worker_count();

/// Runs `trials` independent Bernoulli trials split into contiguous chunks over
/// `workers` threads. Trial t draws from PhiloxStream(seed, t), so the failure
/// count depends only on (seed, trials).
std::uint64_t count_failures(std::uint64_t trials, std::uint64_t seed, std::size_t workers,
                             const std::function<bool(PhiloxStream&)>& trial_fails);

ErrorEstimate estimate_error_probability(const LatticeCode& code, const NoiseModel& noise, std::uint64_t trials,
                                         std::uint64_t seed, Criterion criterion, std::size_t workers = 0);

}  // namespace gkplat

#endif  // GKPLAT_CHANNEL_SIM_H
