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

#include "gkplat/channel_sim.h"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace gkplat {

namespace {

constexpr double kWilsonZ = 1.959963984540054;

std::int64_t to_int64(const mpz_class& v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("value does not fit in 64 bits");
  }
  return v.get_si();
}

}  // namespace

double NoiseModel::lattice_variance() const { return reduced_variance() / (2.0 * std::numbers::pi); }

void validate(const NoiseModel& noise) {
  if (!(noise.sigma_sq >= 0.0) || !std::isfinite(noise.sigma_sq)) {
    throw std::invalid_argument("sigma_sq must be a finite nonnegative number");
  }
  if (!(noise.hbar > 0.0) || !std::isfinite(noise.hbar)) {
    throw std::invalid_argument("hbar must be a finite positive number");
  }
}

double to_physical_length(double lattice_length, double hbar) {
  return std::sqrt(2.0 * std::numbers::pi * hbar) * lattice_length;
}

Criterion parse_criterion(const std::string& name) {
  if (name == "voronoi") {
    return Criterion::kVoronoi;
  }
  if (name == "coset") {
    return Criterion::kCoset;
  }
  throw std::invalid_argument("unknown criterion '" + name + "' (expected voronoi or coset)");
}

std::string to_string(Criterion criterion) { return criterion == Criterion::kVoronoi ? "voronoi" : "coset"; }

ErrorEstimate wilson_estimate(std::uint64_t failures, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw std::invalid_argument("wilson_estimate: trials must be positive");
  }
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(failures) / n;
  const double z2 = kWilsonZ * kWilsonZ;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = kWilsonZ * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  ErrorEstimate e;
  e.p_hat = p;
  e.ci_low = std::max(0.0, std::min(p, center - half));
  e.ci_high = std::min(1.0, std::max(p, center + half));
  e.trials = trials;
  e.failures = failures;
  e.seed = seed;
  return e;
}

double wilson_half_width(const ErrorEstimate& e) { return 0.5 * (e.ci_high - e.ci_low); }

std::vector<double> sample_displacement(const NoiseModel& noise, std::size_t n, PhiloxStream& rng) {
  const double sd = std::sqrt(noise.lattice_variance());
  std::vector<double> xi(n);
  for (double& v : xi) {
    v = sd * standard_normal(rng);
  }
  return xi;
}

RecoveryEngine::RecoveryEngine(LatticeCode code)
    : code_(std::move(code)), normalizer_decoder_(code_.normalizer) {
  const RationalMatrix& t = code_.normalizer_in_stabilizer;
  mpz_class den = 1;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t(r, c).get_den_mpz_t());
    }
  }
  transition_den_ = to_int64(den);
  transition_num_.resize(t.rows() * t.cols());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    for (std::size_t c = 0; c < t.cols(); ++c) {
      mpq_class scaled = t(r, c) * den;
      transition_num_[r * t.cols() + c] = to_int64(scaled.get_num());
    }
  }
}

TrialOutcome RecoveryEngine::outcome(std::span<const double> xi, Criterion criterion) const {
  const DecodeResult decoded = normalizer_decoder_.decode(xi);
  const std::size_t n = decoded.coeffs.size();
  TrialOutcome out;
  bool origin = true;
  for (auto c : decoded.coeffs) {
    origin = origin && c == 0;
  }
  if (decoded.tie) {
    out.kind = TrialOutcome::Kind::kTie;
    return out;
  }
  if (criterion == Criterion::kVoronoi && origin) {
    return out;
  }

  // Stabilizer-basis coordinates of the decoded point, times transition_den_.
  std::vector<std::int64_t> residue(n, 0);
  bool in_stabilizer = true;
  for (std::size_t c = 0; c < n; ++c) {
    __int128 acc = 0;
    for (std::size_t r = 0; r < n; ++r) {
      acc += static_cast<__int128>(decoded.coeffs[r]) * transition_num_[r * n + c];
    }
    auto rem = static_cast<std::int64_t>(acc % transition_den_);
    if (rem < 0) {
      rem += transition_den_;
    }
    residue[c] = rem;
    in_stabilizer = in_stabilizer && rem == 0;
  }
  if (criterion == Criterion::kCoset && in_stabilizer) {
    return out;
  }
  out.kind = TrialOutcome::Kind::kLogicalError;
  out.coset = std::move(residue);
  out.coset_denominator = transition_den_;
  return out;
}

TrialOutcome recovery_outcome(const LatticeCode& code, std::span<const double> xi, Criterion criterion) {
  return RecoveryEngine(code).outcome(xi, criterion);
}

std::size_t default_worker_count() {
  if (const char* env = std::getenv("GKPLAT_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return static_cast<std::size_t>(v);
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::uint64_t count_failures(std::uint64_t trials, std::uint64_t seed, std::size_t workers,
                             const std::function<bool(PhiloxStream&)>& trial_fails) {
  if (workers == 0) {
    workers = default_worker_count();
  }
  workers = static_cast<std::size_t>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(trials, 1)));
  std::vector<std::uint64_t> counts(workers, 0);
  auto run_chunk = [&](std::size_t w) {
    const std::uint64_t begin = trials * w / workers;
    const std::uint64_t end = trials * (w + 1) / workers;
    std::uint64_t failures = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      PhiloxStream rng(seed, t);
      failures += trial_fails(rng) ? 1 : 0;
    }
    counts[w] = failures;
  };
  if (workers == 1) {
    run_chunk(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run_chunk, w);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  std::uint64_t total = 0;
  for (auto c : counts) {
    total += c;
  }
  return total;
}

ErrorEstimate estimate_error_probability(const LatticeCode& code, const NoiseModel& noise, std::uint64_t trials,
                                         std::uint64_t seed, Criterion criterion, std::size_t workers) {
  validate(noise);
  if (trials == 0) {
    throw std::invalid_argument("trials must be at least 1");
  }
  const RecoveryEngine engine(code);
  const std::size_t n = code.stabilizer.dim();
  const std::uint64_t failures = count_failures(trials, seed, workers, [&](PhiloxStream& rng) {
    const std::vector<double> xi = sample_displacement(noise, n, rng);
    return !engine.outcome(xi, criterion).success();
  });
  return wilson_estimate(failures, trials, seed);
}

}  // namespace gkplat
