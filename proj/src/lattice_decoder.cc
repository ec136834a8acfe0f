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

#include "gkplat/lattice_decoder.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gkplat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Slack on the pruning radius so that rounding in the partial sums never drops an
// exactly tied candidate.
double with_slack(double limit) { return limit + 1e-15 * (1.0 + limit); }

}  // namespace

struct LatticeDecoder::Search {
  std::vector<double> y;
  std::vector<std::int64_t> u;
  std::vector<std::int64_t> best_u;
  double best_d = kInf;
  double second_d = kInf;
  bool exclude_zero = false;

  double limit() const {
    if (exclude_zero) {
      return best_d;
    }
    if (best_d == kInf) {
      return kInf;
    }
    return std::min(second_d, best_d + kTieTolerance * (1.0 + best_d));
  }

  void leaf(double d) {
    if (exclude_zero) {
      if (std::all_of(u.begin(), u.end(), [](std::int64_t v) { return v == 0; })) {
        return;
      }
      if (d < best_d || best_u.empty()) {
        best_d = d;
        best_u = u;
      }
      return;
    }
    if (d < best_d) {
      second_d = best_d;
      best_d = d;
      best_u = u;
    } else {
      second_d = std::min(second_d, d);
    }
  }
};

LatticeDecoder::LatticeDecoder(const Lattice& lat)
    : n_(lat.dim()), generator_(lat.generator()), r_(n_ * n_, 0.0), qt_(n_ * n_, 0.0) {
  if (n_ > kMaxDecoderDimension) {
    throw std::invalid_argument("decoder: dimension " + std::to_string(n_) + " above supported bound " +
                                std::to_string(kMaxDecoderDimension));
  }
  // Modified Gram-Schmidt on the columns of generator^T (the generator rows).
  for (std::size_t j = 0; j < n_; ++j) {
    std::vector<double> v(generator_.begin() + j * n_, generator_.begin() + (j + 1) * n_);
    for (std::size_t i = 0; i < j; ++i) {
      double dot = 0.0;
      for (std::size_t c = 0; c < n_; ++c) {
        dot += qt_[i * n_ + c] * v[c];
      }
      r_[i * n_ + j] = dot;
      for (std::size_t c = 0; c < n_; ++c) {
        v[c] -= dot * qt_[i * n_ + c];
      }
    }
    double norm = 0.0;
    for (double c : v) {
      norm += c * c;
    }
    norm = std::sqrt(norm);
    r_[j * n_ + j] = norm;
    for (std::size_t c = 0; c < n_; ++c) {
      qt_[j * n_ + c] = v[c] / norm;
    }
  }
}

void LatticeDecoder::enumerate(Search& s, std::size_t level, double partial) const {
  double acc = s.y[level];
  for (std::size_t j = level + 1; j < n_; ++j) {
    acc -= r_[level * n_ + j] * static_cast<double>(s.u[j]);
  }
  const double rii = r_[level * n_ + level];
  const double center = acc / rii;
  const auto cost = [&](std::int64_t k) {
    const double t = rii * (static_cast<double>(k) - center);
    return partial + t * t;
  };
  const auto visit = [&](std::int64_t k, double d) {
    s.u[level] = k;
    if (level == 0) {
      s.leaf(d);
    } else {
      enumerate(s, level - 1, d);
    }
  };

  const auto k0 = static_cast<std::int64_t>(std::nearbyint(center));
  const double d0 = cost(k0);
  if (d0 > with_slack(s.limit())) {
    return;
  }
  visit(k0, d0);
  std::int64_t hi = k0;
  std::int64_t lo = k0;
  bool up_open = true;
  bool down_open = true;
  while (up_open || down_open) {
    bool go_up;
    if (up_open && down_open) {
      go_up = std::abs(static_cast<double>(hi + 1) - center) <= std::abs(static_cast<double>(lo - 1) - center);
    } else {
      go_up = up_open;
    }
    const std::int64_t k = go_up ? hi + 1 : lo - 1;
    const double d = cost(k);
    if (d > with_slack(s.limit())) {
      (go_up ? up_open : down_open) = false;
      continue;
    }
    visit(k, d);
    (go_up ? hi : lo) = k;
  }
  s.u[level] = 0;
}

std::vector<double> LatticeDecoder::point(std::span<const std::int64_t> coeffs) const {
  std::vector<double> p(n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    if (coeffs[r] == 0) {
      continue;
    }
    const double k = static_cast<double>(coeffs[r]);
    for (std::size_t c = 0; c < n_; ++c) {
      p[c] += k * generator_[r * n_ + c];
    }
  }
  return p;
}

DecodeResult LatticeDecoder::decode(std::span<const double> x) const {
  if (x.size() != n_) {
    throw std::invalid_argument("decode: point dimension mismatch");
  }
  Search s;
  s.y.assign(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) {
      acc += qt_[i * n_ + c] * x[c];
    }
    s.y[i] = acc;
  }
  s.u.assign(n_, 0);
  enumerate(s, n_ - 1, 0.0);

  DecodeResult out;
  out.coeffs = s.best_u;
  out.closest = point(out.coeffs);
  double d = 0.0;
  for (std::size_t c = 0; c < n_; ++c) {
    const double t = x[c] - out.closest[c];
    d += t * t;
  }
  out.dist_sq = d;
  out.tie = s.second_d - s.best_d <= kTieTolerance * (1.0 + s.best_d);
  return out;
}

bool LatticeDecoder::in_voronoi_cell(std::span<const double> x) const {
  const DecodeResult r = decode(x);
  return !r.tie && std::all_of(r.coeffs.begin(), r.coeffs.end(), [](std::int64_t v) { return v == 0; });
}

ShortestVector LatticeDecoder::shortest_vector() const {
  Search s;
  s.y.assign(n_, 0.0);
  s.u.assign(n_, 0);
  s.exclude_zero = true;
  std::size_t seed_row = 0;
  double seed = kInf;
  for (std::size_t r = 0; r < n_; ++r) {
    double norm = 0.0;
    for (std::size_t c = 0; c < n_; ++c) {
      norm += generator_[r * n_ + c] * generator_[r * n_ + c];
    }
    if (norm < seed) {
      seed = norm;
      seed_row = r;
    }
  }
  s.best_d = seed * (1.0 + 1e-9);
  enumerate(s, n_ - 1, 0.0);
  if (s.best_u.empty()) {
    s.best_u.assign(n_, 0);
    s.best_u[seed_row] = 1;
  }
  ShortestVector out;
  out.coeffs = s.best_u;
  out.vector = point(out.coeffs);
  double d = 0.0;
  for (double c : out.vector) {
    d += c * c;
  }
  out.length_sq = d;
  return out;
}

DecodeResult closest_point(const Lattice& lat, std::span<const double> x) { return LatticeDecoder(lat).decode(x); }

bool in_voronoi_cell(const Lattice& lat, std::span<const double> x) { return LatticeDecoder(lat).in_voronoi_cell(x); }

ShortestVector shortest_vector(const Lattice& lat) { return LatticeDecoder(lat).shortest_vector(); }

double packing_radius(const Lattice& lat) { return std::sqrt(shortest_vector(lat).length_sq) / 2.0; }

}  // namespace gkplat
