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

#ifndef GKPLAT_LATTICE_DECODER_H
#define GKPLAT_LATTICE_DECODER_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gkplat/symplectic_lattice.h"

namespace gkplat {

inline constexpr std::size_t kMaxDecoderDimension = 12;
inline constexpr double kTieTolerance = 1e-12;

struct DecodeResult {
  std::vector<double> closest;
  std::vector<std::int64_t> coeffs;
  double dist_sq = 0.0;
  /// Another lattice point lies within kTieTolerance * (1 + dist_sq) of dist_sq.
  bool tie = false;
};

struct ShortestVector {
  std::vector<double> vector;
  std::vector<std::int64_t> coeffs;
  double length_sq = 0.0;
};

/// Exact closest-point search by Schnorr-Euchner enumeration over the
/// Gram-Schmidt decomposition of the generator. Construct once per lattice and
/// reuse; decode() is const and safe to call concurrently.
class LatticeDecoder {
 public:
  /// Throws std::invalid_argument when dim() > kMaxDecoderDimension.
  explicit LatticeDecoder(const Lattice& lat);

  std::size_t dim() const noexcept { return n_; }

  DecodeResult decode(std::span<const double> x) const;
  bool in_voronoi_cell(std::span<const double> x) const;
  ShortestVector shortest_vector() const;

  /// Row-major generator rows; lattice points are coeffs * generator.
  const std::vector<double>& generator() const noexcept { return generator_; }
  std::vector<double> point(std::span<const std::int64_t> coeffs) const;

 private:
  struct Search;
  void enumerate(Search& s, std::size_t level, double partial) const;

  std::size_t n_;
  std::vector<double> generator_;
  // Upper-triangular R with generator^T = Q R, plus Q^T stored row-major.
  std::vector<double> r_;
  std::vector<double> qt_;
};

DecodeResult closest_point(const Lattice& lat, std::span<const double> x);
bool in_voronoi_cell(const Lattice& lat, std::span<const double> x);
ShortestVector shortest_vector(const Lattice& lat);
double packing_radius(const Lattice& lat);

}  // namespace gkplat

#endif  // GKPLAT_LATTICE_DECODER_H
