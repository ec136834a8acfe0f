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

#ifndef GKPLAT_SYMPLECTIC_LATTICE_H
#define GKPLAT_SYMPLECTIC_LATTICE_H

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "gkplat/rational_matrix.h"

namespace gkplat {

/// A lattice in 2N-dimensional phase space generated by the rows of
/// sqrt(scale_sq) * basis. Coordinates are the dimensionless (alpha, beta)
/// of the Weyl displacements: the first N columns are the q-type components
/// and the last N the p-type ones.
class Lattice {
 public:
  /// Throws std::invalid_argument if the basis is not square of even size,
  /// is singular, or scale_sq <= 0.
  Lattice(RationalMatrix basis, mpq_class scale_sq = 1);

  std::size_t dim() const noexcept { return basis_.rows(); }
  std::size_t modes() const noexcept { return basis_.rows() / 2; }
  const RationalMatrix& basis() const noexcept { return basis_; }
  const mpq_class& scale_sq() const noexcept { return scale_sq_; }

  /// Pulls the rational content of the basis into scale_sq so that the basis is a
  /// primitive integer matrix. Generates the same point set.
  Lattice normalized() const;

  /// Effective generator matrix sqrt(scale_sq) * basis, row-major doubles.
  std::vector<double> generator() const;

 private:
  RationalMatrix basis_;
  mpq_class scale_sq_;
};

/// The 2N x 2N matrix [[0, I], [-I, 0]].
RationalMatrix symplectic_form(std::size_t n);

/// A = M omega M^T, kept exact because M M^T-type products absorb sqrt(scale_sq).
struct SymplecticGram {
  RationalMatrix a;
};

SymplecticGram symplectic_gram(const Lattice& lat);
bool is_symplectically_integral(const Lattice& lat);

/// Lattice generated by A^{-1} M, normalized. Throws std::domain_error if A is singular.
Lattice dual_lattice(const Lattice& lat);

/// Unimodular R and positive D with R A R^T = [[0, D], [-D, 0]]. D is ascending and
/// each entry divides the next.
struct StandardForm {
  RationalMatrix transform;
  std::vector<mpz_class> invariants;
};

/// Throws std::invalid_argument if A is not square, even, antisymmetric, integral
/// and nonsingular.
StandardForm standard_form(const SymplecticGram& gram);

/// m = det D = |Pf A|. Throws std::invalid_argument for a non-integral lattice.
mpz_class code_dimension(const Lattice& lat);

/// Rescales a symplectically self-dual lattice by sqrt(factor). Throws
/// std::invalid_argument if lat is not self-dual or factor < 1.
Lattice rescale(const Lattice& lat, unsigned long factor);

/// G = M M^T.
RationalMatrix gram_matrix(const Lattice& lat);

/// Vector sqrt(scale_sq) * coords.
struct ScaledVector {
  std::vector<mpq_class> coords;
  mpq_class scale_sq = 1;
};

/// True iff v lies on the lattice. Throws std::invalid_argument when the ratio of
/// scales is not a rational square (the coordinates would be irrational), unless v = 0.
bool coset_member(const Lattice& lat, const ScaledVector& v);

/// A stabilizer lattice together with its symplectic dual.
struct LatticeCode {
  Lattice stabilizer;
  Lattice normalizer;
  mpz_class dimension;
  double rate_qubits = 0.0;
  /// Row i holds normalizer generator i in stabilizer-basis coordinates (exact).
  RationalMatrix normalizer_in_stabilizer;
};

/// Throws std::invalid_argument if the lattice is not symplectically integral.
LatticeCode make_lattice_code(const Lattice& stabilizer);

}  // namespace gkplat

#endif  // GKPLAT_SYMPLECTIC_LATTICE_H
