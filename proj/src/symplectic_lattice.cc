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

#include "gkplat/symplectic_lattice.h"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace gkplat {

Lattice::Lattice(RationalMatrix basis, mpq_class scale_sq)
    : basis_(std::move(basis)), scale_sq_(std::move(scale_sq)) {
  scale_sq_.canonicalize();
  if (!basis_.is_square() || basis_.rows() == 0 || basis_.rows() % 2 != 0) {
    throw std::invalid_argument("lattice basis must be square with even positive dimension");
  }
  if (sgn(scale_sq_) <= 0) {
    throw std::invalid_argument("lattice scale_sq must be positive");
  }
  if (sgn(basis_.determinant()) == 0) {
    throw std::invalid_argument("lattice basis is singular");
  }
}

Lattice Lattice::normalized() const {
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  const std::size_t n = dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& v = basis_(r, c);
      if (sgn(v) == 0) {
        continue;
      }
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  if (content == 1) {
    return *this;
  }
  return Lattice(basis_.scaled(1 / content), scale_sq_ * content * content);
}

std::vector<double> Lattice::generator() const {
  std::vector<double> g = basis_.to_doubles();
  const double s = std::sqrt(scale_sq_.get_d());
  for (double& v : g) {
    v *= s;
  }
  return g;
}

RationalMatrix symplectic_form(std::size_t n) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("symplectic form needs an even positive dimension");
  }
  const std::size_t half = n / 2;
  RationalMatrix w(n, n);
  for (std::size_t i = 0; i < half; ++i) {
    w(i, half + i) = 1;
    w(half + i, i) = -1;
  }
  return w;
}

SymplecticGram symplectic_gram(const Lattice& lat) {
  const RationalMatrix& b = lat.basis();
  return {(b * symplectic_form(lat.dim()) * b.transpose()).scaled(lat.scale_sq())};
}

bool is_symplectically_integral(const Lattice& lat) { return symplectic_gram(lat).a.is_integral(); }

Lattice dual_lattice(const Lattice& lat) {
  const RationalMatrix a = symplectic_gram(lat).a;
  RationalMatrix a_inv = a.inverse();
  // M_perp = A^{-1} M shares the sqrt(scale_sq) factor with M.
  return Lattice(a_inv * lat.basis(), lat.scale_sq()).normalized();
}

namespace {

// Integer working state for the congruence reduction A -> E A E^T.
class CongruenceReducer {
 public:
  explicit CongruenceReducer(const RationalMatrix& a) : n_(a.rows()), a_(n_ * n_), r_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        a_[i * n_ + j] = a(i, j).get_num();
      }
      r_[i * n_ + i] = 1;
    }
  }

  mpz_class& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  void swap_index(std::size_t i, std::size_t j) {
    if (i == j) {
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      std::swap(a_[i * n_ + c], a_[j * n_ + c]);
      std::swap(r_[i * n_ + c], r_[j * n_ + c]);
    }
    for (std::size_t r = 0; r < n_; ++r) {
      std::swap(a_[r * n_ + i], a_[r * n_ + j]);
    }
  }

  // Row and column `target` += q * row and column `source`.
  void add_multiple(std::size_t target, std::size_t source, const mpz_class& q) {
    if (q == 0) {
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      a_[target * n_ + c] += q * a_[source * n_ + c];
      r_[target * n_ + c] += q * r_[source * n_ + c];
    }
    for (std::size_t r = 0; r < n_; ++r) {
      a_[r * n_ + target] += q * a_[r * n_ + source];
    }
  }

  // Reduces the active block starting at index p until rows p, p+1 are split off and
  // the pivot divides every entry of the remaining block.
  mpz_class split_pair(std::size_t p) {
    for (;;) {
      std::size_t bi = n_;
      std::size_t bj = n_;
      mpz_class best;
      for (std::size_t i = p; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
          const mpz_class& v = at(i, j);
          if (v == 0) {
            continue;
          }
          if (bi == n_ || abs(v) < best) {
            best = abs(v);
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n_) {
        throw std::invalid_argument("standard_form: matrix is singular");
      }
      swap_index(p, bi);
      if (bj == p) {
        bj = bi;
      }
      swap_index(p + 1, bj);
      if (at(p, p + 1) < 0) {
        swap_index(p, p + 1);
      }
      const mpz_class g = at(p, p + 1);

      bool clean = true;
      for (std::size_t l = p + 2; l < n_; ++l) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), at(p, l).get_mpz_t(), g.get_mpz_t());
        add_multiple(l, p + 1, -q);
        mpz_fdiv_q(q.get_mpz_t(), at(p + 1, l).get_mpz_t(), g.get_mpz_t());
        add_multiple(l, p, q);
        if (at(p, l) != 0 || at(p + 1, l) != 0) {
          clean = false;
        }
      }
      if (!clean) {
        continue;
      }

      bool divides = true;
      for (std::size_t i = p + 2; i < n_ && divides; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
          if (mpz_divisible_p(at(i, j).get_mpz_t(), g.get_mpz_t()) == 0) {
            add_multiple(p, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) {
        return g;
      }
    }
  }

  const std::vector<mpz_class>& transform() const { return r_; }

 private:
  std::size_t n_;
  std::vector<mpz_class> a_;
  std::vector<mpz_class> r_;
};

}  // namespace

StandardForm standard_form(const SymplecticGram& gram) {
  const RationalMatrix& a = gram.a;
  if (!a.is_square() || a.rows() == 0 || a.rows() % 2 != 0) {
    throw std::invalid_argument("standard_form: matrix must be square of even dimension");
  }
  if (!(a + a.transpose()).is_zero()) {
    throw std::invalid_argument("standard_form: matrix is not antisymmetric");
  }
  if (!a.is_integral()) {
    throw std::invalid_argument("standard_form: matrix is not integral");
  }
  if (sgn(a.determinant()) == 0) {
    throw std::invalid_argument("standard_form: matrix is singular");
  }

  const std::size_t n = a.rows();
  const std::size_t half = n / 2;
  CongruenceReducer reducer(a);
  StandardForm out;
  out.invariants.reserve(half);
  for (std::size_t k = 0; k < half; ++k) {
    out.invariants.push_back(reducer.split_pair(2 * k));
  }

  // Pairs sit at (2k, 2k+1); reorder to (q-block, p-block).
  const auto& r = reducer.transform();
  out.transform = RationalMatrix(n, n);
  for (std::size_t k = 0; k < half; ++k) {
    for (std::size_t c = 0; c < n; ++c) {
      out.transform(k, c) = r[(2 * k) * n + c];
      out.transform(half + k, c) = r[(2 * k + 1) * n + c];
    }
  }
  return out;
}

mpz_class code_dimension(const Lattice& lat) {
  const SymplecticGram gram = symplectic_gram(lat);
  if (!gram.a.is_integral()) {
    throw std::invalid_argument("code_dimension: lattice is not symplectically integral");
  }
  const StandardForm sf = standard_form(gram);
  mpz_class m = 1;
  for (const auto& d : sf.invariants) {
    m *= d;
  }
  mpq_class scale_pow = 1;
  for (std::size_t i = 0; i < lat.modes(); ++i) {
    scale_pow *= lat.scale_sq();
  }
  if (abs(lat.basis().determinant()) * scale_pow != mpq_class(m)) {
    throw std::logic_error("code_dimension: det D disagrees with |det M|");
  }
  return m;
}

Lattice rescale(const Lattice& lat, unsigned long factor) {
  if (factor < 1) {
    throw std::invalid_argument("rescale: factor must be a positive integer");
  }
  if (!is_symplectically_integral(lat) || code_dimension(lat) != 1) {
    throw std::invalid_argument("rescale: lattice is not symplectically self-dual");
  }
  return Lattice(lat.basis(), lat.scale_sq() * factor);
}

RationalMatrix gram_matrix(const Lattice& lat) {
  return (lat.basis() * lat.basis().transpose()).scaled(lat.scale_sq());
}

bool coset_member(const Lattice& lat, const ScaledVector& v) {
  if (v.coords.size() != lat.dim()) {
    throw std::invalid_argument("coset_member: vector dimension mismatch");
  }
  bool zero = true;
  for (const auto& c : v.coords) {
    zero = zero && sgn(c) == 0;
  }
  if (zero) {
    return true;
  }
  mpq_class ratio;
  if (!rational_sqrt(v.scale_sq / lat.scale_sq(), ratio)) {
    throw std::invalid_argument("coset_member: incompatible scale");
  }
  // v = sqrt(s_v) x, lattice = sqrt(s_l) u B, so u = sqrt(s_v / s_l) x B^{-1}.
  std::vector<mpq_class> coeffs = row_times(v.coords, lat.basis().inverse());
  for (auto& c : coeffs) {
    c *= ratio;
    if (c.get_den() != 1) {
      return false;
    }
  }
  return true;
}

LatticeCode make_lattice_code(const Lattice& stabilizer) {
  if (!is_symplectically_integral(stabilizer)) {
    throw std::invalid_argument("make_lattice_code: stabilizer lattice is not symplectically integral");
  }
  Lattice normalizer = dual_lattice(stabilizer);
  mpz_class m = code_dimension(stabilizer);
  const double rate = std::log2(m.get_d()) / static_cast<double>(stabilizer.modes());

  mpq_class ratio;
  if (!rational_sqrt(normalizer.scale_sq() / stabilizer.scale_sq(), ratio)) {
    throw std::logic_error("make_lattice_code: dual scale is not commensurate");
  }
  RationalMatrix transition = (normalizer.basis() * stabilizer.basis().inverse()).scaled(ratio);
  return LatticeCode{stabilizer, std::move(normalizer), std::move(m), rate, std::move(transition)};
}

}  // namespace gkplat
