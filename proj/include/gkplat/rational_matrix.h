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

#ifndef GKPLAT_RATIONAL_MATRIX_H
#define GKPLAT_RATIONAL_MATRIX_H

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace gkplat {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  mpq_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpq_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-() const;
  RationalMatrix scaled(const mpq_class& factor) const;

  /// Fraction-free elimination over Q; exact.
  mpq_class determinant() const;
  /// Throws std::domain_error when singular.
  RationalMatrix inverse() const;

  bool is_integral() const;
  bool is_zero() const;
  bool operator==(const RationalMatrix& rhs) const;

  std::vector<double> to_doubles() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Row vector times matrix.
std::vector<mpq_class> row_times(const std::vector<mpq_class>& row, const RationalMatrix& m);

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input or q = 0.
mpq_class parse_rational(const std::string& text);
std::string format_rational(const mpq_class& value);

/// True iff value = r^2 for some rational r; writes r >= 0 into root.
bool rational_sqrt(const mpq_class& value, mpq_class& root);

}  // namespace gkplat

#endif  // GKPLAT_RATIONAL_MATRIX_H
