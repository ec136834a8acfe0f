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

#include "gkplat/rational_matrix.h"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace gkplat {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      t(c, r) = (*this)(r, c);
    }
  }
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw std::invalid_argument("matrix product: shape mismatch");
  }
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& a = (*this)(r, k);
      if (sgn(a) == 0) {
        continue;
      }
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out(r, c) += a * rhs(k, c);
      }
    }
  }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw std::invalid_argument("matrix sum: shape mismatch");
  }
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] + rhs.data_[i];
  }
  return out;
}

RationalMatrix RationalMatrix::operator-() const { return scaled(mpq_class(-1)); }

RationalMatrix RationalMatrix::scaled(const mpq_class& factor) const {
  RationalMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] * factor;
  }
  return out;
}

mpq_class RationalMatrix::determinant() const {
  if (!is_square()) {
    throw std::invalid_argument("determinant of non-square matrix");
  }
  RationalMatrix work = *this;
  const std::size_t n = rows_;
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      return 0;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
      }
      det = -det;
    }
    det *= work(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(work(r, col)) == 0) {
        continue;
      }
      mpq_class f = work(r, col) / work(col, col);
      for (std::size_t c = col; c < n; ++c) {
        work(r, c) -= f * work(col, c);
      }
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) {
    throw std::invalid_argument("inverse of non-square matrix");
  }
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(work(pivot, col)) == 0) {
      ++pivot;
    }
    if (pivot == n) {
      throw std::domain_error("matrix is singular");
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    mpq_class p = work(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(work(r, col)) == 0) {
        continue;
      }
      mpq_class f = work(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

bool RationalMatrix::is_integral() const {
  for (const auto& v : data_) {
    if (v.get_den() != 1) {
      return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) {
      return false;
    }
  }
  return true;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<double> RationalMatrix::to_doubles() const {
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out[i] = data_[i].get_d();
  }
  return out;
}

std::vector<mpq_class> row_times(const std::vector<mpq_class>& row, const RationalMatrix& m) {
  if (row.size() != m.rows()) {
    throw std::invalid_argument("row vector length does not match matrix");
  }
  std::vector<mpq_class> out(m.cols());
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (sgn(row[k]) == 0) {
      continue;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out[c] += row[k] * m(k, c);
    }
  }
  return out;
}

mpq_class parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) {
      return false;
    }
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        return false;
      }
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (num[0] == '+') {
    num.erase(0, 1);
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool rational_sqrt(const mpq_class& value, mpq_class& root) {
  if (sgn(value) < 0) {
    return false;
  }
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  mpz_class n;
  mpz_class d;
  mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
  root = mpq_class(n, d);
  root.canonicalize();
  return true;
}

}  // namespace gkplat
