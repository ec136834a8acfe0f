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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_support.h"

namespace gkplat {
namespace {

RationalMatrix make(std::size_t n, std::initializer_list<mpq_class> values) {
  RationalMatrix m(n, n);
  std::size_t i = 0;
  for (const auto& v : values) {
    m(i / n, i % n) = v;
    ++i;
  }
  return m;
}

TEST(RationalMatrix, IdentityAndTranspose) {
  const RationalMatrix id = RationalMatrix::identity(3);
  EXPECT_EQ(id.determinant(), 1);
  const RationalMatrix m = make(2, {1, 2, 3, 4});
  EXPECT_EQ(m.transpose()(0, 1), 3);
  EXPECT_EQ(m.transpose().transpose(), m);
  EXPECT_EQ(m * RationalMatrix::identity(2), m);
}

TEST(RationalMatrix, DeterminantIsExact) {
  const RationalMatrix m = make(3, {mpq_class(1, 2), 1, 0, 0, mpq_class(1, 3), 2, 1, 0, 5});
  // 1/2 * (5/3 - 0) - 1 * (0 - 2) = 5/6 + 2
  EXPECT_EQ(m.determinant(), mpq_class(17, 6));
  EXPECT_EQ(make(2, {1, 2, 2, 4}).determinant(), 0);
}

TEST(RationalMatrix, DeterminantNeedsRowSwap) {
  EXPECT_EQ(make(2, {0, 1, 1, 0}).determinant(), -1);
  EXPECT_EQ(make(3, {0, 0, 2, 0, 3, 0, 5, 0, 0}).determinant(), -30);
}

TEST(RationalMatrix, InverseRoundTrip) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m(4, 4);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        m(r, c) = testing::q(entry(rng), 1 + (entry(rng) + 5) % 3);
      }
    }
    if (m.determinant() == 0) {
      continue;
    }
    EXPECT_EQ(m * m.inverse(), RationalMatrix::identity(4));
    EXPECT_EQ(m.inverse() * m, RationalMatrix::identity(4));
  }
}

TEST(RationalMatrix, SingularInverseThrows) {
  EXPECT_THROW(make(2, {1, 2, 2, 4}).inverse(), std::domain_error);
}

TEST(RationalMatrix, Predicates) {
  EXPECT_TRUE(make(2, {1, -2, 0, 4}).is_integral());
  EXPECT_FALSE(make(2, {1, mpq_class(1, 2), 0, 4}).is_integral());
  EXPECT_TRUE(RationalMatrix(2, 3).is_zero());
  EXPECT_TRUE((make(2, {1, 2, 3, 4}) + -make(2, {1, 2, 3, 4})).is_zero());
  EXPECT_EQ(make(2, {1, 2, 3, 4}).scaled(mpq_class(1, 2))(1, 1), 2);
}

TEST(RationalMatrix, RowTimes) {
  const auto v = row_times({1, mpq_class(1, 2)}, make(2, {2, 0, 4, 6}));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], 4);
  EXPECT_EQ(v[1], 3);
}

TEST(RationalMatrix, ToDoubles) {
  const auto d = make(2, {mpq_class(1, 4), 1, -3, 0}).to_doubles();
  EXPECT_EQ(d, (std::vector<double>{0.25, 1.0, -3.0, 0.0}));
}

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), mpq_class(1, 2));
  EXPECT_EQ(parse_rational("-7"), -7);
  EXPECT_EQ(parse_rational("-2/4"), mpq_class(-1, 2));
  EXPECT_EQ(format_rational(mpq_class(6, 4)), "3/2");
  EXPECT_EQ(format_rational(testing::q(-6, 4)), "-3/2");
  EXPECT_EQ(format_rational(mpq_class(5)), "5/1");
  EXPECT_EQ(parse_rational(format_rational(mpq_class(-22, 7))), mpq_class(-22, 7));
}

TEST(Rational, ParseRejectsMalformed) {
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
}

TEST(Rational, Sqrt) {
  mpq_class root;
  EXPECT_TRUE(rational_sqrt(mpq_class(4, 9), root));
  EXPECT_EQ(root, mpq_class(2, 3));
  EXPECT_FALSE(rational_sqrt(mpq_class(2), root));
  EXPECT_FALSE(rational_sqrt(mpq_class(-1), root));
  EXPECT_TRUE(rational_sqrt(mpq_class(0), root));
  EXPECT_EQ(root, 0);
}

}  // namespace
}  // namespace gkplat
