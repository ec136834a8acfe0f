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

#include "gkplat/lattice_catalog.h"

#include <regex>
#include <stdexcept>

namespace gkplat {

namespace {

RationalMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows) {
  RationalMatrix m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

unsigned long parse_count(const std::string& text, const std::string& name) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size()) {
      throw std::invalid_argument(name);
    }
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("unknown lattice name: '" + name + "'");
  }
}

}  // namespace

CatalogEntry integer_lattice(std::size_t n) {
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("Zn needs an even positive dimension");
  }
  return {"Zn(" + std::to_string(n) + ")", Lattice(RationalMatrix::identity(n)), mpq_class(1),
          "cubic lattice; symplectically self-dual with A = omega"};
}

CatalogEntry d4_lattice() {
  RationalMatrix b = from_rows({{-1, -1, 0, 0}, {1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}});
  return {"D4", Lattice(std::move(b)), mpq_class(2),
          "checkerboard lattice {x in Z^4 : sum even}; |det basis| = 2; symplectically "
          "integral under the stored coordinate order"};
}

CatalogEntry e8_lattice() {
  const mpq_class h(1, 2);
  RationalMatrix b = from_rows({{2, 0, 0, 0, 0, 0, 0, 0},
                                {-1, 1, 0, 0, 0, 0, 0, 0},
                                {0, -1, 1, 0, 0, 0, 0, 0},
                                {0, 0, -1, 1, 0, 0, 0, 0},
                                {0, 0, 0, -1, 1, 0, 0, 0},
                                {0, 0, 0, 0, -1, 1, 0, 0},
                                {0, 0, 0, 0, 0, -1, 1, 0},
                                {h, h, h, h, h, h, h, h}});
  return {"E8", Lattice(std::move(b)), mpq_class(2),
          "D8 plus glue (1/2)^8, even coordinates; |det basis| = 1; symplectically self-dual "
          "under the stored coordinate order"};
}

CatalogEntry grid_qudit(unsigned long d) {
  if (d < 1) {
    throw std::invalid_argument("grid_qudit needs d >= 1");
  }
  return {"grid_qudit(" + std::to_string(d) + ")", Lattice(RationalMatrix::identity(2), mpq_class(d)),
          mpq_class(d), "stabilizer sqrt(d) Z^2, normalizer (1/sqrt d) Z^2, code dimension d"};
}

CatalogEntry get_catalog_entry(const std::string& name) {
  static const std::regex zn(R"(^Zn?(?::|\(|)(\d+)\)?$)");
  static const std::regex grid(R"(^grid_qudit(?::|\()(\d+)\)?$)");
  std::smatch m;
  if (name == "D4") {
    return d4_lattice();
  }
  if (name == "E8") {
    return e8_lattice();
  }
  if (std::regex_match(name, m, zn)) {
    return integer_lattice(parse_count(m[1].str(), name));
  }
  if (std::regex_match(name, m, grid)) {
    return grid_qudit(parse_count(m[1].str(), name));
  }
  throw std::invalid_argument("unknown lattice name: '" + name + "'");
}

std::vector<std::string> catalog_names() { return {"Zn:<n>", "D4", "E8", "grid_qudit:<d>"}; }

}  // namespace gkplat
