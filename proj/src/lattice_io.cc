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

#include "gkplat/lattice_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gkplat/lattice_catalog.h"

namespace gkplat {

namespace {

mpq_class rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    return parse_rational(v.get<std::string>());
  }
  if (v.is_number_integer()) {
    return mpq_class(mpz_class(std::to_string(v.get<long long>()), 10));
  }
  throw std::invalid_argument("lattice file: rationals must be \"p/q\" strings or integers");
}

}  // namespace

nlohmann::ordered_json lattice_to_json(const Lattice& lat) {
  nlohmann::ordered_json j;
  j["n"] = lat.dim();
  j["lambda"] = format_rational(lat.scale_sq());
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < lat.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < lat.dim(); ++c) {
      row.push_back(format_rational(lat.basis()(r, c)));
    }
    rows.push_back(std::move(row));
  }
  j["basis"] = std::move(rows);
  return j;
}

Lattice lattice_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("lambda") || !j.contains("basis")) {
    throw std::invalid_argument("lattice file: expected object with n, lambda, basis");
  }
  if (!j["n"].is_number_integer() || j["n"].get<long long>() <= 0) {
    throw std::invalid_argument("lattice file: n must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(j["n"].get<long long>());
  const nlohmann::json& basis = j["basis"];
  if (!basis.is_array() || basis.size() != n) {
    throw std::invalid_argument("lattice file: basis must have n rows");
  }
  RationalMatrix b(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!basis[r].is_array() || basis[r].size() != n) {
      throw std::invalid_argument("lattice file: every basis row must have n entries");
    }
    for (std::size_t c = 0; c < n; ++c) {
      b(r, c) = rational_from_json(basis[r][c]);
    }
  }
  return Lattice(std::move(b), rational_from_json(j["lambda"]));
}

Lattice read_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open lattice file '" + path + "'");
  }
  try {
    return lattice_from_json(nlohmann::json::parse(in));
  } catch (const std::exception& e) {
    throw std::runtime_error("cannot parse lattice file '" + path + "': " + e.what());
  }
}

Lattice resolve_lattice(const std::string& name_or_path) {
  try {
    return get_catalog_entry(name_or_path).lattice;
  } catch (const std::invalid_argument&) {
    return read_lattice_file(name_or_path);
  }
}

}  // namespace gkplat
