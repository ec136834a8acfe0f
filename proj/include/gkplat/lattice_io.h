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

#ifndef GKPLAT_LATTICE_IO_H
#define GKPLAT_LATTICE_IO_H

#include <json.hpp>

#include <string>

#include "gkplat/symplectic_lattice.h"

namespace gkplat {

/// { "n": int, "lambda": "p/q", "basis": [["p/q", ...], ...] }. Rationals are
/// written as "p/q" strings; on input integers and "p" strings are also accepted.
nlohmann::ordered_json lattice_to_json(const Lattice& lat);

/// Throws std::invalid_argument on schema violations.
Lattice lattice_from_json(const nlohmann::json& j);

/// Reads a lattice file. Throws std::runtime_error if the file cannot be read or parsed.
Lattice read_lattice_file(const std::string& path);

/// Catalog name if it parses as one, otherwise a path to a lattice file.
Lattice resolve_lattice(const std::string& name_or_path);

}  // namespace gkplat

#endif  // GKPLAT_LATTICE_IO_H
