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

#ifndef GKPLAT_LATTICE_CATALOG_H
#define GKPLAT_LATTICE_CATALOG_H

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "gkplat/symplectic_lattice.h"

namespace gkplat {

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  std::optional<mpq_class> known_shortest_sq;
  std::string notes;
};

/// Z^n with lambda = 1; n must be even.
CatalogEntry integer_lattice(std::size_t n);
/// {x in Z^4 : sum x even}.
CatalogEntry d4_lattice();
/// D8 plus the all-halves glue vector.
CatalogEntry e8_lattice();
/// Single-mode code: basis I_2, lambda = d. Its normalizer is (1/sqrt d) Z^2.
CatalogEntry grid_qudit(unsigned long d);

/// Accepts "Zn:<n>", "Z:<n>", "Zn(<n>)", "Z<n>", "D4", "E8", "grid_qudit:<d>",
/// "grid_qudit(<d>)". Throws std::invalid_argument for unknown names.
CatalogEntry get_catalog_entry(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace gkplat

#endif  // GKPLAT_LATTICE_CATALOG_H
