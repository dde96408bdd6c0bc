#pragma once

#include "binomid/engine.hpp"
#include "binomid/expr.hpp"

#include <string>
#include <vector>

namespace binomid {

// The built-in identities, in a fixed presentation order.
const std::vector<Identity>& builtin_catalog();

// Catalog entry by name; nullptr when the name is unknown.
const Identity* find_identity(const std::string& name);

// The default sweep for a built-in identity: parameter ranges plus the grid
// ranges its point checks evaluate in addition to the degree-bound grid.
// Throws std::invalid_argument for unknown names.
RangeSpec catalog_default_ranges(const std::string& name);

} // namespace binomid
