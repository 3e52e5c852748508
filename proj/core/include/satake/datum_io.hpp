#pragma once

#include "satake/root_datum.hpp"

#include <iosfwd>

namespace satake {

// Group-description files are JSON with fixed field names:
//   name, rank, roots, coroots, simple_indices, inertia_gens, frobenius,
//   echelonnage {roots, coroots}, inner_twist {levi, w_sigma}, levis.
// Matrices are arrays of rows; all entries are integers.
GaloisRootDatum parse_datum(const std::string& json_text);
GaloisRootDatum load_datum_file(const std::string& path);
std::string datum_to_json(const GaloisRootDatum& d);

}  // namespace satake
