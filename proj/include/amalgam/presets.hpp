#pragma once

// Named presentations used throughout the examples and the acceptance suite.

#include <string>
#include <string_view>
#include <vector>

#include "amalgam/rep.hpp"

namespace amg::presets {

/// C2 * C2 (H trivial).
PresentationPtr c2_star_c2();
/// C4 *_{C2} C4, with C2 embedded onto the squares {0, 2} of both factors.
PresentationPtr c4_amalg_c2_c4();
/// C2 *_{C2} C2 with identity maps; the amalgam collapses to C2.
PresentationPtr c2_amalg_c2_c2();
/// Z/4 * Z/6 (H trivial).
PresentationPtr z4_star_z6();
/// 1 *_1 1.
PresentationPtr trivial();
/// C2 * C3 (H trivial).
PresentationPtr c2_star_c3();

/// Looks a preset up by its CLI name; throws InputError for unknown names.
PresentationPtr presentation(std::string_view name);
std::vector<std::string> presentation_names();

}  // namespace amg::presets
