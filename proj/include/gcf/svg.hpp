#pragma once

#include <string>

#include "gcf/ints.hpp"
#include "gcf/matrix2.hpp"

namespace gcf {

// Static SVG of the operator's geometric continued fraction: lattice dots,
// both eigenlines, the four sail periods, and the LLS annotations (edge
// lengths as black digits, vertex sines as white digits on dark discs).
// window is the half-size of the shown lattice square; 0 picks one that
// covers every period vertex. Output is byte-stable for identical inputs.
std::string render_svg(const IntMatrix2& A, const Int& window = 0);

}  // namespace gcf
