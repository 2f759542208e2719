#pragma once

#include <vector>

#include "gcf/ints.hpp"

namespace gcf {

// Gauss-Kuzmin probability of an odd-length positive pattern P:
//   GK(P) = log2( ((alpha1 + 1) * alpha2) / (alpha1 * (alpha2 + 1)) )
// with alpha1 = [a1:...;a_{2n-1}] and alpha2 the same fraction with the last
// term incremented. The ratio is formed exactly; only the final logarithm is
// floating point (documented 1e-12 tolerance).
double gk_probability(const std::vector<Int>& pattern);

}  // namespace gcf
