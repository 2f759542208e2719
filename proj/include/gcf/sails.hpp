#pragma once

#include <array>

#include "gcf/lattice.hpp"
#include "gcf/matrix2.hpp"
#include "gcf/reduction.hpp"

namespace gcf {

// One fundamental period of a sail: a convex counterclockwise vertex chain
// whose last vertex is the image of the first under `shift` (the
// positive-eigenvalue generator, some power/inverse of +-A). `lls` is one
// full period of the LLS-sequence (even length, starting with an edge length:
// the closing sine at the last vertex is included).
struct SailPeriod {
    VertexChain chain;
    int octant = 0;
    LLSSequenceFragment lls;
    IntMatrix2 shift;
};

// Sail periods in all four octants. Octant 0 contains the image of (1,0)
// under the reduction conjugator; numbering proceeds counterclockwise, so
// octant 1 is the dual built from octant 0's edge directions and octants
// 2, 3 are the central reflections of 0, 1.
std::array<SailPeriod, 4> four_sail_periods(const IntMatrix2& A);

SailPeriod operator_sail_period(const IntMatrix2& A, int octant);

// Dual sail period: vertices are the primitive edge directions of `s`
// (the vertex-for-edge bijection of adjacent sails).
SailPeriod dual_sail_period(const SailPeriod& s, int octant);

// True when the two periods' cyclic LLS words coincide with the length and
// sine roles exchanged (an odd rotation, or a role-preserving reversal).
bool check_duality(const SailPeriod& s1, const SailPeriod& s2);
bool words_dual(const std::vector<Int>& w1, const std::vector<Int>& w2);

// Independent period oracle straight from the sail definition: finds a
// fundamental period of the sail through (1,0) using only the convex-hull
// construction between lattice rays of the A-orbit. Never calls reduce().
LLSPeriod sail_word_bruteforce(const IntMatrix2& A);

}  // namespace gcf
