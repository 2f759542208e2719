#pragma once

#include <vector>

#include "gcf/ints.hpp"

namespace gcf {

struct LatticePoint {
    Int x, y;

    LatticePoint() : x(0), y(0) {}
    LatticePoint(Int px, Int py) : x(std::move(px)), y(std::move(py)) {}

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    bool operator==(const LatticePoint&) const = default;
    bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

inline Int det2(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }

// Largest coordinate magnitude, used for search-box sizing.
Int chebyshev_norm(const LatticePoint& p);

// p divided by the gcd of its coordinates; p must be nonzero.
LatticePoint primitive(const LatticePoint& p);

// Integer length of segment PQ: interior lattice point count plus one,
// equal to gcd(|Qx-Px|, |Qy-Py|). P == Q is an error.
Int int_length(const LatticePoint& P, const LatticePoint& Q);

// Integer sine of the angle QPR at apex P: the index of the sublattice
// spanned by the primitive directions of PQ and PR. Zero iff collinear.
Int int_sine(const LatticePoint& Q, const LatticePoint& P, const LatticePoint& R);

// Convex broken line: consecutive vertices distinct, no three consecutive
// collinear, all turns of one orientation sign.
struct VertexChain {
    std::vector<LatticePoint> vertices;
    void validate() const;  // throws std::invalid_argument on violation
    bool operator==(const VertexChain&) const = default;
};

enum class LLSRole { Length, Sine };

// Alternating integer lengths and sines read along a chain.
struct LLSSequenceFragment {
    std::vector<Int> values;
    LLSRole starts_with = LLSRole::Length;
    bool operator==(const LLSSequenceFragment&) const = default;
};

// (il(V0 V1), isin(V0 V1 V2), il(V1 V2), ...): 2*edges - 1 values.
// The apex (origin of the sail's angle) must not lie on the chain.
LLSSequenceFragment lls_of_chain(const VertexChain& chain, const LatticePoint& apex);

// Sail of the normalized angle between the rays through (1,0) and Q=(a,b),
// where Q is primitive and b > a >= 1. Built from the convergents of the
// odd continued fraction of b/a: vertices (1,0), (q_0,p_0), (q_2,p_2), ...
// The chain's LLS fragment equals the odd expansion digits of b/a.
VertexChain angle_sail(const LatticePoint& Q);

// Sail of the convex angle between the rays through Pdir and Qdir, computed
// from the definition: convex hull of the nonzero lattice points of the
// closed angle within |x|,|y| <= bound. Vertices are returned in
// counterclockwise order, bounding-ray lattice points included. Throws
// "bound insufficient" if the box cannot certifiably contain the sail and
// "collinear rays" for a degenerate angle.
VertexChain angle_sail_bruteforce(const LatticePoint& Pdir, const LatticePoint& Qdir,
                                  const Int& bound);

}  // namespace gcf
