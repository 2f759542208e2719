#include "gcf/sails.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcf {

namespace {

// Period word of a chain covering one period: edge lengths and interior
// sines, closed by the sine at the last vertex against shift(chain[1]).
LLSSequenceFragment period_word(const VertexChain& chain, const IntMatrix2& shift) {
    const auto& v = chain.vertices;
    LLSSequenceFragment word = lls_of_chain(chain, LatticePoint{0, 0});
    word.values.push_back(
        int_sine(v[v.size() - 2], v.back(), shift.apply(v[1])));
    return word;
}

SailPeriod negated(const SailPeriod& s, int octant) {
    SailPeriod out;
    out.octant = octant;
    out.shift = s.shift;
    for (const auto& v : s.chain.vertices) out.chain.vertices.push_back(-v);
    out.lls = period_word(out.chain, out.shift);
    return out;
}

}  // namespace

SailPeriod dual_sail_period(const SailPeriod& s, int octant) {
    SailPeriod out;
    out.octant = octant;
    out.shift = s.shift;
    const auto& v = s.chain.vertices;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        out.chain.vertices.push_back(primitive(v[i + 1] - v[i]));
    out.chain.vertices.push_back(s.shift.apply(out.chain.vertices.front()));
    out.lls = period_word(out.chain, out.shift);
    return out;
}

std::array<SailPeriod, 4> four_sail_periods(const IntMatrix2& A) {
    if (A.det() != 1 || !is_hyperbolic(A))
        throw std::invalid_argument("four_sail_periods: operator must be hyperbolic with det 1");
    ReductionTrace tr = reduce(A);
    const IntMatrix2& R = tr.final_state;

    // Sail period of the reduced operator, through (1,0): the sail of the
    // angle between the rays to (1,0) and R(1,0).
    VertexChain base;
    if (sgn(R.m11) == 0) {
        base.vertices = {{1, 0}, {0, 1}};
    } else if (R.m11 == R.m21) {  // a = b = 1 family
        base.vertices = {{1, 0}, {1, 1}};
    } else {
        base = angle_sail({R.m11, R.m21});
    }

    SailPeriod oct0;
    oct0.octant = 0;
    for (const auto& v : base.vertices) oct0.chain.vertices.push_back(tr.T.apply(v));
    // sign * T^{-1} A T = R, so T R T^{-1} = sign * A: the positive-eigenvalue
    // shift generator in A's coordinates.
    IntMatrix2 shift = tr.sign == 1 ? A : -A;
    if (tr.T.det() == -1) {
        // A determinant -1 conjugator reverses orientation; restore the
        // counterclockwise order and use the inverse shift.
        std::reverse(oct0.chain.vertices.begin(), oct0.chain.vertices.end());
        shift = shift.inverse();
    }
    oct0.shift = shift;
    oct0.lls = period_word(oct0.chain, oct0.shift);

    SailPeriod oct1 = dual_sail_period(oct0, 1);
    SailPeriod oct2 = negated(oct0, 2);
    SailPeriod oct3 = negated(oct1, 3);
    return {oct0, oct1, oct2, oct3};
}

SailPeriod operator_sail_period(const IntMatrix2& A, int octant) {
    if (octant < 0 || octant > 3)
        throw std::invalid_argument("operator_sail_period: octant must be 0..3");
    return four_sail_periods(A)[static_cast<std::size_t>(octant)];
}

bool words_dual(const std::vector<Int>& w1, const std::vector<Int>& w2) {
    if (w1.size() != w2.size() || w1.empty()) return false;
    std::size_t n = w1.size();
    auto matches_rotation = [&](const std::vector<Int>& w, std::size_t r) {
        for (std::size_t i = 0; i < n; ++i)
            if (w1[i] != w[(i + r) % n]) return false;
        return true;
    };
    // Roles swap under odd rotations, or under reversal followed by an even
    // rotation (reversal flips the alternation parity by itself).
    for (std::size_t r = 1; r < n; r += 2)
        if (matches_rotation(w2, r)) return true;
    std::vector<Int> rev(w2.rbegin(), w2.rend());
    for (std::size_t r = 0; r < n; r += 2)
        if (matches_rotation(rev, r)) return true;
    return false;
}

bool check_duality(const SailPeriod& s1, const SailPeriod& s2) {
    return words_dual(s1.lls.values, s2.lls.values);
}

LLSPeriod sail_word_bruteforce(const IntMatrix2& A) {
    if (A.det() != 1 || !is_hyperbolic(A))
        throw std::invalid_argument("sail_word_bruteforce: operator must be hyperbolic with det 1");
    // Work with the positive-eigenvalue representative; the sails coincide.
    IntMatrix2 S = sgn(A.trace()) > 0 ? A : -A;
    LatticePoint p0{1, 0};
    // Orient so that S advances counterclockwise (else use the inverse shift;
    // the resulting word is the reversal, absorbed by period equivalence).
    if (sgn(det2(S.inverse().apply(p0), S.apply(p0))) < 0) S = S.inverse();

    IntMatrix2 Sinv = S.inverse();
    LatticePoint ray_lo = Sinv.apply(p0), ray_hi = S.apply(p0);
    LatticePoint u = Sinv.apply(ray_lo), w = S.apply(ray_hi);
    if (sgn(det2(ray_lo, ray_hi)) == 0)
        throw std::logic_error("sail_word_bruteforce: degenerate orbit");

    Int box = std::max(chebyshev_norm(u), chebyshev_norm(w));
    VertexChain chain = angle_sail_bruteforce(u, w, box);
    const auto& verts = chain.vertices;

    // Hull vertices inside the middle cone [ray_lo, ray_hi] are genuine sail
    // vertices (the outer periods shield them from the bounding rays).
    std::size_t i1 = 0;
    while (i1 < verts.size() && sgn(det2(ray_lo, verts[i1])) < 0) ++i1;
    if (i1 == verts.size()) throw std::logic_error("sail_word_bruteforce: empty trust region");
    LatticePoint v1 = verts[i1];
    LatticePoint target = S.apply(v1);
    std::size_t i2 = i1 + 1;
    while (i2 < verts.size() && !(verts[i2] == target)) ++i2;
    if (i2 == verts.size())
        throw std::logic_error("sail_word_bruteforce: shifted vertex not on the hull");

    LLSPeriod out;
    for (std::size_t k = i1; k < i2; ++k) {
        out.word.push_back(int_length(verts[k], verts[k + 1]));
        // Sine at verts[k+1]; past the subchain end the next sail vertex is
        // the shift image of the second subchain vertex.
        LatticePoint next = (k + 2 <= i2) ? verts[k + 2] : S.apply(verts[i1 + 1]);
        out.word.push_back(int_sine(verts[k], verts[k + 1], next));
    }
    return out;
}

}  // namespace gcf
