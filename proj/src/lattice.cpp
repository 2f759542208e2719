#include "gcf/lattice.hpp"

#include <algorithm>
#include <stdexcept>

#include "gcf/continued_fraction.hpp"

namespace gcf {

Int chebyshev_norm(const LatticePoint& p) {
    Int ax = abs(p.x), ay = abs(p.y);
    return ax > ay ? ax : ay;
}

LatticePoint primitive(const LatticePoint& p) {
    if (p.is_zero()) throw std::invalid_argument("primitive: zero vector");
    Int g = gcd(p.x, p.y);
    return {p.x / g, p.y / g};
}

Int int_length(const LatticePoint& P, const LatticePoint& Q) {
    if (P == Q) throw std::invalid_argument("int_length: coincident endpoints");
    return gcd(Q.x - P.x, Q.y - P.y);
}

Int int_sine(const LatticePoint& Q, const LatticePoint& P, const LatticePoint& R) {
    if (Q == P || R == P) throw std::invalid_argument("int_sine: coincident points");
    Int d = abs(det2(Q - P, R - P));
    if (sgn(d) == 0) return 0;
    return d / (int_length(P, Q) * int_length(P, R));
}

void VertexChain::validate() const {
    if (vertices.size() < 2) throw std::invalid_argument("chain needs at least two vertices");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i] == vertices[i + 1])
            throw std::invalid_argument("chain has repeated consecutive vertices");
    int turn = 0;
    for (std::size_t i = 0; i + 2 < vertices.size(); ++i) {
        int s = sgn(det2(vertices[i + 1] - vertices[i], vertices[i + 2] - vertices[i + 1]));
        if (s == 0) throw std::invalid_argument("chain has three collinear consecutive vertices");
        if (turn == 0) turn = s;
        if (s != turn) throw std::invalid_argument("chain is not convex");
    }
}

LLSSequenceFragment lls_of_chain(const VertexChain& chain, const LatticePoint& apex) {
    const auto& v = chain.vertices;
    if (v.size() < 2) throw std::invalid_argument("lls_of_chain: fewer than 2 vertices");
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        // The apex must be off every edge of the broken line.
        LatticePoint d1 = apex - v[i], d2 = v[i + 1] - v[i];
        if (sgn(det2(d1, d2)) == 0) {
            Int dot = d1.x * d2.x + d1.y * d2.y;
            if (sgn(dot) >= 0 && dot <= d2.x * d2.x + d2.y * d2.y)
                throw std::invalid_argument("lls_of_chain: apex lies on the chain");
        }
    }
    LLSSequenceFragment out;
    out.starts_with = LLSRole::Length;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        out.values.push_back(int_length(v[i], v[i + 1]));
        if (i + 2 < v.size()) out.values.push_back(int_sine(v[i], v[i + 1], v[i + 2]));
    }
    return out;
}

VertexChain angle_sail(const LatticePoint& Q) {
    if (Q.is_zero() || primitive(Q) != Q || !(Q.y > Q.x && Q.x >= 1))
        throw std::invalid_argument("angle not normalized");
    auto cf = cf_expand(make_rat(Q.y, Q.x), Parity::Odd);
    auto conv = convergent_pairs(cf);
    VertexChain chain;
    chain.vertices.push_back({1, 0});
    for (std::size_t k = 0; 2 * k < conv.size(); ++k)
        chain.vertices.push_back({conv[2 * k].q, conv[2 * k].p});
    return chain;
}

namespace {

// Tighten an integer interval [lo, hi] under the constraint coef*y >= rhs.
// Returns false if it empties.
bool clamp_interval(const Int& coef, const Int& rhs, Int& lo, Int& hi) {
    if (sgn(coef) > 0) {
        Int bound = -floor_div(-rhs, coef);  // ceil(rhs/coef)
        if (bound > lo) lo = bound;
    } else if (sgn(coef) < 0) {
        Int bound = floor_div(rhs, coef);
        if (bound < hi) hi = bound;
    } else if (sgn(rhs) > 0) {
        return false;
    }
    return lo <= hi;
}

std::vector<LatticePoint> convex_hull_ccw(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<LatticePoint> hull;
    auto sweep = [&hull](auto begin, auto end) {
        std::size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   sgn(det2(hull[hull.size() - 1] - hull[hull.size() - 2],
                            *it - hull[hull.size() - 1])) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();  // shared corner, re-added by the other sweep
    };
    sweep(pts.begin(), pts.end());
    sweep(pts.rbegin(), pts.rend());
    return hull;
}

}  // namespace

VertexChain angle_sail_bruteforce(const LatticePoint& Pdir, const LatticePoint& Qdir,
                                  const Int& bound) {
    if (Pdir.is_zero() || Qdir.is_zero())
        throw std::invalid_argument("angle_sail_bruteforce: zero ray direction");
    LatticePoint u = primitive(Pdir), w = primitive(Qdir);
    if (sgn(det2(u, w)) == 0) throw std::invalid_argument("collinear rays");
    if (sgn(det2(u, w)) < 0) std::swap(u, w);  // cone runs counterclockwise u -> w

    // Every sail vertex lies in the triangle O,u,w, so a box containing the
    // primitive ray points provably contains the whole chain.
    Int box = std::max(chebyshev_norm(u), chebyshev_norm(w));
    if (box > bound) throw std::invalid_argument("bound insufficient");

    // Per column, only the extreme cone points can be hull vertices.
    std::vector<LatticePoint> pts;
    for (Int x = -box; x <= box; ++x) {
        Int lo = -box, hi = box;
        if (!clamp_interval(u.x, u.y * x, lo, hi)) continue;   // det(u, p) >= 0
        if (!clamp_interval(-w.x, -w.y * x, lo, hi)) continue;  // det(p, w) >= 0
        if (sgn(x) == 0) {
            if (sgn(lo) == 0) lo = 1;
            if (sgn(hi) == 0) hi = -1;
            if (lo > hi) continue;
        }
        pts.push_back({x, lo});
        if (hi != lo) pts.push_back({x, hi});
    }

    auto hull = convex_hull_ccw(std::move(pts));
    if (hull.size() < 2) throw std::logic_error("angle_sail_bruteforce: degenerate hull");

    VertexChain chain;
    if (hull.size() == 2) {
        // All candidate points are collinear: the sail is the single edge u-w.
        chain.vertices = {u, w};
        return chain;
    }

    // Origin-facing edges of the hull are exactly those whose directed pair
    // turns clockwise around O; they form one contiguous run from w to u.
    std::size_t n = hull.size();
    std::vector<bool> near(n);
    std::size_t near_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        near[i] = sgn(det2(hull[i], hull[(i + 1) % n])) < 0;
        if (near[i]) ++near_count;
    }
    if (near_count == 0 || near_count == n)
        throw std::logic_error("angle_sail_bruteforce: malformed near side");
    std::size_t start = 0;
    while (start < n && !(near[start] && !near[(start + n - 1) % n])) ++start;
    if (start == n) throw std::logic_error("angle_sail_bruteforce: near side is not contiguous");
    std::vector<LatticePoint> path{hull[start]};
    for (std::size_t j = start; near[j]; j = (j + 1) % n) path.push_back(hull[(j + 1) % n]);
    std::reverse(path.begin(), path.end());
    if (!(path.front() == u && path.back() == w))
        throw std::logic_error("angle_sail_bruteforce: chain does not span the rays");
    chain.vertices = std::move(path);
    return chain;
}

}  // namespace gcf
