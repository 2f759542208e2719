#pragma once

#include <compare>
#include <vector>

#include "gcf/ints.hpp"

namespace gcf {

// Exact quadratic surd (p + q*sqrt(D)) / r.
//
// Canonical form: r > 0; gcd(p,q,r) = 1; D squarefree; q == 0 implies D == 0.
// With that normalization structural equality is value equality, and all
// comparisons are exact integer sign tests.
class QuadraticSurd {
public:
    QuadraticSurd() : p_(0), q_(0), r_(1), D_(0) {}
    QuadraticSurd(Int p, Int q, Int r, Int D);

    static QuadraticSurd from_rational(const Rat& x);
    static QuadraticSurd sqrt_of(const Int& n);  // sqrt(n), n >= 0

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& D() const { return D_; }

    bool is_rational() const { return sgn(q_) == 0; }
    Rat to_rational() const;  // throws unless rational

    QuadraticSurd conjugate() const;  // sqrt(D) -> -sqrt(D)
    int sign() const;                 // exact
    Int floor() const;                // exact

    QuadraticSurd operator-() const;
    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator/(const QuadraticSurd& o) const;  // o must be nonzero

    QuadraticSurd operator+(const Rat& o) const { return *this + from_rational(o); }
    QuadraticSurd operator-(const Rat& o) const { return *this - from_rational(o); }
    QuadraticSurd operator*(const Rat& o) const { return *this * from_rational(o); }
    QuadraticSurd operator/(const Rat& o) const { return *this / from_rational(o); }

    bool operator==(const QuadraticSurd&) const = default;
    std::strong_ordering operator<=>(const QuadraticSurd& o) const;

    std::string str() const;  // "(p+q*sqrt(D))/r"

private:
    Int p_, q_, r_, D_;
    void normalize();
};

// Eventually periodic continued fraction of a quadratic irrational.
// The period is the primitive (shortest) repeating block and the preperiod
// is minimal for that period.
struct PeriodicCFExpansion {
    std::vector<Int> preperiod;
    std::vector<Int> period;
    bool operator==(const PeriodicCFExpansion&) const = default;
};

// Throws std::domain_error("not a quadratic irrational") on rational input.
PeriodicCFExpansion surd_cf_expand(const QuadraticSurd& x);

}  // namespace gcf
