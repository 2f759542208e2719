#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gcf {

// All structural data in this library is exact: arbitrary-precision integers
// (GMP) and rationals. Floating point appears only in the Gauss-Kuzmin
// probability and in SVG coordinates.
using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

// Floor division (round toward -infinity); denominator must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Floor of sqrt(x); x must be nonnegative.
inline Int isqrt(const Int& x) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& x) {
    return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline std::int64_t to_int64(const Int& x) {
    if (!x.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
    return static_cast<std::int64_t>(x.get_si());
}

// Rational with the given numerator/denominator, stored reduced, den > 0.
inline Rat make_rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace gcf
