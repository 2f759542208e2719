#include "gcf/matrix2.hpp"

#include <stdexcept>

namespace gcf {

IntMatrix2 IntMatrix2::inverse() const {
    Int d = det();
    if (d == 1) return {m22, -m12, -m21, m11};
    if (d == -1) return {-m22, m12, m21, -m11};
    throw std::invalid_argument("inverse: matrix is not unimodular");
}

std::string IntMatrix2::str() const {
    return m11.get_str() + " " + m12.get_str() + "; " + m21.get_str() + " " + m22.get_str();
}

IntMatrix2 conjugate(const IntMatrix2& A, const IntMatrix2& T) {
    Int d = T.det();
    if (d != 1 && d != -1) throw std::invalid_argument("conjugate: T is not unimodular");
    return T.inverse() * A * T;
}

bool is_hyperbolic(const IntMatrix2& A) {
    if (A.det() != 1) throw std::invalid_argument("is_hyperbolic: determinant must be 1");
    Int t = A.trace();
    return t * t > 4;
}

OperatorClass classify(const IntMatrix2& A) {
    Int d = A.det();
    if (d != 1) throw std::invalid_argument("classify: determinant must be 1");
    Int t = A.trace();
    if (t * t > 4) return {OperatorClass::Tag::Hyperbolic, 0, 0};
    if (t == 0) return {OperatorClass::Tag::EllipticTrace0, 0, 0};
    if (t == 1) return {OperatorClass::Tag::EllipticTrace1, 0, 0};
    if (t == -1) return {OperatorClass::Tag::EllipticTraceMinus1, 0, 0};
    // |trace| = 2: parabolic. A - sign*I has determinant 0 and trace 0.
    int sign = (t == 2) ? 1 : -1;
    IntMatrix2 M = {A.m11 - sign, A.m12, A.m21, A.m22 - sign};
    if (M == IntMatrix2{0, 0, 0, 0}) return {OperatorClass::Tag::Parabolic, 0, sign};
    IntMatrix2 T = parabolic_conjugator(A);
    IntMatrix2 N = conjugate(A, T);
    Int n = sign * N.m12;
    return {OperatorClass::Tag::Parabolic, n, sign};
}

IntMatrix2 parabolic_conjugator(const IntMatrix2& A) {
    Int t = A.trace();
    if (t != 2 && t != -2) throw std::invalid_argument("parabolic_conjugator: |trace| != 2");
    int sign = (t == 2) ? 1 : -1;
    IntMatrix2 M = {A.m11 - sign, A.m12, A.m21, A.m22 - sign};
    if (M == IntMatrix2{0, 0, 0, 0}) return IntMatrix2::identity();
    // Primitive kernel vector v of the rank-1 matrix M, extended to a
    // unimodular basis T = (v | w) with det T = 1.
    LatticePoint v = (sgn(M.m11) != 0 || sgn(M.m12) != 0) ? LatticePoint{M.m12, -M.m11}
                                                          : LatticePoint{M.m22, -M.m21};
    v = primitive(v);
    Int wx, wy, g;
    mpz_gcdext(g.get_mpz_t(), wy.get_mpz_t(), wx.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    // g = 1 = v.x*wy + v.y*wx; we need det(v|w) = v.x*wy - v.y*wx = 1.
    wx = -wx;
    return {v.x, wx, v.y, wy};
}

EigenData eigen_data(const IntMatrix2& A) {
    if (!is_hyperbolic(A)) throw std::invalid_argument("eigen_data: operator is not hyperbolic");
    Int t = A.trace();
    Int disc = t * t - 4;
    // c = m12 is nonzero for hyperbolic det-1 operators (c = 0 forces |trace| = 2).
    if (sgn(A.m12) == 0) throw std::logic_error("eigen_data: unexpected zero corner entry");
    QuadraticSurd ev_plus(t, 1, 2, disc);
    QuadraticSurd ev_minus(t, -1, 2, disc);
    // Slope of the eigenline for eigenvalue mu: (mu - m11) / m12.
    QuadraticSurd sl_plus(t - 2 * A.m11, 1, 2 * A.m12, disc);
    QuadraticSurd sl_minus(t - 2 * A.m11, -1, 2 * A.m12, disc);
    return {sl_plus, sl_minus, ev_plus, ev_minus};
}

}  // namespace gcf
