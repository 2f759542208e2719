#pragma once

#include <string>

#include "gcf/ints.hpp"
#include "gcf/lattice.hpp"
#include "gcf/surd.hpp"

namespace gcf {

// 2x2 integer matrix, row-major: rows (m11 m12) and (m21 m22).
//
// Convention note: throughout this project the text form "a c; b d" and the
// JSON form [[a,c],[b,d]] list rows, so a = m11, c = m12, b = m21, d = m22.
// The reduction module reads its a/b/c/d entries through exactly this map.
struct IntMatrix2 {
    Int m11, m12, m21, m22;

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    Int det() const { return m11 * m22 - m12 * m21; }
    Int trace() const { return m11 + m22; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    IntMatrix2 operator-() const { return {-m11, -m12, -m21, -m22}; }
    bool operator==(const IntMatrix2&) const = default;

    // Inverse of a unimodular matrix (|det| = 1 required).
    IntMatrix2 inverse() const;

    LatticePoint apply(const LatticePoint& v) const {
        return {m11 * v.x + m12 * v.y, m21 * v.x + m22 * v.y};
    }

    std::string str() const;  // "m11 m12; m21 m22"
};

// T^{-1} A T; T must be unimodular.
IntMatrix2 conjugate(const IntMatrix2& A, const IntMatrix2& T);

// Real distinct eigenvalues; for det = 1 this is trace^2 > 4, and the
// eigen directions are automatically irrational.
bool is_hyperbolic(const IntMatrix2& A);

// SL(2,Z) conjugacy classification by trace.
struct OperatorClass {
    enum class Tag { Hyperbolic, EllipticTrace0, EllipticTrace1, EllipticTraceMinus1, Parabolic };
    Tag tag;
    Int parabolic_n;     // valid for Tag::Parabolic; 0 iff A = sign*I
    int parabolic_sign;  // +1 or -1 for Tag::Parabolic

    bool operator==(const OperatorClass&) const = default;
};

OperatorClass classify(const IntMatrix2& A);

// For a parabolic A, a unimodular T with T^{-1} A T = sign*[[1,n],[0,1]].
IntMatrix2 parabolic_conjugator(const IntMatrix2& A);

// Exact eigenvalues and eigenline slopes (y/x) of a hyperbolic operator.
struct EigenData {
    QuadraticSurd slope_plus, slope_minus;
    QuadraticSurd eigenvalue_plus, eigenvalue_minus;
};

EigenData eigen_data(const IntMatrix2& A);

}  // namespace gcf
