#include <doctest.h>

#include "gcf/matrix2.hpp"
#include "test_helpers.hpp"

using namespace gcf;
using gcf::testing::mat;
using gcf::testing::rand_in;

TEST_CASE("matrix algebra basics") {
    IntMatrix2 fig1 = mat(7, 18, 5, 13);
    CHECK(fig1.trace() == 20);
    CHECK(fig1.det() == 1);
    CHECK(conjugate(fig1, IntMatrix2::identity()) == fig1);
    IntMatrix2 T = mat(2, 1, 1, 1);
    IntMatrix2 conj = conjugate(fig1, T);
    CHECK(conj.trace() == fig1.trace());
    CHECK(conj.det() == fig1.det());
    CHECK(T * T.inverse() == IntMatrix2::identity());
    CHECK_THROWS_AS(conjugate(fig1, mat(2, 0, 0, 2)), std::invalid_argument);
    IntMatrix2 flip = mat(1, 0, 0, -1);  // det -1 is fine for conjugation
    CHECK(conjugate(fig1, flip).trace() == 20);
}

TEST_CASE("is_hyperbolic") {
    CHECK(is_hyperbolic(mat(7, 18, 5, 13)));
    CHECK_FALSE(is_hyperbolic(mat(0, 1, -1, 0)));  // rotation, trace 0
    CHECK_FALSE(is_hyperbolic(mat(1, 1, 0, 1)));   // shear, trace 2
    CHECK_THROWS_AS(is_hyperbolic(mat(1, 0, 0, -1)), std::invalid_argument);
}

TEST_CASE("classify: elliptic and hyperbolic tags") {
    CHECK(classify(mat(0, 1, -1, 0)).tag == OperatorClass::Tag::EllipticTrace0);
    CHECK(classify(mat(1, 1, -1, 0)).tag == OperatorClass::Tag::EllipticTrace1);
    CHECK(classify(mat(0, 1, -1, -1)).tag == OperatorClass::Tag::EllipticTraceMinus1);
    CHECK(classify(mat(7, 18, 5, 13)).tag == OperatorClass::Tag::Hyperbolic);
    CHECK_THROWS_AS(classify(mat(1, 0, 0, 2)), std::invalid_argument);
}

TEST_CASE("classify: parabolic branch with explicit conjugator witness") {
    auto n5 = classify(mat(1, 5, 0, 1));
    CHECK(n5.tag == OperatorClass::Tag::Parabolic);
    CHECK(n5.parabolic_n == 5);
    CHECK(n5.parabolic_sign == 1);

    auto id = classify(mat(1, 0, 0, 1));
    CHECK(id.parabolic_n == 0);
    auto neg = classify(mat(-1, 0, 0, -1));
    CHECK(neg.parabolic_n == 0);
    CHECK(neg.parabolic_sign == -1);

    auto probe = classify(mat(3, -4, 1, -1));
    CHECK(probe.tag == OperatorClass::Tag::Parabolic);
    CHECK(probe.parabolic_sign == 1);
    CHECK((probe.parabolic_n == 1 || probe.parabolic_n == -1));

    // Every |trace|=2 operator in a small box: the constructed T is an exact
    // witness T^{-1} A T = sign*[[1,n],[0,1]].
    for (const auto& A : gcf::testing::sl2_box_bruteforce(4)) {
        Int t = A.trace();
        if (t != 2 && t != -2) continue;
        auto cls = classify(A);
        REQUIRE(cls.tag == OperatorClass::Tag::Parabolic);
        IntMatrix2 T = parabolic_conjugator(A);
        CHECK((T.det() == 1));
        IntMatrix2 normal{Int(cls.parabolic_sign), Int(cls.parabolic_sign) * cls.parabolic_n,
                          Int(0), Int(cls.parabolic_sign)};
        CHECK(conjugate(A, T) == normal);
    }
}

TEST_CASE("eigen_data fixtures") {
    // [[1,1],[1,2]]: eigenvalues (3 +- sqrt(5))/2
    EigenData g = eigen_data(mat(1, 1, 1, 2));
    CHECK(g.eigenvalue_plus == QuadraticSurd(3, 1, 2, 5));
    CHECK(g.eigenvalue_minus == QuadraticSurd(3, -1, 2, 5));
    // [[0,-1],[1,3]]: slopes -(3 +- sqrt(5))/2
    EigenData s = eigen_data(mat(0, -1, 1, 3));
    CHECK(s.eigenvalue_plus == QuadraticSurd(3, 1, 2, 5));
    CHECK(s.slope_plus == QuadraticSurd(-3, -1, 2, 5));
    CHECK(s.slope_minus == QuadraticSurd(-3, 1, 2, 5));
    // [[2,1],[1,1]]: trace 3, det 1
    EigenData t = eigen_data(mat(2, 1, 1, 1));
    CHECK(t.eigenvalue_plus == QuadraticSurd(3, 1, 2, 5));
    CHECK_THROWS_AS(eigen_data(mat(1, 1, 0, 1)), std::invalid_argument);
}

TEST_CASE("eigen slopes are exact roots of c s^2 + (a-d) s - b") {
    auto gen = gcf::testing::rng(41);
    int done = 0;
    while (done < 300) {
        IntMatrix2 A = gcf::testing::random_unimodular(gen, 7, 4);
        if (A.det() != 1) A = A * mat(0, 1, 1, 0);
        Int t = A.trace();
        if (t * t <= 4 || sgn(A.m12) == 0) continue;
        EigenData e = eigen_data(A);
        for (const auto& s : {e.slope_plus, e.slope_minus}) {
            auto lhs = s * s * make_rat(A.m12, 1) + s * make_rat(A.m11 - A.m22, 1) -
                       QuadraticSurd::from_rational(make_rat(A.m21, 1));
            CHECK(lhs.sign() == 0);
        }
        for (const auto& [mu, slope] :
             {std::pair{e.eigenvalue_plus, e.slope_plus},
              std::pair{e.eigenvalue_minus, e.slope_minus}}) {
            // Eigen equation on the vector (1, slope): row checks.
            auto r1 = QuadraticSurd::from_rational(make_rat(A.m11, 1)) +
                      slope * make_rat(A.m12, 1) - mu;
            auto r2 = QuadraticSurd::from_rational(make_rat(A.m21, 1)) +
                      slope * make_rat(A.m22, 1) - mu * slope;
            CHECK(r1.sign() == 0);
            CHECK(r2.sign() == 0);
        }
        // A and -A share eigenlines with negated eigenvalues.
        if ((-A).trace() * (-A).trace() > 4 && sgn(A.m12) != 0) {
            EigenData en = eigen_data(-A);
            bool same_pair = (en.slope_plus == e.slope_plus && en.slope_minus == e.slope_minus) ||
                             (en.slope_plus == e.slope_minus && en.slope_minus == e.slope_plus);
            CHECK(same_pair);
        }
        ++done;
    }
}
