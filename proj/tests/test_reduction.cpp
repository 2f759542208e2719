#include <doctest.h>

#include "gcf/period_words.hpp"
#include "gcf/reduction.hpp"
#include "gcf/sails.hpp"
#include "gcf/surd.hpp"
#include "test_helpers.hpp"

using namespace gcf;
using gcf::testing::mat;
using gcf::testing::rand_in;
using gcf::testing::word;

TEST_CASE("is_reduced fixtures") {
    CHECK(is_reduced(mat(1, 2, 1, 3)));
    CHECK_FALSE(is_reduced(mat(7, 18, 5, 13)));  // b = 5 < a = 7
    CHECK(is_reduced(mat(0, -1, 1, 4)));
    CHECK_FALSE(is_reduced(mat(0, 1, -1, 4)));
    CHECK_THROWS_AS(is_reduced(mat(1, 0, 0, -1)), std::invalid_argument);
}

TEST_CASE("reduce fixtures") {
    // Already reduced: identity trace.
    ReductionTrace t1 = reduce(mat(1, 2, 1, 3));
    CHECK(t1.final_state == mat(1, 2, 1, 3));
    CHECK(t1.T == IntMatrix2::identity());
    CHECK(t1.sign == 1);
    REQUIRE(t1.steps.size() == 1);
    CHECK(t1.steps[0].label == StepLabel::S3_2_1);

    // One sign flip via Step 1, then the 3.1 normalization.
    ReductionTrace t2 = reduce(mat(0, 1, -1, 4));
    CHECK(t2.final_state == mat(0, -1, 1, 4));
    CHECK(conjugate(mat(0, 1, -1, 4), t2.T) ==
          (t2.sign == 1 ? t2.final_state : -t2.final_state));

    // Figure-1 operator lands on (2,7;5,18), trace 20.
    ReductionTrace t3 = reduce(mat(7, 18, 5, 13));
    CHECK(t3.final_state == mat(2, 7, 5, 18));
    CHECK(t3.final_state.trace() == 20);

    CHECK_THROWS_AS(reduce(mat(1, 1, 0, 1)), std::invalid_argument);   // not hyperbolic
    CHECK_THROWS_AS(reduce(mat(1, 0, 0, -1)), std::invalid_argument);  // det -1
}

TEST_CASE("reduce: conjugacy exactness and trace bookkeeping on random operators") {
    auto gen = gcf::testing::rng(43);
    int done = 0;
    while (done < 1500) {
        IntMatrix2 A{Int(rand_in(gen, -50, 50)), Int(rand_in(gen, -50, 50)),
                     Int(rand_in(gen, -50, 50)), Int(rand_in(gen, -50, 50))};
        if (A.det() != 1) continue;
        Int t = A.trace();
        if (t * t <= 4) continue;
        ReductionTrace tr = reduce(A);
        CHECK(is_reduced(tr.final_state));
        Int dT = tr.T.det();
        CHECK((dT == 1 || dT == -1));
        IntMatrix2 lhs = conjugate(A, tr.T);
        if (tr.sign == -1) lhs = -lhs;
        CHECK(lhs == tr.final_state);
        // Every intermediate state satisfies the same invariant.
        IntMatrix2 Tacc = IntMatrix2::identity();
        int sign = 1;
        for (const auto& step : tr.steps) {
            if (step.label == StepLabel::S1) {
                sign = -sign;
            } else if (!(step.conjugator == IntMatrix2::identity())) {
                Tacc = Tacc * step.conjugator;
                if (step.negated) sign = -sign;
            }
            IntMatrix2 s = conjugate(A, Tacc);
            if (sign == -1) s = -s;
            CHECK(s == step.state);
        }
        ++done;
    }
}

TEST_CASE("period_of_reduced fixtures") {
    CHECK(period_of_reduced(mat(0, -1, 1, 4)).word == word({1, 2}));
    CHECK(period_of_reduced(mat(2, 7, 5, 18)).word == word({2, 1, 1, 3}));
    CHECK(period_of_reduced(mat(1, 2, 1, 3)).word == word({1, 2}));
    CHECK_THROWS_AS(period_of_reduced(mat(7, 18, 5, 13)), std::invalid_argument);
}

TEST_CASE("construct_from_period fixtures") {
    CHECK(construct_from_period(word({2, 1, 1}), 3) == mat(2, 7, 5, 18));
    CHECK(construct_from_period(word({1}), 1) == mat(1, 1, 1, 2));
    CHECK_THROWS_AS(construct_from_period(word({2, 1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_from_period(word({2, 0, 1}), 1), std::invalid_argument);
    CHECK_THROWS_AS(construct_from_period(word({2, 1, 1}), 0), std::invalid_argument);
}

TEST_CASE("construct_series_i fixtures") {
    CHECK(construct_series_i(3) == mat(0, -1, 1, 4));
    CHECK(period_of_reduced(construct_series_i(3)).word == word({1, 2}));
    CHECK(construct_series_i(4) == mat(0, -1, 1, 5));
    CHECK(period_of_reduced(construct_series_i(4)).word == word({1, 3}));
    CHECK_THROWS_AS(construct_series_i(2), std::invalid_argument);
    // lambda = 2 sits outside the construction range; the matrix itself still
    // has sail period (1,1) by the oracle.
    CHECK(period_equivalent_primitive(sail_word_bruteforce(mat(0, -1, 1, 3)).word,
                                      word({1, 1})));
}

TEST_CASE("construction/extraction round trip is the identity for small prefixes") {
    std::vector<std::vector<Int>> prefixes;
    for (long a = 1; a <= 4; ++a) prefixes.push_back(word({a}));
    for (long a = 1; a <= 4; ++a)
        for (long b = 1; b <= 4; ++b)
            for (long c = 1; c <= 4; ++c) prefixes.push_back(word({a, b, c}));
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b)
            for (long c = 1; c <= 3; ++c)
                for (long d = 1; d <= 3; ++d)
                    for (long e = 1; e <= 3; ++e) prefixes.push_back(word({a, b, c, d, e}));
    for (const auto& prefix : prefixes) {
        for (long lam = 1; lam <= 4; ++lam) {
            IntMatrix2 A = construct_from_period(prefix, lam);
            CHECK(is_reduced(A));
            auto expected = prefix;
            expected.emplace_back(lam);
            CHECK(period_of_reduced(A).word == expected);
            CHECK(lls_period(A).word == expected);
        }
    }
}

TEST_CASE("construct_negative_lambda fixtures and oracle agreement") {
    auto a0 = construct_negative_lambda({}, -4);
    CHECK(a0.op == mat(0, -1, 1, -3));
    CHECK(a0.period.word == word({1, 1}));
    CHECK(period_equivalent_primitive(lls_period(a0.op).word, a0.period.word));

    auto gen511 = construct_negative_lambda(word({2, 1, 1}), -3);
    CHECK(gen511.period.word == word({1, 1, 2, 1}));
    CHECK(period_equivalent_primitive(lls_period(gen511.op).word, gen511.period.word));
    CHECK(period_equivalent_primitive(sail_word_bruteforce(gen511.op).word,
                                      gen511.period.word));

    CHECK_THROWS_AS(construct_negative_lambda({}, -3), std::invalid_argument);
    CHECK_THROWS_AS(construct_negative_lambda(word({2, 1, 1}), -2), std::invalid_argument);
    CHECK_THROWS_AS(construct_negative_lambda(word({1}), -5), std::invalid_argument);
    CHECK_THROWS_AS(construct_negative_lambda(word({2, 1, 1}), 3), std::invalid_argument);

    // Sweep: the remark's period matches both the reduction pipeline and the
    // geometric oracle.
    for (long lam = -3; lam >= -8; --lam) {
        for (const auto& prefix : {word({2, 1, 1}), word({3, 1, 2}), word({1, 2, 1})}) {
            auto res = construct_negative_lambda(prefix, lam);
            CHECK(period_equivalent_primitive(lls_period(res.op).word, res.period.word));
            CHECK(period_equivalent_primitive(sail_word_bruteforce(res.op).word,
                                              res.period.word));
        }
        auto res0 = construct_negative_lambda({}, std::min<long>(lam, -4));
        CHECK(period_equivalent_primitive(lls_period(res0.op).word, res0.period.word));
    }
}

TEST_CASE("lls_period fixtures") {
    CHECK(period_equivalent_primitive(lls_period(mat(7, 18, 5, 13)).word, word({2, 1, 1, 3})));
    CHECK(period_equivalent_primitive(lls_period(mat(2, 1, 1, 1)).word, word({1, 1})));
    CHECK(period_equivalent_primitive(lls_period(mat(0, 1, -1, 10)).word, word({1, 8})));
}

TEST_CASE("period is invariant under conjugation and negation") {
    auto gen = gcf::testing::rng(47);
    int done = 0;
    while (done < 400) {
        IntMatrix2 A{Int(rand_in(gen, -20, 20)), Int(rand_in(gen, -20, 20)),
                     Int(rand_in(gen, -20, 20)), Int(rand_in(gen, -20, 20))};
        if (A.det() != 1) continue;
        Int t = A.trace();
        if (t * t <= 4) continue;
        auto base = lls_period(A).word;
        CHECK(period_equivalent_primitive(base, lls_period(-A).word));
        IntMatrix2 T = gcf::testing::random_unimodular(gen, 6, 50);
        CHECK(period_equivalent_primitive(base, lls_period(conjugate(A, T)).word));
        ++done;
    }
}

TEST_CASE("triple-oracle agreement on a small exhaustive box") {
    for (const auto& A : gcf::testing::sl2_box_bruteforce(6)) {
        Int t = A.trace();
        if (t * t <= 4) continue;
        auto algebraic = lls_period(A).word;
        auto geometric = sail_word_bruteforce(A).word;
        CHECK(period_equivalent_primitive(algebraic, geometric));
        auto expansion = surd_cf_expand(eigen_data(A).slope_plus);
        CHECK(canonical_period(expansion.period).minimal_word ==
              canonical_period(algebraic).minimal_word);
    }
}
