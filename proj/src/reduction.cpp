#include "gcf/reduction.hpp"

#include <stdexcept>

#include "gcf/continued_fraction.hpp"

namespace gcf {

bool is_reduced(const IntMatrix2& A) {
    if (A.det() != 1) throw std::invalid_argument("is_reduced: determinant must be 1");
    // Algorithm letters through the row layout: a = m11, b = m21, d = m22.
    return A.m22 > A.m21 && A.m21 >= A.m11 && sgn(A.m11) >= 0;
}

const char* step_label_name(StepLabel s) {
    switch (s) {
        case StepLabel::S1: return "S1";
        case StepLabel::S2: return "S2";
        case StepLabel::S3_1: return "S3_1";
        case StepLabel::S3_2_1: return "S3_2_1";
        case StepLabel::S3_2_2: return "S3_2_2";
        case StepLabel::S3_2_3: return "S3_2_3";
    }
    return "?";
}

namespace {

struct Reducer {
    ReductionTrace tr;
    IntMatrix2 state;

    explicit Reducer(const IntMatrix2& A) : state(A) {
        tr.input = A;
        tr.T = IntMatrix2::identity();
        tr.sign = 1;
    }

    void negate(StepLabel label) {
        state = -state;
        tr.sign = -tr.sign;
        tr.steps.push_back({label, true, IntMatrix2::identity(), state});
    }

    void apply(StepLabel label, const IntMatrix2& U, bool also_negate = false) {
        state = conjugate(state, U);
        if (also_negate) state = -state;
        tr.T = tr.T * U;
        if (also_negate) tr.sign = -tr.sign;
        tr.steps.push_back({label, also_negate, U, state});
    }
};

}  // namespace

ReductionTrace reduce(const IntMatrix2& A) {
    if (A.det() != 1) throw std::invalid_argument("reduce: determinant must be 1");
    Int t = A.trace();
    if (t * t <= 4) throw std::invalid_argument("reduce: operator is not hyperbolic");

    Reducer rd(A);
    for (int guard = 0;; ++guard) {
        if (guard > 10000) throw std::logic_error("reduce: step limit exceeded");
        IntMatrix2& M = rd.state;
        // Step 1: make b = m21 positive. b = 0 cannot occur (|trace| = 2).
        if (sgn(M.m21) < 0) rd.negate(StepLabel::S1);
        if (is_reduced(rd.state)) {
            rd.tr.steps.push_back(
                {StepLabel::S3_2_1, false, IntMatrix2::identity(), rd.state});
            break;
        }
        // Step 2: normalize a into [0, b) by conjugating with [[1,q],[0,1]].
        Int q = floor_div(M.m11, M.m21);
        if (sgn(q) != 0) rd.apply(StepLabel::S2, {1, q, 0, 1});

        if (M.m21 == 1) {
            // Step 3.1: a = 0, c = -1 forced; hyperbolicity gives |d| >= 3.
            // For d < 0 flip the sign and conjugate by diag(1,-1) to land on
            // the reduced form (0,-1;1,|d|).
            if (sgn(M.m22) < 0) rd.apply(StepLabel::S3_1, {1, 0, 0, -1}, true);
            continue;  // now reduced; the loop head records S3_2_1
        }
        if (M.m22 > M.m21) continue;  // Step 3.2.1: reduced, caught above
        if (M.m22 < -M.m21) {
            // Step 3.2.2: conjugate by [[-1,1],[0,1]] and negate;
            // afterwards d'' = -b - d > 0 with b unchanged.
            rd.apply(StepLabel::S3_2_2, {-1, 1, 0, 1}, true);
            continue;
        }
        // Step 3.2.3: |d| < b (equality is impossible at det 1 with b > 1).
        // Conjugating by [[0,-1],[-1,0]] swaps to (d, b; c, a); the measure
        // max(|b|,|d|) strictly decreases because |c| <= b - 1.
        if (abs(M.m22) == M.m21) throw std::logic_error("reduce: |d| = b with b > 1");
        Int measure_before = std::max(abs(M.m21), abs(M.m22));
        rd.apply(StepLabel::S3_2_3, {0, -1, -1, 0});
        Int measure_after = std::max(abs(M.m21), abs(M.m22));
        if (measure_after >= measure_before)
            throw std::logic_error("reduce: termination measure did not decrease");
    }
    rd.tr.final_state = rd.state;
    return rd.tr;
}

LLSPeriod period_of_reduced(const IntMatrix2& R) {
    if (!is_reduced(R)) throw std::invalid_argument("period_of_reduced: operator is not reduced");
    if (R.trace() < 3)
        throw std::invalid_argument("period_of_reduced: trace must be at least 3");
    LLSPeriod out;
    if (sgn(R.m11) == 0) {
        // b = 1 and c = -1 are forced by det 1; period (1, d-2).
        out.word = {Int(1), R.m22 - 2};
        return out;
    }
    auto cf = cf_expand(make_rat(R.m21, R.m11), Parity::Odd);
    out.word = cf.terms;
    out.word.push_back(floor_div(R.m22 - 1, R.m21));
    return out;
}

namespace {

// Shared tail of the period-to-operator constructions: from coprime b > a >= 1 (or
// a = b = 1) find the unique 0 < d <= b with ad - bc = 1, then shift by lambda.
IntMatrix2 family_member(const Int& a, const Int& b, const Int& lambda) {
    Int d;
    if (b == 1) {
        d = 1;
    } else {
        if (mpz_invert(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t()) == 0)
            throw std::logic_error("family_member: entries are not coprime");
        if (sgn(d) == 0) d = b;
    }
    Int c = (a * d - 1) / b;
    return {a, c + lambda * a, b, d + lambda * b};
}

void check_prefix(const std::vector<Int>& prefix) {
    if (prefix.size() % 2 == 0)
        throw std::invalid_argument("period prefix must have odd length");
    for (const Int& v : prefix)
        if (v < 1) throw std::invalid_argument("period prefix entries must be >= 1");
}

}  // namespace

IntMatrix2 construct_from_period(const std::vector<Int>& prefix, const Int& lambda) {
    check_prefix(prefix);
    if (lambda < 1) throw std::invalid_argument("construct_from_period: lambda must be >= 1");
    Rat x = cf_eval(ContinuedFraction::from_terms(prefix));
    return family_member(x.get_den(), x.get_num(), lambda);
}

IntMatrix2 construct_series_i(const Int& lambda) {
    if (lambda <= 2) throw std::invalid_argument("construct_series_i: lambda must exceed 2");
    return {0, -1, 1, 1 + lambda};
}

NegativeLambdaOperator construct_negative_lambda(const std::vector<Int>& prefix,
                                                 const Int& lambda) {
    if (sgn(lambda) >= 0)
        throw std::invalid_argument("construct_negative_lambda: lambda must be negative");
    NegativeLambdaOperator out;
    if (prefix.empty()) {
        if (lambda > -4)
            throw std::invalid_argument("construct_negative_lambda: a = 0 series needs lambda <= -4");
        out.op = {0, -1, 1, 1 + lambda};
        out.period.word = {Int(1), -lambda - 3};
        return out;
    }
    check_prefix(prefix);
    if (lambda > -3)
        throw std::invalid_argument("construct_negative_lambda: lambda must be <= -3");
    Rat x = cf_eval(ContinuedFraction::from_terms(prefix));
    Int b = x.get_num(), a = x.get_den();
    if (!(b > a && a >= 1))
        throw std::invalid_argument("construct_negative_lambda: prefix must evaluate to b/a > 1");
    out.op = family_member(a, b, lambda);
    auto cf = cf_expand(make_rat(b, b - a), Parity::Odd);
    out.period.word = cf.terms;
    out.period.word.push_back(-lambda - 2);
    return out;
}

LLSPeriod lls_period(const IntMatrix2& A) { return period_of_reduced(reduce(A).final_state); }

}  // namespace gcf
