#pragma once

#include <vector>

#include "gcf/ints.hpp"
#include "gcf/matrix2.hpp"

namespace gcf {

// One period of the (periodic) LLS-sequence of a hyperbolic operator.
// Periods produced from SL(2,Z) operators have even length; two periods are
// equivalent when one is a rotation of the other or of its reversal.
struct LLSPeriod {
    std::vector<Int> word;
    bool operator==(const LLSPeriod&) const = default;
};

// Reduced operator: in the row layout (a c; b d), d > b >= a >= 0.
bool is_reduced(const IntMatrix2& A);

enum class StepLabel { S1, S2, S3_1, S3_2_1, S3_2_2, S3_2_3 };

const char* step_label_name(StepLabel s);

struct ReductionStep {
    StepLabel label;
    bool negated;           // multiplied by -I at this step
    IntMatrix2 conjugator;  // identity when the step only negates
    IntMatrix2 state;       // state after the step
};

// Exact record of a Gauss reduction run: sign * T^{-1} * A * T = final_state
// holds at every step end, and final_state is reduced.
struct ReductionTrace {
    IntMatrix2 input;
    std::vector<ReductionStep> steps;
    IntMatrix2 T;
    int sign = 1;
    IntMatrix2 final_state;
};

// Gauss reduction of a hyperbolic SL(2,Z) operator (det 1, |trace| >= 3).
ReductionTrace reduce(const IntMatrix2& A);

// Period extraction from a reduced operator with trace >= 3:
// a = 0 (forcing b = 1, c = -1) gives (1, d-2); otherwise with
// b/a = [a0:a1;...;a_{2n}] odd, the period is (a0,...,a_{2n}, floor((d-1)/b)).
LLSPeriod period_of_reduced(const IntMatrix2& R);

// Operator family of the period (prefix..., lambda) for lambda >= 1: from
// b/a = [prefix] odd and the unique 0 < d <= b with ad - bc = 1, returns
// [[a, c + lambda*a], [b, d + lambda*b]]. period_of_reduced gives back
// exactly prefix + (lambda).
IntMatrix2 construct_from_period(const std::vector<Int>& prefix, const Int& lambda);

// The a = 0 family [[0,-1],[1,1+lambda]] for lambda > 2; period (1, lambda-1).
IntMatrix2 construct_series_i(const Int& lambda);

// Negative-lambda families. Empty prefix selects the a = 0 series
// (lambda <= -4, period (1,|lambda|-3)); otherwise the prefix must evaluate
// to b/a with b > a >= 1 and lambda <= -3, and the period is the odd
// expansion of b/(b-a) extended by |lambda|-2.
struct NegativeLambdaOperator {
    IntMatrix2 op;
    LLSPeriod period;
};
NegativeLambdaOperator construct_negative_lambda(const std::vector<Int>& prefix,
                                                 const Int& lambda);

// Period of the LLS-sequence of a hyperbolic operator: reduce, then extract.
LLSPeriod lls_period(const IntMatrix2& A);

}  // namespace gcf
