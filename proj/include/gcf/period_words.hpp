#pragma once

#include <vector>

#include "gcf/continued_fraction.hpp"
#include "gcf/ints.hpp"

namespace gcf {

// Canonical representative of a cyclic word under rotation and reversal:
// the lexicographically least among all rotations of the word and of its
// reversal. minimal_word is the primitive block whose repetition gives word.
struct CanonicalPeriod {
    std::vector<Int> word;
    std::vector<Int> minimal_word;
    bool operator==(const CanonicalPeriod&) const = default;
};

CanonicalPeriod canonical_period(const std::vector<Int>& word);

bool period_equivalent(const std::vector<Int>& w1, const std::vector<Int>& w2);

// True when the two words generate the same bi-infinite periodic sequence up
// to shift and reversal (periods of different lengths compare via their
// primitive blocks).
bool period_equivalent_primitive(const std::vector<Int>& w1, const std::vector<Int>& w2);

// Minimal complexity of a period (the smallest lower-left entry among the
// reduced operators sharing it): the minimum numerator over the prescribed
// cyclic continued-fraction windows. Even length n uses the n windows of
// length n-1; odd length n uses the 2n windows of length 2n-1 of the doubled
// word.
struct ComplexityResult {
    Int value;
    // (starting index in the cyclic word, the window itself)
    std::vector<std::pair<std::size_t, ContinuedFraction>> argmin_windows;
};

ComplexityResult min_complexity(const std::vector<Int>& word);

}  // namespace gcf
