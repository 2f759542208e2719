#pragma once

#include <string>
#include <vector>

#include "gcf/ints.hpp"

namespace gcf {

enum class Parity { Even, Odd };

// Finite ordinary continued fraction [a0:a1;...;an].
// a0 may be any integer, a_i >= 1 for i >= 1; the empty fraction is invalid.
struct ContinuedFraction {
    std::vector<Int> terms;

    static ContinuedFraction from_terms(std::vector<Int> t);

    std::size_t size() const { return terms.size(); }
    Parity parity() const { return terms.size() % 2 == 0 ? Parity::Even : Parity::Odd; }
    bool operator==(const ContinuedFraction&) const = default;
};

// Exact value a0 + 1/(a1 + 1/(...)).
Rat cf_eval(const ContinuedFraction& cf);

// The unique expansion of x with the requested number-of-terms parity.
// Convention: a0 = floor(x), remainder in [0,1); integers expand to [x] (odd)
// and [x-1;1] (even). The two parities differ exactly by the final
// [...;an] <-> [...;an-1;1] rewrite.
ContinuedFraction cf_expand(const Rat& x, Parity parity);

struct Convergent {
    Int p, q;  // p/q, q >= 1
    bool operator==(const Convergent&) const = default;
};

// Convergents p_k/q_k via the standard recurrence with seeds
// p_{-1}=1, q_{-1}=0, p_{-2}=0, q_{-2}=1.
std::vector<Convergent> convergent_pairs(const ContinuedFraction& cf);
std::vector<Rat> convergents(const ContinuedFraction& cf);

// Notation string "[a0:a1;a2;...]"; a single term renders as "[a0]".
std::string cf_notation(const ContinuedFraction& cf);

}  // namespace gcf
