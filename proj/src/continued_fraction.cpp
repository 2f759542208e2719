#include "gcf/continued_fraction.hpp"

#include <stdexcept>

namespace gcf {

ContinuedFraction ContinuedFraction::from_terms(std::vector<Int> t) {
    if (t.empty()) throw std::invalid_argument("continued fraction must have at least one term");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (t[i] < 1)
            throw std::invalid_argument("continued fraction terms after a0 must be >= 1");
    return ContinuedFraction{std::move(t)};
}

Rat cf_eval(const ContinuedFraction& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("cf_eval: empty continued fraction");
    // Fold from the tail; tails are >= 1, so no division by zero can occur.
    Rat x(cf.terms.back());
    for (std::size_t i = cf.terms.size() - 1; i-- > 0;) {
        x = Rat(cf.terms[i]) + 1 / x;
    }
    return x;
}

ContinuedFraction cf_expand(const Rat& x, Parity parity) {
    // Canonical floor-based expansion: remainder always in [0,1), so the
    // result is valid for negative and integer rationals as well.
    std::vector<Int> terms;
    Int num = x.get_num(), den = x.get_den();
    while (true) {
        Int a = floor_div(num, den);
        terms.push_back(a);
        Int rem = num - a * den;  // in [0, den)
        if (sgn(rem) == 0) break;
        num = den;
        den = rem;
    }
    // Canonical form never ends in ...;1 except for the single-term [1],
    // and never ends in a0 alone unless x is an integer.
    bool want_even = (parity == Parity::Even);
    bool have_even = (terms.size() % 2 == 0);
    if (want_even != have_even) {
        if (terms.size() >= 2 && terms.back() == 1) {
            terms.pop_back();
            terms.back() += 1;
        } else {
            terms.back() -= 1;
            terms.push_back(1);
        }
    }
    return ContinuedFraction::from_terms(std::move(terms));
}

std::vector<Convergent> convergent_pairs(const ContinuedFraction& cf) {
    std::vector<Convergent> out;
    out.reserve(cf.terms.size());
    Int p_prev2 = 0, q_prev2 = 1;  // p_{-2}, q_{-2}
    Int p_prev1 = 1, q_prev1 = 0;  // p_{-1}, q_{-1}
    for (const Int& a : cf.terms) {
        Int p = a * p_prev1 + p_prev2;
        Int q = a * q_prev1 + q_prev2;
        out.push_back({p, q});
        p_prev2 = p_prev1;
        q_prev2 = q_prev1;
        p_prev1 = p;
        q_prev1 = q;
    }
    return out;
}

std::vector<Rat> convergents(const ContinuedFraction& cf) {
    std::vector<Rat> out;
    for (const auto& [p, q] : convergent_pairs(cf)) out.push_back(make_rat(p, q));
    return out;
}

std::string cf_notation(const ContinuedFraction& cf) {
    std::string s = "[" + cf.terms[0].get_str();
    for (std::size_t i = 1; i < cf.terms.size(); ++i) {
        s += (i == 1 ? ":" : ";");
        s += cf.terms[i].get_str();
    }
    s += "]";
    return s;
}

}  // namespace gcf
