#include "gcf/gauss_kuzmin.hpp"

#include <cmath>
#include <stdexcept>

#include "gcf/continued_fraction.hpp"

namespace gcf {

double gk_probability(const std::vector<Int>& pattern) {
    if (pattern.empty() || pattern.size() % 2 == 0)
        throw std::invalid_argument("gk_probability: pattern length must be odd");
    for (const Int& a : pattern)
        if (a < 1) throw std::invalid_argument("gk_probability: terms must be >= 1");

    auto cf1 = ContinuedFraction::from_terms(pattern);
    auto terms2 = pattern;
    terms2.back() += 1;
    auto cf2 = ContinuedFraction::from_terms(std::move(terms2));

    Rat a1 = cf_eval(cf1);
    Rat a2 = cf_eval(cf2);
    Rat ratio = ((a1 + 1) * a2) / (a1 * (a2 + 1));
    return std::log2(ratio.get_d());
}

}  // namespace gcf
