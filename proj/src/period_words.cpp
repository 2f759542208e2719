#include "gcf/period_words.hpp"

#include <algorithm>
#include <stdexcept>

namespace gcf {

namespace {

void check_word(const std::vector<Int>& w) {
    if (w.empty()) throw std::invalid_argument("period word must be nonempty");
    for (const Int& v : w)
        if (v < 1) throw std::invalid_argument("period word entries must be >= 1");
}

std::vector<Int> rotated(const std::vector<Int>& w, std::size_t r) {
    std::vector<Int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + r) % w.size()];
    return out;
}

std::vector<Int> primitive_block(const std::vector<Int>& w) {
    for (std::size_t d = 1; d <= w.size(); ++d) {
        if (w.size() % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < w.size() && ok; ++i) ok = (w[i] == w[i % d]);
        if (ok) return std::vector<Int>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return w;
}

}  // namespace

CanonicalPeriod canonical_period(const std::vector<Int>& word) {
    check_word(word);
    std::vector<Int> best = word;
    const std::vector<Int> rev(word.rbegin(), word.rend());
    for (std::size_t r = 0; r < word.size(); ++r) {
        for (const std::vector<Int>* base : {&word, &rev}) {
            auto cand = rotated(*base, r);
            if (cand < best) best = std::move(cand);
        }
    }
    CanonicalPeriod out;
    out.minimal_word = primitive_block(best);
    out.word = std::move(best);
    return out;
}

bool period_equivalent(const std::vector<Int>& w1, const std::vector<Int>& w2) {
    if (w1.size() != w2.size()) return false;
    return canonical_period(w1).word == canonical_period(w2).word;
}

bool period_equivalent_primitive(const std::vector<Int>& w1, const std::vector<Int>& w2) {
    return canonical_period(w1).minimal_word == canonical_period(w2).minimal_word;
}

ComplexityResult min_complexity(const std::vector<Int>& word) {
    check_word(word);
    std::size_t n = word.size();
    bool even = (n % 2 == 0);
    if (even && n < 2) throw std::invalid_argument("min_complexity: even rule needs length >= 2");
    // Even length: n cyclic windows of length n-1. Odd length: double the
    // word and take its 2n windows of length 2n-1.
    std::vector<Int> base = word;
    if (!even) base.insert(base.end(), word.begin(), word.end());
    std::size_t windows = base.size();
    std::size_t width = base.size() - 1;

    ComplexityResult out;
    bool first = true;
    for (std::size_t s = 0; s < windows; ++s) {
        std::vector<Int> terms(width);
        for (std::size_t i = 0; i < width; ++i) terms[i] = base[(s + i) % base.size()];
        auto cf = ContinuedFraction::from_terms(std::move(terms));
        Int numerator = cf_eval(cf).get_num();
        if (first || numerator < out.value) {
            out.value = numerator;
            out.argmin_windows.clear();
            first = false;
        }
        if (numerator == out.value) out.argmin_windows.emplace_back(s, cf);
    }
    return out;
}

}  // namespace gcf
