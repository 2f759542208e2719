#include "gcf/surd.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace gcf {

QuadraticSurd::QuadraticSurd(Int p, Int q, Int r, Int D)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), D_(std::move(D)) {
    normalize();
}

void QuadraticSurd::normalize() {
    if (sgn(r_) == 0) throw std::invalid_argument("QuadraticSurd: zero denominator");
    if (sgn(D_) < 0) throw std::invalid_argument("QuadraticSurd: negative radicand");
    if (sgn(q_) == 0 || sgn(D_) == 0) {
        q_ = 0;
        D_ = 0;
    } else {
        // Pull square factors out of D so that D is squarefree and equal
        // values share one representation.
        for (Int d = 2; d * d <= D_; ++d) {
            Int dd = d * d;
            while (D_ % dd == 0) {
                D_ /= dd;
                q_ *= d;
            }
        }
        if (D_ == 1) {  // the radical collapsed to an integer
            p_ += q_;
            q_ = 0;
            D_ = 0;
        }
    }
    if (sgn(r_) < 0) {
        p_ = -p_;
        q_ = -q_;
        r_ = -r_;
    }
    Int g = gcd(gcd(p_, q_), r_);
    if (g > 1) {
        p_ /= g;
        q_ /= g;
        r_ /= g;
    }
}

QuadraticSurd QuadraticSurd::from_rational(const Rat& x) {
    return QuadraticSurd(x.get_num(), 0, x.get_den(), 0);
}

QuadraticSurd QuadraticSurd::sqrt_of(const Int& n) {
    if (sgn(n) < 0) throw std::invalid_argument("sqrt_of: negative argument");
    return QuadraticSurd(0, 1, 1, n);
}

Rat QuadraticSurd::to_rational() const {
    if (!is_rational()) throw std::domain_error("surd is irrational");
    return make_rat(p_, r_);
}

QuadraticSurd QuadraticSurd::conjugate() const { return QuadraticSurd(p_, -q_, r_, D_); }

int QuadraticSurd::sign() const {
    if (sgn(q_) == 0) return sgn(p_);
    if (sgn(p_) == 0) return sgn(q_);
    if (sgn(p_) == sgn(q_)) return sgn(p_);
    // Opposite signs: compare p^2 with q^2 D. Equality cannot happen for a
    // squarefree D >= 2.
    return p_ * p_ > q_ * q_ * D_ ? sgn(p_) : sgn(q_);
}

Int QuadraticSurd::floor() const {
    if (sgn(q_) == 0) return floor_div(p_, r_);
    // f = floor(q*sqrt(D)), strict on both sides since q*sqrt(D) is irrational.
    Int t = q_ * q_ * D_;
    Int f = sgn(q_) > 0 ? isqrt(t) : -isqrt(t) - 1;
    return floor_div(p_ + f, r_);
}

namespace {
// Common radicand for a binary operation; mixing two distinct irrational
// fields is a logic error (never produced by this library).
const Int& common_d(const QuadraticSurd& a, const QuadraticSurd& b) {
    if (a.is_rational()) return b.D();
    if (b.is_rational()) return a.D();
    if (a.D() != b.D()) throw std::logic_error("QuadraticSurd: mixed radicands");
    return a.D();
}
}  // namespace

QuadraticSurd QuadraticSurd::operator-() const { return QuadraticSurd(-p_, -q_, r_, D_); }

QuadraticSurd QuadraticSurd::operator+(const QuadraticSurd& o) const {
    const Int& D = common_d(*this, o);
    return QuadraticSurd(p_ * o.r_ + o.p_ * r_, q_ * o.r_ + o.q_ * r_, r_ * o.r_, D);
}

QuadraticSurd QuadraticSurd::operator-(const QuadraticSurd& o) const { return *this + (-o); }

QuadraticSurd QuadraticSurd::operator*(const QuadraticSurd& o) const {
    const Int& D = common_d(*this, o);
    return QuadraticSurd(p_ * o.p_ + q_ * o.q_ * D, p_ * o.q_ + q_ * o.p_, r_ * o.r_, D);
}

QuadraticSurd QuadraticSurd::operator/(const QuadraticSurd& o) const {
    if (o.sign() == 0) throw std::domain_error("QuadraticSurd: division by zero");
    const Int& D = common_d(*this, o);
    // 1/((p + q sqrt(D))/r) = r (p - q sqrt(D)) / (p^2 - q^2 D)
    Int norm = o.p_ * o.p_ - o.q_ * o.q_ * D;
    QuadraticSurd inv(o.r_ * o.p_, -o.r_ * o.q_, norm, D);
    return *this * inv;
}

std::strong_ordering QuadraticSurd::operator<=>(const QuadraticSurd& o) const {
    int s = (*this - o).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string QuadraticSurd::str() const {
    if (is_rational()) return p_.get_str() + (r_ == 1 ? "" : "/" + r_.get_str());
    std::string s = "(" + p_.get_str();
    s += (sgn(q_) < 0 ? " - " : " + ");
    Int aq = abs(q_);
    if (aq != 1) s += aq.get_str() + "*";
    s += "sqrt(" + D_.get_str() + "))";
    if (r_ != 1) s += "/" + r_.get_str();
    return s;
}

PeriodicCFExpansion surd_cf_expand(const QuadraticSurd& x) {
    if (x.is_rational()) throw std::domain_error("not a quadratic irrational");
    // Iterate a_k = floor(x_k), x_{k+1} = 1/(x_k - a_k) in exact arithmetic.
    // The normalized state (p,q,r) repeats (classical), which detects the cycle.
    std::map<std::tuple<Int, Int, Int>, std::size_t> seen;
    std::vector<Int> terms;
    QuadraticSurd cur = x;
    std::size_t start = 0;
    for (std::size_t iter = 0;; ++iter) {
        if (iter > 2'000'000) throw std::runtime_error("surd_cf_expand: no cycle found");
        auto key = std::make_tuple(cur.p(), cur.q(), cur.r());
        auto [it, inserted] = seen.emplace(std::move(key), terms.size());
        if (!inserted) {
            start = it->second;
            break;
        }
        Int a = cur.floor();
        terms.push_back(a);
        cur = QuadraticSurd::from_rational(Rat(1)) / (cur - Rat(a));
    }
    PeriodicCFExpansion out;
    out.preperiod.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(start));
    out.period.assign(terms.begin() + static_cast<std::ptrdiff_t>(start), terms.end());

    // Shrink the period to its primitive root.
    for (std::size_t d = 1; d <= out.period.size(); ++d) {
        if (out.period.size() % d != 0) continue;
        bool ok = true;
        for (std::size_t i = d; i < out.period.size() && ok; ++i)
            ok = (out.period[i] == out.period[i % d]);
        if (ok) {
            out.period.resize(d);
            break;
        }
    }
    // Minimize the preperiod by rotating the period under matching tails.
    while (!out.preperiod.empty() && out.preperiod.back() == out.period.back()) {
        out.period.insert(out.period.begin(), out.period.back());
        out.period.pop_back();
        out.preperiod.pop_back();
    }
    return out;
}

}  // namespace gcf
