#include "gcf/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gcf/census_kernel.hpp"
#include "gcf/continued_fraction.hpp"
#include "gcf/gauss_kuzmin.hpp"
#include "gcf/period_words.hpp"

namespace gcf {

BucketKey census_label_of_reduced(const IntMatrix2& R) {
    BucketKey label;
    for (const Int& v : period_of_reduced(R).word) label.push_back(to_int64(v));
    return label;
}

std::int64_t bucket_trace(const BucketKey& label) {
    if (label.size() < 2) throw std::invalid_argument("bucket_trace: label too short");
    std::vector<Int> prefix(label.begin(), label.end() - 1);
    Rat x = cf_eval(ContinuedFraction::from_terms(prefix));
    Int b = x.get_num(), a = x.get_den();
    Int d0;
    if (b == 1) {
        d0 = 1;
    } else {
        mpz_invert(d0.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (sgn(d0) == 0) d0 = b;
    }
    // trace of [[a, c + lambda a],[b, d0 + lambda b]]
    return to_int64(a + d0 + Int(label.back()) * b);
}

std::map<BucketKey, std::uint64_t> CensusReport::cyclic_class_counts() const {
    std::map<BucketKey, std::uint64_t> merged;
    for (const auto& [label, count] : counts) {
        std::vector<Int> w(label.begin(), label.end());
        auto canon = canonical_period(w).word;
        BucketKey key;
        for (const Int& v : canon) key.push_back(to_int64(v));
        merged[key] += count;
    }
    return merged;
}

namespace {

std::string period_string(const BucketKey& label) {
    std::string s = "(";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(label[i]);
    }
    s += ")";
    return s;
}

nlohmann::json label_json(const BucketKey& label) { return nlohmann::json(label); }

}  // namespace

std::string CensusReport::to_csv() const {
    // Rows sorted by (trace, label) for reproducible output.
    std::vector<std::pair<std::int64_t, const BucketKey*>> order;
    for (const auto& [label, count] : counts) order.emplace_back(bucket_trace(label), &label);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return *a.second < *b.second;
    });
    std::ostringstream out;
    out << "period,trace,count,N\n";
    for (const auto& [trace, label] : order)
        out << '"' << period_string(*label) << "\"," << trace << ',' << counts.at(*label) << ','
            << N << '\n';
    return out.str();
}

std::string CensusReport::to_json() const {
    nlohmann::json j;
    j["N"] = N;
    if (trace_cap)
        j["trace_cap"] = *trace_cap;
    else
        j["trace_cap"] = nullptr;
    j["matrices_scanned"] = matrices_scanned;
    j["hyperbolic_count"] = hyperbolic_count;
    auto buckets = nlohmann::json::array();
    for (const auto& [label, count] : counts) {
        buckets.push_back({{"period", label_json(label)},
                           {"trace", bucket_trace(label)},
                           {"count", count}});
    }
    j["buckets"] = buckets;
    auto classes = nlohmann::json::array();
    for (const auto& [label, count] : cyclic_class_counts())
        classes.push_back({{"period", label_json(label)}, {"count", count}});
    j["cyclic_classes"] = classes;
    return j.dump(2);
}

std::uint64_t enumerate_sl2(std::int64_t N,
                            const std::function<void(const IntMatrix2&)>& visit) {
    if (N < 1) throw std::invalid_argument("enumerate_sl2: N must be >= 1");
    std::uint64_t seen = 0;
    for (std::int64_t p = -N; p <= N; ++p) {
        for (std::int64_t q = -N; q <= N; ++q) {
            if (std::gcd(p, q) != 1) continue;  // gcd(0,0) = 0, so (0,0) skips
            // Solve p*s - q*r = 1; solutions (r, s) = (r0 + t*p, s0 + t*q).
            Int g, s0, r0;
            Int P(p), Q(q);
            mpz_gcdext(g.get_mpz_t(), s0.get_mpz_t(), r0.get_mpz_t(), P.get_mpz_t(),
                       Q.get_mpz_t());
            r0 = -r0;
            // Clamp t so both second-row entries stay inside the box.
            bool empty = false;
            Int lo, hi;
            bool have = false;
            auto clamp_t = [&](const Int& base, const Int& step) {
                if (sgn(step) == 0) {
                    if (abs(base) > N) empty = true;
                    return;
                }
                // |base + t*step| <= N, exact integer bounds.
                Int lo_num = Int(-N) - base, hi_num = Int(N) - base;
                Int tlo, thi;
                if (sgn(step) > 0) {
                    tlo = -floor_div(-lo_num, step);  // ceil
                    thi = floor_div(hi_num, step);
                } else {
                    tlo = -floor_div(-hi_num, step);
                    thi = floor_div(lo_num, step);
                }
                if (!have) {
                    lo = tlo;
                    hi = thi;
                    have = true;
                } else {
                    if (tlo > lo) lo = tlo;
                    if (thi < hi) hi = thi;
                }
            };
            clamp_t(r0, P);
            clamp_t(s0, Q);
            if (empty || !have || lo > hi) continue;
            for (Int t = lo; t <= hi; ++t) {
                IntMatrix2 M{P, Q, r0 + t * P, s0 + t * Q};
                ++seen;
                visit(M);
            }
        }
    }
    return seen;
}

namespace {

CensusReport census_reference(std::int64_t N, const CensusOptions& options) {
    CensusReport report;
    report.N = N;
    report.trace_cap = options.trace_cap;
    report.matrices_scanned = enumerate_sl2(N, [&](const IntMatrix2& M) {
        Int t = M.trace();
        if (t * t <= 4) return;
        if (options.trace_cap && abs(t) > *options.trace_cap) return;
        ++report.hyperbolic_count;
        ++report.counts[census_label_of_reduced(reduce(M).final_state)];
    });
    return report;
}

}  // namespace

CensusReport census(std::int64_t N, const CensusOptions& options) {
    if (N < 1) throw std::invalid_argument("census: N must be >= 1");
    if (options.table_box) {
        if (options.use_reference)
            throw std::invalid_argument("census: table box has no reference path");
        return census_table_kernel(N, options);
    }
    if (options.use_reference) return census_reference(N, options);
    return census_kernel(N, options);
}

std::vector<RatioRow> ratio_experiment(const std::vector<Int>& P1, const std::vector<Int>& P2,
                                       const std::vector<std::int64_t>& Ns,
                                       const CensusOptions& options) {
    if (P1.size() % 2 != 0 || P2.size() % 2 != 0 || P1.empty() || P2.empty())
        throw std::invalid_argument("ratio_experiment: periods must have even positive length");
    std::vector<Int> trunc1(P1.begin(), P1.end() - 1), trunc2(P2.begin(), P2.end() - 1);
    double gk_ratio = gk_probability(trunc1) / gk_probability(trunc2);
    BucketKey key1, key2;
    for (const Int& v : P1) key1.push_back(to_int64(v));
    for (const Int& v : P2) key2.push_back(to_int64(v));

    std::vector<RatioRow> rows;
    for (std::int64_t n : Ns) {
        CensusReport rep = census(n, options);
        auto lookup = [&](const BucketKey& k) -> std::uint64_t {
            auto it = rep.counts.find(k);
            return it == rep.counts.end() ? 0 : it->second;
        };
        RatioRow row;
        row.N = n;
        row.count1 = lookup(key1);
        row.count2 = lookup(key2);
        row.empirical_ratio = row.count2 == 0
                                  ? 0.0
                                  : static_cast<double>(row.count1) /
                                        static_cast<double>(row.count2);
        row.gk_ratio = gk_ratio;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gcf
