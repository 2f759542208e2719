#include "gcf/census_kernel.hpp"

#include <json.hpp>
#include <omp.h>

#include <cassert>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace gcf {

namespace {

using i64 = std::int64_t;

inline i64 floor_div64(i64 a, i64 b) {
    i64 q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Gauss reduction specialized to 64-bit entries. Entries never exceed
// ~3*max(initial) in magnitude, so inputs up to 10^8 are safe.
inline void reduce64(i64& a, i64& c, i64& b, i64& d) {
    for (;;) {
        if (b < 0) {  // Step 1
            a = -a;
            c = -c;
            b = -b;
            d = -d;
        }
        if (d > b && b >= a && a >= 0) return;  // reduced
        i64 q = floor_div64(a, b);              // Step 2
        if (q != 0) {
            a -= q * b;
            c += q * a - q * d;  // c' = q*a' + c - q*d with the old d
            d += q * b;
        }
        if (b == 1) {
            // Step 3.1: (0,-1;1,d); a negative d flips to (0,-1;1,-d).
            if (d < 0) d = -d;
            continue;
        }
        if (d > b) continue;  // Step 3.2.1
        if (d < -b) {         // Step 3.2.2
            a = b - a;
            d = -b - d;
            c = (a * d - 1) / b;
            continue;
        }
        // Step 3.2.3: swap to (d, b; c, a)
        i64 na = d, nc = b, nb = c, nd = a;
        a = na;
        c = nc;
        b = nb;
        d = nd;
    }
}

// Period word of the reduced (a, c; b, d): the (1, d-2) form at a = 0, else
// the odd continued fraction of b/a followed by floor((d-1)/b).
inline void label64(i64 a, i64 b, i64 d, BucketKey& out) {
    out.clear();
    if (a == 0) {
        out.push_back(1);
        out.push_back(d - 2);
        return;
    }
    i64 x = b, y = a;
    while (y != 0) {
        out.push_back(x / y);
        i64 r = x % y;
        x = y;
        y = r;
    }
    if (out.size() % 2 == 0) {
        if (out.back() == 1 && out.size() >= 2) {
            out.pop_back();
            ++out.back();
        } else {
            --out.back();
            out.push_back(1);
        }
    }
    out.push_back((d - 1) / b);
}

struct KeyHash {
    std::size_t operator()(const BucketKey& k) const {
        std::uint64_t h = 14695981039346656037ull;
        for (i64 v : k) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

using LocalMap = std::unordered_map<BucketKey, std::uint64_t, KeyHash>;

struct StripeResult {
    std::uint64_t scanned = 0;
    std::uint64_t hyperbolic = 0;
    LocalMap counts;
};

// All matrices with first row (p, q); gcd(p, q) must be 1.
void scan_first_row(i64 p, i64 q, i64 N, const std::optional<i64>& cap, StripeResult& res,
                    BucketKey& scratch) {
    // Extended gcd: p*s0 - q*r0 = 1.
    i64 old_r = p, r = q, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        i64 quot = old_r / r;
        i64 tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    // old_r = +-1 = p*old_s + q*old_t
    i64 s0 = old_s * old_r, r0 = -old_t * old_r;

    i64 lo = INT64_MIN, hi = INT64_MAX;
    auto clamp = [&](i64 base, i64 step) -> bool {
        if (step == 0) return std::abs(base) <= N;
        // |base + t*step| <= N; ceil(x/y) = -floor(-x/y)
        i64 lo_num = -N - base, hi_num = N - base;
        i64 tlo, thi;
        if (step > 0) {
            tlo = -floor_div64(-lo_num, step);
            thi = floor_div64(hi_num, step);
        } else {
            tlo = -floor_div64(-hi_num, step);
            thi = floor_div64(lo_num, step);
        }
        if (tlo > lo) lo = tlo;
        if (thi < hi) hi = thi;
        return true;
    };
    if (!clamp(r0, p) || !clamp(s0, q) || lo > hi) return;

    for (i64 t2 = lo; t2 <= hi; ++t2) {
        i64 rr = r0 + t2 * p, ss = s0 + t2 * q;
        ++res.scanned;
        i64 trace = p + ss;
        if (trace <= 2 && trace >= -2) continue;
        if (cap && (trace > *cap || trace < -*cap)) continue;
        ++res.hyperbolic;
        i64 a = p, c = q, b = rr, d = ss;
        reduce64(a, c, b, d);
        label64(a, b, d, scratch);
        ++res.counts[scratch];
    }
}

struct Checkpoint {
    i64 next_p;
    std::uint64_t scanned;
    std::uint64_t hyperbolic;
    std::map<BucketKey, std::uint64_t> counts;
};

bool load_checkpoint(const std::string& path, i64 N, const std::optional<i64>& cap,
                     Checkpoint& ck) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    in >> j;
    if (j.value("schema", "") != "gcf-census-checkpoint-v1") return false;
    if (j.at("N").get<i64>() != N) throw std::invalid_argument("checkpoint N mismatch");
    auto jc = j.at("trace_cap");
    std::optional<i64> file_cap =
        jc.is_null() ? std::nullopt : std::optional<i64>(jc.get<i64>());
    if (file_cap != cap) throw std::invalid_argument("checkpoint trace_cap mismatch");
    ck.next_p = j.at("next_stratum").get<i64>();
    ck.scanned = j.at("matrices_scanned").get<std::uint64_t>();
    ck.hyperbolic = j.at("hyperbolic_count").get<std::uint64_t>();
    ck.counts.clear();
    for (const auto& entry : j.at("counts")) {
        BucketKey key = entry.at(0).get<BucketKey>();
        ck.counts[key] = entry.at(1).get<std::uint64_t>();
    }
    return true;
}

void save_checkpoint(const std::string& path, i64 N, const std::optional<i64>& cap,
                     const Checkpoint& ck) {
    nlohmann::json j;
    j["schema"] = "gcf-census-checkpoint-v1";
    j["N"] = N;
    if (cap)
        j["trace_cap"] = *cap;
    else
        j["trace_cap"] = nullptr;
    j["next_stratum"] = ck.next_p;
    j["matrices_scanned"] = ck.scanned;
    j["hyperbolic_count"] = ck.hyperbolic;
    auto counts = nlohmann::json::array();
    for (const auto& [key, value] : ck.counts) counts.push_back({key, value});
    j["counts"] = counts;
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    std::rename(tmp.c_str(), path.c_str());
}

}  // namespace

BucketKey census_label_kernel(i64 m11, i64 m12, i64 m21, i64 m22) {
    i64 a = m11, c = m12, b = m21, d = m22;
    if (a * m22 - c * b != 1) throw std::invalid_argument("census_label_kernel: det must be 1");
    i64 trace = a + d;
    if (trace * trace <= 4)
        throw std::invalid_argument("census_label_kernel: operator is not hyperbolic");
    reduce64(a, c, b, d);
    BucketKey out;
    label64(a, b, d, out);
    return out;
}

CensusReport census_table_kernel(i64 N, const CensusOptions& options) {
    if (N < 1) throw std::invalid_argument("census_table_kernel: N must be >= 1");
    if (N > 30'000)
        throw std::invalid_argument("census_table_kernel: N too large for the 64-bit path");
    if (!options.trace_cap)
        throw std::invalid_argument("census_table_kernel: a trace cap is required");
    i64 cap = *options.trace_cap;
    if (cap < 3) throw std::invalid_argument("census_table_kernel: trace cap must be >= 3");

    int workers = options.workers > 0 ? options.workers : 1;
    std::vector<StripeResult> partial(static_cast<std::size_t>(workers));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (i64 a = -N; a <= N; ++a) {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
        BucketKey scratch;
        for (i64 t = -cap; t <= cap; ++t) {
            if (t > -3 && t < 3) continue;
            i64 d = t - a;
            if (d > N || d < -N) continue;
            i64 K = a * d - 1;  // nonzero for |t| >= 3
            i64 k = K < 0 ? -K : K;
            for (i64 i = 1; i * i <= k; ++i) {
                if (k % i) continue;
                i64 divs[2] = {i, k / i};
                int ndiv = (divs[0] == divs[1]) ? 1 : 2;
                for (int j = 0; j < ndiv; ++j) {
                    if (divs[j] > N) continue;
                    for (int s = -1; s <= 1; s += 2) {
                        i64 c = s * divs[j];
                        i64 b = K / c;  // unbounded solved entry
                        ++local.scanned;
                        ++local.hyperbolic;
                        i64 ra = a, rc = c, rb = b, rd = d;
                        reduce64(ra, rc, rb, rd);
                        label64(ra, rb, rd, scratch);
                        ++local.counts[scratch];
                    }
                }
            }
        }
    }
    CensusReport report;
    report.N = N;
    report.trace_cap = cap;
    for (auto& part : partial) {
        report.matrices_scanned += part.scanned;
        report.hyperbolic_count += part.hyperbolic;
        for (auto& [key, value] : part.counts) report.counts[key] += value;
    }
    return report;
}

CensusReport census_kernel(i64 N, const CensusOptions& options) {
    if (N < 1) throw std::invalid_argument("census_kernel: N must be >= 1");
    if (N > 100'000'000) throw std::invalid_argument("census_kernel: N too large for 64-bit path");
    std::optional<i64> cap = options.trace_cap;

    Checkpoint ck{-N, 0, 0, {}};
    if (!options.checkpoint_path.empty()) {
        Checkpoint loaded;
        if (load_checkpoint(options.checkpoint_path, N, cap, loaded)) ck = loaded;
    }

    int workers = options.workers > 0 ? options.workers : 1;
    i64 stride = options.checkpoint_stride > 0 ? options.checkpoint_stride : 256;

    while (ck.next_p <= N) {
        i64 block_end = std::min(N, ck.next_p + stride - 1);
        std::vector<StripeResult> partial(static_cast<std::size_t>(workers));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (i64 p = ck.next_p; p <= block_end; ++p) {
            auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
            BucketKey scratch;
            for (i64 q = -N; q <= N; ++q) {
                if (std::gcd(p, q) != 1) continue;
                scan_first_row(p, q, N, cap, local, scratch);
            }
        }
        for (auto& part : partial) {
            ck.scanned += part.scanned;
            ck.hyperbolic += part.hyperbolic;
            for (auto& [key, value] : part.counts) ck.counts[key] += value;
        }
        ck.next_p = block_end + 1;
        if (!options.checkpoint_path.empty())
            save_checkpoint(options.checkpoint_path, N, cap, ck);
    }

    CensusReport report;
    report.N = N;
    report.trace_cap = cap;
    report.matrices_scanned = ck.scanned;
    report.hyperbolic_count = ck.hyperbolic;
    report.counts = std::move(ck.counts);
    return report;
}

}  // namespace gcf
