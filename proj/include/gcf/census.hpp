#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcf/ints.hpp"
#include "gcf/matrix2.hpp"
#include "gcf/reduction.hpp"

namespace gcf {

// Census bucket key: the label tuple produced by census_label_of_reduced.
// Distinct rotations of one cyclic class are distinct buckets, e.g. (1,2)
// and (2,1), roughly one per reduced representative of the conjugacy class.
using BucketKey = std::vector<std::int64_t>;

// Bucket label of a reduced operator: its extracted period word, i.e.
// (1, d-2) for the a = 0 form, and the odd expansion digits of b/a followed
// by floor((d-1)/b) otherwise. The a = 0 and a = b = 1 forms share a label
// (they represent the same rotation of the cyclic word), which keeps the
// census independent of which of the two the reduction happens to reach.
BucketKey census_label_of_reduced(const IntMatrix2& R);

// Trace shared by every reduced operator in the given bucket.
std::int64_t bucket_trace(const BucketKey& label);

struct CensusReport {
    std::int64_t N = 0;
    std::optional<std::int64_t> trace_cap;
    std::uint64_t matrices_scanned = 0;  // det-1 matrices in the box
    std::uint64_t hyperbolic_count = 0;
    std::map<BucketKey, std::uint64_t> counts;

    // Buckets merged over rotation/reversal of the label word.
    std::map<BucketKey, std::uint64_t> cyclic_class_counts() const;

    std::string to_csv() const;   // columns: period, trace, count, N
    std::string to_json() const;

    bool operator==(const CensusReport&) const = default;
};

struct CensusOptions {
    int workers = 1;
    std::optional<std::int64_t> trace_cap;
    std::string checkpoint_path;           // kernel path only; empty = none
    std::int64_t checkpoint_stride = 256;  // first-row strata (values of m11) per checkpoint
    bool use_reference = false;            // exact arbitrary-precision path
    // Alternative enumeration box matching the published frequency table:
    // bound m11, m22 and m12 by N and leave the solved entry
    // m21 = (m11*m22 - 1)/m12 unbounded. Requires trace_cap. The default box
    // bounds all four entries.
    bool table_box = false;
};

// Visits every integer matrix with det = 1 and all |entries| <= N exactly
// once, in a deterministic order (first rows lexicographic, then the solution
// parameter ascending). Returns the number of matrices visited.
std::uint64_t enumerate_sl2(std::int64_t N, const std::function<void(const IntMatrix2&)>& visit);

// #_N census: reduce every hyperbolic matrix in the box (optionally trace
// capped) and count reduced-operator buckets. Deterministic: identical
// reports for any worker count.
CensusReport census(std::int64_t N, const CensusOptions& options = {});

struct RatioRow {
    std::int64_t N;
    std::uint64_t count1, count2;
    double empirical_ratio;  // count1/count2
    double gk_ratio;         // GK(P1')/GK(P2') with the last term dropped
};

// Problem-3 experiment: empirical bucket ratios against the Gauss-Kuzmin
// ratio of the truncated patterns. Draws no conclusion; emits the table.
std::vector<RatioRow> ratio_experiment(const std::vector<Int>& P1, const std::vector<Int>& P2,
                                       const std::vector<std::int64_t>& Ns,
                                       const CensusOptions& options = {});

}  // namespace gcf
