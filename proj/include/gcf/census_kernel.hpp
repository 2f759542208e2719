#pragma once

#include "gcf/census.hpp"

namespace gcf {

// Fast census path: 64-bit arithmetic (entries stay below ~3N throughout the
// reduction, so N up to 10^8 is safe), OpenMP over first-row strata, and
// block-granular checkpointing. Produces bit-identical reports to the
// arbitrary-precision reference path.
CensusReport census_kernel(std::int64_t N, const CensusOptions& options);

// Table-box census: enumerates (m11, m22) per trace within the cap and the
// bounded divisor m12 of m11*m22 - 1, with m21 solved and unbounded. The
// solved entry can reach ~N^2, so N is capped at 30000 here.
CensusReport census_table_kernel(std::int64_t N, const CensusOptions& options);

// Single matrix through the 64-bit reduction + labeling, exposed for
// cross-validation against the reference path.
BucketKey census_label_kernel(std::int64_t m11, std::int64_t m12, std::int64_t m21,
                              std::int64_t m22);

}  // namespace gcf
