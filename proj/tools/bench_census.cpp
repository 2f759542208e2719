// Benchmark of the census paths: arbitrary-precision reference vs the 64-bit
// kernel, and the kernel at several worker counts. Verifies along the way
// that every path produces the identical report.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include "gcf/census.hpp"

using gcf::census;
using gcf::CensusOptions;
using gcf::CensusReport;

namespace {

double time_census(std::int64_t n, const CensusOptions& opt, CensusReport& out) {
    double t0 = omp_get_wtime();
    out = census(n, opt);
    return omp_get_wtime() - t0;
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 200;
    std::int64_t ref_n = argc > 2 ? std::atoll(argv[2]) : std::min<std::int64_t>(n, 60);

    std::printf("census benchmark, N = %lld (reference pass at N = %lld)\n",
                static_cast<long long>(n), static_cast<long long>(ref_n));

    CensusOptions ref_opt;
    ref_opt.use_reference = true;
    CensusReport ref_report;
    double ref_time = time_census(ref_n, ref_opt, ref_report);
    std::printf("%-28s %8.3fs  (%llu matrices)\n", "reference (GMP, serial)", ref_time,
                static_cast<unsigned long long>(ref_report.matrices_scanned));

    CensusOptions serial_opt;
    serial_opt.workers = 1;
    CensusReport kernel_ref_check;
    double kt = time_census(ref_n, serial_opt, kernel_ref_check);
    std::printf("%-28s %8.3fs  (x%.1f)\n", "kernel at reference N", kt,
                kt > 0 ? ref_time / kt : 0.0);
    if (!(kernel_ref_check == ref_report)) {
        std::printf("MISMATCH between reference and kernel reports\n");
        return 1;
    }

    CensusReport serial_report;
    double serial_time = time_census(n, serial_opt, serial_report);
    std::printf("%-28s %8.3fs\n", "kernel, 1 worker", serial_time);

    for (int workers : {2, 4}) {
        CensusOptions opt;
        opt.workers = workers;
        CensusReport rep;
        double t = time_census(n, opt, rep);
        std::printf("kernel, %d workers           %8.3fs  (speedup x%.2f)\n", workers, t,
                    t > 0 ? serial_time / t : 0.0);
        if (!(rep == serial_report)) {
            std::printf("MISMATCH between worker counts\n");
            return 1;
        }
    }
    std::printf("all paths agree: %zu buckets, %llu hyperbolic\n", serial_report.counts.size(),
                static_cast<unsigned long long>(serial_report.hyperbolic_count));
    return 0;
}
