// Times the OpenMP pairwise kernels against their serial references on the
// n = 8 universes and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "ddf/enumerate.hpp"
#include "ddf/kernels.hpp"

using namespace ddf;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-34s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   %s\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
    std::printf("threads: %d\n", omp_get_max_threads());

    auto pred = DoublingPredicate::max_degree_at_least(4);

    auto cycles = Universe::hamilton_cycles(8).collect();
    std::printf("hamilton cycles n=8: %zu graphs\n", cycles.size());
    BitMatrix cs, cp;
    double t_cs = time_ms([&] { cs = compatibility_matrix_serial(cycles, pred); });
    double t_cp = time_ms([&] { cp = compatibility_matrix_parallel(cycles, pred); });
    report("compatibility (cycles n=8)", t_cs, t_cp, cs == cp);

    auto tworeg = Universe::two_regular(8).collect();
    std::printf("two-regular n=8: %zu graphs\n", tworeg.size());
    BitMatrix ts, tp;
    double t_ts = time_ms([&] { ts = compatibility_matrix_serial(tworeg, pred); });
    double t_tp = time_ms([&] { tp = compatibility_matrix_parallel(tworeg, pred); });
    report("compatibility (two-regular n=8)", t_ts, t_tp, ts == tp);

    auto matchings = Universe::perfect_matchings(8).collect();
    ContainmentCounts ccs, ccp;
    double t_ns = time_ms([&] { ccs = containment_counts_serial(matchings, cycles); });
    double t_np = time_ms([&] { ccp = containment_counts_parallel(matchings, cycles); });
    report("containment (matchings in cycles)", t_ns, t_np,
           ccs.per_pattern == ccp.per_pattern && ccs.per_member == ccp.per_member);

    auto copies = labeled_copies(canonical_hamilton_cycle(7));
    std::printf("cycle copies n=7: %zu graphs\n", copies.size());
    BitMatrix ds, dp;
    double t_ds = time_ms([&] { ds = distinguishability_matrix_serial(copies); });
    double t_dp = time_ms([&] { dp = distinguishability_matrix_parallel(copies); });
    report("distinguishability (copies n=7)", t_ds, t_dp, ds == dp);

    return 0;
}
