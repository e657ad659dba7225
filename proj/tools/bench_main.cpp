// Benchmark comparing the serial reference batch runner against the OpenMP
// one on the phase-agreement workload.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "holo/batch.hpp"
#include "holo/connection.hpp"
#include "holo/transport.hpp"

using namespace holo;

namespace {

double time_run(long long n, const BatchCase& fn, bool parallel, BatchResult& out) {
    auto t0 = std::chrono::steady_clock::now();
    out = run_batch(n, 42, 1e-9, fn, parallel);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long long n = argc > 1 ? std::atoll(argv[1]) : 20000;

    DiscreteConnection A = omega_mu(2.0);
    BatchCase phase_case = [A](std::mt19937& rng) {
        BasePoint start = sample_base_point(A.patch, rng, 1.0);
        DiscretePath loop = sample_loop(A.patch, start, 8, 0.4, rng);
        HolonomyReport r = verify_phase_theorems(A, loop);
        return r.agreement ? r.max_deviation : 1.0;
    };

    BatchResult serial_result, parallel_result;
    double t_serial = time_run(n, phase_case, false, serial_result);
    double t_parallel = time_run(n, phase_case, true, parallel_result);

    std::printf("phase agreement over %lld loops (omega_mu, mu=2)\n", n);
    std::printf("  serial:   %8.3f s  (%lld failures, max dev %.3e)\n", t_serial,
                serial_result.failures, serial_result.max_deviation);
    std::printf("  parallel: %8.3f s  (%lld failures, max dev %.3e)\n", t_parallel,
                parallel_result.failures, parallel_result.max_deviation);
    std::printf("  speedup:  %8.2fx\n", t_serial / t_parallel);

    if (serial_result.failures != parallel_result.failures ||
        serial_result.max_deviation != parallel_result.max_deviation) {
        std::printf("MISMATCH between serial and parallel results\n");
        return 1;
    }
    return 0;
}
