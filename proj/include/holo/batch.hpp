#pragma once

#include <functional>
#include <random>

namespace holo {

struct BatchResult {
    long long cases = 0;
    long long failures = 0;
    double max_deviation = 0.0;
};

// One case: draws what it needs from the per-case RNG and returns the
// observed deviation. A thrown exception counts as a failure.
using BatchCase = std::function<double(std::mt19937&)>;

// Each case gets its own RNG seeded from (seed, index), so the serial and
// OpenMP paths produce identical results.
BatchResult run_batch_serial(long long n, unsigned long long seed, double tol,
                             const BatchCase& fn);
BatchResult run_batch_parallel(long long n, unsigned long long seed, double tol,
                               const BatchCase& fn);
BatchResult run_batch(long long n, unsigned long long seed, double tol, const BatchCase& fn,
                      bool parallel);

std::mt19937 case_rng(unsigned long long seed, long long index);

}  // namespace holo
