#include "holo/batch.hpp"

#include <algorithm>
#include <cmath>

namespace holo {

std::mt19937 case_rng(unsigned long long seed, long long index) {
    std::seed_seq seq{static_cast<unsigned>(seed & 0xffffffffu),
                      static_cast<unsigned>(seed >> 32),
                      static_cast<unsigned>(index & 0xffffffffLL),
                      static_cast<unsigned>(index >> 32)};
    return std::mt19937(seq);
}

namespace {

double run_case(const BatchCase& fn, std::mt19937& rng) {
    try {
        return fn(rng);
    } catch (...) {
        return std::numeric_limits<double>::infinity();
    }
}

}  // namespace

BatchResult run_batch_serial(long long n, unsigned long long seed, double tol,
                             const BatchCase& fn) {
    BatchResult r;
    r.cases = n;
    for (long long i = 0; i < n; ++i) {
        std::mt19937 rng = case_rng(seed, i);
        double dev = run_case(fn, rng);
        if (!(dev <= tol)) ++r.failures;
        if (std::isfinite(dev)) r.max_deviation = std::max(r.max_deviation, dev);
    }
    return r;
}

BatchResult run_batch_parallel(long long n, unsigned long long seed, double tol,
                               const BatchCase& fn) {
    BatchResult r;
    r.cases = n;
    long long failures = 0;
    double max_dev = 0.0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : failures) reduction(max : max_dev)
    for (long long i = 0; i < n; ++i) {
        std::mt19937 rng = case_rng(seed, i);
        double dev = run_case(fn, rng);
        if (!(dev <= tol)) ++failures;
        if (std::isfinite(dev)) max_dev = std::max(max_dev, dev);
    }
    r.failures = failures;
    r.max_deviation = max_dev;
    return r;
}

BatchResult run_batch(long long n, unsigned long long seed, double tol, const BatchCase& fn,
                      bool parallel) {
    return parallel ? run_batch_parallel(n, seed, tol, fn)
                    : run_batch_serial(n, seed, tol, fn);
}

}  // namespace holo
