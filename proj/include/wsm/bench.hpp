#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wsm/matching.hpp"

namespace wsm {

struct BenchOptions {
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds;
    bool median3 = false;  // time each phase three times and keep the median
    unsigned jobs = 1;
};

struct BenchRow {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    double cactus_ms = 0, decompose_ms = 0, assemble_ms = 0, total_ms = 0;
    bool verified = false;
    Matching matching;
};

// One row per (size, seed), sizes outer, in input order regardless of jobs.
// Timings cover cactus construction, decomposition and assembly only;
// generation and verification are excluded.
std::vector<BenchRow> run_bench(const BenchOptions& options);

BenchRow bench_one(std::size_t n, std::uint64_t seed, bool median3);

inline constexpr const char* kBenchHeader = "n,seed,cactus_ms,decompose_ms,assemble_ms,total_ms,verified";
std::string bench_csv(const std::vector<BenchRow>& rows);

// Least-squares slope of log(total_ms) against log(n), using the median
// total per size.
double loglog_slope(const std::vector<BenchRow>& rows);

}  // namespace wsm
