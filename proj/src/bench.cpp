#include "wsm/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <thread>

#include "wsm/generators.hpp"
#include "wsm/wellspread.hpp"

namespace wsm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

}  // namespace

BenchRow bench_one(std::size_t n, std::uint64_t seed, bool median3) {
    const CubicGraph g = random_cubic(n, seed);
    BenchRow row;
    row.n = n;
    row.seed = seed;
    const int reps = median3 ? 3 : 1;
    std::vector<double> cactus, dec, asm_, total;
    CactusModel model;
    for (int r = 0; r < reps; ++r) {
        auto t0 = Clock::now();
        model = build_cactus(g);
        const double c = ms_since(t0);
        t0 = Clock::now();
        const auto plan = decompose(g, model);
        const double d = ms_since(t0);
        t0 = Clock::now();
        row.matching = assemble(plan);
        const double a = ms_since(t0);
        cactus.push_back(c);
        dec.push_back(d);
        asm_.push_back(a);
        total.push_back(c + d + a);
    }
    row.cactus_ms = median(cactus);
    row.decompose_ms = median(dec);
    row.assemble_ms = median(asm_);
    row.total_ms = median(total);
    row.verified = is_well_spread(g, row.matching, model).well_spread;
    return row;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    std::vector<std::pair<std::size_t, std::uint64_t>> cells;
    for (auto n : options.sizes)
        for (auto s : options.seeds) cells.push_back({n, s});
    std::vector<BenchRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    auto worker = [&] {
        for (std::size_t i; (i = next++) < cells.size();) {
            try {
                rows[i] = bench_one(cells[i].first, cells[i].second, options.median3);
            } catch (...) {
                std::lock_guard lock(failure_lock);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::string out = std::string(kBenchHeader) + "\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%zu,%llu,%.3f,%.3f,%.3f,%.3f,%s\n", r.n,
                      static_cast<unsigned long long>(r.seed), r.cactus_ms, r.decompose_ms, r.assemble_ms,
                      r.total_ms, r.verified ? "true" : "false");
        out += buf;
    }
    return out;
}

double loglog_slope(const std::vector<BenchRow>& rows) {
    std::map<std::size_t, std::vector<double>> by_size;
    for (const auto& r : rows) by_size[r.n].push_back(r.total_ms);
    std::vector<double> xs, ys;
    for (auto& [n, t] : by_size) {
        xs.push_back(std::log(static_cast<double>(n)));
        ys.push_back(std::log(std::max(median(t), 1e-6)));
    }
    const double k = static_cast<double>(xs.size());
    if (k < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    return (k * sxy - sx * sy) / (k * sxx - sx * sx);
}

}  // namespace wsm
