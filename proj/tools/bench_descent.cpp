// Timing harness for the descent: per-row expansion/scan wall times and the
// end-to-end total, so regressions in the big-integer kernels show up before
// they blow the certification budget.

#include "fracpow/ternary.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    using namespace fracpow;
    std::uint64_t m_start = 17545718, k_min = 5;
    std::string cache_path;
    if (const char* env = std::getenv("FRACPOW_CACHE")) cache_path = env;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--start")
            m_start = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--k-min")
            k_min = std::strtoull(argv[i + 1], nullptr, 10);
        else if (flag == "--cache")
            cache_path = argv[i + 1];
        else {
            std::fprintf(stderr, "usage: %s [--start M] [--k-min K] [--cache FILE]\n",
                         argv[0]);
            return 2;
        }
    }

    PowerCache cache(cache_path);
    const auto t0 = std::chrono::steady_clock::now();
    DescentResult res = descent(m_start, k_min, cache);
    const double total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    cache.persist();

    std::printf("%12s %6s %12s %12s %10s\n", "m", "h", "k_lo", "next_m", "seconds");
    for (const DescentRow& r : res.rows)
        std::printf("%12llu %6llu %12llu %12llu %10.3f\n",
                    (unsigned long long)r.m, (unsigned long long)r.h,
                    (unsigned long long)r.window.k_lo,
                    (unsigned long long)r.next_m, r.seconds);
    std::printf("rows: %zu  total: %.3fs  coverage: %s (%s)\n", res.rows.size(),
                total, res.coverage.passed ? "pass" : "FAIL",
                res.coverage.detail.c_str());
    return res.coverage.passed ? 0 : 1;
}
