// scan_runs.cpp - longest-run scanning over ternary digit arrays: scalar
// reference kernel and runtime dispatch to the AVX2 variant.

#include "fracpow/ternary.hpp"

#include <algorithm>

namespace fracpow {

namespace detail {

RunReport scan_runs_scalar(const std::uint8_t* d, size_t n) {
    std::uint64_t best0 = 0, pos0 = 0, best2 = 0, pos2 = 0;
    std::uint64_t cur = 0, start = 0;
    std::uint8_t val = 0xFF;
    auto flush = [&] {
        if (val == 0 && cur > best0) { best0 = cur; pos0 = start; }
        if (val == 2 && cur > best2) { best2 = cur; pos2 = start; }
    };
    for (size_t i = 0; i < n; ++i) {
        if (d[i] == val) {
            ++cur;
        } else {
            flush();
            val = d[i];
            cur = 1;
            start = i;
        }
    }
    flush();
    RunReport r;
    r.longest_zero_run = best0;
    r.longest_two_run = best2;
    r.L = std::max(best0, best2);
    if (best0 == r.L && best2 == r.L && r.L > 0)
        r.witness_position = std::min(pos0, pos2);
    else
        r.witness_position = best0 == r.L ? pos0 : pos2;
    return r;
}

bool have_avx2() {
#if defined(FRACPOW_HAVE_AVX2_TU) && defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

} // namespace detail

RunReport scan_runs(const std::vector<std::uint8_t>& digits, bool force_scalar) {
#ifdef FRACPOW_HAVE_AVX2_TU
    if (!force_scalar && detail::have_avx2())
        return detail::scan_runs_avx2(digits.data(), digits.size());
#endif
    (void)force_scalar;
    return detail::scan_runs_scalar(digits.data(), digits.size());
}

} // namespace fracpow
