// scan_runs_avx2.cpp - AVX2 longest-run kernel. 32 digits per step are
// compared against 0 and 2; the resulting bit masks feed a per-value run
// tracker that carries open runs across block boundaries. Compiled only into
// this translation unit with -mavx2; callers reach it through scan_runs()
// dispatch after a cpuid check.

#include "fracpow/ternary.hpp"

#ifdef FRACPOW_HAVE_AVX2_TU

#include <immintrin.h>

#include <algorithm>
#include <cassert>

namespace fracpow {
namespace detail {

namespace {

// Tracks runs of one digit value given 32-bit occupancy masks, bit i of a
// mask standing for position base+i. Masks must arrive in position order;
// update rule is strict >, so the earliest maximal run wins, matching the
// scalar kernel.
struct BitRunTracker {
    std::uint64_t best = 0, pos = 0;
    std::uint64_t open = 0, open_start = 0;

    void close(std::uint64_t start, std::uint64_t len) {
        if (len > best) { best = len; pos = start; }
    }
    void close_open() {
        close(open_start, open);
        open = 0;
    }

    void consume(std::uint32_t mask, std::uint64_t base) {
        if (mask == 0xFFFFFFFFu) {          // whole block: extend and move on
            if (open == 0) open_start = base;
            open += 32;
            return;
        }
        // Low-side ones continue the carried run; close the combined run.
        std::uint32_t t = mask & 1u ? __builtin_ctz(~mask) : 0;
        close(open ? open_start : base, open + t);
        open = 0;
        // High-side ones stay open into the next block.
        std::uint32_t h = mask >> 31 ? __builtin_clz(~mask) : 0;
        std::uint32_t interior = mask & ~((h ? 0xFFFFFFFFu << (32 - h) : 0u) |
                                          ((1u << t) - 1u));
        // Interior runs are fully contained; walk them low to high.
        while (interior) {
            std::uint32_t i = __builtin_ctz(interior);
            std::uint32_t len = __builtin_ctz(~(interior >> i));
            close(base + i, len);
            interior &= ~(((1u << len) - 1u) << i);
        }
        if (h) { open = h; open_start = base + 32 - h; }
    }

    // Scalar feed for the tail after the last full block.
    void feed(bool match, std::uint64_t position) {
        if (match) {
            if (open == 0) open_start = position;
            ++open;
        } else {
            close_open();
        }
    }
};

} // namespace

RunReport scan_runs_avx2(const std::uint8_t* d, size_t n) {
    BitRunTracker t0, t2;
    const __m256i zero = _mm256_setzero_si256();
    const __m256i two = _mm256_set1_epi8(2);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(d + i));
        std::uint32_t m0 = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
        std::uint32_t m2 = static_cast<std::uint32_t>(
            _mm256_movemask_epi8(_mm256_cmpeq_epi8(v, two)));
        t0.consume(m0, i);
        t2.consume(m2, i);
    }
    for (; i < n; ++i) {
        t0.feed(d[i] == 0, i);
        t2.feed(d[i] == 2, i);
    }
    t0.close_open();
    t2.close_open();

    RunReport r;
    r.longest_zero_run = t0.best;
    r.longest_two_run = t2.best;
    r.L = std::max(t0.best, t2.best);
    if (t0.best == r.L && t2.best == r.L && r.L > 0)
        r.witness_position = std::min(t0.pos, t2.pos);
    else
        r.witness_position = t0.best == r.L ? t0.pos : t2.pos;
    return r;
}

} // namespace detail
} // namespace fracpow

#endif // FRACPOW_HAVE_AVX2_TU
