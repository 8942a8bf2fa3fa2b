// Tests for the ternary machinery: digit expansion against big-integer
// reconstruction, run scanning against a naive reference (scalar and SIMD),
// fingerprints against direct modular exponentiation, coverage windows, the
// power cache, and small end-to-end descents.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracpow/errors.hpp"
#include "fracpow/natural.hpp"
#include "fracpow/ternary.hpp"

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <vector>

using namespace fracpow;

namespace {

std::mt19937_64 rng(0xfeedface12345678ull);

Natural from_digits(const std::vector<std::uint8_t>& d) {
    Natural v;
    for (size_t i = d.size(); i-- > 0;) v = v.mul_u64(3) + Natural(d[i]);
    return v;
}

// Naive run scanner: every maximal uniform block of 0s or 2s, in order.
RunReport reference_scan(const std::vector<std::uint8_t>& d) {
    RunReport r;
    size_t i = 0;
    std::uint64_t witness = 0, best = 0;
    while (i < d.size()) {
        size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        const std::uint64_t len = j - i;
        if (d[i] == 0 && len > r.longest_zero_run) r.longest_zero_run = len;
        if (d[i] == 2 && len > r.longest_two_run) r.longest_two_run = len;
        if (d[i] != 1 && len > best) { best = len; witness = i; }
        i = j;
    }
    r.L = best;
    r.witness_position = witness;
    return r;
}

void check_same(const RunReport& a, const RunReport& b) {
    CHECK(a.longest_zero_run == b.longest_zero_run);
    CHECK(a.longest_two_run == b.longest_two_run);
    CHECK(a.L == b.L);
    CHECK(a.witness_position == b.witness_position);
}

std::uint64_t modpow4(std::uint64_t m, std::uint64_t p) {
    unsigned __int128 acc = 1, base = 4 % p;
    while (m) {
        if (m & 1) acc = acc * base % p;
        base = base * base % p;
        m >>= 1;
    }
    return (std::uint64_t)acc;
}

std::filesystem::path temp_cache_path(const char* tag) {
    return std::filesystem::temp_directory_path() /
           (std::string("fracpow_") + tag + "_" + std::to_string(::getpid()) +
            ".bin");
}

} // namespace

TEST_CASE("digit expansions of small powers are the hand-checked arrays") {
    PowerCache cache;
    const std::vector<std::uint8_t> d5 = {1, 2, 2, 1, 0, 1, 1};
    const std::vector<std::uint8_t> d7 = {1, 1, 2, 0, 1, 1, 1, 1, 2};
    const std::vector<std::uint8_t> d9 = {1, 0, 0, 1, 2, 1, 2, 2, 0, 1, 1, 1};
    CHECK(power4_ternary(5, cache).digits == d5);
    CHECK(power4_ternary(7, cache).digits == d7);
    CHECK(power4_ternary(9, cache).digits == d9);
    CHECK(power4_ternary(0, cache).digits == std::vector<std::uint8_t>{1});
}

TEST_CASE("digit expansion reconstructs 4^m exactly") {
    PowerCache cache;
    for (std::uint64_t m : {1, 2, 3, 4, 6, 17, 64, 65, 255, 256, 999, 2000}) {
        const TernaryExpansion x = power4_ternary(m, cache);
        CHECK(x.m == m);
        REQUIRE(!x.digits.empty());
        CHECK(x.digits.back() != 0);
        for (std::uint8_t d : x.digits) CHECK(d <= 2);
        CHECK(from_digits(x.digits) == Natural::pow2(2 * m));
    }
}

TEST_CASE("run scanning: scalar, dispatched, and reference all agree") {
    std::uniform_int_distribution<int> trit(0, 2);
    const size_t sizes[] = {0,  1,  2,   31,  32,   33,   63,   64,
                            65, 96, 127, 128, 1000, 4096, 4097, 100000};
    for (size_t n : sizes) {
        for (int variant = 0; variant < 6; ++variant) {
            std::vector<std::uint8_t> d(n);
            switch (variant) {
                case 0: for (auto& x : d) x = (std::uint8_t)trit(rng); break;
                case 1: std::fill(d.begin(), d.end(), 1); break;
                case 2: std::fill(d.begin(), d.end(), 0); break;
                case 3: std::fill(d.begin(), d.end(), 2); break;
                default: {
                    for (auto& x : d) x = (std::uint8_t)trit(rng);
                    // Plant uniform runs, including ones touching the edges.
                    for (int p = 0; p < 5 && n > 0; ++p) {
                        const size_t at = rng() % n;
                        const size_t len = std::min(n - at, 1 + rng() % 200);
                        const std::uint8_t val = rng() % 2 ? 0 : 2;
                        std::fill(d.begin() + at, d.begin() + at + len, val);
                    }
                    if (n > 3) {
                        d[0] = d[1] = 2;
                        d[n - 1] = d[n - 2] = 0;
                    }
                    break;
                }
            }
            const RunReport want = reference_scan(d);
            check_same(scan_runs(d, true), want);
            check_same(scan_runs(d, false), want);
        }
    }
}

TEST_CASE("run scanning handles runs crossing vector-width boundaries") {
    // One long run straddling every 32-byte boundary in a 160-digit array.
    for (size_t start = 20; start + 50 <= 160; start += 16) {
        std::vector<std::uint8_t> d(160, 1);
        std::fill(d.begin() + start, d.begin() + start + 50, 2);
        const RunReport r = scan_runs(d, false);
        CHECK(r.longest_two_run == 50);
        CHECK(r.L == 50);
        CHECK(r.witness_position == start);
        check_same(r, scan_runs(d, true));
    }
}

TEST_CASE("fingerprints match direct modular exponentiation") {
    const auto& primes = fingerprint_primes();
    REQUIRE(primes.size() == 5);
    CHECK(primes[0] == 2305843009213693951ull);
    CHECK(primes[1] == 2305843009213693921ull);
    CHECK(primes[2] == 2305843009213693907ull);
    CHECK(primes[3] == 2305843009213693723ull);
    CHECK(primes[4] == 2305843009213693693ull);

    PowerCache cache;
    for (std::uint64_t m : {1, 9, 100, 12345}) {
        const TernaryExpansion x = power4_ternary(m, cache);
        const Fingerprint f = fingerprint_power4(x);
        CHECK(f.bits == 2 * m + 1);
        CHECK(f.digit_count == x.digits.size());
        REQUIRE(f.residues.size() == primes.size());
        for (size_t i = 0; i < primes.size(); ++i)
            CHECK(f.residues[i] == modpow4(m, primes[i]));
    }
}

TEST_CASE("fingerprinting rejects corrupted digits") {
    PowerCache cache;
    TernaryExpansion x = power4_ternary(50, cache);
    x.digits[3] = (std::uint8_t)((x.digits[3] + 1) % 3);
    CHECK_THROWS_AS(fingerprint_power4(x), std::logic_error);
}

TEST_CASE("h values and coverage windows for the small rows") {
    PowerCache cache;
    CHECK(table_h(5, cache) == 2);
    CHECK(table_h(7, cache) == 1);
    CHECK(table_h(9, cache) == 2);

    const CoverageWindow w5 = window_for(5, 3);
    CHECK(w5.k_lo == 5);
    CHECK(w5.k_hi == 5);
    const CoverageWindow w7 = window_for(7, 2);
    CHECK(w7.k_lo == 6);
    CHECK(w7.k_hi == 7);
    const CoverageWindow w9 = window_for(9, 3);
    CHECK(w9.k_lo == 8);
    CHECK(w9.k_hi == 9);

    // k_lo is minimal: 4^m 3^h <= 9^(k_lo) but not 9^(k_lo - 1).
    for (std::uint64_t m = 2; m <= 60; ++m) {
        for (std::uint64_t h = 1; h <= 6; ++h) {
            const CoverageWindow w = window_for(m, h);
            if (w.empty()) continue;
            CHECK(compare_power_products(m, h, w.k_lo) <= 0);
            CHECK(compare_power_products(m, h, w.k_lo - 1) > 0);
            CHECK(w.k_hi == m);
        }
    }
}

TEST_CASE("descent target arithmetic") {
    CHECK(next_m(9, 2) == 7);
    CHECK(next_m(7, 1) == 5);
    CHECK(next_m(5, 2) == 5);
    CHECK(next_m(25, 0) == 16);
    CHECK(next_m(26, 0) == 17);
    // ceil(16 m / 25) + floor(h / 2) piecewise.
    for (std::uint64_t m = 1; m <= 200; ++m)
        for (std::uint64_t h = 0; h <= 9; ++h)
            CHECK(next_m(m, h) == (16 * m + 24) / 25 + h / 2);
}

TEST_CASE("small descents tile their target ranges") {
    PowerCache cache;
    for (std::uint64_t start : {5, 7, 9}) {
        const DescentResult r = descent(start, 5, cache);
        CHECK(r.coverage.passed);
        REQUIRE(!r.rows.empty());
        CHECK(r.rows.front().m == start);
        CHECK(r.rows.front().window.k_hi == start);
        CHECK(r.rows.back().window.k_lo <= 5);
        for (const DescentRow& row : r.rows) {
            CHECK(row.h_lemma == row.h + 1);
            CHECK(!row.window.empty());
        }
        // Consecutive windows overlap or abut: no exponent falls through.
        for (size_t i = 0; i + 1 < r.rows.size(); ++i)
            CHECK(r.rows[i].window.k_lo <= r.rows[i + 1].window.k_hi + 1);
    }
    const DescentResult mid = descent(600, 5, cache);
    CHECK(mid.coverage.passed);
    for (const DescentRow& row : mid.rows) CHECK(row.fingerprint.residues.size() == 5);
}

TEST_CASE("descents are reproducible with and without a disk cache") {
    const auto path = temp_cache_path("cache_roundtrip");
    std::filesystem::remove(path);

    PowerCache fresh;
    const DescentResult a = descent(300, 5, fresh);

    {
        PowerCache disk(path.string());
        const DescentResult b = descent(300, 5, disk);
        REQUIRE(a.rows.size() == b.rows.size());
        for (size_t i = 0; i < a.rows.size(); ++i) {
            CHECK(a.rows[i].m == b.rows[i].m);
            CHECK(a.rows[i].h == b.rows[i].h);
            CHECK(a.rows[i].window.k_lo == b.rows[i].window.k_lo);
            CHECK(a.rows[i].fingerprint.residues == b.rows[i].fingerprint.residues);
        }
        disk.persist();
        CHECK(std::filesystem::exists(path));
    }

    // Reload: table comes back from disk and yields the same powers.
    PowerCache reloaded(path.string());
    CHECK(reloaded.entries() > 0);
    CHECK(reloaded.pow3_2exp(4) == Natural::pow(3, 16));
    const DescentResult c = descent(300, 5, reloaded);
    CHECK(c.coverage.passed);
    CHECK(c.rows.size() == a.rows.size());
    std::filesystem::remove(path);
}

TEST_CASE("a corrupt cache file is ignored, not trusted") {
    const auto path = temp_cache_path("cache_corrupt");
    {
        std::ofstream f(path, std::ios::binary);
        f << "this is not a power table";
    }
    PowerCache c(path.string());
    CHECK(c.entries() == 0);
    CHECK(c.pow3_2exp(3) == Natural::pow(3, 8));
    std::filesystem::remove(path);
}

TEST_CASE("memory caps stop oversized expansions up front") {
    PowerCache cache;
    CHECK_THROWS_AS(power4_ternary(200000, cache, 1 << 12), resource_error);
    DescentOptions opts;
    opts.mem_cap_bytes = 1 << 12;
    CHECK_THROWS_AS(descent(50000, 5, cache, opts), resource_error);
}

TEST_CASE("usage guards") {
    PowerCache cache;
    CHECK_THROWS_AS(cache.pow3_2exp(31), usage_error);
    CHECK_THROWS_AS(window_for(0, 1), usage_error);
    CHECK_THROWS_AS(descent(0, 1, cache), usage_error);
    CHECK_THROWS_AS(descent(5, 9, cache), usage_error);
}
