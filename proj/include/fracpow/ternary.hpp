#pragma once
// ternary.hpp - base-3 expansion of 4^m, longest-run scanning, coverage
// windows, and the descent that chains windows down to small exponents.
//
// The key fact used throughout: if the ternary digits of 4^m contain no
// uniform block of h consecutive 0s or 2s ending below position k, then the
// distance inequality holds for every k with 4^m * 3^h <= 9^k and k <= m.

#include "fracpow/distance.hpp"
#include "fracpow/natural.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracpow {

struct TernaryExpansion {
    std::uint64_t m = 0;
    std::vector<std::uint8_t> digits;   // little-endian, each in {0,1,2}
};

struct RunReport {
    std::uint64_t longest_zero_run = 0;
    std::uint64_t longest_two_run = 0;
    std::uint64_t L = 0;                 // max of the two
    std::uint64_t witness_position = 0;  // earliest start of a maximal run
};

struct CoverageWindow {
    std::uint64_t k_lo = 1, k_hi = 0;    // empty iff k_lo > k_hi
    bool empty() const { return k_lo > k_hi; }
};

// Compact identity of a huge value: bit length, ternary digit count, and
// residues modulo five pinned 61-bit primes. Reports carry these instead of
// multi-megabyte digit strings.
struct Fingerprint {
    std::uint64_t bits = 0;
    std::uint64_t digit_count = 0;
    std::vector<std::uint64_t> residues;
};

// The five pinned fingerprint primes (largest 61-bit primes, descending).
const std::vector<std::uint64_t>& fingerprint_primes();

struct DescentRow {
    std::uint64_t m = 0;
    std::uint64_t h = 0;          // longest uniform 0/2 run length L(m)
    std::uint64_t h_lemma = 0;    // h + 1: no run of this length exists
    CoverageWindow window;
    std::uint64_t next_m = 0;
    Fingerprint fingerprint;      // of 4^m
    double seconds = 0;           // wall time spent on this row
};

struct DescentResult {
    std::uint64_t m_start = 0, k_min = 0;
    std::vector<DescentRow> rows;
    Verdict coverage;             // windows tile [k_min, m_start] with no gap
};

// Cache of 3^(2^i), built by repeated squaring, optionally persisted to a
// small binary file so later runs skip the squaring chain.
class PowerCache {
public:
    PowerCache() = default;
    // Binds to a file; loads any entries already present (ignoring the file
    // with a warning on stderr if it fails validation).
    explicit PowerCache(std::string path);

    // 3^(2^i), computing and retaining anything missing. i <= 30.
    const Natural& pow3_2exp(unsigned i);
    // Writes entries back to the bound file (no-op when unbound or clean).
    void persist() const;

    size_t entries() const { return table_.size(); }
    std::uint64_t bytes() const;

private:
    std::vector<Natural> table_;
    std::string path_;
    mutable size_t persisted_ = 0;
};

// Ternary digits of 4^m (m >= 0). Work and transient memory are estimated up
// front; exceeding mem_cap_bytes raises resource_error before allocation.
TernaryExpansion power4_ternary(std::uint64_t m, PowerCache& cache,
                                std::uint64_t mem_cap_bytes = 4ull << 30);

// Longest runs of 0s and of 2s. Uses the AVX2 kernel when the CPU has it
// unless force_scalar is set; both paths are equivalence-tested.
RunReport scan_runs(const std::vector<std::uint8_t>& digits,
                    bool force_scalar = false);

namespace detail {
RunReport scan_runs_scalar(const std::uint8_t* d, size_t n);
#ifdef FRACPOW_HAVE_AVX2_TU
RunReport scan_runs_avx2(const std::uint8_t* d, size_t n);
#endif
bool have_avx2();
} // namespace detail

// h value for one row: L(m) from the expansion of 4^m.
std::uint64_t table_h(std::uint64_t m, PowerCache& cache,
                      std::uint64_t mem_cap_bytes = 4ull << 30);

// Window [k_lo, m] with k_lo minimal such that 4^m * 3^h_lemma <= 9^k_lo.
CoverageWindow window_for(std::uint64_t m, std::uint64_t h_lemma);

// Defense in depth: re-scan every k in the window and confirm the digit block
// [k - h_lemma, k) is not uniformly 0 or uniformly 2.
Verdict verify_window_blocks(const TernaryExpansion& x, const CoverageWindow& w,
                             std::uint64_t h_lemma);

// Next descent target: ceil(16 m / 25) + floor(h / 2).
std::uint64_t next_m(std::uint64_t m, std::uint64_t h);

struct DescentOptions {
    std::uint64_t mem_cap_bytes = 4ull << 30;
    bool verify_blocks = true;     // run verify_window_blocks on every row
    bool fingerprints = true;      // digit-fold vs powmod cross-check
};

// Iterates m -> next_m from m_start until a window reaches k_min (stepping to
// m - 1 whenever the recurrence fails to decrease), collecting rows and
// checking that consecutive windows leave no gap.
DescentResult descent(std::uint64_t m_start, std::uint64_t k_min,
                      PowerCache& cache, const DescentOptions& opts = {});

// Fingerprint of 4^m; digit residues are folded from the expansion and must
// match an independent modular exponentiation, or this throws logic_error.
Fingerprint fingerprint_power4(const TernaryExpansion& x, bool cross_check = true);

} // namespace fracpow
