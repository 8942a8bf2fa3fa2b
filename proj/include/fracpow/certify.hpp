#pragma once
// certify.hpp - the end-to-end certificate. The analytic ledger covers every
// exponent at or beyond the threshold, the descent covers everything from
// k_min up to the threshold, a direct exact pass re-checks a low range with
// the independent engine, and the strictness check rules out equality.

#include "fracpow/distance.hpp"
#include "fracpow/ledger.hpp"
#include "fracpow/ternary.hpp"

#include <cstdint>
#include <string>

namespace fracpow {

struct RunConfig {
    std::uint64_t m_start = 17545718;     // descent start; meets the threshold
    std::uint64_t k_min = 5;              // descent floor
    std::uint64_t redundancy_lo = 6;      // direct exact re-check range
    std::uint64_t redundancy_hi = 2000;
    std::uint64_t sieve_limit = 20000000; // theta window certification
    std::uint64_t mem_cap_bytes = 4ull << 30;
    unsigned workers = 1;
    std::string cache_path;               // empty: no persistent power cache
};

// Defaults, with cache_path taken from FRACPOW_CACHE when set.
RunConfig default_config();

struct CertificateReport {
    std::string version = "1";
    RunConfig config;
    std::uint64_t k_star = 0;             // analytic coverage starts here
    std::uint64_t claim_from = 6;         // the certified claim: all k >= this
    ConstantLedger ledger;
    Verdict threshold;
    DescentResult descent;
    Verdict redundancy;
    Verdict strictness;
    std::string strictness_note;
    bool overall = false;
};

CertificateReport certify_run(const RunConfig& config);

// Stable-order JSON without timestamps, so identical runs render identically.
// Row timings are deliberately omitted.
std::string render_report(const CertificateReport& report, bool pretty = true);

} // namespace fracpow
