// ternary.cpp - conversion of 4^m to base 3, window computation, descent.

#include "fracpow/ternary.hpp"

#include "fracpow/errors.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

namespace fracpow {

namespace {

// floor(2^96 * log3(2)): converts bit counts to ternary digit counts.
constexpr unsigned __int128 LOG3_2_Q96 =
    ((unsigned __int128)0xA1849CC1ull << 64) | 0xA9A9E94E043EAF77ull;

// Ternary digit count of 4^m is floor(2m*log3(2)) + 1, which the fixed-point
// value pins down to within one; returns a guaranteed upper bound.
std::uint64_t digit_count_upper(std::uint64_t m) {
    if (m == 0) return 1;
    const unsigned __int128 t = (unsigned __int128)(2 * m) * LOG3_2_Q96;
    return (std::uint64_t)(t >> 96) + 2;
}

std::uint64_t encode_u64le(std::uint8_t* p, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) p[i] = (std::uint8_t)(v >> (8 * i));
    return 8;
}

std::uint64_t decode_u64le(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= (std::uint64_t)p[i] << (8 * i);
    return v;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (std::uint64_t)((unsigned __int128)a * b % p);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p, b = base % p;
    while (exp) {
        if (exp & 1) acc = mulmod_u64(acc, b, p);
        b = mulmod_u64(b, b, p);
        exp >>= 1;
    }
    return acc;
}

constexpr char CACHE_MAGIC[6] = {'T', 'P', 'O', 'W', '3', 0x01};

} // namespace

const std::vector<std::uint64_t>& fingerprint_primes() {
    static const std::vector<std::uint64_t> primes = {
        2305843009213693951ull,   // 2^61 - 1
        2305843009213693921ull,
        2305843009213693907ull,
        2305843009213693723ull,
        2305843009213693693ull,
    };
    return primes;
}

// ============================================================
// PowerCache
// ============================================================

PowerCache::PowerCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;
    char magic[6];
    if (!in.read(magic, 6) || std::memcmp(magic, CACHE_MAGIC, 6) != 0) {
        std::fprintf(stderr, "warning: ignoring cache file %s (bad header)\n",
                     path_.c_str());
        return;
    }
    std::vector<Natural> loaded;
    while (true) {
        // Entry layout: u32 index (LE), u64 limb count (LE), limbs (LE).
        std::uint8_t head[12];
        if (!in.read((char*)head, 12)) break;
        const std::uint32_t idx_le = (std::uint32_t)head[0] |
                                     ((std::uint32_t)head[1] << 8) |
                                     ((std::uint32_t)head[2] << 16) |
                                     ((std::uint32_t)head[3] << 24);
        const std::uint64_t limbs = decode_u64le(head + 4);
        if (idx_le != loaded.size() || limbs == 0 || limbs > (1ull << 26)) {
            std::fprintf(stderr, "warning: ignoring cache file %s (bad entry)\n",
                         path_.c_str());
            return;
        }
        std::vector<std::uint64_t> buf(limbs);
        if (!in.read((char*)buf.data(), (std::streamsize)(limbs * 8))) {
            std::fprintf(stderr, "warning: ignoring cache file %s (truncated)\n",
                         path_.c_str());
            return;
        }
        loaded.push_back(Natural::from_limbs(buf.data(), buf.size()));
    }
    // Validate every entry against an independent modular exponentiation
    // before trusting it.
    const std::uint64_t p = fingerprint_primes()[0];
    for (size_t i = 0; i < loaded.size(); ++i) {
        if (loaded[i].mod_u64(p) != powmod_u64(3, 1ull << i, p)) {
            std::fprintf(stderr, "warning: ignoring cache file %s (failed check)\n",
                         path_.c_str());
            return;
        }
    }
    table_ = std::move(loaded);
    persisted_ = table_.size();
}

const Natural& PowerCache::pow3_2exp(unsigned i) {
    if (i > 30) throw usage_error("power cache index out of range");
    if (table_.empty()) table_.push_back(Natural(3));
    while (table_.size() <= i)
        table_.push_back(table_.back() * table_.back());
    return table_[i];
}

std::uint64_t PowerCache::bytes() const {
    std::uint64_t total = 0;
    for (const auto& n : table_) total += 8 * n.limbs();
    return total;
}

void PowerCache::persist() const {
    if (path_.empty() || table_.size() <= persisted_) return;
    const std::string tmp = path_ + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return;
        out.write(CACHE_MAGIC, 6);
        std::uint8_t head[12];
        for (size_t i = 0; i < table_.size(); ++i) {
            head[0] = (std::uint8_t)i;
            head[1] = (std::uint8_t)(i >> 8);
            head[2] = (std::uint8_t)(i >> 16);
            head[3] = (std::uint8_t)(i >> 24);
            encode_u64le(head + 4, table_[i].limbs());
            out.write((char*)head, 12);
            out.write((const char*)table_[i].data(),
                      (std::streamsize)(table_[i].limbs() * 8));
        }
        if (!out) return;
    }
    if (std::rename(tmp.c_str(), path_.c_str()) == 0)
        persisted_ = table_.size();
}

// ============================================================
// Conversion
// ============================================================

namespace {

// Writes exactly nd digits of v (v < 3^nd) little-endian at out.
void to_ternary_rec(const Natural& v, std::uint64_t nd, std::uint8_t* out,
                    PowerCache& cache) {
    if (nd <= 32) {
        std::uint64_t x = v.to_u64();   // 3^32 < 2^51, so v fits one limb
        for (std::uint64_t i = 0; i < nd; ++i) {
            out[i] = (std::uint8_t)(x % 3);
            x /= 3;
        }
        assert(x == 0);
        return;
    }
    unsigned i = 5;
    while ((2ull << i) < nd) ++i;       // largest 2^i < nd
    const std::uint64_t p = 1ull << i;
    auto [q, r] = Natural::divmod(v, cache.pow3_2exp(i));
    to_ternary_rec(r, p, out, cache);
    to_ternary_rec(q, nd - p, out + p, cache);
}

} // namespace

TernaryExpansion power4_ternary(std::uint64_t m, PowerCache& cache,
                                std::uint64_t mem_cap_bytes) {
    TernaryExpansion x;
    x.m = m;
    const std::uint64_t dub = digit_count_upper(m);
    // Peak transient memory: the digit array, the value and its divmod
    // temporaries (~5x the value size), and the power table (~2x the value).
    const std::uint64_t value_bytes = (2 * m) / 8 + 16;
    const std::uint64_t estimate = dub + 7 * value_bytes;
    if (estimate > mem_cap_bytes) {
        std::ostringstream os;
        os << "m=" << m << " needs ~" << (estimate >> 20)
           << " MiB, cap is " << (mem_cap_bytes >> 20) << " MiB";
        throw resource_error("memory cap exceeded", os.str());
    }
    x.digits.assign(dub, 0);
    to_ternary_rec(Natural::pow2(2 * m), dub, x.digits.data(), cache);
    while (x.digits.size() > 1 && x.digits.back() == 0) x.digits.pop_back();
    return x;
}

// ============================================================
// Fingerprints
// ============================================================

Fingerprint fingerprint_power4(const TernaryExpansion& x, bool cross_check) {
    Fingerprint fp;
    fp.bits = 2 * x.m + 1;
    fp.digit_count = x.digits.size();
    for (const std::uint64_t p : fingerprint_primes()) {
        const std::uint64_t direct = powmod_u64(2, 2 * x.m, p);
        if (cross_check) {
            // Fold the digit string mod p; must reproduce the value residue.
            std::uint64_t acc = 0;
            for (size_t i = x.digits.size(); i-- > 0;)
                acc = (mulmod_u64(acc, 3, p) + x.digits[i]) % p;
            if (acc != direct)
                throw std::logic_error("digit fold disagrees with powmod at m=" +
                                       std::to_string(x.m));
        }
        fp.residues.push_back(direct);
    }
    return fp;
}

// ============================================================
// Windows and descent
// ============================================================

std::uint64_t table_h(std::uint64_t m, PowerCache& cache,
                      std::uint64_t mem_cap_bytes) {
    return scan_runs(power4_ternary(m, cache, mem_cap_bytes).digits).L;
}

CoverageWindow window_for(std::uint64_t m, std::uint64_t h_lemma) {
    if (m == 0) throw usage_error("window needs m >= 1");
    // Predict k_lo = ceil((2m*log3(2) + h)/2) from the fixed-point constant,
    // then settle the boundary with exact comparisons.
    const unsigned __int128 num =
        (unsigned __int128)(2 * m) * LOG3_2_Q96 + ((unsigned __int128)h_lemma << 96);
    std::uint64_t k = (std::uint64_t)(num >> 97) + 1;
    while (compare_power_products(m, h_lemma, k) > 0) ++k;          // 4^m 3^h > 9^k
    while (k > 1 && compare_power_products(m, h_lemma, k - 1) <= 0) --k;
    CoverageWindow w;
    w.k_lo = k;
    w.k_hi = m;
    return w;
}

Verdict verify_window_blocks(const TernaryExpansion& x, const CoverageWindow& w,
                             std::uint64_t h_lemma) {
    if (w.empty()) return make_pass("empty window");
    if (w.k_lo < h_lemma)
        return make_fail("window reaches below digit position 0",
                         "k=" + std::to_string(w.k_lo));
    if (w.k_hi > x.digits.size())
        return make_fail("window exceeds digit count",
                         "k=" + std::to_string(w.k_hi));
    for (std::uint64_t k = w.k_lo; k <= w.k_hi; ++k) {
        const std::uint8_t* blk = x.digits.data() + (k - h_lemma);
        bool all0 = true, all2 = true;
        for (std::uint64_t i = 0; i < h_lemma && (all0 || all2); ++i) {
            all0 &= blk[i] == 0;
            all2 &= blk[i] == 2;
        }
        if (all0 || all2)
            return make_fail("uniform block of length " + std::to_string(h_lemma),
                             "k=" + std::to_string(k));
    }
    return make_pass("no uniform block in any window position");
}

std::uint64_t next_m(std::uint64_t m, std::uint64_t h) {
    return (16 * m + 24) / 25 + h / 2;
}

DescentResult descent(std::uint64_t m_start, std::uint64_t k_min,
                      PowerCache& cache, const DescentOptions& opts) {
    if (m_start == 0 || k_min == 0) throw usage_error("m_start and k_min must be >= 1");
    if (k_min > m_start) throw usage_error("k_min must not exceed m_start");
    using Clock = std::chrono::steady_clock;
    DescentResult res;
    res.m_start = m_start;
    res.k_min = k_min;

    std::uint64_t m = m_start;
    while (true) {
        const auto t0 = Clock::now();
        DescentRow row;
        row.m = m;
        TernaryExpansion x = power4_ternary(m, cache, opts.mem_cap_bytes);
        RunReport runs = scan_runs(x.digits);
        row.h = runs.L;
        row.h_lemma = runs.L + 1;
        row.window = window_for(m, row.h_lemma);
        row.next_m = next_m(m, row.h);
        if (opts.fingerprints) row.fingerprint = fingerprint_power4(x);
        if (opts.verify_blocks) {
            Verdict v = verify_window_blocks(x, row.window, row.h_lemma);
            if (!v.passed) {
                res.coverage = std::move(v);
                res.rows.push_back(std::move(row));
                return res;
            }
        }
        row.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        const bool done = row.window.k_lo <= k_min;
        const std::uint64_t next = row.next_m;
        res.rows.push_back(std::move(row));
        if (done) break;
        // The recurrence can stall for single-digit m; any smaller exponent is
        // an equally valid next row, so force progress by one.
        const std::uint64_t step = next < m ? next : m - 1;
        if (step == 0) {
            res.coverage = make_fail("descent stalled", "m=" + std::to_string(m));
            return res;
        }
        m = step;
    }

    // Coverage: the windows, in row order, must tile [k_min, m_start] with
    // no gap. covered_down_to is the lowest k of the contiguous covered block
    // anchored at m_start.
    std::uint64_t covered_down_to = m_start + 1;
    for (const auto& row : res.rows) {
        const auto& w = row.window;
        if (w.empty()) {
            res.coverage = make_fail("empty window", "m=" + std::to_string(row.m));
            return res;
        }
        if (w.k_hi + 1 < covered_down_to) {
            res.coverage = make_fail("gap between windows",
                                     "uncovered k=" + std::to_string(covered_down_to - 1));
            return res;
        }
        covered_down_to = std::min(covered_down_to, w.k_lo);
        if (covered_down_to <= k_min) break;
    }
    if (covered_down_to > k_min) {
        res.coverage = make_fail("descent fell short",
                                 "uncovered k=" + std::to_string(covered_down_to - 1));
        return res;
    }
    std::ostringstream os;
    os << "windows cover [" << k_min << ", " << m_start << "] in "
       << res.rows.size() << " rows";
    res.coverage = make_pass(os.str());
    return res;
}

} // namespace fracpow
