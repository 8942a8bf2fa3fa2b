// distance.cpp - exact distance checks for single exponents and ranges.

#include "fracpow/distance.hpp"

#include "fracpow/errors.hpp"
#include "fracpow/pool.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <vector>

namespace fracpow {

Verdict make_pass(std::string detail) {
    Verdict v;
    v.passed = true;
    v.detail = std::move(detail);
    return v;
}

Verdict make_fail(std::string detail, std::string witness) {
    Verdict v;
    v.passed = false;
    v.detail = std::move(detail);
    v.witness = std::move(witness);
    return v;
}

namespace {

struct KData {
    Natural p3;          // 3^k
    Natural p4;          // 4^k
    Natural r;           // 4^k mod 3^k
    Natural nearer;      // min(r, 3^k - r)
    Side side;
};

KData k_data(std::uint64_t k, const Natural& p3) {
    KData d;
    d.p3 = p3;
    d.p4 = Natural::pow2(2 * k);
    d.r = Natural::divmod(d.p4, d.p3).second;
    Natural other = d.p3 - d.r;
    // 3^k is odd, so r == 3^k - r is impossible.
    assert(d.r != other);
    if (d.r < other) {
        d.nearer = d.r;
        d.side = Side::above;
    } else {
        d.nearer = std::move(other);
        d.side = Side::below;
    }
    return d;
}

// Strict inequality min(r, 3^k - r) * 3^k > 4^k, with the congruence guard:
// the left side is divisible by 3 while 4^k = 1 (mod 3), so ties are
// impossible; the guard also confirms r is not a multiple of 3.
bool k_passes(std::uint64_t k, const KData& d, std::string* why) {
    const std::uint64_t r_mod3 = d.r.mod_u64(3);
    const std::uint64_t p4_mod3 = d.p4.mod_u64(3);
    if (r_mod3 == 0 || p4_mod3 != 1)
        throw std::logic_error("mod-3 invariant violated at k=" + std::to_string(k));
    const Natural lhs = d.nearer * d.p3;
    const int c = Natural::cmp(lhs, d.p4);
    if (c == 0)
        throw std::logic_error("impossible tie at k=" + std::to_string(k));
    if (c > 0) return true;
    if (why) {
        std::ostringstream os;
        os << "k=" << k << ": min(r,3^k-r)*3^k <= 4^k";
        *why = os.str();
    }
    return false;
}

} // namespace

DistanceResult power_distance(std::uint64_t k) {
    if (k == 0) throw usage_error("k must be >= 1");
    KData d = k_data(k, Natural::pow(3, k));
    DistanceResult res;
    res.k = k;
    res.residue_r = d.r;
    res.side = d.side;
    const int sign = d.side == Side::above ? 1 : -1;
    res.eps = Ratio(Int(d.nearer, sign), d.p3);
    return res;
}

Verdict check_k(std::uint64_t k) {
    if (k == 0) throw usage_error("k must be >= 1");
    KData d = k_data(k, Natural::pow(3, k));
    std::string why;
    if (k_passes(k, d, &why))
        return make_pass("k=" + std::to_string(k) + ": strict");
    return make_fail(why, std::to_string(k));
}

Verdict check_range(std::uint64_t from, std::uint64_t to, unsigned workers) {
    if (from == 0) throw usage_error("range must start at k >= 1");
    if (from > to) throw usage_error("empty range");
    const std::uint64_t span = to - from + 1;
    const unsigned nw = std::max(1u, workers);
    const std::uint64_t per = (span + nw - 1) / nw;
    const std::size_t chunks = (std::size_t)((span + per - 1) / per);

    std::vector<std::vector<std::uint64_t>> failures(chunks);
    parallel_for(chunks, nw, [&](std::size_t c) {
        const std::uint64_t lo = from + (std::uint64_t)c * per;
        const std::uint64_t hi = std::min(to, lo + per - 1);
        Natural p3 = Natural::pow(3, lo);
        for (std::uint64_t k = lo; k <= hi; ++k) {
            KData d = k_data(k, p3);
            if (!k_passes(k, d, nullptr)) failures[c].push_back(k);
            p3 = p3.mul_u64(3);
        }
    });

    std::vector<std::uint64_t> all;
    for (const auto& f : failures) all.insert(all.end(), f.begin(), f.end());
    std::ostringstream os;
    os << "checked k in [" << from << ", " << to << "]";
    if (all.empty()) return make_pass(os.str() + ": all strict");
    os << ": " << all.size() << " failures";
    std::ostringstream ws;
    for (size_t i = 0; i < all.size(); ++i) ws << (i ? "," : "") << all[i];
    return make_fail(os.str(), ws.str());
}

namespace {
// floor(2^96 * log2(3)); one unit in the last place below the true value.
constexpr unsigned __int128 LOG2_3_Q96 =
    ((unsigned __int128)0x195C01A39ull << 64) | 0xFBD6879FA00B120Aull;
} // namespace

int compare_power_products(std::uint64_t m, std::uint64_t h, std::uint64_t k) {
    if (k >= (1ull << 62) || m >= (1ull << 30))
        throw usage_error("exponents exceed the fixed-point comparison range");
    if (2 * k < h) return 1;   // 9^k < 3^h <= 4^m 3^h
    const std::uint64_t d = 2 * k - h;
    if (d >= (1ull << 30))
        throw usage_error("exponents exceed the fixed-point comparison range");
    if (d == 0) return m > 0 ? 1 : 0;
    if (m == 0) return -1;
    // 4^m 3^h <=> 9^k reduces to 2m <=> d*log2(3). With ulp error bounded by
    // d < 2^96, the scaled comparison is decisive outside [d*C, d*C + d].
    const unsigned __int128 x = ((unsigned __int128)(2 * m)) << 96;
    const unsigned __int128 lo = (unsigned __int128)d * LOG2_3_Q96;
    if (x <= lo) return -1;
    if (x > lo + d) return 1;
    // Ambiguous band: settle exactly. Equality would force 2^2m = 3^d, which
    // unique factorization rules out for m, d >= 1.
    const int c = Natural::cmp(Natural::pow2(2 * m), Natural::pow(3, d));
    assert(c != 0);
    return c;
}

} // namespace fracpow
