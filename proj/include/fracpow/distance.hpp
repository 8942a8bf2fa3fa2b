#pragma once
// distance.hpp - exact verification that (4/3)^k stays farther than (4/9)^k
// from the nearest integer, in the equivalent integer form
//     min(r, 3^k - r) * 3^k > 4^k,   r = 4^k mod 3^k.

#include "fracpow/natural.hpp"
#include "fracpow/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace fracpow {

struct Verdict {
    bool passed = false;
    std::string detail;
    std::optional<std::string> witness;   // present whenever passed == false
};

Verdict make_pass(std::string detail);
Verdict make_fail(std::string detail, std::string witness);

// Which side of the nearest integer (4/3)^k falls on.
enum class Side { above, below };

struct DistanceResult {
    std::uint64_t k = 0;
    Natural residue_r;    // 4^k mod 3^k
    Ratio eps;            // signed fractional offset: (4/3)^k - nearest integer
    Side side = Side::above;
};

// Exact distance data for one exponent. k >= 1.
DistanceResult power_distance(std::uint64_t k);

// Exact strict test for one exponent, with a mod-3 cross-check that the two
// sides of the comparison can never be equal. k >= 1.
Verdict check_k(std::uint64_t k);

// Tests every k in [from, to]; result is independent of the worker count.
Verdict check_range(std::uint64_t from, std::uint64_t to, unsigned workers = 1);

// Sign of 4^m * 3^h - 9^k. Uses a 96-bit fixed-point bound on log2(3) that is
// decisive except in a ~d/2^96 band; the band falls back to exact powers.
int compare_power_products(std::uint64_t m, std::uint64_t h, std::uint64_t k);

} // namespace fracpow
