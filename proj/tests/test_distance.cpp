// Tests for the exact nearest-integer distance checks: hand-checked small
// exponents, an independent rational oracle, worker-count invariance, and the
// fixed-point power comparison against exact big-integer arithmetic.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracpow/distance.hpp"
#include "fracpow/errors.hpp"
#include "fracpow/natural.hpp"
#include "fracpow/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

using namespace fracpow;

namespace {

std::mt19937_64 rng(0x9e3779b97f4a7c15ull);

// Independent oracle: exact rational (4/3)^k minus its nearest integer.
Ratio offset_oracle(std::uint64_t k) {
    const Ratio x(Int(Natural::pow2(2 * k)), Natural::pow(3, k));
    return x - Ratio::from_int(x.round_nearest());
}

int exact_power_sign(std::uint64_t m, std::uint64_t h, std::uint64_t k) {
    const Natural lhs = Natural::pow2(2 * m) * Natural::pow(3, h);
    return Natural::cmp(lhs, Natural::pow(3, 2 * k));
}

} // namespace

TEST_CASE("small exponents match hand-checked values") {
    struct Row {
        std::uint64_t k;
        std::uint64_t residue;
        std::int64_t num, den;
        Side side;
    };
    // (4/3)^k = 16/9, 64/27, 256/81, 1024/243, 4096/729 for k = 2..6.
    const Row rows[] = {
        {2, 7, -2, 9, Side::below},
        {3, 10, 10, 27, Side::above},
        {4, 13, 13, 81, Side::above},
        {5, 52, 52, 243, Side::above},
        {6, 451, -278, 729, Side::below},
    };
    for (const Row& row : rows) {
        const DistanceResult d = power_distance(row.k);
        CHECK(d.k == row.k);
        CHECK(d.residue_r == Natural(row.residue));
        CHECK(d.eps == Ratio(row.num, row.den));
        CHECK(d.side == row.side);
    }
}

TEST_CASE("offset agrees with a direct rational recomputation") {
    for (std::uint64_t k = 1; k <= 300; ++k) {
        const DistanceResult d = power_distance(k);
        const Ratio expect = offset_oracle(k);
        CHECK(d.eps == expect);
        CHECK(d.eps.abs() < Ratio(1, 2));
        CHECK((d.side == Side::above) == (d.eps.sign() > 0));
        // The residue is 4^k mod 3^k by definition.
        const Natural r =
            Natural::divmod(Natural::pow2(2 * k), Natural::pow(3, k)).second;
        CHECK(d.residue_r == r);
    }
}

TEST_CASE("strictness criterion equals the rational inequality |eps| > (4/9)^k") {
    for (std::uint64_t k = 1; k <= 220; ++k) {
        const Ratio bound(Int(Natural::pow2(2 * k)), Natural::pow(3, 2 * k));
        const bool expect = power_distance(k).eps.abs() > bound;
        CHECK(check_k(k).passed == expect);
    }
}

TEST_CASE("k = 1 is the lone failure below 2000") {
    const Verdict one = check_k(1);
    CHECK_FALSE(one.passed);
    REQUIRE(one.witness.has_value());
    CHECK(*one.witness == "1");

    CHECK(check_range(2, 2000).passed);
    const Verdict whole = check_range(1, 64);
    CHECK_FALSE(whole.passed);
    REQUIRE(whole.witness.has_value());
    CHECK(*whole.witness == "1");
}

TEST_CASE("range verdicts are independent of the worker count") {
    const Verdict base = check_range(2, 1200, 1);
    for (unsigned workers : {2u, 3u, 5u, 8u}) {
        const Verdict v = check_range(2, 1200, workers);
        CHECK(v.passed == base.passed);
        CHECK(v.detail == base.detail);
        CHECK(v.witness == base.witness);
    }
    // Failures are collected in ascending k order regardless of chunking.
    const Verdict f1 = check_range(1, 40, 1);
    const Verdict f4 = check_range(1, 40, 4);
    CHECK(f1.detail == f4.detail);
    CHECK(f1.witness == f4.witness);
}

TEST_CASE("power comparison: fixed edge cases") {
    CHECK(compare_power_products(0, 2, 1) == 0);   // 9 = 9
    CHECK(compare_power_products(0, 3, 1) == 1);   // 27 > 9
    CHECK(compare_power_products(0, 1, 1) == -1);  // 3 < 9
    CHECK(compare_power_products(1, 0, 1) == -1);  // 4 < 9
    CHECK(compare_power_products(2, 1, 2) == -1);  // 48 < 81
    CHECK(compare_power_products(5, 2, 3) == 1);   // 9216 > 729
    CHECK(compare_power_products(19, 0, 12) == exact_power_sign(19, 0, 12));
}

TEST_CASE("power comparison agrees with exact arithmetic on random triples") {
    std::uniform_int_distribution<std::uint64_t> dist(0, 4000);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t m = dist(rng), h = dist(rng), k = dist(rng);
        CHECK(compare_power_products(m, h, k) == exact_power_sign(m, h, k));
    }
}

TEST_CASE("power comparison survives the hardest rational approximations") {
    // Continued-fraction convergents p/q of log2(3). Choosing h = k = q makes
    // the decision "2m versus q*log2(3)", which is as close as integers get
    // to the irrational line; m near p/2 probes both sides and the fallback.
    struct PQ { std::uint64_t p, q; };
    const PQ conv[] = {{2, 1},     {3, 2},      {8, 5},       {19, 12},
                       {65, 41},   {84, 53},    {485, 306},   {1054, 665},
                       {24727, 15601}, {125743, 79335}, {301994, 190537}};
    for (const PQ& c : conv) {
        for (std::int64_t dm = -2; dm <= 2; ++dm) {
            const std::int64_t m0 = (std::int64_t)(c.p / 2) + dm;
            if (m0 < 0) continue;
            const std::uint64_t m = (std::uint64_t)m0;
            CHECK(compare_power_products(m, c.q, c.q) ==
                  exact_power_sign(m, c.q, c.q));
        }
    }
}

TEST_CASE("usage guards reject out-of-domain arguments") {
    CHECK_THROWS_AS(power_distance(0), usage_error);
    CHECK_THROWS_AS(check_k(0), usage_error);
    CHECK_THROWS_AS(check_range(0, 5), usage_error);
    CHECK_THROWS_AS(check_range(7, 3), usage_error);
    CHECK_THROWS_AS(compare_power_products(1ull << 30, 0, 1), usage_error);
    CHECK_THROWS_AS(compare_power_products(1, 0, 1ull << 29), usage_error);
}
