// Property tests for Natural / Int / Ratio against GMP as an external oracle.
// GMP is linked into this test binary only; the library itself never uses it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracpow/natural.hpp"
#include "fracpow/rational.hpp"

#include <cstring>
#include <random>
#include <string>
#include <vector>

#ifdef FRACPOW_TEST_HAVE_GMP
#include <gmp.h>
#endif

using fracpow::Natural;
using fracpow::Int;
using fracpow::Ratio;
using fracpow::binomial;

namespace {

std::mt19937_64 rng(0x5eed1234abcdef01ull);

Natural random_natural(size_t limbs, bool dense = false) {
    std::vector<std::uint64_t> v(limbs);
    for (auto& x : v) {
        if (dense) {
            // Mostly 0xFF..F / 0 limbs: stresses carry chains and div estimates.
            switch (rng() % 4) {
                case 0: x = ~0ull; break;
                case 1: x = 0; break;
                case 2: x = 1ull << (rng() % 64); break;
                default: x = rng(); break;
            }
        } else {
            x = rng();
        }
    }
    if (!v.empty() && v.back() == 0) v.back() = rng() | 1;
    return Natural::from_limbs(v.data(), v.size());
}

#ifdef FRACPOW_TEST_HAVE_GMP
struct Mpz {
    mpz_t z;
    Mpz() { mpz_init(z); }
    explicit Mpz(const Natural& n) {
        mpz_init(z);
        if (!n.is_zero())
            mpz_import(z, n.limbs(), -1, sizeof(std::uint64_t), 0, 0, n.data());
    }
    ~Mpz() { mpz_clear(z); }
    Mpz(const Mpz&) = delete;
    Mpz& operator=(const Mpz&) = delete;
    Natural to_natural() const {
        if (mpz_sgn(z) == 0) return Natural();
        size_t count = 0;
        std::vector<std::uint64_t> v((mpz_sizeinbase(z, 2) + 63) / 64);
        mpz_export(v.data(), &count, -1, sizeof(std::uint64_t), 0, 0, z);
        return Natural::from_limbs(v.data(), count);
    }
};

bool equals(const Natural& a, const mpz_t z) {
    Mpz mine;
    if (!a.is_zero())
        mpz_import(mine.z, a.limbs(), -1, sizeof(std::uint64_t), 0, 0, a.data());
    return mpz_cmp(mine.z, z) == 0;
}

TEST_CASE("add/sub match GMP across sizes") {
    for (int iter = 0; iter < 400; ++iter) {
        const size_t an = rng() % 130, bn = rng() % 130;
        Natural a = random_natural(an, iter % 3 == 0);
        Natural b = random_natural(bn, iter % 3 == 0);
        Mpz za(a), zb(b), zr;
        mpz_add(zr.z, za.z, zb.z);
        REQUIRE(equals(a + b, zr.z));
        if (Natural::cmp(a, b) >= 0) {
            mpz_sub(zr.z, za.z, zb.z);
            REQUIRE(equals(a - b, zr.z));
        }
    }
    // A couple of large ones.
    Natural a = random_natural(3000), b = random_natural(2500);
    Mpz za(a), zb(b), zr;
    mpz_add(zr.z, za.z, zb.z);
    CHECK(equals(a + b, zr.z));
    mpz_sub(zr.z, za.z, zb.z);
    CHECK(equals(a - b, zr.z));
}

TEST_CASE("multiplication matches GMP: basecase, balanced, unbalanced") {
    auto check_mul = [](const Natural& a, const Natural& b) {
        Mpz za(a), zb(b), zr;
        mpz_mul(zr.z, za.z, zb.z);
        REQUIRE(equals(a * b, zr.z));
    };
    for (int iter = 0; iter < 200; ++iter) {
        check_mul(random_natural(rng() % 40, iter % 2),
                  random_natural(rng() % 40, iter % 2));
    }
    for (int iter = 0; iter < 30; ++iter) {
        const size_t n = 33 + rng() % 400;
        check_mul(random_natural(n, iter % 2), random_natural(n, iter % 3 == 0));
    }
    for (int iter = 0; iter < 30; ++iter) {
        check_mul(random_natural(500 + rng() % 900, iter % 2),
                  random_natural(33 + rng() % 120, iter % 2));
    }
    check_mul(random_natural(2048), random_natural(2048));
    check_mul(random_natural(5000), random_natural(170));
}

TEST_CASE("division matches GMP across shape regimes") {
    auto check_div = [](const Natural& a, const Natural& b) {
        Mpz za(a), zb(b), zq, zr;
        mpz_tdiv_qr(zq.z, zr.z, za.z, zb.z);
        auto [q, r] = Natural::divmod(a, b);
        REQUIRE(equals(q, zq.z));
        REQUIRE(equals(r, zr.z));
    };
    for (int iter = 0; iter < 300; ++iter) {
        // Small generic shapes, half of them with adversarial limb patterns.
        Natural b = random_natural(1 + rng() % 60, iter % 2);
        Natural a = random_natural(rng() % 140, iter % 2);
        check_div(a, b);
    }
    for (int iter = 0; iter < 20; ++iter) {
        // Balanced 2n/n, crossing the recursive threshold.
        const size_t n = 40 + rng() % 300;
        check_div(random_natural(2 * n, iter % 2), random_natural(n, iter % 2));
    }
    for (int iter = 0; iter < 20; ++iter) {
        // Short quotient: divisor nearly as long as the dividend.
        const size_t n = 80 + rng() % 400;
        check_div(random_natural(n + 1 + rng() % 50, iter % 2),
                  random_natural(n, iter % 2));
    }
    for (int iter = 0; iter < 12; ++iter) {
        // Long quotient: dividend several times the divisor.
        const size_t n = 40 + rng() % 120;
        check_div(random_natural(n * (3 + rng() % 5) + rng() % n, iter % 2),
                  random_natural(n, iter % 2));
    }
    // Exact products must give zero remainders.
    for (int iter = 0; iter < 10; ++iter) {
        Natural b = random_natural(50 + rng() % 200);
        Natural q = random_natural(50 + rng() % 200);
        Natural a = b * q;
        auto [q2, r2] = Natural::divmod(a, b);
        REQUIRE(q2 == q);
        REQUIRE(r2.is_zero());
    }
    check_div(random_natural(3000), random_natural(1400));
    check_div(random_natural(4000), random_natural(280));
    check_div(random_natural(100), random_natural(400));   // a < b
}

TEST_CASE("shifts match GMP") {
    for (int iter = 0; iter < 200; ++iter) {
        Natural a = random_natural(rng() % 80, iter % 2);
        const unsigned long bits = rng() % 500;
        Mpz za(a), zr;
        mpz_mul_2exp(zr.z, za.z, bits);
        REQUIRE(equals(a.shl(bits), zr.z));
        mpz_tdiv_q_2exp(zr.z, za.z, bits);
        REQUIRE(equals(a.shr(bits), zr.z));
    }
}

TEST_CASE("pow and pow2 match GMP") {
    for (std::uint64_t e : {0ull, 1ull, 2ull, 17ull, 64ull, 1000ull, 20001ull}) {
        Mpz zr;
        mpz_ui_pow_ui(zr.z, 3, e);
        REQUIRE(equals(Natural::pow(3, e), zr.z));
    }
    Mpz zr;
    mpz_ui_pow_ui(zr.z, 2, 12345);
    CHECK(equals(Natural::pow2(12345), zr.z));
}

TEST_CASE("decimal conversion round-trips and matches GMP digits") {
    for (int iter = 0; iter < 60; ++iter) {
        Natural a = random_natural(rng() % 300, iter % 2);
        const std::string mine = a.to_decimal();
        Mpz za(a);
        char* s = mpz_get_str(nullptr, 10, za.z);
        CHECK(mine == s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, std::strlen(s) + 1);
        CHECK(Natural::from_decimal(mine) == a);
    }
    Natural big = random_natural(4000);
    CHECK(Natural::from_decimal(big.to_decimal()) == big);
}

TEST_CASE("gcd matches GMP") {
    for (int iter = 0; iter < 80; ++iter) {
        Natural a = random_natural(rng() % 60, iter % 2);
        Natural b = random_natural(rng() % 60, iter % 2);
        Mpz za(a), zb(b), zr;
        mpz_gcd(zr.z, za.z, zb.z);
        REQUIRE(equals(Natural::gcd(a, b), zr.z));
    }
    // Common power-of-two factors.
    Natural a = random_natural(40).shl(67);
    Natural b = random_natural(35).shl(129);
    Mpz za(a), zb(b), zr;
    mpz_gcd(zr.z, za.z, zb.z);
    CHECK(equals(Natural::gcd(a, b), zr.z));
}

TEST_CASE("bit_length and word ops match GMP") {
    for (int iter = 0; iter < 100; ++iter) {
        Natural a = random_natural(1 + rng() % 50, iter % 2);
        Mpz za(a);
        CHECK(a.bit_length() == mpz_sizeinbase(za.z, 2));
        const std::uint64_t d = (rng() | 1);
        Mpz zq, zr2;
        mpz_tdiv_qr_ui(zq.z, zr2.z, za.z, d);
        auto [q, r] = a.divrem_u64(d);
        REQUIRE(equals(q, zq.z));
        REQUIRE(r == mpz_get_ui(zr2.z));
        REQUIRE(a.mod_u64(d) == r);
    }
}
#endif // FRACPOW_TEST_HAVE_GMP

TEST_CASE("decimal parsing rejects junk and normalizes zeros") {
    CHECK(Natural::from_decimal("0") == Natural());
    CHECK(Natural::from_decimal("000123") == Natural(123));
    CHECK(Natural::from_decimal("18446744073709551616") ==
          Natural::pow2(64));
    CHECK_THROWS_AS((void)Natural::from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS((void)Natural::from_decimal("12x3"), std::invalid_argument);
    CHECK_THROWS_AS((void)Natural::from_decimal("-5"), std::invalid_argument);
    CHECK(Natural().to_decimal() == "0");
}

TEST_CASE("Int arithmetic agrees with native on small operands") {
    std::uniform_int_distribution<std::int64_t> dist(-(1ll << 31), 1ll << 31);
    for (int iter = 0; iter < 500; ++iter) {
        const std::int64_t a = dist(rng), b = dist(rng);
        CHECK((Int(a) + Int(b)).to_decimal() == std::to_string(a + b));
        CHECK((Int(a) - Int(b)).to_decimal() == std::to_string(a - b));
        CHECK((Int(a) * Int(b)).to_decimal() == std::to_string(a * b));
        CHECK(Int::cmp(Int(a), Int(b)) == (a < b ? -1 : a > b ? 1 : 0));
    }
    CHECK((Int(-6) * Int(7)).divexact(Int(-3)) == Int(14));
    CHECK(Int(-7).mod_u64(5) == 3);
    CHECK(Int(7).mod_u64(5) == 2);
}

TEST_CASE("Ratio invariants: reduction, field identities, floor/frac") {
    std::uniform_int_distribution<std::int64_t> dist(-2000, 2000);
    for (int iter = 0; iter < 400; ++iter) {
        std::int64_t an = dist(rng), ad = dist(rng), bn = dist(rng), bd = dist(rng);
        if (ad == 0 || bd == 0) continue;
        Ratio a(an, ad), b(bn, bd);
        // Reduced representation.
        CHECK(Natural::gcd(a.num().mag(), a.den()) == Natural(1));
        // Group/field identities.
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(a * b == b * a);
        // floor + frac decomposition.
        Ratio f = a.frac();
        CHECK(Ratio::from_int(a.floor()) + f == a);
        CHECK(f >= Ratio(0));
        CHECK(f < Ratio(1));
        // round_nearest within 1/2.
        Ratio d = (a - Ratio::from_int(a.round_nearest())).abs();
        CHECK(d <= Ratio(1, 2));
    }
    CHECK(Ratio(-7, 2).floor() == Int(-4));
    CHECK(Ratio(7, 2).floor() == Int(3));
    CHECK(Ratio(1, 3).to_decimal(6) == "0.333333");
    CHECK(Ratio(-22, 7).to_decimal(4) == "-3.1428");
    CHECK(Ratio(5, 1).to_decimal(0) == "5");
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == Natural(1));
    CHECK(binomial(5, 2) == Natural(10));
    CHECK(binomial(5, 6) == Natural());
    CHECK(binomial(52, 5) == Natural(2598960));
    CHECK(binomial(100, 50).to_decimal() ==
          "100891344545564193334812497256");
    // Pascal identity on a random patch.
    for (int iter = 0; iter < 50; ++iter) {
        const std::uint64_t n = 1 + rng() % 80, k = 1 + rng() % n;
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

} // namespace
