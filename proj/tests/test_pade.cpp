// Tests for the rational-approximation engine: frozen coefficient vectors,
// a factorial-form cross-check of the q coefficients, order verification,
// exact closed-form values of the two base evaluations, prime-product
// divisibility of the coefficients, the integer congruence of the scaled
// series, and the frozen integer witnesses.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fracpow/errors.hpp"
#include "fracpow/pade.hpp"
#include "fracpow/primes.hpp"
#include "fracpow/rational.hpp"

#include <cstdint>
#include <vector>

using namespace fracpow;

namespace {

Natural factorial(std::uint64_t n) {
    Natural f(1);
    for (std::uint64_t i = 2; i <= n; ++i) f = f.mul_u64(i);
    return f;
}

// Independent closed form: |q_mu| = (a+b+n)! (a+n+mu-1)! /
// ((a+n-1)! (a+b+mu)! mu! (n-mu)!).
Natural q_magnitude_factorial_form(std::uint64_t a, std::uint64_t b,
                                   std::uint64_t n, std::uint64_t mu) {
    const Natural num = factorial(a + b + n) * factorial(a + n + mu - 1);
    const Natural den = factorial(a + n - 1) * factorial(a + b + mu) *
                        factorial(mu) * factorial(n - mu);
    auto [quot, rem] = Natural::divmod(num, den);
    REQUIRE(rem.is_zero());
    return quot;
}

bool divides(const Natural& d, const Natural& v) {
    return Natural::divmod(v, d).second.is_zero();
}

} // namespace

TEST_CASE("coefficients at a=3, b=9, n=4 are the hand-checked vectors") {
    const PadeParams pp{3, 9, 4};
    const std::vector<Int> q = q_polynomial(pp);
    REQUIRE(q.size() == 5);
    const std::int64_t q_expect[] = {1820, -3920, 3360, -1344, 210};
    for (size_t i = 0; i < 5; ++i) CHECK(q[i] == Int(q_expect[i]));

    const std::vector<Int> p = p_polynomial(pp, series_f(3, 9, 5));
    REQUIRE(p.size() == 5);
    const std::int64_t p_expect[] = {0, -99638, 198660, -145530, 46200};
    for (size_t i = 0; i < 5; ++i) CHECK(p[i] == Int(p_expect[i]));

    CHECK(q_at_minus8(pp) == Int(1796508));
}

TEST_CASE("q coefficients match their factorial closed form") {
    const PadeParams cases[] = {{3, 9, 4}, {1, 3, 1}, {2, 6, 3}, {6, 18, 8},
                                {4, 13, 9}};
    for (const PadeParams& pp : cases) {
        const std::vector<Int> q = q_polynomial(pp);
        for (std::uint64_t mu = 0; mu <= pp.n; ++mu) {
            const Natural want =
                q_magnitude_factorial_form(pp.a, pp.b, pp.n, mu);
            CHECK(q[mu].mag() == want);
            CHECK(q[mu].sign() == (mu & 1 ? -1 : 1));
        }
    }
}

TEST_CASE("p starts with a zero and ends with a nonzero across a sweep") {
    for (std::uint64_t a = 1; a <= 4; ++a) {
        for (std::uint64_t b = 3 * a; b <= 3 * a + 6; ++b) {
            for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(b, 6); ++n) {
                const PadeParams pp{a, b, n};
                const std::vector<Int> f = series_f(a, b, n + 1);
                const std::vector<Int> p = p_polynomial(pp, f);
                REQUIRE(p.size() == n + 1);
                CHECK(p[0].is_zero());
                CHECK(!p[n].is_zero());
            }
        }
    }
}

TEST_CASE("defect coefficients vanish exactly up to the order") {
    for (std::uint64_t a = 1; a <= 3; ++a)
        for (std::uint64_t b = 3 * a; b <= 3 * a + 4; ++b)
            for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(b, 5); ++n)
                CHECK(verify_pade_order(PadeParams{a, b, n}, n + 6).passed);
    // The family the certificates use, at useful sizes.
    for (std::uint64_t m = 1; m <= 12; ++m)
        CHECK(verify_pade_order(PadeParams{3 * m, 9 * m, 4 * m}, 4 * m + 8).passed);
}

TEST_CASE("base evaluations have exact closed forms") {
    // Q_4(-8) = 10090080 * 7129/40040 and R_4(-1/8) = 10090080/4096 * I where
    // I is the exact rational value of the remainder integral.
    const Ratio c(10090080, 1);
    CHECK(Ratio::from_int(q_at_minus8(PadeParams{3, 9, 4})) ==
          c * Ratio(7129, 40040));

    const Ratio integral(Int::from_decimal("3316041728"),
                         Natural::from_decimal("17451355927005"));
    const Ratio expect = c * integral / Ratio(4096, 1);
    for (size_t terms : {8, 16, 40}) {
        const RemainderEval e =
            r_series_eval(PadeParams{3, 9, 4}, Ratio(-1, 8), terms);
        CHECK((e.partial - expect).abs() <= e.tail_bound);
    }
    // The tail certificate shrinks as terms are added.
    const RemainderEval e8 = r_series_eval(PadeParams{3, 9, 4}, Ratio(-1, 8), 8);
    const RemainderEval e40 =
        r_series_eval(PadeParams{3, 9, 4}, Ratio(-1, 8), 40);
    CHECK(e40.tail_bound < e8.tail_bound);
}

TEST_CASE("prime products divide every coefficient") {
    for (std::uint64_t m = 1; m <= 12; ++m) {
        const std::uint64_t a = 3 * m, b = 9 * m, n = 4 * m;

        const Natural phi = phi_product(a, b, n, false).value;
        const PadeParams pp{a, b, n};
        const std::vector<Int> q = q_polynomial(pp);
        const std::vector<Int> p = p_polynomial(pp, series_f(a, b, n + 1));
        for (const Int& c : q) CHECK(divides(phi, c.mag()));
        for (const Int& c : p) CHECK(divides(phi, c.mag()));

        // Order n+1: the primed product divides (n+1) times each coefficient.
        const Natural phiP = phi_product(a, b, n, true).value;
        const PadeParams pp1{a, b, n + 1};
        const std::vector<Int> q1 = q_polynomial(pp1);
        const std::vector<Int> p1 = p_polynomial(pp1, series_f(a, b, n + 2));
        for (const Int& c : q1) CHECK(divides(phiP, c.mag().mul_u64(n + 1)));
        for (const Int& c : p1) CHECK(divides(phiP, c.mag().mul_u64(n + 1)));
    }
}

TEST_CASE("scaled series lands next to an integer within its tail bound") {
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{1, 3},
                        {2, 6}, {3, 9}}) {
        const CongruenceCheck c = residue_congruence_check(a, b, 200);
        CHECK(c.within);
        CHECK(c.residual <= c.tail_bound);
        CHECK(c.tail_bound < Ratio(1, 1000000));
    }
}

TEST_CASE("integer witnesses match their frozen values") {
    struct Frozen {
        std::uint64_t m, j;
        WitnessVariant variant;
        const char* value;
    };
    const auto N = WitnessVariant::order_n;
    const auto N1 = WitnessVariant::order_n_plus_one;
    const Frozen rows[] = {
        {1, 1, N, "345808"},
        {1, 1, N1, "79513840"},
        {1, 9, N, "-1266613472"},
        {1, 9, N1, "-291249045920"},
        {1, 17, N, "4130005946008"},
        {1, 17, N1, "949110771903880"},
        {2, 1, N, "-34063227240"},
        {2, 1, N1, "-10765126734120"},
        {2, 9, N, "-42872773150827420"},
        {2, 9, N1, "-13549239866454021180"},
        {2, 17, N, "803545854504939993720"},
        {2, 17, N1, "253947545884082363484600"},
    };
    for (const Frozen& row : rows) {
        const Eq15Witness w = eq15_witness(row.m, row.j, row.variant);
        CHECK(w.k == 18 * row.m + 2 + row.j);
        CHECK(w.m_value == Int::from_decimal(row.value));
        CHECK(w.residual <= w.residual_bound);
        CHECK(w.residual_bound < Ratio(1, 4));
        CHECK(w.nonzero);
        CHECK(w.terms > 0);
    }
}

TEST_CASE("witnesses stay nonzero out to m = 12") {
    for (std::uint64_t j : {1, 9, 17}) {
        for (WitnessVariant v :
             {WitnessVariant::order_n, WitnessVariant::order_n_plus_one}) {
            const Eq15Witness w = eq15_witness(12, j, v);
            CHECK(w.nonzero);
            CHECK(w.residual <= w.residual_bound);
            CHECK(w.residual_bound < Ratio(1, 4));
        }
    }
}

TEST_CASE("usage guards on parameters and domains") {
    CHECK_THROWS_AS(q_polynomial(PadeParams{0, 9, 4}), usage_error);
    CHECK_THROWS_AS(q_polynomial(PadeParams{3, 8, 4}), usage_error);
    CHECK_THROWS_AS(q_polynomial(PadeParams{3, 9, 10}), usage_error);
    CHECK_THROWS_AS(r_series_eval(PadeParams{3, 9, 4}, Ratio(), 8), usage_error);
    CHECK_THROWS_AS(r_series_eval(PadeParams{3, 9, 4}, Ratio(-1, 8), 0),
                    usage_error);
    CHECK_THROWS_AS(verify_pade_order(PadeParams{3, 9, 4}, 8), usage_error);
    CHECK_THROWS_AS(residue_congruence_check(2, 5, 50), usage_error);
    CHECK_THROWS_AS(eq15_witness(0, 1, WitnessVariant::order_n), usage_error);
    CHECK_THROWS_AS(eq15_witness(1, 0, WitnessVariant::order_n), usage_error);
    CHECK_THROWS_AS(eq15_witness(1, 18, WitnessVariant::order_n), usage_error);
}
