#include "fracpow/ledger.hpp"

#include "fracpow/errors.hpp"
#include "fracpow/primes.hpp"

#include <cstdio>
#include <stdexcept>
#include <utility>

namespace fracpow {
namespace {

// Printed decimal constants in millionths, each one-sided in the direction
// the chain consumes it (upper bounds unless noted otherwise).
constexpr std::int64_t kMillion = 1000000;
constexpr std::int64_t kMultinomialSlope = 17147682; // log prefactor per m
constexpr std::int64_t kKernelMaxR = -7884160;       // log sup, remainder kernel
constexpr std::int64_t kKernelMaxQ = -945755;        // log sup, quotient kernel
constexpr std::int64_t kLogR0 = -8568400;
constexpr std::int64_t kLogR1 = -10140038;
constexpr std::int64_t kLogQ0 = -1725707;
constexpr std::int64_t kLogQ1 = 878883;
constexpr std::int64_t kPhiRate = 1639533;           // lower bound per m
constexpr std::int64_t kRemIcptBase = 23575912;
constexpr std::int64_t kRemIcptPlus = 21924832;
constexpr std::int64_t kEpsSlope = -14562394;
constexpr std::int64_t kAbsorb = 20;                 // log(4m+1) <= 20e-6 m

// The distance slope is the exact millionths combination of the prime
// product rate, the prefactor slope, and the quotient kernel maximum.
static_assert(kPhiRate - kMultinomialSlope + (-kKernelMaxQ) == kEpsSlope);
// Chain intercepts in millionths, as combined below.
constexpr std::int64_t kEpsIcptBase = kKernelMaxQ - kLogQ0;             // 779952
constexpr std::int64_t kEpsIcptPlus = -kMillion + kKernelMaxQ - kLogQ1; // -2824638
static_assert(kEpsIcptBase == 779952 && kEpsIcptPlus == -2824638);

// The asymptotic regime starts here: below it the exhaustive descent takes
// over, so every certificate in this file may assume m at least this large.
constexpr std::uint64_t kThresholdM = 974762;
constexpr std::uint64_t kThetaFloor = 487381;  // linear theta window start

Ratio micro(std::int64_t v) { return Ratio(v, kMillion); }

// v millionths times m, exact.
Ratio micro_times(std::int64_t v, std::uint64_t m) {
    Natural mag = Natural(m).mul_u64(static_cast<std::uint64_t>(v < 0 ? -v : v));
    return Ratio(Int(std::move(mag), v < 0 ? -1 : 1), Natural(kMillion));
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

Enclosure log_sum(std::uint64_t from, std::uint64_t to) {
    Enclosure s;
    for (std::uint64_t i = from; i <= to; ++i) s = s + Enclosure::log_u64(i);
    return s;
}

// Two-sided bracket of log n! out of the one-sided Stirling pair.
Enclosure stirling_bracket(std::uint64_t n) {
    StirlingBounds s = stirling_bounds(n);
    return Enclosure::hull(s.lower, s.upper);
}

using Poly = std::vector<Int>;

Poly pmul(const Poly& x, const Poly& y) {
    Poly r(x.size() + y.size() - 1);
    for (size_t i = 0; i < x.size(); ++i)
        for (size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
    return r;
}

Poly ppow(const Poly& base, unsigned e) {
    Poly r{Int(1)};
    for (unsigned i = 0; i < e; ++i) r = pmul(r, base);
    return r;
}

Ratio ratio_pow(const Ratio& base, std::uint64_t e) {
    Ratio acc = 1;
    Ratio sq = base;
    for (; e; e >>= 1) {
        if (e & 1) acc = acc * sq;
        sq = sq * sq;
    }
    return acc;
}

} // namespace

StirlingBounds stirling_bounds(std::uint64_t n) {
    if (n < 1) throw usage_error("Stirling bracket needs n >= 1");
    const Enclosure en(n), two(std::uint64_t{2}), one(std::uint64_t{1});
    Enclosure lower =
        (two * Enclosure::pi() * en).log() / two + en * en.log() - en;
    Enclosure upper = lower + one / Enclosure(12 * n);
    return StirlingBounds{std::move(lower), std::move(upper)};
}

Verdict factorial_ratio_check(std::uint64_t m, OrderVariant variant) {
    if (m < 1) throw usage_error("prefactor growth check needs m >= 1");
    const bool plus = variant == OrderVariant::plus_one;
    Ratio target_rat = micro_times(kMultinomialSlope, m);
    if (plus) target_rat += Ratio(1);
    const Enclosure target(target_rat);

    Enclosure logc;
    const char* route;
    if (m <= 150) {
        route = "exact digit sums";
        auto s = [](std::uint64_t n) { return n < 2 ? Enclosure() : log_sum(2, n); };
        logc = plus ? s(16 * m + 1) - s(7 * m) - s(4 * m + 1) - s(5 * m - 1)
                    : s(16 * m) - s(7 * m - 1) - s(4 * m) - s(5 * m);
    } else {
        route = "Stirling brackets";
        logc = plus ? stirling_bracket(16 * m + 1) - stirling_bracket(7 * m) -
                          stirling_bracket(4 * m + 1) - stirling_bracket(5 * m - 1)
                    : stirling_bracket(16 * m) - stirling_bracket(7 * m - 1) -
                          stirling_bracket(4 * m) - stirling_bracket(5 * m);
    }
    if (!logc.certainly_le(target))
        return make_fail("prefactor log exceeds its slope line", logc.to_string());

    // Side condition that keeps the Stirling route under the slope line for
    // every m: the constant part of the bracket difference is negative
    // (below one for the order-n+1 form, whose prefactor gains a factor
    // bounded by 20/7). Strongest at m = 1 through the 1/(192m) term.
    const Enclosure two(std::uint64_t{2});
    Enclosure aux = Enclosure::log_u64(7) - (two * Enclosure::pi()).log() +
                    (Enclosure(std::uint64_t{16}) / Enclosure(std::uint64_t{140})).log() / two +
                    Enclosure(std::uint64_t{1}) / Enclosure(192 * m);
    bool side = plus ? (aux + (Enclosure(std::uint64_t{20}) / Enclosure(std::uint64_t{7})).log())
                           .certainly_lt(Enclosure(std::uint64_t{1}))
                     : aux.certainly_lt(Enclosure());
    if (!side)
        return make_fail("Stirling side condition failed", aux.to_string());
    return make_pass(std::string("prefactor growth bounded via ") + route +
                     ", margin " + fmt((target - logc).lower_double()));
}

Enclosure integrand_max(KernelKind kind) {
    // Critical points: the sign of d/dt log(kernel), cleared of positive
    // denominators, is a quadratic. For the remainder kernel it is
    // 5t^2 - 100t + 32, strictly decreasing on [0,1], so the sign change is
    // unique; for the quotient kernel it is -128t^2 + 76t + 7, concave and
    // positive at 0, so again one interior sign change. Both kernels vanish
    // at the endpoints, hence the sup sits at the sign change, which exact
    // bisection pins to width 2^-90 of the starting bracket.
    const bool rem = kind == KernelKind::remainder;
    const std::int64_t c2 = rem ? 5 : -128, c1 = rem ? -100 : 76,
                       c0 = rem ? 32 : 7;
    auto nval = [&](const Ratio& t) {
        return (Ratio(c2) * t + Ratio(c1)) * t + Ratio(c0);
    };
    Ratio lo = rem ? Ratio(1, 4) : Ratio(5, 8);
    Ratio hi = rem ? Ratio(3, 8) : Ratio(3, 4);
    if (!(nval(lo) > Ratio(0)) || !(nval(hi) < Ratio(0)))
        throw std::logic_error("critical-point bracket lost its sign change");
    for (int i = 0; i < 90; ++i) {
        Ratio mid = (lo + hi) / Ratio(2);
        if (nval(mid) > Ratio(0))
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    const Enclosure t = Enclosure::hull(Enclosure(lo), Enclosure(hi));
    const Enclosure one(std::uint64_t{1});
    if (rem)
        return Enclosure(std::uint64_t{4}) * t.log() +
               Enclosure(std::uint64_t{7}) * (one - t).log() -
               Enclosure(std::uint64_t{16}) * (one + t / Enclosure(std::uint64_t{8})).log();
    return Enclosure(std::uint64_t{7}) * t.log() +
           Enclosure(std::uint64_t{5}) * (one - t).log() +
           Enclosure(std::uint64_t{4}) * (one + Enclosure(std::uint64_t{8}) * t).log();
}

Ratio residual_integral(IntegralKind kind) {
    Ratio sum;
    switch (kind) {
    case IntegralKind::remainder0:
    case IntegralKind::remainder1: {
        // Substitute u = 1 + t/8: powers of u integrate in closed form and
        // every exponent stays away from -1.
        const bool first = kind == IntegralKind::remainder0;
        const unsigned pu = first ? 4 : 5, pn = first ? 6 : 7;
        const std::uint64_t shift = first ? 16 : 17;
        Poly c = pmul(ppow({Int(-1), Int(1)}, pu), ppow({Int(9), Int(-8)}, pn));
        for (size_t j = 0; j < c.size(); ++j) {
            std::uint64_t e = shift - j;
            sum += Ratio::from_int(c[j]) *
                   (Ratio(1) - ratio_pow(Ratio(8, 9), e)) /
                   Ratio(static_cast<std::int64_t>(e));
        }
        sum *= Ratio::from_int(Int(Natural::pow(8, pu + 1)));
        break;
    }
    case IntegralKind::quotient0:
    case IntegralKind::quotient1: {
        const bool first = kind == IntegralKind::quotient0;
        Poly c = first ? pmul(ppow({Int(1), Int(-1)}, 5), ppow({Int(1), Int(8)}, 4))
                       : pmul(ppow({Int(1), Int(-1)}, 4), ppow({Int(1), Int(8)}, 5));
        const std::int64_t shift = first ? 7 : 8;
        for (size_t j = 0; j < c.size(); ++j)
            sum += Ratio::from_int(c[j]) /
                   Ratio(shift + static_cast<std::int64_t>(j));
        break;
    }
    }
    return sum;
}

Verdict remainder_smallness(std::uint64_t m, OrderVariant variant) {
    if (m < kThresholdM)
        throw usage_error("remainder majorant is certified from m = 974762");
    const bool plus = variant == OrderVariant::plus_one;
    Ratio line = micro_times(-693777, m) + micro(plus ? kRemIcptPlus : kRemIcptBase);
    Enclosure maj(line);
    if (plus) maj = maj + Enclosure(4 * m + 1).log();
    const Enclosure bound =
        (Enclosure(std::uint64_t{2}) / Enclosure(std::uint64_t{3})).log();
    if (!maj.certainly_lt(bound))
        return make_fail("remainder majorant reaches 2/3", maj.to_string());
    // Decreasing in m, so the certificate extends upward: for the order-n+1
    // form the log term's derivative 4/(4m+1) is already far below the slope.
    if (plus && !(Natural(4 * m + 1).mul_u64(693777) > Natural(4 * kMillion)))
        return make_fail("remainder majorant is not decreasing", std::to_string(m));
    return make_pass("remainder contribution below 2/3 from m onward, margin " +
                     fmt((bound - maj).lower_double()));
}

Verdict eps_lower_chain(std::uint64_t m, OrderVariant variant) {
    if (m < kThresholdM)
        throw usage_error("distance chain is certified from m = 974762");
    const bool plus = variant == OrderVariant::plus_one;
    const Enclosure log3 = Enclosure::log_u64(3);
    double worst = 0;
    for (std::uint64_t j = 0; j <= 17; ++j) {
        const std::uint64_t k = 18 * m + 2 + j;
        Ratio line = micro_times(kEpsSlope, m) +
                     micro(plus ? kEpsIcptPlus : kEpsIcptBase);
        Enclosure chain = Enclosure(line) - Enclosure(j + 1) * log3;
        if (plus) chain = chain - Enclosure(4 * m + 1).log();
        const Enclosure target(
            Ratio(Int(Natural(k).mul_u64(81), -1), Natural(100)));
        if (!chain.certainly_ge(target))
            return make_fail("distance chain falls below the target rate",
                             "j=" + std::to_string(j));
        double margin = (chain - target).lower_double();
        if (j == 0 || margin < worst) worst = margin;
    }
    return make_pass("distance lower bound beats -0.81k for offsets 0..17, "
                     "worst margin " + fmt(worst));
}

ThresholdCertificate analytic_threshold() {
    const std::uint64_t m = kThresholdM;
    ThresholdCertificate out;
    out.k_star = 18 * m + 2;

    // Linear prime-product rate, both interval families (same endpoints).
    const ProfileParams params;
    const Ratio floor_rate = micro(kPhiRate);
    for (bool primed : {false, true}) {
        Ratio rate = linear_phi_rate(solve_profile_intervals(params, primed), 1);
        if (!(rate >= floor_rate)) {
            out.verdict = make_fail("linear prime-product rate below 1.639533",
                                    rate.to_decimal(12));
            return out;
        }
    }

    // Every argument the linear theta window is applied to exceeds its
    // floor: the smallest is m divided by 15/16 + 1.
    if (!(16 * m > 31 * kThetaFloor)) {
        out.verdict = make_fail("theta window floor not cleared", std::to_string(m));
        return out;
    }

    // Slope dominance: the chain slope -14.562394 gains 0.017606 per unit m
    // on the target slope -0.81 * 18, and for the order-n+1 form the log
    // correction's derivative 4/(4m+1) stays below that gain. Together with
    // the per-offset checks at m itself this certifies every larger m.
    static_assert(-kEpsSlope < 810000 * 18);
    if (!(Natural(4 * m + 1).mul_u64(17606) > Natural(4 * kMillion))) {
        out.verdict = make_fail("slope dominance fails for the log correction",
                                std::to_string(m));
        return out;
    }
    if (!(Natural(4 * m + 1).mul_u64(kAbsorb) > Natural(4 * kMillion))) {
        out.verdict = make_fail("log absorption is not monotone", std::to_string(m));
        return out;
    }

    for (OrderVariant v : {OrderVariant::base, OrderVariant::plus_one}) {
        Verdict c = eps_lower_chain(m, v);
        if (!c.passed) {
            out.verdict = std::move(c);
            return out;
        }
        c = remainder_smallness(m, v);
        if (!c.passed) {
            out.verdict = std::move(c);
            return out;
        }
        c = factorial_ratio_check(m, v);
        if (!c.passed) {
            out.verdict = std::move(c);
            return out;
        }
    }

    // The decimal target -0.81 itself majorizes the true rate log(4/9).
    if (!(Enclosure(std::uint64_t{4}) / Enclosure(std::uint64_t{9}))
             .log()
             .certainly_le(Enclosure(micro(-810000)))) {
        out.verdict = make_fail("target rate -0.81 does not cover log(4/9)", "");
        return out;
    }

    out.verdict = make_pass(
        "certified for every k >= " + std::to_string(out.k_star) +
        ": offsets 0..17 at m = " + std::to_string(m) +
        " plus slope dominance beyond");
    return out;
}

ConstantLedger full_ledger(std::uint64_t theta_limit) {
    ConstantLedger ledger;
    auto push = [&](std::string name, std::string stated, Direction dir,
                    std::string computed, double margin, bool passed) {
        ledger.entries.push_back(LedgerEntry{std::move(name), std::move(stated),
                                             dir, std::move(computed), margin,
                                             passed});
    };
    auto upper = [&](std::string name, const std::string& stated,
                     const Enclosure& e) {
        const Enclosure target = Enclosure::parse(stated);
        push(std::move(name), stated, Direction::upper_bound, e.to_string(12),
             (target - e).lower_double(), e.certainly_le(target));
    };
    auto lower = [&](std::string name, const std::string& stated,
                     const Enclosure& e) {
        const Enclosure target = Enclosure::parse(stated);
        push(std::move(name), stated, Direction::lower_bound, e.to_string(12),
             (e - target).lower_double(), e.certainly_ge(target));
    };

    const Enclosure log2 = Enclosure::log_u64(2);
    const Enclosure log3 = Enclosure::log_u64(3);

    upper("multinomial_slope", "17.147682",
          Enclosure(std::uint64_t{16}) * Enclosure::log_u64(16) -
              Enclosure(std::uint64_t{7}) * Enclosure::log_u64(7) -
              Enclosure(std::uint64_t{4}) * Enclosure::log_u64(4) -
              Enclosure(std::uint64_t{5}) * Enclosure::log_u64(5));
    upper("remainder_kernel_log_max", "-7.884160",
          integrand_max(KernelKind::remainder));
    upper("quotient_kernel_log_max", "-0.945755",
          integrand_max(KernelKind::quotient));
    upper("remainder_integral0_log", "-8.568400",
          Enclosure(residual_integral(IntegralKind::remainder0)).log());
    upper("remainder_integral1_log", "-10.140038",
          Enclosure(residual_integral(IntegralKind::remainder1)).log());
    upper("quotient_integral0_log", "-1.725707",
          Enclosure(residual_integral(IntegralKind::quotient0)).log());
    upper("quotient_integral1_log", "0.878883",
          Enclosure(residual_integral(IntegralKind::quotient1)).log());

    upper("remainder_term_slope", "-0.693777",
          Enclosure::parse("17.147682") - Enclosure(std::uint64_t{12}) * log2 +
              Enclosure::parse("-7.884160") - Enclosure::parse("1.639533"));
    upper("remainder_term_intercept", "23.575912",
          Enclosure(micro(-kKernelMaxR + kLogR0)) +
              Enclosure(std::uint64_t{35}) * log2);
    upper("remainder_term_intercept_plus", "21.924832",
          Enclosure(micro(2 * kMillion - kKernelMaxR + kLogR1)) +
              Enclosure(std::uint64_t{32}) * log2);

    push("distance_slope", "-14.562394", Direction::equals_rounded,
         "exact in millionths: 1639533 - 17147682 + 945755", 0.0,
         kPhiRate - kMultinomialSlope + (-kKernelMaxQ) == kEpsSlope);
    lower("distance_intercept", "-18.995070",
          Enclosure(micro(kEpsIcptBase)) - Enclosure(std::uint64_t{18}) * log3);
    lower("distance_intercept_plus", "-22.599660",
          Enclosure(micro(kEpsIcptPlus)) - Enclosure(std::uint64_t{18}) * log3);

    {
        const Ratio rate =
            linear_phi_rate(solve_profile_intervals(ProfileParams{}, false), 1);
        const bool ok = rate >= micro(kPhiRate);
        push("prime_product_rate", "1.639533", Direction::lower_bound,
             rate.to_decimal(12),
             Enclosure(rate - micro(kPhiRate)).lower_double(), ok);
    }
    upper("target_rate", "-0.81",
          (Enclosure(std::uint64_t{4}) / Enclosure(std::uint64_t{9})).log());

    {
        // Stirling side conditions, strongest at m = 1.
        const Enclosure two(std::uint64_t{2});
        const Enclosure aux =
            Enclosure::log_u64(7) - (two * Enclosure::pi()).log() +
            (Enclosure(std::uint64_t{16}) / Enclosure(std::uint64_t{140})).log() / two +
            Enclosure(std::uint64_t{1}) / Enclosure(std::uint64_t{192});
        upper("stirling_side", "0", aux);
        upper("stirling_side_plus", "1",
              aux + (Enclosure(std::uint64_t{20}) / Enclosure(std::uint64_t{7})).log());
    }

    {
        const std::uint64_t m = kThresholdM;
        const Enclosure gap = Enclosure(micro_times(kAbsorb, m)) -
                              Enclosure(4 * m + 1).log();
        const bool monotone =
            Natural(4 * m + 1).mul_u64(kAbsorb) > Natural(4 * kMillion);
        push("order_log_absorption", "0", Direction::lower_bound,
             gap.to_string(12), gap.lower_double(),
             gap.certainly_ge(Enclosure()) && monotone);
    }

    {
        const ThetaTable table = theta_sieve(theta_limit);
        const Verdict v = verify_theta_bounds(table);
        push("theta_window", "0.998 x < theta(x) < 1.001102 x",
             Direction::equals_rounded, v.detail, 0.0, v.passed);
        const std::uint64_t largest_arg = 8 * kThresholdM;
        push("theta_coverage", std::to_string(largest_arg),
             Direction::lower_bound, std::to_string(theta_limit),
             static_cast<double>(theta_limit) - static_cast<double>(largest_arg),
             theta_limit >= largest_arg);
    }

    {
        const ThresholdCertificate tc = analytic_threshold();
        push("threshold_exponent", "17545718", Direction::equals_rounded,
             std::to_string(tc.k_star) + ": " + tc.verdict.detail, 0.0,
             tc.verdict.passed && tc.k_star == 17545718);
    }

    for (OrderVariant v : {OrderVariant::base, OrderVariant::plus_one}) {
        const Verdict fr = factorial_ratio_check(kThresholdM, v);
        push(v == OrderVariant::base ? "prefactor_growth" : "prefactor_growth_plus",
             v == OrderVariant::base ? "17.147682 m" : "17.147682 m + 1",
             Direction::upper_bound, fr.detail, 0.0, fr.passed);
    }

    ledger.overall = true;
    for (const LedgerEntry& e : ledger.entries) ledger.overall &= e.passed;
    return ledger;
}

} // namespace fracpow
