#pragma once
// ledger.hpp - one-sided certificates for every printed decimal constant the
// asymptotic argument leans on. Each constant is recomputed inside a directed
// interval and compared against the printed value in the direction the chain
// actually consumes it, so a pass here means the decimal chain arithmetic is
// sound end to end.

#include "fracpow/distance.hpp"
#include "fracpow/enclosure.hpp"
#include "fracpow/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fracpow {

// Encloses log n! between the Stirling term and the Stirling term plus
// 1/(12n): lower <= log n! <= upper, certified endpoints.
struct StirlingBounds {
    Enclosure lower, upper;
};
StirlingBounds stirling_bounds(std::uint64_t n);

// Which approximation order a bound refers to: n = 4m itself or n+1.
enum class OrderVariant { base, plus_one };

// The multinomial prefactor (16m)!/((7m-1)! (4m)! (5m)!) - or its order-n+1
// sibling - stays below 17.147682 m (plus 1 for the sibling): exact digit
// sums for small m, Stirling brackets beyond, plus the constant side
// condition that makes the Stirling route close.
Verdict factorial_ratio_check(std::uint64_t m, OrderVariant variant);

enum class KernelKind { remainder, quotient };

// Enclosure of the log of the sup over [0,1] of the per-index kernel
//   remainder: t^4 (1-t)^7 (1+t/8)^-16      quotient: t^7 (1-t)^5 (1+8t)^4
// located by exact bisection of the critical-point quadratic.
Enclosure integrand_max(KernelKind kind);

enum class IntegralKind { remainder0, remainder1, quotient0, quotient1 };

// Exact values of the four base-case integrals
//   remainder0: t^4 (1-t)^6 (1+t/8)^-17     remainder1: t^5 (1-t)^7 (1+t/8)^-18
//   quotient0:  t^6 (1-t)^5 (1+8t)^4        quotient1:  t^7 (1-t)^4 (1+8t)^5
// over [0,1], by exact polynomial expansion (after u = 1+t/8 for the first
// two).
Ratio residual_integral(IntegralKind kind);

// The remainder-side contribution to the integer witness is majorized by
// exp(-0.693777 m + intercept); certifies it stays below 2/3 at this m and
// notes the monotonicity that extends the bound upward. m >= 974762.
Verdict remainder_smallness(std::uint64_t m, OrderVariant variant);

// The distance lower bound -14.562394 m + intercept(j) beats the target
// -0.81 k for k = 18m+2+j at this m, for every offset j in 0..17.
// m >= 974762.
Verdict eps_lower_chain(std::uint64_t m, OrderVariant variant);

// Assembles the full asymptotic argument: linear prime-product rate, theta
// window validity, slope dominance, distance chains and remainder smallness
// at the threshold, and the target rate comparison. Everything at or beyond
// the reported exponent is then certified.
struct ThresholdCertificate {
    std::uint64_t k_star = 0;
    Verdict verdict;
};
ThresholdCertificate analytic_threshold();

enum class Direction { upper_bound, lower_bound, equals_rounded };

struct LedgerEntry {
    std::string name;
    std::string stated;     // the printed value relied on
    Direction direction = Direction::upper_bound;
    std::string computed;   // certified enclosure or exact value
    double margin = 0.0;    // certified slack in the stated direction
    bool passed = false;
};

struct ConstantLedger {
    std::vector<LedgerEntry> entries;
    bool overall = false;
};

// Validates every printed constant. The theta window is certified by an
// exact sieve up to the given limit, which must cover every argument the
// linear bounds are applied to at the threshold (2e7 does).
ConstantLedger full_ledger(std::uint64_t theta_limit = 20000000);

} // namespace fracpow
