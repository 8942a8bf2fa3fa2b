#pragma once
// primes.hpp - p-adic exponent minima over carry patterns, their prime
// products, the equivalent piecewise-constant profiles with exact solution
// intervals, and a Chebyshev theta sieve with error-tracked queries.
//
// For a prime p, the exponent is the minimum over mu of two carry indicators
// built from fractional parts; the same expression, read with x in [0,1) in
// place of m/p, is a piecewise-constant profile whose level-one set is a
// finite union of rational intervals. Summing theta over the induced prime
// ranges yields a linear-in-m lower bound for the log of the product.

#include "fracpow/distance.hpp"
#include "fracpow/rational.hpp"

#include <cstdint>
#include <vector>

namespace fracpow {

struct ProfileParams {
    std::uint64_t alpha = 3, beta = 9, gamma = 4;
};

struct PhiInterval {
    Ratio lo, hi;
    bool lo_closed = true, hi_closed = false;
};

struct PhiIntervalSet {
    std::vector<PhiInterval> intervals;   // sorted, pairwise disjoint
    bool primed = false;
};

struct PrimeFactor {
    std::uint64_t p = 0;
    int e = 0;
};

struct PhiFactorization {
    Natural value;
    std::vector<PrimeFactor> factors;
};

// Chebyshev theta partial sums over the primes up to limit, compensated
// summation with a tracked absolute error bound valid for every query.
struct ThetaTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;
    std::vector<double> cum;      // cum[i] = sum of log primes[0..i]
    double err_bound = 0;
};

struct ThetaValue {
    double value = 0;
    double err = 0;
};

enum class ThetaSource { exact_sieve, linear_bounds };

struct PhiLowerBound {
    double value = 0;     // certified lower bound
    Ratio exact;          // exact rational value (linear_bounds mode only)
    bool is_exact = false;
};

// All primes <= limit (classical sieve).
std::vector<std::uint32_t> sieve_primes(std::uint64_t limit);

// Minimum over mu in [0, p) of the two-carry expression; primed selects the
// variant whose first carry uses (a+n, mu) instead of (-(a+n+mu), mu).
// Requires p prime with p*p > a+b+n; result is in {0, 1, 2}.
int exponent_e(std::uint64_t p, std::uint64_t a, std::uint64_t b,
               std::uint64_t n, bool primed);

// Product of p^e over primes sqrt(a+b+n) < p <= a+b+n, with factorization.
// Exponents vanish for p > a+b+n: there every fractional part is the plain
// fraction, and mu = 0 already gives carry-free sums below p.
PhiFactorization phi_product(std::uint64_t a, std::uint64_t b, std::uint64_t n,
                             bool primed);

// Profile value at x in [0, 1): exact minimum over y of the same two-carry
// expression, taken over the finite candidate set of y-jump points.
Ratio profile_value(const Ratio& x, const ProfileParams& params, bool primed);

// Maximal intervals of [0, 1) where the profile is >= 1. Breakpoints come
// from every denominator a fractional-part argument can acquire after
// substituting the candidate y values; a dense rational sampling pass at
// lcm(denominators) * 8 re-verifies piecewise constancy.
PhiIntervalSet solve_profile_intervals(const ProfileParams& params, bool primed);

// Sieve all primes <= limit and accumulate log-prime partial sums.
ThetaTable theta_sieve(std::uint64_t limit);

// theta(x) = sum of log p over primes p <= x, with the table's error bound.
ThetaValue theta(const ThetaTable& table, std::uint64_t x);

// theta(x) < 1.001102 x at every prime (local maxima of theta(x)/x), and
// theta(x) > 0.998 x for all real x in (487381, limit], checked just below
// each prime and at the tail.
Verdict verify_theta_bounds(const ThetaTable& table);

// Exact per-interval linear-bound sum: for N = 0..n_max and each interval
// [A, B): 0.998 / (A+N) - 1.001102 / (B+N). Multiplying by m bounds the
// double theta sum from below once every m/(A+N) clears the 0.998 threshold.
Ratio linear_phi_rate(const PhiIntervalSet& set, std::uint64_t n_max);

// Sum over N = 0..n_max and intervals of theta(m/(A+N)) - theta(m/(B+N)),
// from the sieve or from the directional linear bounds. Certified lower
// bound: sieve errors are subtracted, linear terms below the 487381
// threshold are dropped (they are nonnegative). Requires 16 (n_max+1)^2 <= m
// so every range stays above sqrt(16 m).
PhiLowerBound log_phi_lower(std::uint64_t m, const PhiIntervalSet& set,
                            std::uint64_t n_max, ThetaSource source,
                            const ThetaTable* table = nullptr);

// For every prime sqrt(16m) < p <= 16m, the exponent at (3m, 9m, 4m) equals
// the profile at {m/p}, both variants.
Verdict consistency_e_vs_profile(std::uint64_t m, const ProfileParams& params);

} // namespace fracpow
