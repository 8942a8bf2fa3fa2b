#pragma once
// pade.hpp - exact rational approximations to the binomial series
// F(z) = sum binom(a+b+v, b) z^v: the degree-n pair (Q_n, P_n) with
// Q_n(1/z) F(z) - P_n(1/z) vanishing to order n at z = 0, the remainder
// series with a certified tail majorant, and the integer-witness identity
// that turns a remainder evaluation at z = -1/8 into a lower-bound
// certificate for one exponent k.

#include "fracpow/distance.hpp"
#include "fracpow/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fracpow {

struct PadeParams {
    std::uint64_t a = 0, b = 0, n = 0;   // 1 <= n <= b, 3a <= b
};

// Series coefficients f_v = binom(a+b+v, b), v = 0..count-1.
std::vector<Int> series_f(std::uint64_t a, std::uint64_t b, size_t count);

// q_mu = (-1)^mu binom(a+n+mu-1, mu) binom(a+b+n, n-mu), mu = 0..n.
std::vector<Int> q_polynomial(const PadeParams& params);

// p_i = sum over mu-v = i of q_mu f_v, i = 0..n: the non-positive-in-z part
// of Q(1/z) F(z). p_0 is always zero and p_n = q_n f_0 is not, so the degree
// is exactly n; both facts are asserted. Needs f.size() >= n+1.
std::vector<Int> p_polynomial(const PadeParams& params,
                              const std::vector<Int>& f);

// Q_n evaluated at -8 (all terms carry the same sign, so this is also the
// coefficient magnitude sum in base 8).
Int q_at_minus8(const PadeParams& params);

struct RemainderEval {
    Ratio partial;       // sum of the first `terms` series terms
    Ratio tail_bound;    // certified bound on everything dropped
    size_t terms = 0;
};

// R_n(z) = C z^n sum_j g_j z^j with C = (a+b+n)!/((a+n-1)! n! (b-n)!) and
// g_j = binom(a+b+n+j, j) (n+j)! (a+n-1)! / (a+2n+j)!. The tail after J
// terms is bounded through the term-ratio majorant
// rho = |z| (a+b+n+J+1)/(J+1), which must be < 1 and dominates every later
// ratio; otherwise a precision error is raised.
RemainderEval r_series_eval(const PadeParams& params, const Ratio& z,
                            size_t terms);

// Coefficientwise identity check: [z^w] of Q(1/z) F(z) vanishes for
// w = 1..n-1 and equals the remainder coefficient C g_{w-n} for
// w = n..depth. Requires depth >= n+5.
Verdict verify_pade_order(const PadeParams& params, size_t depth);

struct CongruenceCheck {
    Ratio residual;      // distance of the partial sum from its next integer
    Ratio tail_bound;
    bool within = false; // residual <= tail_bound
};

// (16/9)^(b+1) differs from 2^(b-3a+1) (-1)^a F(a, b, -1/8) by an exact
// integer; evaluates the series to `terms` and checks the distance of the
// partial sum from the nearest integer against the certified tail.
CongruenceCheck residue_congruence_check(std::uint64_t a, std::uint64_t b,
                                         size_t terms);

enum class WitnessVariant { order_n, order_n_plus_one };

struct Eq15Witness {
    std::uint64_t m = 0, j = 0, k = 0;
    WitnessVariant variant = WitnessVariant::order_n;
    Int m_value;             // the integer the identity isolates
    Ratio residual;          // distance of the computed value from m_value
    Ratio residual_bound;    // |scale| * remainder tail, certified < 1/4
    bool nonzero = false;
    size_t terms = 0;
};

// For a = 3m, b = 9m, n = 4m and k = 2(b+1)+j, evaluates
//   Q(-8) phi^-1 3^j eps_k - R(-1/8) phi^-1 2^(b-3a+1+2j) (-1)^a
// with phi the order-n prime product (order_n) or its primed form divided
// by n+1 (order_n_plus_one), and rounds to the nearest integer. The
// residual must fall within the certified bound, which must itself be
// below 1/4; terms = 0 lets the evaluation grow the series until it is.
Eq15Witness eq15_witness(std::uint64_t m, std::uint64_t j,
                         WitnessVariant variant, size_t terms = 0);

} // namespace fracpow
