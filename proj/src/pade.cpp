#include "fracpow/pade.hpp"

#include "fracpow/errors.hpp"
#include "fracpow/primes.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace fracpow {
namespace {

void validate(const PadeParams& p) {
    if (p.a < 1 || p.b < 1 || p.n < 1)
        throw usage_error("approximation parameters must all be at least 1");
    if (p.n > p.b)
        throw usage_error("approximation order must not exceed b");
    if (3 * p.a > p.b)
        throw usage_error("parameters must satisfy 3a <= b");
}

Natural factorial(std::uint64_t n) {
    Natural r(1);
    for (std::uint64_t i = 2; i <= n; ++i) r = r.mul_u64(i);
    return r;
}

// (a+b+n)! / ((a+n-1)! n! (b-n)!), an integer for every valid parameter set.
Natural prefactor(const PadeParams& p) {
    Natural den = factorial(p.a + p.n - 1) * factorial(p.n) * factorial(p.b - p.n);
    auto [q, r] = Natural::divmod(factorial(p.a + p.b + p.n), den);
    if (!r.is_zero())
        throw std::logic_error("remainder prefactor division was not exact");
    return q;
}

// g_0 for the remainder series: n! (a+n-1)! / (a+2n)!.
Ratio g_initial(const PadeParams& p) {
    return Ratio(Int(factorial(p.n) * factorial(p.a + p.n - 1)),
                 factorial(p.a + 2 * p.n));
}

// g_{j+1} / g_j = (a+b+n+j+1)(n+j+1) / ((j+1)(a+2n+j+1)).
Ratio g_step(const PadeParams& p, std::uint64_t j) {
    Natural num = Natural(p.a + p.b + p.n + j + 1).mul_u64(p.n + j + 1);
    Natural den = Natural(j + 1).mul_u64(p.a + 2 * p.n + j + 1);
    return Ratio(Int(num), den);
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

std::vector<Int> series_f(std::uint64_t a, std::uint64_t b, size_t count) {
    if (a < 1 || b < 1)
        throw usage_error("series parameters must be at least 1");
    std::vector<Int> f;
    f.reserve(count);
    for (size_t v = 0; v < count; ++v)
        f.push_back(Int(binomial(a + b + v, b)));
    return f;
}

std::vector<Int> q_polynomial(const PadeParams& params) {
    validate(params);
    const auto [a, b, n] = params;
    std::vector<Int> q;
    q.reserve(n + 1);
    for (std::uint64_t mu = 0; mu <= n; ++mu)
        q.push_back(Int(binomial(a + n + mu - 1, mu) * binomial(a + b + n, n - mu),
                        mu & 1 ? -1 : 1));
    return q;
}

std::vector<Int> p_polynomial(const PadeParams& params,
                              const std::vector<Int>& f) {
    validate(params);
    const std::uint64_t n = params.n;
    if (f.size() < n + 1)
        throw usage_error("series must provide at least n+1 coefficients");
    std::vector<Int> q = q_polynomial(params);
    std::vector<Int> p(n + 1);
    for (std::uint64_t i = 0; i <= n; ++i)
        for (std::uint64_t mu = i; mu <= n; ++mu)
            p[i] = p[i] + q[mu] * f[mu - i];
    // The constant term cancels along with orders 1..n-1, and the top
    // coefficient is q_n f_0 with everything else shifted past it.
    if (!p[0].is_zero())
        throw std::logic_error("constant coefficient of the polynomial part must vanish");
    if (p[n].is_zero())
        throw std::logic_error("top coefficient of the polynomial part must not vanish");
    return p;
}

Int q_at_minus8(const PadeParams& params) {
    std::vector<Int> q = q_polynomial(params);
    Int acc = q.back();
    const Int base(-8);
    for (size_t i = q.size() - 1; i-- > 0;) acc = acc * base + q[i];
    return acc;
}

RemainderEval r_series_eval(const PadeParams& params, const Ratio& z,
                            size_t terms) {
    validate(params);
    if (terms < 1)
        throw usage_error("remainder evaluation needs at least one term");
    if (z.is_zero())
        throw usage_error("remainder evaluation point must be nonzero");
    const auto [a, b, n] = params;
    const Ratio c = Ratio::from_int(Int(prefactor(params)));
    Ratio g = g_initial(params);
    Ratio zp = ratio_pow(z, n);
    Ratio partial = 0;
    for (size_t j = 0; j < terms; ++j) {
        partial = partial + c * g * zp;
        g = g * g_step(params, j);
        zp = zp * z;
    }
    // Every term ratio from index J on is at most |z| (a+b+n+J+1)/(J+1):
    // the true ratio carries an extra factor (n+j+1)/(a+2n+j+1) < 1, and
    // the majorant itself decreases in j. Geometric tail from the first
    // dropped term.
    const std::uint64_t big = a + b + n + terms + 1;
    Ratio rho = z.abs() * Ratio(Int(Natural(big)), Natural(terms + 1));
    if (!(rho < Ratio(1)))
        throw precision_error("remainder tail ratio is not below one; more terms needed");
    Ratio tail = (c * g * zp).abs() / (Ratio(1) - rho);
    return RemainderEval{std::move(partial), std::move(tail), terms};
}

Verdict verify_pade_order(const PadeParams& params, size_t depth) {
    validate(params);
    const auto [a, b, n] = params;
    if (depth < n + 5)
        throw usage_error("order check depth must reach at least n+5");
    std::vector<Int> f = series_f(a, b, depth + n + 1);
    std::vector<Int> q = q_polynomial(params);
    auto coeff = [&](std::uint64_t w) {
        Int c;
        for (std::uint64_t mu = 0; mu <= n; ++mu) c = c + q[mu] * f[w + mu];
        return c;
    };
    for (std::uint64_t w = 1; w < n; ++w)
        if (!coeff(w).is_zero())
            return make_fail("positive-order coefficient below n must vanish",
                             "w=" + std::to_string(w));
    const Ratio c = Ratio::from_int(Int(prefactor(params)));
    Ratio g = g_initial(params);
    for (std::uint64_t w = n; w <= depth; ++w) {
        if (Ratio::from_int(coeff(w)) != c * g)
            return make_fail("coefficient from order n on must equal the remainder term",
                             "w=" + std::to_string(w));
        g = g * g_step(params, w - n);
    }
    return make_pass("orders 1.." + std::to_string(n - 1) + " vanish and " +
                     std::to_string(n) + ".." + std::to_string(depth) +
                     " match the remainder series");
}

CongruenceCheck residue_congruence_check(std::uint64_t a, std::uint64_t b,
                                         size_t terms) {
    if (a < 1 || b < 3 * a)
        throw usage_error("congruence check needs a >= 1 and b >= 3a");
    if (terms < 1)
        throw usage_error("congruence check needs at least one term");
    // Term ratio of the series at -1/8 is (a+b+v+1)/(8(a+v+1)), decreasing.
    Ratio rho(Int(Natural(a + b + terms + 1)),
              Natural(a + terms + 1).mul_u64(8));
    if (!(rho < Ratio(1)))
        throw precision_error("series tail ratio is not below one; more terms needed");
    const Ratio z(-1, 8);
    std::vector<Int> f = series_f(a, b, terms + 1);
    Ratio partial = 0;
    Ratio zp = 1;
    for (size_t v = 0; v < terms; ++v) {
        partial = partial + Ratio::from_int(f[v]) * zp;
        zp = zp * z;
    }
    Ratio tail = (Ratio::from_int(f[terms]) * zp).abs() / (Ratio(1) - rho);
    const Ratio scale = Ratio::from_int(
        Int(Natural::pow2(b - 3 * a + 1), a & 1 ? -1 : 1));
    Ratio x = scale * partial -
              Ratio(Int(Natural::pow(4, 2 * b + 2)), Natural::pow(3, 2 * b + 2));
    Ratio residual = (x - Ratio::from_int(x.round_nearest())).abs();
    Ratio bound = scale.abs() * tail;
    bool within = residual <= bound;
    return CongruenceCheck{std::move(residual), std::move(bound), within};
}

Eq15Witness eq15_witness(std::uint64_t m, std::uint64_t j,
                         WitnessVariant variant, size_t terms) {
    if (m < 1)
        throw usage_error("witness index m must be at least 1");
    if (j < 1 || j > 17)
        throw usage_error("witness offset j must lie in 1..17");
    const std::uint64_t a = 3 * m, b = 9 * m, n = 4 * m;
    const std::uint64_t k = 2 * (b + 1) + j;
    const bool primed = variant == WitnessVariant::order_n_plus_one;
    const PadeParams pp{a, b, primed ? n + 1 : n};

    // The scaling that clears denominators: the order-n prime product for
    // the plain variant, its primed form divided by n+1 for the other.
    PhiFactorization phi = phi_product(a, b, n, primed);
    Ratio phs = primed ? Ratio(Int(phi.value), Natural(n + 1))
                       : Ratio::from_int(Int(phi.value));

    const Ratio eps = power_distance(k).eps;
    const Ratio lhs = Ratio::from_int(q_at_minus8(pp)) *
                      Ratio::from_int(Int(Natural::pow(3, j))) * eps / phs;
    // b - 3a + 1 + 2j = 1 + 2j, and (-1)^a = (-1)^m here.
    const Ratio scale =
        Ratio::from_int(Int(Natural::pow2(1 + 2 * j), m & 1 ? -1 : 1)) / phs;

    const Ratio quarter(1, 4);
    size_t grow = terms ? terms : 8 * (m + 2);
    RemainderEval rem;
    Ratio bound;
    for (int attempt = 0;; ++attempt) {
        rem = r_series_eval(pp, Ratio(-1, 8), grow);
        bound = scale.abs() * rem.tail_bound;
        if (bound < quarter) break;
        if (terms != 0 || attempt >= 6)
            throw precision_error("witness tail bound did not drop below 1/4");
        grow *= 2;
    }

    Ratio x = lhs - rem.partial * scale;
    Int mv = x.round_nearest();
    Ratio residual = (x - Ratio::from_int(mv)).abs();
    if (residual > bound)
        throw std::logic_error("witness residual exceeds its certified tail bound");
    Eq15Witness w;
    w.m = m;
    w.j = j;
    w.k = k;
    w.variant = variant;
    w.nonzero = !mv.is_zero();
    w.m_value = std::move(mv);
    w.residual = std::move(residual);
    w.residual_bound = std::move(bound);
    w.terms = rem.terms;
    return w;
}

} // namespace fracpow
