// primes.cpp - exponent minima, prime products, exact profile intervals,
// and the theta sieve with direction-safe bounds.

#include "fracpow/primes.hpp"

#include "fracpow/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fracpow {

namespace {

// Carry indicator [{u/p} + {v/p} >= 1] for possibly negative u, v.
inline int carry(std::int64_t u, std::int64_t v, std::int64_t p) {
    std::int64_t uu = u % p;
    if (uu < 0) uu += p;
    std::int64_t vv = v % p;
    if (vv < 0) vv += p;
    return uu + vv >= p ? 1 : 0;
}

double to_double_lower(const Ratio& r) {
    // Truncated 30-digit decimal, then a few ulps of slack downward.
    double v = std::strtod(r.to_decimal(30).c_str(), nullptr);
    for (int i = 0; i < 4; ++i) v = std::nextafter(v, -HUGE_VAL);
    return v;
}

} // namespace

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
    std::vector<std::uint32_t> primes;
    if (limit < 2) return primes;
    if (limit > (1ull << 31))
        throw resource_error("sieve limit " + std::to_string(limit) +
                             " exceeds the 2^31 budget");
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (!composite[i])
            for (std::uint64_t j = i * i; j <= limit; j += i)
                composite[j] = true;
    for (std::uint64_t i = 2; i <= limit; ++i)
        if (!composite[i]) primes.push_back(static_cast<std::uint32_t>(i));
    return primes;
}

int exponent_e(std::uint64_t p, std::uint64_t a, std::uint64_t b,
               std::uint64_t n, bool primed) {
    if (p < 2 || p * p <= a + b + n)
        throw usage_error("exponent requires a prime p with p^2 > a+b+n");
    const auto sp = static_cast<std::int64_t>(p);
    const auto sa = static_cast<std::int64_t>(a);
    const auto sb = static_cast<std::int64_t>(b);
    const auto sn = static_cast<std::int64_t>(n);
    int best = 2;
    for (std::int64_t mu = 0; mu < sp && best > 0; ++mu) {
        int t1 = primed ? carry(sa + sn, mu, sp) : carry(-(sa + sn + mu), mu, sp);
        int t2 = carry(sa + sb + mu, sn - mu, sp);
        best = std::min(best, t1 + t2);
    }
    return best;
}

PhiFactorization phi_product(std::uint64_t a, std::uint64_t b, std::uint64_t n,
                             bool primed) {
    PhiFactorization out;
    out.value = Natural(1);
    for (std::uint32_t p : sieve_primes(a + b + n)) {
        if (static_cast<std::uint64_t>(p) * p <= a + b + n) continue;
        int e = exponent_e(p, a, b, n, primed);
        if (e == 0) continue;
        out.factors.push_back({p, e});
        for (int i = 0; i < e; ++i) out.value = out.value.mul_u64(p);
    }
    return out;
}

namespace {

int profile_value_int(const Ratio& x, const ProfileParams& pr, bool primed) {
    assert(x.sign() >= 0 && x < Ratio(1));
    const Ratio ag = Ratio(static_cast<std::int64_t>(pr.alpha + pr.gamma)) * x;
    const Ratio ab = Ratio(static_cast<std::int64_t>(pr.alpha + pr.beta)) * x;
    const Ratio g = Ratio(static_cast<std::int64_t>(pr.gamma)) * x;
    const Ratio one(1);
    const Ratio cands[4] = {Ratio(0), (-ag).frac(), (-ab).frac(), g.frac()};
    int best = 2;
    for (const Ratio& y : cands) {
        int t1 = primed ? (ag.frac() + y >= one ? 1 : 0)
                        : ((-ag - y).frac() + y >= one ? 1 : 0);
        int t2 = (ab + y).frac() + (g - y).frac() >= one ? 1 : 0;
        best = std::min(best, t1 + t2);
        if (best == 0) break;
    }
    return best;
}

} // namespace

Ratio profile_value(const Ratio& x, const ProfileParams& params, bool primed) {
    if (x.sign() < 0 || x >= Ratio(1))
        throw usage_error("profile argument must lie in [0, 1)");
    return Ratio(profile_value_int(x, params, primed));
}

PhiIntervalSet solve_profile_intervals(const ProfileParams& params, bool primed) {
    // x-breakpoint denominators: every |coefficient| a fractional-part
    // argument, or a carry-boundary sum of two arguments, can acquire once a
    // candidate y (itself {c x} for c in {0, -(alpha+gamma), -(alpha+beta),
    // gamma}) is substituted.
    const std::int64_t al = params.alpha, be = params.beta, ga = params.gamma;
    const std::int64_t ycoef[4] = {0, -(al + ga), -(al + be), ga};
    std::vector<std::uint64_t> dens;
    auto add = [&](std::int64_t c) {
        if (c != 0) dens.push_back(static_cast<std::uint64_t>(std::llabs(c)));
    };
    for (std::int64_t c : ycoef) {
        add(-(al + ga) - c);          // first carry, unprimed argument
        add((al + ga) + c);           // first carry, primed boundary sum
        add((al + be) + c);           // second carry, left argument
        add(ga - c);                  // second carry, right argument
        add(c);                       // the candidate itself
    }
    add(al + ga);
    add(al + be + ga);                // second carry boundary sum
    std::sort(dens.begin(), dens.end());
    dens.erase(std::unique(dens.begin(), dens.end()), dens.end());

    std::vector<Ratio> bps;
    for (std::uint64_t c : dens)
        for (std::uint64_t j = 0; j < c; ++j)
            bps.emplace_back(static_cast<std::int64_t>(j),
                             static_cast<std::int64_t>(c));
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    bps.emplace_back(1);

    PhiIntervalSet set;
    set.primed = primed;
    const Ratio half(1, 2);
    bool open_run = false;
    PhiInterval cur;
    for (size_t i = 0; i + 1 < bps.size(); ++i) {
        const Ratio& u = bps[i];
        const Ratio& v = bps[i + 1];
        bool at_u = profile_value_int(u, params, primed) >= 1;
        bool inner = profile_value_int((u + v) * half, params, primed) >= 1;
        if (inner) {
            if (!open_run) {
                cur.lo = u;
                cur.lo_closed = at_u;
                open_run = true;
            }
        } else {
            if (open_run) {
                cur.hi = u;
                cur.hi_closed = at_u;
                set.intervals.push_back(cur);
                open_run = false;
            } else if (at_u) {
                throw std::logic_error("profile level set has an isolated point at " +
                                       u.to_decimal(6));
            }
        }
    }
    if (open_run) {
        cur.hi = Ratio(1);
        cur.hi_closed = false;        // domain ends at 1 exclusive
        set.intervals.push_back(cur);
    }

    // Safety pass: dense rational sampling at lcm * 8 must agree with the
    // assembled set, re-verifying piecewise constancy between breakpoints.
    std::uint64_t l = 1;
    for (std::uint64_t c : dens) l = std::lcm(l, c);
    l *= 8;
    auto member = [&](const Ratio& x) {
        for (const PhiInterval& iv : set.intervals) {
            if (iv.lo < x && x < iv.hi) return true;
            if (x == iv.lo && iv.lo_closed) return true;
            if (x == iv.hi && iv.hi_closed) return true;
        }
        return false;
    };
    for (std::uint64_t j = 0; j < l; ++j) {
        Ratio x(static_cast<std::int64_t>(j), static_cast<std::int64_t>(l));
        if ((profile_value_int(x, params, primed) >= 1) != member(x))
            throw std::logic_error("profile interval set disagrees with dense "
                                   "sampling at " + x.to_decimal(8));
    }
    return set;
}

ThetaTable theta_sieve(std::uint64_t limit) {
    if (limit < 2) throw usage_error("theta sieve needs limit >= 2");
    ThetaTable t;
    t.limit = limit;
    t.primes = sieve_primes(limit);
    t.cum.reserve(t.primes.size());
    // Kahan summation; the tracked bound covers both the per-term log ulp
    // and the compensated accumulation residue.
    double sum = 0, comp = 0;
    for (std::uint32_t p : t.primes) {
        double y = std::log(static_cast<double>(p)) - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        t.cum.push_back(sum);
    }
    t.err_bound = 4e-16 * (sum > 1 ? sum : 1.0) + 1e-12;
    return t;
}

ThetaValue theta(const ThetaTable& table, std::uint64_t x) {
    if (x > table.limit)
        throw usage_error("theta query above the sieve limit");
    auto it = std::upper_bound(table.primes.begin(), table.primes.end(), x);
    if (it == table.primes.begin()) return {0.0, 0.0};
    return {table.cum[static_cast<size_t>(it - table.primes.begin()) - 1],
            table.err_bound};
}

Verdict verify_theta_bounds(const ThetaTable& table) {
    if (table.limit < 1000000)
        throw usage_error("theta bound verification needs limit >= 10^6");
    const double err = table.err_bound;
    // Upper bound at each prime, where theta(x)/x is locally maximal.
    for (size_t i = 0; i < table.primes.size(); ++i) {
        double p = table.primes[i];
        if (!(table.cum[i] + err < 1.001102 * p))
            return make_fail("theta upper bound fails",
                             "p = " + std::to_string(table.primes[i]));
    }
    // Lower bound just below each prime beyond the validity threshold, where
    // theta(x)/x is locally minimal, plus the tail up to the limit.
    for (size_t i = 0; i + 1 < table.primes.size(); ++i) {
        double next = table.primes[i + 1];
        if (table.primes[i + 1] <= 487381) continue;
        if (!(table.cum[i] - err > 0.998 * next))
            return make_fail("theta lower bound fails",
                             "below p = " + std::to_string(table.primes[i + 1]));
    }
    if (!(table.cum.back() - err > 0.998 * static_cast<double>(table.limit)))
        return make_fail("theta lower bound fails at the sieve limit",
                         std::to_string(table.limit));
    return make_pass("theta within [0.998 x, 1.001102 x] over (487381, " +
                     std::to_string(table.limit) + "]");
}

Ratio linear_phi_rate(const PhiIntervalSet& set, std::uint64_t n_max) {
    const Ratio lo_c(998, 1000), hi_c(1001102, 1000000);
    Ratio rate;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const Ratio nn(static_cast<std::int64_t>(n));
        for (const PhiInterval& iv : set.intervals)
            rate += lo_c / (iv.lo + nn) - hi_c / (iv.hi + nn);
    }
    return rate;
}

PhiLowerBound log_phi_lower(std::uint64_t m, const PhiIntervalSet& set,
                            std::uint64_t n_max, ThetaSource source,
                            const ThetaTable* table) {
    if (m < 1) throw usage_error("log_phi_lower needs m >= 1");
    // Every queried range must stay above sqrt((alpha+beta+gamma) m):
    // m / (B + N) >= m / (N + 1) >= sqrt(16 m) iff 16 (N+1)^2 <= m.
    if (16 * (n_max + 1) * (n_max + 1) > m)
        throw usage_error("n_max out of range: need 16 (n_max+1)^2 <= m");
    PhiLowerBound out;
    const Ratio mm(static_cast<std::int64_t>(m));
    if (source == ThetaSource::exact_sieve) {
        if (table == nullptr)
            throw usage_error("exact_sieve mode needs a theta table");
        double v = 0;
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            const Ratio nn(static_cast<std::int64_t>(n));
            for (const PhiInterval& iv : set.intervals) {
                std::uint64_t xa = ((mm / (iv.lo + nn)).floor()).mag().to_u64();
                std::uint64_t xb = ((mm / (iv.hi + nn)).floor()).mag().to_u64();
                ThetaValue ta = theta(*table, xa);
                ThetaValue tb = theta(*table, xb);
                v += (ta.value - ta.err) - (tb.value + tb.err);
            }
        }
        out.value = v;
        return out;
    }
    const Ratio lo_c(998, 1000), hi_c(1001102, 1000000), thresh(487381);
    Ratio sum;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        const Ratio nn(static_cast<std::int64_t>(n));
        for (const PhiInterval& iv : set.intervals) {
            Ratio xa = mm / (iv.lo + nn);
            if (xa <= thresh) continue;    // drop: the true term is >= 0
            sum += lo_c * xa - hi_c * (mm / (iv.hi + nn));
        }
    }
    out.exact = sum;
    out.is_exact = true;
    out.value = to_double_lower(sum);
    return out;
}

Verdict consistency_e_vs_profile(std::uint64_t m, const ProfileParams& params) {
    if (m < 1) throw usage_error("consistency check needs m >= 1");
    const std::uint64_t s = params.alpha + params.beta + params.gamma;
    const std::uint64_t a = params.alpha * m, b = params.beta * m,
                        n = params.gamma * m;
    std::uint64_t checked = 0;
    for (std::uint32_t p : sieve_primes(s * m)) {
        if (static_cast<std::uint64_t>(p) * p <= s * m) continue;
        Ratio x(static_cast<std::int64_t>(m % p), static_cast<std::int64_t>(p));
        for (bool primed : {false, true}) {
            int e = exponent_e(p, a, b, n, primed);
            int f = profile_value_int(x, params, primed);
            if (e != f)
                return make_fail("prime exponent disagrees with the profile",
                                 "e = " + std::to_string(e) + ", profile " +
                                 std::to_string(f) + " at p = " + std::to_string(p) +
                                 ", m = " + std::to_string(m) +
                                 (primed ? " (primed)" : ""));
        }
        ++checked;
    }
    return make_pass("exponents match profiles at " + std::to_string(checked) +
                     " primes for m = " + std::to_string(m));
}

} // namespace fracpow
