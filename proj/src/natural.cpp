// natural.cpp - arithmetic core for Natural.

#include "fracpow/natural.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <stdexcept>

namespace fracpow {

namespace {
constexpr size_t MUL_BASE = 32;   // limbs: below this, schoolbook wins
constexpr size_t DIV_BASE = 32;   // quotient limbs: below this, Knuth base case

// Scratch upper bound for the balanced Karatsuba recursion on n limbs.
size_t mul_scratch_size(size_t n) { return 4 * n + 1024; }
} // namespace

Natural Natural::from_limbs(const std::uint64_t* p, size_t n) {
    Natural r;
    r.d_.assign(p, p + n);
    r.trim();
    return r;
}

Natural Natural::limb_slice(size_t lo, size_t hi) const {
    lo = std::min(lo, d_.size());
    hi = std::min(hi, d_.size());
    if (lo >= hi) return Natural();
    return from_limbs(d_.data() + lo, hi - lo);
}

Natural Natural::limb_shl(size_t count) const {
    if (is_zero() || count == 0) return count ? Natural(*this) : *this;
    Natural r;
    r.d_.assign(count, 0);
    r.d_.insert(r.d_.end(), d_.begin(), d_.end());
    return r;
}

Natural Natural::limb_shr(size_t count) const {
    if (count >= d_.size()) return Natural();
    return from_limbs(d_.data() + count, d_.size() - count);
}

std::uint64_t Natural::bit_length() const {
    if (d_.empty()) return 0;
    return 64 * (std::uint64_t)(d_.size() - 1) + (64 - clz64(d_.back()));
}

bool Natural::bit(std::uint64_t i) const {
    size_t w = (size_t)(i / 64);
    if (w >= d_.size()) return false;
    return (d_[w] >> (i % 64)) & 1;
}

std::uint64_t Natural::to_u64() const {
    assert(d_.size() <= 1);
    return d_.empty() ? 0 : d_[0];
}

int Natural::cmp(const Natural& a, const Natural& b) {
    if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
    return limbs_cmp(a.d_.data(), b.d_.data(), a.d_.size());
}

Natural Natural::operator+(const Natural& o) const {
    const Natural& big = d_.size() >= o.d_.size() ? *this : o;
    const Natural& sml = d_.size() >= o.d_.size() ? o : *this;
    if (sml.is_zero()) return big;
    Natural r;
    r.d_.resize(big.d_.size() + 1);
    r.d_[big.d_.size()] = limbs_add(r.d_.data(), big.d_.data(), big.d_.size(),
                                    sml.d_.data(), sml.d_.size());
    r.trim();
    return r;
}

Natural Natural::operator-(const Natural& o) const {
    assert(cmp(*this, o) >= 0);
    if (o.is_zero()) return *this;
    Natural r;
    r.d_.resize(d_.size());
    limb_t br = limbs_sub(r.d_.data(), d_.data(), d_.size(), o.d_.data(), o.d_.size());
    assert(br == 0);
    (void)br;
    r.trim();
    return r;
}

// Balanced Karatsuba: rp[0..2n) = ap[0..n) * bp[0..n).
void Natural::mul_rec(std::uint64_t* rp, const std::uint64_t* ap,
                      const std::uint64_t* bp, size_t n, std::uint64_t* scratch) {
    if (n <= MUL_BASE) {
        limbs_mul_basecase(rp, ap, n, bp, n);
        return;
    }
    const size_t h = n >> 1;      // low halves
    const size_t hh = n - h;      // high halves
    mul_rec(rp, ap, bp, h, scratch);                 // z0 = a0*b0
    mul_rec(rp + 2 * h, ap + h, bp + h, hh, scratch); // z2 = a1*b1
    const size_t un = hh + 1;
    limb_t* u = scratch;
    limb_t* v = scratch + un;
    limb_t* z1 = scratch + 2 * un;
    u[hh] = limbs_add(u, ap + h, hh, ap, h);         // a0 + a1
    v[hh] = limbs_add(v, bp + h, hh, bp, h);         // b0 + b1
    mul_rec(z1, u, v, un, scratch + 4 * un);         // z1 = (a0+a1)(b0+b1)
    limb_t br = limbs_sub(z1, z1, 2 * un, rp, 2 * h);
    br |= limbs_sub(z1, z1, 2 * un, rp + 2 * h, 2 * hh);
    assert(br == 0);
    (void)br;
    limb_t c = limbs_add(rp + h, rp + h, 2 * n - h, z1, 2 * un);
    assert(c == 0);
    (void)c;
}

Natural Natural::operator*(const Natural& o) const {
    if (is_zero() || o.is_zero()) return Natural();
    if (o.d_.size() == 1) return mul_u64(o.d_[0]);
    if (d_.size() == 1) return o.mul_u64(d_[0]);

    const Natural& a = d_.size() >= o.d_.size() ? *this : o;
    const Natural& b = d_.size() >= o.d_.size() ? o : *this;
    const size_t an = a.d_.size(), bn = b.d_.size();
    Natural r;
    r.d_.resize(an + bn);

    if (bn <= MUL_BASE) {
        limbs_mul_basecase(r.d_.data(), a.d_.data(), an, b.d_.data(), bn);
        r.trim();
        return r;
    }
    std::vector<limb_t> scratch(mul_scratch_size(bn));
    if (an == bn) {
        mul_rec(r.d_.data(), a.d_.data(), b.d_.data(), an, scratch.data());
        r.trim();
        return r;
    }
    // Unbalanced: multiply bn-limb blocks of a by b and accumulate.
    std::vector<limb_t> prod(2 * bn), pad;
    const size_t rn = an + bn;
    for (size_t off = 0; off < an; off += bn) {
        const size_t c = std::min(bn, an - off);
        const limb_t* chunk = a.d_.data() + off;
        if (c == bn) {
            mul_rec(prod.data(), chunk, b.d_.data(), bn, scratch.data());
        } else {
            pad.assign(bn, 0);
            limbs_copy(pad.data(), chunk, c);
            mul_rec(prod.data(), pad.data(), b.d_.data(), bn, scratch.data());
        }
        const size_t len = std::min(2 * bn, rn - off);
        limb_t carry = limbs_add_n(r.d_.data() + off, r.d_.data() + off, prod.data(), len);
        for (size_t i = off + len; carry && i < rn; ++i) {
            r.d_[i] += 1;
            carry = r.d_[i] == 0;
        }
        assert(carry == 0);
    }
    r.trim();
    return r;
}

Natural Natural::mul_u64(std::uint64_t v) const {
    if (is_zero() || v == 0) return Natural();
    Natural r;
    r.d_.resize(d_.size() + 1);
    r.d_[d_.size()] = limbs_mul_1(r.d_.data(), d_.data(), d_.size(), v);
    r.trim();
    return r;
}

std::pair<Natural, std::uint64_t> Natural::divrem_u64(std::uint64_t d) const {
    assert(d != 0);
    if (is_zero()) return {Natural(), 0};
    Natural q;
    q.d_.resize(d_.size());
    std::uint64_t r = limbs_divrem_1(q.d_.data(), d_.data(), d_.size(), d);
    q.trim();
    return {std::move(q), r};
}

std::uint64_t Natural::mod_u64(std::uint64_t d) const {
    assert(d != 0);
    if (is_zero()) return 0;
    return limbs_mod_1(d_.data(), d_.size(), d);
}

// Knuth algorithm D. Requires d normalized (top bit set).
std::pair<Natural, Natural> Natural::divmod_knuth(const Natural& a, const Natural& d) {
    const size_t n = d.d_.size();
    assert(n >= 1 && (d.d_.back() >> 63) == 1);
    if (cmp(a, d) < 0) return {Natural(), a};
    const size_t mq = a.d_.size() - n + 1;   // quotient limb count
    std::vector<limb_t> u(a.d_.size() + 1, 0);
    limbs_copy(u.data(), a.d_.data(), a.d_.size());
    std::vector<limb_t> q(mq, 0);
    const limb_t b1 = d.d_[n - 1];
    const limb_t b2 = n >= 2 ? d.d_[n - 2] : 0;

    for (size_t j = mq; j-- > 0;) {
        const limb_t u2 = u[j + n], u1 = u[j + n - 1];
        limb_t qhat, rhat = 0;
        bool refine = true;
        if (u2 == b1) {
            qhat = ~0ull;
            rhat = u1 + b1;
            if (rhat < u1) refine = false;   // rhat >= beta: 3x2 test passes trivially
        } else {
            qhat = udiv_128(u2, u1, b1, &rhat);
        }
        if (refine && n >= 2) {
            const limb_t u0 = u[j + n - 2];
            while (true) {
                limb_t hi, lo = umul_hilo(qhat, b2, &hi);
                if (hi > rhat || (hi == rhat && lo > u0)) {
                    --qhat;
                    limb_t nr = rhat + b1;
                    if (nr < rhat) break;
                    rhat = nr;
                } else {
                    break;
                }
            }
        }
        if (qhat != 0) {
            limb_t borrow = limbs_submul_1(u.data() + j, d.d_.data(), n, qhat);
            limb_t top = u[j + n];
            u[j + n] = top - borrow;
            if (top < borrow) {               // overshot by one: add back
                --qhat;
                limb_t c = limbs_add_n(u.data() + j, u.data() + j, d.d_.data(), n);
                u[j + n] += c;
                assert(u[j + n] == 0);
            }
        }
        q[j] = qhat;
    }
    return {from_limbs(q.data(), mq), from_limbs(u.data(), n)};
}

// Divide-and-conquer division; d normalized (top bit set). Estimates a
// quotient from truncated operands, then corrects it exactly against the
// full divisor, so no precondition beyond normalization is needed.
std::pair<Natural, Natural> Natural::divmod_norm(const Natural& a, const Natural& d) {
    if (cmp(a, d) < 0) return {Natural(), a};
    const size_t n = d.d_.size();
    const size_t m = a.d_.size() - n;
    if (m < DIV_BASE || n <= DIV_BASE) return divmod_knuth(a, d);

    if (m > n) {
        // Long quotient: peel n-limb chunks from the top, carrying the
        // remainder down. Each chunk value is < d * beta^c, so the chunk
        // quotient fits in c limbs.
        const size_t qlimbs = m + 1;
        Natural r = a.limb_slice(qlimbs, a.d_.size());   // top n-1 limbs: < d
        std::vector<limb_t> qv(qlimbs, 0);
        size_t pos = qlimbs;
        while (pos > 0) {
            const size_t c = (pos - 1) % n + 1;
            pos -= c;
            Natural window = r.limb_shl(c) + a.limb_slice(pos, pos + c);
            auto [qc, rc] = divmod_norm(window, d);
            assert(qc.d_.size() <= c);
            limbs_copy(qv.data() + pos, qc.d_.data(), qc.d_.size());
            r = std::move(rc);
        }
        return {from_limbs(qv.data(), qlimbs), std::move(r)};
    }

    const Natural one(1);
    if (n > m + 1) {
        // Short quotient: the low n-m-1 limbs of the divisor barely matter.
        const size_t s = n - m - 1;
        Natural qe = divmod_norm(a.limb_shr(s), d.limb_shr(s)).first;
        Natural p = qe * d;
        int guard = 0;
        while (cmp(p, a) > 0) {
            qe -= one;
            p -= d;
            assert(++guard < 8);
        }
        Natural r = a - p;
        while (cmp(r, d) >= 0) {
            qe += one;
            r -= d;
            assert(++guard < 8);
        }
        return {std::move(qe), std::move(r)};
    }

    // Balanced: halve the quotient. High half from truncated operands,
    // corrected; low half by recursion on the exact partial remainder.
    const size_t k = m / 2;
    Natural q1 = divmod_norm(a.limb_shr(2 * k), d.limb_shr(k)).first;
    Natural dk = d.limb_shl(k);
    Natural p = (q1 * d).limb_shl(k);
    int guard = 0;
    while (cmp(p, a) > 0) {
        q1 -= one;
        p -= dk;
        assert(++guard < 8);
    }
    Natural t = a - p;
    while (cmp(t, dk) >= 0) {
        q1 += one;
        t -= dk;
        assert(++guard < 8);
    }
    auto [q0, r] = divmod_norm(t, d);
    assert(q0.d_.size() <= k);
    return {q1.limb_shl(k) + q0, std::move(r)};
}

std::pair<Natural, Natural> Natural::divmod(const Natural& a, const Natural& d) {
    if (d.is_zero()) throw std::domain_error("division by zero");
    if (cmp(a, d) < 0) return {Natural(), a};
    if (d.d_.size() == 1) {
        auto [q, r] = a.divrem_u64(d.d_[0]);
        return {std::move(q), Natural(r)};
    }
    const unsigned sh = clz64(d.d_.back());
    if (sh == 0) {
        return divmod_norm(a, d);
    }
    auto [q, r] = divmod_norm(a.shl(sh), d.shl(sh));
    return {std::move(q), r.shr(sh)};
}

Natural Natural::shl(std::uint64_t bits) const {
    if (is_zero()) return Natural();
    const size_t words = (size_t)(bits / 64);
    const unsigned rem = (unsigned)(bits % 64);
    Natural r;
    r.d_.assign(words, 0);
    r.d_.insert(r.d_.end(), d_.begin(), d_.end());
    if (rem) {
        r.d_.push_back(0);
        limb_t out = limbs_lshift(r.d_.data() + words, r.d_.data() + words,
                                  d_.size(), rem);
        r.d_.back() = out;
    }
    r.trim();
    return r;
}

Natural Natural::shr(std::uint64_t bits) const {
    const size_t words = (size_t)(bits / 64);
    const unsigned rem = (unsigned)(bits % 64);
    if (words >= d_.size()) return Natural();
    Natural r = limb_shr(words);
    if (rem && !r.is_zero()) {
        limbs_rshift(r.d_.data(), r.d_.data(), r.d_.size(), rem);
        r.trim();
    }
    return r;
}

Natural Natural::pow2(std::uint64_t bits) {
    Natural r;
    r.d_.assign((size_t)(bits / 64), 0);
    r.d_.push_back(1ull << (bits % 64));
    return r;
}

Natural Natural::pow(std::uint64_t base, std::uint64_t exp) {
    Natural acc(1);
    Natural b(base);
    while (exp) {
        if (exp & 1) acc *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return acc;
}

namespace {
std::uint64_t trailing_zero_bits(const Natural& x) {
    assert(!x.is_zero());
    std::uint64_t tz = 0;
    size_t i = 0;
    while (x.limb(i) == 0) { tz += 64; ++i; }
    return tz + __builtin_ctzll(x.limb(i));
}
} // namespace

Natural Natural::gcd(Natural a, Natural b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::uint64_t za = trailing_zero_bits(a), zb = trailing_zero_bits(b);
    const std::uint64_t shift = std::min(za, zb);
    a = a.shr(za);
    b = b.shr(zb);
    while (true) {
        if (cmp(a, b) < 0) std::swap(a, b);
        a -= b;
        if (a.is_zero()) return b.shl(shift);
        a = a.shr(trailing_zero_bits(a));
    }
}

namespace {
constexpr std::uint64_t POW10_19 = 10000000000000000000ull;

// chain[i] = 10^(19 * 2^i), extended while chain.back() <= v.
std::vector<Natural> pow10_chain_for(const Natural& v) {
    std::vector<Natural> chain{Natural(POW10_19)};
    while (Natural::cmp(chain.back(), v) <= 0)
        chain.push_back(chain.back() * chain.back());
    return chain;
}

// Writes exactly 19 * 2^i digits of v (zero padded) to out.
void dec_rec(const Natural& v, size_t i, const std::vector<Natural>& chain,
             std::string& out) {
    if (i == 0) {
        char buf[20];
        std::snprintf(buf, sizeof buf, "%019llu",
                      (unsigned long long)v.to_u64());
        out.append(buf, 19);
        return;
    }
    auto [q, r] = Natural::divmod(v, chain[i - 1]);
    dec_rec(q, i - 1, chain, out);
    dec_rec(r, i - 1, chain, out);
}
} // namespace

std::string Natural::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<Natural> chain = pow10_chain_for(*this);
    std::string out;
    dec_rec(*this, chain.size() - 1, chain, out);
    const size_t nz = out.find_first_not_of('0');
    return out.substr(nz);
}

Natural Natural::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty decimal string");
    for (char ch : s)
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("invalid decimal digit");
    // Strip leading zeros.
    size_t nz = s.find_first_not_of('0');
    if (nz == std::string_view::npos) return Natural();
    s = s.substr(nz);
    if (s.size() <= 19) {
        std::uint64_t v = 0;
        for (char ch : s) v = v * 10 + (std::uint64_t)(ch - '0');
        return Natural(v);
    }
    // chain[i] = 10^(19*2^i), enough to cover half the string.
    std::vector<Natural> chain{Natural(POW10_19)};
    while (19ull * (1ull << chain.size()) < s.size())
        chain.push_back(chain.back() * chain.back());

    struct Parser {
        const std::vector<Natural>& chain;
        Natural run(std::string_view t) const {
            if (t.size() <= 19) {
                std::uint64_t v = 0;
                for (char ch : t) v = v * 10 + (std::uint64_t)(ch - '0');
                return Natural(v);
            }
            size_t i = 0;
            while (19ull * (2ull << i) < t.size()) ++i;   // largest 19*2^i < size
            const size_t lo = 19ull * (1ull << i);
            Natural hi = run(t.substr(0, t.size() - lo));
            Natural low = run(t.substr(t.size() - lo));
            return hi * chain[i] + low;
        }
    };
    return Parser{chain}.run(s);
}

} // namespace fracpow
