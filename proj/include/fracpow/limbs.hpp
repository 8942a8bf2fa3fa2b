#pragma once
// limbs.hpp - low-level limb-array kernels for arbitrary-precision naturals.
//
// Limb arrays are uint64_t, little-endian (index 0 = least significant).
// Everything here is branch-light and allocation-free; callers own buffers.

#include <cstdint>
#include <cstring>
#include <cassert>
#include <cstddef>

namespace fracpow {

using limb_t = std::uint64_t;
constexpr int LIMB_BITS = 64;

// 64x64 -> 128 multiply: low returned, *hi set.
inline limb_t umul_hilo(limb_t a, limb_t b, limb_t* hi) {
    unsigned __int128 r = (unsigned __int128)a * b;
    *hi = (limb_t)(r >> 64);
    return (limb_t)r;
}

// (hi:lo) / d -> quotient, *rem set. Requires hi < d.
inline limb_t udiv_128(limb_t hi, limb_t lo, limb_t d, limb_t* rem) {
    assert(hi < d);
    unsigned __int128 n = ((unsigned __int128)hi << 64) | lo;
    *rem = (limb_t)(n % d);
    return (limb_t)(n / d);
}

inline int clz64(limb_t x) {
    assert(x != 0);
    return __builtin_clzll(x);
}

inline void limbs_zero(limb_t* rp, size_t n) {
    std::memset(rp, 0, n * sizeof(limb_t));
}

inline void limbs_copy(limb_t* rp, const limb_t* ap, size_t n) {
    std::memmove(rp, ap, n * sizeof(limb_t));
}

// Compare equal-length arrays: -1, 0, +1.
inline int limbs_cmp(const limb_t* ap, const limb_t* bp, size_t n) {
    for (size_t i = n; i-- > 0;) {
        if (ap[i] != bp[i]) return ap[i] < bp[i] ? -1 : 1;
    }
    return 0;
}

// rp = ap + bp (both n limbs), returns carry.
inline limb_t limbs_add_n(limb_t* rp, const limb_t* ap, const limb_t* bp, size_t n) {
    unsigned __int128 acc = 0;
    for (size_t i = 0; i < n; ++i) {
        acc += ap[i];
        acc += bp[i];
        rp[i] = (limb_t)acc;
        acc >>= 64;
    }
    return (limb_t)acc;
}

// rp = ap (an limbs) + bp (bn limbs), an >= bn, returns carry.
inline limb_t limbs_add(limb_t* rp, const limb_t* ap, size_t an,
                        const limb_t* bp, size_t bn) {
    assert(an >= bn);
    limb_t c = limbs_add_n(rp, ap, bp, bn);
    size_t i = bn;
    for (; i < an && c; ++i) {
        rp[i] = ap[i] + 1;
        c = rp[i] == 0;
    }
    if (rp != ap)
        for (; i < an; ++i) rp[i] = ap[i];
    return c;
}

// rp = ap + b (single limb), returns carry.
inline limb_t limbs_add_1(limb_t* rp, const limb_t* ap, size_t n, limb_t b) {
    limb_t c = b;
    size_t i = 0;
    for (; i < n && c; ++i) {
        rp[i] = ap[i] + c;
        c = rp[i] < c;
    }
    if (rp != ap)
        for (; i < n; ++i) rp[i] = ap[i];
    return c;
}

// rp = ap - bp (both n limbs), returns borrow.
inline limb_t limbs_sub_n(limb_t* rp, const limb_t* ap, const limb_t* bp, size_t n) {
    __int128 acc = 0;
    for (size_t i = 0; i < n; ++i) {
        acc += ap[i];
        acc -= bp[i];
        rp[i] = (limb_t)acc;
        acc >>= 64;   // arithmetic shift keeps -1 borrow
    }
    return (limb_t)(-(std::int64_t)acc);
}

// rp = ap (an) - bp (bn), an >= bn, value must be >= 0; returns borrow (0 if so).
inline limb_t limbs_sub(limb_t* rp, const limb_t* ap, size_t an,
                        const limb_t* bp, size_t bn) {
    assert(an >= bn);
    limb_t br = limbs_sub_n(rp, ap, bp, bn);
    size_t i = bn;
    for (; i < an && br; ++i) {
        br = ap[i] == 0;
        rp[i] = ap[i] - 1;
    }
    if (rp != ap)
        for (; i < an; ++i) rp[i] = ap[i];
    return br;
}

// rp = ap * b, returns high limb.
inline limb_t limbs_mul_1(limb_t* rp, const limb_t* ap, size_t n, limb_t b) {
    limb_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        limb_t hi, lo = umul_hilo(ap[i], b, &hi);
        lo += carry;
        hi += lo < carry;
        rp[i] = lo;
        carry = hi;
    }
    return carry;
}

// rp += ap * b, returns carry-out limb.
inline limb_t limbs_addmul_1(limb_t* rp, const limb_t* ap, size_t n, limb_t b) {
    limb_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        limb_t hi, lo = umul_hilo(ap[i], b, &hi);
        lo += carry;
        hi += lo < carry;
        lo += rp[i];
        hi += lo < rp[i];
        rp[i] = lo;
        carry = hi;
    }
    return carry;
}

// rp -= ap * b, returns borrow-out limb.
inline limb_t limbs_submul_1(limb_t* rp, const limb_t* ap, size_t n, limb_t b) {
    limb_t borrow = 0;
    for (size_t i = 0; i < n; ++i) {
        limb_t hi, lo = umul_hilo(ap[i], b, &hi);
        lo += borrow;
        hi += lo < borrow;
        borrow = hi + (rp[i] < lo);
        rp[i] -= lo;
    }
    return borrow;
}

// rp[0..an+bn) = ap * bp, schoolbook. rp must not alias inputs.
inline void limbs_mul_basecase(limb_t* rp, const limb_t* ap, size_t an,
                               const limb_t* bp, size_t bn) {
    assert(an > 0 && bn > 0);
    rp[an] = limbs_mul_1(rp, ap, an, bp[0]);
    for (size_t j = 1; j < bn; ++j)
        rp[an + j] = limbs_addmul_1(rp + j, ap, an, bp[j]);
}

// rp = ap << cnt bits (0 < cnt < 64), returns shifted-out high bits.
inline limb_t limbs_lshift(limb_t* rp, const limb_t* ap, size_t n, unsigned cnt) {
    assert(cnt > 0 && cnt < 64);
    limb_t out = ap[n - 1] >> (64 - cnt);
    for (size_t i = n - 1; i > 0; --i)
        rp[i] = (ap[i] << cnt) | (ap[i - 1] >> (64 - cnt));
    rp[0] = ap[0] << cnt;
    return out;
}

// rp = ap >> cnt bits (0 < cnt < 64), returns shifted-out low bits (in high pos).
inline limb_t limbs_rshift(limb_t* rp, const limb_t* ap, size_t n, unsigned cnt) {
    assert(cnt > 0 && cnt < 64);
    limb_t out = ap[0] << (64 - cnt);
    for (size_t i = 0; i + 1 < n; ++i)
        rp[i] = (ap[i] >> cnt) | (ap[i + 1] << (64 - cnt));
    rp[n - 1] = ap[n - 1] >> cnt;
    return out;
}

// rp = ap / d, returns remainder. Any d > 0.
inline limb_t limbs_divrem_1(limb_t* rp, const limb_t* ap, size_t n, limb_t d) {
    assert(d > 0);
    limb_t r = 0;
    for (size_t i = n; i-- > 0;) {
        unsigned __int128 num = ((unsigned __int128)r << 64) | ap[i];
        rp[i] = (limb_t)(num / d);
        r = (limb_t)(num % d);
    }
    return r;
}

inline limb_t limbs_mod_1(const limb_t* ap, size_t n, limb_t d) {
    assert(d > 0);
    limb_t r = 0;
    for (size_t i = n; i-- > 0;) {
        unsigned __int128 num = ((unsigned __int128)r << 64) | ap[i];
        r = (limb_t)(num % d);
    }
    return r;
}

} // namespace fracpow
