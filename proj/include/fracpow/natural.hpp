#pragma once
// natural.hpp - arbitrary-precision unsigned integers.
//
// Representation: little-endian vector of 64-bit limbs, canonical (no leading
// zero limbs; empty vector means zero). Multiplication is Karatsuba above a
// small threshold; division is divide-and-conquer on the quotient with a
// truncated-divisor estimate corrected exactly, so it is unconditionally
// correct and subquadratic. Decimal I/O splits on cached powers of 10^19.

#include "fracpow/limbs.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>
#include <utility>

namespace fracpow {

class Natural {
public:
    Natural() = default;
    explicit Natural(std::uint64_t v) { if (v) d_.push_back(v); }

    static Natural from_decimal(std::string_view s);
    // Value from a little-endian limb array (leading zeros allowed).
    static Natural from_limbs(const std::uint64_t* p, size_t n);
    // 2^bits (single set bit).
    static Natural pow2(std::uint64_t bits);
    // base^exp by binary powering.
    static Natural pow(std::uint64_t base, std::uint64_t exp);

    bool is_zero() const { return d_.empty(); }
    size_t limbs() const { return d_.size(); }
    const std::uint64_t* data() const { return d_.data(); }
    std::uint64_t limb(size_t i) const { return i < d_.size() ? d_[i] : 0; }
    // Number of significant bits; 0 for zero.
    std::uint64_t bit_length() const;
    bool bit(std::uint64_t i) const;
    // Value as uint64_t; caller must know it fits.
    std::uint64_t to_u64() const;

    static int cmp(const Natural& a, const Natural& b);
    bool operator==(const Natural& o) const { return d_ == o.d_; }
    bool operator!=(const Natural& o) const { return d_ != o.d_; }
    bool operator<(const Natural& o) const  { return cmp(*this, o) < 0; }
    bool operator<=(const Natural& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Natural& o) const  { return cmp(*this, o) > 0; }
    bool operator>=(const Natural& o) const { return cmp(*this, o) >= 0; }

    Natural operator+(const Natural& o) const;
    // Requires *this >= o.
    Natural operator-(const Natural& o) const;
    Natural operator*(const Natural& o) const;
    Natural& operator+=(const Natural& o) { return *this = *this + o; }
    Natural& operator-=(const Natural& o) { return *this = *this - o; }
    Natural& operator*=(const Natural& o) { return *this = *this * o; }

    Natural mul_u64(std::uint64_t v) const;
    // Quotient/remainder by a positive machine word.
    std::pair<Natural, std::uint64_t> divrem_u64(std::uint64_t d) const;
    std::uint64_t mod_u64(std::uint64_t d) const;

    // (quotient, remainder); d must be nonzero.
    static std::pair<Natural, Natural> divmod(const Natural& a, const Natural& d);

    Natural shl(std::uint64_t bits) const;
    Natural shr(std::uint64_t bits) const;

    std::string to_decimal() const;

    static Natural gcd(Natural a, Natural b);

private:
    std::vector<std::uint64_t> d_;

    void trim() { while (!d_.empty() && d_.back() == 0) d_.pop_back(); }
    // Slice of limbs [lo, hi) as a value (out-of-range reads as zero).
    Natural limb_slice(size_t lo, size_t hi) const;
    Natural limb_shl(size_t count) const;   // *this * 2^(64*count)
    Natural limb_shr(size_t count) const;   // *this / 2^(64*count)

    static void mul_rec(std::uint64_t* rp, const std::uint64_t* ap,
                        const std::uint64_t* bp, size_t n, std::uint64_t* scratch);
    static std::pair<Natural, Natural> divmod_norm(const Natural& a, const Natural& d);
    static std::pair<Natural, Natural> divmod_knuth(const Natural& a, const Natural& d);

    friend struct NaturalTestHook;
};

} // namespace fracpow
