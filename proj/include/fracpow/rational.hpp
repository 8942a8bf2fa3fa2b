#pragma once
// rational.hpp - signed arbitrary-precision integers and exact rationals.
//
// Int is a sign/magnitude wrapper over Natural. Ratio keeps num/den coprime
// with den > 0; every operation re-reduces, so equality is structural.

#include "fracpow/natural.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace fracpow {

class Int {
public:
    Int() = default;
    Int(std::int64_t v);                       // implicit: small literals are handy
    explicit Int(Natural n, int sign = 1);

    static Int from_decimal(std::string_view s);

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    const Natural& mag() const { return mag_; }

    Int operator-() const;
    Int operator+(const Int& o) const;
    Int operator-(const Int& o) const;
    Int operator*(const Int& o) const;
    Int& operator+=(const Int& o) { return *this = *this + o; }
    Int& operator-=(const Int& o) { return *this = *this - o; }
    Int& operator*=(const Int& o) { return *this = *this * o; }

    // Exact division: remainder must be zero.
    Int divexact(const Int& o) const;
    // Truncated division and remainder by a machine word.
    std::int64_t mod_u64(std::uint64_t d) const;   // value mod d, in [0, d)

    static int cmp(const Int& a, const Int& b);
    bool operator==(const Int& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Int& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Int& o) const  { return cmp(*this, o) < 0; }
    bool operator<=(const Int& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Int& o) const  { return cmp(*this, o) > 0; }
    bool operator>=(const Int& o) const { return cmp(*this, o) >= 0; }

    std::string to_decimal() const;

private:
    int sign_ = 0;        // -1, 0, +1
    Natural mag_;
};

class Ratio {
public:
    Ratio() = default;                          // zero
    Ratio(std::int64_t v) : num_(v), den_(1) {} // implicit: small literals
    Ratio(Int num, Natural den);                // reduces; den must be nonzero
    Ratio(std::int64_t num, std::int64_t den);

    static Ratio from_int(Int v) { return Ratio(std::move(v), Natural(1)); }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }
    const Int& num() const { return num_; }
    const Natural& den() const { return den_; }

    Ratio operator-() const;
    Ratio operator+(const Ratio& o) const;
    Ratio operator-(const Ratio& o) const;
    Ratio operator*(const Ratio& o) const;
    Ratio operator/(const Ratio& o) const;      // o must be nonzero
    Ratio& operator+=(const Ratio& o) { return *this = *this + o; }
    Ratio& operator-=(const Ratio& o) { return *this = *this - o; }
    Ratio& operator*=(const Ratio& o) { return *this = *this * o; }
    Ratio& operator/=(const Ratio& o) { return *this = *this / o; }

    Ratio abs() const;
    Ratio reciprocal() const;
    Int floor() const;
    // Nearest integer; exact half rounds away from zero.
    Int round_nearest() const;
    // Fractional part x - floor(x), in [0, 1).
    Ratio frac() const;

    static int cmp(const Ratio& a, const Ratio& b);
    bool operator==(const Ratio& o) const { return cmp(*this, o) == 0; }
    bool operator!=(const Ratio& o) const { return cmp(*this, o) != 0; }
    bool operator<(const Ratio& o) const  { return cmp(*this, o) < 0; }
    bool operator<=(const Ratio& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Ratio& o) const  { return cmp(*this, o) > 0; }
    bool operator>=(const Ratio& o) const { return cmp(*this, o) >= 0; }

    // Decimal string with the given number of fraction digits, truncated
    // toward zero (exact prefix of the decimal expansion).
    std::string to_decimal(size_t frac_digits) const;

private:
    Int num_;
    Natural den_{1};

    void reduce();
};

// Exact binomial coefficient C(n, k).
Natural binomial(std::uint64_t n, std::uint64_t k);

} // namespace fracpow
