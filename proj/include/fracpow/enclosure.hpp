#pragma once
// enclosure.hpp - directed-rounding interval arithmetic over 192-bit MPFR
// floats. Every operation rounds the lower endpoint down and the upper
// endpoint up, so a true real tracked through a chain of operations always
// stays inside the interval; inequality checks against such intervals are
// then one-sided certificates.

#include "fracpow/rational.hpp"

#include <mpfr.h>

#include <cstdint>
#include <string>

namespace fracpow {

class Enclosure {
public:
    static constexpr mpfr_prec_t kPrecision = 192;

    Enclosure();                                // [0, 0]
    Enclosure(const Enclosure& o);
    Enclosure(Enclosure&& o) noexcept;
    Enclosure& operator=(const Enclosure& o);
    Enclosure& operator=(Enclosure&& o) noexcept;
    ~Enclosure();

    explicit Enclosure(std::uint64_t v);
    explicit Enclosure(const Natural& v);
    explicit Enclosure(const Ratio& v);

    // Encloses the exact value of a decimal literal.
    static Enclosure parse(const std::string& decimal);
    static Enclosure pi();
    static Enclosure log_u64(std::uint64_t v);
    // Smallest interval containing both arguments.
    static Enclosure hull(const Enclosure& x, const Enclosure& y);

    Enclosure operator+(const Enclosure& o) const;
    Enclosure operator-(const Enclosure& o) const;
    Enclosure operator*(const Enclosure& o) const;
    // Divisor interval must not straddle zero.
    Enclosure operator/(const Enclosure& o) const;
    Enclosure operator-() const;
    Enclosure abs() const;
    // Lower endpoint must be strictly positive.
    Enclosure log() const;
    Enclosure exp() const;

    // One-sided certificates: true only when every point of *this relates
    // to every point of o as stated.
    bool certainly_le(const Enclosure& o) const;
    bool certainly_lt(const Enclosure& o) const;
    bool certainly_ge(const Enclosure& o) const { return o.certainly_le(*this); }
    bool certainly_gt(const Enclosure& o) const { return o.certainly_lt(*this); }

    // Conservative containment: true implies the rational lies inside.
    bool contains(const Ratio& r) const;

    double approx() const;     // midpoint, for display only
    double width() const;      // upper bound on hi - lo
    double lower_double() const;  // rounded down
    double upper_double() const;  // rounded up
    std::string to_string(int digits = 24) const;

private:
    mpfr_t lo_, hi_;

    void init();
};

} // namespace fracpow
