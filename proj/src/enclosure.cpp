#include "fracpow/enclosure.hpp"

#include "fracpow/errors.hpp"

#include <array>

namespace fracpow {

void Enclosure::init() {
    mpfr_init2(lo_, kPrecision);
    mpfr_init2(hi_, kPrecision);
}

Enclosure::Enclosure() {
    init();
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Enclosure::Enclosure(const Enclosure& o) {
    init();
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Enclosure::Enclosure(Enclosure&& o) noexcept {
    init();
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Enclosure& Enclosure::operator=(const Enclosure& o) {
    if (this != &o) {
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Enclosure& Enclosure::operator=(Enclosure&& o) noexcept {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    return *this;
}

Enclosure::~Enclosure() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Enclosure::Enclosure(std::uint64_t v) {
    init();
    mpfr_set_uj(lo_, v, MPFR_RNDD);
    mpfr_set_uj(hi_, v, MPFR_RNDU);
}

Enclosure::Enclosure(const Natural& v) : Enclosure(Ratio(Int(v), Natural(1))) {}

Enclosure::Enclosure(const Ratio& v) {
    init();
    const std::string n = v.num().to_decimal();
    const std::string d = v.den().to_decimal();
    mpfr_t dn_lo, dn_hi;
    mpfr_init2(dn_lo, kPrecision);
    mpfr_init2(dn_hi, kPrecision);
    mpfr_set_str(lo_, n.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(hi_, n.c_str(), 10, MPFR_RNDU);
    mpfr_set_str(dn_lo, d.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(dn_hi, d.c_str(), 10, MPFR_RNDU);
    // Denominator is positive, so the quotient bounds pair with reversed
    // denominator endpoints according to the numerator sign.
    if (mpfr_sgn(lo_) >= 0)
        mpfr_div(lo_, lo_, dn_hi, MPFR_RNDD);
    else
        mpfr_div(lo_, lo_, dn_lo, MPFR_RNDD);
    if (mpfr_sgn(hi_) >= 0)
        mpfr_div(hi_, hi_, dn_lo, MPFR_RNDU);
    else
        mpfr_div(hi_, hi_, dn_hi, MPFR_RNDU);
    mpfr_clear(dn_lo);
    mpfr_clear(dn_hi);
}

Enclosure Enclosure::parse(const std::string& decimal) {
    Enclosure r;
    if (mpfr_set_str(r.lo_, decimal.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, decimal.c_str(), 10, MPFR_RNDU) != 0)
        throw usage_error("not a decimal literal: " + decimal);
    return r;
}

Enclosure Enclosure::pi() {
    Enclosure r;
    mpfr_const_pi(r.lo_, MPFR_RNDD);
    mpfr_const_pi(r.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::log_u64(std::uint64_t v) { return Enclosure(v).log(); }

Enclosure Enclosure::hull(const Enclosure& x, const Enclosure& y) {
    Enclosure r(x);
    if (mpfr_cmp(y.lo_, r.lo_) < 0) mpfr_set(r.lo_, y.lo_, MPFR_RNDD);
    if (mpfr_cmp(y.hi_, r.hi_) > 0) mpfr_set(r.hi_, y.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator+(const Enclosure& o) const {
    Enclosure r;
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator-(const Enclosure& o) const {
    Enclosure r;
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::operator*(const Enclosure& o) const {
    Enclosure r;
    mpfr_t t;
    mpfr_init2(t, kPrecision);
    const std::array<std::pair<const __mpfr_struct*, const __mpfr_struct*>, 4>
        pairs{{{lo_, o.lo_}, {lo_, o.hi_}, {hi_, o.lo_}, {hi_, o.hi_}}};
    bool first = true;
    for (const auto& [x, y] : pairs) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator/(const Enclosure& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw precision_error("division by an interval that straddles zero");
    Enclosure r;
    mpfr_t t;
    mpfr_init2(t, kPrecision);
    const std::array<std::pair<const __mpfr_struct*, const __mpfr_struct*>, 4>
        pairs{{{lo_, o.lo_}, {lo_, o.hi_}, {hi_, o.lo_}, {hi_, o.hi_}}};
    bool first = true;
    for (const auto& [x, y] : pairs) {
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
        first = false;
    }
    mpfr_clear(t);
    return r;
}

Enclosure Enclosure::operator-() const {
    Enclosure r;
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::abs() const {
    if (mpfr_sgn(lo_) >= 0) return *this;
    if (mpfr_sgn(hi_) <= 0) return -*this;
    Enclosure r;
    mpfr_set_zero(r.lo_, 1);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    if (mpfr_cmp(hi_, r.hi_) > 0) mpfr_set(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::log() const {
    if (mpfr_sgn(lo_) <= 0)
        throw precision_error("logarithm of an interval not strictly positive");
    Enclosure r;
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

Enclosure Enclosure::exp() const {
    Enclosure r;
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

bool Enclosure::certainly_le(const Enclosure& o) const {
    return mpfr_cmp(hi_, o.lo_) <= 0;
}

bool Enclosure::certainly_lt(const Enclosure& o) const {
    return mpfr_cmp(hi_, o.lo_) < 0;
}

bool Enclosure::contains(const Ratio& r) const {
    const Enclosure e(r);
    return mpfr_cmp(lo_, e.lo_) <= 0 && mpfr_cmp(e.hi_, hi_) <= 0;
}

double Enclosure::approx() const {
    mpfr_t t;
    mpfr_init2(t, kPrecision);
    mpfr_add(t, lo_, hi_, MPFR_RNDN);
    mpfr_div_ui(t, t, 2, MPFR_RNDN);
    double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

double Enclosure::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }

double Enclosure::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Enclosure::width() const {
    mpfr_t t;
    mpfr_init2(t, kPrecision);
    mpfr_sub(t, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(t, MPFR_RNDU);
    mpfr_clear(t);
    return d;
}

std::string Enclosure::to_string(int digits) const {
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "[%.*Re, %.*Re]", digits, lo_, digits, hi_);
    return buf;
}

} // namespace fracpow
