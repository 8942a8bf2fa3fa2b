// rational.cpp - Int and Ratio arithmetic.

#include "fracpow/rational.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace fracpow {

Int::Int(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    const std::uint64_t mag = v < 0 ? ~(std::uint64_t)v + 1 : (std::uint64_t)v;
    mag_ = Natural(mag);
}

Int::Int(Natural n, int sign) {
    if (n.is_zero() || sign == 0) return;
    assert(sign == 1 || sign == -1);
    sign_ = sign;
    mag_ = std::move(n);
}

Int Int::from_decimal(std::string_view s) {
    int sg = 1;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        if (s[0] == '-') sg = -1;
        s.remove_prefix(1);
    }
    return Int(Natural::from_decimal(s), sg);
}

Int Int::operator-() const {
    Int r = *this;
    r.sign_ = -r.sign_;
    return r;
}

Int Int::operator+(const Int& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    if (sign_ == o.sign_) return Int(mag_ + o.mag_, sign_);
    const int c = Natural::cmp(mag_, o.mag_);
    if (c == 0) return Int();
    if (c > 0) return Int(mag_ - o.mag_, sign_);
    return Int(o.mag_ - mag_, o.sign_);
}

Int Int::operator-(const Int& o) const { return *this + (-o); }

Int Int::operator*(const Int& o) const {
    if (sign_ == 0 || o.sign_ == 0) return Int();
    return Int(mag_ * o.mag_, sign_ * o.sign_);
}

Int Int::divexact(const Int& o) const {
    if (o.sign_ == 0) throw std::domain_error("division by zero");
    if (sign_ == 0) return Int();
    auto [q, r] = Natural::divmod(mag_, o.mag_);
    assert(r.is_zero());
    (void)r;
    return Int(std::move(q), sign_ * o.sign_);
}

std::int64_t Int::mod_u64(std::uint64_t d) const {
    const std::uint64_t m = mag_.mod_u64(d);
    if (sign_ >= 0 || m == 0) return (std::int64_t)m;
    return (std::int64_t)(d - m);
}

int Int::cmp(const Int& a, const Int& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    return a.sign_ * Natural::cmp(a.mag_, b.mag_);
}

std::string Int::to_decimal() const {
    if (sign_ < 0) return "-" + mag_.to_decimal();
    return mag_.to_decimal();
}

void Ratio::reduce() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
        den_ = Natural(1);
        return;
    }
    Natural g = Natural::gcd(num_.mag(), den_);
    if (g != Natural(1)) {
        num_ = Int(Natural::divmod(num_.mag(), g).first, num_.sign());
        den_ = Natural::divmod(den_, g).first;
    }
}

Ratio::Ratio(Int num, Natural den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

Ratio::Ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    int sg = den < 0 ? -1 : 1;
    num_ = Int(num) * Int(sg);
    den_ = Natural(den < 0 ? ~(std::uint64_t)den + 1 : (std::uint64_t)den);
    reduce();
}

Ratio Ratio::operator-() const {
    Ratio r = *this;
    r.num_ = -r.num_;
    return r;
}

Ratio Ratio::operator+(const Ratio& o) const {
    Int n = num_ * Int(o.den_) + o.num_ * Int(den_);
    return Ratio(std::move(n), den_ * o.den_);
}

Ratio Ratio::operator-(const Ratio& o) const { return *this + (-o); }

Ratio Ratio::operator*(const Ratio& o) const {
    return Ratio(num_ * o.num_, den_ * o.den_);
}

Ratio Ratio::operator/(const Ratio& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Int n = num_ * Int(o.den_);
    Natural d = den_ * o.num_.mag();
    if (o.num_.sign() < 0) n = -n;
    return Ratio(std::move(n), std::move(d));
}

Ratio Ratio::abs() const {
    Ratio r = *this;
    if (r.num_.sign() < 0) r.num_ = -r.num_;
    return r;
}

Ratio Ratio::reciprocal() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Int n(den_, num_.sign());
    return Ratio(std::move(n), num_.mag());
}

Int Ratio::floor() const {
    auto [q, r] = Natural::divmod(num_.mag(), den_);
    if (num_.sign() >= 0) return Int(std::move(q), 1);
    if (r.is_zero()) return Int(std::move(q), -1);
    return Int(q + Natural(1), -1);
}

Int Ratio::round_nearest() const {
    // floor((2*num + den) / (2*den)) handles both signs; exact halves round up
    // (away from zero for positives), which callers never rely on.
    Ratio shifted = *this + Ratio(1, 2);
    return shifted.floor();
}

Ratio Ratio::frac() const {
    Ratio f = *this - Ratio::from_int(floor());
    assert(f.sign() >= 0 && f < Ratio(1));
    return f;
}

int Ratio::cmp(const Ratio& a, const Ratio& b) {
    return Int::cmp(a.num_ * Int(b.den_), b.num_ * Int(a.den_));
}

std::string Ratio::to_decimal(size_t frac_digits) const {
    auto [q, r] = Natural::divmod(num_.mag(), den_);
    std::string out = num_.sign() < 0 ? "-" : "";
    out += q.to_decimal();
    if (frac_digits == 0) return out;
    out += '.';
    Natural rem = std::move(r);
    std::string frac;
    frac.reserve(frac_digits);
    for (size_t i = 0; i < frac_digits; ++i) {
        rem = rem.mul_u64(10);
        auto [d, r2] = Natural::divmod(rem, den_);
        frac += (char)('0' + (int)d.to_u64());
        rem = std::move(r2);
    }
    return out + frac;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return Natural();
    if (k > n - k) k = n - k;
    Natural r(1);
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r.mul_u64(n - k + i);
        auto [q, rem] = r.divrem_u64(i);
        assert(rem == 0);
        (void)rem;
        r = std::move(q);
    }
    return r;
}

} // namespace fracpow
