#include "arrkit/rational.hpp"

#include <cstdlib>
#include <limits>

namespace arrkit {

namespace {

constexpr long long kMax = std::numeric_limits<long long>::max() / 2;

bool fits(__int128 v) { return v >= -__int128(kMax) && v <= __int128(kMax); }

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigInt big_from_i128(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
    BigInt r = (std::uint64_t)(u >> 64);
    r <<= 64;
    r += (std::uint64_t)u;
    return neg ? BigInt(-r) : r;
}

}  // namespace

Rational::Rational(const BigInt& n, const BigInt& d) : num_(0), den_(1), big_(nullptr) {
    if (d.is_zero()) throw DivisionByZeroError("rational with zero denominator");
    *this = from_big(n, d);
}

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    Rational r;
    if (fits(n) && fits(d)) {
        r.num_ = (long long)n;
        r.den_ = (long long)d;
    } else {
        r.big_ = new Big{big_from_i128(n), big_from_i128(d)};
    }
    return r;
}

Rational Rational::from_big(BigInt n, BigInt d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Rational r;
    if (n.is_zero()) return r;
    BigInt g = boost::multiprecision::gcd(n, d);
    n /= g;
    d /= g;
    if (n >= -kMax && n <= kMax && d <= kMax) {
        r.num_ = (long long)n;
        r.den_ = (long long)d;
    } else {
        r.big_ = new Big{std::move(n), std::move(d)};
    }
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational::from_big(a.numerator() * b.denominator() + b.numerator() * a.denominator(),
                              a.denominator() * b.denominator());
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return Rational::from_i128(n, d);
    }
    return Rational::from_big(a.numerator() * b.denominator() - b.numerator() * a.denominator(),
                              a.denominator() * b.denominator());
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        // cross-reduce to keep intermediates small
        long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
        long long g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
        __int128 n = (__int128)(a.num_ / g1) * (b.num_ / g2);
        __int128 d = (__int128)(a.den_ / g2) * (b.den_ / g1);
        return Rational::from_i128(n, d);
    }
    return Rational::from_big(a.numerator() * b.numerator(), a.denominator() * b.denominator());
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by zero rational");
    if (!a.big_ && !b.big_) {
        long long g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.num_ < 0 ? -b.num_ : b.num_);
        long long g2 = std::gcd(b.den_, a.den_);
        __int128 n = (__int128)(a.num_ / g1) * (b.den_ / g2);
        __int128 d = (__int128)(a.den_ / g2) * (b.num_ / g1);
        return Rational::from_i128(n, d);
    }
    return Rational::from_big(a.numerator() * b.denominator(), a.denominator() * b.numerator());
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational r;
    r.big_ = new Big{-big_->num, big_->den};
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (!big_) {
        Rational r;
        r.num_ = num_ < 0 ? -den_ : den_;
        r.den_ = num_ < 0 ? -num_ : num_;
        return r;
    }
    return from_big(big_->den, big_->num);
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
    return a.numerator() * b.denominator() < b.numerator() * a.denominator();
}

std::string Rational::str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw ValidationError("empty rational literal");
    auto slash = s.find('/');
    auto check_int = [&](const std::string& part) {
        if (part.empty()) throw ValidationError("malformed rational literal '" + s + "'");
        std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw ValidationError("malformed rational literal '" + s + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ValidationError("malformed rational literal '" + s + "'");
    };
    if (slash == std::string::npos) {
        check_int(s);
        return from_big(BigInt(s), 1);
    }
    std::string ns = s.substr(0, slash);
    std::string ds = s.substr(slash + 1);
    check_int(ns);
    check_int(ds);
    BigInt d(ds);
    if (d.is_zero()) throw ValidationError("zero denominator in '" + s + "'");
    return from_big(BigInt(ns), d);
}

std::size_t Rational::hash() const noexcept {
    if (!big_) return std::size_t(num_) * 1000003u ^ std::size_t(den_);
    // rare path; a coarse hash of the low limbs is enough
    return std::size_t((std::uint64_t)(big_->num & 0xffffffffffffffffULL)) * 1000003u ^
           std::size_t((std::uint64_t)(big_->den & 0xffffffffffffffffULL));
}

}  // namespace arrkit
