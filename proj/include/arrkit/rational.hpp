#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <string>

#include "arrkit/errors.hpp"

namespace arrkit {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Values that fit stay on an int64 fast path;
/// anything larger is promoted transparently to arbitrary precision.
/// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() noexcept : num_(0), den_(1), big_(nullptr) {}
    Rational(long long n) noexcept : num_(n), den_(1), big_(nullptr) {}
    Rational(long long n, long long d) : big_(nullptr) {
        if (d == 0) throw DivisionByZeroError("rational with zero denominator");
        num_ = n;
        den_ = d;
        normalize_small();
    }
    Rational(const BigInt& n, const BigInt& d);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_), big_(nullptr) {
        if (o.big_) big_ = new Big(*o.big_);
    }
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) { o.big_ = nullptr; }
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            delete big_;
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? new Big(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) {
            delete big_;
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_;
            o.big_ = nullptr;
        }
        return *this;
    }
    ~Rational() { delete big_; }

    bool is_zero() const noexcept { return big_ ? big_->num.is_zero() : num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_negative() const noexcept { return big_ ? big_->num < 0 : num_ < 0; }
    bool is_integer() const noexcept { return big_ ? big_->den == 1 : den_ == 1; }

    BigInt numerator() const { return big_ ? big_->num : BigInt(num_); }
    BigInt denominator() const { return big_ ? big_->den : BigInt(den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    Rational inverse() const;

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        return a.numerator() == b.numerator() && a.denominator() == b.denominator();
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    // Order (value comparison), used by deterministic tie-breaks and tests.
    friend bool operator<(const Rational& a, const Rational& b);

    std::string str() const;
    /// Parses "p" or "p/q". Throws ValidationError on malformed input.
    static Rational parse(const std::string& s);

    std::size_t hash() const noexcept;

private:
    struct Big {
        BigInt num;
        BigInt den;
    };

    void normalize_small() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    static Rational from_i128(__int128 n, __int128 d);
    static Rational from_big(BigInt n, BigInt d);
    void demote_if_possible();

    long long num_;
    long long den_;
    Big* big_;   // non-null means the promoted representation is authoritative
};

}  // namespace arrkit
