#pragma once

#include <string>

#include "arrkit/rational.hpp"

namespace arrkit {

/// Element of Q or of a quadratic extension Q(sqrt(d)), stored as a + b*sqrt(d).
/// radicand() == 0 marks a plain rational; canonical form demands b == 0 exactly
/// then. Rationals embed into any Q(sqrt(d)), so mixing a rational with a
/// quadratic operand is fine; two distinct radicands are a field mismatch.
class Scalar {
public:
    Scalar() : a_(), b_(), d_(0) {}
    Scalar(long long n) : a_(n), b_(), d_(0) {}
    Scalar(Rational r) : a_(std::move(r)), b_(), d_(0) {}
    Scalar(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        if (b_.is_zero()) {
            d_ = 0;
        } else if (d_ == 0 || d_ == 1) {
            throw ValidationError("radicand must be a square-free integer other than 0 and 1");
        }
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    int radicand() const { return d_; }
    bool is_rational() const { return d_ == 0; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return d_ == 0 && a_.is_one(); }

    friend Scalar operator+(const Scalar& x, const Scalar& y);
    friend Scalar operator-(const Scalar& x, const Scalar& y);
    friend Scalar operator*(const Scalar& x, const Scalar& y);
    friend Scalar operator/(const Scalar& x, const Scalar& y);
    Scalar operator-() const { return Scalar(-a_, -b_, d_); }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    /// Multiplicative inverse via the conjugate over the norm.
    Scalar inverse() const;
    Scalar conjugate() const { return Scalar(a_, -b_, d_); }
    /// Field norm a^2 - d*b^2 (a rational).
    Rational norm() const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    /// Coefficient grammar: "p/q" (or "p") for rationals, "p/q:r/s" for
    /// p/q + (r/s)*sqrt(d). Round-trips bit-exactly.
    std::string str() const;
    static Scalar parse(const std::string& text, int radicand);

    std::size_t hash() const noexcept {
        return a_.hash() * 31 + b_.hash() * 7 + std::size_t(d_);
    }

    /// Deterministic total order on representations (not a field order).
    friend bool operator<(const Scalar& x, const Scalar& y) {
        if (x.d_ != y.d_) return x.d_ < y.d_;
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

private:
    static int joint_radicand(const Scalar& x, const Scalar& y);

    Rational a_;
    Rational b_;
    int d_;
};

}  // namespace arrkit
