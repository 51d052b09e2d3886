#include "arrkit/scalar.hpp"

namespace arrkit {

int Scalar::joint_radicand(const Scalar& x, const Scalar& y) {
    if (x.d_ == y.d_) return x.d_;
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0) return x.d_;
    throw FieldMismatchError("cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                             std::to_string(y.d_) + ")");
}

Scalar operator+(const Scalar& x, const Scalar& y) {
    int d = Scalar::joint_radicand(x, y);
    return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
    int d = Scalar::joint_radicand(x, y);
    return Scalar(x.a_ - y.a_, x.b_ - y.b_, d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
    int d = Scalar::joint_radicand(x, y);
    if (x.d_ == 0 && y.d_ == 0) return Scalar(x.a_ * y.a_);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + b1 a2) s
    Rational dd(d);
    return Scalar(x.a_ * y.a_ + dd * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

Rational Scalar::norm() const {
    if (d_ == 0) return a_ * a_;
    return a_ * a_ - Rational(d_) * b_ * b_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero scalar");
    if (d_ == 0) return Scalar(a_.inverse());
    Rational n = norm();   // nonzero: d square-free means sqrt(d) is irrational
    return Scalar(a_ / n, -b_ / n, d_);
}

std::string Scalar::str() const {
    if (d_ == 0) return a_.str();
    return a_.str() + ":" + b_.str();
}

Scalar Scalar::parse(const std::string& text, int radicand) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return Scalar(Rational::parse(text));
    if (radicand == 0 || radicand == 1)
        throw ValidationError("quadratic coefficient '" + text + "' in a rational-field context");
    Rational a = Rational::parse(text.substr(0, colon));
    Rational b = Rational::parse(text.substr(colon + 1));
    return Scalar(std::move(a), std::move(b), radicand);
}

}  // namespace arrkit
