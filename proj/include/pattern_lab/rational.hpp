#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "pattern_lab/errors.hpp"

namespace pattern_lab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: gcd(num, den) = 1, den > 0.
/// Equality is structural; serialization is "p/q" with the sign on p.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(int v) : value_(v) {}                // NOLINT: implicit by design
    Rational(long long v) : value_(v) {}          // NOLINT
    Rational(const BigInt& v) : value_(v) {}      // NOLINT
    Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
        if (den == 0) throw domain_error("Rational: zero denominator");
    }

    const BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    const BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    bool is_negative() const { return value_ < 0; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    /// Exact integer value; throws if not an integer.
    BigInt to_integer() const {
        if (!is_integer()) throw domain_error("Rational: not an integer: " + to_string());
        return numerator();
    }

    std::string to_string() const {
        return numerator().str() + "/" + denominator().str();
    }
    /// "p" when integral, "p/q" otherwise.
    std::string to_short_string() const {
        return is_integer() ? numerator().str() : to_string();
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.value_ + b.value_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.value_ - b.value_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.value_ * b.value_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw domain_error("Rational: division by zero");
        return Rational(a.value_ / b.value_);
    }
    Rational operator-() const { return Rational(-value_); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

private:
    using Backend = boost::multiprecision::cpp_rational;
    explicit Rational(Backend v) : value_(std::move(v)) {}
    Backend value_;
};

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Ordinary binomial coefficient on integers; 0 when k < 0 or k > n (n >= 0).
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

}  // namespace pattern_lab
