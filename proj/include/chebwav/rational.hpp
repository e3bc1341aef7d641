#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chebwav {

// Exact rational with 64-bit numerator/denominator, always stored reduced
// with a positive denominator. Intermediate products use 128-bit arithmetic;
// results that cannot be reduced back into 64 bits throw std::overflow_error.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num, den);
        num_ = g ? num / g : 0;
        den_ = g ? den / g : 1;
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    // "p/q" for proper fractions, plain "p" for integers.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    friend Rational operator-(const Rational& a) {
        return from_reduced(-a.num_, a.den_);
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        const std::int64_t g = std::gcd(a.den_, b.den_);
        const __int128 bd = b.den_ / g;
        const __int128 n = static_cast<__int128>(a.num_) * bd +
                           static_cast<__int128>(b.num_) * (a.den_ / g);
        const __int128 d = static_cast<__int128>(a.den_) * bd;
        return reduce(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        const std::int64_t g1 = std::gcd(a.num_, b.den_);
        const std::int64_t g2 = std::gcd(b.num_, a.den_);
        const __int128 n = static_cast<__int128>(a.num_ / g1) * (b.num_ / g2);
        const __int128 d = static_cast<__int128>(a.den_ / g2) * (b.den_ / g1);
        return reduce(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return a * from_reduced(b.num_ < 0 ? -b.den_ : b.den_,
                                b.num_ < 0 ? -b.num_ : b.num_);
    }

    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ <
               static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational from_reduced(std::int64_t n, std::int64_t d) {
        Rational r;
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    static Rational reduce(__int128 n, __int128 d) {
        if (d < 0) { n = -n; d = -d; }
        const __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("Rational: 64-bit overflow");
        return from_reduced(static_cast<std::int64_t>(n),
                            static_cast<std::int64_t>(d));
    }
    static __int128 gcd128(__int128 a, __int128 b) {
        while (b) { const __int128 t = a % b; a = b; b = t; }
        return a ? a : 1;
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace chebwav
