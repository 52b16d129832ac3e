#pragma once

// Exact rational arithmetic for the combinatorial kernels (binomial
// coefficients, central binomials, double factorials).  Values stay rational
// until the final conversion to double, so alternating-sign coefficient
// sums are assembled without cancellation.
//
// int64 numerator/denominator with __int128 intermediates is ample here:
// the largest products are of order C(16,8)^2 * 2^16 < 2^62.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace walkextrap {

class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    std::string str() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static Rational make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr i128 lim = INT64_MAX;
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error("Rational: value exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() { *this = make(num_, den_); }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// C(n, k) as an exact rational (integer-valued).
inline Rational binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    k = std::min(k, n - k);
    Rational r(1);
    for (int i = 1; i <= k; ++i) r *= Rational(n - k + i, i);
    return r;
}

// (m)!! for odd m >= -1; by convention (-1)!! = 1.
inline Rational double_factorial_odd(int m) {
    if (m < -1 || m % 2 == 0) throw std::domain_error("double_factorial_odd: even or invalid m");
    Rational r(1);
    for (int i = m; i >= 1; i -= 2) r *= Rational(i);
    return r;
}

// 2^-l as an exact rational, l >= 0.
inline Rational half_power(int l) {
    if (l < 0) throw std::domain_error("half_power: negative exponent");
    return Rational(1, std::int64_t(1) << l);
}

} // namespace walkextrap
