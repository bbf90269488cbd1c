#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace medianlab {

namespace detail {

inline std::int64_t narrow128(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
        throw std::overflow_error("rational arithmetic overflow");
    }
    return static_cast<std::int64_t>(v);
}

inline __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace detail

/// Exact rational number with a normalized int64 numerator/denominator.
/// Intermediate products run through 128 bits so deeply nested interval
/// subdivisions fail loudly instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational with zero denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return combined(a, b, +1);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return combined(a, b, -1);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return from128(n, d);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::invalid_argument("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        Rational r;
        r.num_ = detail::narrow128(n);
        r.den_ = detail::narrow128(d);
        return r;
    }

    static Rational combined(const Rational& a, const Rational& b, int sign) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                     static_cast<__int128>(sign) * static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }

    void normalize() {
        Rational r = from128(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

/// Point between a and b at parameter num/den (0 gives a, 1 gives b).
inline Rational lerp(const Rational& a, const Rational& b, std::int64_t num, std::int64_t den) {
    return a + (b - a) * Rational(num, den);
}

}  // namespace medianlab
