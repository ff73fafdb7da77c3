#pragma once

// Exact rational number on BigInt. Always normalized: gcd(num, den) = 1,
// den > 0, zero is 0/1.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hratp/bigint.hpp"

namespace hratp {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Parses "p", "p/q", or a plain decimal like "-0.125".
    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash != std::string_view::npos)
            return Rational(BigInt::from_string(s.substr(0, slash)),
                            BigInt::from_string(s.substr(slash + 1)));
        auto dot = s.find('.');
        if (dot == std::string_view::npos) return Rational(BigInt::from_string(s));
        std::string digits(s.substr(0, dot));
        std::string_view frac = s.substr(dot + 1);
        digits.append(frac);
        BigInt den = BigInt::pow(BigInt(10), frac.size());
        return Rational(BigInt::from_string(digits), den);
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    Rational abs() const { return num_.is_negative() ? -*this : *this; }

    static Rational pow(const Rational& base, long long e) {
        if (e < 0) return Rational(1) / pow(base, -e);
        Rational r(1), b = base;
        unsigned long long u = static_cast<unsigned long long>(e);
        while (u) {
            if (u & 1u) r *= b;
            b *= b;
            u >>= 1;
        }
        return r;
    }

    // Nearest double; scales by bit lengths so huge numerators/denominators
    // do not overflow prematurely.
    double to_double() const {
        if (num_.is_zero()) return 0.0;
        std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(num_.bit_length());
        std::ptrdiff_t db = static_cast<std::ptrdiff_t>(den_.bit_length());
        // Shift so the integer quotient carries ~80 significant bits.
        std::ptrdiff_t shift = 80 - (nb - db);
        BigInt n = num_.abs(), d = den_;
        if (shift > 0)
            n = n << static_cast<std::size_t>(shift);
        else if (shift < 0)
            d = d << static_cast<std::size_t>(-shift);
        BigInt q = n / d;
        double r = std::ldexp(q.to_double(), static_cast<int>(-shift));
        return num_.is_negative() ? -r : r;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& v) {
        return os << v.to_string();
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = BigInt::div_exact(num_, g);
            den_ = BigInt::div_exact(den_, g);
        }
    }
};

}  // namespace hratp
