#pragma once

// Scalar abstraction so every algorithm can run on plain doubles, exact
// rationals (oracle / property tests) or extended-precision floats.

#include <cmath>
#include <cstdio>
#include <string>

#include "hratp/bigfloat.hpp"
#include "hratp/rational.hpp"

namespace hratp {

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static constexpr bool is_exact = false;
    static double from_int(long long v) { return static_cast<double>(v); }
    static double from_double(double v) { return v; }
    static double abs(double x) { return std::fabs(x); }
    static double sqrt(double x) { return std::sqrt(x); }
    static bool is_finite(double x) { return std::isfinite(x); }
    static std::string to_string(double x) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
    static double from_string(const std::string& s) { return std::stod(s); }
};

template <>
struct scalar_traits<Rational> {
    static constexpr bool is_exact = true;
    static Rational from_int(long long v) { return Rational(v); }
    static Rational abs(const Rational& x) { return x.abs(); }
    static std::string to_string(const Rational& x) { return x.to_string(); }
    static Rational from_string(const std::string& s) { return Rational::from_string(s); }
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool is_exact = false;
    static BigFloat from_int(long long v) { return BigFloat::from_int(v); }
    static BigFloat from_double(double v) { return BigFloat(v); }
    static BigFloat abs(const BigFloat& x) { return x.abs(); }
    static BigFloat sqrt(const BigFloat& x) { return BigFloat::sqrt(x); }
    static bool is_finite(const BigFloat&) { return true; }
    static std::string to_string(const BigFloat& x) { return x.to_scientific(40); }
};

template <class T>
T sc_int(long long v) {
    return scalar_traits<T>::from_int(v);
}

template <class T>
T sc_abs(const T& x) {
    return scalar_traits<T>::abs(x);
}

template <class T>
bool sc_is_zero(const T& x) {
    return x == scalar_traits<T>::from_int(0);
}

template <class T>
T sc_pow(T base, unsigned long long e) {
    T r = sc_int<T>(1);
    while (e) {
        if (e & 1ull) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace hratp
