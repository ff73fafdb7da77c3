#pragma once

// Software binary floating point with configurable mantissa precision.
// Value = sign * mant * 2^exp with mant a positive BigInt kept at most
// `prec` bits wide; every operation rounds to the wider operand precision.
// Used as the extended-precision backend of the reference oracle, so the
// emphasis is on correctness over speed.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hratp/bigint.hpp"
#include "hratp/rational.hpp"

namespace hratp {

class BigFloat {
public:
    static constexpr std::uint32_t kDefaultPrec = 256;

    BigFloat() : prec_(kDefaultPrec) {}

    explicit BigFloat(double v, std::uint32_t prec = kDefaultPrec) : prec_(prec) {
        if (v == 0.0) return;
        if (!std::isfinite(v)) throw std::domain_error("BigFloat: non-finite double");
        sign_ = v < 0 ? -1 : 1;
        int e = 0;
        double m = std::frexp(std::fabs(v), &e);  // m in [0.5, 1)
        std::uint64_t bits = static_cast<std::uint64_t>(std::ldexp(m, 62));
        mant_ = BigInt(static_cast<unsigned long long>(bits));
        exp_ = static_cast<std::int64_t>(e) - 62;
        normalize();
    }

    BigFloat(const BigInt& v, std::uint32_t prec = kDefaultPrec) : prec_(prec) {
        if (v.is_zero()) return;
        sign_ = v.is_negative() ? -1 : 1;
        mant_ = v.abs();
        exp_ = 0;
        normalize();
    }

    static BigFloat from_int(long long v, std::uint32_t prec = kDefaultPrec) {
        return BigFloat(BigInt(v), prec);
    }

    // Exact power of two, e.g. the working epsilon 2^{-(prec-k)}.
    static BigFloat pow2(std::int64_t e, std::uint32_t prec = kDefaultPrec) {
        BigFloat f;
        f.prec_ = prec;
        f.sign_ = 1;
        f.mant_ = BigInt(1);
        f.exp_ = e;
        return f;
    }

    static BigFloat from_rational(const Rational& r, std::uint32_t prec = kDefaultPrec) {
        if (r.is_zero()) return BigFloat(0.0, prec);
        BigInt n = r.num().abs();
        const BigInt& d = r.den();
        std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(prec) + 8 +
                               static_cast<std::ptrdiff_t>(d.bit_length()) -
                               static_cast<std::ptrdiff_t>(n.bit_length());
        if (shift < 0) shift = 0;
        BigInt q = (n << static_cast<std::size_t>(shift)) / d;
        BigFloat f;
        f.prec_ = prec;
        f.sign_ = r.sign();
        f.mant_ = q;
        f.exp_ = -static_cast<std::int64_t>(shift);
        f.normalize();
        return f;
    }

    static std::uint32_t bits_for_digits(unsigned digits) {
        // log2(10) ~ 3.322; add guard bits.
        return static_cast<std::uint32_t>(digits * 3.3220 + 40.0);
    }

    std::uint32_t precision() const { return prec_; }
    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    BigFloat operator-() const {
        BigFloat r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigFloat abs() const {
        BigFloat r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        std::uint32_t prec = std::max(a.prec_, b.prec_);
        if (a.sign_ == 0) return with_prec(b, prec);
        if (b.sign_ == 0) return with_prec(a, prec);
        const BigFloat *hi = &a, *lo = &b;
        if (top_exp(b) > top_exp(a)) std::swap(hi, lo);
        // The smaller operand is invisible beyond the precision window.
        if (top_exp(*hi) - top_exp(*lo) > static_cast<std::int64_t>(prec) + 4)
            return with_prec(*hi, prec);
        std::int64_t e = std::min(a.exp_, b.exp_);
        BigInt ma = a.mant_ << static_cast<std::size_t>(a.exp_ - e);
        BigInt mb = b.mant_ << static_cast<std::size_t>(b.exp_ - e);
        if (a.sign_ < 0) ma = -ma;
        if (b.sign_ < 0) mb = -mb;
        BigInt s = ma + mb;
        BigFloat r;
        r.prec_ = prec;
        if (!s.is_zero()) {
            r.sign_ = s.is_negative() ? -1 : 1;
            r.mant_ = s.abs();
            r.exp_ = e;
            r.normalize();
        }
        return r;
    }

    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return a + (-b); }

    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        r.prec_ = std::max(a.prec_, b.prec_);
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.sign_ = a.sign_ * b.sign_;
        r.mant_ = a.mant_ * b.mant_;
        r.exp_ = a.exp_ + b.exp_;
        r.normalize();
        return r;
    }

    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.sign_ == 0) throw std::domain_error("BigFloat: division by zero");
        BigFloat r;
        r.prec_ = std::max(a.prec_, b.prec_);
        if (a.sign_ == 0) return r;
        std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(r.prec_) + 8 +
                               static_cast<std::ptrdiff_t>(b.mant_.bit_length()) -
                               static_cast<std::ptrdiff_t>(a.mant_.bit_length());
        if (shift < 0) shift = 0;
        r.sign_ = a.sign_ * b.sign_;
        r.mant_ = (a.mant_ << static_cast<std::size_t>(shift)) / b.mant_;
        r.exp_ = a.exp_ - b.exp_ - static_cast<std::int64_t>(shift);
        r.normalize();
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    static BigFloat sqrt(const BigFloat& a) {
        if (a.sign_ < 0) throw std::domain_error("BigFloat: sqrt of negative");
        if (a.sign_ == 0) return a;
        BigFloat r;
        r.prec_ = a.prec_;
        BigInt m = a.mant_;
        std::int64_t e = a.exp_;
        // Scale so the mantissa holds ~2*prec bits and the exponent is even.
        std::ptrdiff_t want = 2 * static_cast<std::ptrdiff_t>(a.prec_) + 16;
        std::ptrdiff_t shift = want - static_cast<std::ptrdiff_t>(m.bit_length());
        if (shift < 0) shift = 0;
        if ((e - shift) & 1) ++shift;
        m = m << static_cast<std::size_t>(shift);
        e -= static_cast<std::int64_t>(shift);
        r.sign_ = 1;
        r.mant_ = BigInt::isqrt(m);
        r.exp_ = e / 2;
        r.normalize();
        return r;
    }

    // Three-way compare by value.
    static int cmp(const BigFloat& a, const BigFloat& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        if (a.sign_ == 0) return 0;
        BigFloat d = a - b;
        return d.sign_;
    }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) != 0; }

    double to_double() const {
        if (sign_ == 0) return 0.0;
        std::int64_t te = top_exp(*this);
        if (te > 1030) return sign_ < 0 ? -HUGE_VAL : HUGE_VAL;
        if (te < -1070) return sign_ < 0 ? -0.0 : 0.0;
        // Collapse to <= 64 mantissa bits first so no intermediate overflows.
        std::size_t bits = mant_.bit_length();
        double m;
        std::int64_t e = exp_;
        if (bits <= 64) {
            m = mant_.to_double();
        } else {
            m = (mant_ >> (bits - 64)).to_double();
            e += static_cast<std::int64_t>(bits - 64);
        }
        double r = std::ldexp(m, static_cast<int>(e));
        return sign_ < 0 ? -r : r;
    }

    // Decimal scientific representation with `digits` significant digits.
    std::string to_scientific(unsigned digits = 17) const {
        if (digits == 0) digits = 1;
        if (sign_ == 0) return "0e+00";
        // Estimated decimal exponent, then correct by inspecting the digits.
        double approx = (static_cast<double>(mant_.bit_length()) +
                         static_cast<double>(exp_)) * 0.30102999566398119521;
        long long e10 = static_cast<long long>(std::floor(approx));
        for (int attempt = 0; attempt < 4; ++attempt) {
            long long scale = static_cast<long long>(digits) - 1 - e10;
            BigInt n = mant_;
            std::int64_t e2 = exp_;
            if (scale >= 0)
                n = n * BigInt::pow(BigInt(10), static_cast<unsigned long long>(scale));
            else {
                // Dividing by 10^-scale: pre-shift so the quotient keeps
                // enough bits for the requested digits.
                BigInt d = BigInt::pow(BigInt(10), static_cast<unsigned long long>(-scale));
                std::ptrdiff_t extra = static_cast<std::ptrdiff_t>(d.bit_length()) +
                                       4 * static_cast<std::ptrdiff_t>(digits) + 16 -
                                       static_cast<std::ptrdiff_t>(n.bit_length());
                if (extra < 0) extra = 0;
                n = (n << static_cast<std::size_t>(extra)) / d;
                e2 -= static_cast<std::int64_t>(extra);
            }
            // Round n * 2^e2 to integer.
            BigInt digits_int;
            if (e2 >= 0)
                digits_int = n << static_cast<std::size_t>(e2);
            else {
                BigInt half = BigInt(1) << static_cast<std::size_t>(-e2 - 1);
                digits_int = (n + half) >> static_cast<std::size_t>(-e2);
            }
            std::string str = digits_int.to_string();
            if (str.size() == digits) {
                std::string out = sign_ < 0 ? "-" : "";
                out += str.substr(0, 1);
                if (digits > 1) {
                    out += ".";
                    out += str.substr(1);
                }
                char buf[32];
                std::snprintf(buf, sizeof buf, "e%+03lld", e10);
                out += buf;
                return out;
            }
            e10 += static_cast<long long>(str.size()) - static_cast<long long>(digits);
        }
        throw std::logic_error("BigFloat: to_scientific failed to settle");
    }

    friend std::ostream& operator<<(std::ostream& os, const BigFloat& v) {
        return os << v.to_scientific();
    }

private:
    int sign_ = 0;
    BigInt mant_;          // positive magnitude
    std::int64_t exp_ = 0; // binary exponent
    std::uint32_t prec_;

    // Exponent of the leading bit, i.e. floor(log2|x|) + 1.
    static std::int64_t top_exp(const BigFloat& x) {
        return x.exp_ + static_cast<std::int64_t>(x.mant_.bit_length());
    }

    static BigFloat with_prec(const BigFloat& x, std::uint32_t prec) {
        BigFloat r = x;
        r.prec_ = std::max(r.prec_, prec);
        return r;
    }

    void normalize() {
        std::size_t bits = mant_.bit_length();
        if (bits == 0) {
            sign_ = 0;
            exp_ = 0;
            return;
        }
        if (bits > prec_) {
            std::size_t drop = bits - prec_;
            BigInt half = BigInt(1) << (drop - 1);
            mant_ = (mant_ + half) >> drop;
            exp_ += static_cast<std::int64_t>(drop);
            // Rounding may have produced a carry into a new bit; that is fine,
            // the mantissa is then prec_+1 bits with a zero low bit.
        }
    }
};

}  // namespace hratp
