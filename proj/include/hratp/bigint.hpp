#pragma once

// Arbitrary-precision signed integer with 64-bit limbs.
// Supports the operations needed by exact rational arithmetic and the
// fraction-free elimination routines: add/sub/mul, divmod, gcd, shifts,
// decimal conversion.

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hratp {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v) { assign_ll(v); }
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long long v) {
        if (v != 0) {
            sign_ = 1;
            mag_.push_back(v);
        }
    }

    static BigInt from_string(std::string_view s) {
        BigInt r;
        bool neg = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_add(10, static_cast<std::uint64_t>(c - '0'));
        }
        if (neg && r.sign_ != 0) r.sign_ = -r.sign_;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }
    int sign() const { return sign_; }

    // Number of significant bits of |x|; 0 for x = 0.
    std::size_t bit_length() const {
        if (sign_ == 0) return 0;
        std::uint64_t top = mag_.back();
        std::size_t bits = 64 * (mag_.size() - 1);
        while (top) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    bool bit(std::size_t i) const {
        std::size_t limb = i / 64, off = i % 64;
        if (limb >= mag_.size()) return false;
        return (mag_[limb] >> off) & 1u;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return r;
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }
    BigInt& operator/=(const BigInt& o) { return *this = *this / o; }
    BigInt& operator%=(const BigInt& o) { return *this = *this % o; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // dividend's sign. divmod returns {q, r} with a == q*b + r.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        if (a.sign_ == 0) return {BigInt(), BigInt()};
        int c = cmp_mag(a.mag_, b.mag_);
        if (c < 0) return {BigInt(), a};
        BigInt q, r;
        divmod_mag(a.mag_, b.mag_, q.mag_, r.mag_);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return {q, r};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    // Exact quotient; asserts the remainder vanishes (used by Bareiss steps).
    static BigInt div_exact(const BigInt& a, const BigInt& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("BigInt: inexact division");
        return q;
    }

    friend BigInt operator<<(const BigInt& a, std::size_t k) {
        if (a.sign_ == 0 || k == 0) return a;
        BigInt r;
        std::size_t limbs = k / 64, off = k % 64;
        r.mag_.assign(a.mag_.size() + limbs + 1, 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            r.mag_[i + limbs] |= a.mag_[i] << off;
            if (off) r.mag_[i + limbs + 1] |= a.mag_[i] >> (64 - off);
        }
        r.trim();
        r.sign_ = a.sign_;
        return r;
    }

    friend BigInt operator>>(const BigInt& a, std::size_t k) {
        if (a.sign_ == 0) return a;
        std::size_t limbs = k / 64, off = k % 64;
        if (limbs >= a.mag_.size()) return BigInt();
        BigInt r;
        r.mag_.assign(a.mag_.size() - limbs, 0);
        for (std::size_t i = 0; i < r.mag_.size(); ++i) {
            r.mag_[i] = a.mag_[i + limbs] >> off;
            if (off && i + limbs + 1 < a.mag_.size())
                r.mag_[i] |= a.mag_[i + limbs + 1] << (64 - off);
        }
        r.trim();
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
        return c <=> 0;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.sign_ ? 1 : 0;
        b.sign_ = b.sign_ ? 1 : 0;
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        // Binary gcd: strip common powers of two, then subtract-and-shift.
        std::size_t az = a.trailing_zero_bits(), bz = b.trailing_zero_bits();
        std::size_t shift = std::min(az, bz);
        a = a >> az;
        b = b >> bz;
        while (true) {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) break;
            if (c < 0) std::swap(a, b);
            a = a - b;
            a = a >> a.trailing_zero_bits();
        }
        return a << shift;
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r(1), b = base;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Floor of sqrt for nonnegative input (Newton on integers).
    static BigInt isqrt(const BigInt& a) {
        if (a.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
        if (a.sign_ == 0) return BigInt();
        BigInt x = BigInt(1) << ((a.bit_length() + 1) / 2);
        while (true) {
            BigInt y = (x + a / x) >> 1;
            if (y >= x) break;
            x = y;
        }
        return x;
    }

    long long to_ll() const {
        if (mag_.size() > 1) throw std::overflow_error("BigInt: to_ll overflow");
        if (mag_.empty()) return 0;
        if (mag_[0] > static_cast<std::uint64_t>(std::numeric_limits<long long>::max()))
            throw std::overflow_error("BigInt: to_ll overflow");
        return sign_ * static_cast<long long>(mag_[0]);
    }

    // Round-to-nearest conversion; overflows to +-inf.
    double to_double() const {
        if (sign_ == 0) return 0.0;
        std::size_t bits = bit_length();
        if (bits <= 64) return static_cast<double>(sign_) * static_cast<double>(mag_[0]);
        // Take the top 64 bits and scale.
        BigInt top = *this >> (bits - 64);
        double d = static_cast<double>(top.mag_[0]);
        int e = static_cast<int>(bits) - 64;
        double r = std::ldexp(d, e);
        return sign_ < 0 ? -r : r;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint64_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // Divide magnitude by 1e19 and emit the remainder.
            constexpr std::uint64_t chunk = 10000000000000000000ull;
            unsigned __int128 rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | m[i];
                m[i] = static_cast<std::uint64_t>(cur / chunk);
                rem = cur % chunk;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::uint64_t r = static_cast<std::uint64_t>(rem);
            for (int k = 0; k < 19; ++k) {
                digits.push_back(static_cast<char>('0' + r % 10));
                r /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v) {
        return os << v.to_string();
    }

private:
    int sign_ = 0;                       // -1, 0, +1
    std::vector<std::uint64_t> mag_;     // little-endian, no trailing zeros

    void assign_ll(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        mag_.push_back(u);
    }

    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    std::size_t trailing_zero_bits() const {
        std::size_t i = 0;
        while (i < mag_.size() && mag_[i] == 0) ++i;
        if (i == mag_.size()) return 0;
        std::uint64_t v = mag_[i];
        std::size_t bits = 64 * i;
        while (!(v & 1u)) {
            ++bits;
            v >>= 1;
        }
        return bits;
    }

    // *this = |*this| * f + add, keeping the current sign convention for parsing.
    void mul_small_add(std::uint64_t f, std::uint64_t add) {
        unsigned __int128 carry = add;
        for (auto& limb : mag_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(limb) * f + carry;
            limb = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        while (carry) {
            mag_.push_back(static_cast<std::uint64_t>(carry));
            carry >>= 64;
        }
        if (!mag_.empty()) sign_ = 1;
        trim();
    }

    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        const auto &x = a.size() >= b.size() ? a : b, &y = a.size() >= b.size() ? b : a;
        std::vector<std::uint64_t> r(x.size() + 1, 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            unsigned __int128 cur = carry + x[i] + (i < y.size() ? y[i] : 0);
            r[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        r[x.size()] = static_cast<std::uint64_t>(carry);
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Requires |a| >= |b|.
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned __int128 bi = (i < b.size() ? b[i] : 0);
            unsigned __int128 cur = static_cast<unsigned __int128>(a[i]) -
                                    bi - static_cast<std::uint64_t>(borrow);
            r[i] = static_cast<std::uint64_t>(cur);
            borrow = (cur >> 64) ? 1 : 0;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            unsigned __int128 carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                unsigned __int128 cur =
                    r[i + j] + static_cast<unsigned __int128>(ai) * b[j] + carry;
                r[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            std::size_t k = i + b.size();
            while (carry) {
                unsigned __int128 cur = r[k] + carry;
                r[k] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Knuth algorithm D on 64-bit digits; magnitudes only, b nonzero, |a| >= |b|.
    static void divmod_mag(const std::vector<std::uint64_t>& a,
                           const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t>& q,
                           std::vector<std::uint64_t>& r) {
        if (b.size() == 1) {
            std::uint64_t d = b[0];
            q.assign(a.size(), 0);
            unsigned __int128 rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | a[i];
                q[i] = static_cast<std::uint64_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem) r.push_back(static_cast<std::uint64_t>(rem));
            return;
        }

        const std::size_t n = b.size(), m = a.size() - n;
        int s = 0;
        {
            std::uint64_t top = b[n - 1];
            while (!(top & (1ull << 63))) {
                top <<= 1;
                ++s;
            }
        }
        // Normalized copies vn (n limbs) and un (a.size()+1 limbs).
        std::vector<std::uint64_t> vn(n), un(a.size() + 1, 0);
        for (std::size_t i = n; i-- > 0;) {
            vn[i] = b[i] << s;
            if (s && i > 0) vn[i] |= b[i - 1] >> (64 - s);
        }
        for (std::size_t i = a.size(); i-- > 0;) {
            un[i] = a[i] << s;
            if (s && i > 0) un[i] |= a[i - 1] >> (64 - s);
        }
        if (s) un[a.size()] = a[a.size() - 1] >> (64 - s);

        q.assign(m + 1, 0);
        const unsigned __int128 base = static_cast<unsigned __int128>(1) << 64;
        for (std::size_t j = m + 1; j-- > 0;) {
            unsigned __int128 num =
                (static_cast<unsigned __int128>(un[j + n]) << 64) | un[j + n - 1];
            unsigned __int128 qhat = num / vn[n - 1];
            unsigned __int128 rhat = num % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            // Multiply and subtract.
            unsigned __int128 borrow = 0, carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                unsigned __int128 p = qhat * vn[i] + carry;
                carry = p >> 64;
                unsigned __int128 sub = static_cast<unsigned __int128>(un[i + j]) -
                                        static_cast<std::uint64_t>(p) - borrow;
                un[i + j] = static_cast<std::uint64_t>(sub);
                borrow = (sub >> 64) ? 1 : 0;
            }
            unsigned __int128 sub = static_cast<unsigned __int128>(un[j + n]) - carry - borrow;
            un[j + n] = static_cast<std::uint64_t>(sub);
            bool neg = (sub >> 64) != 0;
            if (neg) {
                // qhat was one too large; add the divisor back.
                --qhat;
                unsigned __int128 c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    unsigned __int128 cur =
                        static_cast<unsigned __int128>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<std::uint64_t>(cur);
                    c2 = cur >> 64;
                }
                un[j + n] += static_cast<std::uint64_t>(c2);
            }
            q[j] = static_cast<std::uint64_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            r[i] = un[i] >> s;
            if (s && i + 1 < un.size()) r[i] |= un[i + 1] << (64 - s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

}  // namespace hratp
