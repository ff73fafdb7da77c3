#include <doctest.h>

#include <cstdint>
#include <sstream>

#include "hratp/bigfloat.hpp"
#include "hratp/bigint.hpp"
#include "hratp/rational.hpp"

using namespace hratp;

namespace {
std::uint64_t mix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}
}  // namespace

TEST_CASE("BigInt matches native arithmetic on random small operands") {
    std::uint64_t s = 7;
    for (int trial = 0; trial < 4000; ++trial) {
        long long a = static_cast<long long>(mix(s) % 2000001) - 1000000;
        long long b = static_cast<long long>(mix(s) % 2000001) - 1000000;
        BigInt A(a), B(b);
        CHECK((A + B).to_ll() == a + b);
        CHECK((A - B).to_ll() == a - b);
        CHECK((A * B).to_ll() == a * b);
        if (b != 0) {
            auto [q, r] = BigInt::divmod(A, B);
            CHECK(q.to_ll() == a / b);
            CHECK(r.to_ll() == a % b);
        }
        CHECK((A < B) == (a < b));
    }
}

TEST_CASE("BigInt division identity on large operands") {
    std::uint64_t s = 99;
    for (int trial = 0; trial < 300; ++trial) {
        BigInt a(1), b(1);
        int la = 1 + static_cast<int>(mix(s) % 8), lb = 1 + static_cast<int>(mix(s) % 5);
        for (int i = 0; i < la; ++i) a = a * BigInt(static_cast<long long>(mix(s) >> 8)) + BigInt(static_cast<long long>(mix(s) % 1000));
        for (int i = 0; i < lb; ++i) b = b * BigInt(static_cast<long long>(mix(s) >> 8)) + BigInt(static_cast<long long>(mix(s) % 1000));
        if (trial % 3 == 0) a = -a;
        if (trial % 5 == 0) b = -b;
        if (b.is_zero()) continue;
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("BigInt string round trips, shifts, gcd, pow, isqrt") {
    BigInt v = BigInt::from_string("-123456789012345678901234567890123456789");
    CHECK(v.to_string() == "-123456789012345678901234567890123456789");
    CHECK((BigInt(1) << 100 >> 100) == BigInt(1));
    CHECK((BigInt(5) << 3) == BigInt(40));
    CHECK(BigInt::gcd(BigInt(462), BigInt(1071)) == BigInt(21));
    BigInt big1 = BigInt::pow(BigInt(3), 50), big2 = BigInt::pow(BigInt(6), 50);
    CHECK(BigInt::gcd(big1, big2) == big1);
    CHECK(BigInt::pow(BigInt(2), 70) == (BigInt(1) << 70));
    BigInt n = BigInt::from_string("1000000000000000000000000000000");
    BigInt rt = BigInt::isqrt(n);
    CHECK(rt * rt <= n);
    CHECK((rt + 1) * (rt + 1) > n);
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt(-7).to_double() == -7.0);
}

TEST_CASE("Rational normalization and arithmetic") {
    Rational a(6, -8);
    CHECK(a.num() == BigInt(-3));
    CHECK(a.den() == BigInt(4));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
    CHECK(Rational(5, 10) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational::from_string("0.125") == Rational(1, 8));
    CHECK(Rational::from_string("-2.5") == Rational(-5, 2));
    CHECK(Rational::from_string("7/21") == Rational(1, 3));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
    CHECK(Rational(BigInt::pow(BigInt(10), 40), BigInt(1)).to_double() == doctest::Approx(1e40));
}

TEST_CASE("Rational::pow with negative exponents") {
    CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational::pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("BigFloat arithmetic agrees with double in range") {
    std::uint64_t s = 31;
    for (int trial = 0; trial < 400; ++trial) {
        double a = (double(mix(s) % 1000000) - 500000.0) / 997.0;
        double b = (double(mix(s) % 1000000) - 500000.0) / 991.0;
        BigFloat A(a), B(b);
        CHECK((A + B).to_double() == doctest::Approx(a + b).epsilon(1e-15));
        CHECK((A - B).to_double() == doctest::Approx(a - b).epsilon(1e-15));
        CHECK((A * B).to_double() == doctest::Approx(a * b).epsilon(1e-15));
        if (b != 0.0) CHECK((A / B).to_double() == doctest::Approx(a / b).epsilon(1e-15));
    }
}

TEST_CASE("BigFloat sqrt, comparisons, huge exponents") {
    BigFloat two(2.0, 400);
    BigFloat r = BigFloat::sqrt(two);
    BigFloat err = (r * r - two).abs();
    CHECK(err < BigFloat::pow2(-380, 400));
    CHECK(BigFloat(1.5) < BigFloat(2.0));
    CHECK(BigFloat(-3.0) < BigFloat(0.5));
    // values far beyond double range survive round trips of arithmetic
    BigFloat huge = BigFloat::pow2(2000);
    CHECK((huge / huge).to_double() == 1.0);
    CHECK(huge.to_double() == HUGE_VAL);
    CHECK(BigFloat::pow2(-2000).to_double() == 0.0);
    CHECK(BigFloat::from_rational(Rational(1, 3), 200).to_double() ==
          doctest::Approx(1.0 / 3).epsilon(1e-15));
}

TEST_CASE("BigFloat decimal rendering") {
    CHECK(BigFloat(1.0).to_scientific(2) == "1.0e+00");
    CHECK(BigFloat(-0.5).to_scientific(2) == "-5.0e-01");
    CHECK(BigFloat(1234.0).to_scientific(3) == "1.23e+03");
    CHECK(BigFloat(0.0).to_scientific(2) == "0e+00");
    // 2^2000 ~ 1.148e+602: beyond double but printable
    std::string s = BigFloat::pow2(2000).to_scientific(4);
    CHECK(s == "1.148e+602");
}
