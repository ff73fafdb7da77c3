#include <doctest.h>

#include "hratp/qcalc.hpp"

using namespace hratp;

namespace {
const Rational kQGrid[] = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(2), Rational(5)};

long long binom_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}
}  // namespace

TEST_CASE("q_integer basics") {
    CHECK(q_integer(5, 1.0) == 5.0);
    CHECK(q_integer(0, 2.0) == 0.0);
    CHECK(q_integer(3, 2.0) == 7.0);
    CHECK(q_integer(3, Rational(2)) == Rational(7));
    CHECK(q_integer(4, Rational(1, 2)) == Rational(15, 8));
    CHECK_THROWS_AS(q_integer(-1, 2.0), std::domain_error);
    // near q = 1 the summation branch avoids 0/0 and cancellation
    CHECK(q_integer(10, 1.0 + 1e-12) == doctest::Approx(10.0).epsilon(1e-10));
    CHECK(q_integer(10, 1.0) == 10.0);
}

TEST_CASE("q_factorial basics") {
    CHECK(q_factorial(0, 3.0) == 1.0);
    CHECK(q_factorial(3, 1.0) == 6.0);
    CHECK(q_factorial(3, 2.0) == 21.0);
    CHECK(q_factorial(4, Rational(2)) == Rational(315));
}

TEST_CASE("q_binomial basics and out-of-range zeros") {
    CHECK(q_binomial(4, 0, 7.0) == 1.0);
    CHECK(q_binomial(4, 2, 1.0) == 6.0);
    CHECK(q_binomial(4, 2, 2.0) == 35.0);
    CHECK(q_binomial(4, -1, 2.0) == 0.0);
    CHECK(q_binomial(4, 5, 2.0) == 0.0);
    CHECK(q_binomial(6, 3, Rational(1, 2)) == Rational(1395, 512));
}

TEST_CASE("q_abel_eval basics") {
    QAbelParams<double> any(3.0, -2.0, 6);
    CHECK(q_abel_eval(any, 0, 17.3) == 1.0);
    CHECK(q_abel_eval(any, 1, 4.5) == 4.5);
    QAbelParams<double> p11(1.0, 1.0, 4);
    CHECK(q_abel_eval(p11, 2, 3.0) == 3.0);  // x(xq - alpha[2]) = 3(3-2)
    CHECK_THROWS_AS(q_abel_eval(p11, 5, 1.0), std::domain_error);
    CHECK_THROWS_AS(QAbelParams<double>(0.0, 1.0, 3), std::domain_error);
    CHECK_THROWS_AS(QAbelParams<double>(1.0, 1.0, -1), std::domain_error);
}

TEST_CASE("q_abel_monomial_coeff entries") {
    QAbelParams<Rational> p(Rational(2), Rational(3), 5);
    CHECK(q_abel_monomial_coeff(p, 0, 0) == Rational(1));
    CHECK(q_abel_monomial_coeff(p, 3, 0) == Rational(0));
    CHECK(q_abel_monomial_coeff(p, 1, 3) == Rational(0));  // above diagonal
    // row 3 (0-based 2), col 2 (0-based 1): -alpha [2]
    CHECK(q_abel_monomial_coeff(p, 2, 1) == -Rational(3) * q_integer(2, Rational(2)));
    QAbelParams<Rational> p11(Rational(1), Rational(1), 5);
    CHECK(q_abel_monomial_coeff(p11, 3, 1) == Rational(9));
    CHECK_THROWS_AS(q_abel_monomial_coeff(p, 6, 0), std::domain_error);
    CHECK_THROWS_AS(q_abel_monomial_coeff(p, 0, -1), std::domain_error);
}

TEST_CASE("lemma1_sum evaluates to one") {
    CHECK(lemma1_sum(0, 5, Rational(2)) == Rational(1));
    CHECK(lemma1_sum(1, 1, Rational(1)) == Rational(1));
    CHECK(lemma1_sum(3, 7, Rational(3, 2)) == Rational(1));
    CHECK_THROWS_AS(lemma1_sum(3, 2, Rational(2)), std::domain_error);
    for (const Rational& q : {Rational(1, 2), Rational(2)})
        for (long long i = 0; i <= 10; ++i)
            for (long long k = 0; k <= i; ++k) CHECK(lemma1_sum(k, i, q) == Rational(1));
}

TEST_CASE("q-integer subtraction identity [t]-[s] = q^s [t-s]") {
    for (const Rational& q : kQGrid)
        for (long long t = 0; t <= 30; ++t)
            for (long long s = 0; s <= t; ++s)
                CHECK(q_integer(t, q) - q_integer(s, q) ==
                      Rational::pow(q, s) * q_integer(t - s, q));
}

TEST_CASE("absorption identity [k][m k] = [m][m-1 k-1]") {
    for (const Rational& q : kQGrid)
        for (long long m = 1; m <= 12; ++m)
            for (long long k = 1; k <= m; ++k)
                CHECK(q_integer(k, q) * q_binomial(m, k, q) ==
                      q_integer(m, q) * q_binomial(m - 1, k - 1, q));
}

TEST_CASE("both q-Pascal identities") {
    for (const Rational& q : kQGrid)
        for (long long m = 1; m <= 12; ++m)
            for (long long k = 0; k <= m; ++k) {
                CHECK(q_binomial(m, k, q) ==
                      q_binomial(m - 1, k - 1, q) + Rational::pow(q, k) * q_binomial(m - 1, k, q));
                CHECK(q_binomial(m, k, q) ==
                      Rational::pow(q, m - k) * q_binomial(m - 1, k - 1, q) +
                          q_binomial(m - 1, k, q));
            }
}

TEST_CASE("q = 1 degenerates to the classical objects") {
    Rational one(1);
    for (long long m = 0; m <= 12; ++m) {
        CHECK(q_integer(m, one) == Rational(m));
        for (long long k = 0; k <= m; ++k) CHECK(q_binomial(m, k, one) == Rational(binom_ll(m, k)));
    }
    // A_m at q=1 equals the classical Abel polynomial x (x - alpha m)^{m-1}
    for (const Rational& alpha : {Rational(-1), Rational(2), Rational(1, 3)}) {
        QAbelParams<Rational> p(one, alpha, 8);
        for (int m = 1; m <= 8; ++m)
            for (long long xi = -3; xi <= 3; ++xi) {
                Rational x(xi, 2);
                Rational classical = x * Rational::pow(x - alpha * Rational(m), m - 1);
                CHECK(q_abel_eval(p, m, x) == classical);
            }
    }
}

TEST_CASE("basis expansion: monomial coefficients reproduce q_abel_eval") {
    for (const Rational& q : {Rational(1, 2), Rational(1), Rational(2)})
        for (const Rational& alpha : {Rational(-1), Rational(1)}) {
            QAbelParams<Rational> p(q, alpha, 10);
            for (int m = 0; m <= 10; ++m)
                for (long long xi = -2; xi <= 2; ++xi) {
                    Rational x(xi * 3, 4);
                    Rational sum(0), xp(1);
                    for (int j = 0; j <= m; ++j) {
                        sum += q_abel_monomial_coeff(p, m, j) * xp;
                        xp *= x;
                    }
                    CHECK(sum == q_abel_eval(p, m, x));
                }
        }
    // floating point: relative accuracy 1e-13
    QAbelParams<double> pd(0.5, -1.0, 10);
    for (int m = 0; m <= 10; ++m)
        for (double x : {0.3, 1.0, 2.5}) {
            double sum = 0, xp = 1;
            for (int j = 0; j <= m; ++j) {
                sum += q_abel_monomial_coeff(pd, m, j) * xp;
                xp *= x;
            }
            double ref = q_abel_eval(pd, m, x);
            CHECK(sum == doctest::Approx(ref).epsilon(1e-13));
        }
}
