#pragma once

// q-calculus primitives: q-integers, q-factorials, Gaussian q-binomials,
// q-Abel polynomial evaluation, and the coefficients of the change of basis
// between the q-Abel and monomial bases. Everything is generic over the
// scalar so the same definitions serve the double path and the exact oracle.

#include <stdexcept>

#include "hratp/scalar.hpp"

namespace hratp {

// Parameters (q, alpha) of a q-Abel family together with the degree bound n.
template <class T>
struct QAbelParams {
    T q;
    T alpha;
    int n = 0;

    QAbelParams(T q_, T alpha_, int n_) : q(std::move(q_)), alpha(std::move(alpha_)), n(n_) {
        if (!(q > sc_int<T>(0))) throw std::domain_error("QAbelParams: q must be positive");
        if (n < 0) throw std::domain_error("QAbelParams: n must be nonnegative");
    }
};

// [m] = sum_{i=0}^{m-1} q^i. The closed form (1-q^m)/(1-q) is used for
// floating scalars away from q = 1; near 1 the summation form avoids the
// cancellation in numerator and denominator.
template <class T>
T q_integer(long long m, const T& q) {
    if (m < 0) throw std::domain_error("q_integer: m must be nonnegative");
    const T one = sc_int<T>(1);
    if constexpr (!scalar_traits<T>::is_exact) {
        if (sc_abs(one - q) > sc_int<T>(1) / sc_int<T>(100000000)) {
            return (one - sc_pow(q, static_cast<unsigned long long>(m))) / (one - q);
        }
    }
    T s = sc_int<T>(0), p = one;
    for (long long i = 0; i < m; ++i) {
        s = s + p;
        p = p * q;
    }
    return s;
}

// [m]! = [m][m-1]...[1], with [0]! = 1.
template <class T>
T q_factorial(long long m, const T& q) {
    if (m < 0) throw std::domain_error("q_factorial: m must be nonnegative");
    T r = sc_int<T>(1);
    for (long long i = 2; i <= m; ++i) r = r * q_integer(i, q);
    return r;
}

// Gaussian binomial [m choose k]; zero outside 0 <= k <= m. Computed as the
// product of ratios [m-k+t]/[t] with interleaved multiply/divide so the
// intermediate values stay moderate and every operation acts on positives.
template <class T>
T q_binomial(long long m, long long k, const T& q) {
    if (m < 0) throw std::domain_error("q_binomial: m must be nonnegative");
    if (k < 0 || k > m) return sc_int<T>(0);
    if (k > m - k) k = m - k;
    T r = sc_int<T>(1);
    for (long long t = 1; t <= k; ++t) r = r * q_integer(m - k + t, q) / q_integer(t, q);
    return r;
}

// A_m^{(q,alpha)}(x) = x * prod_{j=1}^{m-1} (x q^j - alpha [m]); A_0 = 1.
template <class T>
T q_abel_eval(const QAbelParams<T>& params, int m, const T& x) {
    if (m < 0 || m > params.n) throw std::domain_error("q_abel_eval: degree out of range");
    if (m == 0) return sc_int<T>(1);
    T r = x;
    T am = params.alpha * q_integer(m, params.q);
    T qj = params.q;
    for (int j = 1; j <= m - 1; ++j) {
        r = r * (x * qj - am);
        qj = qj * params.q;
    }
    return r;
}

// Entry (row, col), 0-based, of the lower triangular change-of-basis matrix
// expressing the q-Abel basis in monomials:
//   l(0,0) = 1,  l(r,0) = 0 for r >= 1,
//   l(r,c) = (-alpha [r])^{r-c} q^{binom(c,2)} [r-1 choose r-c]   for 1 <= c <= r,
// and 0 above the diagonal.
template <class T>
T q_abel_monomial_coeff(const QAbelParams<T>& params, int row, int col) {
    if (row < 0 || row > params.n || col < 0 || col > params.n)
        throw std::domain_error("q_abel_monomial_coeff: index out of range");
    if (row == 0 && col == 0) return sc_int<T>(1);
    if (col == 0 || col > row) return sc_int<T>(0);
    T base = -params.alpha * q_integer(row, params.q);
    unsigned long long c2 = static_cast<unsigned long long>(col) *
                            static_cast<unsigned long long>(col - 1) / 2;
    return sc_pow(base, static_cast<unsigned long long>(row - col)) *
           sc_pow(params.q, c2) * q_binomial(row - 1, row - col, params.q);
}

// S_{k,i} = sum_{l=0}^{k} (-1)^l q^{binom(l+1,2)} [k choose l] [i-l choose k],
// evaluated term by term. The identity asserts S_{k,i} = 1 for i >= k >= 0;
// this routine exists so tests can verify that, not to exploit it.
template <class T>
T lemma1_sum(long long k, long long i, const T& q) {
    if (k < 0 || i < k) throw std::domain_error("lemma1_sum: requires i >= k >= 0");
    T b1 = sc_int<T>(1);              // [k choose l]
    T b2 = q_binomial(i, k, q);       // [i-l choose k]
    T qpow = sc_int<T>(1);            // q^{binom(l+1,2)}
    T ql = sc_int<T>(1);              // q^l
    T sign = sc_int<T>(1);
    T sum = b2;                       // l = 0 term: binom(1,2) = 0
    for (long long l = 1; l <= k; ++l) {
        b1 = b1 * q_integer(k - l + 1, q) / q_integer(l, q);
        if (i - l + 1 - k <= 0)
            b2 = sc_int<T>(0);  // [i-l choose k] vanishes once i-l < k
        else
            b2 = b2 * q_integer(i - l + 1 - k, q) / q_integer(i - l + 1, q);
        ql = ql * q;
        qpow = qpow * ql;  // binom(l+1,2) = binom(l,2) + l
        sign = -sign;
        sum = sum + sign * qpow * b1 * b2;
    }
    return sum;
}

}  // namespace hratp
