#pragma once

// Reference implementations the HRA path is measured against: dense
// constructions of every matrix family (exact over rationals, or at a chosen
// extended precision for irrational data), fraction-free exact solves and
// inverses, extended-precision spectra, 2-norm condition numbers, the
// relative-error metric, and the conventional double-precision baselines the
// experiments compare with. Nothing in here touches the BD factor chains, so
// these routes are independent of the code they certify.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hratp/bigfloat.hpp"
#include "hratp/bigint.hpp"
#include "hratp/dense.hpp"
#include "hratp/qcalc.hpp"
#include "hratp/rational.hpp"
#include "hratp/scalar.hpp"

namespace hratp {

// Exact scalar of the oracle's rational mode; the float mode uses BigFloat
// with a per-call decimal precision (200 digits by default, per experiment).
using ExactScalar = Rational;

constexpr unsigned kDefaultOracleDigits = 200;

enum class NormKind { vector_2, matrix_2 };

struct ErrorReport {
    double relative_error = 0.0;
    NormKind norm_kind = NormKind::vector_2;
};

// ---------------------------------------------------------------------------
// Dense constructions. Instantiated with Rational these are exact; with
// BigFloat they are correct to the working precision.

template <class T>
DenseMatrix<T> exact_collocation(const QAbelParams<T>& params, const std::vector<T>& nodes) {
    const std::size_t n = static_cast<std::size_t>(params.n) + 1;
    if (nodes.size() != n) throw std::domain_error("exact_collocation: node count mismatch");
    DenseMatrix<T> a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = q_abel_eval(params, static_cast<int>(c), nodes[r]);
    return a;
}

// Wronskian of the monomials: entry (r, c) = c!/(c-r)! x^{c-r} for c >= r.
template <class T>
DenseMatrix<T> exact_wronskian_monomials(const T& x, int degree) {
    const std::size_t n = static_cast<std::size_t>(degree) + 1;
    DenseMatrix<T> w(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        T coeff = sc_int<T>(1);  // c!/(c-r)!, starting at c = r with value r!
        for (std::size_t k = 2; k <= r; ++k) coeff = coeff * sc_int<T>(static_cast<long long>(k));
        T xp = sc_int<T>(1);
        for (std::size_t c = r; c < n; ++c) {
            w(r, c) = coeff * xp;
            xp = xp * x;
            coeff = coeff * sc_int<T>(static_cast<long long>(c + 1)) /
                    sc_int<T>(static_cast<long long>(c + 1 - r));
        }
    }
    return w;
}

// Wronskian of the q-Abel basis via exact differentiation of the monomial
// expansion: entry (r, c) = sum_k l(c, k) k!/(k-r)! x^{k-r}.
template <class T>
DenseMatrix<T> exact_wronskian(const QAbelParams<T>& params, const T& x) {
    const std::size_t n = static_cast<std::size_t>(params.n) + 1;
    DenseMatrix<T> lw = exact_wronskian_monomials(x, params.n);
    DenseMatrix<T> w(n, n);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t k = 0; k <= c; ++k) {
            T l = q_abel_monomial_coeff(params, static_cast<int>(c), static_cast<int>(k));
            if (sc_is_zero(l)) continue;
            for (std::size_t r = 0; r < n; ++r) w(r, c) = w(r, c) + lw(r, k) * l;
        }
    return w;
}

template <class T>
DenseMatrix<T> exact_hilbert(int degree) {
    const std::size_t n = static_cast<std::size_t>(degree) + 1;
    DenseMatrix<T> h(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            h(r, c) = sc_int<T>(1) / sc_int<T>(static_cast<long long>(r + c + 1));
    return h;
}

// Gramian of the q-Abel basis on [0,1] by exact monomial integration:
// G(i,j) = sum_{a,b} l(i,a) l(j,b) / (a+b+1).
template <class T>
DenseMatrix<T> exact_gramian(const QAbelParams<T>& params) {
    const std::size_t n = static_cast<std::size_t>(params.n) + 1;
    DenseMatrix<T> l(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= r; ++c)
            l(r, c) = q_abel_monomial_coeff(params, static_cast<int>(r), static_cast<int>(c));
    DenseMatrix<T> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            T s = sc_int<T>(0);
            for (std::size_t a = 0; a <= i; ++a) {
                if (sc_is_zero(l(i, a))) continue;
                for (std::size_t b = 0; b <= j; ++b) {
                    if (sc_is_zero(l(j, b))) continue;
                    s = s + l(i, a) * l(j, b) / sc_int<T>(static_cast<long long>(a + b + 1));
                }
            }
            g(i, j) = s;
            g(j, i) = s;
        }
    return g;
}

template <class T>
DenseMatrix<T> exact_vandermonde(const std::vector<T>& nodes) {
    const std::size_t n = nodes.size();
    DenseMatrix<T> v(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        T p = sc_int<T>(1);
        for (std::size_t c = 0; c < n; ++c) {
            v(r, c) = p;
            p = p * nodes[r];
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Exact solve / inverse through fraction-free (Bareiss) elimination. Rows are
// scaled to integers first; the integer back substitution divides exactly.

namespace oracle_detail {

struct IntSystem {
    std::vector<std::vector<BigInt>> m;  // n x (n + k)
    std::size_t n = 0, k = 0;
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() ? b.abs() : a.abs();
    return BigInt::div_exact(a, BigInt::gcd(a, b)).abs() * b.abs();
}

inline IntSystem scale_rows(const DenseMatrix<Rational>& a, const DenseMatrix<Rational>& rhs) {
    const std::size_t n = a.rows(), k = rhs.cols();
    if (a.cols() != n || rhs.rows() != n)
        throw std::domain_error("oracle solve: shape mismatch");
    IntSystem s;
    s.n = n;
    s.k = k;
    s.m.assign(n, std::vector<BigInt>(n + k));
    for (std::size_t i = 0; i < n; ++i) {
        BigInt d(1);
        for (std::size_t j = 0; j < n; ++j) d = lcm(d, a(i, j).den());
        for (std::size_t j = 0; j < k; ++j) d = lcm(d, rhs(i, j).den());
        for (std::size_t j = 0; j < n; ++j)
            s.m[i][j] = a(i, j).num() * BigInt::div_exact(d, a(i, j).den());
        for (std::size_t j = 0; j < k; ++j)
            s.m[i][n + j] = rhs(i, j).num() * BigInt::div_exact(d, rhs(i, j).den());
    }
    return s;
}

// Fraction-free forward elimination; row swaps keep the solution intact.
inline void bareiss_forward(IntSystem& s) {
    const std::size_t n = s.n, cols = s.n + s.k;
    BigInt prev(1);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (s.m[p][p].is_zero()) {
            std::size_t r = p + 1;
            while (r < n && s.m[r][p].is_zero()) ++r;
            if (r == n) throw std::domain_error("oracle solve: singular matrix");
            std::swap(s.m[p], s.m[r]);
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < cols; ++j)
                s.m[i][j] =
                    BigInt::div_exact(s.m[p][p] * s.m[i][j] - s.m[i][p] * s.m[p][j], prev);
            s.m[i][p] = BigInt();
        }
        prev = s.m[p][p];
    }
    if (s.m[n - 1][n - 1].is_zero()) throw std::domain_error("oracle solve: singular matrix");
}

}  // namespace oracle_detail

// Numerators and shared denominator of an exact solution block.
struct RawSolution {
    std::vector<std::vector<BigInt>> numer;  // n rows x k columns
    BigInt denom;
};

// Exact solve of A X = B; X(i,j) = numer[i][j] / denom.
inline RawSolution reference_solve_raw(const DenseMatrix<Rational>& a,
                                       const DenseMatrix<Rational>& rhs) {
    using namespace oracle_detail;
    IntSystem s = scale_rows(a, rhs);
    bareiss_forward(s);
    const std::size_t n = s.n, k = s.k;
    const BigInt det = s.m[n - 1][n - 1];
    RawSolution out;
    out.denom = det;
    out.numer.assign(n, std::vector<BigInt>(k));
    for (std::size_t c = 0; c < k; ++c) {
        out.numer[n - 1][c] = s.m[n - 1][n + c];
        for (std::size_t i = n - 1; i-- > 0;) {
            BigInt acc = det * s.m[i][n + c];
            for (std::size_t j = i + 1; j < n; ++j) acc -= s.m[i][j] * out.numer[j][c];
            out.numer[i][c] = BigInt::div_exact(acc, s.m[i][i]);
        }
    }
    return out;
}

inline std::vector<Rational> reference_solve(const DenseMatrix<Rational>& a,
                                             const std::vector<Rational>& b) {
    DenseMatrix<Rational> rhs(b.size(), 1);
    for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
    RawSolution raw = reference_solve_raw(a, rhs);
    std::vector<Rational> x(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) x[i] = Rational(raw.numer[i][0], raw.denom);
    return x;
}

inline RawSolution reference_inverse_raw(const DenseMatrix<Rational>& a) {
    return reference_solve_raw(a, DenseMatrix<Rational>::identity(a.rows()));
}

inline DenseMatrix<Rational> reference_inverse(const DenseMatrix<Rational>& a) {
    RawSolution raw = reference_inverse_raw(a);
    DenseMatrix<Rational> inv(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j)
            inv(i, j) = Rational(raw.numer[i][j], raw.denom);
    return inv;
}

// ---------------------------------------------------------------------------
// Conversions to the extended-precision domain.

inline BigFloat to_bigfloat(const Rational& r, std::uint32_t prec) {
    return BigFloat::from_rational(r, prec);
}

inline DenseMatrix<BigFloat> to_bigfloat(const DenseMatrix<Rational>& m, std::uint32_t prec) {
    DenseMatrix<BigFloat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigFloat::from_rational(m(i, j), prec);
    return r;
}

inline DenseMatrix<BigFloat> to_bigfloat(const DenseMatrix<double>& m, std::uint32_t prec) {
    DenseMatrix<BigFloat> r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = BigFloat(m(i, j), prec);
    return r;
}

inline std::vector<BigFloat> to_bigfloat(const std::vector<double>& v, std::uint32_t prec) {
    std::vector<BigFloat> r;
    r.reserve(v.size());
    for (double x : v) r.emplace_back(x, prec);
    return r;
}

inline std::vector<BigFloat> to_bigfloat(const std::vector<Rational>& v, std::uint32_t prec) {
    std::vector<BigFloat> r;
    r.reserve(v.size());
    for (const Rational& x : v) r.push_back(BigFloat::from_rational(x, prec));
    return r;
}

// ---------------------------------------------------------------------------
// Spectra. Cyclic Jacobi for symmetric input; explicit single-shift QR on the
// Hessenberg form for general real-spectrum input. Both are iterative
// refinement at the caller's precision, independent of the BD machinery.

template <class T>
std::vector<T> jacobi_eigenvalues(DenseMatrix<T> a, const T& eps, int max_sweeps = 80) {
    const std::size_t n = a.rows();
    const T zero = sc_int<T>(0), one = sc_int<T>(1), two = sc_int<T>(2);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        T off = zero, diag = zero;
        for (std::size_t p = 0; p < n; ++p) {
            diag = diag + a(p, p) * a(p, p);
            for (std::size_t q = p + 1; q < n; ++q) off = off + a(p, q) * a(p, q);
        }
        if (!(off > eps * eps * (diag + off))) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const T apq = a(p, q);
                if (apq == zero) continue;
                T tau = (a(q, q) - a(p, p)) / (two * apq);
                T t = one / (sc_abs(tau) + scalar_traits<T>::sqrt(one + tau * tau));
                if (tau < zero) t = -t;
                T c = one / scalar_traits<T>::sqrt(one + t * t);
                T s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    T akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    T apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<T> ev;
    ev.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ev.push_back(a(i, i));
    std::sort(ev.begin(), ev.end(), [](const T& x, const T& y) { return y < x; });
    return ev;
}

namespace oracle_detail {

template <class T>
void hessenberg_reduce(DenseMatrix<T>& a) {
    const std::size_t n = a.rows();
    const T zero = sc_int<T>(0);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        // Householder vector for column k below the diagonal.
        T norm2 = zero;
        for (std::size_t i = k + 1; i < n; ++i) norm2 = norm2 + a(i, k) * a(i, k);
        if (norm2 == zero) continue;
        T alpha = scalar_traits<T>::sqrt(norm2);
        if (a(k + 1, k) > zero) alpha = -alpha;
        std::vector<T> v(n, zero);
        v[k + 1] = a(k + 1, k) - alpha;
        for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
        T vtv = zero;
        for (std::size_t i = k + 1; i < n; ++i) vtv = vtv + v[i] * v[i];
        if (vtv == zero) continue;
        T beta = sc_int<T>(2) / vtv;
        // A := (I - beta v v^T) A (I - beta v v^T)
        for (std::size_t j = 0; j < n; ++j) {
            T s = zero;
            for (std::size_t i = k + 1; i < n; ++i) s = s + v[i] * a(i, j);
            s = s * beta;
            for (std::size_t i = k + 1; i < n; ++i) a(i, j) = a(i, j) - s * v[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            T s = zero;
            for (std::size_t j = k + 1; j < n; ++j) s = s + a(i, j) * v[j];
            s = s * beta;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - s * v[j];
        }
        for (std::size_t i = k + 2; i < n; ++i) a(i, k) = zero;
        a(k + 1, k) = alpha;
    }
}

}  // namespace oracle_detail

// Eigenvalues of a general matrix whose spectrum is real (the TP case).
// When `throw_on_stall` is false the current diagonal is returned after the
// iteration budget, which is the behavior wanted from a double baseline.
template <class T>
std::vector<T> qr_eigenvalues(DenseMatrix<T> a, const T& eps, bool throw_on_stall = true) {
    const std::size_t n = a.rows();
    const T zero = sc_int<T>(0), two = sc_int<T>(2);
    std::vector<T> ev;
    ev.reserve(n);
    if (n == 1) {
        ev.push_back(a(0, 0));
        return ev;
    }
    oracle_detail::hessenberg_reduce(a);
    std::size_t hi = n - 1;
    std::size_t iter = 0;
    const std::size_t max_iter = 200 * n;
    bool healthy = true;
    while (true) {
        // Deflate negligible subdiagonals.
        for (std::size_t i = 0; i < hi; ++i)
            if (sc_abs(a(i + 1, i)) <= eps * (sc_abs(a(i, i)) + sc_abs(a(i + 1, i + 1))))
                a(i + 1, i) = zero;
        while (hi > 0 && a(hi, hi - 1) == zero) {
            ev.push_back(a(hi, hi));
            --hi;
        }
        if (hi == 0) {
            ev.push_back(a(0, 0));
            break;
        }
        std::size_t lo = hi;
        while (lo > 0 && !(a(lo, lo - 1) == zero)) --lo;
        if (++iter > max_iter || !healthy) {
            if (throw_on_stall) throw std::runtime_error("qr_eigenvalues: iteration stalled");
            for (std::size_t i = 0; i <= hi; ++i) ev.push_back(a(i, i));
            break;
        }
        // Wilkinson-style shift from the trailing 2x2 of the active block.
        T app = a(hi - 1, hi - 1), aqq = a(hi, hi);
        T apq = a(hi - 1, hi), aqp = a(hi, hi - 1);
        T half_gap = (app - aqq) / two;
        T disc = half_gap * half_gap + apq * aqp;
        T mu = aqq;
        if (!(disc < zero)) {
            T root = scalar_traits<T>::sqrt(disc);
            T mid = (app + aqq) / two;
            T lam1 = mid + root, lam2 = mid - root;
            mu = (sc_abs(lam1 - aqq) < sc_abs(lam2 - aqq)) ? lam1 : lam2;
        }
        // Explicit shifted QR step on the active window via Givens rotations.
        std::vector<T> cs(hi, zero), sn(hi, zero);
        for (std::size_t i = lo; i <= hi; ++i) a(i, i) = a(i, i) - mu;
        for (std::size_t k = lo; k < hi; ++k) {
            T x = a(k, k), z = a(k + 1, k);
            T r = scalar_traits<T>::sqrt(x * x + z * z);
            if (!scalar_traits<T>::is_finite(r)) healthy = false;
            T c, s;
            if (r == zero) {
                c = sc_int<T>(1);
                s = zero;
            } else {
                c = x / r;
                s = z / r;
            }
            cs[k] = c;
            sn[k] = s;
            for (std::size_t j = k; j <= hi; ++j) {
                T t1 = a(k, j), t2 = a(k + 1, j);
                a(k, j) = c * t1 + s * t2;
                a(k + 1, j) = -s * t1 + c * t2;
            }
        }
        for (std::size_t k = lo; k < hi; ++k) {
            const T c = cs[k], s = sn[k];
            std::size_t top = lo;
            for (std::size_t i = top; i <= std::min(hi, k + 2); ++i) {
                T t1 = a(i, k), t2 = a(i, k + 1);
                a(i, k) = c * t1 + s * t2;
                a(i, k + 1) = -s * t1 + c * t2;
            }
        }
        for (std::size_t i = lo; i <= hi; ++i) a(i, i) = a(i, i) + mu;
    }
    std::sort(ev.begin(), ev.end(), [](const T& x, const T& y) { return y < x; });
    return ev;
}

// Singular values as square roots of the eigenvalues of A^T A. For the
// extended-precision oracle the squaring costs accuracy only relative to the
// working precision, which the caller chooses with enough headroom.
template <class T>
std::vector<T> singular_values_via_gram(const DenseMatrix<T>& a, const T& eps) {
    DenseMatrix<T> ata = a.transpose() * a;
    std::vector<T> ev = jacobi_eigenvalues(std::move(ata), eps);
    const T zero = sc_int<T>(0);
    for (T& v : ev) v = v > zero ? scalar_traits<T>::sqrt(v) : zero;
    return ev;
}

inline BigFloat oracle_eps(std::uint32_t prec) {
    return BigFloat::pow2(-static_cast<std::int64_t>(prec) + 12, prec);
}

inline std::uint32_t digits_to_bits(unsigned digits) { return BigFloat::bits_for_digits(digits); }

// Self-validating spectra: the requested precision is a floor, not a
// guarantee, because forming A^T A (or running QR on a matrix with a huge
// condition number) resolves the smallest values only down to the absolute
// noise floor of the working precision. The computation is repeated with
// doubled precision until the whole spectrum is reproduced to 40 significant
// digits, so the returned values stand on their own. `build` must construct
// the same matrix at any requested bit precision.
template <class BuildFn>
std::vector<BigFloat> adaptive_spectrum(BuildFn&& build, unsigned digits, bool singular_values,
                                        bool symmetric = false) {
    const unsigned cap = std::max(digits * 16, 3200u);
    std::vector<BigFloat> prev;
    for (unsigned d = digits; d <= cap; d *= 2) {
        std::uint32_t prec = digits_to_bits(d);
        DenseMatrix<BigFloat> a = build(prec);
        std::vector<BigFloat> cur;
        if (singular_values)
            cur = singular_values_via_gram(a, oracle_eps(prec));
        else if (symmetric)
            cur = jacobi_eigenvalues(std::move(a), oracle_eps(prec));
        else
            cur = qr_eigenvalues(std::move(a), oracle_eps(prec));
        if (!prev.empty()) {
            bool stable = true;
            const BigFloat tol(1e-40, prec);
            for (std::size_t i = 0; i < cur.size() && stable; ++i) {
                if (cur[i].is_zero()) {
                    stable = false;
                    break;
                }
                if (!((prev[i] - cur[i]).abs() <= tol * cur[i].abs())) stable = false;
            }
            if (stable) return cur;
        }
        prev = std::move(cur);
    }
    return prev;
}

// sigma_max / sigma_min; adaptive in the same way. For symmetric positive
// definite input the eigenvalues are the singular values, which spares the
// precision cost of forming A^T A.
template <class BuildFn>
BigFloat condition_number_2_adaptive(BuildFn&& build, unsigned digits = kDefaultOracleDigits,
                                     bool symmetric_pd = false) {
    std::vector<BigFloat> sv =
        symmetric_pd ? adaptive_spectrum(build, digits, /*singular_values=*/false, true)
                     : adaptive_spectrum(build, digits, /*singular_values=*/true);
    if (sv.empty() || !(sv.back() > BigFloat(0.0)))
        throw std::domain_error("condition_number_2: singular matrix");
    return sv.front() / sv.back();
}

// Single-shot variant at a fixed precision.
inline BigFloat condition_number_2(const DenseMatrix<BigFloat>& a,
                                   unsigned digits = kDefaultOracleDigits) {
    std::uint32_t prec = digits_to_bits(digits);
    std::vector<BigFloat> sv = singular_values_via_gram(a, oracle_eps(prec));
    if (sv.empty() || !(sv.back() > BigFloat(0.0, prec)))
        throw std::domain_error("condition_number_2: singular matrix");
    return sv.front() / sv.back();
}

// Spectrum of an exactly known matrix at (at least) the given precision;
// eigenvalues use QR (or Jacobi when symmetric), singular values the A^T A
// route, both with the adaptive stabilization above.
enum class SpectrumKind { eigenvalues, singular_values };

inline std::vector<BigFloat> reference_spectrum(const DenseMatrix<Rational>& m, SpectrumKind kind,
                                                unsigned digits = kDefaultOracleDigits,
                                                bool symmetric = false) {
    auto build = [&](std::uint32_t prec) { return to_bigfloat(m, prec); };
    return adaptive_spectrum(build, digits, kind == SpectrumKind::singular_values, symmetric);
}

// Largest singular value by power iteration on M^T M; adequate for norm
// ratios, not for tiny singular values.
inline BigFloat spectral_norm(const DenseMatrix<BigFloat>& m, int iters = 140) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::uint32_t prec = BigFloat::kDefaultPrec;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) prec = std::max(prec, m(i, j).precision());
    std::vector<BigFloat> v(cols);
    for (std::size_t j = 0; j < cols; ++j)
        v[j] = BigFloat(1.0 + static_cast<double>(j + 1) / static_cast<double>(cols + 7), prec);
    BigFloat sigma(0.0, prec);
    for (int it = 0; it < iters; ++it) {
        // w = M v
        std::vector<BigFloat> w(rows, BigFloat(0.0, prec));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) w[i] += m(i, j) * v[j];
        // z = M^T w
        std::vector<BigFloat> z(cols, BigFloat(0.0, prec));
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) z[j] += m(i, j) * w[i];
        BigFloat nw(0.0, prec), nv(0.0, prec);
        for (const BigFloat& x : w) nw += x * x;
        for (const BigFloat& x : v) nv += x * x;
        if (nv.is_zero()) return BigFloat(0.0, prec);
        BigFloat next = BigFloat::sqrt(nw / nv);
        bool settled = it > 4 && !next.is_zero() &&
                       (next - sigma).abs() <= BigFloat(1e-24, prec) * next;
        sigma = next;
        if (settled) break;
        // Normalize z by its largest component.
        BigFloat scale(0.0, prec);
        for (const BigFloat& x : z)
            if (x.abs() > scale) scale = x.abs();
        if (scale.is_zero()) return BigFloat(0.0, prec);
        for (BigFloat& x : z) x /= scale;
        v = std::move(z);
    }
    return sigma;
}

// ---------------------------------------------------------------------------
// Relative errors, e = ||y - y~||_2 / ||y||_2, evaluated at oracle precision.

inline BigFloat vector_norm2(const std::vector<BigFloat>& v) {
    BigFloat s(0.0, v.empty() ? BigFloat::kDefaultPrec : v.front().precision());
    for (const BigFloat& x : v) s += x * x;
    return BigFloat::sqrt(s);
}

inline ErrorReport relative_error(const std::vector<BigFloat>& reference,
                                  const std::vector<BigFloat>& computed) {
    if (reference.size() != computed.size())
        throw std::domain_error("relative_error: shape mismatch");
    BigFloat nref = vector_norm2(reference);
    if (nref.is_zero()) throw std::domain_error("relative_error: zero reference");
    std::vector<BigFloat> diff(reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) diff[i] = reference[i] - computed[i];
    ErrorReport rep;
    rep.norm_kind = NormKind::vector_2;
    rep.relative_error = (vector_norm2(diff) / nref).to_double();
    return rep;
}

inline ErrorReport relative_error_matrix(const DenseMatrix<BigFloat>& reference,
                                         const DenseMatrix<BigFloat>& computed) {
    if (reference.rows() != computed.rows() || reference.cols() != computed.cols())
        throw std::domain_error("relative_error: shape mismatch");
    BigFloat nref = spectral_norm(reference);
    if (nref.is_zero()) throw std::domain_error("relative_error: zero reference");
    DenseMatrix<BigFloat> diff(reference.rows(), reference.cols());
    for (std::size_t i = 0; i < reference.rows(); ++i)
        for (std::size_t j = 0; j < reference.cols(); ++j)
            diff(i, j) = reference(i, j) - computed(i, j);
    ErrorReport rep;
    rep.norm_kind = NormKind::matrix_2;
    rep.relative_error = (spectral_norm(diff) / nref).to_double();
    return rep;
}

inline double scalar_relative_error(const BigFloat& reference, const BigFloat& computed) {
    if (reference.is_zero()) throw std::domain_error("relative_error: zero reference");
    return ((reference - computed).abs() / reference.abs()).to_double();
}

// ---------------------------------------------------------------------------
// Conventional baselines: LU with partial pivoting in working precision.
// Deliberately ordinary; these reproduce the accuracy loss the experiments
// contrast against. A vanishing pivot is left in place (the solve then
// produces infs/nans exactly like a vendor backslash on a numerically
// singular system would produce garbage).

template <class T>
struct LUFactors {
    DenseMatrix<T> lu;
    std::vector<std::size_t> perm;
};

template <class T>
LUFactors<T> lu_factor(DenseMatrix<T> a) {
    const std::size_t n = a.rows();
    LUFactors<T> f{std::move(a), {}};
    f.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (sc_abs(f.lu(i, k)) > sc_abs(f.lu(piv, k))) piv = i;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
        }
        const T& pivot = f.lu(k, k);
        if (sc_is_zero(pivot)) continue;
        for (std::size_t i = k + 1; i < n; ++i) {
            T m = f.lu(i, k) / pivot;
            f.lu(i, k) = m;
            for (std::size_t j = k + 1; j < n; ++j) f.lu(i, j) = f.lu(i, j) - m * f.lu(k, j);
        }
    }
    return f;
}

template <class T>
std::vector<T> lu_solve_factored(const LUFactors<T>& f, const std::vector<T>& b) {
    const std::size_t n = f.perm.size();
    std::vector<T> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] = x[i] - f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j) x[i] = x[i] - f.lu(i, j) * x[j];
        x[i] = x[i] / f.lu(i, i);
    }
    return x;
}

template <class T>
std::vector<T> lu_solve(const DenseMatrix<T>& a, const std::vector<T>& b) {
    return lu_solve_factored(lu_factor(a), b);
}

template <class T>
DenseMatrix<T> lu_inverse(const DenseMatrix<T>& a) {
    const std::size_t n = a.rows();
    LUFactors<T> f = lu_factor(a);
    DenseMatrix<T> inv(n, n);
    std::vector<T> e(n, sc_int<T>(0));
    for (std::size_t c = 0; c < n; ++c) {
        e.assign(n, sc_int<T>(0));
        e[c] = sc_int<T>(1);
        std::vector<T> x = lu_solve_factored(f, e);
        for (std::size_t r = 0; r < n; ++r) inv(r, c) = x[r];
    }
    return inv;
}

}  // namespace hratp
