#pragma once

// Algorithms on BD representations of nonsingular totally positive matrices:
// product, linear solve, inverse expansion, eigenvalues and singular values,
// plus the composite constructors for q-Abel collocation, Wronskian and
// Gramian matrices.
//
// Everything here manipulates the factor chains
//     A = F_{N-1} ... F_1 D G_1 ... G_{N-1}
// directly. The two workhorses are an exchange step that moves a lower
// bidiagonal factor left past an upper one, and a merge step that folds a
// bidiagonal factor into a canonical staircase chain. Both are written in a
// differential form whose only operations on totally positive data are
// products, quotients and additions of nonnegative numbers, so high relative
// accuracy is preserved in floating point and results are exact over
// rationals.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hratp/bd_catalog.hpp"
#include "hratp/bd_core.hpp"
#include "hratp/qcalc.hpp"
#include "hratp/scalar.hpp"

namespace hratp {

// Raised when an operation whose contract promises high relative accuracy is
// handed a decomposition it cannot certify.
class hra_error : public std::runtime_error {
public:
    explicit hra_error(const std::string& what) : std::runtime_error(what) {}
};

enum class SignPattern { alternating, constant, other };

struct HRAReport {
    bool guaranteed = false;
    std::string reason;
};

template <class T>
struct SolveResult {
    std::vector<T> x;
    HRAReport report;
};

template <class T>
struct SpectrumResult {
    std::vector<T> values;
    HRAReport report;
};

// Strictly alternating / strictly one-signed / anything else (zeros count as
// breaking both patterns).
template <class T>
SignPattern classify_sign_pattern(const std::vector<T>& d) {
    const T zero = sc_int<T>(0);
    if (d.empty()) return SignPattern::other;
    for (const T& v : d)
        if (v == zero) return SignPattern::other;
    bool alternating = true, constant = true;
    for (std::size_t i = 1; i < d.size(); ++i) {
        bool prev_pos = d[i - 1] > zero, pos = d[i] > zero;
        if (pos == prev_pos) alternating = false;
        else constant = false;
    }
    if (d.size() == 1) return SignPattern::constant;
    if (alternating) return SignPattern::alternating;
    if (constant) return SignPattern::constant;
    return SignPattern::other;
}

namespace detail {

// General bidiagonal factor of size N: diag[0..N-1] plus off[0..N-2], the
// latter sitting at (i+1, i) for lower factors and (i, i+1) for upper ones.
template <class T>
struct Bidiag {
    std::vector<T> diag, off;

    static Bidiag unit(std::size_t n) {
        Bidiag f;
        f.diag.assign(n, sc_int<T>(1));
        f.off.assign(n ? n - 1 : 0, sc_int<T>(0));
        return f;
    }
};

template <class T>
void require_certified(const BDMatrix<T>& bd, const char* op) {
    if (bd.tp_class != TpClass::tp_certified)
        throw hra_error(std::string(op) + ": HRA not guaranteed for a non-certified decomposition");
}

// Left-to-right factor words read off a BD. Lower word [F_{N-1}, ..., F_1],
// upper word [G_1, ..., G_{N-1}]; all factors unit-diagonal.
template <class T>
std::vector<Bidiag<T>> lower_word(const BDMatrix<T>& bd) {
    const std::size_t n = bd.order;
    std::vector<Bidiag<T>> w;
    if (n < 2) return w;
    w.reserve(n - 1);
    for (std::size_t k = n - 1; k >= 1; --k) {
        Bidiag<T> f = Bidiag<T>::unit(n);
        for (std::size_t i = k - 1; i + 1 < n; ++i) f.off[i] = bd.cell(i + 1, i + 1 - k);
        w.push_back(std::move(f));
    }
    return w;
}

template <class T>
std::vector<Bidiag<T>> upper_word(const BDMatrix<T>& bd) {
    const std::size_t n = bd.order;
    std::vector<Bidiag<T>> w;
    if (n < 2) return w;
    w.reserve(n - 1);
    for (std::size_t k = 1; k <= n - 1; ++k) {
        Bidiag<T> g = Bidiag<T>::unit(n);
        for (std::size_t i = k - 1; i + 1 < n; ++i) g.off[i] = bd.cell(i + 1 - k, i + 1);
        w.push_back(std::move(g));
    }
    return w;
}

// Exchange step: rewrite U * L as L' * U' with L' unit diagonal (the
// diagonal mass stays on the upper side, which is what makes the LR
// dynamics converge toward upper triangular). With rho_0 = c_0 a_0,
//     c'_i   = rho_i + w_i b_i
//     w'_i   = w_i a_{i+1}
//     b'_i   = c_{i+1} b_i / c'_i
//     rho_{i+1} = c_{i+1} a_{i+1} rho_i / c'_i
// reproduces the tridiagonal product entrywise; rho_i equals
// c'_i - w_i b_i exactly, so no subtraction is ever evaluated and on
// positive data every quantity stays positive. U is overwritten with U',
// L with L'.
template <class T>
void swap_ul(Bidiag<T>& u, Bidiag<T>& l) {
    const std::size_t n = l.diag.size();
    const T zero = sc_int<T>(0);
    T rho = u.diag[0] * l.diag[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        T cp = rho + u.off[i] * l.off[i];
        if (cp == zero)
            throw std::runtime_error("swap_ul: zero diagonal produced (input not positive?)");
        T wp = u.off[i] * l.diag[i + 1];
        T bp = u.diag[i + 1] * l.off[i] / cp;
        rho = u.diag[i + 1] * l.diag[i + 1] * rho / cp;
        u.diag[i] = cp;
        u.off[i] = wp;
        l.off[i] = bp;
        l.diag[i] = sc_int<T>(1);
    }
    u.diag[n - 1] = rho;
    l.diag[n - 1] = sc_int<T>(1);
}

// Merge step for two unit lower bidiagonals: B1 * B2 = C * B' where B' is
// unit lower bidiagonal and the carry C is unit lower bidiagonal with its
// first off entry vacated (entries shifted one step away from the diagonal).
// With rho_i = f_i - b2_i the recurrences stay subtraction-free:
//     f_0 = b1_0 + b2_0,           rho_0 = b1_0,
//     g_i = b1_i b2_{i-1} / f_{i-1},
//     rho_i = b1_i rho_{i-1} / f_{i-1},
//     f_i = rho_i + b2_i,
// with the 0/0 case (f_{i-1} = 0 forces b2_{i-1} = 0) resolved structurally.
template <class T>
void merge_ll(const std::vector<T>& b1, const std::vector<T>& b2,
              std::vector<T>& g, std::vector<T>& f) {
    const std::size_t m = b1.size();
    const T zero = sc_int<T>(0);
    g.assign(m, zero);
    f.assign(m, zero);
    if (m == 0) return;
    T rho = b1[0];
    f[0] = b1[0] + b2[0];
    for (std::size_t i = 1; i < m; ++i) {
        if (f[i - 1] == zero) {
            g[i] = zero;
            rho = b1[i];
        } else {
            g[i] = b1[i] * b2[i - 1] / f[i - 1];
            rho = b1[i] * rho / f[i - 1];
        }
        f[i] = rho + b2[i];
    }
}

// Canonical staircase chain of unit lower factors, fac[k] holding the off
// array of F_k (entries only at index >= k-1). Absorbing a unit lower
// bidiagonal on the right keeps the chain canonical.
template <class T>
struct Staircase {
    std::size_t n = 0;
    std::vector<std::vector<T>> fac;  // fac[k], k = 1..n-1; fac[0] unused

    explicit Staircase(std::size_t order) : n(order) {
        fac.assign(n, std::vector<T>());
        for (std::size_t k = 1; k < n; ++k) fac[k].assign(n - 1, sc_int<T>(0));
    }
};

template <class T>
bool all_zero(const std::vector<T>& v) {
    const T zero = sc_int<T>(0);
    for (const T& x : v)
        if (!(x == zero)) return false;
    return true;
}

template <class T>
void absorb(Staircase<T>& chain, const std::vector<T>& incoming) {
    std::vector<T> carry = incoming, g, f;
    for (std::size_t k = 1; k < chain.n; ++k) {
        if (all_zero(carry)) return;
        merge_ll(chain.fac[k], carry, g, f);
        chain.fac[k] = f;
        carry = g;
    }
    if (!all_zero(carry))
        throw std::logic_error("absorb: carry escaped past the last staircase level");
}

template <class T>
Staircase<T> lower_staircase(const BDMatrix<T>& bd) {
    Staircase<T> s(bd.order);
    for (std::size_t k = 1; k < bd.order; ++k)
        for (std::size_t i = k - 1; i + 1 < bd.order; ++i)
            s.fac[k][i] = bd.cell(i + 1, i + 1 - k);
    return s;
}

template <class T>
Staircase<T> upper_staircase(const BDMatrix<T>& bd) {
    // Transposed view: the upper chain of bd is the lower chain of bd^T.
    Staircase<T> s(bd.order);
    for (std::size_t k = 1; k < bd.order; ++k)
        for (std::size_t i = k - 1; i + 1 < bd.order; ++i)
            s.fac[k][i] = bd.cell(i + 1 - k, i + 1);
    return s;
}

}  // namespace detail

// BD(A*B) from BD(A) and BD(B); exact over rationals, subtraction-free in
// floating point for TP-certified operands.
template <class T>
BDMatrix<T> tn_product(const BDMatrix<T>& a, const BDMatrix<T>& b) {
    using detail::Bidiag;
    if (a.order != b.order) throw std::domain_error("tn_product: order mismatch");
    detail::require_certified(a, "tn_product");
    detail::require_certified(b, "tn_product");
    const std::size_t n = a.order, m = n ? n - 1 : 0;

    auto uppers = detail::upper_word(a);   // G^A_1 .. G^A_m
    auto lowersB = detail::lower_word(b);  // F^B_m .. F^B_1

    // Move every lower factor of B left past the upper chain of A. The
    // exchanges leave the lowers unit and shift all diagonal mass into the
    // transformed uppers.
    std::vector<Bidiag<T>> mid;
    mid.reserve(m);
    for (std::size_t t = 0; t < m; ++t) {
        Bidiag<T> cur = lowersB[t];
        for (std::size_t s = m; s-- > 0;) detail::swap_ul(uppers[s], cur);
        mid.push_back(std::move(cur));
    }

    // Word so far: [L^A chain] D^A [mid lowers, unit] [uppers, diag-carrying]
    // D^B [U^B chain]. Slide D^A right through the unit lowers, then strip
    // the diagonals of the transformed uppers and pull them (and D^B) left
    // into the pending diagonal, which lands in the canonical center slot.
    std::vector<T> pending(n);
    for (std::size_t i = 0; i < n; ++i) pending[i] = a.cell(i, i);
    for (Bidiag<T>& fct : mid)
        for (std::size_t i = 0; i < m; ++i)
            fct.off[i] = pending[i + 1] * fct.off[i] / pending[i];
    std::vector<std::vector<T>> emitted;  // unit uppers, left to right
    emitted.reserve(m);
    for (std::size_t p = 0; p < m; ++p) {
        std::vector<T> off(m, sc_int<T>(0));
        for (std::size_t i = 0; i < m; ++i) off[i] = uppers[p].off[i] / uppers[p].diag[i];
        for (std::size_t t = 0; t < p; ++t)
            for (std::size_t i = 0; i < m; ++i)
                emitted[t][i] = emitted[t][i] * uppers[p].diag[i + 1] / uppers[p].diag[i];
        for (std::size_t i = 0; i < n; ++i) pending[i] = pending[i] * uppers[p].diag[i];
        emitted.push_back(std::move(off));
    }
    std::vector<T> db(n);
    for (std::size_t i = 0; i < n; ++i) db[i] = b.cell(i, i);
    for (std::size_t t = 0; t < m; ++t)
        for (std::size_t i = 0; i < m; ++i) emitted[t][i] = emitted[t][i] * db[i + 1] / db[i];
    for (std::size_t i = 0; i < n; ++i) pending[i] = pending[i] * db[i];
    std::vector<T>& delta = pending;

    // Fold the loose factors into canonical staircase chains.
    detail::Staircase<T> low = detail::lower_staircase(a);
    for (const Bidiag<T>& fct : mid) detail::absorb(low, fct.off);
    detail::Staircase<T> up = detail::upper_staircase(b);
    for (std::size_t t = m; t-- > 0;) detail::absorb(up, emitted[t]);

    BDMatrix<T> r(n);
    for (std::size_t i = 0; i < n; ++i) r.cell(i, i) = delta[i];
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = k - 1; i + 1 < n; ++i) {
            r.cell(i + 1, i + 1 - k) = low.fac[k][i];
            r.cell(i + 1 - k, i + 1) = up.fac[k][i];
        }
    r.tp_class = check_tp_signature(r) == TpSignature::not_certified ? TpClass::sign_mixed
                                                                     : TpClass::tp_certified;
    return r;
}

// Solve A x = d through the bidiagonal factors, O(n^2). The answer is HRA
// when d strictly alternates in sign; other patterns still get an answer,
// flagged as not guaranteed.
template <class T>
SolveResult<T> tn_solve(const BDMatrix<T>& bd, const std::vector<T>& d) {
    detail::require_certified(bd, "tn_solve");
    const std::size_t n = bd.order;
    if (d.size() != n) throw std::domain_error("tn_solve: length mismatch");
    std::vector<T> x = d;
    // F_{N-1}^{-1} ... then F_1^{-1}
    for (std::size_t k = n - 1; k >= 1; --k) {
        for (std::size_t j = k; j < n; ++j) {
            const T& mij = bd.cell(j, j - k);
            if (!sc_is_zero(mij)) x[j] = x[j] - mij * x[j - 1];
        }
        if (k == 1) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sc_is_zero(bd.cell(i, i))) throw std::domain_error("tn_solve: singular pivot");
        x[i] = x[i] / bd.cell(i, i);
    }
    // G_1^{-1} ... then G_{N-1}^{-1}
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t j = n - 1; j >= k; --j) {
            const T& w = bd.cell(j - k, j);
            if (!sc_is_zero(w)) x[j - 1] = x[j - 1] - w * x[j];
            if (j == k) break;
        }
    }
    SolveResult<T> r;
    r.x = std::move(x);
    SignPattern p = classify_sign_pattern(d);
    r.report.guaranteed = p == SignPattern::alternating;
    r.report.reason = r.report.guaranteed
                          ? "TP-certified decomposition with alternating right-hand side"
                          : "right-hand side does not alternate in sign";
    return r;
}

// Expand A^{-1} entrywise. J A^{-1} J is a product of nonnegative elementary
// factors, so it is accumulated NIC; the checkerboard signs are applied at
// the end. O(n^3) elementary column updates.
template <class T>
DenseMatrix<T> tn_inverse_expand(const BDMatrix<T>& bd) {
    detail::require_certified(bd, "tn_inverse_expand");
    const std::size_t n = bd.order;
    DenseMatrix<T> m = DenseMatrix<T>::identity(n);
    auto col_axpy = [&](std::size_t dst, std::size_t src, const T& w) {
        if (sc_is_zero(w)) return;
        for (std::size_t r = 0; r < n; ++r) m(r, dst) = m(r, dst) + w * m(r, src);
    };
    // (J G_k^{-1} J) for k = N-1 .. 1: elementary uppers, ascending positions.
    for (std::size_t k = n - 1; k >= 1; --k) {
        for (std::size_t j = k; j < n; ++j) col_axpy(j, j - 1, bd.cell(j - k, j));
        if (k == 1) break;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (sc_is_zero(bd.cell(i, i)))
            throw std::domain_error("tn_inverse_expand: singular pivot");
        T inv = sc_int<T>(1) / bd.cell(i, i);
        for (std::size_t r = 0; r < n; ++r) m(r, i) = m(r, i) * inv;
    }
    // (J F_k^{-1} J) for k = 1 .. N-1: elementary lowers, descending positions.
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t j = n - 1; j >= k; --j) {
            col_axpy(j - 1, j, bd.cell(j, j - k));
            if (j == k) break;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if ((i + j) % 2 == 1) m(i, j) = -m(i, j);
    return m;
}

// Eigenvalues of a TP-certified BD, descending. Factored-form unshifted
// LR/qd iteration: each sweep refactors [uppers][lowers] into
// [lowers'][uppers'] with the exchange step and then rotates the word, a
// similarity. Lower off entries decay like ratios of consecutive
// eigenvalues; once a position is negligible in every lower factor it is
// zeroed, splitting the word. At convergence the matrix is upper triangular
// with eigenvalues equal to the per-position products of the lower factor
// diagonals. Triangular inputs short-circuit to their pivots.
template <class T>
SpectrumResult<T> tn_eigenvalues(const BDMatrix<T>& bd) {
    static_assert(!scalar_traits<T>::is_exact,
                  "eigenvalue iteration is for floating scalars; use the oracle for exact data");
    using detail::Bidiag;
    detail::require_certified(bd, "tn_eigenvalues");
    const std::size_t n = bd.order, m = n ? n - 1 : 0;
    SpectrumResult<T> res;
    res.report.guaranteed = true;
    res.report.reason = "TP-certified decomposition";

    bool lower_zero = true, upper_zero = true;
    for (std::size_t r = 0; r < n && (lower_zero || upper_zero); ++r)
        for (std::size_t c = 0; c < r; ++c) {
            if (!sc_is_zero(bd.cell(r, c))) lower_zero = false;
            if (!sc_is_zero(bd.cell(c, r))) upper_zero = false;
        }
    if (lower_zero || upper_zero) {
        // Triangular matrix: the pivots are the diagonal, hence the spectrum.
        for (std::size_t i = 0; i < n; ++i) res.values.push_back(bd.cell(i, i));
        std::stable_sort(res.values.begin(), res.values.end(), [](const T& a, const T& b) { return b < a; });
        return res;
    }

    // Cyclic similarity puts D in front; folding it into G_1 leaves a word
    // of diag-carrying uppers followed by unit lowers.
    auto uppers = detail::upper_word(bd);
    auto lowers = detail::lower_word(bd);
    for (std::size_t i = 0; i + 1 < n; ++i)
        uppers[0].off[i] = bd.cell(i, i) * uppers[0].off[i];
    for (std::size_t i = 0; i < n; ++i) uppers[0].diag[i] = bd.cell(i, i);

    const T zero = sc_int<T>(0);
    // Deflation threshold for the unit-normalized lower entries; comfortably
    // below eps^2 so zeroing perturbs the spectrum at noise level.
    const T tol = scalar_traits<T>::from_double(1e-32);
    const std::size_t max_sweeps = 40000;
    for (std::size_t sweep = 0;; ++sweep) {
        bool done = true;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            bool negligible = true;
            for (const Bidiag<T>& l : lowers)
                if (sc_abs(l.off[i]) > tol) {
                    negligible = false;
                    break;
                }
            if (negligible) {
                for (Bidiag<T>& l : lowers) l.off[i] = zero;
            } else {
                done = false;
            }
        }
        if (done) break;
        if (sweep >= max_sweeps)
            throw std::runtime_error("tn_eigenvalues: LR iteration did not converge");
        for (std::size_t t = 0; t < m; ++t) {
            Bidiag<T> cur = std::move(lowers[t]);
            for (std::size_t s = m; s-- > 0;) detail::swap_ul(uppers[s], cur);
            lowers[t] = std::move(cur);
        }
    }
    res.values.assign(n, sc_int<T>(1));
    for (const detail::Bidiag<T>& u : uppers)
        for (std::size_t i = 0; i < n; ++i) res.values[i] = res.values[i] * u.diag[i];
    std::stable_sort(res.values.begin(), res.values.end(), [](const T& a, const T& b) { return b < a; });
    return res;
}

// Singular values, descending: sqrt of the eigenvalues of BD(A^T A), whose
// BD is assembled NIC by tn_product, so the squared conditioning never
// touches the entries themselves.
template <class T>
SpectrumResult<T> tn_singular_values(const BDMatrix<T>& bd) {
    detail::require_certified(bd, "tn_singular_values");
    BDMatrix<T> ata = tn_product(transpose_bd(bd), bd);
    ata.tp_class = TpClass::tp_certified;  // product of certified factors
    SpectrumResult<T> eig = tn_eigenvalues(ata);
    SpectrumResult<T> res;
    res.report = eig.report;
    res.values.reserve(eig.values.size());
    for (const T& v : eig.values) res.values.push_back(scalar_traits<T>::sqrt(v));
    return res;
}

// ---------------------------------------------------------------------------
// Composite decompositions for the q-Abel families.

// Whether a stored BD represents the matrix itself, the matrix times J, or
// the full conjugation J M J; solvers undo the tag.
enum class JTag { none, right, both };

template <class T>
struct TaggedBD {
    BDMatrix<T> bd;
    JTag tag = JTag::none;
};

// Collocation matrix A^{(q,alpha)} at the given nodes.
//   increasing positive nodes, alpha <= 0: BD(A) = BD(V) * BD(L^T)
//   decreasing negative nodes, alpha >= 0: BD(A J) = BD(V J) * BD(J L^T J)
template <class T>
TaggedBD<T> bd_collocation(const QAbelParams<T>& params, const NodeSequence<T>& nodes) {
    if (nodes.nodes.size() != static_cast<std::size_t>(params.n) + 1)
        throw std::domain_error("bd_collocation: node count must equal n+1");
    const T zero = sc_int<T>(0);
    if (nodes.sign_class == SignClass::increasing_positive) {
        if (params.alpha > zero)
            throw std::domain_error(
                "bd_collocation: increasing positive nodes require alpha <= 0 "
                "(total positivity hypothesis)");
        return {tn_product(bd_vandermonde(nodes), transpose_bd(bd_abel_change(params))),
                JTag::none};
    }
    if (params.alpha < zero)
        throw std::domain_error(
            "bd_collocation: decreasing negative nodes require alpha >= 0 "
            "(total positivity hypothesis)");
    return {tn_product(bd_vandermonde_J(nodes), transpose_bd(bd_abel_change_J(params))),
            JTag::right};
}

// Wronskian matrix W(A_0,...,A_n)(x).
//   x >= 0, alpha <= 0: BD(W) = BD(W_monomial) * BD(L^T)
//   x <= 0, alpha >= 0: BD(J W J) = BD(J W_monomial J) * BD(J L^T J)
template <class T>
TaggedBD<T> bd_wronskian_qabel(const QAbelParams<T>& params, const T& x) {
    const T zero = sc_int<T>(0);
    if (x >= zero && params.alpha <= zero)
        return {tn_product(bd_wronskian_monomials(x, params.n),
                           transpose_bd(bd_abel_change(params))),
                JTag::none};
    if (x <= zero && params.alpha >= zero)
        return {tn_product(bd_wronskian_monomials_J(x, params.n),
                           transpose_bd(bd_abel_change_J(params))),
                JTag::both};
    throw std::domain_error(
        "bd_wronskian_qabel: requires x >= 0 with alpha <= 0, or x <= 0 with alpha >= 0");
}

// Gramian of the q-Abel basis under the inner product on [0,1]:
// BD(G) = BD(L) * BD(H) * BD(L^T), STP for alpha <= 0.
template <class T>
BDMatrix<T> bd_gramian_qabel(const QAbelParams<T>& params) {
    if (params.alpha > sc_int<T>(0))
        throw std::domain_error("bd_gramian_qabel: requires alpha <= 0 (total positivity)");
    BDMatrix<T> l = bd_abel_change(params);
    return tn_product(tn_product(l, bd_hilbert<T>(params.n)), transpose_bd(l));
}

template <class T>
std::vector<T> apply_j(std::vector<T> v) {
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return v;
}

// Spectra through a tagged decomposition. Singular values are unaffected by
// the J factors (J is orthogonal); eigenvalues of a conjugated decomposition
// are those of the stored matrix, so the guarantee is withdrawn outside the
// increasing-node case.
template <class T>
SpectrumResult<T> tn_eigenvalues(const TaggedBD<T>& t) {
    SpectrumResult<T> r = tn_eigenvalues(t.bd);
    if (t.tag != JTag::none) {
        r.report.guaranteed = false;
        r.report.reason =
            "eigenvalues computed for the J-conjugated matrix; the guarantee holds only "
            "for increasing positive nodes with alpha <= 0";
    }
    return r;
}

template <class T>
SpectrumResult<T> tn_singular_values(const TaggedBD<T>& t) {
    return tn_singular_values(t.bd);
}

// Solve A^{(q,alpha)} y = d. Case b solves the J-conjugated system and maps
// the solution back with y = J b.
template <class T>
SolveResult<T> solve_collocation(const QAbelParams<T>& params, const NodeSequence<T>& nodes,
                                 const std::vector<T>& d) {
    TaggedBD<T> t = bd_collocation(params, nodes);
    if (t.tag == JTag::none) return tn_solve(t.bd, d);
    SolveResult<T> inner = tn_solve(t.bd, d);
    inner.x = apply_j(std::move(inner.x));
    return inner;
}

// Solve W^{(q,alpha)}(x) y = d. Case b: y = J * solve(BD(JWJ), J d), which is
// HRA precisely when d has constant sign (J d then alternates).
template <class T>
SolveResult<T> solve_wronskian(const QAbelParams<T>& params, const T& x,
                               const std::vector<T>& d) {
    TaggedBD<T> t = bd_wronskian_qabel(params, x);
    if (t.tag == JTag::none) return tn_solve(t.bd, d);
    SolveResult<T> inner = tn_solve(t.bd, apply_j(d));
    inner.x = apply_j(std::move(inner.x));
    inner.report.guaranteed = classify_sign_pattern(d) == SignPattern::constant;
    inner.report.reason = inner.report.guaranteed
                              ? "constant-sign right-hand side maps to an alternating one"
                              : "right-hand side must have constant sign in the x <= 0 case";
    return inner;
}

}  // namespace hratp
