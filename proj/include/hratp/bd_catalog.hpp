#pragma once

// Closed-form bidiagonal decompositions for the matrix families with known
// Neville elimination data: the q-Abel change-of-basis matrix (and its
// J-conjugate), Vandermonde matrices on both admissible node classes,
// Wronskian matrices of the monomials, and the Hilbert matrix. Every
// generator fills the BD cells with products and quotients of positive
// quantities; the only subtractions touch initial node data.

#include <stdexcept>
#include <vector>

#include "hratp/bd_core.hpp"
#include "hratp/qcalc.hpp"
#include "hratp/scalar.hpp"

namespace hratp {

enum class SignClass { increasing_positive, decreasing_negative };

// Strictly monotone collocation nodes. Validation is strict: every total
// positivity statement about Vandermonde-type matrices is conditional on the
// sign class, so ill-ordered nodes are rejected rather than reinterpreted.
template <class T>
struct NodeSequence {
    std::vector<T> nodes;
    SignClass sign_class;

    NodeSequence(std::vector<T> ns, SignClass sc) : nodes(std::move(ns)), sign_class(sc) {
        if (nodes.empty()) throw std::domain_error("NodeSequence: empty node list");
        const T zero = sc_int<T>(0);
        if (sign_class == SignClass::increasing_positive) {
            if (!(nodes.front() > zero))
                throw std::domain_error("NodeSequence: nodes must be strictly positive");
            for (std::size_t i = 1; i < nodes.size(); ++i)
                if (!(nodes[i] > nodes[i - 1]))
                    throw std::domain_error("NodeSequence: nodes must be strictly increasing");
        } else {
            if (!(nodes.front() < zero))
                throw std::domain_error("NodeSequence: nodes must be strictly negative");
            for (std::size_t i = 1; i < nodes.size(); ++i)
                if (!(nodes[i] < nodes[i - 1]))
                    throw std::domain_error("NodeSequence: nodes must be strictly decreasing");
        }
    }
};

namespace detail {
template <class T>
void classify(BDMatrix<T>& bd) {
    bd.tp_class = check_tp_signature(bd) == TpSignature::not_certified ? TpClass::sign_mixed
                                                                       : TpClass::tp_certified;
}
}  // namespace detail

// BD of the change-of-basis matrix L^{(q,alpha)} (q-Abel written in
// monomials). Lower triangular, so the upper cells vanish:
//   cell(r,r)   = q^{binom(r,2)}
//   cell(r,c)   = -alpha q^{c-1} ([r]/[r-1])^{r-c} [r-c]   for 1 <= c < r
//   cell(r,0)   = 0 for r >= 1.
// TP-certified exactly when alpha <= 0.
template <class T>
BDMatrix<T> bd_abel_change(const QAbelParams<T>& params) {
    const std::size_t n = static_cast<std::size_t>(params.n) + 1;
    const T& q = params.q;
    BDMatrix<T> bd(n);
    T dpow = sc_int<T>(1), qpow = sc_int<T>(1);  // q^{binom(r,2)}, q^{r-1}
    for (std::size_t r = 0; r < n; ++r) {
        if (r >= 1) {
            dpow = dpow * qpow;  // binom(r,2) = binom(r-1,2) + (r-1)
            qpow = qpow * q;
        }
        bd.cell(r, r) = dpow;
        if (r < 2) continue;
        T ratio = q_integer(static_cast<long long>(r), q) /
                  q_integer(static_cast<long long>(r) - 1, q);
        T rpow = ratio;  // ([r]/[r-1])^{r-c}
        T qc = sc_pow(q, r - 2);  // q^{c-1} at c = r-1
        for (std::size_t c = r - 1; c >= 1; --c) {
            bd.cell(r, c) =
                -params.alpha * qc * rpow * q_integer(static_cast<long long>(r - c), q);
            if (c > 1) {
                rpow = rpow * ratio;
                qc = qc / q;
            }
        }
    }
    detail::classify(bd);
    return bd;
}

// BD of L_J^{(q,alpha)} = J L^{(q,alpha)} J: the off-diagonal entries flip
// sign, so it is TP-certified exactly when alpha >= 0.
template <class T>
BDMatrix<T> bd_abel_change_J(const QAbelParams<T>& params) {
    QAbelParams<T> flipped(params.q, -params.alpha, params.n);
    BDMatrix<T> bd = bd_abel_change(flipped);
    detail::classify(bd);
    return bd;
}

// BD of the Vandermonde matrix at strictly increasing positive nodes:
//   cell(r,c) = prod_{k=1}^{c} (t_r - t_{r-k})/(t_{r-1} - t_{r-k-1})  (r > c)
//   cell(r,r) = prod_{k<r} (t_r - t_k)
//   cell(r,c) = t_r                                                   (r < c)
// Always STP on its domain.
template <class T>
BDMatrix<T> bd_vandermonde(const NodeSequence<T>& nodes) {
    if (nodes.sign_class != SignClass::increasing_positive)
        throw std::domain_error("bd_vandermonde: requires increasing positive nodes");
    const auto& t = nodes.nodes;
    const std::size_t n = t.size();
    BDMatrix<T> bd(n);
    for (std::size_t r = 0; r < n; ++r) {
        T piv = sc_int<T>(1);
        for (std::size_t k = 0; k < r; ++k) piv = piv * (t[r] - t[k]);
        bd.cell(r, r) = piv;
        T mult = sc_int<T>(1);  // running product over k = 1..c
        for (std::size_t c = 0; c < r; ++c) {
            if (c >= 1) mult = mult * (t[r] - t[r - c]) / (t[r - 1] - t[r - c - 1]);
            bd.cell(r, c) = mult;
        }
        for (std::size_t c = r + 1; c < n; ++c) bd.cell(r, c) = t[r];
    }
    detail::classify(bd);
    return bd;
}

// BD of V J for strictly decreasing negative nodes: the lower multipliers
// match bd_vandermonde, the pivots gain the sign (-1)^r (positive here), and
// the upper cells become -t_r (positive here). STP on its domain.
template <class T>
BDMatrix<T> bd_vandermonde_J(const NodeSequence<T>& nodes) {
    if (nodes.sign_class != SignClass::decreasing_negative)
        throw std::domain_error("bd_vandermonde_J: requires decreasing negative nodes");
    const auto& t = nodes.nodes;
    const std::size_t n = t.size();
    BDMatrix<T> bd(n);
    for (std::size_t r = 0; r < n; ++r) {
        T piv = sc_int<T>(1);
        for (std::size_t k = 0; k < r; ++k) piv = piv * (t[r] - t[k]);
        bd.cell(r, r) = (r % 2 == 1) ? -piv : piv;
        T mult = sc_int<T>(1);
        for (std::size_t c = 0; c < r; ++c) {
            if (c >= 1) mult = mult * (t[r] - t[r - c]) / (t[r - 1] - t[r - c - 1]);
            bd.cell(r, c) = mult;
        }
        for (std::size_t c = r + 1; c < n; ++c) bd.cell(r, c) = -t[r];
    }
    detail::classify(bd);
    return bd;
}

// BD of the Wronskian of the monomial basis at x >= 0: upper triangular with
// factorial pivots and constant x above the diagonal.
template <class T>
BDMatrix<T> bd_wronskian_monomials(const T& x, int degree) {
    if (x < sc_int<T>(0))
        throw std::domain_error("bd_wronskian_monomials: requires x >= 0 (use the J variant)");
    const std::size_t n = static_cast<std::size_t>(degree) + 1;
    BDMatrix<T> bd(n);
    T fact = sc_int<T>(1);
    for (std::size_t r = 0; r < n; ++r) {
        if (r >= 1) fact = fact * sc_int<T>(static_cast<long long>(r));
        bd.cell(r, r) = fact;
        for (std::size_t c = r + 1; c < n; ++c) bd.cell(r, c) = x;
    }
    detail::classify(bd);
    return bd;
}

// BD of J W J for x <= 0: identical with -x above the diagonal.
template <class T>
BDMatrix<T> bd_wronskian_monomials_J(const T& x, int degree) {
    if (x > sc_int<T>(0))
        throw std::domain_error("bd_wronskian_monomials_J: requires x <= 0");
    return bd_wronskian_monomials(-x, degree);
}

// BD of the Hilbert matrix (1/(i+j+1))_{0<=i,j<=n}:
//   cell(r,c) = r^2 / ((r+c+1)(r+c))        (r > c; mirrored with c^2 above)
//   cell(r,r) = (r!)^4 / ((2r+1)! (2r)!)
// computed incrementally so only positive products and quotients appear.
template <class T>
BDMatrix<T> bd_hilbert(int degree) {
    if (degree < 0) throw std::domain_error("bd_hilbert: degree must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(degree) + 1;
    BDMatrix<T> bd(n);
    T piv = sc_int<T>(1);
    for (std::size_t r = 0; r < n; ++r) {
        if (r >= 1) {
            long long rr = static_cast<long long>(r);
            // ratio of consecutive diagonal pivots: r^4 / ((2r+1)(2r)^2(2r-1))
            piv = piv * sc_int<T>(rr) * sc_int<T>(rr) * sc_int<T>(rr) * sc_int<T>(rr) /
                  (sc_int<T>(2 * rr + 1) * sc_int<T>(2 * rr) * sc_int<T>(2 * rr) *
                   sc_int<T>(2 * rr - 1));
        }
        bd.cell(r, r) = piv;
        for (std::size_t c = 0; c < r; ++c) {
            long long rr = static_cast<long long>(r), cc = static_cast<long long>(c);
            T denom = sc_int<T>(rr + cc + 1) * sc_int<T>(rr + cc);
            bd.cell(r, c) = sc_int<T>(rr) * sc_int<T>(rr) / denom;
            bd.cell(c, r) = bd.cell(r, c);
        }
    }
    detail::classify(bd);
    return bd;
}

}  // namespace hratp
