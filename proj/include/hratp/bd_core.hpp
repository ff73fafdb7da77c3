#pragma once

// The compact bidiagonal-decomposition representation BD(A) and the
// operations around it: Neville elimination, expansion of a BD back to a
// dense matrix, transposition, sign conjugation, total-positivity signature
// checks, and a plain-text serialization.
//
// Storage convention for an N x N matrix A = F_{N-1}...F_1 D G_1...G_{N-1}
// (0-based indices throughout):
//   cell(r, c) with r > c : multiplier m_{r,c} of the Neville elimination of A
//   cell(r, r)            : diagonal pivot p_r
//   cell(r, c) with r < c : multiplier of the elimination of A^T, mirrored.
// Factor F_k carries cell(j, j-k) at matrix position (j, j-1) for j >= k,
// and G_k carries cell(j-k, j) at position (j-1, j).

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hratp/dense.hpp"
#include "hratp/scalar.hpp"

namespace hratp {

enum class TpClass { tp_certified, sign_mixed };
enum class TpSignature { stp, tp, not_certified };

template <class T>
struct BDMatrix {
    std::size_t order = 0;
    std::vector<T> cells;  // order x order, row-major
    TpClass tp_class = TpClass::sign_mixed;

    BDMatrix() = default;
    explicit BDMatrix(std::size_t n) : order(n), cells(n * n, sc_int<T>(0)) {}

    T& cell(std::size_t r, std::size_t c) { return cells[r * order + c]; }
    const T& cell(std::size_t r, std::size_t c) const { return cells[r * order + c]; }

    friend bool operator==(const BDMatrix& a, const BDMatrix& b) {
        return a.order == b.order && a.cells == b.cells;
    }
};

template <class T>
struct NevilleTrace {
    std::vector<DenseMatrix<T>> steps;  // A^(1), ..., A^(N)
    DenseMatrix<T> multipliers;         // strictly lower triangular
    std::vector<T> pivots;              // diagonal pivots
};

// Signals that the elimination met a zero pivot with a nonzero entry below
// it; such matrices are outside the scope of row-exchange-free NE.
class row_exchange_required : public std::runtime_error {
public:
    row_exchange_required()
        : std::runtime_error("Neville elimination requires a row exchange") {}
};

// Neville elimination without row exchanges. Each step subtracts from every
// row a multiple of the row immediately above; rows whose upstairs entry is
// exactly zero are kept unchanged. No epsilon thresholding: an entry is a
// zero pivot only if it is exactly zero.
template <class T>
NevilleTrace<T> neville_eliminate(const DenseMatrix<T>& a) {
    if (a.rows() != a.cols()) throw std::domain_error("neville_eliminate: square input required");
    const std::size_t n = a.rows();
    const T zero = sc_int<T>(0);

    NevilleTrace<T> trace;
    trace.steps.reserve(n);
    trace.steps.push_back(a);
    trace.multipliers = DenseMatrix<T>(n, n);
    trace.pivots.assign(n, zero);

    DenseMatrix<T> cur = a;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        trace.pivots[k] = cur(k, k);
        DenseMatrix<T> nxt = cur;
        for (std::size_t i = k + 1; i < n; ++i) {
            const T& below = cur(i, k);
            const T& above = cur(i - 1, k);
            if (!sc_is_zero(above)) {
                T m = below / above;
                trace.multipliers(i, k) = m;
                nxt(i, k) = zero;
                for (std::size_t j = k + 1; j < n; ++j)
                    nxt(i, j) = cur(i, j) - m * cur(i - 1, j);
            } else if (!sc_is_zero(below)) {
                throw row_exchange_required();
            }
            // above == below == 0: row stays, multiplier stays 0.
        }
        trace.steps.push_back(nxt);
        cur = std::move(nxt);
    }
    trace.pivots[n - 1] = cur(n - 1, n - 1);
    for (std::size_t k = 0; k < n; ++k)
        if (sc_is_zero(trace.pivots[k]))
            throw std::domain_error("neville_eliminate: singular matrix (zero diagonal pivot)");
    return trace;
}

template <class T>
TpSignature check_tp_signature(const BDMatrix<T>& bd);

// Assemble BD(A) from the Neville eliminations of A and A^T.
template <class T>
BDMatrix<T> bd_from_dense(const DenseMatrix<T>& a) {
    NevilleTrace<T> low = neville_eliminate(a);
    NevilleTrace<T> up = neville_eliminate(a.transpose());
    const std::size_t n = a.rows();
    BDMatrix<T> bd(n);
    for (std::size_t r = 0; r < n; ++r) {
        bd.cell(r, r) = low.pivots[r];
        for (std::size_t c = 0; c < r; ++c) {
            bd.cell(r, c) = low.multipliers(r, c);
            bd.cell(c, r) = up.multipliers(r, c);
        }
    }
    bd.tp_class = check_tp_signature(bd) == TpSignature::not_certified ? TpClass::sign_mixed
                                                                       : TpClass::tp_certified;
    return bd;
}

// Multiply the factorization back out: F_{N-1}...F_1 D G_1...G_{N-1}.
// For a TP-certified BD every operation adds products of nonnegative terms.
template <class T>
DenseMatrix<T> expand(const BDMatrix<T>& bd) {
    const std::size_t n = bd.order;
    DenseMatrix<T> m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = bd.cell(i, i);
    for (std::size_t k = 1; k < n; ++k) {  // F_k, innermost (k = 1) first
        for (std::size_t j = n; j-- > k;) {
            const T& f = bd.cell(j, j - k);
            if (sc_is_zero(f)) continue;
            for (std::size_t c = 0; c < n; ++c) m(j, c) = m(j, c) + f * m(j - 1, c);
        }
    }
    for (std::size_t k = 1; k < n; ++k) {  // G_k
        for (std::size_t j = n; j-- > k;) {
            const T& g = bd.cell(j - k, j);
            if (sc_is_zero(g)) continue;
            for (std::size_t r = 0; r < n; ++r) m(r, j) = m(r, j) + g * m(r, j - 1);
        }
    }
    return m;
}

// BD of the transpose: mirror across the diagonal.
template <class T>
BDMatrix<T> transpose_bd(const BDMatrix<T>& bd) {
    BDMatrix<T> t(bd.order);
    for (std::size_t r = 0; r < bd.order; ++r)
        for (std::size_t c = 0; c < bd.order; ++c) t.cell(c, r) = bd.cell(r, c);
    t.tp_class = bd.tp_class;
    return t;
}

// BD of J A J with J = diag((-1)^i): all off-diagonal cells change sign.
template <class T>
BDMatrix<T> j_conjugate_bd(const BDMatrix<T>& bd) {
    BDMatrix<T> r = bd;
    for (std::size_t i = 0; i < bd.order; ++i)
        for (std::size_t j = 0; j < bd.order; ++j)
            if (i != j) r.cell(i, j) = -r.cell(i, j);
    r.tp_class = check_tp_signature(r) == TpSignature::not_certified ? TpClass::sign_mixed
                                                                     : TpClass::tp_certified;
    return r;
}

// Classify the stored decomposition:
//   STP            all pivots and all off-diagonal multipliers positive,
//   TP             pivots positive, multipliers nonnegative, and zeros
//                  propagate away from the diagonal (down each column below
//                  it, right along each row above it),
//   not_certified  otherwise.
template <class T>
TpSignature check_tp_signature(const BDMatrix<T>& bd) {
    const std::size_t n = bd.order;
    const T zero = sc_int<T>(0);
    bool strict = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(bd.cell(i, i) > zero)) return TpSignature::not_certified;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const T& v = bd.cell(i, j);
            if (v < zero) return TpSignature::not_certified;
            if (sc_is_zero(v)) strict = false;
        }
    }
    if (strict) return TpSignature::stp;
    for (std::size_t c = 0; c < n; ++c) {  // zeros propagate down columns
        bool seen_zero = false;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sc_is_zero(bd.cell(r, c)))
                seen_zero = true;
            else if (seen_zero)
                return TpSignature::not_certified;
        }
    }
    for (std::size_t r = 0; r < n; ++r) {  // zeros propagate along rows
        bool seen_zero = false;
        for (std::size_t c = r + 1; c < n; ++c) {
            if (sc_is_zero(bd.cell(r, c)))
                seen_zero = true;
            else if (seen_zero)
                return TpSignature::not_certified;
        }
    }
    return TpSignature::tp;
}

// Plain-text serialization: a header line "BD n=<order>" followed by one row
// of entries per line. Rational entries round-trip exactly.
template <class T>
void write_bd(std::ostream& os, const BDMatrix<T>& bd) {
    os << "BD n=" << bd.order << "\n";
    for (std::size_t r = 0; r < bd.order; ++r) {
        for (std::size_t c = 0; c < bd.order; ++c) {
            if (c) os << ' ';
            os << scalar_traits<T>::to_string(bd.cell(r, c));
        }
        os << "\n";
    }
}

template <class T>
BDMatrix<T> read_bd(std::istream& is) {
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("read_bd: missing header");
    const std::string prefix = "BD n=";
    if (header.rfind(prefix, 0) != 0) throw std::runtime_error("read_bd: bad header");
    std::size_t n = std::stoul(header.substr(prefix.size()));
    if (n == 0) throw std::runtime_error("read_bd: empty order");
    BDMatrix<T> bd(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::string tok;
            if (!(is >> tok)) throw std::runtime_error("read_bd: truncated data");
            bd.cell(r, c) = scalar_traits<T>::from_string(tok);
        }
    bd.tp_class = check_tp_signature(bd) == TpSignature::not_certified ? TpClass::sign_mixed
                                                                       : TpClass::tp_certified;
    return bd;
}

template <class T>
std::string bd_to_string(const BDMatrix<T>& bd) {
    std::ostringstream os;
    write_bd(os, bd);
    return os.str();
}

template <class T>
BDMatrix<T> bd_from_string(const std::string& s) {
    std::istringstream is(s);
    return read_bd<T>(is);
}

}  // namespace hratp
