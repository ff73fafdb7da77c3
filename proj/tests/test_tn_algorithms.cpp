#include <doctest.h>

#include <cmath>

#include "hratp/oracle.hpp"
#include "hratp/tn_algorithms.hpp"

using namespace hratp;

namespace {

BDMatrix<Rational> identity_bd(std::size_t n) {
    BDMatrix<Rational> bd(n);
    for (std::size_t i = 0; i < n; ++i) bd.cell(i, i) = Rational(1);
    bd.tp_class = TpClass::tp_certified;
    return bd;
}

NodeSequence<Rational> nodes123() {
    return NodeSequence<Rational>({Rational(1), Rational(2), Rational(3)},
                                  SignClass::increasing_positive);
}

}  // namespace

TEST_CASE("classify_sign_pattern") {
    using V = std::vector<double>;
    CHECK(classify_sign_pattern(V{1, -2, 3}) == SignPattern::alternating);
    CHECK(classify_sign_pattern(V{-1, 2, -3}) == SignPattern::alternating);
    CHECK(classify_sign_pattern(V{1, 2, 3}) == SignPattern::constant);
    CHECK(classify_sign_pattern(V{-1, -5}) == SignPattern::constant);
    CHECK(classify_sign_pattern(V{1, 2, -3}) == SignPattern::other);
    CHECK(classify_sign_pattern(V{1, 0, 1}) == SignPattern::other);
    CHECK(classify_sign_pattern(V{4}) == SignPattern::constant);
    CHECK(classify_sign_pattern(V{}) == SignPattern::other);
}

TEST_CASE("tn_product: identity, dense-product oracle, errors") {
    BDMatrix<Rational> h = bd_hilbert<Rational>(2);
    CHECK(tn_product(identity_bd(3), h).cells == h.cells);
    CHECK(tn_product(h, identity_bd(3)).cells == h.cells);

    // V(1,2,3) * L^T for q=1, alpha=-1, n=2
    QAbelParams<Rational> p(Rational(1), Rational(-1), 2);
    BDMatrix<Rational> prod = tn_product(bd_vandermonde(nodes123()),
                                         transpose_bd(bd_abel_change(p)));
    CHECK(expand(prod) == expand(bd_vandermonde(nodes123())) * expand(bd_abel_change(p)).transpose());

    CHECK(expand(tn_product(h, h)) == exact_hilbert<Rational>(2) * exact_hilbert<Rational>(2));

    CHECK_THROWS_AS(tn_product(h, identity_bd(4)), std::domain_error);
    QAbelParams<Rational> bad(Rational(1), Rational(1), 2);
    BDMatrix<Rational> signed_bd = bd_abel_change(bad);
    REQUIRE(signed_bd.tp_class == TpClass::sign_mixed);
    CHECK_THROWS_AS(tn_product(signed_bd, h), hra_error);
}

TEST_CASE("tn_product exactness over catalog pairs") {
    for (int n : {3, 5, 8}) {
        std::vector<Rational> nd;
        for (int i = 1; i <= n + 1; ++i) nd.push_back(Rational(i, n + 1));
        NodeSequence<Rational> ns(nd, SignClass::increasing_positive);
        QAbelParams<Rational> p(Rational(1, 2), Rational(-1), n);
        std::vector<BDMatrix<Rational>> factors{
            bd_vandermonde(ns), bd_abel_change(p), bd_hilbert<Rational>(n),
            transpose_bd(bd_abel_change(p)), bd_wronskian_monomials(Rational(2), n)};
        for (const auto& a : factors)
            for (const auto& b : factors)
                CHECK(expand(tn_product(a, b)) == expand(a) * expand(b));
    }
}

TEST_CASE("tn_solve on exact examples") {
    std::vector<Rational> d{Rational(5), Rational(-2), Rational(7)};
    SolveResult<Rational> sid = tn_solve(identity_bd(3), d);
    CHECK(sid.x == d);

    // frozen from the exact-rational dense solve oracle: V(1,2,3) x = (1,-1,1)
    // has x = (7,-8,2), i.e. the interpolant 2t^2 - 8t + 7.
    BDMatrix<Rational> v = bd_vandermonde(nodes123());
    std::vector<Rational> alt{Rational(1), Rational(-1), Rational(1)};
    CHECK(reference_solve(exact_vandermonde<Rational>({Rational(1), Rational(2), Rational(3)}), alt) ==
          std::vector<Rational>{Rational(7), Rational(-8), Rational(2)});
    SolveResult<Rational> sv = tn_solve(v, alt);
    CHECK(sv.x == std::vector<Rational>{Rational(7), Rational(-8), Rational(2)});
    CHECK(sv.report.guaranteed);
    CHECK(expand(v).apply(sv.x) == alt);

    std::vector<Rational> same{Rational(1), Rational(1), Rational(1)};
    SolveResult<Rational> sc = tn_solve(v, same);
    CHECK_FALSE(sc.report.guaranteed);
    CHECK(expand(v).apply(sc.x) == same);  // still exact in rational arithmetic

    CHECK_THROWS_AS(tn_solve(v, std::vector<Rational>{Rational(1)}), std::domain_error);
    QAbelParams<Rational> bad(Rational(1), Rational(1), 2);
    CHECK_THROWS_AS(tn_solve(bd_abel_change(bad), alt), hra_error);
}

TEST_CASE("tn_solve residual property in doubles (componentwise backward form)") {
    // |A x - d|_i <= tol * (|A| |x|)_i : the attainable componentwise
    // residual statement for ill-conditioned TP systems.
    for (int n : {10, 20}) {
        std::vector<double> nd;
        for (int i = 1; i <= n + 1; ++i) nd.push_back(double(i) / (n + 1));
        NodeSequence<double> ns(nd, SignClass::increasing_positive);
        QAbelParams<double> p(1.0, -1.0, n);
        BDMatrix<double> a = tn_product(bd_vandermonde(ns), transpose_bd(bd_abel_change(p)));
        std::vector<double> d(n + 1);
        for (int i = 0; i <= n; ++i) d[i] = (i % 2 == 0 ? 1.0 : -1.0) * (100.0 + 7.0 * i);
        SolveResult<double> s = tn_solve(a, d);
        REQUIRE(s.report.guaranteed);
        DenseMatrix<double> ad = expand(a);
        for (int i = 0; i <= n; ++i) {
            double residual = 0, scale = 0;
            for (int j = 0; j <= n; ++j) {
                residual += ad(i, j) * s.x[j];
                scale += std::fabs(ad(i, j) * s.x[j]);
            }
            residual -= d[i];
            CHECK(std::fabs(residual) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("tn_inverse_expand") {
    DenseMatrix<Rational> iid = tn_inverse_expand(identity_bd(4));
    CHECK(iid == DenseMatrix<Rational>::identity(4));

    DenseMatrix<Rational> hinv = tn_inverse_expand(bd_hilbert<Rational>(2));
    long long expect[3][3] = {{9, -36, 30}, {-36, 192, -180}, {30, -180, 180}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(hinv(i, j) == Rational(expect[i][j]));

    // inverse identity with the spec's kappa-scaled off-diagonal bound
    for (int n : {6, 10}) {
        std::vector<double> nd;
        for (int i = 1; i <= n + 1; ++i) nd.push_back(double(i * i) / ((n + 1.0) * (n + 1.0)));
        NodeSequence<double> ns(nd, SignClass::increasing_positive);
        QAbelParams<double> p(2.0, -0.1, n);
        BDMatrix<double> bd = tn_product(bd_vandermonde(ns), transpose_bd(bd_abel_change(p)));
        DenseMatrix<double> inv = tn_inverse_expand(bd);
        DenseMatrix<double> a = expand(bd);
        DenseMatrix<double> prod = a * inv;
        double norm_a = 0, norm_inv = 0;
        for (int i = 0; i <= n; ++i) {
            double ra = 0, ri = 0;
            for (int j = 0; j <= n; ++j) {
                ra += std::fabs(a(i, j));
                ri += std::fabs(inv(i, j));
            }
            norm_a = std::max(norm_a, ra);
            norm_inv = std::max(norm_inv, ri);
        }
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                double target = i == j ? 1.0 : 0.0;
                CHECK(std::fabs(prod(i, j) - target) <= 1e-12 * norm_a * norm_inv);
            }
        // checkerboard signs
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (inv(i, j) != 0.0) CHECK(((i + j) % 2 == 0) == (inv(i, j) > 0));
    }
}

TEST_CASE("tn_inverse_expand is entrywise accurate against the exact inverse") {
    const int n = 10;
    std::vector<Rational> nd_r;
    std::vector<double> nd_d;
    for (int i = 1; i <= n + 1; ++i) {
        nd_r.push_back(Rational(static_cast<long long>(i) * i,
                                static_cast<long long>(n + 1) * (n + 1)));
        nd_d.push_back(double(i) * i / ((n + 1.0) * (n + 1.0)));
    }
    QAbelParams<Rational> pr(Rational(1), Rational(-1, 10), n);
    QAbelParams<double> pd(1.0, -0.1, n);
    DenseMatrix<Rational> exact_inv = reference_inverse(exact_collocation(pr, nd_r));
    NodeSequence<double> ns(nd_d, SignClass::increasing_positive);
    DenseMatrix<double> inv = tn_inverse_expand(bd_collocation(pd, ns).bd);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            double ref = exact_inv(i, j).to_double();
            CHECK(std::fabs(inv(i, j) - ref) <= 1e-13 * std::fabs(ref));
        }
}

TEST_CASE("tn_eigenvalues: triangular and small symmetric cases") {
    BDMatrix<double> diag(3);
    diag.cell(0, 0) = 1.0;
    diag.cell(1, 1) = 0.5;
    diag.cell(2, 2) = 0.125;
    diag.tp_class = TpClass::tp_certified;
    SpectrumResult<double> ev = tn_eigenvalues(diag);
    CHECK(ev.values == std::vector<double>{1.0, 0.5, 0.125});

    // lower triangular L: eigenvalues are the pivots q^{C(i,2)}
    QAbelParams<double> p(2.0, -1.0, 4);
    SpectrumResult<double> evl = tn_eigenvalues(bd_abel_change(p));
    std::vector<double> expect{64.0, 8.0, 2.0, 1.0, 1.0};
    REQUIRE(evl.values.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(evl.values[i] == doctest::Approx(expect[i]).epsilon(1e-12));

    // Hilbert 2x2: roots of lambda^2 - (4/3) lambda + 1/12
    SpectrumResult<double> evh = tn_eigenvalues(bd_hilbert<double>(1));
    double disc = std::sqrt(16.0 / 9.0 - 4.0 / 12.0);
    CHECK(evh.values[0] == doctest::Approx((4.0 / 3.0 + disc) / 2).epsilon(1e-14));
    CHECK(evh.values[1] == doctest::Approx((4.0 / 3.0 - disc) / 2).epsilon(1e-14));
    CHECK(evh.report.guaranteed);

    QAbelParams<double> bad(1.0, 1.0, 2);
    CHECK_THROWS_AS(tn_eigenvalues(bd_abel_change(bad)), hra_error);
}

TEST_CASE("tn_singular_values: diagonal, symmetric, J-invariance") {
    BDMatrix<double> diag(3);
    diag.cell(0, 0) = 3.0;
    diag.cell(1, 1) = 2.0;
    diag.cell(2, 2) = 1.0;
    diag.tp_class = TpClass::tp_certified;
    CHECK(tn_singular_values(diag).values == std::vector<double>{3.0, 2.0, 1.0});

    SpectrumResult<double> sv = tn_singular_values(bd_hilbert<double>(1));
    SpectrumResult<double> ev = tn_eigenvalues(bd_hilbert<double>(1));
    for (int i = 0; i < 2; ++i) CHECK(sv.values[i] == doctest::Approx(ev.values[i]).epsilon(1e-13));

    NodeSequence<double> pos({1, 2, 3, 4}, SignClass::increasing_positive);
    NodeSequence<double> neg({-1, -2, -3, -4}, SignClass::decreasing_negative);
    SpectrumResult<double> sp = tn_singular_values(bd_vandermonde(pos));
    SpectrumResult<double> sn = tn_singular_values(bd_vandermonde_J(neg));
    REQUIRE(sp.values.size() == sn.values.size());
    for (std::size_t i = 0; i < sp.values.size(); ++i)
        CHECK(sn.values[i] == doctest::Approx(sp.values[i]).epsilon(1e-12));
}

TEST_CASE("spectra of TP-certified BDs are strictly positive") {
    NodeSequence<double> ns({0.2, 0.4, 0.6, 0.8, 1.0}, SignClass::increasing_positive);
    QAbelParams<double> p(0.5, -1.0, 4);
    TaggedBD<double> coll = bd_collocation(p, ns);
    for (const BDMatrix<double>& bd :
         {bd_vandermonde(ns), bd_hilbert<double>(4), coll.bd}) {
        for (double v : tn_eigenvalues(bd).values) CHECK(v > 0.0);
        for (double v : tn_singular_values(bd).values) CHECK(v > 0.0);
    }
    // tagged access: case b withdraws the eigenvalue guarantee, keeps it for
    // singular values
    NodeSequence<double> neg({-0.2, -0.4, -0.6, -0.8, -1.0}, SignClass::decreasing_negative);
    QAbelParams<double> pj(0.5, 1.0, 4);
    TaggedBD<double> tb = bd_collocation(pj, neg);
    CHECK_FALSE(tn_eigenvalues(tb).report.guaranteed);
    CHECK(tn_singular_values(tb).report.guaranteed);
    CHECK(tn_eigenvalues(coll).report.guaranteed);
}

TEST_CASE("bd_collocation: both cases, exact expansion oracle") {
    // case a, alpha = 0: A = V * diag(q^{C(i,2)})
    NodeSequence<Rational> ns({Rational(1), Rational(2), Rational(3)},
                              SignClass::increasing_positive);
    QAbelParams<Rational> p0(Rational(2), Rational(0), 2);
    TaggedBD<Rational> t0 = bd_collocation(p0, ns);
    CHECK(t0.tag == JTag::none);
    DenseMatrix<Rational> v = exact_vandermonde<Rational>({Rational(1), Rational(2), Rational(3)});
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(expand(t0.bd)(r, c) == v(r, c) * Rational::pow(Rational(2), c * (c - 1) / 2));

    // case a, q=1, alpha=-1: expand equals the dense collocation matrix
    QAbelParams<Rational> p1(Rational(1), Rational(-1), 2);
    TaggedBD<Rational> t1 = bd_collocation(p1, ns);
    CHECK(expand(t1.bd) ==
          exact_collocation(p1, {Rational(1), Rational(2), Rational(3)}));

    // case b: expand equals A * J entrywise
    std::vector<Rational> negn{Rational(-1, 4), Rational(-1, 2), Rational(-3, 4), Rational(-1)};
    NodeSequence<Rational> nneg(negn, SignClass::decreasing_negative);
    QAbelParams<Rational> p2(Rational(2), Rational(1), 3);
    TaggedBD<Rational> t2 = bd_collocation(p2, nneg);
    CHECK(t2.tag == JTag::right);
    DenseMatrix<Rational> aj = exact_collocation(p2, negn);
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 1; c < 4; c += 2) aj(r, c) = -aj(r, c);
    CHECK(expand(t2.bd) == aj);

    // hypothesis violations name the broken case
    QAbelParams<Rational> posa(Rational(2), Rational(1), 2);
    CHECK_THROWS_AS(bd_collocation(posa, ns), std::domain_error);
    QAbelParams<Rational> nega(Rational(2), Rational(-1), 3);
    CHECK_THROWS_AS(bd_collocation(nega, nneg), std::domain_error);
    QAbelParams<Rational> wrong_n(Rational(2), Rational(-1), 5);
    CHECK_THROWS_AS(bd_collocation(wrong_n, ns), std::domain_error);
}

TEST_CASE("bd_wronskian_qabel: both cases") {
    // x = 0: first row of W is (1, 0, ..., 0)
    QAbelParams<Rational> p(Rational(2), Rational(-1), 3);
    TaggedBD<Rational> t = bd_wronskian_qabel(p, Rational(0));
    CHECK(t.tag == JTag::none);
    DenseMatrix<Rational> w = expand(t.bd);
    CHECK(w(0, 0) == Rational(1));
    for (int c = 1; c < 4; ++c) CHECK(w(0, c) == Rational(0));

    // q=1, alpha=-1, x=2: expand equals the exact differentiation oracle
    QAbelParams<Rational> p1(Rational(1), Rational(-1), 3);
    TaggedBD<Rational> t1 = bd_wronskian_qabel(p1, Rational(2));
    CHECK(expand(t1.bd) == exact_wronskian(p1, Rational(2)));

    // x = 50 TP-certified (case a)
    QAbelParams<double> pd(0.5, -1.0, 10);
    TaggedBD<double> td = bd_wronskian_qabel(pd, 50.0);
    CHECK(td.bd.tp_class == TpClass::tp_certified);

    // case b is the J-conjugated Wronskian
    QAbelParams<Rational> p2(Rational(2), Rational(1), 3);
    TaggedBD<Rational> t2 = bd_wronskian_qabel(p2, Rational(-2));
    CHECK(t2.tag == JTag::both);
    CHECK(expand(t2.bd) == j_conjugate_dense(exact_wronskian(p2, Rational(-2))));

    QAbelParams<Rational> mis(Rational(2), Rational(-1), 3);
    CHECK_THROWS_AS(bd_wronskian_qabel(mis, Rational(-2)), std::domain_error);
}

TEST_CASE("bd_gramian_qabel") {
    QAbelParams<Rational> p0(Rational(2), Rational(0), 2);
    BDMatrix<Rational> g0 = bd_gramian_qabel(p0);
    DenseMatrix<Rational> h = exact_hilbert<Rational>(2);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            Rational dq = Rational::pow(Rational(2), r * (r - 1) / 2) *
                          Rational::pow(Rational(2), c * (c - 1) / 2);
            CHECK(expand(g0)(r, c) == dq * h(r, c));
        }

    QAbelParams<Rational> p(Rational(1), Rational(-1), 2);
    CHECK(expand(bd_gramian_qabel(p)) == exact_gramian(p));

    QAbelParams<Rational> p_n0(Rational(2), Rational(-1), 0);
    BDMatrix<Rational> g_n0 = bd_gramian_qabel(p_n0);
    CHECK(g_n0.order == 1);
    CHECK(g_n0.cell(0, 0) == Rational(1));

    QAbelParams<Rational> bad(Rational(2), Rational(1), 2);
    CHECK_THROWS_AS(bd_gramian_qabel(bad), std::domain_error);

    CHECK(check_tp_signature(bd_gramian_qabel(QAbelParams<Rational>(Rational(2), Rational(-1), 3))) ==
          TpSignature::stp);
}

TEST_CASE("solve_collocation exact residuals in both cases") {
    QAbelParams<Rational> p1(Rational(1), Rational(-1), 0);
    NodeSequence<Rational> n0({Rational(1)}, SignClass::increasing_positive);
    SolveResult<Rational> s0 = solve_collocation(p1, n0, {Rational(5)});
    CHECK(s0.x == std::vector<Rational>{Rational(5)});

    // case a residual
    NodeSequence<Rational> ns({Rational(1), Rational(2), Rational(3)},
                              SignClass::increasing_positive);
    QAbelParams<Rational> pa(Rational(2), Rational(-1), 2);
    std::vector<Rational> d{Rational(3), Rational(-4), Rational(6)};
    SolveResult<Rational> sa = solve_collocation(pa, ns, d);
    CHECK(exact_collocation(pa, ns.nodes).apply(sa.x) == d);
    CHECK(sa.report.guaranteed);

    // case b residual: solves A y = d through BD(A J)
    std::vector<Rational> negn{Rational(-1, 4), Rational(-1, 2), Rational(-3, 4)};
    NodeSequence<Rational> nb(negn, SignClass::decreasing_negative);
    QAbelParams<Rational> pb(Rational(2), Rational(1), 2);
    SolveResult<Rational> sb = solve_collocation(pb, nb, d);
    CHECK(exact_collocation(pb, negn).apply(sb.x) == d);
    CHECK(sb.report.guaranteed);
}

TEST_CASE("solve_wronskian exact residuals and sign-pattern gating") {
    QAbelParams<Rational> p0(Rational(1), Rational(-1), 0);
    SolveResult<Rational> s0 = solve_wronskian(p0, Rational(7), {Rational(4)});
    CHECK(s0.x == std::vector<Rational>{Rational(4)});

    QAbelParams<Rational> pa(Rational(2), Rational(-1), 3);
    std::vector<Rational> alt{Rational(2), Rational(-1), Rational(3), Rational(-5)};
    SolveResult<Rational> sa = solve_wronskian(pa, Rational(2), alt);
    CHECK(exact_wronskian(pa, Rational(2)).apply(sa.x) == alt);
    CHECK(sa.report.guaranteed);

    // case b: constant-sign d is the guaranteed pattern
    QAbelParams<Rational> pb(Rational(2), Rational(1), 3);
    std::vector<Rational> same{Rational(2), Rational(1), Rational(3), Rational(5)};
    SolveResult<Rational> sb = solve_wronskian(pb, Rational(-2), same);
    CHECK(exact_wronskian(pb, Rational(-2)).apply(sb.x) == same);
    CHECK(sb.report.guaranteed);
    SolveResult<Rational> sb2 = solve_wronskian(pb, Rational(-2), alt);
    CHECK_FALSE(sb2.report.guaranteed);
    CHECK(exact_wronskian(pb, Rational(-2)).apply(sb2.x) == alt);
}
