#include "doctest.h"
#include "oracles.hpp"

#include "qzeta/continuation.hpp"
#include "qzeta/qcalculus.hpp"

using namespace qzeta;
using qzeta::testing::Rng;

namespace {
const SeriesConfig kCfg{pow10(-36), 400000};
bool close(const Complex& a, const Complex& b, const Real& tol) {
    return cabs(a - b) <= tol;
}
}  // namespace

TEST_CASE("Jackson derivative on monomials and q-polylogs") {
    QParam q7(Real(7) / 10);
    auto sq = [](const Complex& z) { return z * z; };
    Complex z(Real(3) / 7, Real(1) / 5);
    CHECK(close(jackson_derivative(sq, z, q7), Complex(1 + q7.q()) * z, pow10(-52)));
    CHECK_THROWS_AS(jackson_derivative(sq, Complex(0), q7), DomainError);

    auto li1 = [&](const Complex& w) {
        return qpolylog_direct({1}, {w}, q7, kCfg).value;
    };
    Complex z4(Real(2) / 5);
    CHECK(close(jackson_derivative(li1, z4, q7),
                Complex(1) / (Complex(1) - z4), pow10(-33)));

    auto li2 = [&](const Complex& w) {
        return qpolylog_direct({2}, {w}, q7, kCfg).value;
    };
    Complex z3(Real(3) / 10);
    CHECK(close(jackson_derivative(li2, z3, q7), li1(z3) / z3, pow10(-33)));
}

TEST_CASE("Jackson integral: constants, FTC, q->1 limit") {
    QParam q6(Real(3) / 5);
    auto c = [](const Complex&) { return Complex(Real(5) / 3); };
    auto v = jackson_integral(c, Real(0), Real(1), q6, kCfg);
    CHECK(close(v.value, Complex(Real(5) / 3), pow10(-45)));

    // FTC for f(z) = z^3 on [0, 0.9]
    auto cube = [](const Complex& z) { return z * z * z; };
    auto dcube = [&](const Complex& z) { return jackson_derivative(cube, z, q6); };
    Real x = Real(9) / 10;
    auto ftc = jackson_integral(dcube, Real(0), x, q6, kCfg);
    CHECK(close(ftc.value, cube(Complex(x)), pow10(-45)));

    auto lim = q_to_1_limit([&](const QParam& qp) {
        SeriesConfig cfg{pow10(-25), 400000};
        auto sqf = [](const Complex& z) { return z * z; };
        return jackson_integral(sqf, Real(0), Real(1), qp, cfg).value;
    });
    CHECK(cabs(lim.value - Complex(Real(1) / 3)) < pow10(-4));
}

TEST_CASE("Jackson integrals are not additive over adjacent intervals") {
    QParam half(Real(1) / 2);
    auto f = [](const Complex& z) { return z; };
    Complex whole = jackson_integral(f, Real(0), Real(1), half, kCfg).value;
    Complex left = jackson_integral(f, Real(0), Real(1) / 2, half, kCfg).value;
    Complex right = jackson_integral(f, Real(1) / 2, Real(1), half, kCfg).value;
    CHECK(cabs(whole - left - right) > pow10(-3));
}

TEST_CASE("integrand singular on the lattice is rejected") {
    QParam half(Real(1) / 2);
    Real bad = half.qpow_int(2);  // lattice point of [0,1]
    auto f = [&](const Complex& z) { return Complex(1) / (z - Complex(bad)); };
    CHECK_THROWS_AS(jackson_integral(f, Real(0), Real(1), half, kCfg), Error);
}

TEST_CASE("q_iterated basics") {
    QParam q6(Real(3) / 5);
    CHECK_THROWS_AS(q_iterated({QForm::dt_over_t()}, Real(1), q6, kCfg), DomainError);

    // single pole form: int_0^1 d_qt/(t-a) = -Li_{q;1}(1/a)
    Complex a(Real(5) / 2, Real(1) / 2);
    auto v = q_iterated({QForm::pole(a)}, Real(1), q6, kCfg);
    Complex li = qpolylog_direct({1}, {Complex(1) / a}, q6, kCfg).value;
    CHECK(close(v.value, -li, pow10(-32)));

    // pole sitting on the lattice is rejected
    CHECK_THROWS_AS(
        q_iterated({QForm::pole(Complex(q6.qpow_int(3)))}, Real(1), q6, kCfg),
        PoleError);
}

TEST_CASE("depth-2 pattern reproduces Li_{q;1,1}") {
    QParam q6(Real(3) / 5);
    Complex z1(Real(2) / 5), z2(Real(1) / 3);
    Complex a1 = Complex(1) / (z1 * z2);
    Complex a2 = Complex(1) / z2;
    auto v = q_iterated({QForm::pole(a1), QForm::pole(a2)}, Real(1), q6, kCfg);
    Complex li = qpolylog_direct({1, 1}, {z1, z2}, q6, kCfg).value;
    CHECK(close(v.value, li, pow10(-32)));  // (-1)^2 = +1
}

TEST_CASE("zeta_q(2) from its iterated-integral pattern") {
    QParam q6(Real(3) / 5);
    auto v = q_iterated({QForm::pole(Complex(q6.qpow_int(-1))), QForm::dt_over_t()},
                        Real(1), q6, kCfg);
    CHECK(close(-v.value, qzeta_direct({Complex(2)}, q6, kCfg).value, pow10(-32)));
}

TEST_CASE("polylog_iterated agrees with the series on the polydisc") {
    Rng rng(43);
    QParam q6(Real(3) / 5);
    for (int i = 0; i < 10; ++i) {
        int d = 1 + (i % 2);
        std::vector<long> n;
        SVec z;
        for (int j = 0; j < d; ++j) {
            n.push_back(1 + (i + j) % 3);
            z.push_back(rng.complex_in(0.15, 0.8, 0.3));
        }
        auto it = polylog_iterated(n, z, q6, kCfg);
        auto se = qpolylog_direct(n, z, q6, kCfg);
        CHECK(close(it.value, se.value, pow10(-25)));
    }

    // outside the unit disc but off the singular set: matches continuation
    Complex z(Real(13) / 10, Real(2) / 5);
    auto it = polylog_iterated({2}, {z}, q6, kCfg);
    auto ct = qpolylog_continued({2}, {z}, q6, kCfg);
    CHECK(close(it.value, ct.value, pow10(-28)));

    // zeta_q(2,3) as an iterated integral
    auto zz = polylog_iterated({2, 3}, {Complex(q6.q()), Complex(q6.qpow_int(2))},
                               q6, kCfg);
    CHECK(close(zz.value, qzeta_direct({Complex(2), Complex(3)}, q6, kCfg).value,
                pow10(-30)));
}

TEST_CASE("singular set membership raises") {
    QParam q6(Real(3) / 5);
    CHECK_THROWS_AS(qpolylog_continued({1}, {Complex(q6.qpow_int(-2))}, q6, kCfg),
                    PoleError);
    CHECK_THROWS_AS(polylog_iterated({1}, {Complex(q6.qpow_int(-2))}, q6, kCfg),
                    PoleError);
}

TEST_CASE("q-Leibniz rule") {
    QParam q7(Real(7) / 10);
    auto id = [](const Complex& z) { return z; };
    CHECK(q_leibniz_check(id, id, Complex(Real(2) / 3), q7) == 0);

    auto f2 = [](const Complex& z) { return z * z; };
    auto f3 = [](const Complex& z) { return z * z * z; };
    CHECK(q_leibniz_check(f2, f3, Complex(Real(1) / 2), q7) < pow10(-52));

    auto li1 = [&](const Complex& z) { return qpolylog_direct({1}, {z}, q7, kCfg).value; };
    auto li2 = [&](const Complex& z) { return qpolylog_direct({2}, {z}, q7, kCfg).value; };
    CHECK(q_leibniz_check(li1, li2, Complex(Real(3) / 10), q7) < pow10(-32));

    // 20 random (x, q): FTC numerically for a series-defined function
    Rng rng(47);
    for (int i = 0; i < 20; ++i) {
        QParam qp{Real(rng.uniform(0.35, 0.85))};
        Real x{Real(rng.uniform(0.1, 0.9))};
        auto df = [&](const Complex& z) { return jackson_derivative(li2, z, qp); };
        auto ftc = jackson_integral(df, Real(0), x, qp, kCfg);
        CHECK(close(ftc.value, li2(Complex(x)) - li2(Complex(0)), pow10(-28)));
    }
}

TEST_CASE("q-difference identities for q-polylogs") {
    QParam q7(Real(7) / 10);
    CHECK(verify_qdiff({2}, {Complex(Real(2) / 5)}, 1, q7, kCfg) < pow10(-32));
    CHECK(verify_qdiff({1}, {Complex(Real(2) / 5)}, 1, q7, kCfg) < pow10(-32));
    CHECK(verify_qdiff({1, 2}, {Complex(Real(3) / 10), Complex(Real(2) / 5)}, 1, q7,
                       kCfg) < pow10(-31));
    CHECK(verify_qdiff({2, 1}, {Complex(Real(3) / 10), Complex(Real(2) / 5)}, 2, q7,
                       kCfg) < pow10(-31));
    CHECK(verify_qdiff({2, 3}, {Complex(Real(1) / 4), Complex(Real(1) / 3)}, 2, q7,
                       kCfg) < pow10(-31));
    CHECK(verify_qdiff({1, 1, 2},
                       {Complex(Real(1) / 4), Complex(Real(1) / 3), Complex(Real(1) / 5)},
                       2, q7, kCfg) < pow10(-30));
}
