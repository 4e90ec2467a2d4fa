#include "doctest.h"
#include "oracles.hpp"

#include "qzeta/continuation.hpp"
#include "qzeta/special_values.hpp"

using namespace qzeta;
using qzeta::testing::Rng;

namespace {
const SeriesConfig kCfg{pow10(-38), 400000};
bool close(const Complex& a, const Complex& b, const Real& tol) {
    return cabs(a - b) <= tol;
}
}  // namespace

TEST_CASE("pole_report classifies the singular-set conditions") {
    QParam half(Real(1) / 2);
    auto p1 = pole_report({Complex(1)}, half);
    CHECK(p1.in_pole_set);
    CHECK(p1.condition == PoleCondition::last_at_one);

    auto p0 = pole_report({Complex(0)}, half);
    CHECK_FALSE(p0.in_pole_set);  // needs a nonzero lattice shift

    Real lambda = 2 * atan2(Real(0), Real(-1)) / abs(half.log_q());
    auto p2 = pole_report({Complex(Real(-2), lambda)}, half);
    CHECK(p2.in_pole_set);
    CHECK(p2.condition == PoleCondition::last_nonpositive_shifted);
    CHECK(p2.m_witness == -2);
    CHECK(p2.n_witness == 1);

    auto p3 = pole_report({Complex(2), Complex(3)}, half);
    CHECK_FALSE(p3.in_pole_set);
    CHECK(p3.distance > Real(1) / 2);

    auto p4 = pole_report({Complex(-3), Complex(2)}, half);  // s1+s2 = -1
    CHECK(p4.in_pole_set);
    CHECK(p4.condition == PoleCondition::partial_sum_integer);
    CHECK(p4.index_j == 1);
    CHECK(p4.m_witness == -1);
}

TEST_CASE("fq_continued: overlap with the direct series") {
    Rng rng(23);
    QParam q6(Real(3) / 5);
    for (int i = 0; i < 20; ++i) {
        int d = 1 + (i % 2);
        SVec s(d), t(d);
        for (int j = 0; j < d; ++j) {
            s[j] = rng.complex_in(-1.5, 3.0, 1.0);
            t[j] = rng.complex_in(0.6, 2.5, 0.8);  // suffix sums comfortably positive
        }
        auto a = fq_direct(s, t, q6, kCfg);
        auto b = fq_continued(s, t, q6, kCfg);
        CHECK(close(a.value, b.value, a.error_bound + b.error_bound + pow10(-34)));
    }
}

TEST_CASE("fq_continued: poles in t and the s = 0 collapse") {
    QParam q6(Real(3) / 5);
    CHECK_THROWS_AS(fq_continued({Complex(2)}, {Complex(0)}, q6, kCfg), PoleError);
    CHECK_THROWS_AS(fq_continued({Complex(2)}, {Complex(-3)}, q6, kCfg), PoleError);

    // s = 0, t = 1: only the r = 0 term survives, giving q/(1-q)
    auto v = fq_continued({Complex(0)}, {Complex(1)}, q6, kCfg);
    CHECK(close(v.value, Complex(q6.q() / (1 - q6.q())), pow10(-50)));
}

TEST_CASE("qzeta_eval dispatch, poles, and negative-integer values") {
    QParam half(Real(1) / 2);
    CHECK_THROWS_AS(qzeta_eval({Complex(1)}, half, kCfg), PoleError);

    auto z0 = qzeta_eval({Complex(0)}, half, kCfg);
    CHECK(close(z0.value, qzeta_neg_closed(0, half), pow10(-45)));

    QParam q6(Real(3) / 5);
    auto z2 = qzeta_eval({Complex(-2)}, q6, kCfg);
    CHECK(close(z2.value, qzeta_neg_closed(2, q6), pow10(-45)));

    QParam q8(Real(4) / 5);
    auto direct = qzeta_direct({Complex(2), Complex(3)}, q8, kCfg);
    auto eval = qzeta_eval({Complex(2), Complex(3)}, q8, kCfg);
    CHECK(close(direct.value, eval.value, pow10(-36)));
}

TEST_CASE("shift_expand: identity, small cases, commutativity") {
    SVec s{Complex(Real(7) / 2)};
    auto id = shift_expand(s, {0});
    CHECK(id.terms.size() == 1);
    CHECK(id.terms[0].first == QPoly(1));

    auto one = shift_expand(s, {1});
    CHECK(one.terms.size() == 2);
    // zeta(s) + (1-q) zeta(s-1)
    CHECK(one.terms[1].first == QPoly(1));
    CHECK(one.terms[0].first == QPoly::one_minus_q_pow(1));
    CHECK(one.terms[0].second[0].shift == -1);

    auto two = shift_expand(s, {2});
    CHECK(two.terms.size() == 3);
    CHECK(two.terms[1].first == QPoly(2) * QPoly::one_minus_q_pow(1));
    CHECK(two.terms[0].first == QPoly::one_minus_q_pow(2));

    // S_1 S_2 = S_2 S_1 as exact combination identities
    SVec s2{Complex(Real(7) / 2), Complex(Real(9) / 2)};
    ZCombo base;
    base.basis = s2;
    base.terms.emplace_back(QPoly(1), LetterWord{Letter(0), Letter(1)});
    auto ab = apply_shift(apply_shift(base, 0), 1);
    auto ba = apply_shift(apply_shift(base, 1), 0);
    CHECK(ab.identical(ba));
    CHECK(ab.identical(shift_expand(s2, {1, 1})));
}

TEST_CASE("shift identity: f_q(s; s-1-n) matches the expansion") {
    QParam q6(Real(3) / 5);
    SVec s{Complex(Real(7) / 2), Complex(Real(9) / 2)};
    for (std::vector<long> n : {std::vector<long>{1, 0}, {0, 2}, {2, 1}}) {
        SVec t(2);
        for (int j = 0; j < 2; ++j) t[j] = s[j] - Complex(1 + n[j]);
        Complex lhs = fq_direct(s, t, q6, kCfg).value;
        auto combo = shift_expand(s, n);
        Complex rhs;
        for (const auto& [coeff, word] : combo.terms)
            rhs += Complex(coeff.eval(q6.q())) *
                   qzeta_eval(combo.word_values(word), q6, kCfg).value;
        CHECK(close(lhs, rhs, pow10(-33)));
    }
}

TEST_CASE("numeric residue at (1,-n) and at regular points") {
    for (double qd : {0.5, 0.7}) {
        QParam qp{Real(qd)};
        for (long n = 0; n <= 4; ++n) {
            auto est = numeric_residue({Complex(1), Complex(-n)}, qp, kCfg);
            Complex target = Complex((qp.q() - 1) / qp.log_q()) * qzeta_neg_closed(n, qp);
            CHECK(cabs(est.value - target) <= 10 * est.residual + pow10(-30));
        }
    }
    // regular point: residue extrapolates to ~0
    QParam q6(Real(3) / 5);
    auto reg = numeric_residue({Complex(Real(5) / 2), Complex(3)}, q6, kCfg);
    CHECK(cabs(reg.value) < pow10(-8));
}

TEST_CASE("iterated limits at (0,0) in both orders") {
    QParam half(Real(1) / 2);
    auto s2 = iterated_limit(0, 0, LimitOrder::s2_first, half, kCfg);
    CHECK(cabs(s2.value - kgen2_value(0, 0, LimitOrder::s2_first, half)) <=
          10 * s2.residual);
    auto s1 = iterated_limit(0, 0, LimitOrder::s1_first, half, kCfg);
    CHECK(cabs(s1.value - kgen2_value(0, 0, LimitOrder::s1_first, half)) <=
          10 * s1.residual);
    // the two orders genuinely differ at the indeterminacy corner
    CHECK(cabs(s1.value - s2.value) > pow10(-3));
}

TEST_CASE("q -> 1 extrapolation") {
    auto conste = q_to_1_limit([](const QParam&) { return Complex(Real(22) / 7); }, 3, 8);
    CHECK(conste.value == Complex(Real(22) / 7));

    SeriesConfig cfg{pow10(-25), 400000};
    auto z2 = q_to_1_limit(
        [&](const QParam& qp) { return qzeta_direct({Complex(2)}, qp, cfg).value; });
    Real pi = atan2(Real(0), Real(-1));
    CHECK(cabs(z2.value - Complex(pi * pi / 6)) < pow10(-3));

    auto zm1 = q_to_1_limit(
        [](const QParam& qp) { return qzeta_neg_closed(1, qp); });
    CHECK(cabs(zm1.value - Complex(Real(-1) / 12)) < pow10(-4));
}
