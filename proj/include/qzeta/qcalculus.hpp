#pragma once

#include "qzeta/qseries.hpp"

#include <functional>
#include <vector>

namespace qzeta {

using PointFn = std::function<Complex(const Complex&)>;

/// D_q f(z) = (f(z) - f(qz)) / ((1-q) z).
Complex jackson_derivative(const PointFn& f, const Complex& z, const QParam& qp);

/// Jackson integral sum_{i>=0} f(a + q^i(b-a)) (q^i - q^{i+1}) (b-a).
EvalResult jackson_integral(const PointFn& f, const Real& a, const Real& b,
                            const QParam& qp, const SeriesConfig& cfg);

/// The 1-forms appearing in the iterated integrals: d_qt/(t-a), d_qt/t,
/// b d_qt/(t-b)^2, and t d_qt/((t-a)(t-b)).
struct QForm {
    enum class Kind { simple_pole, inverse_t, double_pole, ratio2 };
    Kind kind = Kind::inverse_t;
    Complex a;
    Complex b;

    static QForm dt_over_t() { return {Kind::inverse_t, {}, {}}; }
    static QForm pole(Complex p) { return {Kind::simple_pole, std::move(p), {}}; }
    static QForm dpole(Complex p) { return {Kind::double_pole, {}, std::move(p)}; }
    static QForm ratio(Complex p1, Complex p2) {
        return {Kind::ratio2, std::move(p1), std::move(p2)};
    }

    Complex eval(const Real& t) const;
    /// distance from t to the nearest pole of the form (infinite for d_qt/t
    /// at t != 0)
    Real pole_distance(const Real& t) const;
};

/// Nested Jackson integral int_0^b f_1 o f_2 o ... o f_L, inner integrals
/// memoized on the shared lattice b q^e. Patterns must not start with
/// d_qt/t (the innermost integral would diverge at 0).
EvalResult q_iterated(const std::vector<QForm>& forms, const Real& upper,
                      const QParam& qp, const SeriesConfig& cfg);

/// Li_{q;n}(z) as (-1)^d times the Chen-pattern q-iterated integral with
/// poles a_j = 1 / prod_{i>=j} z_i.
EvalResult polylog_iterated(const std::vector<long>& n, const SVec& z,
                            const QParam& qp, const SeriesConfig& cfg);

/// |D_q[fg](x) - D_qf g - f D_qg - x(q-1) D_qf D_qg|.
Real q_leibniz_check(const PointFn& f, const PointFn& g, const Complex& x,
                     const QParam& qp);

/// Residual of the q-polylog differential identity at coordinate j
/// (1-based): weight n_j >= 2 lowers the weight, n_j = 1 merges the
/// argument into a neighbor.
Real verify_qdiff(const std::vector<long>& n, const SVec& z, int j,
                  const QParam& qp, const SeriesConfig& cfg);

}  // namespace qzeta
