#pragma once

#include "qzeta/qcore.hpp"

#include <vector>

namespace qzeta {

/// Signature vector (s_1, ..., s_d); depth d >= 1.
using SVec = std::vector<Complex>;

Complex svec_weight(const SVec& s);

struct SeriesConfig {
    Real tol = pow10(-30);   // absolute target error
    long max_terms = 400000; // cap per nesting level

    static SeriesConfig for_param(const QParam& qp) {
        SeriesConfig cfg;
        cfg.tol = qp.default_tol();
        return cfg;
    }
};

/// f_q(s; t) = sum_{0<k_1<...<k_d} q^{sum k_j t_j} / prod [k_j]^{s_j}.
/// Requires Re(t_j+...+t_d) > 0 for every j. The nested sum collapses to a
/// single sweep over k with one running prefix per level.
EvalResult fq_direct(const SVec& s, const SVec& t, const QParam& qp,
                     const SeriesConfig& cfg);

/// zeta_q(s) = f_q(s; s-1); same code path as fq_direct.
EvalResult qzeta_direct(const SVec& s, const QParam& qp, const SeriesConfig& cfg);

/// Li_{q;n}(z) = sum_{0<k_1<...<k_d} prod z_j^{k_j} / [k_j]^{n_j}, |z_j| < 1.
EvalResult qpolylog_direct(const std::vector<long>& n, const SVec& z,
                           const QParam& qp, const SeriesConfig& cfg);

/// xi_q(j) = sum_{l>=1} q^{(j+1)l} / [l]^2.
EvalResult xi_q(long j, const QParam& qp, const SeriesConfig& cfg);

/// T^j zeta_q(gamma): sum_l (q^j - q^{jl})/(1-q^j) q^{(gamma-1)l}/[l]^gamma
/// for j >= 1, and its j->0 limit sum_l (l-1) q^{(gamma-1)l}/[l]^gamma.
EvalResult t_series(long j, long gamma, const QParam& qp, const SeriesConfig& cfg);

}  // namespace qzeta
