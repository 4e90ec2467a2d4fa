#pragma once

#include "qzeta/classical.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/richardson.hpp"
#include "qzeta/zcombo.hpp"

#include <functional>

namespace qzeta {

enum class PoleCondition {
    none,
    last_at_one,                // s_d in 1 + (2 pi i / log q) Z
    last_nonpositive_shifted,   // s_d in Z_{<=0} + (2 pi i / log q) Z_{!=0}
    partial_sum_integer,        // s_j+...+s_d in Z_{<= d-j+1} + lattice, j < d
};

const char* pole_condition_name(PoleCondition c);

struct PoleReport {
    bool in_pole_set = false;
    PoleCondition condition = PoleCondition::none;
    int index_j = 0;      // 1-based level of the matched condition
    long m_witness = 0;   // integer part of the nearest singular point
    long n_witness = 0;   // imaginary-lattice index of the nearest singular point
    Real distance{};      // min over conditions, in the relevant functional
    std::string describe() const;
};

/// Classifies s against the three singular-set conditions of the q-side
/// pole set, measuring distance both along the real direction and the
/// (2 pi / |log q|)-spaced imaginary lattice.
PoleReport pole_report(const SVec& s, const QParam& qp);

/// Meromorphic continuation of f_q by the binomial expansion
/// (1-q)^{wt(s)} sum_r prod_j C(s_j+r_j-1, r_j) q^{j(r_j+t_j)} / (1 - q^{w_j}),
/// w_j = sum_{i>=j} (r_i + t_i). Any denominator inside the pole threshold
/// aborts with the offending (j, r) witness.
EvalResult fq_continued(const SVec& s, const SVec& t, const QParam& qp,
                        const SeriesConfig& cfg);

/// The same expansion specialized to t = s - 1. Exact nonpositive-integer
/// last coordinates are regular here: the vanishing binomial factor and
/// vanishing denominator resolve to -1/log q times the reduced term.
EvalResult qzeta_continued(const SVec& s, const QParam& qp, const SeriesConfig& cfg);

/// zeta_q(s): direct series deep inside the convergence region, the
/// continuation expansion otherwise. Points in the pole set are rejected
/// with their PoleReport.
EvalResult qzeta_eval(const SVec& s, const QParam& qp, const SeriesConfig& cfg);

/// Continuation of Li_{q;n}(z) by
/// (1-q)^{sum n} sum_r prod_j C(n_j+r_j-1, r_j) z_j^j q^{j r_j} / (1 - (z_j...z_d) q^{R_j}).
EvalResult qpolylog_continued(const std::vector<long>& n, const SVec& z,
                              const QParam& qp, const SeriesConfig& cfg);

/// S_1^{n_1} ... S_d^{n_d} zeta(s) as an exact combination
/// sum_{r <= n} prod_j C(n_j, r_j) (1-q)^{r_j} zeta_q(s - r).
ZCombo shift_expand(const SVec& s, const std::vector<long>& n);

/// One application of the shifting operator on coordinate j (0-based):
/// each term zeta(w) becomes zeta(w) + (1-q) zeta(w - e_j).
ZCombo apply_shift(const ZCombo& combo, int j);

/// Residue of zeta_q at a simple pole, approached along the last
/// coordinate: Richardson limit of h * zeta_q(point + h e_last) on
/// h_j = 1e-2 * 2^{-j}.
LimitEstimate numeric_residue(const SVec& point, const QParam& qp,
                              const SeriesConfig& cfg, int levels = 9);

/// Nested one-variable limits of zeta_q(s1,s2) at (-m,-n). s2_first gives
/// zeta_q(-m,-n), s1_first gives zeta_q^R(-m,-n). The inner ladder is
/// scaled by the current outer offset so the inner expansion stays inside
/// its convergence radius.
LimitEstimate iterated_limit(long m, long n, LimitOrder order, const QParam& qp,
                             const SeriesConfig& cfg, int levels = 8);

/// Richardson extrapolation of evaluator(q_j) in the variable 1-q on
/// q_j = 1 - 2^{-j}, j = j_min..j_max.
LimitEstimate q_to_1_limit(const std::function<Complex(const QParam&)>& evaluator,
                           int j_min = 3, int j_max = 10, int precision = 25);

}  // namespace qzeta
