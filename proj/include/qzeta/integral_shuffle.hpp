#pragma once

#include "qzeta/qcalculus.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/zcombo.hpp"

#include <string>
#include <vector>

namespace qzeta {

/// Exact collapse-counting coefficient E(r,s;c) = (q-1)^c times the number
/// of shuffles of r u-forms and s v-forms with exactly c collapses.
QPoly e_coeff(long r, long s, long c);
BigInt e_count(long r, long s, long c);

/// T^j zeta_q(gamma) closed form for j >= 1:
/// -zeta_q(gamma) + sum_{i=1}^{gamma-2} (q-1)^i/(q^j-1) C(i+j-1,j-1) zeta_q(gamma-i)
///   + (q-1)^{gamma-2}/(q^j-1) (xi_q(j) - zeta_q(2)).
Complex t_closed(long j, long gamma, const QParam& qp, const SeriesConfig& cfg);

/// X_gamma(r,s) = Li_{q;r,gamma}(q^s, q^{gamma-1}) evaluated through its
/// zeta_q expansion; T^0 runs through the direct limit series.
EvalResult x_gamma(long gamma, long r, long s, const QParam& qp,
                   const SeriesConfig& cfg);

/// B_q(m,n): the collapse part of zeta_q(m) zeta_q(n).
EvalResult bq_term(long m, long n, const QParam& qp, const SeriesConfig& cfg);

/// A_q(m,n): the collapse-free part, branching on n > m vs n < m.
EvalResult aq_term(long m, long n, const QParam& qp, const SeriesConfig& cfg);

struct VerifyRecord {
    std::string name;
    Complex lhs;
    Complex rhs;
    Real residual;
    std::vector<std::pair<std::string, Complex>> parts;
};

/// Both sides of Li_{q;gamma}(q^{e+gamma}) =
///   sum_{i=0}^{gamma-2} (q-1)^i C(i+e,e) zeta_q(gamma-i)
///   + (q-1)^{gamma-2} sum_l q^l (q^{(e+1)l}-1)/[l]^2.
VerifyRecord lemma_li_shift(long e, long gamma, const QParam& qp,
                            const SeriesConfig& cfg);

/// zeta_q(m) zeta_q(n) - A_q(m,n) - A_q(n,m) - B_q(m,n), with all
/// sub-term values retained.
VerifyRecord verify_product(long m, long n, const QParam& qp,
                            const SeriesConfig& cfg);

/// Direct check of the q-shuffle integration lemma: the product of two
/// iterated integrals against the shuffle sum plus (q-1)^c collapse terms,
/// everything evaluated by Jackson sums on [0, upper]. At most 3 forms a
/// side.
VerifyRecord verify_qshuffle_lemma(const SVec& poles_u, const SVec& poles_v,
                                   const Real& upper, const QParam& qp,
                                   const SeriesConfig& cfg);

}  // namespace qzeta
