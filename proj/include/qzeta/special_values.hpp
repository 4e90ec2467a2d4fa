#pragma once

#include "qzeta/classical.hpp"
#include "qzeta/qcore.hpp"

namespace qzeta {

/// zeta_q(-n) in closed form:
/// (1-q)^{-n} [ sum_{r=0}^n (-1)^r C(n,r)/(q^{n+1-r}-1) - (-1)^n/((n+1) log q) ].
Complex qzeta_neg_closed(long n, const QParam& qp);

/// Residue of zeta_q(s1,s2) at (n+2-k, -n), taken along the last
/// coordinate, for 0 <= k <= n+1:
///   -(1-q)^{2-k}/log q * [ sum_{r=0}^k (-1)^r C(n+1-r,k-r) C(n,r)/(q^{n+1-r}-1) ]   (k <= n)
/// with the k = n+1 bracket picking up the extra -(-1)^n/((n+1) log q) term.
Complex res_closed(long k, long n, const QParam& qp);

/// q->1 limit of res_closed for k <= n:
/// -1/(n+1) if k = 0, else (-1)^{1-k} B_k/k C(n,k-1).
Rational res_limit_target(long k, long n);

/// Indeterminate corner values zeta_q(-m,-n) (s2_first) and
/// zeta_q^R(-m,-n) (s1_first), in closed form.
Complex kgen2_value(long m, long n, LimitOrder order, const QParam& qp);

/// Residue of zeta_q at (-3, 2): q(q-1)^2 / ((q+1)(q^2+1)(q^2+q+1) log q),
/// equal to -res_closed(3,3).
Complex res_neg3_2(const QParam& qp);

}  // namespace qzeta
