#pragma once

#include "qzeta/qseries.hpp"

#include <vector>

namespace qzeta {

enum class LimitOrder {
    s2_first,  // lim_{s1} lim_{s2}: the zeta(...) convention
    s1_first,  // lim_{s2} lim_{s1}: the zeta^R(...) convention
};

/// Gauss-Legendre nodes/weights on [0,1] at working precision; cached.
struct QuadRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const QuadRule& gauss_legendre(int order);

/// Membership of s in the classical singular set: s_d = 1, or
/// s_{d-1}+s_d in {2,1} or a nonpositive even integer, or a suffix sum
/// s_j+...+s_d an integer <= d-j+1 for j <= d-2.
bool classical_pole(const SVec& s, const Real& tol = pow10(-30));

/// zeta(s) by Euler-Maclaurin: partial sum to a cutoff plus the boundary
/// and Bernoulli terms, with the remainder integral of
/// B~_{M+1}(x) x^{-s-M-1} evaluated by per-interval quadrature.
/// M = 0 picks a default satisfying M > 1 + |Re s|.
EvalResult riemann_zeta(const Complex& s, int M = 0, const Real& tol = pow10(-40));

/// Euler-Zagier zeta(s_1,...,s_d) by the depth recursion
///   zeta(s) = sum_{r=0}^{M+1} B_r/r! (s_d)_{r-1} zeta(..., s_{d-1}+s_d+r-1)
///           - (s_d)_{M+1}/(M+1)! sum_{k_1<...<k_{d-1}} prod k_j^{-s_j} I(k_{d-1}),
/// I(k) the tail integral of B~_{M+1}(x) x^{-s_d-M-1} from k.
EvalResult mzv(const SVec& s, int M = 0, const Real& tol = pow10(-40));

/// Exact rational zeta(-j) for j >= 0 (zeta(0) = -1/2).
Rational zeta_nonpos_int(long j);

/// Exact iterated-limit values of the double zeta function at (-m,-n).
/// For odd k = m+n+2 both orders agree; for even k they differ by
/// (-1)^n B_k/k! n! m!.
Rational dbzeta_neg(long m, long n, LimitOrder order);

/// One row of the pole/indeterminacy classification of zeta(s1,s2) at
/// (n+2-k, -n).
struct DbzetaRow {
    bool is_pole = false;
    Rational residue;          // set when is_pole
    bool value_is_rational = false;
    Rational value_rational;   // set when value_is_rational
    Complex value;             // always set when !is_pole
};
DbzetaRow dbzeta_table(long k, long n);

}  // namespace qzeta
