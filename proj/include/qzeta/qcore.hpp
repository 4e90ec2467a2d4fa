#pragma once

#include "qzeta/errors.hpp"
#include "qzeta/real.hpp"

#include <vector>

namespace qzeta {

/// Deformation parameter q in (0,1) with cached log and the requested
/// working precision in decimal digits. The precision steers default
/// tolerances and pole thresholds; arithmetic always runs at
/// kWorkingDigits.
class QParam {
public:
    explicit QParam(Real q, int precision = 40);
    explicit QParam(double q, int precision = 40) : QParam(Real(q), precision) {}

    const Real& q() const { return q_; }
    const Real& log_q() const { return log_q_; }
    int precision() const { return precision_; }

    /// 10^{-(precision-10)}: default absolute tolerance for series work.
    Real default_tol() const { return pow10(-(precision_ - 10)); }
    /// 10^{-precision/2}: a point closer than this to a pole hyperplane
    /// counts as on it.
    Real pole_threshold() const { return pow10(-(precision_ / 2)); }

    /// q^k for integer k (k may be negative).
    Real qpow_int(long k) const;

private:
    Real q_;
    Real log_q_;
    int precision_;
};

struct EvalResult {
    Complex value{};
    Real error_bound{};
    long terms_used = 0;
    bool truncated = false;
};

/// [k]_q = (1-q^k)/(1-q).
Real qbracket(long k, const QParam& qp);

/// q^s = exp(s log q); single-valued since log q is real.
Complex qpow(const QParam& qp, const Complex& s);

/// Generalized binomial C(s+r-1, r) = prod_{i<r} (s+i) / r!.
Complex gen_binomial(const Complex& s, long r);

/// Pochhammer (s)_r with (s)_0 = 1 and (s)_{-1} = 1/(s-1).
Complex pochhammer(const Complex& s, long r);

/// Exact integer binomial coefficient.
BigInt binomial(long n, long k);
BigInt factorial(long n);

/// Exact Bernoulli number B_k (B_1 = -1/2). Memoized; safe for
/// concurrent readers.
const Rational& bernoulli(int k);

/// Coefficients of B_M(t) = sum_j coeffs[j] t^j, exact.
const std::vector<Rational>& bernoulli_poly(int m);

Real bernoulli_poly_at(int m, const Real& t);

/// B_M({x}) for x >= 1; satisfies |result| <= 4 M!/(2 pi)^M for M >= 2.
Real periodic_bernoulli(int m, const Real& x);

}  // namespace qzeta
