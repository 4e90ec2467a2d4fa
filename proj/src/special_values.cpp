#include "qzeta/special_values.hpp"

#include "qzeta/errors.hpp"

namespace qzeta {

namespace {

Real big_to_real(const BigInt& n) { return Real(n.str()); }

// 1/(q^j - 1) for integer j >= 1
Real inv_qpow_minus_one(long j, const QParam& qp) {
    return 1 / (qp.qpow_int(j) - 1);
}

int sign_pm(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

Complex qzeta_neg_closed(long n, const QParam& qp) {
    if (n < 0) throw DomainError("qzeta_neg_closed: n must be >= 0");
    Real acc = 0;
    for (long r = 0; r <= n; ++r)
        acc += sign_pm(r) * big_to_real(binomial(n, r)) * inv_qpow_minus_one(n + 1 - r, qp);
    acc -= sign_pm(n) / ((n + 1) * qp.log_q());
    return Complex(real_pow_int(1 - qp.q(), -n) * acc);
}

Complex res_closed(long k, long n, const QParam& qp) {
    if (k < 0 || n < 0) throw DomainError("res_closed: k, n must be >= 0");
    if (k > n + 1)
        throw DomainError("res_closed: requires k <= n+1 (pole regime m <= -1)");
    Real bracket = 0;
    if (k <= n) {
        for (long r = 0; r <= k; ++r)
            bracket += sign_pm(r) * big_to_real(binomial(n + 1 - r, k - r)) *
                       big_to_real(binomial(n, r)) * inv_qpow_minus_one(n + 1 - r, qp);
    } else {
        for (long r = 0; r <= n; ++r)
            bracket += sign_pm(r) * big_to_real(binomial(n, r)) *
                       inv_qpow_minus_one(n + 1 - r, qp);
        bracket -= sign_pm(n) / ((n + 1) * qp.log_q());
    }
    return Complex(-real_pow_int(1 - qp.q(), 2 - k) / qp.log_q() * bracket);
}

Rational res_limit_target(long k, long n) {
    if (k < 0 || n < 0 || k > n)
        throw DomainError("res_limit_target: requires 0 <= k <= n");
    if (k == 0) return Rational(-1, n + 1);
    Rational v = bernoulli(static_cast<int>(k)) / Rational(k) * Rational(binomial(n, k - 1));
    if (k % 2 == 0) v = -v;  // (-1)^{1-k}
    return v;
}

Complex kgen2_value(long m, long n, LimitOrder order, const QParam& qp) {
    if (m < 0 || n < 0) throw DomainError("kgen2_value: m, n must be >= 0");
    const long k = m + n + 2;
    const Real lq = qp.log_q();
    Real acc = 0;

    // shared double sum
    for (long r1 = 0; r1 <= m; ++r1)
        for (long r2 = 0; r2 <= n; ++r2)
            acc += sign_pm(r1 + r2) * big_to_real(binomial(m, r1)) *
                   big_to_real(binomial(n, r2)) * inv_qpow_minus_one(n + 1 - r2, qp) *
                   inv_qpow_minus_one(k - r1 - r2, qp);

    // shared single sum over r = 0..m with 1/((n+1) log q)
    for (long r = 0; r <= m; ++r)
        acc += sign_pm(r + n + 1) * big_to_real(binomial(m, r)) *
               inv_qpow_minus_one(m + 1 - r, qp) / ((n + 1) * lq);

    if (order == LimitOrder::s2_first) {
        acc += Real(sign_pm(k)) / ((m + 1) * (n + 1) * lq * lq);
        for (long r = 0; r <= n; ++r) {
            Rational fr = Rational(factorial(m) * factorial(n + 1 - r)) /
                          Rational(factorial(k - r));
            acc += sign_pm(r + m + 1) / lq * to_real(fr) *
                   big_to_real(binomial(n, r)) * inv_qpow_minus_one(n + 1 - r, qp);
        }
    } else {
        for (long r = 0; r <= m; ++r) {
            Rational fr = Rational(factorial(n) * factorial(m + 1 - r)) /
                          Rational(factorial(k - r));
            acc += sign_pm(r + n) / lq * big_to_real(binomial(m, r)) * to_real(fr) *
                   qp.qpow_int(m + 1 - r) * inv_qpow_minus_one(m + 1 - r, qp);
        }
    }
    return Complex(real_pow_int(1 - qp.q(), 2 - k) * acc);
}

Complex res_neg3_2(const QParam& qp) {
    const Real q = qp.q();
    Real num = q * (q - 1) * (q - 1);
    Real den = (q + 1) * (q * q + 1) * (q * q + q + 1) * qp.log_q();
    return Complex(num / den);
}

}  // namespace qzeta
