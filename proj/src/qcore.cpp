#include "qzeta/qcore.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace qzeta {

QParam::QParam(Real q, int precision) : q_(std::move(q)), precision_(precision) {
    if (!(q_ > 0 && q_ < 1))
        throw DomainError("QParam: q must lie strictly inside (0,1)");
    if (precision_ < 1) throw DomainError("QParam: precision must be positive");
    if (precision_ > kWorkingDigits) precision_ = kWorkingDigits;
    log_q_ = log(q_);
}

Real QParam::qpow_int(long k) const {
    return pow(q_, static_cast<long long>(k));
}

Real qbracket(long k, const QParam& qp) {
    if (k < 1) throw DomainError("qbracket: k must be >= 1");
    return (1 - qp.qpow_int(k)) / (1 - qp.q());
}

Complex qpow(const QParam& qp, const Complex& s) {
    return cexp({s.re * qp.log_q(), s.im * qp.log_q()});
}

Complex gen_binomial(const Complex& s, long r) {
    if (r < 0) throw DomainError("gen_binomial: r must be >= 0");
    Complex acc(1);
    for (long i = 0; i < r; ++i) {
        acc *= s + Complex(i);
        acc /= Real(i + 1);
    }
    return acc;
}

Complex pochhammer(const Complex& s, long r) {
    if (r < -1) throw DomainError("pochhammer: r must be >= -1");
    if (r == -1) {
        Complex d = s - Complex(1);
        if (d.re == 0 && d.im == 0)
            throw DomainError("pochhammer: (1)_{-1} is undefined");
        return Complex(1) / d;
    }
    Complex acc(1);
    for (long i = 0; i < r; ++i) acc *= s + Complex(i);
    return acc;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= n - i;
        acc /= i + 1;
    }
    return acc;
}

BigInt factorial(long n) {
    BigInt acc = 1;
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

namespace {

std::shared_mutex bernoulli_mutex;
// deque: appends leave references to existing entries valid
std::deque<Rational> bernoulli_cache;  // guarded by bernoulli_mutex

// sum_{j<=k} C(k+1,j) B_j = 0 for k >= 1, i.e.
// B_k = -1/(k+1) sum_{j<k} C(k+1,j) B_j.
void extend_bernoulli(int k) {
    if (bernoulli_cache.empty()) bernoulli_cache.emplace_back(1);
    for (int m = static_cast<int>(bernoulli_cache.size()); m <= k; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j)
            acc += Rational(binomial(m + 1, j)) * bernoulli_cache[j];
        bernoulli_cache.push_back(-acc / Rational(m + 1));
    }
}

}  // namespace

const Rational& bernoulli(int k) {
    if (k < 0) throw DomainError("bernoulli: k must be >= 0");
    {
        std::shared_lock lock(bernoulli_mutex);
        if (k < static_cast<int>(bernoulli_cache.size())) return bernoulli_cache[k];
    }
    std::unique_lock lock(bernoulli_mutex);
    extend_bernoulli(k);
    return bernoulli_cache[k];
}

namespace {

std::shared_mutex poly_mutex;
std::deque<std::vector<Rational>> poly_cache;  // guarded by poly_mutex

// B_M(t) = sum_{j=0}^{M} C(M,j) B_j t^{M-j}
std::vector<Rational> make_poly(int m) {
    std::vector<Rational> c(m + 1);
    for (int j = 0; j <= m; ++j)
        c[m - j] = Rational(binomial(m, j)) * bernoulli(j);
    return c;
}

}  // namespace

const std::vector<Rational>& bernoulli_poly(int m) {
    if (m < 0) throw DomainError("bernoulli_poly: m must be >= 0");
    {
        std::shared_lock lock(poly_mutex);
        if (m < static_cast<int>(poly_cache.size())) return poly_cache[m];
    }
    std::unique_lock lock(poly_mutex);
    for (int i = static_cast<int>(poly_cache.size()); i <= m; ++i)
        poly_cache.push_back(make_poly(i));
    return poly_cache[m];
}

Real bernoulli_poly_at(int m, const Real& t) {
    const auto& c = bernoulli_poly(m);
    Real acc = 0;
    for (int j = m; j >= 0; --j) acc = acc * t + to_real(c[j]);
    return acc;
}

Real periodic_bernoulli(int m, const Real& x) {
    if (m < 2) throw DomainError("periodic_bernoulli: M must be >= 2");
    if (x < 1) throw DomainError("periodic_bernoulli: x must be >= 1");
    return bernoulli_poly_at(m, x - floor(x));
}

}  // namespace qzeta
