#include "qzeta/classical.hpp"

#include "qzeta/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qzeta {

namespace {

std::mutex rule_mutex;
std::map<int, QuadRule> rule_cache;

// Legendre P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<Real, Real> legendre(int n, const Real& x) {
    Real p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    Real dp = n * (x * p1 - p0) / (x * x - 1);
    return {p1, dp};
}

QuadRule make_rule(int n) {
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const Real pi = atan2(Real(0), Real(-1));
    const Real eps = pow10(-(kWorkingDigits + 2));
    for (int i = 0; i < n; ++i) {
        Real x = cos(pi * (i + Real(3) / 4) / (n + Real(1) / 2));
        for (int it = 0; it < 64; ++it) {
            auto [p, dp] = legendre(n, x);
            Real dx = p / dp;
            x -= dx;
            if (abs(dx) < eps) break;
        }
        auto [p, dp] = legendre(n, x);
        (void)p;
        // map [-1,1] -> [0,1]
        rule.nodes[i] = (x + 1) / 2;
        rule.weights[i] = 1 / ((1 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const QuadRule& gauss_legendre(int order) {
    if (order < 2) throw DomainError("gauss_legendre: order must be >= 2");
    std::lock_guard lock(rule_mutex);
    auto it = rule_cache.find(order);
    if (it == rule_cache.end())
        it = rule_cache.emplace(order, make_rule(order)).first;
    return it->second;
}

namespace {

bool near_int_at_most(const Real& x, long bound, const Real& tol) {
    if (abs(x - round(x)) > tol) return false;
    return round(x) <= bound;
}

}  // namespace

bool classical_pole(const SVec& s, const Real& tol) {
    const int d = static_cast<int>(s.size());
    if (d == 0) throw DomainError("classical_pole: empty argument");
    auto near = [&](const Real& x, double v) { return abs(x - v) <= tol; };

    const Complex& sd = s[d - 1];
    if (abs(sd.im) <= tol && near(sd.re, 1)) return true;
    if (d >= 2) {
        Complex w = s[d - 2] + sd;
        if (abs(w.im) <= tol) {
            if (near(w.re, 2) || near(w.re, 1)) return true;
            // nonpositive even integers
            Real r = round(w.re);
            if (abs(w.re - r) <= tol && r <= 0 && is_integer(r / 2)) return true;
        }
    }
    Complex suffix;
    for (int j = d - 1; j >= 0; --j) {
        suffix += s[j];
        if (j <= d - 3 && abs(suffix.im) <= tol &&
            near_int_at_most(suffix.re, d - j, tol))
            return true;
    }
    return false;
}

namespace {

Complex cpow_neg(const Real& base, const Complex& w) {
    // base^{-w} for base > 0
    Real lb = log(base);
    return cexp({-w.re * lb, -w.im * lb});
}

// Per-interval piece of int_k^inf B~_{M+1}(x) x^{-s-M-1} dx:
// J(k) = int_0^1 B_{M+1}(u) (k+u)^{-s-M-1} du by Gauss-Legendre of order M+4.
class TailIntegral {
public:
    // Order floor: on [k, k+1] with k = 1 the power factor's Bernstein
    // ellipse only gives ~1.76 digits per node pair, so M+4 nodes are not
    // enough for 60-digit targets.
    TailIntegral(int m_plus_1, Complex expo, Real tol)
        : m1_(m_plus_1), expo_(std::move(expo)), tol_(std::move(tol)),
          rule_(gauss_legendre(std::max(m_plus_1 + 3, 56))) {
        bvals_.reserve(rule_.nodes.size());
        for (const auto& u : rule_.nodes) bvals_.push_back(bernoulli_poly_at(m1_, u));
        // |B~_{M+1}| <= 4 (M+1)! / (2pi)^{M+1}
        Real fac = 1;
        for (int i = 2; i <= m1_; ++i) fac *= i;
        const Real two_pi = 2 * atan2(Real(0), Real(-1));
        bbound_ = 4 * fac / real_pow_int(two_pi, m1_);
    }

    Complex piece(long k) const {
        Complex acc;
        for (std::size_t i = 0; i < rule_.nodes.size(); ++i)
            acc += rule_.weights[i] * bvals_[i] * cpow_neg(k + rule_.nodes[i], expo_);
        return acc;
    }

    // bound on |int_N^inf|
    Real remainder_bound(long n) const {
        Real p = expo_.re - 1;  // decay exponent of the integral
        if (!(p > 0)) throw DomainError("tail integral divergent: Re(s)+M too small");
        return bbound_ * pow(Real(n), -p) / p;
    }

    // I(k) for k = 1..len, where I(k) = sum_{j>=k} J(j); the frontier is
    // extended until the analytic remainder is below tol.
    std::vector<Complex> suffix_table(long len, Real* rem_bound) const {
        long frontier = len;
        while (remainder_bound(frontier + 1) > tol_ && frontier < 2000000) frontier *= 2;
        std::vector<Complex> js(frontier);
        for (long k = 1; k <= frontier; ++k) js[k - 1] = piece(k);
        std::vector<Complex> suffix(len);
        Complex acc;
        for (long k = frontier; k >= 1; --k) {
            acc += js[k - 1];
            if (k <= len) suffix[k - 1] = acc;
        }
        if (rem_bound) *rem_bound = remainder_bound(frontier + 1);
        return suffix;
    }

private:
    int m1_;
    Complex expo_;
    Real tol_;
    QuadRule rule_;
    std::vector<Real> bvals_;
    Real bbound_;
};

int default_em_order(const Complex& s, int requested, double extra_sigma = 0) {
    // margin beyond the convergence requirement speeds up the decay of the
    // remainder pieces
    int need = static_cast<int>(ceil(abs(s.re) + extra_sigma).convert_to<double>()) + 14;
    return std::max({requested, need, 24});
}

}  // namespace

EvalResult riemann_zeta(const Complex& s, int M, const Real& tol) {
    if (s.im == 0 && s.re == 1) throw PoleError("riemann_zeta: pole at s = 1");
    const int m = default_em_order(s, M);
    if (!(m > 1 + abs(s.re)))
        throw DomainError("riemann_zeta: M must exceed 1 + |Re s|");
    const long cutoff =
        std::max<long>(24, 16 + static_cast<long>(ceil(abs(s.im)).convert_to<double>() * 2));

    EvalResult out;
    Complex acc;
    for (long n = 1; n <= cutoff; ++n) acc += cpow_neg(Real(n), s);
    out.terms_used = cutoff;

    const Real k = Real(cutoff);
    // K^{1-s}/(s-1) - K^{-s}/2
    acc += cpow_neg(k, s - Complex(1)) / (s - Complex(1));
    acc -= cpow_neg(k, s) / Real(2);
    // sum_{r=1}^{M} B_{r+1}/(r+1)! (s)_r K^{-s-r}
    Complex poch(1);
    Real rfac = 1;
    for (int r = 1; r <= m; ++r) {
        poch *= s + Complex(r - 1);  // (s)_r
        rfac *= r + 1;               // (r+1)!
        const Rational& b = bernoulli(r + 1);
        if (b == 0) continue;
        acc += to_real(b) / rfac * poch * cpow_neg(k, s + Complex(r));
    }

    // remainder: -(s)_{M+1}/(M+1)! int_K^inf B~_{M+1}(x) x^{-s-M-1} dx
    Complex poch_m1 = pochhammer(s, m + 1);
    if (!(poch_m1 == Complex(0))) {
        Real fac_m1 = 1;
        for (int i = 2; i <= m + 1; ++i) fac_m1 *= i;
        Complex coeff = poch_m1 / fac_m1;
        TailIntegral ti(m + 1, s + Complex(m + 1), tol / (2 * cabs(coeff)));
        Complex integral;
        Real piece_tol = tol / (4 * cabs(coeff));
        long j = cutoff;
        while (true) {
            Complex p = ti.piece(j);
            integral += p;
            ++j;
            if (ti.remainder_bound(j) < piece_tol) break;
            if (j > cutoff + 1000000)
                throw ConvergenceError("riemann_zeta: tail integral did not settle");
        }
        out.error_bound += cabs(coeff) * ti.remainder_bound(j);
        acc -= coeff * integral;
    }

    out.value = acc;
    out.error_bound += pow10(-(kWorkingDigits - 8));
    return out;
}

namespace {

// depth >= 2 recursion of mzv
EvalResult mzv_rec(const SVec& s, int M, const Real& tol);

EvalResult mzv_dispatch(const SVec& s, int M, const Real& tol) {
    if (s.size() == 1) return riemann_zeta(s[0], M, tol);
    return mzv_rec(s, M, tol);
}

EvalResult mzv_rec(const SVec& s, int M, const Real& tol) {
    const int d = static_cast<int>(s.size());
    const Complex& sd = s[d - 1];
    const Complex& sd1 = s[d - 2];
    const int m = default_em_order(sd, M, abs(sd1.re).convert_to<double>());
    if (!(m > 1 + abs(sd.re) + abs(sd1.re)))
        throw DomainError("mzv: M must exceed 1 + |Re s_d| + |Re s_{d-1}|");

    EvalResult out;

    // head: sum_{r=0}^{M+1} B_r/r! (s_d)_{r-1} zeta(s', s_{d-1}+s_d+r-1)
    Complex head;
    Real rfac = 1;
    for (int r = 0; r <= m + 1; ++r) {
        if (r >= 2) rfac *= r;
        const Rational& b = bernoulli(r);
        if (b == 0 && r != 0) continue;
        SVec inner(s.begin(), s.end() - 2);
        inner.push_back(sd1 + sd + Complex(r - 1));
        if (classical_pole(inner))
            throw ConvergenceError("mzv: recursion hits a singular inner argument");
        Complex z = mzv_dispatch(inner, 0, tol / (4 * (m + 2))).value;
        head += to_real(b) / rfac * pochhammer(sd, r - 1) * z;
    }

    // tail: (s_d)_{M+1}/(M+1)! sum_{k_1<...<k_{d-1}} prod k_j^{-s_j} I(k_{d-1})
    Complex poch_m1 = pochhammer(sd, m + 1);
    Complex tail;
    if (!(poch_m1 == Complex(0))) {
        Real fac_m1 = 1;
        for (int i = 2; i <= m + 1; ++i) fac_m1 *= i;
        Complex coeff = poch_m1 / fac_m1;
        Real child_tol = tol / (4 * cabs(coeff));

        TailIntegral ti(m + 1, sd + Complex(m + 1), child_tol / 4);

        // outer sweep over k = k_{d-1}, prefixes for k_1 < ... < k_{d-2}
        long len = 64;
        Real rem_bound;
        std::vector<Complex> suffix = ti.suffix_table(len, &rem_bound);
        std::vector<Complex> prefix(d - 1);
        prefix[0] = Complex(1);
        Complex acc;
        int calm = 0;
        for (long k = 1;; ++k) {
            if (k > len) {
                len *= 2;
                if (len > 100000)
                    throw ConvergenceError("mzv: tail sum did not settle");
                suffix = ti.suffix_table(len, &rem_bound);
            }
            // prefix[j] = sum_{k_j <= k} k_j^{-s_j} prefix[j-1](k_j - 1); the
            // outer increment uses the prefixes from the previous k
            Complex outer_inc = cpow_neg(Real(k), s[d - 2]) * prefix[d - 2] * suffix[k - 1];
            acc += outer_inc;
            for (int j = d - 2; j >= 1; --j)
                prefix[j] += cpow_neg(Real(k), s[j - 1]) * prefix[j - 1];
            if (cabs(outer_inc) < child_tol / 8 && k >= 8) {
                if (++calm >= 3) break;
            } else {
                calm = 0;
            }
        }
        tail = coeff * acc;
        out.error_bound += cabs(coeff) * (rem_bound + child_tol);
    }

    out.value = head - tail;
    out.error_bound += tol / 2 + pow10(-(kWorkingDigits - 10));
    return out;
}

}  // namespace

EvalResult mzv(const SVec& s, int M, const Real& tol) {
    if (s.empty()) throw DomainError("mzv: empty argument");
    if (classical_pole(s)) throw PoleError("mzv: argument lies in the singular set");
    return mzv_dispatch(s, M, tol);
}

Rational zeta_nonpos_int(long j) {
    if (j < 0) throw DomainError("zeta_nonpos_int: j must be >= 0");
    if (j == 0) return Rational(-1, 2);
    return -bernoulli(static_cast<int>(j) + 1) / Rational(j + 1);
}

Rational dbzeta_neg(long m, long n, LimitOrder order) {
    if (m < 0 || n < 0) throw DomainError("dbzeta_neg: m, n must be >= 0");
    long k = m + n + 2;
    if (k % 2 == 1) {
        // both orders coincide; the correction term carries B_k = 0
        if (k == n + 2) return bernoulli(static_cast<int>(k - 1)) / Rational(k - 1);
        return bernoulli(static_cast<int>(k - 1)) / Rational(2 * (k - 1));
    }
    Rational v = bernoulli(static_cast<int>(k)) / Rational(k * (n + 1));
    for (long r = 1; r <= n + 1; ++r) {
        const Rational& br = bernoulli(static_cast<int>(r));
        if (br == 0) continue;
        const Rational& bkr = bernoulli(static_cast<int>(k - r));
        if (bkr == 0) continue;
        v += br / Rational(r) * Rational(binomial(n, r - 1)) * bkr / Rational(k - r);
    }
    if (order == LimitOrder::s1_first) {
        Rational corr = bernoulli(static_cast<int>(k)) / Rational(factorial(k)) *
                        Rational(factorial(n) * factorial(m));
        if (n % 2 == 1) corr = -corr;
        v += corr;
    }
    return v;
}

DbzetaRow dbzeta_table(long k, long n) {
    if (k < 0 || n < 0) throw DomainError("dbzeta_table: k, n must be >= 0");
    DbzetaRow row;
    if (k == 0) {
        row.is_pole = true;
        row.residue = Rational(-1, n + 1);
        return row;
    }
    if (k == 1) {
        row.is_pole = true;
        row.residue = Rational(-1, 2);
        return row;
    }
    if (k % 2 == 0) {
        if (k <= n + 1) {
            row.is_pole = true;
            row.residue = -bernoulli(static_cast<int>(k)) / Rational(k) *
                          Rational(binomial(n, k - 1));
            return row;
        }
        throw DomainError("dbzeta_table: even k >= n+2 is an indeterminacy point; "
                          "use dbzeta_neg with an explicit limit order");
    }
    // odd k >= 3
    if (k >= n + 2) {
        row.value_is_rational = true;
        row.value_rational = bernoulli(static_cast<int>(k - 1)) /
                             Rational(k == n + 2 ? (k - 1) : 2 * (k - 1));
        row.value = Complex(to_real(row.value_rational));
        return row;
    }
    // odd k in [3, n+1]: B_{k-1}/(2(k-1)) - sum_{r=k-1}^{n+1} B_r/r C(n,r-1) zeta(r+1-k),
    // zeta at nonpositive integers exact, at positive integers by Euler-Maclaurin.
    Rational exact = bernoulli(static_cast<int>(k - 1)) / Rational(2 * (k - 1));
    Complex val;
    bool rational = true;
    for (long r = k - 1; r <= n + 1; ++r) {
        const Rational& br = bernoulli(static_cast<int>(r));
        if (br == 0) continue;
        Rational c = -br / Rational(r) * Rational(binomial(n, r - 1));
        long arg = r + 1 - k;
        if (arg <= 0) {
            exact += c * zeta_nonpos_int(-arg);
        } else if (arg == 1) {
            throw ConvergenceError("dbzeta_table: unexpected zeta(1) with nonzero weight");
        } else {
            rational = false;
            val += to_real(c) * riemann_zeta(Complex(arg)).value;
        }
    }
    row.value_is_rational = rational;
    if (rational) row.value_rational = exact;
    row.value = val + Complex(to_real(exact));
    return row;
}

}  // namespace qzeta
