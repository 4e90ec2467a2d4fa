#include "qzeta/qseries.hpp"

#include <optional>
#include <sstream>

namespace qzeta {

Complex svec_weight(const SVec& s) {
    Complex w;
    for (const auto& e : s) w += e;
    return w;
}

namespace {

// Integer exponent fast path for [k]^e; |e| <= 64 keeps the binary pow cheap.
std::optional<long> small_int_exponent(const Complex& e) {
    if (e.im != 0) return std::nullopt;
    if (!is_integer(e.re) || abs(e.re) > 64) return std::nullopt;
    return e.re.convert_to<long>();
}

// One sweep over k for sum_{0<k_1<...<k_d} prod_j w_j^{k_j} / [k_j]^{e_j}.
// prefix[j] holds sum over k_j <= k of g_j(k_j) * prefix[j-1](k_j - 1);
// prefix[d] is the value. rho bounds the decay modulus of the outer
// increment from above.
EvalResult sweep(const std::vector<Complex>& w, const std::vector<Complex>& e,
                 const QParam& qp, const SeriesConfig& cfg, const Real& rho) {
    const int d = static_cast<int>(w.size());
    std::vector<std::optional<long>> int_exp(d);
    for (int j = 0; j < d; ++j) int_exp[j] = small_int_exponent(e[j]);

    std::vector<Complex> wpow(d, Complex(1));  // w_j^k, updated per k
    std::vector<Complex> prefix(d + 1);
    prefix[0] = Complex(1);

    const Real rho_safe = sqrt(rho);  // absorbs polynomial factors in the tail
    const Real tail_factor = rho_safe / (1 - rho_safe);
    const Real one_minus_q = 1 - qp.q();
    EvalResult out;
    int calm = 0;
    Real qk = 1;  // q^k

    std::vector<Complex> g(d);
    for (long k = 1; k <= cfg.max_terms; ++k) {
        qk *= qp.q();
        Real br = (1 - qk) / one_minus_q;
        Real log_br;
        bool have_log = false;

        for (int j = 0; j < d; ++j) {
            wpow[j] *= w[j];
            if (int_exp[j]) {
                g[j] = wpow[j] * Complex(real_pow_int(br, -*int_exp[j]));
            } else {
                if (!have_log) {
                    log_br = log(br);
                    have_log = true;
                }
                g[j] = wpow[j] * cexp({-e[j].re * log_br, -e[j].im * log_br});
            }
        }

        // top-down so each level still sees the previous k's prefix below it
        Complex outer_inc = g[d - 1] * prefix[d - 1];
        for (int j = d; j >= 1; --j) prefix[j] += g[j - 1] * prefix[j - 1];

        out.terms_used = k;
        Real inc = cabs(outer_inc);
        Real tail = inc * tail_factor;
        if (inc < cfg.tol / 10 && tail < cfg.tol / d) {
            if (++calm >= 2) {
                out.value = prefix[d];
                out.error_bound = tail + pow10(-(kWorkingDigits - 6));
                return out;
            }
        } else {
            calm = 0;
        }
        if (k == cfg.max_terms) {
            out.value = prefix[d];
            out.error_bound = tail + pow10(-(kWorkingDigits - 6));
            out.truncated = true;
        }
    }
    return out;
}

Real decay_modulus(const std::vector<Complex>& w) {
    const int d = static_cast<int>(w.size());
    Real best = 0;
    Real suffix = 1;
    for (int j = d - 1; j >= 0; --j) {
        suffix *= cabs(w[j]);
        if (suffix > best) best = suffix;
    }
    return best;
}

}  // namespace

EvalResult fq_direct(const SVec& s, const SVec& t, const QParam& qp,
                     const SeriesConfig& cfg) {
    const int d = static_cast<int>(s.size());
    if (d < 1 || t.size() != s.size())
        throw DomainError("fq_direct: s and t must have equal depth >= 1");

    Real suffix = 0;
    for (int j = d - 1; j >= 0; --j) {
        suffix += t[j].re;
        if (!(suffix > 0)) {
            std::ostringstream os;
            os << "fq_direct: divergent, Re(t_" << (j + 1) << "+...+t_" << d
               << ") = " << real_str(suffix, 8) << " <= 0";
            throw DomainError(os.str());
        }
    }

    std::vector<Complex> w(d);
    for (int j = 0; j < d; ++j) w[j] = qpow(qp, t[j]);
    return sweep(w, s, qp, cfg, decay_modulus(w));
}

EvalResult qzeta_direct(const SVec& s, const QParam& qp, const SeriesConfig& cfg) {
    SVec t(s);
    for (auto& e : t) e -= Complex(1);
    return fq_direct(s, t, qp, cfg);
}

EvalResult qpolylog_direct(const std::vector<long>& n, const SVec& z,
                           const QParam& qp, const SeriesConfig& cfg) {
    const int d = static_cast<int>(n.size());
    if (d < 1 || z.size() != n.size())
        throw DomainError("qpolylog_direct: n and z must have equal depth >= 1");
    for (long nj : n)
        if (nj < 1) throw DomainError("qpolylog_direct: weights must be positive integers");
    for (int j = 0; j < d; ++j)
        if (!(cabs(z[j]) < 1)) {
            std::ostringstream os;
            os << "qpolylog_direct: |z_" << (j + 1) << "| >= 1";
            throw DomainError(os.str());
        }

    SVec e(d);
    for (int j = 0; j < d; ++j) e[j] = Complex(n[j]);
    // all-zero argument shortcut keeps the decay modulus positive
    Real rho = decay_modulus(z);
    if (rho == 0) return {Complex(0), Real(0), 0, false};
    return sweep(z, e, qp, cfg, rho);
}

EvalResult xi_q(long j, const QParam& qp, const SeriesConfig& cfg) {
    if (j < 0) throw DomainError("xi_q: j must be >= 0");
    SVec z{Complex(qp.qpow_int(j + 1))};
    return qpolylog_direct({2}, z, qp, cfg);
}

EvalResult t_series(long j, long gamma, const QParam& qp, const SeriesConfig& cfg) {
    if (j < 0) throw DomainError("t_series: j must be >= 0");
    if (gamma < 2) throw DomainError("t_series: gamma must be >= 2");

    const Real q = qp.q();
    const Real w = qp.qpow_int(gamma - 1);
    const Real rho = sqrt(w);
    const Real tail_factor = rho / (1 - rho);

    Real qj = j > 0 ? qp.qpow_int(j) : Real(0);
    Real qjl = 1;  // q^{jl}
    Real wl = 1;   // q^{(gamma-1)l}
    Real ql = 1;   // q^l
    const Real one_minus_q = 1 - qp.q();
    EvalResult out;
    Complex acc;
    int calm = 0;
    for (long l = 1; l <= cfg.max_terms; ++l) {
        wl *= w;
        ql *= qp.q();
        Real coeff;
        if (j > 0) {
            qjl *= qj;
            coeff = (qj - qjl) / (1 - qj);
        } else {
            coeff = Real(l - 1);
        }
        Real term = coeff * wl / real_pow_int((1 - ql) / one_minus_q, gamma);
        acc += Complex(term);
        out.terms_used = l;
        Real tail = abs(term) * tail_factor;
        if (abs(term) < cfg.tol / 10 && tail < cfg.tol) {
            if (++calm >= 2) {
                out.value = acc;
                out.error_bound = tail + pow10(-(kWorkingDigits - 6));
                return out;
            }
        } else {
            calm = 0;
        }
        if (l == cfg.max_terms) {
            out.value = acc;
            out.error_bound = tail + pow10(-(kWorkingDigits - 6));
            out.truncated = true;
        }
    }
    return out;
}

}  // namespace qzeta
