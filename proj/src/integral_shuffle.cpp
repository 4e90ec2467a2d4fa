#include "qzeta/integral_shuffle.hpp"

#include "qzeta/continuation.hpp"
#include "qzeta/errors.hpp"

#include <map>
#include <sstream>

namespace qzeta {

namespace {

// all strictly increasing c-tuples from {1..limit}
std::vector<std::vector<long>> tuples(long limit, long c) {
    std::vector<std::vector<long>> out;
    if (c == 0) {
        out.emplace_back();
        return out;
    }
    if (c > limit) return out;
    std::vector<long> cur(c);
    for (long i = 0; i < c; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        long pos = c - 1;
        while (pos >= 0 && cur[pos] == limit - (c - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (long i = pos + 1; i < c; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

}  // namespace

BigInt e_count(long r, long s, long c) {
    if (r < 0 || s < 0) throw DomainError("e_count: r, s must be >= 0");
    if (c < 0) throw DomainError("e_count: c must be >= 0");
    if (c > std::min(r, s)) return 0;
    BigInt total = 0;
    for (const auto& is : tuples(r, c)) {
        for (const auto& js : tuples(s, c)) {
            BigInt prod = 1;
            long i_prev = 0, j_prev = 0;
            for (long alpha = 0; alpha <= c; ++alpha) {
                long i_cur = alpha < c ? is[alpha] : r + 1;
                long j_cur = alpha < c ? js[alpha] : s + 1;
                prod *= binomial(i_cur + j_cur - i_prev - j_prev - 2,
                                 i_cur - i_prev - 1);
                i_prev = i_cur;
                j_prev = j_cur;
            }
            total += prod;
        }
    }
    return total;
}

QPoly e_coeff(long r, long s, long c) {
    return QPoly(Rational(e_count(r, s, c))) * QPoly::q_minus_one_pow(static_cast<int>(c));
}

namespace {

// depth-1 and depth-2 zeta_q values by direct series, memoized per call site
class ZetaCache {
public:
    ZetaCache(const QParam& qp, const SeriesConfig& cfg) : qp_(qp), cfg_(cfg) {}

    Complex depth1(long s) {
        auto it = d1_.find(s);
        if (it != d1_.end()) return it->second;
        Complex v = qzeta_direct({Complex(s)}, qp_, cfg_).value;
        d1_.emplace(s, v);
        return v;
    }

    Complex depth2(long s1, long s2) {
        auto key = std::make_pair(s1, s2);
        auto it = d2_.find(key);
        if (it != d2_.end()) return it->second;
        Complex v = qzeta_direct({Complex(s1), Complex(s2)}, qp_, cfg_).value;
        d2_.emplace(key, v);
        return v;
    }

private:
    const QParam& qp_;
    const SeriesConfig& cfg_;
    std::map<long, Complex> d1_;
    std::map<std::pair<long, long>, Complex> d2_;
};

Real big_to_real(const BigInt& n) { return Real(n.str()); }

// Coefficient of the A_q pattern with a slash-forms of the first factor
// placed past the other factor's pole: either that pole survives and a
// slashes shuffle against the remaining s-1 slash-forms with c collapses,
// or the pole itself is a collapse with one of the a slash-forms. The
// printed display's E(a,s;c) overcounts; the split form reproduces the
// shuffle-lemma expansion exactly.
BigInt a_coeff_count(long a, long s, long c) {
    BigInt total = e_count(a, s - 1, c);
    if (a >= 1 && c >= 1) total += e_count(a - 1, s - 1, c - 1);
    return total;
}

// sum_{r=0}^{j} C(j,r) (1-q)^r zeta_q(gamma - r): the shift expansion of
// S^j zeta_q(gamma)
Complex shifted_zeta(long j, long gamma, ZetaCache& cache, const QParam& qp) {
    Complex acc;
    Real omq = 1 - qp.q();
    for (long r = 0; r <= j; ++r)
        acc += Complex(big_to_real(binomial(j, r)) * real_pow_int(omq, r)) *
               cache.depth1(gamma - r);
    return acc;
}

}  // namespace

Complex t_closed(long j, long gamma, const QParam& qp, const SeriesConfig& cfg) {
    if (j < 1) throw DomainError("t_closed: requires j >= 1");
    if (gamma < 2) throw DomainError("t_closed: requires gamma >= 2");
    ZetaCache cache(qp, cfg);
    Real qm1 = qp.q() - 1;
    Real inv = 1 / (qp.qpow_int(j) - 1);
    Complex acc = -cache.depth1(gamma);
    for (long i = 1; i <= gamma - 2; ++i)
        acc += Complex(real_pow_int(qm1, i) * inv * big_to_real(binomial(i + j - 1, j - 1))) *
               cache.depth1(gamma - i);
    // remainder: (q-1)^{gamma-1}/(q^j-1) sum_{k=1}^{j} C(gamma-2+j-k, gamma-2)
    // Li_{q;1}(q^k). At j = 1 this is the single (q-1)^{gamma-2} Li_{q;1}(q)
    // term; for j >= 2 the weight-1 pieces carry path-counting binomials
    // (unrolling a(e,gamma) = a(e-1,gamma) + (q-1) a(e,gamma-1) down to its
    // boundaries).
    Complex rem;
    for (long k = 1; k <= j; ++k)
        rem += Complex(big_to_real(binomial(gamma - 2 + j - k, gamma - 2))) *
               qpolylog_direct({1}, {Complex(qp.qpow_int(k))}, qp, cfg).value;
    acc += Complex(real_pow_int(qm1, gamma - 1) * inv) * rem;
    return acc;
}

EvalResult x_gamma(long gamma, long r, long s, const QParam& qp,
                   const SeriesConfig& cfg) {
    if (gamma < 2) throw DomainError("x_gamma: requires gamma >= 2");
    if (!(s >= r && r >= 1)) throw DomainError("x_gamma: requires s >= r >= 1");
    const long e = s - r;
    ZetaCache cache(qp, cfg);
    Real qm1 = qp.q() - 1;

    EvalResult out;
    Complex acc;
    for (long i = 0; i <= r - 1; ++i)
        acc += Complex(real_pow_int(qm1, i) * big_to_real(binomial(i + e, e))) *
               cache.depth2(r - i, gamma);
    // T^j weights C(r-1+e-j, e-j) from unrolling
    // X(r, r+e) = X(r, r+e-1) + (q-1) X(r-1, r+e-1) to its boundaries;
    // they reduce to 1 when r = 1 or e = 0
    Complex tsum;
    for (long j = 0; j <= e; ++j) {
        Complex tj = j == 0 ? t_series(0, gamma, qp, cfg).value : t_closed(j, gamma, qp, cfg);
        tsum += Complex(big_to_real(binomial(r - 1 + e - j, e - j))) * tj;
    }
    acc += Complex(real_pow_int(qm1, r)) * tsum;
    out.value = acc;
    out.error_bound = cfg.tol * (r + e + 1);
    return out;
}

EvalResult bq_term(long m, long n, const QParam& qp, const SeriesConfig& cfg) {
    if (m < 2 || n < 2) throw DomainError("bq_term: requires m, n >= 2");
    if (m == n) throw DomainError("bq_term: m = n makes the partial fractions collapse");
    ZetaCache cache(qp, cfg);
    Real inv_mn = 1 / (qp.qpow_int(m - n) - 1);
    Real inv_nm = 1 / (qp.qpow_int(n - m) - 1);

    EvalResult out;
    Complex acc;
    for (long c = 0; c <= std::min(m, n) - 1; ++c) {
        Real ec = e_coeff(m - 1, n - 1, c).eval(qp.q());
        Complex inner = Complex(inv_mn) * shifted_zeta(n - 1 - c, m + n - 1 - c, cache, qp) +
                        Complex(inv_nm) * shifted_zeta(m - 1 - c, m + n - 1 - c, cache, qp);
        acc += Complex(ec) * inner;
    }
    out.value = Complex(qp.q() - 1) * acc;
    out.error_bound = cfg.tol * std::min(m, n);
    return out;
}

EvalResult aq_term(long m, long n, const QParam& qp, const SeriesConfig& cfg) {
    if (m < 2 || n < 2) throw DomainError("aq_term: requires m, n >= 2");
    if (m == n) throw DomainError("aq_term: requires m != n");
    ZetaCache cache(qp, cfg);
    Real omq = 1 - qp.q();

    EvalResult out;
    Complex acc;
    const long a_quad_end = std::min(m - 1, n - 1);  // a < n and a <= m-1
    for (long a = 0; a <= a_quad_end; ++a) {
        for (long c = 0; c <= std::min(a, n); ++c) {
            BigInt cnt = a_coeff_count(a, n, c);
            if (cnt == 0) continue;
            Real ec = big_to_real(cnt) * real_pow_int(qp.q() - 1, c);
            for (long i = 0; i <= a - c; ++i) {
                for (long j = 0; j <= n - a - 1; ++j) {
                    Real coeff = ec * big_to_real(binomial(a - c, i)) *
                                 real_pow_int(omq, i + j) *
                                 big_to_real(binomial(n - a - 1, j));
                    acc += Complex(coeff) * cache.depth2(m - a - j, n + a - c - i);
                }
            }
        }
    }
    if (n < m) {
        for (long a = n; a <= m - 1; ++a) {
            for (long c = 0; c <= std::min(a, n); ++c) {
                BigInt cnt = a_coeff_count(a, n, c);
                if (cnt == 0) continue;
                Real ec = big_to_real(cnt) * real_pow_int(qp.q() - 1, c);
                for (long i = 0; i <= a - c; ++i) {
                    long gamma = n + a - c - i;
                    if (gamma < 2) continue;  // X needs gamma >= 2; cannot occur: gamma >= n
                    Real coeff = ec * big_to_real(binomial(a - c, i)) * real_pow_int(omq, i);
                    acc += Complex(coeff) * x_gamma(gamma, m - a, m - n, qp, cfg).value;
                }
            }
        }
    }
    out.value = acc;
    out.error_bound = cfg.tol * (m + n);
    return out;
}

VerifyRecord lemma_li_shift(long e, long gamma, const QParam& qp,
                            const SeriesConfig& cfg) {
    if (e < 0 || gamma < 2)
        throw DomainError("lemma_li_shift: requires e >= 0 and gamma >= 2");
    ZetaCache cache(qp, cfg);
    Real qm1 = qp.q() - 1;

    VerifyRecord rec;
    rec.name = "li-shift";
    rec.lhs = qpolylog_direct({gamma}, {Complex(qp.qpow_int(e + gamma))}, qp, cfg).value;
    Complex zeta_part;
    for (long i = 0; i <= gamma - 2; ++i)
        zeta_part += Complex(real_pow_int(qm1, i) * big_to_real(binomial(i + e, e))) *
                     cache.depth1(gamma - i);
    Complex remainder = xi_q(e + 1, qp, cfg).value - cache.depth1(2);
    rec.rhs = zeta_part + Complex(real_pow_int(qm1, gamma - 2)) * remainder;
    rec.residual = cabs(rec.lhs - rec.rhs);
    rec.parts.emplace_back("remainder", remainder);
    // the weight-1 remainder with path-counting coefficients; coincides
    // with rhs when e = 0 or gamma = 2, and closes the identity elsewhere
    Complex lam;
    for (long k = 1; k <= e + 1; ++k)
        lam += Complex(big_to_real(binomial(gamma - 2 + e + 1 - k, gamma - 2))) *
               qpolylog_direct({1}, {Complex(qp.qpow_int(k))}, qp, cfg).value;
    rec.parts.emplace_back("rhs_corrected",
                           zeta_part + Complex(real_pow_int(qm1, gamma - 1)) * lam);
    return rec;
}

VerifyRecord verify_product(long m, long n, const QParam& qp,
                            const SeriesConfig& cfg) {
    if (m < 2 || n < 2 || m == n)
        throw DomainError("verify_product: requires m != n, both >= 2");
    VerifyRecord rec;
    std::ostringstream os;
    os << "product(" << m << "," << n << ")";
    rec.name = os.str();
    Complex zm = qzeta_direct({Complex(m)}, qp, cfg).value;
    Complex zn = qzeta_direct({Complex(n)}, qp, cfg).value;
    Complex amn = aq_term(m, n, qp, cfg).value;
    Complex anm = aq_term(n, m, qp, cfg).value;
    Complex bmn = bq_term(m, n, qp, cfg).value;
    rec.lhs = zm * zn;
    rec.rhs = amn + anm + bmn;
    rec.residual = cabs(rec.lhs - rec.rhs);
    rec.parts = {{"zeta_q(m)", zm}, {"zeta_q(n)", zn}, {"A_q(m,n)", amn},
                 {"A_q(n,m)", anm}, {"B_q(m,n)", bmn}};
    return rec;
}

namespace {

std::vector<std::vector<QForm>> riffles(const std::vector<QForm>& u,
                                        const std::vector<QForm>& v) {
    std::vector<std::vector<QForm>> out;
    std::vector<QForm> cur;
    cur.reserve(u.size() + v.size());
    auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
        if (i == u.size() && j == v.size()) {
            out.push_back(cur);
            return;
        }
        if (i < u.size()) {
            cur.push_back(u[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < v.size()) {
            cur.push_back(v[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

// <u_i, v_j> expanded: partial fractions for distinct poles, the
// double-pole rule when they coincide. Zero-weight pieces (poles at the
// origin) are dropped.
std::vector<std::pair<Complex, QForm>> collapse_forms(const Complex& a,
                                                      const Complex& b) {
    const Real tiny = pow10(-(kWorkingDigits - 10));
    if (cabs(a - b) < tiny) {
        if (cabs(b) < tiny) return {{Complex(1), QForm::pole(b)}};  // <1/t,1/t> = d_qt/t
        return {{Complex(1), QForm::pole(b)}, {Complex(1), QForm::dpole(b)}};
    }
    Complex inv = Complex(1) / (b - a);
    std::vector<std::pair<Complex, QForm>> out;
    if (cabs(b) >= tiny) out.emplace_back(b * inv, QForm::pole(b));
    if (cabs(a) >= tiny) out.emplace_back(-(a * inv), QForm::pole(a));
    return out;
}

}  // namespace

VerifyRecord verify_qshuffle_lemma(const SVec& poles_u, const SVec& poles_v,
                                   const Real& upper, const QParam& qp,
                                   const SeriesConfig& cfg) {
    const long r = static_cast<long>(poles_u.size());
    const long s = static_cast<long>(poles_v.size());
    if (r < 1 || s < 1 || r > 3 || s > 3)
        throw DomainError("verify_qshuffle_lemma: 1..3 forms per side");

    std::vector<QForm> u, v;
    for (const auto& a : poles_u) u.push_back(QForm::pole(a));
    for (const auto& b : poles_v) v.push_back(QForm::pole(b));

    VerifyRecord rec;
    rec.name = "qshuffle-lemma";
    Complex iu = q_iterated(u, upper, qp, cfg).value;
    Complex iv = q_iterated(v, upper, qp, cfg).value;
    rec.lhs = iu * iv;
    rec.parts.emplace_back("int(u)", iu);
    rec.parts.emplace_back("int(v)", iv);

    Complex rhs;
    for (const auto& seq : riffles(u, v))
        rhs += q_iterated(seq, upper, qp, cfg).value;
    rec.parts.emplace_back("shuffle(c=0)", rhs);

    for (long c = 1; c <= std::min(r, s); ++c) {
        Complex collapse_total;
        for (const auto& is : tuples(r, c)) {
            for (const auto& js : tuples(s, c)) {
                // expand block by block; each block is a riffle of the
                // segments strictly between consecutive collapse indices,
                // followed by the collapsed form
                std::vector<std::pair<Complex, std::vector<QForm>>> seqs{
                    {Complex(1), {}}};
                long i_prev = 0, j_prev = 0;
                for (long alpha = 0; alpha <= c; ++alpha) {
                    long i_cur = alpha < c ? is[alpha] : r + 1;
                    long j_cur = alpha < c ? js[alpha] : s + 1;
                    std::vector<QForm> ublock(u.begin() + i_prev, u.begin() + (i_cur - 1));
                    std::vector<QForm> vblock(v.begin() + j_prev, v.begin() + (j_cur - 1));
                    auto riffs = riffles(ublock, vblock);
                    std::vector<std::pair<Complex, std::vector<QForm>>> next;
                    for (const auto& [coef, seq] : seqs) {
                        for (const auto& riff : riffs) {
                            std::vector<QForm> base = seq;
                            base.insert(base.end(), riff.begin(), riff.end());
                            if (alpha < c) {
                                for (const auto& [w, form] :
                                     collapse_forms(poles_u[is[alpha] - 1],
                                                    poles_v[js[alpha] - 1])) {
                                    auto ext = base;
                                    ext.push_back(form);
                                    next.emplace_back(coef * w, std::move(ext));
                                }
                            } else {
                                next.emplace_back(coef, std::move(base));
                            }
                        }
                    }
                    seqs = std::move(next);
                    i_prev = i_cur;
                    j_prev = j_cur;
                }
                for (const auto& [coef, seq] : seqs)
                    collapse_total += coef * q_iterated(seq, upper, qp, cfg).value;
            }
        }
        Complex weighted = Complex(real_pow_int(qp.q() - 1, c)) * collapse_total;
        rhs += weighted;
        std::ostringstream os;
        os << "collapse(c=" << c << ")";
        rec.parts.emplace_back(os.str(), weighted);
    }

    rec.rhs = rhs;
    rec.residual = cabs(rec.lhs - rec.rhs);
    return rec;
}

}  // namespace qzeta
