#include "qzeta/continuation.hpp"

#include "qzeta/parallel.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace qzeta {

const char* pole_condition_name(PoleCondition c) {
    switch (c) {
        case PoleCondition::none: return "none";
        case PoleCondition::last_at_one: return "last-coordinate-at-one";
        case PoleCondition::last_nonpositive_shifted: return "last-coordinate-nonpositive-shifted";
        case PoleCondition::partial_sum_integer: return "partial-sum-integer";
    }
    return "?";
}

std::string PoleReport::describe() const {
    std::ostringstream os;
    if (!in_pole_set) {
        os << "regular point (distance " << real_str(distance, 6) << " to the singular set)";
        return os.str();
    }
    os << "singular set hit: " << pole_condition_name(condition) << " at level " << index_j
       << ", nearest point m = " << m_witness << ", lattice index n = " << n_witness
       << ", distance " << real_str(distance, 6);
    return os.str();
}

PoleReport pole_report(const SVec& s, const QParam& qp) {
    const int d = static_cast<int>(s.size());
    if (d == 0) throw DomainError("pole_report: empty argument");
    const Real lambda = 2 * atan2(Real(0), Real(-1)) / abs(qp.log_q());

    PoleReport best;
    best.distance = Real(0);
    bool have = false;
    auto consider = [&](PoleCondition cond, int j, const Complex& w, long m, long n) {
        Real dist = sqrt((w.re - m) * (w.re - m) +
                         (w.im - n * lambda) * (w.im - n * lambda));
        if (!have || dist < best.distance) {
            have = true;
            best.condition = cond;
            best.index_j = j;
            best.m_witness = m;
            best.n_witness = n;
            best.distance = dist;
        }
    };

    const Complex& sd = s[d - 1];
    long n_near = nearest_int(sd.im / lambda).convert_to<long>();
    consider(PoleCondition::last_at_one, d, sd, 1, n_near);
    {
        long m = std::min<long>(nearest_int(sd.re).convert_to<long>(), 0);
        long n = n_near;
        if (n == 0) n = sd.im >= 0 ? 1 : -1;
        consider(PoleCondition::last_nonpositive_shifted, d, sd, m, n);
    }
    Complex suffix;
    for (int j = d; j >= 1; --j) {
        suffix += s[j - 1];
        if (j == d) continue;
        long m = std::min<long>(nearest_int(suffix.re).convert_to<long>(), d - j + 1);
        long n = nearest_int(suffix.im / lambda).convert_to<long>();
        consider(PoleCondition::partial_sum_integer, j, suffix, m, n);
    }
    best.in_pole_set = best.distance < qp.pole_threshold();
    if (!best.in_pole_set) {
        // distance stays (min over conditions) but no condition is claimed
        PoleReport out;
        out.distance = best.distance;
        return out;
    }
    return best;
}

namespace {

struct LevelSpec {
    Complex binom_s;     // C(binom_s + r - 1, r)
    Complex numer_base;  // multiplies powq[j*r]
    Complex denom_base;  // denominator 1 - denom_base * powq[R]
    int j = 1;           // 1-based level
    bool allow_degenerate = false;  // 0/0 resolution on the last level
};

struct BinomEntry {
    Complex excl;   // product of regular factors / r!
    Complex small;  // the single near-zero factor, if any
    bool has_small = false;
    Complex full() const { return has_small ? excl * small : excl; }
};

struct PoleHit {
    int level = 0;
    long suffix_r = 0;  // R at the offending term
};

struct GridContext {
    const QParam* qp;
    std::vector<LevelSpec> levels;
    Real term_tol;      // per-term stopping threshold
    long r_min;
    long cap;           // hard per-level cap
    Real thresh;        // pole-proximity threshold
    bool polylog_mode = false;

    std::vector<Real> powq;                     // q^i
    std::vector<std::vector<BinomEntry>> binom; // per level, index r

    long table_len() const { return static_cast<long>(powq.size()); }

    void ensure(long upto) {
        long have = static_cast<long>(powq.size());
        if (upto < have) return;
        powq.resize(upto + 1);
        if (have == 0) {
            powq[0] = 1;
            have = 1;
        }
        for (long i = have; i <= upto; ++i) powq[i] = powq[i - 1] * qp->q();
        // binomial tables are much shorter than the power table; grow to
        // the per-level cap lazily alongside
        for (std::size_t l = 0; l < levels.size(); ++l) {
            auto& tab = binom[l];
            long want = std::min<long>(upto, cap) + 1;
            if (static_cast<long>(tab.size()) >= want) continue;
            if (tab.empty()) tab.push_back({Complex(1), Complex(0), false});
            for (long r = static_cast<long>(tab.size()); r < want; ++r) {
                BinomEntry e = tab[r - 1];
                Complex f = levels[l].binom_s + Complex(r - 1);
                if (cabs(f) < thresh) {
                    e.small = f;
                    e.has_small = true;
                    e.excl /= Real(r);
                } else {
                    e.excl *= f;
                    e.excl /= Real(r);
                }
                tab.push_back(e);
            }
        }
    }

    // level factor; lvl is 0-based, R the suffix of r-indices from this
    // level outward. Returns nullopt on pole proximity (hit filled in).
    std::optional<Complex> factor(int lvl, long r, long suffix_r,
                                  std::optional<PoleHit>* hit) const {
        const LevelSpec& L = levels[lvl];
        const BinomEntry& B = binom[lvl][r];
        Complex denom = Complex(1) - L.denom_base * powq[suffix_r];
        Complex numer_tail = L.numer_base * powq[L.j * r];
        if (cabs(denom) < thresh) {
            if (L.allow_degenerate && B.has_small) {
                // lim (s+i0)/(1 - q^w) = -1/log q when w and the factor
                // vanish together (t = s-1 linkage, last level only)
                return B.excl * numer_tail * Complex(-1 / qp->log_q());
            }
            if (hit && !*hit) *hit = PoleHit{L.j, suffix_r};
            return std::nullopt;
        }
        return B.full() * numer_tail / denom;
    }
};

[[noreturn]] void throw_grid_pole(const GridContext& ctx, const PoleHit& hit) {
    std::ostringstream os;
    if (ctx.polylog_mode) {
        os << "qpolylog_continued: singular set, level j = " << hit.level
           << ": prod z_i = q^{-m} with m = " << hit.suffix_r;
        throw PoleError(os.str());
    }
    os << "continuation: denominator within pole threshold at level j = " << hit.level
       << ", r-suffix " << hit.suffix_r;
    throw PoleError(os.str());
}

// serial reference: H_lvl(Rnext) = sum_r F_lvl(r, r+Rnext) H_{lvl-1}(r+Rnext)
Complex eval_h(GridContext& ctx, int lvl, long r_next_suffix, long* terms,
               bool* truncated) {
    Complex acc;
    int calm = 0;
    for (long r = 0; r < ctx.cap; ++r) {
        ctx.ensure(r + r_next_suffix + 2);
        std::optional<PoleHit> hit;
        auto f = ctx.factor(lvl, r, r + r_next_suffix, &hit);
        if (!f) throw_grid_pole(ctx, *hit);
        Complex inc = *f;
        if (lvl > 0) inc *= eval_h(ctx, lvl - 1, r + r_next_suffix, terms, truncated);
        acc += inc;
        ++*terms;
        if (cabs(inc) < ctx.term_tol && r >= ctx.r_min) {
            if (++calm >= 3) return acc;
        } else {
            calm = 0;
        }
    }
    *truncated = true;
    return acc;
}

struct RowResult {
    Complex sum;
    Real abs_last;
    long terms = 0;
    bool need_grow = false;
    std::optional<PoleHit> hit;
};

// inner sum over r_1 at fixed outer suffix R (d = 2 kernel)
RowResult eval_row_d2(const GridContext& ctx, long outer_suffix) {
    RowResult out{};
    int calm = 0;
    const long limit = std::min<long>(ctx.cap, ctx.table_len() - outer_suffix - 2);
    for (long r = 0; r < limit; ++r) {
        auto f = ctx.factor(0, r, r + outer_suffix, &out.hit);
        if (!f) return out;
        out.sum += *f;
        out.abs_last = cabs(*f);
        ++out.terms;
        if (out.abs_last < ctx.term_tol && r >= ctx.r_min) {
            if (++calm >= 3) return out;
        } else {
            calm = 0;
        }
    }
    out.need_grow = ctx.cap > limit;
    return out;
}

EvalResult eval_grid(GridContext& ctx, const Complex& prefactor,
                     const SeriesConfig& cfg) {
    const int d = static_cast<int>(ctx.levels.size());
    Real pre_mag = cabs(prefactor);
    if (pre_mag > 1) ctx.term_tol /= pre_mag;

    EvalResult out;
    Complex total;
    long terms = 0;
    bool truncated = false;

    if (d == 2) {
        // outer index is r_2; rows over r_1 run in parallel blocks
        const long block = 16;
        long start = 0;
        int calm = 0;
        Real last_abs = 0;
        bool done = false;
        ctx.ensure(2 * (ctx.r_min + 64) + block);
        while (!done) {
            if (start >= ctx.cap) {
                truncated = true;
                break;
            }
            long end = std::min(ctx.cap, start + block);
            ctx.ensure(2 * end + 2);  // outer factors need powq[2 r_2]
            std::vector<RowResult> rows(end - start);
            std::vector<std::optional<Complex>> outer(end - start);
            std::optional<PoleHit> outer_hit;
            for (long r2 = start; r2 < end; ++r2)
                outer[r2 - start] = ctx.factor(1, r2, r2, &outer_hit);
            if (outer_hit) throw_grid_pole(ctx, *outer_hit);

            const GridContext& cref = ctx;
            parallel::for_each_index(rows.size(), [&](std::size_t i) {
                rows[i] = eval_row_d2(cref, start + static_cast<long>(i));
            });

            bool grow = false;
            for (long r2 = start; r2 < end; ++r2) {
                auto& row = rows[r2 - start];
                if (row.hit) throw_grid_pole(ctx, *row.hit);
                if (row.need_grow) {
                    grow = true;
                    break;
                }
                Complex inc = *outer[r2 - start] * row.sum;
                total += inc;
                terms += row.terms;
                last_abs = cabs(inc);
                if (last_abs < ctx.term_tol && r2 >= ctx.r_min) {
                    if (++calm >= 3) {
                        done = true;
                        break;
                    }
                } else {
                    calm = 0;
                }
            }
            if (grow) {
                // power table too short for some row; extend and redo block
                ctx.ensure(2 * ctx.table_len());
                continue;
            }
            if (!done) start = end;
        }
        out.error_bound = last_abs * ctx.qp->q() / (1 - ctx.qp->q());
    } else {
        ctx.ensure(d * (ctx.r_min + 64));
        total = eval_h(ctx, d - 1, 0, &terms, &truncated);
        out.error_bound = ctx.term_tol * 8 / (1 - ctx.qp->q());
    }

    out.value = prefactor * total;
    out.terms_used = terms;
    out.truncated = truncated;
    out.error_bound = out.error_bound * pre_mag + pow10(-(kWorkingDigits - 6));
    return out;
}

long grid_r_min(const SVec& s, const QParam& qp, long cap) {
    Real m = 0;
    for (const auto& e : s) m = std::max(m, abs(e.re));
    long r = 8 + static_cast<long>(((m + 4) / -qp.log_q()).convert_to<double>());
    return std::min(r, std::max<long>(8, cap / 4));
}

GridContext make_fq_context(const SVec& s, const SVec& t, const QParam& qp,
                            const SeriesConfig& cfg, bool zeta_linkage) {
    const int d = static_cast<int>(s.size());
    GridContext ctx;
    ctx.qp = &qp;
    ctx.thresh = qp.pole_threshold();
    ctx.cap = cfg.max_terms;
    ctx.r_min = grid_r_min(s, qp, cfg.max_terms);
    ctx.term_tol = cfg.tol * (1 - qp.q()) / (12 * d);
    ctx.levels.resize(d);
    ctx.binom.resize(d);
    Complex suffix_t;
    for (int j = d; j >= 1; --j) {
        suffix_t += t[j - 1];
        LevelSpec& L = ctx.levels[j - 1];
        L.binom_s = s[j - 1];
        L.j = j;
        L.numer_base = qpow(qp, Complex(j) * t[j - 1]);
        L.denom_base = qpow(qp, suffix_t);
        L.allow_degenerate = zeta_linkage && j == d;
    }
    return ctx;
}

}  // namespace

EvalResult fq_continued(const SVec& s, const SVec& t, const QParam& qp,
                        const SeriesConfig& cfg) {
    if (s.empty() || s.size() != t.size())
        throw DomainError("fq_continued: s and t must have equal depth >= 1");
    GridContext ctx = make_fq_context(s, t, qp, cfg, false);
    Complex prefactor = cpow_real_base(1 - qp.q(), svec_weight(s));
    return eval_grid(ctx, prefactor, cfg);
}

EvalResult qzeta_continued(const SVec& s, const QParam& qp, const SeriesConfig& cfg) {
    if (s.empty()) throw DomainError("qzeta_continued: empty argument");
    SVec t(s);
    for (auto& e : t) e -= Complex(1);
    GridContext ctx = make_fq_context(s, t, qp, cfg, true);
    Complex prefactor = cpow_real_base(1 - qp.q(), svec_weight(s));
    return eval_grid(ctx, prefactor, cfg);
}

EvalResult qzeta_eval(const SVec& s, const QParam& qp, const SeriesConfig& cfg) {
    if (s.empty()) throw DomainError("qzeta_eval: empty argument");
    const int d = static_cast<int>(s.size());
    Real margin;
    Complex suffix;
    bool first = true;
    for (int j = d; j >= 1; --j) {
        suffix += s[j - 1];
        Real gap = suffix.re - (d - j + 1);
        if (first || gap < margin) margin = gap;
        first = false;
    }
    if (margin > Real(1) / 4) return qzeta_direct(s, qp, cfg);

    PoleReport report = pole_report(s, qp);
    if (report.in_pole_set) throw PoleError("qzeta_eval: " + report.describe());
    return qzeta_continued(s, qp, cfg);
}

EvalResult qpolylog_continued(const std::vector<long>& n, const SVec& z,
                              const QParam& qp, const SeriesConfig& cfg) {
    const int d = static_cast<int>(n.size());
    if (d < 1 || z.size() != n.size())
        throw DomainError("qpolylog_continued: n and z must have equal depth >= 1");
    for (long nj : n)
        if (nj < 1) throw DomainError("qpolylog_continued: weights must be positive integers");

    GridContext ctx;
    ctx.qp = &qp;
    ctx.thresh = qp.pole_threshold();
    ctx.cap = cfg.max_terms;
    ctx.polylog_mode = true;
    SVec as_complex(d);
    for (int j = 0; j < d; ++j) as_complex[j] = Complex(n[j]);
    ctx.r_min = grid_r_min(as_complex, qp, cfg.max_terms);
    ctx.term_tol = cfg.tol * (1 - qp.q()) / (12 * d);
    ctx.levels.resize(d);
    ctx.binom.resize(d);
    Complex suffix_z(1);
    long weight = 0;
    for (int j = d; j >= 1; --j) {
        suffix_z *= z[j - 1];
        weight += n[j - 1];
        LevelSpec& L = ctx.levels[j - 1];
        L.binom_s = Complex(n[j - 1]);
        L.j = j;
        L.numer_base = cpow_int(z[j - 1], j);
        L.denom_base = suffix_z;
    }
    Complex prefactor = cpow_real_base(1 - qp.q(), Complex(weight));
    return eval_grid(ctx, prefactor, cfg);
}

ZCombo shift_expand(const SVec& s, const std::vector<long>& n) {
    const int d = static_cast<int>(s.size());
    if (d < 1 || n.size() != s.size())
        throw DomainError("shift_expand: s and n must have equal depth >= 1");
    for (long nj : n)
        if (nj < 0) throw DomainError("shift_expand: shift counts must be >= 0");

    ZCombo combo;
    combo.basis = s;
    LetterWord base(d);
    for (int j = 0; j < d; ++j) base[j] = Letter(j);
    combo.terms.emplace_back(QPoly(1), base);

    std::vector<long> r(d, 0);
    std::vector<std::pair<QPoly, LetterWord>> terms;
    while (true) {
        QPoly coeff(1);
        LetterWord w = base;
        for (int j = 0; j < d; ++j) {
            coeff *= QPoly(Rational(binomial(n[j], r[j]))) * QPoly::one_minus_q_pow(static_cast<int>(r[j]));
            w[j].shift -= r[j];
        }
        terms.emplace_back(std::move(coeff), std::move(w));
        int j = 0;
        while (j < d && r[j] == n[j]) r[j++] = 0;
        if (j == d) break;
        ++r[j];
    }
    combo.terms = std::move(terms);
    combo.canonicalize();
    return combo;
}

ZCombo apply_shift(const ZCombo& combo, int j) {
    ZCombo out;
    out.basis = combo.basis;
    for (const auto& [coeff, w] : combo.terms) {
        if (j < 0 || j >= static_cast<int>(w.size()))
            throw DomainError("apply_shift: coordinate out of range");
        out.terms.emplace_back(coeff, w);
        LetterWord lowered = w;
        lowered[j].shift -= 1;
        out.terms.emplace_back(coeff * QPoly::one_minus_q_pow(1), std::move(lowered));
    }
    out.canonicalize();
    return out;
}

LimitEstimate numeric_residue(const SVec& point, const QParam& qp,
                              const SeriesConfig& cfg, int levels) {
    if (point.empty()) throw DomainError("numeric_residue: empty point");
    if (levels < 3) throw DomainError("numeric_residue: need at least 3 levels");
    std::vector<Complex> samples(levels);
    Real h = Real(1) / 100;
    std::vector<Real> hs(levels);
    for (int l = 0; l < levels; ++l) {
        hs[l] = h;
        h /= 2;
    }
    parallel::for_each_index(static_cast<std::size_t>(levels), [&](std::size_t l) {
        SVec shifted = point;
        shifted.back() += Complex(hs[l]);
        samples[l] = Complex(hs[l]) * qzeta_continued(shifted, qp, cfg).value;
    });
    return richardson(samples);
}

LimitEstimate iterated_limit(long m, long n, LimitOrder order, const QParam& qp,
                             const SeriesConfig& cfg, int levels) {
    if (m < 0 || n < 0) throw DomainError("iterated_limit: m, n must be >= 0");
    if (levels < 3) throw DomainError("iterated_limit: need at least 3 levels");

    // inner limit runs on the coordinate named by the order; its ladder is
    // scaled by the current outer offset
    auto eval_point = [&](const Real& e1, const Real& e2) {
        SVec s{Complex(Real(-m) + e1), Complex(Real(-n) + e2)};
        return qzeta_continued(s, qp, cfg).value;
    };

    // The inner expansion has convergence radius ~ eps_outer, so the inner
    // ladder needs extra depth to push its extrapolation error below the
    // outer ladder's resolution.
    const int inner_levels = levels + 4;
    std::vector<Complex> outer_samples(levels);
    std::vector<Real> inner_residuals(levels);
    parallel::for_each_index(static_cast<std::size_t>(levels), [&](std::size_t j) {
        Real eps_outer = Real(1) / 100 / real_pow_int(Real(2), static_cast<long>(j));
        std::vector<Complex> inner(inner_levels);
        Real eps_inner = eps_outer / 2;
        for (int l = 0; l < inner_levels; ++l) {
            inner[l] = order == LimitOrder::s2_first ? eval_point(eps_outer, eps_inner)
                                                     : eval_point(eps_inner, eps_outer);
            eps_inner /= 2;
        }
        LimitEstimate est = richardson(inner, 9);
        outer_samples[j] = est.value;
        inner_residuals[j] = est.residual;
    });
    LimitEstimate out = richardson(outer_samples);
    for (const auto& r : inner_residuals) out.residual = std::max(out.residual, r);
    return out;
}

LimitEstimate q_to_1_limit(const std::function<Complex(const QParam&)>& evaluator,
                           int j_min, int j_max, int precision) {
    if (j_min < 1 || j_max < j_min)
        throw DomainError("q_to_1_limit: need 1 <= j_min <= j_max");
    const int levels = j_max - j_min + 1;
    std::vector<Complex> samples(levels);
    parallel::for_each_index(static_cast<std::size_t>(levels), [&](std::size_t i) {
        int j = j_min + static_cast<int>(i);
        Real q = 1 - real_pow_int(Real(2), -j);
        samples[i] = evaluator(QParam(q, precision));
    });
    return richardson(samples);
}

}  // namespace qzeta
