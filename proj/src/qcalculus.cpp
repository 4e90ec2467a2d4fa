#include "qzeta/qcalculus.hpp"

#include "qzeta/errors.hpp"

#include <sstream>

namespace qzeta {

Complex jackson_derivative(const PointFn& f, const Complex& z, const QParam& qp) {
    if (z == Complex(0)) throw DomainError("jackson_derivative: z must be nonzero");
    Complex qz = Complex(qp.q()) * z;
    return (f(z) - f(qz)) / ((1 - qp.q()) * z);
}

EvalResult jackson_integral(const PointFn& f, const Real& a, const Real& b,
                            const QParam& qp, const SeriesConfig& cfg) {
    EvalResult out;
    const Real span = b - a;
    if (span == 0) return out;
    Real qi = 1;  // q^i
    Complex acc;
    int calm = 0;
    for (long i = 0; i < cfg.max_terms; ++i) {
        Real x = a + qi * span;
        Complex fx = f(Complex(x));
        if (isnan(fx.re) || isnan(fx.im) || isinf(fx.re) || isinf(fx.im))
            throw DomainError("jackson_integral: integrand singular on the lattice");
        Complex term = fx * (qi * (1 - qp.q()) * span);
        acc += term;
        qi *= qp.q();
        out.terms_used = i + 1;
        Real mag = cabs(term);
        if (mag < cfg.tol * (1 - qp.q()) / 8) {
            if (++calm >= 3) {
                out.value = acc;
                out.error_bound = mag * qp.q() / (1 - qp.q()) + pow10(-(kWorkingDigits - 6));
                return out;
            }
        } else {
            calm = 0;
        }
    }
    out.value = acc;
    out.truncated = true;
    out.error_bound = cfg.tol;
    return out;
}

Complex QForm::eval(const Real& t) const {
    switch (kind) {
        case Kind::inverse_t:
            return Complex(1 / t);
        case Kind::simple_pole:
            return Complex(1) / (Complex(t) - a);
        case Kind::double_pole: {
            Complex d = Complex(t) - b;
            return b / (d * d);
        }
        case Kind::ratio2:
            return Complex(t) / ((Complex(t) - a) * (Complex(t) - b));
    }
    return {};
}

// A pole at (or numerically at) the origin is never hit by the positive
// lattice; it behaves like d_qt/t and is exempt from proximity checks.
Real QForm::pole_distance(const Real& t) const {
    const Real far = Real(1) / pow10(-(kWorkingDigits / 2));
    auto dist = [&](const Complex& p) {
        return cabs(p) < pow10(-(kWorkingDigits / 2)) ? far : cabs(Complex(t) - p);
    };
    switch (kind) {
        case Kind::inverse_t:
            return far;
        case Kind::simple_pole:
            return dist(a);
        case Kind::double_pole:
            return dist(b);
        case Kind::ratio2:
            return std::min(dist(a), dist(b));
    }
    return {};
}

EvalResult q_iterated(const std::vector<QForm>& forms, const Real& upper,
                      const QParam& qp, const SeriesConfig& cfg) {
    if (forms.empty()) throw DomainError("q_iterated: empty form sequence");
    if (!(upper > 0)) throw DomainError("q_iterated: upper limit must be positive");
    const QForm& front = forms.front();
    if (front.kind == QForm::Kind::inverse_t ||
        (front.kind == QForm::Kind::simple_pole &&
         cabs(front.a) < pow10(-(kWorkingDigits / 2))))
        throw DomainError("q_iterated: innermost form d_qt/t diverges at 0");
    const int depth = static_cast<int>(forms.size());
    const Real thresh = qp.pole_threshold();

    // lattice length: enough that q^E times the observed magnitudes is
    // negligible; verified after the fact and extended if needed
    long len = 32 + static_cast<long>(
        (log(cfg.tol * (1 - qp.q()) / 64) / qp.log_q()).convert_to<double>());

    EvalResult out;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Real> lattice(len);  // b q^e
        Real t = upper;
        for (long e = 0; e < len; ++e) {
            lattice[e] = t;
            t *= qp.q();
        }
        std::vector<Complex> inner(len, Complex(1));  // I_{l-1} on the lattice
        bool ok = true;
        out.terms_used = 0;
        for (int l = 0; l < depth && ok; ++l) {
            const QForm& form = forms[l];
            std::vector<Complex> fvals(len);
            for (long e = 0; e < len; ++e) {
                if (form.pole_distance(lattice[e]) < thresh) {
                    std::ostringstream os;
                    os << "q_iterated: form " << (l + 1)
                       << " singular on the lattice at t = " << real_str(lattice[e], 8);
                    throw PoleError(os.str());
                }
                fvals[e] = form.eval(lattice[e]) * inner[e];
            }
            // tail of the geometric sums must be below tolerance at the cut
            if (cabs(fvals[len - 1]) * lattice[len - 1] >
                cfg.tol / (8 * depth)) {
                ok = false;
                break;
            }
            // S(e) = F(e) + q S(e+1); I_l(e) = (1-q) b q^e S(e)
            Complex s;
            for (long e = len - 1; e >= 0; --e) {
                s = fvals[e] + Complex(qp.q()) * s;
                Complex iv = Complex((1 - qp.q()) * lattice[e]) * s;
                // reuse fvals as scratch until inner is overwritten
                fvals[e] = iv;
            }
            inner = std::move(fvals);
            out.terms_used += len;
        }
        if (ok) {
            out.value = inner[0];
            out.error_bound = cfg.tol / 4 + pow10(-(kWorkingDigits - 6));
            return out;
        }
        len = len * 3 / 2 + 16;
    }
    throw ConvergenceError("q_iterated: lattice did not reach the tail tolerance");
}

EvalResult polylog_iterated(const std::vector<long>& n, const SVec& z,
                            const QParam& qp, const SeriesConfig& cfg) {
    const int d = static_cast<int>(n.size());
    if (d < 1 || z.size() != n.size())
        throw DomainError("polylog_iterated: n and z must have equal depth >= 1");
    std::vector<QForm> forms;
    Complex suffix(1);
    std::vector<Complex> poles(d);
    for (int j = d - 1; j >= 0; --j) {
        suffix *= z[j];
        if (cabs(suffix) < pow10(-(kWorkingDigits - 10)))
            throw DomainError("polylog_iterated: zero argument product");
        poles[j] = Complex(1) / suffix;
    }
    for (int j = 0; j < d; ++j) {
        if (n[j] < 1) throw DomainError("polylog_iterated: weights must be positive");
        forms.push_back(QForm::pole(poles[j]));
        for (long i = 1; i < n[j]; ++i) forms.push_back(QForm::dt_over_t());
    }
    EvalResult out = q_iterated(forms, Real(1), qp, cfg);
    if (d % 2 == 1) out.value = -out.value;
    return out;
}

Real q_leibniz_check(const PointFn& f, const PointFn& g, const Complex& x,
                     const QParam& qp) {
    auto prod = [&](const Complex& z) { return f(z) * g(z); };
    Complex lhs = jackson_derivative(prod, x, qp);
    Complex df = jackson_derivative(f, x, qp);
    Complex dg = jackson_derivative(g, x, qp);
    Complex rhs = df * g(x) + f(x) * dg + x * Complex(qp.q() - 1) * df * dg;
    return cabs(lhs - rhs);
}

Real verify_qdiff(const std::vector<long>& n, const SVec& z, int j,
                  const QParam& qp, const SeriesConfig& cfg) {
    const int d = static_cast<int>(n.size());
    if (j < 1 || j > d) throw DomainError("verify_qdiff: coordinate out of range");
    const int idx = j - 1;

    auto li_at = [&](const Complex& zj) {
        SVec args = z;
        args[idx] = zj;
        return qpolylog_direct(n, args, qp, cfg).value;
    };
    Complex lhs = jackson_derivative(li_at, z[idx], qp);

    Complex rhs;
    if (n[idx] >= 2) {
        std::vector<long> lowered = n;
        --lowered[idx];
        rhs = qpolylog_direct(lowered, z, qp, cfg).value / z[idx];
    } else if (d == 1) {
        rhs = Complex(1) / (Complex(1) - z[0]);
    } else {
        std::vector<long> dropped_n;
        for (int i = 0; i < d; ++i)
            if (i != idx) dropped_n.push_back(n[i]);
        Complex one(1);
        // first term: z_j merges leftward (absent args when j = 1)
        SVec left;
        for (int i = 0; i < d; ++i) {
            if (i == idx) continue;
            left.push_back(i == idx - 1 ? z[i] * z[idx] : z[i]);
        }
        rhs = qpolylog_direct(dropped_n, left, qp, cfg).value / (one - z[idx]);
        // second term: z_j merges rightward; absent when j = d
        if (idx + 1 < d) {
            SVec right;
            for (int i = 0; i < d; ++i) {
                if (i == idx) continue;
                right.push_back(i == idx + 1 ? z[idx] * z[i] : z[i]);
            }
            rhs -= qpolylog_direct(dropped_n, right, qp, cfg).value /
                   (z[idx] * (one - z[idx]));
        }
    }
    return cabs(lhs - rhs);
}

}  // namespace qzeta
