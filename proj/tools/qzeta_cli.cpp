// Command-line frontend: evaluation, residues, q->1 limit scans, identity
// verification suites, and the pole/indeterminacy table.
//
// Exit codes: 0 ok, 1 usage, 2 pole/singular set, 3 non-convergence,
// 4 verification failure.

#include "CLI11.hpp"
#include "json.hpp"

#include "qzeta/classical.hpp"
#include "qzeta/continuation.hpp"
#include "qzeta/integral_shuffle.hpp"
#include "qzeta/parallel.hpp"
#include "qzeta/qcalculus.hpp"
#include "qzeta/shuffle.hpp"
#include "qzeta/special_values.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

using namespace qzeta;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitPole = 2;
constexpr int kExitNoConverge = 3;
constexpr int kExitVerifyFail = 4;

Complex parse_complex(std::string tok) {
    std::erase_if(tok, [](char ch) { return ch == ' '; });
    if (tok.empty()) throw DomainError("empty number");
    if (tok.back() == 'i' || tok.back() == 'I') {
        tok.pop_back();
        // split into re +/- im at the last sign that is not an exponent sign
        std::size_t split = std::string::npos;
        for (std::size_t p = tok.size(); p-- > 1;) {
            if ((tok[p] == '+' || tok[p] == '-') && tok[p - 1] != 'e' && tok[p - 1] != 'E') {
                split = p;
                break;
            }
        }
        if (split == std::string::npos)
            return {Real(0), tok.empty() || tok == "+" ? Real(1)
                             : tok == "-"              ? Real(-1)
                                                       : Real(tok)};
        std::string re = tok.substr(0, split);
        std::string im = tok.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return {Real(re), Real(im)};
    }
    return {Real(tok), Real(0)};
}

SVec parse_cvec(const std::string& list) {
    SVec out;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string tok = list.substr(start, comma - start);
        if (!tok.empty()) out.push_back(parse_complex(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (out.empty()) throw DomainError("empty list: '" + list + "'");
    return out;
}

std::vector<long> parse_ints(const std::string& list) {
    std::vector<long> out;
    for (const auto& c : parse_cvec(list)) {
        if (c.im != 0 || !is_integer(c.re))
            throw DomainError("expected integers: '" + list + "'");
        out.push_back(c.re.convert_to<long>());
    }
    return out;
}

json cjson(const Complex& z) {
    return json{{"re", real_str(z.re)}, {"im", real_str(z.im)}};
}

struct Report {
    json doc;
    std::string format = "json";
    std::string out_path;

    Report(const std::string& command, const json& inputs, const json& config) {
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["config"] = config;
        doc["results"] = json::array();
        doc["residuals"] = json::array();
    }

    void add_result(const std::string& name, const json& value) {
        doc["results"].push_back(json{{"name", name}, {"value", value}});
    }
    void add_residual(const std::string& name, const Real& r) {
        doc["residuals"].push_back(json{{"name", name}, {"value", real_str(r, 8)}});
    }

    int finish(long elapsed_ms, int code = 0) {
        doc["elapsed_ms"] = elapsed_ms;
        std::string text;
        if (format == "json") {
            text = doc.dump(2);
        } else {
            text = "command: " + doc["command"].get<std::string>() + "\n";
            for (const auto& r : doc["results"]) {
                text += "  " + r["name"].get<std::string>() + ": ";
                if (r["value"].is_object() && r["value"].contains("re")) {
                    text += r["value"]["re"].get<std::string>();
                    std::string im = r["value"]["im"].get<std::string>();
                    if (im != "0") text += " + (" + im + ")i";
                } else {
                    text += r["value"].dump();
                }
                text += "\n";
            }
            for (const auto& r : doc["residuals"])
                text += "  residual " + r["name"].get<std::string>() + ": " +
                        r["value"].get<std::string>() + "\n";
            text += "  elapsed: " + std::to_string(elapsed_ms) + " ms\n";
        }
        std::cout << text << std::endl;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            f << text << "\n";
        }
        return code;
    }
};

struct CommonOpts {
    double q = 0.5;
    int prec = 40;
    std::string tol_str;
    std::string format = "json";
    std::string out_path;
    unsigned long seed = 1;
    bool serial = false;

    void attach(CLI::App* cmd, bool with_q = true) {
        if (with_q) cmd->add_option("--q", q, "deformation parameter in (0,1)");
        cmd->add_option("--prec", prec, "working precision request in decimal digits");
        cmd->add_option("--tol", tol_str, "absolute series tolerance, e.g. 1e-30");
        cmd->add_option("--format", format, "json|table")
            ->check(CLI::IsMember({"json", "table"}));
        cmd->add_option("--out", out_path, "also write the report to a file");
        cmd->add_option("--seed", seed, "seed for randomized verification cases");
        cmd->add_flag("--serial", serial, "disable the OpenMP kernels");
    }

    QParam qparam() const { return QParam(Real(q), prec); }

    SeriesConfig config(const QParam& qp) const {
        SeriesConfig cfg = SeriesConfig::for_param(qp);
        if (!tol_str.empty()) cfg.tol = Real(tol_str);
        return cfg;
    }

    json config_json(const QParam& qp, const SeriesConfig& cfg) const {
        return json{{"q", real_str(qp.q(), 30)},
                    {"precision", qp.precision()},
                    {"tol", real_str(cfg.tol, 6)},
                    {"max_terms", cfg.max_terms},
                    {"seed", seed},
                    {"workers", parallel::worker_count()},
                    {"extrapolation", "factor-2 ladder, order <= 6"}};
    }
};

long elapsed_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// ---- eval ----------------------------------------------------------------

int run_eval(const CommonOpts& opts, const std::string& s_list, bool polylog,
             const std::string& n_list, const std::string& z_list,
             const std::string& method) {
    auto t0 = std::chrono::steady_clock::now();
    QParam qp = opts.qparam();
    SeriesConfig cfg = opts.config(qp);
    json inputs{{"method", method}};

    EvalResult res;
    if (polylog) {
        auto n = parse_ints(n_list);
        auto z = parse_cvec(z_list);
        inputs["n"] = n_list;
        inputs["z"] = z_list;
        if (method == "direct")
            res = qpolylog_direct(n, z, qp, cfg);
        else if (method == "continued")
            res = qpolylog_continued(n, z, qp, cfg);
        else {
            bool inside = true;
            for (const auto& e : z)
                if (!(cabs(e) < 1)) inside = false;
            res = inside ? qpolylog_direct(n, z, qp, cfg)
                         : qpolylog_continued(n, z, qp, cfg);
        }
    } else {
        auto s = parse_cvec(s_list);
        inputs["s"] = s_list;
        if (method == "direct")
            res = qzeta_direct(s, qp, cfg);
        else if (method == "continued") {
            PoleReport report = pole_report(s, qp);
            if (report.in_pole_set) throw PoleError(report.describe());
            res = qzeta_continued(s, qp, cfg);
        } else {
            res = qzeta_eval(s, qp, cfg);
        }
    }

    Report rep(polylog ? "eval-polylog" : "eval", inputs, opts.config_json(qp, cfg));
    rep.format = opts.format;
    rep.out_path = opts.out_path;
    rep.add_result("value", cjson(res.value));
    rep.add_result("error_bound", real_str(res.error_bound, 8));
    rep.add_result("terms", res.terms_used);
    rep.add_result("truncated", res.truncated);
    return rep.finish(elapsed_since(t0));
}

// ---- residue ---------------------------------------------------------------

struct ResiduePoint {
    bool special_neg3_2 = false;
    long k = 0, n = 0;
    SVec point;
};

ResiduePoint classify_residue_point(const std::string& point_str, const QParam& qp) {
    auto ints = parse_ints(point_str);
    if (ints.size() != 2) throw DomainError("residue points have two integer parts");
    ResiduePoint rp;
    rp.point = {Complex(ints[0]), Complex(ints[1])};
    if (ints[0] == -3 && ints[1] == 2) {
        rp.special_neg3_2 = true;
        return rp;
    }
    long n = -ints[1];
    long k = n + 2 - ints[0];
    if (n >= 0 && k >= 0 && k <= n + 1) {
        rp.k = k;
        rp.n = n;
        return rp;
    }
    PoleReport report = pole_report(rp.point, qp);
    if (!report.in_pole_set)
        throw PoleError("regular point: " + report.describe());
    throw DomainError(
        "point is singular but outside the closed-form families (supported: "
        "(n+2-k, -n) with k <= n+1, and (-3,2))");
}

int run_residue(const CommonOpts& opts, const std::string& point_str,
                const std::string& mode) {
    auto t0 = std::chrono::steady_clock::now();
    QParam qp = opts.qparam();
    SeriesConfig cfg = opts.config(qp);
    ResiduePoint rp = classify_residue_point(point_str, qp);

    Report rep("residue", json{{"point", point_str}, {"mode", mode}},
               opts.config_json(qp, cfg));
    rep.format = opts.format;
    rep.out_path = opts.out_path;

    Complex closed;
    bool have_closed = false;
    if (mode == "closed" || mode == "both") {
        closed = rp.special_neg3_2 ? res_neg3_2(qp) : res_closed(rp.k, rp.n, qp);
        have_closed = true;
        rep.add_result("closed", cjson(closed));
    }
    if (mode == "numeric" || mode == "both") {
        auto est = numeric_residue(rp.point, qp, cfg);
        rep.add_result("numeric", cjson(est.value));
        rep.add_result("extrapolation_residual", real_str(est.residual, 8));
        if (have_closed) rep.add_residual("closed_vs_numeric", cabs(est.value - closed));
    }
    return rep.finish(elapsed_since(t0));
}

// ---- limit -----------------------------------------------------------------

int run_limit(const CommonOpts& opts, const std::string& target, int levels) {
    auto t0 = std::chrono::steady_clock::now();
    QParam qp_probe(Real(1) / 2, opts.prec);
    SeriesConfig cfg = opts.config(qp_probe);

    std::string kind = target.substr(0, target.find(':'));
    std::string rest = target.size() > kind.size() ? target.substr(kind.size() + 1) : "";

    std::function<Complex(const QParam&)> evaluator;
    Complex reference;
    bool have_reference = false;
    std::string ref_name;

    if (kind == "zeta") {
        SVec s = parse_cvec(rest);
        evaluator = [s, cfg](const QParam& qp) { return qzeta_eval(s, qp, cfg).value; };
        bool classical_ok = !classical_pole(s);
        if (classical_ok && s.size() == 1 && s[0].im == 0 && is_integer(s[0].re) &&
            s[0].re <= 0) {
            reference = Complex(to_real(zeta_nonpos_int(-s[0].re.convert_to<long>())));
            have_reference = true;
            ref_name = "classical zeta (exact)";
        } else if (classical_ok) {
            reference = mzv(s).value;
            have_reference = true;
            ref_name = "classical zeta";
        }
    } else if (kind == "residue") {
        QParam probe(Real(1) / 2, opts.prec);
        ResiduePoint rp = classify_residue_point(rest, probe);
        if (rp.special_neg3_2) {
            evaluator = [](const QParam& qp) { return res_neg3_2(qp); };
            reference = Complex(0);
            have_reference = true;
            ref_name = "no classical pole on the diagonal";
        } else {
            long k = rp.k, n = rp.n;
            evaluator = [k, n](const QParam& qp) { return res_closed(k, n, qp); };
            reference = Complex(to_real(
                k <= n ? res_limit_target(k, n)
                       : -bernoulli(static_cast<int>(n) + 1) / Rational(n + 1)));
            have_reference = true;
            ref_name = "classical residue";
        }
    } else if (kind == "value") {
        // value:m,n or value:m,n:R
        LimitOrder order = LimitOrder::s2_first;
        std::string nums = rest;
        if (rest.size() > 2 && rest.substr(rest.size() - 2) == ":R") {
            order = LimitOrder::s1_first;
            nums = rest.substr(0, rest.size() - 2);
        }
        auto ints = parse_ints(nums);
        if (ints.size() != 2 || ints[0] < 0 || ints[1] < 0)
            throw DomainError("value targets are m,n with m,n >= 0");
        long m = ints[0], n = ints[1];
        evaluator = [m, n, order](const QParam& qp) {
            return kgen2_value(m, n, order, qp);
        };
        reference = Complex(to_real(dbzeta_neg(m, n, order)));
        have_reference = true;
        ref_name = "classical iterated-limit value";
    } else {
        throw DomainError("unknown limit target: " + target);
    }

    auto est = q_to_1_limit(evaluator, 3, std::max(4, levels), opts.prec);

    Report rep("limit", json{{"target", target}, {"levels", levels}},
               opts.config_json(qp_probe, cfg));
    rep.format = opts.format;
    rep.out_path = opts.out_path;
    rep.add_result("limit", cjson(est.value));
    rep.add_result("extrapolation_residual", real_str(est.residual, 8));
    if (have_reference) {
        rep.add_result("reference", cjson(reference));
        rep.add_result("reference_kind", ref_name);
        rep.add_residual("limit_vs_reference", cabs(est.value - reference));
    }
    if (est.residual > pow10(-2)) return rep.finish(elapsed_since(t0), kExitNoConverge);
    return rep.finish(elapsed_since(t0));
}

// ---- verify ----------------------------------------------------------------

struct SuiteCase {
    std::string name;
    Real residual;
    Real bound;
};

int run_suite(const CommonOpts& opts, const std::string& suite,
              const std::vector<SuiteCase>& cases, json inputs,
              const QParam& qp, const SeriesConfig& cfg,
              const std::chrono::steady_clock::time_point& t0,
              const std::vector<std::pair<std::string, Complex>>& extra = {}) {
    Report rep("verify " + suite, std::move(inputs), opts.config_json(qp, cfg));
    rep.format = opts.format;
    rep.out_path = opts.out_path;
    bool all_ok = true;
    for (const auto& c : cases) {
        rep.add_residual(c.name, c.residual);
        if (!(c.residual <= c.bound)) {
            all_ok = false;
            rep.add_result("FAILED " + c.name,
                           "residual " + real_str(c.residual, 8) + " > bound " +
                               real_str(c.bound, 6));
        }
    }
    for (const auto& [name, value] : extra) rep.add_result(name, cjson(value));
    rep.add_result("cases", cases.size());
    rep.add_result("status", all_ok ? "pass" : "fail");
    return rep.finish(elapsed_since(t0), all_ok ? 0 : kExitVerifyFail);
}

int run_verify(const CommonOpts& opts, const std::string& suite,
               const std::string& w1, const std::string& w2, long m, long n,
               const std::string& weights, const std::string& z_list, int jcoord,
               const std::string& a_list, const std::string& b_list, double upper,
               long e_shift, long gamma, int cases_requested) {
    auto t0 = std::chrono::steady_clock::now();
    QParam qp = opts.qparam();
    SeriesConfig cfg = opts.config(qp);
    std::vector<SuiteCase> cases;
    std::vector<std::pair<std::string, Complex>> extra;
    json inputs{{"suite", suite}};

    if (suite == "series-shuffle") {
        std::vector<std::pair<SVec, SVec>> pairs;
        if (!w1.empty() && !w2.empty()) {
            pairs.emplace_back(parse_cvec(w1), parse_cvec(w2));
            inputs["w1"] = w1;
            inputs["w2"] = w2;
        } else {
            std::mt19937_64 gen(opts.seed);
            std::uniform_real_distribution<double> re(2.1, 3.4), im(-0.5, 0.5);
            for (int i = 0; i < cases_requested; ++i) {
                SVec a{Complex(Real(re(gen)), Real(im(gen)))};
                SVec b{Complex(Real(re(gen)), Real(im(gen)))};
                if (i % 2 == 1) b.push_back(Complex(Real(re(gen)), Real(im(gen))));
                pairs.emplace_back(std::move(a), std::move(b));
            }
        }
        std::vector<SuiteCase> slots(pairs.size());
        parallel::for_each_index(pairs.size(), [&](std::size_t i) {
            const auto& [a, b] = pairs[i];
            Complex lhs = qzeta_eval(a, qp, cfg).value * qzeta_eval(b, qp, cfg).value;
            Complex rhs = eval_combo(qshuffle(a, b), qp, cfg).value;
            slots[i] = {"case " + std::to_string(i), cabs(lhs - rhs),
                        cfg.tol * pow10(6)};
        });
        cases = std::move(slots);
    } else if (suite == "integral-shuffle") {
        if (m == n || m < 2 || n < 2)
            throw CLI::ValidationError("--m/--n", "requires m != n, both >= 2");
        inputs["m"] = m;
        inputs["n"] = n;
        auto rec = verify_product(m, n, qp, cfg);
        for (const auto& [name, value] : rec.parts) extra.emplace_back(name, value);
        cases.push_back({rec.name, rec.residual, cfg.tol * pow10(8)});
    } else if (suite == "qdiff") {
        std::vector<std::tuple<std::vector<long>, SVec, int>> dcases;
        if (!weights.empty()) {
            dcases.emplace_back(parse_ints(weights), parse_cvec(z_list), jcoord);
            inputs["weights"] = weights;
            inputs["z"] = z_list;
            inputs["j"] = jcoord;
        } else {
            std::mt19937_64 gen(opts.seed);
            std::uniform_real_distribution<double> zz(0.1, 0.6);
            for (int i = 0; i < cases_requested; ++i) {
                int d = 1 + i % 3;
                std::vector<long> nn;
                SVec z;
                for (int jj = 0; jj < d; ++jj) {
                    nn.push_back(1 + (i + jj) % 3);
                    z.push_back(Complex(Real(zz(gen))));
                }
                dcases.emplace_back(nn, z, 1 + (i % d));
            }
        }
        for (std::size_t i = 0; i < dcases.size(); ++i) {
            const auto& [nn, z, jj] = dcases[i];
            cases.push_back({"case " + std::to_string(i),
                             verify_qdiff(nn, z, jj, qp, cfg), cfg.tol * pow10(6)});
        }
    } else if (suite == "qftc") {
        auto cube = [](const Complex& zz) { return zz * zz * zz; };
        auto dcube = [&](const Complex& zz) { return jackson_derivative(cube, zz, qp); };
        Real x = Real(9) / 10;
        Complex ftc = jackson_integral(dcube, Real(0), x, qp, cfg).value;
        cases.push_back({"polynomial ftc", cabs(ftc - cube(Complex(x))), pow10(-45)});
        auto li2 = [&](const Complex& zz) {
            return qpolylog_direct({2}, {zz}, qp, cfg).value;
        };
        auto dli = [&](const Complex& zz) { return jackson_derivative(li2, zz, qp); };
        Complex f2 = jackson_integral(dli, Real(0), Real(1) / 2, qp, cfg).value;
        cases.push_back({"series ftc", cabs(f2 - li2(Complex(Real(1) / 2))),
                         cfg.tol * pow10(6)});
    } else if (suite == "qshuffle-lemma") {
        SVec pa = a_list.empty() ? SVec{Complex(3)} : parse_cvec(a_list);
        SVec pb = b_list.empty() ? SVec{Complex(5)} : parse_cvec(b_list);
        inputs["a"] = a_list.empty() ? "3" : a_list;
        inputs["b"] = b_list.empty() ? "5" : b_list;
        inputs["upper"] = upper;
        auto rec = verify_qshuffle_lemma(pa, pb, Real(upper), qp, cfg);
        for (const auto& [name, value] : rec.parts) extra.emplace_back(name, value);
        cases.push_back({rec.name, rec.residual, cfg.tol * pow10(6)});
    } else if (suite == "lemma-li-shift") {
        inputs["e"] = e_shift;
        inputs["gamma"] = gamma;
        auto rec = lemma_li_shift(e_shift, gamma, qp, cfg);
        for (const auto& [name, value] : rec.parts) extra.emplace_back(name, value);
        // the printed display only holds for e = 0 or gamma = 2; elsewhere
        // compare against the corrected right-hand side
        Real resid = rec.residual;
        if (e_shift >= 1 && gamma >= 3) {
            for (const auto& [name, value] : rec.parts)
                if (name == "rhs_corrected") resid = cabs(rec.lhs - value);
        }
        cases.push_back({rec.name, resid, cfg.tol * pow10(6)});
    } else {
        throw CLI::ValidationError("suite", "unknown verification suite: " + suite);
    }
    return run_suite(opts, suite, cases, inputs, qp, cfg, t0, extra);
}

// ---- table -----------------------------------------------------------------

int run_table(const CommonOpts& opts, long kmax, long nmax, bool with_q) {
    auto t0 = std::chrono::steady_clock::now();
    QParam qp = opts.qparam();
    SeriesConfig cfg = opts.config(qp);
    Report rep("table", json{{"kmax", kmax}, {"nmax", nmax}},
               opts.config_json(qp, cfg));
    rep.format = opts.format;
    rep.out_path = opts.out_path;

    json rows = json::array();
    for (long k = 0; k <= kmax; ++k) {
        for (long n = 0; n <= nmax; ++n) {
            json row{{"k", k}, {"n", n}, {"point", {n + 2 - k, -n}}};
            if (k % 2 == 0 && k >= n + 2) {
                row["kind"] = "indeterminacy";
                row["value"] =
                    dbzeta_neg(k - n - 2, n, LimitOrder::s2_first).str();
                row["value_reversed"] =
                    dbzeta_neg(k - n - 2, n, LimitOrder::s1_first).str();
                if (with_q) {
                    row["q_value"] =
                        cjson(kgen2_value(k - n - 2, n, LimitOrder::s2_first, qp));
                    row["q_value_reversed"] =
                        cjson(kgen2_value(k - n - 2, n, LimitOrder::s1_first, qp));
                }
            } else {
                DbzetaRow t = dbzeta_table(k, n);
                if (t.is_pole) {
                    row["kind"] = "pole";
                    row["residue"] = t.residue.str();
                    if (with_q) row["q_residue"] = cjson(res_closed(k, n, qp));
                } else {
                    row["kind"] = "value";
                    row["value"] = t.value_is_rational ? json(t.value_rational.str())
                                                       : json(cjson(t.value));
                    if (with_q && k >= 1 && k <= n + 1)
                        row["q_residue_same_family"] = cjson(res_closed(k, n, qp));
                }
            }
            rows.push_back(std::move(row));
        }
    }
    rep.add_result("rows", rows);
    return rep.finish(elapsed_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-deformed multiple zeta evaluator"};
    app.require_subcommand(1);

    CommonOpts opts;
    if (const char* env = std::getenv("QZETA_PREC")) opts.prec = std::atoi(env);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate zeta_q or a q-polylog");
    std::string s_list, n_list, z_list, method = "auto";
    bool polylog = false;
    eval->add_option("--s", s_list, "comma list of exponents (a+bi entries allowed)");
    eval->add_flag("--polylog", polylog, "evaluate Li_q instead of zeta_q");
    eval->add_option("--n", n_list, "polylog weights, positive integers");
    eval->add_option("--z", z_list, "polylog arguments");
    eval->add_option("--method", method, "auto|direct|continued")
        ->check(CLI::IsMember({"auto", "direct", "continued"}));
    opts.attach(eval);

    // residue
    auto* residue = app.add_subcommand("residue", "residue of zeta_q at a lattice point");
    std::string point_str, mode = "both";
    residue->add_option("--point", point_str, "integer point, e.g. 4,-4")->required();
    residue->add_option("--mode", mode, "closed|numeric|both")
        ->check(CLI::IsMember({"closed", "numeric", "both"}));
    opts.attach(residue);

    // limit
    auto* limit = app.add_subcommand("limit", "q->1 extrapolation of a target");
    std::string target;
    int levels = 10;
    limit->add_option("--target", target,
                      "zeta:<s-list> | residue:<p1,p2> | value:<m,n>[:R]")
        ->required();
    limit->add_option("--levels", levels, "deepest ladder level J (q = 1 - 2^-J)");
    opts.attach(limit, /*with_q=*/false);

    // verify
    auto* verify = app.add_subcommand("verify", "identity verification suites");
    std::string suite, w1, w2, weights, vz, a_list, b_list;
    long vm = 2, vn = 3, e_shift = 0, gamma = 3;
    int jcoord = 1, cases_requested = 5;
    double upper = 1.0;
    verify
        ->add_option("suite", suite,
                     "series-shuffle | integral-shuffle | qdiff | qftc | "
                     "qshuffle-lemma | lemma-li-shift")
        ->required();
    verify->add_option("--w1", w1, "first word (series-shuffle)");
    verify->add_option("--w2", w2, "second word (series-shuffle)");
    verify->add_option("--m", vm, "first exponent (integral-shuffle)");
    verify->add_option("--n", vn, "second exponent (integral-shuffle)");
    verify->add_option("--weights", weights, "polylog weights (qdiff)");
    verify->add_option("--z", vz, "polylog arguments (qdiff)");
    verify->add_option("--j", jcoord, "coordinate for qdiff, 1-based");
    verify->add_option("--a", a_list, "u-side poles (qshuffle-lemma)");
    verify->add_option("--b", b_list, "v-side poles (qshuffle-lemma)");
    verify->add_option("--upper", upper, "integration upper limit (qshuffle-lemma)");
    verify->add_option("--e", e_shift, "shift (lemma-li-shift)");
    verify->add_option("--gamma", gamma, "weight (lemma-li-shift)");
    verify->add_option("--cases", cases_requested, "number of randomized cases");
    opts.attach(verify);

    // table
    auto* table = app.add_subcommand("table", "pole/indeterminacy table");
    long kmax = 4, nmax = 4;
    bool table_with_q = false;
    table->add_option("--kmax", kmax, "largest k");
    table->add_option("--nmax", nmax, "largest n");
    opts.attach(table);
    table->add_flag("--with-q", table_with_q,
                    "attach the q-side closed forms at the given --q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (opts.serial) parallel::set_enabled(false);

    try {
        if (eval->parsed())
            return run_eval(opts, s_list, polylog, n_list, z_list, method);
        if (residue->parsed()) return run_residue(opts, point_str, mode);
        if (limit->parsed()) return run_limit(opts, target, levels);
        if (verify->parsed())
            return run_verify(opts, suite, w1, w2, vm, vn, weights, vz, jcoord,
                              a_list, b_list, upper, e_shift, gamma, cases_requested);
        if (table->parsed()) return run_table(opts, kmax, nmax, table_with_q);
    } catch (const PoleError& e) {
        std::cerr << "pole/singular set: " << e.what() << "\n";
        return kExitPole;
    } catch (const ConvergenceError& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return kExitNoConverge;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
