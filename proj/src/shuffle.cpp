#include "qzeta/shuffle.hpp"

#include "qzeta/parallel.hpp"

#include <sstream>

namespace qzeta {

namespace {

using Terms = std::vector<std::pair<QPoly, LetterWord>>;

Terms prepend(const Letter& l, Terms terms, const QPoly& scale) {
    for (auto& [coeff, word] : terms) {
        coeff *= scale;
        word.insert(word.begin(), l);
    }
    return terms;
}

// recursion over suffixes w1[i..], w2[j..]; ids of w2 letters are offset
// by |w1| in the shared basis
Terms shuffle_rec(int i, int r, int j, int s, bool q_deformed) {
    if (i == r && j == s) return {{QPoly(1), LetterWord{}}};
    Terms out;
    if (i < r) {
        Terms sub = prepend(Letter(i), shuffle_rec(i + 1, r, j, s, q_deformed), QPoly(1));
        out.insert(out.end(), sub.begin(), sub.end());
    }
    if (j < s) {
        Terms sub = prepend(Letter(r + j), shuffle_rec(i, r, j + 1, s, q_deformed), QPoly(1));
        out.insert(out.end(), sub.begin(), sub.end());
    }
    if (i < r && j < s) {
        Terms rest = shuffle_rec(i + 1, r, j + 1, s, q_deformed);
        Letter merged = merge_letters(Letter(i), Letter(r + j));
        Terms sub = prepend(merged, rest, QPoly(1));
        out.insert(out.end(), sub.begin(), sub.end());
        if (q_deformed) {
            Letter lowered = merge_letters(Letter(i), Letter(r + j), -1);
            Terms low = prepend(lowered, std::move(rest), QPoly::one_minus_q_pow(1));
            out.insert(out.end(), low.begin(), low.end());
        }
    }
    return out;
}

ZCombo shuffle_impl(const SVec& w1, const SVec& w2, bool q_deformed) {
    ZCombo combo;
    combo.basis = w1;
    combo.basis.insert(combo.basis.end(), w2.begin(), w2.end());
    combo.terms = shuffle_rec(0, static_cast<int>(w1.size()), 0,
                              static_cast<int>(w2.size()), q_deformed);
    combo.canonicalize();
    return combo;
}

}  // namespace

ZCombo qshuffle(const SVec& w1, const SVec& w2) {
    return shuffle_impl(w1, w2, true);
}

ZCombo classical_shuffle(const SVec& w1, const SVec& w2) {
    return shuffle_impl(w1, w2, false);
}

EvalResult eval_combo(const ZCombo& combo, const QParam& qp, const SeriesConfig& cfg) {
    EvalResult out;
    std::vector<EvalResult> parts(combo.terms.size());
    std::vector<std::string> failures(combo.terms.size());
    parallel::for_each_index(combo.terms.size(), [&](std::size_t i) {
        const auto& [coeff, word] = combo.terms[i];
        try {
            if (word.empty()) {
                parts[i].value = Complex(1);
            } else {
                parts[i] = qzeta_eval(combo.word_values(word), qp, cfg);
            }
        } catch (const Error& e) {
            failures[i] = e.what();
        }
    });
    for (std::size_t i = 0; i < combo.terms.size(); ++i) {
        if (!failures[i].empty()) {
            std::ostringstream os;
            os << "eval_combo: term " << i << " failed: " << failures[i];
            throw PoleError(os.str());
        }
        Real c = combo.terms[i].first.eval(qp.q());
        out.value += Complex(c) * parts[i].value;
        out.error_bound += abs(c) * parts[i].error_bound;
        out.terms_used += parts[i].terms_used;
        out.truncated = out.truncated || parts[i].truncated;
    }
    return out;
}

ZCombo specialize_q1(const ZCombo& combo) {
    ZCombo out;
    out.basis = combo.basis;
    for (const auto& [coeff, word] : combo.terms)
        out.terms.emplace_back(QPoly(coeff.at_one()), word);
    out.canonicalize();
    return out;
}

}  // namespace qzeta
