#pragma once

#include "qzeta/continuation.hpp"
#include "qzeta/zcombo.hpp"

namespace qzeta {

/// Series (stuffle-type) q-shuffle product on words of complex letters:
///   a w1 * b w2 = a(w1 * b w2) + b(a w1 * w2) + S(a+b)(w1 * w2),
/// the merged letter expanding as (a+b) + (1-q)(a+b-1). The empty word is
/// the unit. Letters of the result stay structural (basis indices plus an
/// integer shift), so canonicalization is exact.
ZCombo qshuffle(const SVec& w1, const SVec& w2);

/// Classical shuffle of the series representation: the merged term is
/// (a+b) with constant coefficient.
ZCombo classical_shuffle(const SVec& w1, const SVec& w2);

/// sum_i coeff_i(q) * zeta_q(word_i); empty words contribute the empty
/// product 1. Pole errors carry the offending word.
EvalResult eval_combo(const ZCombo& combo, const QParam& qp, const SeriesConfig& cfg);

/// Coefficient specialization at q = 1 (drops vanished terms).
ZCombo specialize_q1(const ZCombo& combo);

}  // namespace qzeta
