#pragma once

#include "qzeta/qseries.hpp"

#include <string>
#include <vector>

namespace qzeta {

/// Polynomial in q with exact rational coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(Rational c) { if (c != 0) coeffs_.push_back(std::move(c)); }  // NOLINT
    QPoly(long c) : QPoly(Rational(c)) {}                               // NOLINT

    static QPoly q() { return monomial(1, 1); }
    static QPoly monomial(Rational c, int deg);
    static QPoly one_minus_q_pow(int r);
    static QPoly q_minus_one_pow(int r);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int deg) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);

    Real eval(const Real& q) const;
    Rational eval_rational(const Rational& q) const;
    Rational at_one() const { return eval_rational(1); }

    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[i] multiplies q^i
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(QPoly a, const QPoly& b);

/// A letter: sum of base letters (indices into a basis) plus an integer
/// shift. Keeping letters structural makes canonicalization exact even
/// when the base values are floating-point.
struct Letter {
    std::vector<int> ids;  // sorted ascending, repeats allowed
    long shift = 0;

    Letter() = default;
    explicit Letter(int id) : ids{id} {}

    bool operator==(const Letter& o) const = default;
    bool operator<(const Letter& o) const {
        if (ids != o.ids) return ids < o.ids;
        return shift < o.shift;
    }
};

Letter merge_letters(const Letter& a, const Letter& b, long extra_shift = 0);

using LetterWord = std::vector<Letter>;

/// Formal finite combination sum_i coeff_i(q) * zeta_q(word_i) over a
/// shared basis of concrete letter values.
struct ZCombo {
    std::vector<Complex> basis;
    std::vector<std::pair<QPoly, LetterWord>> terms;

    Complex letter_value(const Letter& l) const;
    SVec word_values(const LetterWord& w) const;

    /// Sort terms, merge identical words, drop zero coefficients.
    void canonicalize();

    bool identical(const ZCombo& o) const;  // canonical-form equality

    std::string str() const;
};

}  // namespace qzeta
