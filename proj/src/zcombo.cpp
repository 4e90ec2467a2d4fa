#include "qzeta/zcombo.hpp"

#include "qzeta/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qzeta {

QPoly QPoly::monomial(Rational c, int deg) {
    QPoly p;
    if (c == 0) return p;
    p.coeffs_.assign(deg + 1, Rational(0));
    p.coeffs_[deg] = std::move(c);
    return p;
}

QPoly QPoly::one_minus_q_pow(int r) {
    QPoly p(1);
    QPoly base = QPoly(1) - QPoly::q();
    for (int i = 0; i < r; ++i) p *= base;
    return p;
}

QPoly QPoly::q_minus_one_pow(int r) {
    QPoly p(1);
    QPoly base = QPoly::q() - QPoly(1);
    for (int i = 0; i < r; ++i) p *= base;
    return p;
}

Rational QPoly::coeff(int deg) const {
    if (deg < 0 || deg >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[deg];
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

Real QPoly::eval(const Real& q) const {
    Real acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + to_real(*it);
    return acc;
}

Rational QPoly::eval_rational(const Rational& q) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * q + *it;
    return acc;
}

std::string QPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < static_cast<int>(coeffs_.size()); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) a = -c;
        }
        first = false;
        bool unit = (a == 1 && i > 0);
        if (!unit) os << a;
        if (i > 0) {
            if (!unit) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }

Letter merge_letters(const Letter& a, const Letter& b, long extra_shift) {
    Letter out;
    out.ids.reserve(a.ids.size() + b.ids.size());
    std::merge(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(),
               std::back_inserter(out.ids));
    out.shift = a.shift + b.shift + extra_shift;
    return out;
}

Complex ZCombo::letter_value(const Letter& l) const {
    Complex v(Real(l.shift));
    for (int id : l.ids) {
        if (id < 0 || id >= static_cast<int>(basis.size()))
            throw DomainError("ZCombo: letter references an unknown basis entry");
        v += basis[id];
    }
    return v;
}

SVec ZCombo::word_values(const LetterWord& w) const {
    SVec out;
    out.reserve(w.size());
    for (const auto& l : w) out.push_back(letter_value(l));
    return out;
}

void ZCombo::canonicalize() {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<std::pair<QPoly, LetterWord>> merged;
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().second == t.second)
            merged.back().first += t.first;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const auto& t) { return t.first.is_zero(); });
    terms = std::move(merged);
}

bool ZCombo::identical(const ZCombo& o) const {
    ZCombo a = *this;
    ZCombo b = o;
    a.canonicalize();
    b.canonicalize();
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
        if (!(a.terms[i].first == b.terms[i].first) ||
            a.terms[i].second != b.terms[i].second)
            return false;
    return true;
}

namespace {

std::string letter_str(const Letter& l) {
    std::ostringstream os;
    if (l.ids.empty()) {
        os << l.shift;
        return os.str();
    }
    for (std::size_t i = 0; i < l.ids.size(); ++i) {
        if (i) os << "+";
        os << "x" << l.ids[i];
    }
    if (l.shift > 0) os << "+" << l.shift;
    if (l.shift < 0) os << l.shift;
    return os.str();
}

}  // namespace

std::string ZCombo::str() const {
    std::ostringstream os;
    if (terms.empty()) os << "0";
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) os << " + ";
        os << "(" << terms[i].first.str() << ")*zeta[";
        for (std::size_t j = 0; j < terms[i].second.size(); ++j) {
            if (j) os << ", ";
            os << letter_str(terms[i].second[j]);
        }
        os << "]";
    }
    if (!basis.empty()) {
        os << "  where ";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (i) os << ", ";
            os << "x" << i << " = " << complex_str(basis[i], 17);
        }
    }
    return os.str();
}

}  // namespace qzeta
