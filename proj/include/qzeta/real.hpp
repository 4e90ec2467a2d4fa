#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

namespace qzeta {

// Working arithmetic: 60 decimal digits everywhere. Requested precisions
// (QParam::precision) are capped by this and only steer tolerances and
// pole-detection thresholds, so results carry ~20 guard digits over the
// 40-digit default.
inline constexpr int kWorkingDigits = 60;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kWorkingDigits>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Real to_real(const Rational& r);

/// Complex number over Real. Only the operations the evaluators need:
/// field arithmetic, exp/log (principal branch), integer powers, abs.
struct Complex {
    Real re{};
    Real im{};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}                    // NOLINT(google-explicit-constructor)
    Complex(double r) : re(r) {}                             // NOLINT(google-explicit-constructor)
    Complex(int r) : re(r) {}                                // NOLINT(google-explicit-constructor)
    Complex(long r) : re(r) {}                               // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(double r, double i) : re(r), im(i) {}

    bool is_real() const { return im == 0; }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    Complex& operator*=(const Real& s) { re *= s; im *= s; return *this; }
    Complex& operator/=(const Real& s) { re /= s; im /= s; return *this; }
    Complex& operator/=(const Complex& o);
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator*(Complex a, const Real& s) { return a *= s; }
inline Complex operator*(const Real& s, Complex a) { return a *= s; }
inline Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

inline Real norm2(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real cabs(const Complex& z) { return sqrt(norm2(z)); }
inline Complex conj(const Complex& z) { return {z.re, -z.im}; }

inline Complex& Complex::operator/=(const Complex& o) {
    Real d = norm2(o);
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline Complex operator/(Complex a, const Real& s) { return a /= s; }

inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

Complex cexp(const Complex& z);
Complex clog(const Complex& z);           // principal branch
Complex cpow_int(Complex base, long n);   // binary powering, n may be negative

/// z^s for positive real z via exp(s*log z); single-valued.
Complex cpow_real_base(const Real& z, const Complex& s);

/// Nearest integer; ties away from zero.
BigInt nearest_int(const Real& x);
bool is_integer(const Real& x);

Real pow10(long e);
Real real_pow_int(const Real& base, long n);
std::string real_str(const Real& x, int digits = kWorkingDigits - 5);
std::string complex_str(const Complex& z, int digits = kWorkingDigits - 5);

}  // namespace qzeta
