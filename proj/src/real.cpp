#include "qzeta/real.hpp"

#include <sstream>

namespace qzeta {

Real to_real(const Rational& r) {
    // decimal-string hop: the direct cpp_int -> mpfr interconversion is
    // unreliable in the Boost release shipped here
    Real num(numerator(r).str());
    Real den(denominator(r).str());
    return num / den;
}

Complex cexp(const Complex& z) {
    Real m = exp(z.re);
    if (z.im == 0) return {m, Real(0)};
    return {m * cos(z.im), m * sin(z.im)};
}

Complex clog(const Complex& z) {
    if (z.im == 0 && z.re > 0) return {log(z.re), Real(0)};
    return {log(cabs(z)), atan2(z.im, z.re)};
}

Complex cpow_int(Complex base, long n) {
    if (n < 0) {
        base = Complex(1) / base;
        n = -n;
    }
    Complex acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Complex cpow_real_base(const Real& z, const Complex& s) {
    Real lz = log(z);
    return cexp({s.re * lz, s.im * lz});
}

BigInt nearest_int(const Real& x) {
    return BigInt(round(x).convert_to<long long>());
}

bool is_integer(const Real& x) {
    return floor(x) == x;
}

Real pow10(long e) {
    return real_pow_int(Real(10), e);
}

Real real_pow_int(const Real& base, long n) {
    bool neg = n < 0;
    unsigned long m = neg ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Real acc = 1;
    Real b = base;
    while (m > 0) {
        if (m & 1) acc *= b;
        b *= b;
        m >>= 1;
    }
    return neg ? 1 / acc : acc;
}

std::string real_str(const Real& x, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

std::string complex_str(const Complex& z, int digits) {
    if (z.im == 0) return real_str(z.re, digits);
    std::string s = real_str(z.re, digits);
    s += (z.im < 0) ? " - " : " + ";
    s += real_str(abs(z.im), digits);
    s += "i";
    return s;
}

}  // namespace qzeta
