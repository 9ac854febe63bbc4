// Exact scalar arithmetic: arbitrary-precision rationals (GMP) and the
// Gaussian rationals Q(i) used as the coefficient field everywhere in this
// library. Nothing here is ever rounded; equality always means equality.
#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace crsphere {

using Integer = mpz_class;
// Always reduced, denominator > 0, canonical zero 0/1 (gmpxx invariants).
using Rational = mpq_class;

// Parses "p", "p/q" or a plain decimal literal like "-0.25" (decimals are
// exact rationals). Throws std::invalid_argument on anything else.
inline Rational parse_rational(const std::string& raw) {
    std::string text = raw;
    if (!text.empty() && text.front() == '+') text.erase(0, 1);
    if (text.empty()) throw std::invalid_argument("empty rational");
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const auto frac_digits = text.size() - dot - 1;
        if (digits.empty() || frac_digits == 0)
            throw std::invalid_argument("malformed decimal: " + text);
        Integer num;
        if (num.set_str(digits, 10) != 0)
            throw std::invalid_argument("malformed decimal: " + text);
        Integer den = 1;
        for (size_t i = 0; i < frac_digits; ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline int sign(const Rational& r) { return sgn(r); }

// Element of Q(i). Conjugation is an involution; division is exact.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm_square() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        const Rational n = y.norm_square();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
    GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
    GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
    GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

    friend bool operator==(const GaussianRational& x, const GaussianRational& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const GaussianRational& x, const GaussianRational& y) { return !(x == y); }
};

// "p/q" or "p/q+r/si" / "p/q-r/si" / "r/si"; matches the polynomial text format.
inline std::string to_string(const GaussianRational& c) {
    if (c.im == 0) return c.re.get_str();
    std::string s;
    if (c.re != 0) {
        s += c.re.get_str();
        if (c.im > 0) s += "+";
    }
    s += c.im.get_str();
    s += "i";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
    return os << to_string(c);
}

}  // namespace crsphere
