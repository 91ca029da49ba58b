#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <utility>

namespace firstint {

// Canonical arbitrary-precision rational: reduced, positive denominator.
// GMP keeps mpq_class canonical as long as every constructed value is
// canonicalized once, which make_rational guarantees.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Exact complex number re + im*i with rational parts; the coefficient field Q(i).
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long r) : re(make_rational(r)), im(0) {}
    GaussianRational(long r, long i) : re(make_rational(r)), im(make_rational(i)) {}

    static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    bool operator==(const GaussianRational& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        // (a * conj b) / |b|^2 ; exact, b must be nonzero.
        Rational n = b.norm();
        GaussianRational t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    GaussianRational& operator/=(const GaussianRational& o) { return *this = *this / o; }

    GaussianRational pow(unsigned k) const {
        GaussianRational acc(1);
        GaussianRational base = *this;
        while (k) {
            if (k & 1u) acc *= base;
            base *= base;
            k >>= 1u;
        }
        return acc;
    }

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    // Total order used only for canonical sorting of outputs.
    friend bool lex_less(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

// Canonical sign used by printers: negative iff re < 0, or re == 0 and im < 0.
inline bool print_negative(const GaussianRational& c) {
    if (sgn(c.re) != 0) return sgn(c.re) < 0;
    return sgn(c.im) < 0;
}

}  // namespace firstint
