#pragma once

#include <string>

#include "braidrep/rational.hpp"

namespace braidrep {

/// Gaussian rational: re + im*i with exact rational parts. This is the
/// coefficient field for all scalars; conjugation negates im and fixes re.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

    static GaussianRational zero() { return GaussianRational(0); }
    static GaussianRational one() { return GaussianRational(1); }
    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// |z|^2 = z * conj(z), always a nonnegative rational.
    Rational norm_sq() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }

    GaussianRational inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero Gaussian rational");
        Rational n = norm_sq();
        return {re / n, -im / n};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

/// "3", "-3/2" for reals; "re+imi" / "re-imi" otherwise, e.g. "0+1i", "1/2-3/4i".
inline std::string gaussian_to_string(const GaussianRational& z) {
    if (z.im == 0) return rational_to_string(z.re);
    std::string s = rational_to_string(z.re);
    s += (z.im < 0) ? "-" : "+";
    Rational mag = z.im < 0 ? Rational(-z.im) : z.im;
    s += rational_to_string(mag);
    s += "i";
    return s;
}

}  // namespace braidrep
