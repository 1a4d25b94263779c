#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace krel {

using Rational = mpq_class;

/// Gaussian rational: re + im*i with exact rational components.
/// This is the scalar of every core computation; arithmetic never rounds.
struct Gq {
  Rational re{0};
  Rational im{0};

  Gq() = default;
  Gq(long n) : re(n) {}  // NOLINT: deliberate implicit integer literal
  Gq(Rational r) : re(std::move(r)) {}
  Gq(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool isZero() const { return re == 0 && im == 0; }
  bool isReal() const { return im == 0; }

  Gq conj() const { return Gq(re, Rational(-im)); }
  /// |z|^2, a nonnegative rational.
  Rational normSq() const { return Rational(re * re + im * im); }

  friend bool operator==(const Gq& a, const Gq& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gq& a, const Gq& b) { return !(a == b); }
  friend Gq operator+(const Gq& a, const Gq& b) { return Gq(Rational(a.re + b.re), Rational(a.im + b.im)); }
  friend Gq operator-(const Gq& a, const Gq& b) { return Gq(Rational(a.re - b.re), Rational(a.im - b.im)); }
  friend Gq operator-(const Gq& a) { return Gq(Rational(-a.re), Rational(-a.im)); }
  friend Gq operator*(const Gq& a, const Gq& b) {
    return Gq(Rational(a.re * b.re - a.im * b.im), Rational(a.re * b.im + a.im * b.re));
  }
  friend Gq operator/(const Gq& a, const Gq& b);

  Gq& operator+=(const Gq& o) { return *this = *this + o; }
  Gq& operator-=(const Gq& o) { return *this = *this - o; }
  Gq& operator*=(const Gq& o) { return *this = *this * o; }
};

inline Gq gqI() { return Gq(Rational(0), Rational(1)); }

std::complex<double> toComplex(const Gq& z);

/// Serialized form "a/b+c/d*i" with both components in lowest terms;
/// integral components drop the denominator ("0+1*i", "2-3*i").
std::string formatScalar(const Gq& z);
/// Accepts "a", "a+b*i", "a-b*i", "b*i", "-b*i", "i", "-i" with rational a, b.
Gq parseScalar(const std::string& text);

std::string formatRational(const Rational& r);
Rational parseRational(const std::string& text);

}  // namespace krel
