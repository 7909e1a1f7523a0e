#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qfejer/errors.hpp"

namespace qfejer {

/// Exact rational number. gmp's mpq_class does not canonicalize on
/// construction from a fraction, so build values through rational() below.
using Rational = mpq_class;

inline Rational rational(long long num, long long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(static_cast<long>(num), static_cast<long>(den));
  r.canonicalize();
  return r;
}

inline Rational rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "num" or "num/den".
inline Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  if (r.get_den() == 0) throw Error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline Rational rational_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Gaussian rational a + b*i with exact rational real and imaginary parts.
/// This is the coefficient field of the whole engine; no floating point
/// enters any computation.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r) : re(std::move(r)), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRational(long long n) : re(rational(n)), im(0) {}

  static GaussianRational zero() { return GaussianRational(); }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational i() { return GaussianRational(rational(0), rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, Rational(-im)}; }

  /// |re| + |im|: an exact rational upper bound for the modulus, attained
  /// whenever the value is purely real or purely imaginary.
  Rational abs_upper() const { return rational_abs(re) + rational_abs(im); }

  /// Squared modulus re^2 + im^2, exact.
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
  GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
  GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
  GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
};

/// Exact division; the Gaussian rationals are a field.
inline GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  Rational n = b.norm_sq();
  if (n == 0) throw Error("division by zero coefficient");
  GaussianRational num = a * b.conj();
  return {num.re / n, num.im / n};
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Renders a coefficient so that the expression parser reads it back:
/// "3/4", "-2", "3 i", "(1/2 + 3 i)", "(1/2 - 3 i)".
inline std::string to_string(const GaussianRational& c) {
  if (c.im == 0) return c.re.get_str();
  if (c.re == 0) {
    if (c.im == 1) return "i";
    if (c.im == -1) return "- i";
    return c.im.get_str() + " i";
  }
  std::string s = "(" + c.re.get_str();
  if (c.im > 0)
    s += " + " + (c.im == 1 ? std::string("i") : c.im.get_str() + " i");
  else {
    Rational m(-c.im);
    s += " - " + (m == 1 ? std::string("i") : m.get_str() + " i");
  }
  return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& c) {
  return os << to_string(c);
}

}  // namespace qfejer
