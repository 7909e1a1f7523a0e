#pragma once

#include <compare>
#include <numeric>
#include <ostream>
#include <string>

#include "qfejer/errors.hpp"

namespace qfejer {

/// A reduced positive fraction p/q, the value of the gauge grading in the
/// group of fractions of P. The group operation is fraction multiplication.
struct Degree {
  long long num = 1;
  long long den = 1;

  Degree() = default;
  Degree(long long n, long long d) : num(n), den(d) {
    if (n <= 0 || d <= 0) throw Error("degree must be a positive fraction");
    long long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }

  static Degree identity() { return Degree(); }

  bool is_identity() const { return num == 1 && den == 1; }

  Degree inverse() const { return Degree(den, num); }

  friend Degree operator*(const Degree& a, const Degree& b) {
    return Degree(a.num * b.num, a.den * b.den);
  }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree& a, const Degree& b) {
    if (auto c = a.num <=> b.num; c != 0) return c;
    return a.den <=> b.den;
  }
};

inline std::string to_string(const Degree& d) {
  return std::to_string(d.num) + "/" + std::to_string(d.den);
}

inline std::ostream& operator<<(std::ostream& os, const Degree& d) {
  return os << to_string(d);
}

}  // namespace qfejer
