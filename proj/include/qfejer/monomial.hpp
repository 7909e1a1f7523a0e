#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <tuple>

#include "qfejer/degree.hpp"
#include "qfejer/scalar.hpp"
#include "qfejer/system.hpp"

namespace qfejer {

/// The canonical word u_g s_p s_q^* u_h with 0 <= h < q. Canonical monomials
/// with distinct field tuples induce distinct partial affine maps on the
/// integer basis, hence are linearly independent.
struct Monomial {
  long long g = 0;
  long long p = 1;
  long long q = 1;
  long long h = 0;

  static Monomial identity() { return {}; }
  bool is_identity() const { return g == 0 && p == 1 && q == 1 && h == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Output order for element terms: (q, p, h, g).
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return std::tie(a.q, a.p, a.h, a.g) < std::tie(b.q, b.p, b.h, b.g);
  }
};

/// Reduces u_g s_p s_q^* u_h along u_g s_p s_q^* u_h = u_{g+pt} s_p s_q^* u_{h-qt}
/// to the unique representative with 0 <= h < q. Idempotent.
inline Monomial canonicalize(long long g, long long p, long long q, long long h) {
  long long hc = ((h % q) + q) % q;
  long long t = (h - hc) / q;
  return Monomial{g + p * t, p, q, hc};
}

inline Monomial canonicalize(const Monomial& m) { return canonicalize(m.g, m.p, m.q, m.h); }

/// (u_g s_p s_q^* u_h)^* = u_{-h} s_q s_p^* u_{-g}, canonicalized.
inline Monomial monomial_adjoint(const Monomial& m) {
  return canonicalize(-m.h, m.q, m.p, -m.g);
}

/// Action on the canonical basis of l^2(Z): delta_k maps to
/// delta_{p(k+h)/q + g} when q | (k+h), and to 0 otherwise.
inline std::optional<long long> monomial_apply(const Monomial& m, long long k) {
  long long s = k + m.h;
  if (((s % m.q) + m.q) % m.q != 0) return std::nullopt;
  return m.p * (s / m.q) + m.g;
}

/// Gauge grading value p/q of u_g s_p s_q^* u_h.
inline Degree monomial_degree(const Monomial& m) { return Degree(m.p, m.q); }

/// The affine description of a monomial's basis action: on the residue class
/// {k : k = residue mod modulus} the monomial sends k to slope*k + intercept,
/// and it kills every basis vector outside the class.
struct PartialAffineMap {
  long long modulus;   // = q
  long long residue;   // = (-h) mod q, in [0, modulus)
  Rational slope;      // = p/q
  Rational intercept;  // = p*h/q + g

  static PartialAffineMap of(const Monomial& m) {
    return {m.q, ((-m.h % m.q) + m.q) % m.q, rational(m.p, m.q),
            rational(m.p * m.h, m.q) + rational(m.g)};
  }

  std::optional<long long> apply(long long k) const {
    if (((k % modulus) + modulus) % modulus != residue) return std::nullopt;
    Rational v = slope * rational(k) + intercept;
    // integral on the domain class by construction
    return static_cast<long long>(mpz_class(v.get_num() / v.get_den()).get_si());
  }

  friend bool operator==(const PartialAffineMap&, const PartialAffineMap&) = default;
};

inline std::string to_string(const Monomial& m) {
  if (m.is_identity()) return "I";
  std::string s;
  auto piece = [&s](const std::string& t) {
    if (!s.empty()) s += " ";
    s += t;
  };
  if (m.g == 1)
    piece("U");
  else if (m.g != 0)
    piece("u(" + std::to_string(m.g) + ")");
  if (m.p != 1) piece("S(" + std::to_string(m.p) + ")");
  if (m.q != 1) piece("S(" + std::to_string(m.q) + ")'");
  if (m.h == 1)
    piece("U");
  else if (m.h != 0)
    piece("u(" + std::to_string(m.h) + ")");
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << to_string(m);
}

}  // namespace qfejer
