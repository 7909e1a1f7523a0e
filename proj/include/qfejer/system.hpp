#pragma once

#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qfejer/errors.hpp"

namespace qfejer {

enum class SystemKind {
  base_powers,  // P = { base^k : k >= 0 } acting on Z by multiplication
  naturals,     // P = { 1, 2, 3, ... } acting on Z by multiplication
};

/// Solution of s_p^* u_g s_q = u_{g1} s_{p_out} s_{q_out}^* u_{g2},
/// i.e. g = p*g1 + q*g2 with p*p_out = q*q_out = lcm(p, q).
struct RelationTwoSolution {
  long long g1;
  long long p_out;
  long long q_out;
  long long g2;
  friend bool operator==(const RelationTwoSolution&, const RelationTwoSolution&) = default;
};

/// One of the two shipped dynamical systems over G = Z: either the powers of
/// a fixed base >= 2, or all of the positive integers, acting on Z by
/// multiplication. Every semigroup operation the algebra needs (coset
/// transversals, the two-sided rewrite of relation (II)) lives here.
class SystemDescriptor {
 public:
  static SystemDescriptor base_powers(long long base) {
    if (base < 2) throw Error("base_powers system needs base >= 2");
    return SystemDescriptor(SystemKind::base_powers, base);
  }
  static SystemDescriptor q2() { return base_powers(2); }
  static SystemDescriptor naturals() { return SystemDescriptor(SystemKind::naturals, 0); }

  SystemKind kind() const { return kind_; }
  long long base() const { return base_; }

  /// Membership of p in the semigroup P.
  bool contains(long long p) const {
    if (p < 1) return false;
    if (kind_ == SystemKind::naturals) return true;
    while (p % base_ == 0) p /= base_;
    return p == 1;
  }

  void require_member(long long p) const {
    if (!contains(p))
      throw InvalidSemigroupElementError(std::to_string(p) + " is not in P of system " +
                                         name());
  }

  /// theta_p(g) = p*g.
  long long act(long long p, long long g) const {
    require_member(p);
    return p * g;
  }

  /// Canonical transversal (0, 1, ..., p-1) of pZ in Z; length = [Z : pZ] = p.
  std::vector<long long> transversal(long long p) const {
    require_member(p);
    std::vector<long long> reps(static_cast<std::size_t>(p));
    for (long long r = 0; r < p; ++r) reps[static_cast<std::size_t>(r)] = r;
    return reps;
  }

  /// Rewrites s_p^* u_g s_q. Returns nullopt when gcd(p,q) does not divide
  /// g (the vanishing branch). Otherwise g = p*g1 + q*g2 with the canonical
  /// representative g2 in [0, p/gcd(p,q)), which makes the output
  /// deterministic; any other solution of the congruence yields an equal
  /// algebra element after canonicalization.
  std::optional<RelationTwoSolution> solve_relation_two(long long g, long long p,
                                                        long long q) const {
    require_member(p);
    require_member(q);
    long long d = std::gcd(p, q);
    if (((g % d) + d) % d != 0) return std::nullopt;
    long long l = p / d * q;
    long long pr = p / d;  // modulus for g2
    long long qr = q / d;
    // g2 = (g/d) * (q/d)^{-1} mod (p/d)
    long long g2 = pr == 1 ? 0 : mod_pos(mod_pos(g / d, pr) * mod_inverse(qr, pr), pr);
    long long g1 = (g - q * g2) / p;
    return RelationTwoSolution{g1, l / p, l / q, g2};
  }

  std::string name() const {
    if (kind_ == SystemKind::naturals) return "qn";
    if (base_ == 2) return "q2";
    return "qp:" + std::to_string(base_);
  }

  static SystemDescriptor parse(const std::string& s) {
    if (s == "q2") return q2();
    if (s == "qn") return naturals();
    if (s.rfind("qp:", 0) == 0) {
      try {
        long long b = std::stoll(s.substr(3));
        return base_powers(b);
      } catch (const std::exception&) {
        throw Error("bad system string: " + s);
      }
    }
    throw Error("unknown system: " + s + " (expected q2, qp:<base>, or qn)");
  }

  friend bool operator==(const SystemDescriptor&, const SystemDescriptor&) = default;

 private:
  SystemDescriptor(SystemKind k, long long b) : kind_(k), base_(b) {}

  static long long mod_pos(long long a, long long m) { return ((a % m) + m) % m; }

  static long long mod_inverse(long long a, long long m) {
    // extended Euclid; gcd(a, m) = 1 by construction
    long long u = 1, v = 0, x = mod_pos(a, m), y = m;
    while (y != 0) {
      long long qt = x / y, r = x % y, t = u - qt * v;
      u = v;
      x = y;
      v = t;
      y = r;
    }
    return mod_pos(u, m);
  }

  SystemKind kind_;
  long long base_;
};

inline std::ostream& operator<<(std::ostream& os, const SystemDescriptor& s) {
  return os << s.name();
}

}  // namespace qfejer
