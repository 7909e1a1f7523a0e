#pragma once

#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qfejer/monomial.hpp"
#include "qfejer/scalar.hpp"
#include "qfejer/system.hpp"

namespace qfejer {

/// Finitely supported vector over the canonical integer basis of l^2(Z).
using SparseVector = std::map<long long, GaussianRational>;

inline SparseVector delta(long long k) { return {{k, GaussianRational::one()}}; }

inline Rational vector_norm_sq(const SparseVector& v) {
  Rational s(0);
  for (const auto& [k, c] : v) s += c.norm_sq();
  return s;
}

/// <x, y> = sum_k x_k * conj(y_k).
inline GaussianRational inner(const SparseVector& x, const SparseVector& y) {
  GaussianRational s;
  auto ix = x.begin();
  auto iy = y.begin();
  while (ix != x.end() && iy != y.end()) {
    if (ix->first < iy->first)
      ++ix;
    else if (iy->first < ix->first)
      ++iy;
    else {
      s += ix->second * iy->second.conj();
      ++ix;
      ++iy;
    }
  }
  return s;
}

/// A finite formal sum of canonical monomials with Gaussian-rational
/// coefficients over a fixed dynamical system. The term map is only one
/// presentation of the element: distinct maps can denote the same algebra
/// element (relation (III) makes monomials linearly dependent across
/// levels), so equality is decided by is_zero/eq below, never by comparing
/// term maps.
class Element {
 public:
  using TermMap = std::map<Monomial, GaussianRational, TermOrder>;

  explicit Element(SystemDescriptor sys) : system_(sys) {}

  static Element zero(SystemDescriptor sys) { return Element(sys); }

  static Element scalar(SystemDescriptor sys, const GaussianRational& c) {
    Element e(sys);
    e.add_term(Monomial::identity(), c);
    return e;
  }

  static Element one(SystemDescriptor sys) { return scalar(sys, GaussianRational::one()); }

  /// u_g
  static Element unitary(SystemDescriptor sys, long long g) {
    Element e(sys);
    e.add_term(Monomial{g, 1, 1, 0}, GaussianRational::one());
    return e;
  }

  /// s_p
  static Element isometry(SystemDescriptor sys, long long p) {
    sys.require_member(p);
    Element e(sys);
    e.add_term(Monomial{0, p, 1, 0}, GaussianRational::one());
    return e;
  }

  static Element from_monomial(SystemDescriptor sys, const Monomial& m,
                               const GaussianRational& c = GaussianRational::one()) {
    Element e(sys);
    e.add_term(canonicalize(m), c);
    return e;
  }

  const SystemDescriptor& system() const { return system_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  /// True when the term map itself is empty. This does not decide zeroness
  /// of the element; use is_zero for that.
  bool empty() const { return terms_.empty(); }

  /// Merges a canonical monomial into the sum, dropping the entry if the
  /// coefficient cancels.
  void add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    if (m.h < 0 || m.h >= m.q) throw Error("non-canonical monomial: h out of [0, q)");
    system_.require_member(m.p);
    system_.require_member(m.q);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  SystemDescriptor system_;
  TermMap terms_;
};

inline void require_same_system(const Element& a, const Element& b) {
  if (!(a.system() == b.system()))
    throw SystemMismatchError("elements from different systems: " + a.system().name() +
                              " vs " + b.system().name());
}

inline Element operator+(const Element& a, const Element& b) {
  require_same_system(a, b);
  Element out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

inline Element operator-(const Element& a) {
  Element out(a.system());
  for (const auto& [m, c] : a.terms()) out.add_term(m, -c);
  return out;
}

inline Element operator-(const Element& a, const Element& b) { return a + (-b); }

inline Element operator*(const GaussianRational& c, const Element& a) {
  Element out(a.system());
  for (const auto& [m, cm] : a.terms()) out.add_term(m, c * cm);
  return out;
}

inline Element operator*(const Rational& c, const Element& a) {
  return GaussianRational(c) * a;
}

/// Monomial product via relations (I) and (II): the inner word
/// s_q^* u_{h+g'} s_{p'} is rewritten by solve_relation_two, then the
/// remaining unitaries and isometries are merged through relation (I).
inline Element mul(const Element& a, const Element& b) {
  require_same_system(a, b);
  const SystemDescriptor& sys = a.system();
  Element out(sys);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto sol = sys.solve_relation_two(ma.h + mb.g, ma.q, mb.p);
      if (!sol) continue;  // the vanishing branch of relation (II)
      Monomial m = canonicalize(ma.g + ma.p * sol->g1, ma.p * sol->p_out,
                                sol->q_out * mb.q, mb.q * sol->g2 + mb.h);
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }

/// Conjugate-linear antihomomorphism.
inline Element adjoint(const Element& a) {
  Element out(a.system());
  for (const auto& [m, c] : a.terms()) out.add_term(monomial_adjoint(m), c.conj());
  return out;
}

/// Exact image of a finitely supported vector under the canonical
/// representation on l^2(Z). Named act rather than apply so unqualified
/// calls cannot collide with std::apply through argument lookup on the
/// std::map argument.
inline SparseVector act(const Element& a, const SparseVector& v) {
  SparseVector out;
  for (const auto& [k, c] : v)
    for (const auto& [m, cm] : a.terms())
      if (auto img = monomial_apply(m, k)) out[*img] += cm * c;
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// One refined piece of an element's basis action: affine map slope*k +
/// intercept restricted to one residue class modulo the common modulus.
struct AffinePiece {
  long long modulus;
  long long residue;
  Rational slope;
  Rational intercept;

  friend bool operator==(const AffinePiece&, const AffinePiece&) = default;
  friend bool operator<(const AffinePiece& a, const AffinePiece& b) {
    return std::tie(a.modulus, a.residue, a.slope, a.intercept) <
           std::tie(b.modulus, b.residue, b.slope, b.intercept);
  }
};

using AffinePieceMap = std::map<AffinePiece, GaussianRational>;

namespace detail {

// Caps the refinement work of the exact zero test; generous for every
// desk-scale input, and an exception beats a wrong answer on adversarial
// coprime moduli.
inline constexpr long long kMaxRefinementClasses = 1LL << 22;

inline long long checked_lcm(long long a, long long b) {
  long long g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > (static_cast<__int128>(1) << 62))
    throw BudgetExceededError("residue refinement modulus overflow");
  return static_cast<long long>(l);
}

// Accumulated per-class coefficient sums of a family of terms sharing one
// affine map; classes taken modulo the lcm of the family's moduli.
inline std::map<long long, GaussianRational> refine_group(
    const std::vector<std::pair<const Monomial*, const GaussianRational*>>& group) {
  long long l = 1;
  for (const auto& [m, c] : group) l = checked_lcm(l, m->q);
  __int128 classes = 0;
  for (const auto& [m, c] : group) classes += l / m->q;
  if (classes > kMaxRefinementClasses)
    throw BudgetExceededError("residue refinement too large for exact zero test");
  std::map<long long, GaussianRational> acc;
  for (const auto& [m, c] : group) {
    long long r0 = ((-m->h % m->q) + m->q) % m->q;
    for (long long j = 0; j < l / m->q; ++j) acc[r0 + j * m->q] += *c;
  }
  return acc;
}

using MapGroups =
    std::map<std::pair<Rational, Rational>,
             std::vector<std::pair<const Monomial*, const GaussianRational*>>>;

inline MapGroups group_by_affine_map(const Element& a) {
  MapGroups groups;
  for (const auto& [m, c] : a.terms()) {
    PartialAffineMap pm = PartialAffineMap::of(m);
    groups[{pm.slope, pm.intercept}].emplace_back(&m, &c);
  }
  return groups;
}

}  // namespace detail

/// Splits every term's domain into residue classes modulo the lcm L of all
/// moduli and merges coefficients of coinciding (class, map) pieces. The
/// empty result characterizes the zero element.
inline AffinePieceMap to_affine_pieces(const Element& a) {
  long long l = 1;
  for (const auto& [m, c] : a.terms()) l = detail::checked_lcm(l, m.q);
  __int128 classes = 0;
  for (const auto& [m, c] : a.terms()) classes += l / m.q;
  if (classes > detail::kMaxRefinementClasses)
    throw BudgetExceededError("affine piece refinement too large");
  AffinePieceMap pieces;
  for (const auto& [m, c] : a.terms()) {
    PartialAffineMap pm = PartialAffineMap::of(m);
    for (long long j = 0; j < l / m.q; ++j)
      pieces[{l, pm.residue + j * m.q, pm.slope, pm.intercept}] += c;
  }
  for (auto it = pieces.begin(); it != pieces.end();)
    it = it->second.is_zero() ? pieces.erase(it) : std::next(it);
  return pieces;
}

/// Sound and complete zero test through the canonical representation:
/// distinct (class, affine map) pieces act linearly independently, so the
/// element vanishes iff every merged piece coefficient does. Terms are
/// grouped by affine map first, so each refinement only spans the moduli
/// within one group; the verdict agrees with emptiness of
/// to_affine_pieces(a) at lower cost.
inline bool is_zero(const Element& a) {
  if (a.empty()) return true;
  for (const auto& [map, group] : detail::group_by_affine_map(a)) {
    for (const auto& [cls, sum] : detail::refine_group(group))
      if (!sum.is_zero()) return false;
  }
  return true;
}

/// Equality in the C*-algebra, decided via the faithful canonical
/// representation.
inline bool eq(const Element& a, const Element& b) {
  require_same_system(a, b);
  return is_zero(a - b);
}

/// Exact two-sided bracket for the operator norm. The true norm is
/// sqrt(lower_sq) <= ||a|| <= upper.
struct NormBounds {
  Rational lower_sq;  // max over probe vectors v of ||a v||^2 / ||v||^2
  Rational upper;     // triangle bound over affine map groups
};

/// Upper bound: terms sharing one affine map act as a direct sum over their
/// residue classes, so such a family contributes max_class |coeff sum|; the
/// bounds of distinct map groups add. |.| of a Gaussian rational is bounded
/// by |re| + |im|. Lower bound: exact Rayleigh quotients of the probe family
/// delta_k, |k| <= window, together with all pairwise sums delta_j + delta_k.
inline NormBounds norm_bounds(const Element& a, long long window = 64) {
  Rational upper(0);
  for (const auto& [map, group] : detail::group_by_affine_map(a)) {
    Rational group_max(0);
    for (const auto& [cls, sum] : detail::refine_group(group)) {
      Rational m = sum.abs_upper();
      if (m > group_max) group_max = m;
    }
    upper += group_max;
  }

  Rational lower_sq(0);
  std::vector<SparseVector> images;
  images.reserve(static_cast<std::size_t>(2 * window + 1));
  for (long long k = -window; k <= window; ++k) {
    images.push_back(act(a, delta(k)));
    Rational n = vector_norm_sq(images.back());
    if (n > lower_sq) lower_sq = n;
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    Rational ni = vector_norm_sq(images[i]);
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      // ||a(delta_i + delta_j)||^2 / 2
      Rational n = (ni + vector_norm_sq(images[j]) +
                    Rational(2) * inner(images[i], images[j]).re) /
                   Rational(2);
      if (n > lower_sq) lower_sq = n;
    }
  }
  return {lower_sq, upper};
}

/// Sum of |re| + |im| over the raw term coefficients.
inline Rational coeff_abs_sum(const Element& a) {
  Rational s(0);
  for (const auto& [m, c] : a.terms()) s += c.abs_upper();
  return s;
}

/// Canonical text form, re-parseable by the expression parser. Terms appear
/// in (q, p, h, g) order.
inline std::string to_text(const Element& a) {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : a.terms()) {
    bool neg = c.re < 0 || (c.re == 0 && c.im < 0);
    GaussianRational mag = neg ? -c : c;
    std::string coeff;
    if (!(mag == GaussianRational::one()) || m.is_identity()) coeff = to_string(mag);
    std::string term = coeff;
    if (!m.is_identity()) {
      if (!term.empty()) term += " ";
      term += to_string(m);
    }
    if (out.empty())
      out = neg ? "- " + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Element& a) {
  return os << to_text(a);
}

}  // namespace qfejer
