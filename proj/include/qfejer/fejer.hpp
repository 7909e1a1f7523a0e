#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qfejer/element.hpp"
#include "qfejer/folner.hpp"
#include "qfejer/gauge.hpp"

namespace qfejer {

namespace detail {

inline bool is_prime_ll(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Exponent vector of num/den over the primes in order: coordinate i holds
/// the exponent of the i-th prime (2 at index 0). num and den are coprime,
/// so no coordinate mixes contributions.
inline HVec factor_exponents(long long num, long long den) {
  HVec out;
  long long idx = 0;
  for (long long c = 2; num > 1 || den > 1; ++c) {
    if (!is_prime_ll(c)) continue;
    long long e = 0;
    while (num % c == 0) {
      num /= c;
      ++e;
    }
    while (den % c == 0) {
      den /= c;
      --e;
    }
    if (e != 0) {
      out.resize(static_cast<std::size_t>(idx) + 1, 0);
      out[static_cast<std::size_t>(idx)] = e;
    }
    ++idx;
  }
  return hvec_trim(out);
}

}  // namespace detail

/// Maps a gauge degree into the exponent group of a Folner kind. For the
/// cyclic kind H ~ Z via base^k -> k, with the base taken from the system;
/// the naturals system carries no base, so its non-identity degrees do not
/// embed and are rejected. For the prime-exponent kind H ~ direct sum of
/// Z's via prime factorization.
inline HVec degree_to_group_element(const SystemDescriptor& sys, GroupKind kind,
                                    const Degree& d) {
  if (d.is_identity()) return {};
  if (kind == GroupKind::prime_exponents) return detail::factor_exponents(d.num, d.den);
  if (sys.kind() != SystemKind::base_powers)
    throw DegreeOutsideGroupError("degree " + to_string(d) +
                                  " does not embed in a cyclic exponent group: the " +
                                  sys.name() + " system has no distinguished base");
  long long base = sys.base();
  auto exponent_of = [&](long long v) {
    long long e = 0;
    while (v % base == 0) {
      v /= base;
      ++e;
    }
    if (v != 1)
      throw DegreeOutsideGroupError("degree " + to_string(d) + " is not a power of " +
                                    std::to_string(base));
    return e;
  };
  if (d.den == 1) return hvec_trim({exponent_of(d.num)});
  if (d.num == 1) return hvec_trim({-exponent_of(d.den)});
  throw DegreeOutsideGroupError("degree " + to_string(d) + " is not a power of " +
                                std::to_string(base));
}

/// S_n(a): each graded component scaled by phi_n at its degree. On finite
/// sums this equals the defining sum over H because phi_n has finite
/// support and all other Fourier coefficients vanish.
inline Element fejer_sum(const Element& a, const FolnerSequence& fs, long long n,
                         long long budget = kDefaultKernelBudget) {
  Element out = Element::zero(a.system());
  for (const auto& [d, comp] : graded_decomposition(a)) {
    Rational w = fs.phi(n, degree_to_group_element(a.system(), fs.kind(), d), budget);
    if (w != 0) out = out + w * comp;
  }
  return out;
}

/// Independent route for S_n(a) through the defining formula
/// sum_h phi_n(h) s_p^* F_(p,q)(a) s_q over h = [(p, q)]; cross-checks
/// fejer_sum in tests.
inline Element fejer_sum_by_fourier(const Element& a, const FolnerSequence& fs, long long n,
                                    long long budget = kDefaultKernelBudget) {
  const SystemDescriptor& sys = a.system();
  Element out = Element::zero(sys);
  for (const Degree& d : degree_support(a)) {
    Rational w = fs.phi(n, degree_to_group_element(sys, fs.kind(), d), budget);
    if (w == 0) continue;
    Element f = fourier_coeff(a, d.den, d.num);
    out = out + w * mul(mul(adjoint(Element::isometry(sys, d.den)), f),
                        Element::isometry(sys, d.num));
  }
  return out;
}

/// (1/N) sum_{n=0}^{N-1} S_n(a), computed with one per-degree weight
/// (1/N) sum_n phi_n(h_d) so the element is traversed once.
inline Element cesaro_mean(const Element& a, const FolnerSequence& fs, long long N,
                           long long budget = kDefaultKernelBudget) {
  if (N < 1) throw Error("Cesaro mean needs at least one summand");
  Element out = Element::zero(a.system());
  for (const auto& [d, comp] : graded_decomposition(a)) {
    HVec h = degree_to_group_element(a.system(), fs.kind(), d);
    Rational w(0);
    for (long long n = 0; n < N; ++n) w += fs.phi(n, h, budget);
    w /= rational(N);
    if (w != 0) out = out + w * comp;
  }
  return out;
}

/// One row of the convergence table for a fixed truncation index: the exact
/// coefficient-mass bound b_n = sum_d (1 - phi_n(d)) * (sum of coefficient
/// moduli of component d), which dominates the norm of a - S_n(a); a
/// squared lower bound for the same norm from representation probes; and
/// whether a - S_n(a) is exactly zero.
struct ConvergenceRow {
  long long n = 0;
  Rational b_n;
  Rational lower_sq;
  bool exact_equal = false;
};

struct ConvergenceReport {
  std::string id;
  std::vector<ConvergenceRow> rows;
};

inline ConvergenceReport convergence_report(const Element& a, const FolnerSequence& fs,
                                            long long n_max, long long probe_window = 64,
                                            std::string id = "element",
                                            long long budget = kDefaultKernelBudget) {
  ConvergenceReport rep;
  rep.id = std::move(id);
  GradedDecomposition dec = graded_decomposition(a);
  std::vector<std::pair<HVec, Rational>> parts;  // per degree: (h_d, coefficient mass)
  for (const auto& [d, comp] : dec)
    parts.emplace_back(degree_to_group_element(a.system(), fs.kind(), d),
                       coeff_abs_sum(comp));
  for (long long n = 0; n <= n_max; ++n) {
    ConvergenceRow row;
    row.n = n;
    row.b_n = Rational(0);
    Element diff = Element::zero(a.system());
    std::size_t i = 0;
    for (const auto& [d, comp] : dec) {
      Rational w = fs.phi(n, parts[i].first, budget);
      Rational rest = Rational(1) - w;
      row.b_n += rest * parts[i].second;
      if (rest != 0) diff = diff + rest * comp;
      ++i;
    }
    row.exact_equal = is_zero(diff);
    row.lower_sq = norm_bounds(diff, probe_window).lower_sq;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

/// Desk check for the relative commutant of the isometries: does a commute
/// with s_p for each listed generator? offending lists the non-identity
/// degrees in the support of a (a finite sum in the commutant should have
/// none); scalar_part is the coefficient of the identity monomial.
struct CommutantReport {
  bool commutes = true;
  std::set<Degree> offending;
  GaussianRational scalar_part;
};

inline CommutantReport commutant_probe(const Element& a,
                                       const std::vector<long long>& generators) {
  const SystemDescriptor& sys = a.system();
  CommutantReport rep;
  for (long long p : generators) {
    sys.require_member(p);
    Element sp = Element::isometry(sys, p);
    if (!is_zero(mul(a, sp) - mul(sp, a))) {
      rep.commutes = false;
      break;
    }
  }
  for (const Degree& d : degree_support(a))
    if (!d.is_identity()) rep.offending.insert(d);
  Element comp = graded_component(a, Degree::identity());
  auto it = comp.terms().find(Monomial::identity());
  rep.scalar_part =
      it == comp.terms().end() ? GaussianRational::zero() : it->second;
  return rep;
}

}  // namespace qfejer
