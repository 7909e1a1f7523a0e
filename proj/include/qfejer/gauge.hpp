#pragma once

#include <map>
#include <set>

#include "qfejer/element.hpp"

namespace qfejer {

/// Splitting of an element into its gauge-homogeneous parts, keyed by the
/// grading value. The components sum back to the original term map exactly.
using GradedDecomposition = std::map<Degree, Element>;

inline GradedDecomposition graded_decomposition(const Element& a) {
  GradedDecomposition out;
  for (const auto& [m, c] : a.terms()) {
    Degree d = monomial_degree(m);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, Element::zero(a.system())).first;
    it->second.add_term(m, c);
  }
  return out;
}

/// Sub-sum of terms of grading value d; zero element if none.
inline Element graded_component(const Element& a, const Degree& d) {
  Element out(a.system());
  for (const auto& [m, c] : a.terms())
    if (monomial_degree(m) == d) out.add_term(m, c);
  return out;
}

/// Grading values whose component is nonzero in the algebra (each candidate
/// component is run through the zero oracle, not just checked for terms).
inline std::set<Degree> degree_support(const Element& a) {
  std::set<Degree> out;
  for (const auto& [d, comp] : graded_decomposition(a))
    if (!is_zero(comp)) out.insert(d);
  return out;
}

/// Fourier coefficient F_{(p,q)}: the gauge-integral average of s_p a s_q^*,
/// evaluated exactly on finite sums as s_p * (degree q/p component of a) * s_q^*.
/// Every term of the result has grading value 1 (it lies in the fixed-point
/// algebra).
inline Element fourier_coeff(const Element& a, long long p, long long q) {
  const SystemDescriptor& sys = a.system();
  sys.require_member(p);
  sys.require_member(q);
  Element mid = graded_component(a, Degree(q, p));
  return mul(mul(Element::isometry(sys, p), mid), adjoint(Element::isometry(sys, q)));
}

/// Reassembles a from its Fourier coefficients: for each degree num/den in
/// the support, with (p, q) = (den, num), adds s_p^* F_{(p,q)}(a) s_q. The
/// result equals a exactly.
inline Element reconstruct(const Element& a) {
  const SystemDescriptor& sys = a.system();
  Element out = Element::zero(sys);
  for (const Degree& d : degree_support(a)) {
    long long p = d.den;
    long long q = d.num;
    Element f = fourier_coeff(a, p, q);
    out = out + mul(mul(adjoint(Element::isometry(sys, p)), f), Element::isometry(sys, q));
  }
  return out;
}

}  // namespace qfejer
