#pragma once

// Deterministic random generators shared by the test binaries. Seeds are
// fixed at each use site so failures replay exactly.

#include <random>
#include <vector>

#include <qfejer/qfejer.hpp>

namespace qfejer::testing {

inline std::vector<long long> semigroup_pool(const SystemDescriptor& sys, long long bound) {
  std::vector<long long> pool;
  for (long long v = 1; v <= bound; ++v)
    if (sys.contains(v)) pool.push_back(v);
  return pool;
}

inline GaussianRational random_coeff(std::mt19937_64& rng, bool complex_parts = true) {
  std::uniform_int_distribution<long long> num(-3, 3);
  std::uniform_int_distribution<long long> den(1, 3);
  Rational re = rational(num(rng), den(rng));
  Rational im = complex_parts ? rational(num(rng), den(rng)) : Rational(0);
  if (re == 0 && im == 0) re = Rational(1);
  return {re, im};
}

inline Monomial random_monomial(std::mt19937_64& rng, const SystemDescriptor& sys,
                                long long pbound, long long gbound) {
  std::vector<long long> pool = semigroup_pool(sys, pbound);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<long long> gs(-gbound, gbound);
  return canonicalize(gs(rng), pool[pick(rng)], pool[pick(rng)], gs(rng));
}

inline Element random_element(std::mt19937_64& rng, const SystemDescriptor& sys,
                              std::size_t max_terms, long long pbound, long long gbound,
                              bool complex_parts = true) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  Element out = Element::zero(sys);
  std::size_t n = nterms(rng);
  for (std::size_t t = 0; t < n; ++t)
    out.add_term(random_monomial(rng, sys, pbound, gbound),
                 random_coeff(rng, complex_parts));
  return out;
}

}  // namespace qfejer::testing
