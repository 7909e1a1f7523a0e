#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qfejer/scalar.hpp"

namespace qfejer {

/// Element of the exponent group H written additively: a finite integer
/// vector with trailing zeros trimmed. For the cyclic kind only the first
/// coordinate is used (H ~ Z); for the prime-exponent kind coordinate i
/// carries the exponent of the i-th prime (H ~ direct sum of Z's). The
/// identity is the empty vector.
using HVec = std::vector<long long>;

inline HVec hvec_trim(HVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline HVec hvec_add(const HVec& a, const HVec& b) {
  HVec out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return hvec_trim(out);
}

inline HVec hvec_neg(HVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline HVec hvec_sub(const HVec& a, const HVec& b) { return hvec_add(a, hvec_neg(b)); }

inline std::string to_string(const HVec& h) {
  if (h.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h[i]);
  }
  return s;
}

enum class GroupKind {
  cyclic_exponent,  // H ~ Z, F_n = exponents [-n, n]
  prime_exponents,  // H ~ direct sum of Z, F_n = box [-n, n]^n
};

/// Laurent-polynomial form of the summation kernel: exponent -> exact
/// coefficient, the coefficient at h being phi_n(h). Univariate for the
/// cyclic kind, multivariate for prime exponents.
using KernelPolynomial = std::map<HVec, Rational>;

inline constexpr long long kDefaultKernelBudget = 1'000'000;

/// An increasing, exhausting Folner sequence for the exponent group,
/// shipped with closed-form defaults per kind and an optional user-supplied
/// explicit list of finite sets. phi_n(h) = |(h + F_n) and F_n| / |F_n|
/// is evaluated exactly; the closed form and the set-enumeration route are
/// independent computations of the same quantity.
class FolnerSequence {
 public:
  static FolnerSequence cyclic() { return FolnerSequence(GroupKind::cyclic_exponent); }
  static FolnerSequence prime_exponents() {
    return FolnerSequence(GroupKind::prime_exponents);
  }

  /// User-supplied sets F_0..F_m; phi and support fall back to enumeration.
  /// The Folner property of the list is not verified.
  static FolnerSequence explicit_list(GroupKind kind, std::vector<std::vector<HVec>> sets) {
    FolnerSequence fs(kind);
    for (auto& s : sets)
      for (auto& h : s) h = hvec_trim(h);
    fs.explicit_sets_ = std::move(sets);
    return fs;
  }

  GroupKind kind() const { return kind_; }
  bool has_explicit_sets() const { return !explicit_sets_.empty(); }

  /// |F_n|.
  mpz_class set_size(long long n, long long budget = kDefaultKernelBudget) const {
    if (has_explicit_sets()) return static_cast<long>(set(n, budget).size());
    mpz_class width(static_cast<long>(2 * n + 1));
    if (kind_ == GroupKind::cyclic_exponent) return width;
    mpz_class size(1);
    for (long long i = 0; i < n; ++i) size *= width;
    return size;
  }

  /// Materializes F_n. Throws BudgetExceededError when |F_n| exceeds the
  /// budget (the prime-exponent box grows as (2n+1)^n).
  std::vector<HVec> set(long long n, long long budget = kDefaultKernelBudget) const {
    if (n < 0) throw Error("Folner index must be >= 0");
    if (has_explicit_sets()) {
      if (static_cast<std::size_t>(n) >= explicit_sets_.size())
        throw Error("explicit Folner list has no set for n=" + std::to_string(n));
      return explicit_sets_[static_cast<std::size_t>(n)];
    }
    if (kind_ == GroupKind::cyclic_exponent) {
      std::vector<HVec> out;
      out.reserve(static_cast<std::size_t>(2 * n + 1));
      for (long long i = -n; i <= n; ++i) out.push_back(hvec_trim({i}));
      return out;
    }
    return box(n, n, budget);
  }

  /// phi_n(h), an exact rational in [0, 1]. Defaults use the per-coordinate
  /// closed form; explicit lists are enumerated.
  Rational phi(long long n, const HVec& h_in,
               long long budget = kDefaultKernelBudget) const {
    if (n < 0) throw Error("Folner index must be >= 0");
    HVec h = hvec_trim(h_in);
    if (has_explicit_sets()) return phi_by_enumeration(n, h, budget);
    long long width = 2 * n + 1;
    if (kind_ == GroupKind::cyclic_exponent) {
      if (h.size() > 1) throw Error("cyclic exponent group takes one coordinate");
      long long i = h.empty() ? 0 : llabs(h[0]);
      return i >= width ? rational(0) : rational(width - i, width);
    }
    // prime exponents: box [-n,n]^n, zero beyond coordinate n
    if (static_cast<long long>(h.size()) > n) return rational(0);
    mpz_class num(1), den(1);
    for (long long j = 0; j < n; ++j) {
      long long hj = static_cast<std::size_t>(j) < h.size() ? llabs(h[j]) : 0;
      if (hj >= width) return rational(0);
      num *= static_cast<long>(width - hj);
      den *= static_cast<long>(width);
    }
    return rational(num, den);
  }

  /// Independent route for phi: materializes F_n and counts |(h+F_n) and F_n|.
  Rational phi_by_enumeration(long long n, const HVec& h_in,
                              long long budget = kDefaultKernelBudget) const {
    HVec h = hvec_trim(h_in);
    std::vector<HVec> fn = set(n, budget);
    std::set<HVec> members(fn.begin(), fn.end());
    long long hits = 0;
    for (const HVec& f : fn)
      if (members.count(hvec_add(h, f))) ++hits;
    return rational(mpz_class(static_cast<long>(hits)),
                    mpz_class(static_cast<long>(fn.size())));
  }

  /// The support F_n F_n^{-1} of phi_n, materialized.
  std::vector<HVec> support(long long n, long long budget = kDefaultKernelBudget) const {
    if (has_explicit_sets()) {
      std::set<HVec> diffs;
      std::vector<HVec> fn = set(n, budget);
      for (const HVec& a : fn)
        for (const HVec& b : fn) diffs.insert(hvec_sub(a, b));
      return {diffs.begin(), diffs.end()};
    }
    if (kind_ == GroupKind::cyclic_exponent) {
      std::vector<HVec> out;
      for (long long i = -2 * n; i <= 2 * n; ++i) out.push_back(hvec_trim({i}));
      return out;
    }
    return box(2 * n, n, budget);
  }

  /// Smallest n with h in F_n; witnesses exhaustion.
  long long first_n_containing(const HVec& h_in) const {
    HVec h = hvec_trim(h_in);
    if (has_explicit_sets()) {
      for (std::size_t n = 0; n < explicit_sets_.size(); ++n) {
        const auto& s = explicit_sets_[n];
        if (std::find(s.begin(), s.end(), h) != s.end()) return static_cast<long long>(n);
      }
      throw Error("element not contained in any explicit Folner set");
    }
    long long n = static_cast<long long>(h.size());  // coordinate index bound
    for (long long x : h) n = std::max(n, llabs(x));
    return n;
  }

  /// K_n as an exact Laurent polynomial: coefficient phi_n(h) on the support.
  KernelPolynomial kernel(long long n, long long budget = kDefaultKernelBudget) const {
    KernelPolynomial out;
    for (const HVec& h : support(n, budget)) {
      Rational v = phi(n, h, budget);
      if (v != 0) out[h] = v;
    }
    return out;
  }

  /// Certifies K_n >= 0 pointwise by the exact factorization
  /// |F_n| * K_n = (sum_{f in F_n} chi(f)) * conj(same): convolving the
  /// indicator polynomial of F_n with its reflection must reproduce
  /// |F_n| * K_n coefficient by coefficient.
  bool kernel_factor_check(long long n, long long budget = kDefaultKernelBudget) const {
    std::vector<HVec> fn = set(n, budget);
    if (static_cast<long long>(fn.size()) * static_cast<long long>(fn.size()) > 64 * budget)
      throw BudgetExceededError("kernel factor convolution too large");
    std::map<HVec, long long> conv;
    for (const HVec& a : fn)
      for (const HVec& b : fn) conv[hvec_sub(a, b)]++;
    KernelPolynomial k = kernel(n, budget);
    if (conv.size() != k.size()) return false;
    Rational size = rational(mpz_class(static_cast<long>(fn.size())), mpz_class(1));
    for (const auto& [h, count] : conv) {
      auto it = k.find(h);
      if (it == k.end()) return false;
      if (rational(count) != size * it->second) return false;
    }
    return true;
  }

 private:
  explicit FolnerSequence(GroupKind kind) : kind_(kind) {}

  /// All trimmed vectors with coordinates in [-radius, radius] over `dims`
  /// coordinates.
  static std::vector<HVec> box(long long radius, long long dims, long long budget) {
    long long width = 2 * radius + 1;
    __int128 total = 1;
    for (long long i = 0; i < dims; ++i) {
      total *= width;
      if (total > budget)
        throw BudgetExceededError("Folner set enumeration exceeds budget of " +
                                  std::to_string(budget) + " entries");
    }
    std::vector<HVec> out;
    out.reserve(static_cast<std::size_t>(total));
    HVec cur(static_cast<std::size_t>(dims), -radius);
    if (dims == 0) return {HVec{}};
    for (;;) {
      out.push_back(hvec_trim(cur));
      long long i = 0;
      while (i < dims && cur[static_cast<std::size_t>(i)] == radius) {
        cur[static_cast<std::size_t>(i)] = -radius;
        ++i;
      }
      if (i == dims) break;
      ++cur[static_cast<std::size_t>(i)];
    }
    return out;
  }

  GroupKind kind_;
  std::vector<std::vector<HVec>> explicit_sets_;
};

}  // namespace qfejer
