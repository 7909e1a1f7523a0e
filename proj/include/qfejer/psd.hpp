#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "qfejer/folner.hpp"
#include "qfejer/scalar.hpp"

namespace qfejer {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact symmetric decomposition P M P^T = L D L^T of a rational symmetric
/// matrix, with L unit lower triangular and D = diag(diag). perm encodes P:
/// row i of the permuted matrix is row perm[i] of the input. When psd is
/// false, negative_witness holds a vector v (in the original index order)
/// with v^T M v < 0, verified exactly before returning.
struct LdltResult {
  bool psd = false;
  std::vector<std::size_t> perm;
  RationalMatrix L;
  std::vector<Rational> diag;
  std::size_t rank = 0;
  std::optional<std::vector<Rational>> negative_witness;
};

namespace detail {

/// Lifts a witness for the Schur complement (indices k..n-1 of the permuted
/// frame) to the original frame: solve L11^T v1 = -L21^T w so that
/// L^T (v1, w) = (0, w), hence (v1, w)^T (PMP^T) (v1, w) = w^T S w.
inline std::vector<Rational> lift_witness(const RationalMatrix& L,
                                          const std::vector<std::size_t>& perm,
                                          std::size_t k,
                                          const std::vector<Rational>& w) {
  std::size_t n = perm.size();
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t r = 0; r < w.size(); ++r) v[k + r] = w[r];
  for (std::size_t c = k; c-- > 0;) {
    Rational acc(0);
    for (std::size_t r = c + 1; r < n; ++r) acc += L[r][c] * v[r];
    v[c] = -acc;
  }
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) out[perm[i]] = v[i];
  return out;
}

inline Rational quadratic_form(const RationalMatrix& M, const std::vector<Rational>& v) {
  Rational acc(0);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j) acc += v[i] * M[i][j] * v[j];
  return acc;
}

}  // namespace detail

/// Certifies positive semidefiniteness of a symmetric rational matrix by
/// exact LDL^T with symmetric pivoting on the largest remaining diagonal.
/// Every Schur complement of a PSD matrix has nonnegative diagonal, and a
/// zero diagonal forces a zero row; either violation yields an explicit
/// negative-energy vector, checked against the input before returning.
inline LdltResult exact_psd_ldlt(const RationalMatrix& M) {
  std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n) throw Error("matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (M[i][j] != M[j][i]) throw Error("matrix is not symmetric");

  LdltResult res;
  res.perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) res.perm[i] = i;
  res.L.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) res.L[i][i] = Rational(1);
  res.diag.assign(n, Rational(0));

  RationalMatrix A = M;  // permuted in place; rows/cols >= k hold the Schur complement
  auto fail = [&](std::size_t k, const std::vector<Rational>& w) {
    std::vector<Rational> v = detail::lift_witness(res.L, res.perm, k, w);
    if (detail::quadratic_form(M, v) >= 0)
      throw Error("internal: negative witness failed verification");
    res.psd = false;
    res.negative_witness = std::move(v);
    return res;
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t j = k; j < n; ++j)
      if (A[j][j] > A[pivot][pivot]) pivot = j;

    for (std::size_t j = k; j < n; ++j)
      if (A[j][j] < 0) {
        std::vector<Rational> w(n - k, Rational(0));
        w[j - k] = Rational(1);
        return fail(k, w);
      }

    if (A[pivot][pivot] == 0) {
      // all remaining diagonals vanish; any off-diagonal entry a gives the
      // indefinite block [[0, a], [a, 0]]
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (A[i][j] != 0) {
            std::vector<Rational> w(n - k, Rational(0));
            w[i - k] = Rational(1);
            w[j - k] = -A[i][j];
            return fail(k, w);
          }
      break;  // zero block: PSD with rank k
    }

    if (pivot != k) {
      std::swap(A[pivot], A[k]);
      for (std::size_t i = 0; i < n; ++i) std::swap(A[i][pivot], A[i][k]);
      std::swap(res.perm[pivot], res.perm[k]);
      for (std::size_t c = 0; c < k; ++c) std::swap(res.L[pivot][c], res.L[k][c]);
    }

    Rational d = A[k][k];
    res.diag[k] = d;
    ++res.rank;
    for (std::size_t i = k + 1; i < n; ++i) res.L[i][k] = A[i][k] / d;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) A[i][j] -= res.L[i][k] * A[k][j];
  }

  res.psd = true;
  return res;
}

/// Test oracle: does perm/L/diag reproduce the input, entry by entry?
inline bool ldlt_reconstructs(const RationalMatrix& M, const LdltResult& r) {
  std::size_t n = M.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc(0);
      for (std::size_t t = 0; t < n; ++t) acc += r.L[i][t] * r.diag[t] * r.L[j][t];
      if (acc != M[r.perm[i]][r.perm[j]]) return false;
    }
  return true;
}

inline RationalMatrix gram_matrix(const FolnerSequence& fs, long long n,
                                  const std::vector<HVec>& sample,
                                  long long budget = kDefaultKernelBudget) {
  std::vector<HVec> pts;
  pts.reserve(sample.size());
  for (const HVec& h : sample) pts.push_back(hvec_trim(h));
  std::set<HVec> distinct(pts.begin(), pts.end());
  if (distinct.size() != pts.size())
    throw Error("sample points must be distinct");
  std::size_t m = pts.size();
  RationalMatrix M(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      M[i][j] = fs.phi(n, hvec_sub(pts[j], pts[i]), budget);
  return M;
}

/// Positive-definiteness certificate for phi_n on a finite sample: the Gram
/// matrix M_ij = phi_n(h_j - h_i) is decomposed exactly. psd=true carries
/// the decomposition as witness; psd=false carries a vector of negative
/// energy.
inline LdltResult psd_certificate(const FolnerSequence& fs, long long n,
                                  const std::vector<HVec>& sample,
                                  long long budget = kDefaultKernelBudget) {
  return exact_psd_ldlt(gram_matrix(fs, n, sample, budget));
}

}  // namespace qfejer
