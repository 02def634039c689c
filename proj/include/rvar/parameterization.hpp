#pragma once

// The band matrices Y_beta^gamma, the open set W_beta^gamma of the open Richardson
// variety, and the mutually inverse maps
//
//   phi(M) = M_gamma^{-1} M          (Y -> W)
//   psi(N) = L^{-1} N, N_beta = LDU  (W -> Y)
//
// Row i of a matrix in Y is zero outside columns beta(i)..gamma(i), has an
// invertible entry at beta(i), a 1 at gamma(i) and arbitrary entries in between.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "rvar/errors.hpp"
#include "rvar/matrix.hpp"
#include "rvar/plucker.hpp"
#include "rvar/subset.hpp"

namespace rvar {

class YShape {
 public:
  YShape(KSubset beta, KSubset gamma);

  const KSubset& beta() const noexcept { return beta_; }
  const KSubset& gamma() const noexcept { return gamma_; }
  int k() const noexcept { return beta_.k(); }
  int n() const noexcept { return beta_.n(); }

  /// Number of arbitrary entries: sum_i max(gamma(i) - beta(i) - 1, 0).
  int free_count() const noexcept { return free_count_; }
  /// Number of rows with an invertible entry distinct from the 1: #{i | gamma(i) > beta(i)}.
  int unit_count() const noexcept { return unit_count_; }

  /// 0-based (row, col) positions of the invertible entries, row by row.
  const std::vector<std::pair<int, int>>& unit_positions() const noexcept { return units_; }
  /// 0-based (row, col) positions of the arbitrary entries.
  const std::vector<std::pair<int, int>>& free_positions() const noexcept { return free_; }

 private:
  KSubset beta_;
  KSubset gamma_;
  int free_count_ = 0;
  int unit_count_ = 0;
  std::vector<std::pair<int, int>> units_;
  std::vector<std::pair<int, int>> free_;
};

template <ExactField F>
struct LduFactors {
  Matrix<F> lower;     ///< lower unipotent
  Matrix<F> diagonal;  ///< invertible diagonal
  Matrix<F> upper;     ///< upper unipotent
};

/// S = L D U without row exchanges. A zero pivot raises DecompositionError
/// carrying the 1-based size of the vanishing leading principal minor.
template <ExactField F>
LduFactors<F> ldu(const Matrix<F>& s) {
  if (!s.square()) throw InvalidParameters("ldu needs a square matrix");
  const F& f = s.field();
  const int size = s.rows();
  Matrix<F> work = s;
  Matrix<F> lower = Matrix<F>::identity(f, size);
  for (int c = 0; c < size; ++c) {
    if (f.is_zero(work(c, c))) {
      throw DecompositionError(static_cast<std::size_t>(c + 1),
                               "leading principal minor of size " + std::to_string(c + 1) + " vanishes");
    }
    const auto inv = f.inv(work(c, c));
    for (int r = c + 1; r < size; ++r) {
      const auto factor = f.mul(work(r, c), inv);
      lower(r, c) = factor;
      if (f.is_zero(factor)) continue;
      for (int j = c; j < size; ++j) work(r, j) = f.sub(work(r, j), f.mul(factor, work(c, j)));
    }
  }
  Matrix<F> diagonal(f, size, size);
  Matrix<F> upper = Matrix<F>::identity(f, size);
  for (int r = 0; r < size; ++r) {
    diagonal(r, r) = work(r, r);
    const auto inv = f.inv(work(r, r));
    for (int j = r + 1; j < size; ++j) upper(r, j) = f.mul(work(r, j), inv);
  }
  return {std::move(lower), std::move(diagonal), std::move(upper)};
}

template <ExactField F>
bool y_shape_check(const Matrix<F>& m, const KSubset& beta, const KSubset& gamma) {
  const int k = beta.k();
  const int n = beta.n();
  if (m.rows() != k || m.cols() != n || !subset_leq(beta, gamma)) return false;
  const F& f = m.field();
  for (int i = 0; i < k; ++i) {
    for (int j = 1; j <= n; ++j) {
      const auto& v = m(i, j - 1);
      if (j < beta[i] || j > gamma[i]) {
        if (!f.is_zero(v)) return false;
      } else if (j == gamma[i]) {
        if (!f.equal(v, f.one())) return false;
      } else if (j == beta[i]) {
        if (f.is_zero(v)) return false;
      }
    }
  }
  return true;
}

/// N in W_beta^gamma: N_gamma = I, Delta_{delta_t}(N) != 0 for t = 0..k, and
/// Delta_alpha(N) = 0 for alpha outside [beta, gamma].
template <ExactField F>
bool w_membership(const Matrix<F>& n_mat, const KSubset& beta, const KSubset& gamma) {
  const int k = beta.k();
  if (n_mat.rows() != k || n_mat.cols() != beta.n() || !subset_leq(beta, gamma)) return false;
  if (!(n_mat.columns(gamma) == Matrix<F>::identity(n_mat.field(), k))) return false;
  const auto minors = maximal_minors(n_mat);
  const F& f = n_mat.field();
  for (int t = 0; t <= k; ++t) {
    if (f.is_zero(minors[delta(beta, gamma, t)])) return false;
  }
  for (const auto& a : enumerate_subsets(k, beta.n())) {
    if (!in_interval(a, beta, gamma) && !f.is_zero(minors[a])) return false;
  }
  return true;
}

/// phi(M) = M_gamma^{-1} M.
template <ExactField F>
Matrix<F> phi(const Matrix<F>& m, const KSubset& beta, const KSubset& gamma) {
  if (!y_shape_check(m, beta, gamma)) {
    throw ShapeError("matrix is not in Y_" + beta.to_string() + "^" + gamma.to_string());
  }
  return multiply(inverse(m.columns(gamma)), m);
}

/// psi(N) = L^{-1} N where N_beta = L D U.
template <ExactField F>
Matrix<F> psi(const Matrix<F>& n_mat, const KSubset& beta, const KSubset& gamma) {
  const int k = beta.k();
  if (n_mat.rows() != k || n_mat.cols() != beta.n() || !subset_leq(beta, gamma)) {
    throw ShapeError("psi: dimensions or (beta, gamma) do not match");
  }
  if (!(n_mat.columns(gamma) == Matrix<F>::identity(n_mat.field(), k))) {
    throw ShapeError("psi: N_gamma is not the identity");
  }
  const auto factors = ldu(n_mat.columns(beta));
  Matrix<F> m = multiply(inverse(factors.lower), n_mat);
  if (!y_shape_check(m, beta, gamma)) {
    throw InternalError("psi produced a matrix outside Y_" + beta.to_string() + "^" + gamma.to_string());
  }
  return m;
}

/// det M_alpha / prod_{i' != i} M_{i', beta(i')} for alpha = beta u {j} \ {beta(i)}.
/// Up to sign this recovers M_{i,j} for j < beta(i), where it must vanish. `row` is
/// 0-based, `column` 1-based and not in beta.
template <ExactField F>
typename F::value_type entry_from_minor(const Matrix<F>& m, const KSubset& beta, int row, int column) {
  const F& f = m.field();
  const KSubset alpha = beta.exchange(beta[row], column);
  auto value = determinant(m.columns(alpha));
  for (int r = 0; r < beta.k(); ++r) {
    if (r != row) value = f.div(value, m(r, beta[r] - 1));
  }
  return value;
}

/// Random field elements for sampling. Rationals have numerator in
/// [-kRationalNumBound, kRationalNumBound] and denominator in [1, kRationalDenBound].
inline constexpr long kRationalNumBound = 5;
inline constexpr long kRationalDenBound = 4;

inline mpq_class random_element(const RationalField&, std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-kRationalNumBound, kRationalNumBound);
  std::uniform_int_distribution<long> den(1, kRationalDenBound);
  while (true) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

inline std::uint32_t random_element(const PrimeField& f, std::mt19937_64& rng, bool nonzero) {
  const std::uint32_t p = f.characteristic();
  std::uniform_int_distribution<std::uint32_t> dist(nonzero ? 1 : 0, p - 1);
  return dist(rng);
}

/// A random element of Y_beta^gamma; deterministic for a given seed.
template <ExactField F>
Matrix<F> sample_y(const KSubset& beta, const KSubset& gamma, const F& field, std::uint64_t seed) {
  const YShape shape(beta, gamma);
  std::mt19937_64 rng(seed);
  Matrix<F> m(field, shape.k(), shape.n());
  for (int i = 0; i < shape.k(); ++i) m(i, gamma[i] - 1) = field.one();
  for (const auto& [r, c] : shape.unit_positions()) m(r, c) = random_element(field, rng, true);
  for (const auto& [r, c] : shape.free_positions()) m(r, c) = random_element(field, rng, false);
  return m;
}

/// Calls `visit` on every matrix of Y_beta^gamma(F_q): q^s (q-1)^u of them.
void for_each_y(const KSubset& beta, const KSubset& gamma, const PrimeField& field,
                const std::function<void(const Matrix<PrimeField>&)>& visit);

/// q^s (q-1)^u.
std::uint64_t y_point_count(const YShape& shape, std::uint64_t q);

}  // namespace rvar
