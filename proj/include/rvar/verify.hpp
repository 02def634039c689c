#pragma once

// Set-level checks of the variety identities on enumerated F_q points, and
// point-count polynomials. Integrality and multiplicities are out of reach of
// point counting; every report here speaks only about F_q-rational points.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rvar/grassmannian.hpp"
#include "rvar/report.hpp"
#include "rvar/subset.hpp"
#include "rvar/variety.hpp"

namespace rvar {

inline constexpr std::uint32_t kNonemptyPrimes[] = {2, 3, 5, 7};

/// {P in open X_beta^gamma | Delta_{delta_t}(P) = 0} against X_{P_t} intersected with
/// the open Richardson variety, over F_q. Also looks for a point of the divisor over
/// `nonempty_primes` (within budget) and flags the case when none has one.
ClaimReport verify_positroid_divisor(const KSubset& beta, const KSubset& gamma, int t, std::uint32_t q,
                                     PointCache& cache,
                                     std::span<const std::uint32_t> nonempty_primes = kNonemptyPrimes);

/// W(F_q) against X_beta^gamma(F_q) minus the union of X_M over M in sigma_sets.
ClaimReport verify_complement(const KSubset& beta, const KSubset& gamma, std::uint32_t q, PointCache& cache,
                              CoverBound bound = CoverBound::inclusive);

/// (a) I_t is the shift by gamma(t) of {alpha >= epsilon}; (b) P_t = I_t meet [beta, gamma].
/// Throws DomainError when P_t is empty, where epsilon is undefined.
ClaimReport verify_shifted_schubert(const KSubset& beta, const KSubset& gamma, int t);

/// |W(F_q)| against q^s (q-1)^u.
ClaimReport verify_w_count(const KSubset& beta, const KSubset& gamma, std::uint32_t q, PointCache& cache);

struct CountPolynomial {
  std::vector<mpq_class> coefficients;  ///< coefficients[d] multiplies q^d
  int degree = -1;                      ///< -1 for the zero polynomial
  /// True when there are more samples than the degree needs, so the fit was
  /// over-determined and every sample agrees with it.
  bool determined = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;

  std::string to_string() const;
};

/// Newton interpolation through (q, count) samples. Needs at least two samples.
CountPolynomial interpolate_polynomial(std::span<const std::pair<std::uint64_t, std::uint64_t>> samples);

/// Counts `spec` over each prime and interpolates. Throws InvalidParameters with
/// fewer than two primes.
CountPolynomial interpolate_count_polynomial(const VarietySpec& spec, std::span<const std::uint32_t> primes,
                                             PointCache& cache);

}  // namespace rvar
