#pragma once

// Sweeps that verify each claim over a configured range of (k, n, q) and
// aggregate the results into one run report.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rvar/grassmannian.hpp"
#include "rvar/report.hpp"

namespace rvar {

struct SweepConfig {
  int k_min = 1;
  int k_max = 3;
  int n_min = 2;
  int n_max = 6;
  /// Fields for the set-level sweeps (divisor, complement, certificates, round trip).
  std::vector<std::uint32_t> primes{2, 3};
  /// Fields for the unit and point-count sweeps.
  std::vector<std::uint32_t> count_primes{2, 3, 5};
  /// Fields tried when looking for a point on a divisor.
  std::vector<std::uint32_t> nonempty_primes{2, 3, 5, 7};
  /// Fields sampled for count polynomials.
  std::vector<std::uint32_t> interpolation_primes{2, 3, 5, 7, 11, 13};
  /// Largest n for which count polynomials are interpolated.
  int interpolation_n_max = 4;
  /// Largest n for which Y is enumerated exhaustively in the round trip.
  int exhaustive_n_max = 4;
  /// Largest n for the brute-force positroid oracle.
  int oracle_n_max = 5;
  /// Rational samples per (beta, gamma) for the round trip and certificates.
  int rational_samples = 100;
  /// Random rational matrices each Plucker relation is evaluated on.
  int relation_samples = 50;
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultPointBudget;
  std::string report_path = "report.json";

  /// Throws ConfigError on empty ranges, non-primes or a zero budget.
  void validate() const;
  nlohmann::json to_json() const;
};

/// Claim identifiers in run order.
const std::vector<std::string>& claim_ids();

/// Runs one claim. Library errors become a failed report; budget overruns
/// inside a sweep become flags.
ClaimReport run_claim(std::string_view id, const SweepConfig& config, PointCache& cache);

struct RunReport {
  nlohmann::json config;
  std::vector<ClaimReport> claims;

  bool pass() const;
  /// With `stamp`, adds the tool version and compiler; timings are always included.
  nlohmann::json to_json(bool stamp = true) const;
  /// One line per claim plus an overall verdict.
  std::string summary() const;
};

RunReport run_all(const SweepConfig& config);

/// Version of the tool, as written into reports.
std::string_view tool_version();

}  // namespace rvar
