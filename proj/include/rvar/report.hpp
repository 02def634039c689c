#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace rvar {

/// Outcome of one verified claim. Serializes to a JSON object with fields
/// claim, parameters, verdict, witness, flags, checks and seconds.
struct ClaimReport {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = true;
  std::string witness;  ///< first counterexample, empty on success
  std::vector<std::string> flags;
  std::uint64_t checks = 0;
  double seconds = 0.0;

  /// Records a failure; only the first witness is kept.
  void fail(std::string what) {
    if (pass) witness = std::move(what);
    pass = false;
  }
  void flag(std::string what) { flags.push_back(std::move(what)); }
  /// Folds a sub-check into this report.
  void absorb(const ClaimReport& other);

  nlohmann::json to_json() const;
};

}  // namespace rvar
