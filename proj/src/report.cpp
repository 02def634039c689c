#include "rvar/report.hpp"

namespace rvar {

void ClaimReport::absorb(const ClaimReport& other) {
  checks += other.checks;
  if (!other.pass) fail(other.witness);
  flags.insert(flags.end(), other.flags.begin(), other.flags.end());
}

nlohmann::json ClaimReport::to_json() const {
  return {{"claim", claim},   {"parameters", parameters}, {"verdict", pass ? "pass" : "fail"},
          {"witness", witness}, {"flags", flags},         {"checks", checks},
          {"seconds", seconds}};
}

}  // namespace rvar
