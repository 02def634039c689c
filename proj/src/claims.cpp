#include "rvar/claims.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "rvar/certificate.hpp"
#include "rvar/errors.hpp"
#include "rvar/parameterization.hpp"
#include "rvar/permutation.hpp"
#include "rvar/plucker.hpp"
#include "rvar/variety.hpp"
#include "rvar/verify.hpp"

namespace rvar {

namespace {

using PointsPtr = std::shared_ptr<const PointSet>;

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
  // splitmix64 over the parts
  std::uint64_t h = seed;
  for (std::uint64_t p : parts) {
    h += 0x9e3779b97f4a7c15ull + p;
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    h ^= h >> 31;
  }
  return h;
}

std::string inline_matrix(const std::string& text) {
  std::string out = text;
  while (!out.empty() && out.back() == '\n') out.pop_back();
  std::replace(out.begin(), out.end(), '\n', ';');
  return "[" + out + "]";
}

std::string label(const KSubset& beta, const KSubset& gamma) {
  return "beta=" + beta.to_string() + " gamma=" + gamma.to_string();
}

std::string label(const KSubset& beta, const KSubset& gamma, int t) {
  return label(beta, gamma) + " t=" + std::to_string(t);
}

std::string gr_label(int k, int n, std::uint32_t q) {
  return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")(F_" + std::to_string(q) + ")";
}

void for_each_kn(const SweepConfig& c, const std::function<void(int, int)>& visit) {
  for (int n = c.n_min; n <= c.n_max; ++n) {
    for (int k = c.k_min; k <= std::min(c.k_max, n); ++k) visit(k, n);
  }
}

void for_each_pair(int k, int n, const std::function<void(const KSubset&, const KSubset&)>& visit) {
  const auto& subsets = enumerate_subsets(k, n);
  for (const auto& beta : subsets) {
    for (const auto& gamma : subsets) {
      if (subset_leq(beta, gamma)) visit(beta, gamma);
    }
  }
}

// The point set, or a flag on the report when it exceeds the budget.
std::optional<PointsPtr> points_or_flag(PointCache& cache, int k, int n, std::uint32_t q, ClaimReport& report) {
  try {
    return cache.get(k, n, q);
  } catch (const BudgetExceeded& e) {
    report.flag("skipped " + gr_label(k, n, q) + ": " + e.what());
    return std::nullopt;
  }
}

nlohmann::json range_params(const SweepConfig& c) {
  return {{"k", {c.k_min, c.k_max}}, {"n", {c.n_min, c.n_max}}};
}

Matrix<PrimeField> normalize(const Matrix<PrimeField>& p, const KSubset& gamma) {
  return multiply(inverse(p.columns(gamma)), p);
}

// Round trip: phi and psi are mutually inverse between Y and W.
ClaimReport claim_roundtrip(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["primes"] = c.primes;
  report.parameters["exhaustive_n_max"] = c.exhaustive_n_max;
  report.parameters["rational_samples"] = c.rational_samples;
  const RationalField rationals;
  for_each_kn(c, [&](int k, int n) {
    std::vector<PointsPtr> point_sets;
    for (std::uint32_t q : c.primes) {
      if (auto p = points_or_flag(cache, k, n, q, report)) point_sets.push_back(*p);
    }
    for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
      if (n <= c.exhaustive_n_max) {
        for (std::uint32_t q : c.primes) {
          for_each_y(beta, gamma, PrimeField(q), [&](const Matrix<PrimeField>& m) {
            ++report.checks;
            const auto w = phi(m, beta, gamma);
            if (!w_membership(w, beta, gamma) || !(psi(w, beta, gamma) == m)) {
              report.fail(label(beta, gamma) + " F_" + std::to_string(q) + " M=" + inline_matrix(format_matrix(m)));
            }
          });
        }
      }
      for (int s = 0; s < c.rational_samples; ++s) {
        ++report.checks;
        const auto m = sample_y(beta, gamma, rationals,
                                mix_seed(c.seed, {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n),
                                                  lex_index(beta), lex_index(gamma), static_cast<std::uint64_t>(s)}));
        const auto w = phi(m, beta, gamma);
        if (!w_membership(w, beta, gamma) || !(psi(w, beta, gamma) == m) ||
            !(phi(psi(w, beta, gamma), beta, gamma) == w)) {
          report.fail(label(beta, gamma) + " Q M=" + inline_matrix(format_matrix(m)));
        }
      }
      // W points found by enumeration, independent of phi.
      const VarietySpec w_points = w_spec(beta, gamma);
      for (const auto& points : point_sets) {
        for (std::size_t i : filter_points(*points, w_points)) {
          ++report.checks;
          const auto nm = normalize(points->matrix(i), gamma);
          if (!w_membership(nm, beta, gamma) || !(phi(psi(nm, beta, gamma), beta, gamma) == nm)) {
            report.fail(label(beta, gamma) + " " + describe_point(*points, i));
          }
        }
      }
    });
  });
  return report;
}

Matrix<RationalField> random_rational_matrix(int k, int n, std::mt19937_64& rng) {
  const RationalField f;
  Matrix<RationalField> m(f, k, n);
  for (int r = 0; r < k; ++r) {
    for (int col = 0; col < n; ++col) m(r, col) = random_element(f, rng, false);
  }
  return m;
}

ClaimReport claim_plucker(const SweepConfig& c, PointCache&) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["relation_samples"] = c.relation_samples;
  bool want_three_term = false;
  bool found_three_term = false;
  for_each_kn(c, [&](int k, int n) {
    const auto& relations = all_plucker_relations(k, n);
    if (k == 2 && n == 4) {
      want_three_term = true;
      const KSubset a{{1, 3}, 4};
      const KSubset b{{2, 4}, 4};
      for (const auto& rel : relations) {
        if (rel.a == a && rel.b == b && rel.terms.size() == 2) found_three_term = true;
      }
    }
    std::mt19937_64 rng(mix_seed(c.seed, {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n)}));
    for (int s = 0; s < c.relation_samples; ++s) {
      const auto m = random_rational_matrix(k, n, rng);
      const auto p = maximal_minors(m);
      for (const auto& rel : relations) {
        ++report.checks;
        if (evaluate_relation(rel, p) != 0) {
          report.fail("relation a=" + rel.a.to_string() + " b=" + rel.b.to_string() + " i=" +
                      std::to_string(rel.exchanged) + " is nonzero at " + inline_matrix(format_matrix(m)));
        }
      }
    }
  });
  if (want_three_term && !found_three_term) report.fail("the three-term relation of Gr(2,4) was not generated");
  return report;
}

ClaimReport claim_positroidset(const SweepConfig& c, PointCache&) {
  ClaimReport report;
  report.parameters = range_params(c);
  for_each_kn(c, [&](int k, int n) {
    for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
      for (int t = 1; t < k; ++t) {
        ++report.checks;
        try {
          if (!verify_positroidset(beta, gamma, t)) report.fail(label(beta, gamma, t) + ": P_t differs from pi_k");
        } catch (const BudgetExceeded& e) {
          report.flag(std::string("skipped: ") + e.what());
          return;
        }
      }
    });
  });
  return report;
}

// Certificates: each one holds on the open Richardson points over F_q and on
// rational points of W.
ClaimReport claim_certificates(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["primes"] = c.primes;
  report.parameters["rational_samples"] = c.rational_samples;
  const RationalField rationals;
  for_each_kn(c, [&](int k, int n) {
    if (k < 2) return;
    std::vector<PointsPtr> point_sets;
    for (std::uint32_t q : c.primes) {
      if (auto p = points_or_flag(cache, k, n, q, report)) point_sets.push_back(*p);
    }
    for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
      std::vector<Certificate> certs;
      for (int t = 1; t < k; ++t) {
        CertificateBuilder builder(beta, gamma, t);
        for (const auto& alpha : builder.domain()) certs.push_back(builder.certificate(alpha));
      }
      if (certs.empty()) return;
      const VarietySpec open = richardson_spec(beta, gamma, true);
      for (const auto& points : point_sets) {
        const auto members = filter_points(*points, open);
        for (const auto& cert : certs) {
          const CompiledCertificate<PrimeField> compiled(cert, points->field());
          for (std::size_t i : members) {
            ++report.checks;
            bool ok = false;
            try {
              ok = compiled.holds(points->plucker(i));
            } catch (const DivisionByZero&) {
            }
            if (!ok) {
              report.fail(label(beta, gamma, cert.t) + " alpha=" + cert.target.to_string() + " at " +
                          describe_point(*points, i));
            }
          }
        }
      }
      std::vector<PluckerVector<RationalField>> samples;
      for (int s = 0; s < c.rational_samples; ++s) {
        const auto m = sample_y(beta, gamma, rationals,
                                mix_seed(c.seed, {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n),
                                                  lex_index(beta), lex_index(gamma), static_cast<std::uint64_t>(s),
                                                  4}));
        samples.push_back(maximal_minors(phi(m, beta, gamma)));
      }
      for (const auto& cert : certs) {
        report.checks += samples.size();
        try {
          if (const auto i = find_certificate_failure<RationalField>(cert, samples)) {
            report.fail(label(beta, gamma, cert.t) + " alpha=" + cert.target.to_string() + " at rational sample " +
                        std::to_string(*i));
          }
        } catch (const DomainError& e) {
          report.fail(label(beta, gamma, cert.t) + " alpha=" + cert.target.to_string() + ": " + e.what());
        }
      }
    });
  });
  return report;
}

// Unit claim: with P_t empty, Delta_{delta_t} is a unit on the open Richardson variety.
ClaimReport claim_unit(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["primes"] = c.count_primes;
  for_each_kn(c, [&](int k, int n) {
    if (k < 2) return;
    std::vector<PointsPtr> point_sets;
    for (std::uint32_t q : c.count_primes) {
      if (auto p = points_or_flag(cache, k, n, q, report)) point_sets.push_back(*p);
    }
    for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
      for (int t = 1; t < k; ++t) {
        if (!p_set(beta, gamma, t).empty()) continue;
        const UnitCertificate unit = unit_certificate(beta, gamma, t);
        const std::size_t pivot = lex_index(unit.base.pivot);
        const VarietySpec open = richardson_spec(beta, gamma, true);
        for (const auto& points : point_sets) {
          const PrimeField& f = points->field();
          const CompiledCertificate<PrimeField> base(unit.base, f);
          const CompiledExpression<PrimeField> inverse_expr(unit.inverse, f, k, n);
          for (std::size_t i : filter_points(*points, open)) {
            ++report.checks;
            const auto p = points->plucker(i);
            bool ok = p[pivot] != 0;
            if (ok) {
              try {
                ok = base.holds(p) && f.mul(p[pivot], inverse_expr.evaluate(p)) == f.one();
              } catch (const DivisionByZero&) {
                ok = false;
              }
            }
            if (!ok) report.fail(label(beta, gamma, t) + " at " + describe_point(*points, i));
          }
        }
      }
    });
  });
  return report;
}

ClaimReport claim_divisor(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["primes"] = c.primes;
  report.parameters["nonempty_primes"] = c.nonempty_primes;
  for_each_kn(c, [&](int k, int n) {
    if (k < 2) return;
    for (std::uint32_t q : c.primes) {
      if (!points_or_flag(cache, k, n, q, report)) continue;
      for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
        for (int t = 1; t < k; ++t) {
          if (p_set(beta, gamma, t).empty()) continue;
          report.absorb(verify_positroid_divisor(beta, gamma, t, q, cache, c.nonempty_primes));
        }
      });
    }
  });
  return report;
}

ClaimReport claim_complement(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["primes"] = c.primes;
  for_each_kn(c, [&](int k, int n) {
    for (std::uint32_t q : c.primes) {
      if (!points_or_flag(cache, k, n, q, report)) continue;
      for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
        report.absorb(verify_complement(beta, gamma, q, cache));
      });
    }
  });
  return report;
}

ClaimReport claim_shifted(const SweepConfig& c, PointCache&) {
  ClaimReport report;
  report.parameters = range_params(c);
  for_each_kn(c, [&](int k, int n) {
    for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
      for (int t = 1; t < k; ++t) {
        const SubsetFamily ps = p_set(beta, gamma, t);
        if (!ps.empty()) {
          report.absorb(verify_shifted_schubert(beta, gamma, t));
          continue;
        }
        ++report.checks;
        if (!(ps == i_set(beta, gamma, t).intersect(interval(beta, gamma)))) {
          report.fail(label(beta, gamma, t) + ": P_t differs from I_t meet [beta,gamma]");
        }
      }
    });
  });
  return report;
}

// Coefficients of q^s (q-1)^u.
std::vector<mpq_class> w_polynomial(int s, int u) {
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(s + u + 1), 0);
  mpz_class binom = 1;
  for (int j = 0; j <= u; ++j) {
    coeffs[s + j] = ((u - j) % 2 == 0 ? 1 : -1) * mpq_class(binom);
    binom = binom * (u - j) / (j + 1);
  }
  return coeffs;
}

ClaimReport claim_w_count(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["primes"] = c.count_primes;
  report.parameters["interpolation_primes"] = c.interpolation_primes;
  report.parameters["interpolation_n_max"] = c.interpolation_n_max;
  for_each_kn(c, [&](int k, int n) {
    for (std::uint32_t q : c.count_primes) {
      if (!points_or_flag(cache, k, n, q, report)) continue;
      for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
        report.absorb(verify_w_count(beta, gamma, q, cache));
      });
    }
    if (n > c.interpolation_n_max) return;
    for (std::uint32_t q : c.interpolation_primes) {
      if (!points_or_flag(cache, k, n, q, report)) return;
    }
    for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
      const int dim = subset_rank(gamma) - subset_rank(beta);
      const YShape shape(beta, gamma);
      ++report.checks;
      const auto w = interpolate_count_polynomial(w_spec(beta, gamma), c.interpolation_primes, cache);
      if (w.coefficients != w_polynomial(shape.free_count(), shape.unit_count())) {
        report.fail(label(beta, gamma) + ": |W| interpolates to " + w.to_string());
      }
      ++report.checks;
      const auto open = interpolate_count_polynomial(richardson_spec(beta, gamma, true), c.interpolation_primes, cache);
      if (open.degree != dim || !open.determined) {
        report.fail(label(beta, gamma) + ": open Richardson count " + open.to_string() + " has degree " +
                    std::to_string(open.degree) + ", expected " + std::to_string(dim));
      }
      for (int t = 1; t < k; ++t) {
        if (p_set(beta, gamma, t).empty()) continue;
        ++report.checks;
        const auto div = interpolate_count_polynomial(divisor_spec(beta, gamma, t), c.interpolation_primes, cache);
        if (div.degree != dim - 1 || !div.determined) {
          report.fail(label(beta, gamma, t) + ": divisor count " + div.to_string() + " has degree " +
                      std::to_string(div.degree) + ", expected " + std::to_string(dim - 1));
        }
      }
    });
  });
  return report;
}

// [n choose k]_q as a product of q-integers.
mpz_class gaussian_binomial_oracle(int n, int k, std::uint32_t q) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (int i = 0; i < k; ++i) {
    mpz_class a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), q, static_cast<unsigned long>(n - i));
    mpz_ui_pow_ui(b.get_mpz_t(), q, static_cast<unsigned long>(i + 1));
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

bool covers_bruteforce(const KSubset& a, const KSubset& b) {
  if (a == b || !subset_leq(a, b)) return false;
  for (const auto& c : enumerate_subsets(a.k(), a.n())) {
    if (c != a && c != b && subset_leq(a, c) && subset_leq(c, b)) return false;
  }
  return true;
}

// Independent oracles, plus mutations that the verifiers must catch.
ClaimReport claim_oracles(const SweepConfig& c, PointCache& cache) {
  ClaimReport report;
  report.parameters = range_params(c);
  report.parameters["oracle_n_max"] = c.oracle_n_max;
  report.parameters["primes"] = c.primes;
  bool corruption_caught = false;
  bool corruption_tried = false;
  bool mutation_caught = false;
  bool mutation_tried = false;
  for_each_kn(c, [&](int k, int n) {
    const auto& subsets = enumerate_subsets(k, n);
    for (const auto& a : subsets) {
      for (const auto& b : subsets) {
        ++report.checks;
        if (covers(a, b) != covers_bruteforce(a, b)) report.fail("covers disagrees at " + label(a, b));
      }
    }
    if (n <= c.oracle_n_max) {
      for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
        ++report.checks;
        if (!is_positroid_bruteforce(interval(beta, gamma))) {
          report.fail("interval " + label(beta, gamma) + " is not a positroid");
        }
        for (int t = 1; t < k; ++t) {
          const SubsetFamily ps = p_set(beta, gamma, t);
          if (ps.empty()) continue;
          ++report.checks;
          if (!is_positroid_bruteforce(ps)) report.fail("P_t for " + label(beta, gamma, t) + " is not a positroid");
        }
      });
    }
    for (std::uint32_t q : c.primes) {
      ++report.checks;
      if (mpz_class(std::to_string(gaussian_binomial(n, k, q))) != gaussian_binomial_oracle(n, k, q)) {
        report.fail("gaussian_binomial disagrees for " + gr_label(k, n, q));
      }
      const auto maybe = points_or_flag(cache, k, n, q, report);
      if (!maybe) continue;
      const PointSet& points = **maybe;
      ++report.checks;
      if (mpz_class(std::to_string(points.size())) != gaussian_binomial_oracle(n, k, q)) {
        report.fail(gr_label(k, n, q) + " enumerated " + std::to_string(points.size()) + " points");
      }
      if (n > c.oracle_n_max) continue;
      // Partition into open Richardson cells and the Plucker relations at every point.
      std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> per_cell;
      for (std::size_t i = 0; i < points.size(); ++i) {
        ++report.checks;
        const auto cell = richardson_cell(points, i);
        ++per_cell[{lex_index(cell.beta), lex_index(cell.gamma)}];
        if (!verify_plucker_relations(points.plucker_vector(i))) {
          report.fail(describe_point(points, i) + " violates a Plucker relation");
        }
      }
      for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
        ++report.checks;
        const VarietySpec open = richardson_spec(beta, gamma, true);
        const std::uint64_t counted = count_points(points, open);
        const auto it = per_cell.find({lex_index(beta), lex_index(gamma)});
        if (counted != (it == per_cell.end() ? 0 : it->second)) {
          report.fail("open Richardson " + label(beta, gamma) + " over F_" + std::to_string(q) +
                      " disagrees with the cell partition");
        }
        if (n > c.exhaustive_n_max) return;
        const VarietySpec w = w_spec(beta, gamma);
        const std::size_t gamma_index = lex_index(gamma);
        for (std::size_t i = 0; i < points.size(); ++i) {
          ++report.checks;
          bool member = false;
          if (points.plucker(i)[gamma_index] != 0) {
            member = w_membership(normalize(points.matrix(i), gamma), beta, gamma);
          }
          if (member != w.contains(points.plucker(i))) {
            report.fail("w_spec and w_membership disagree on " + label(beta, gamma) + " at " +
                        describe_point(points, i));
          }
        }
      });
      if (k != 2 || n != 4) continue;
      // Mutations: a perturbed cofactor and a divisor with the wrong coordinate.
      for_each_pair(k, n, [&](const KSubset& beta, const KSubset& gamma) {
        if (p_set(beta, gamma, 1).empty()) return;
        const VarietySpec open = richardson_spec(beta, gamma, true);
        const auto members = filter_points(points, open);
        std::vector<PluckerVector<PrimeField>> vectors;
        for (std::size_t i : members) vectors.push_back(points.plucker_vector(i));
        CertificateBuilder builder(beta, gamma, 1);
        for (const auto& alpha : builder.domain()) {
          Certificate cert = builder.certificate(alpha);
          cert.cofactor += LaurentExpression::constant(1);
          corruption_tried = true;
          try {
            if (find_certificate_failure<PrimeField>(cert, vectors)) corruption_caught = true;
          } catch (const DomainError&) {
            corruption_caught = true;
          }
        }
        const KSubset pivot = delta(beta, gamma, 1);
        const VarietySpec rhs = intersect(positroid_spec(p_set(beta, gamma, 1)), open);
        for (const auto& wrong : interval(beta, gamma)) {
          if (wrong == pivot || wrong == beta || wrong == gamma) continue;
          SubsetFamily vanish = open.must_vanish();
          vanish.insert(wrong);
          const VarietySpec mutated(std::move(vanish), open.must_not_vanish(), "mutated divisor");
          mutation_tried = true;
          if (first_difference(points, mutated, rhs)) mutation_caught = true;
        }
      });
    }
  });
  if (corruption_tried && !corruption_caught) report.fail("no corrupted certificate was detected");
  if (mutation_tried && !mutation_caught) report.fail("no mutated divisor spec was detected");
  report.parameters["corruption_detected"] = corruption_caught;
  report.parameters["mutation_detected"] = mutation_caught;
  return report;
}

using ClaimFn = ClaimReport (*)(const SweepConfig&, PointCache&);

const std::vector<std::pair<std::string, ClaimFn>>& registry() {
  static const std::vector<std::pair<std::string, ClaimFn>> claims = {
      {"Thm3-roundtrip", claim_roundtrip},
      {"Plucker-relations", claim_plucker},
      {"Thm6-positroidset", claim_positroidset},
      {"Lem4-certificates", claim_certificates},
      {"Cor5-unit", claim_unit},
      {"Thm7-divisor", claim_divisor},
      {"S7-complement", claim_complement},
      {"S7-shifted-schubert", claim_shifted},
      {"W-count", claim_w_count},
      {"Oracle-agreement", claim_oracles},
  };
  return claims;
}

void check_primes(const std::vector<std::uint32_t>& primes, const char* key, std::size_t min_size) {
  if (primes.size() < min_size) {
    throw ConfigError(std::string(key) + " needs at least " + std::to_string(min_size) + " entries");
  }
  for (std::uint32_t p : primes) {
    if (!is_prime(p) || p >= (1u << 31)) throw ConfigError(std::string(key) + ": " + std::to_string(p) + " is not a usable prime");
  }
}

}  // namespace

void SweepConfig::validate() const {
  if (k_min < 1 || k_min > k_max) throw ConfigError("k range is empty");
  if (n_min < 1 || n_min > n_max) throw ConfigError("n range is empty");
  if (n_max > KSubset::kMaxN) throw ConfigError("n range exceeds " + std::to_string(KSubset::kMaxN));
  if (k_min > n_max) throw ConfigError("no k in range fits any n in range");
  check_primes(primes, "primes", 1);
  check_primes(count_primes, "count_primes", 1);
  check_primes(nonempty_primes, "nonempty_primes", 1);
  check_primes(interpolation_primes, "interpolation_primes", 2);
  if (budget == 0) throw ConfigError("budget must be positive");
  if (rational_samples < 0 || relation_samples < 0) throw ConfigError("sample counts must be nonnegative");
}

nlohmann::json SweepConfig::to_json() const {
  return {{"k_min", k_min},
          {"k_max", k_max},
          {"n_min", n_min},
          {"n_max", n_max},
          {"primes", primes},
          {"count_primes", count_primes},
          {"nonempty_primes", nonempty_primes},
          {"interpolation_primes", interpolation_primes},
          {"interpolation_n_max", interpolation_n_max},
          {"exhaustive_n_max", exhaustive_n_max},
          {"oracle_n_max", oracle_n_max},
          {"rational_samples", rational_samples},
          {"relation_samples", relation_samples},
          {"seed", seed},
          {"budget", budget}};
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, fn] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

ClaimReport run_claim(std::string_view id, const SweepConfig& config, PointCache& cache) {
  const auto& claims = registry();
  const auto it = std::find_if(claims.begin(), claims.end(), [&](const auto& e) { return e.first == id; });
  if (it == claims.end()) throw InvalidParameters("unknown claim " + std::string(id));
  const auto start = std::chrono::steady_clock::now();
  ClaimReport report;
  try {
    report = it->second(config, cache);
  } catch (const Error& e) {
    report.fail(std::string("error: ") + e.what());
  }
  report.claim = it->first;
  std::vector<std::string> unique;
  std::set<std::string> seen;
  for (auto& f : report.flags) {
    if (seen.insert(f).second) unique.push_back(std::move(f));
  }
  report.flags = std::move(unique);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool RunReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimReport& r) { return r.pass; });
}

nlohmann::json RunReport::to_json(bool stamp) const {
  nlohmann::json out;
  if (stamp) {
    out["version"] = std::string(tool_version());
#if defined(__VERSION__)
    out["compiler"] = __VERSION__;
#endif
  }
  out["config"] = config;
  out["claims"] = nlohmann::json::array();
  for (const auto& r : claims) out["claims"].push_back(r.to_json());
  out["verdict"] = pass() ? "pass" : "fail";
  return out;
}

std::string RunReport::summary() const {
  std::ostringstream out;
  for (const auto& r : claims) {
    out << (r.pass ? "PASS " : "FAIL ") << r.claim << " checks=" << r.checks;
    if (!r.flags.empty()) out << " flags=" << r.flags.size();
    out << " (" << std::fixed;
    out.precision(2);
    out << r.seconds << "s)";
    if (!r.pass) out << " witness: " << r.witness;
    out << "\n";
  }
  out << "overall: " << (pass() ? "pass" : "fail") << "\n";
  return out.str();
}

RunReport run_all(const SweepConfig& config) {
  config.validate();
  PointCache cache(config.budget);
  RunReport report;
  report.config = config.to_json();
  for (const auto& id : claim_ids()) report.claims.push_back(run_claim(id, config, cache));
  return report;
}

std::string_view tool_version() { return "0.1.0"; }

}  // namespace rvar
