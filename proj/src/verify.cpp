#include "rvar/verify.hpp"

#include <algorithm>

#include "rvar/errors.hpp"
#include "rvar/parameterization.hpp"

namespace rvar {

namespace {

std::string pair_label(const KSubset& beta, const KSubset& gamma) {
  return "beta=" + beta.to_string() + " gamma=" + gamma.to_string();
}

nlohmann::json pair_params(const KSubset& beta, const KSubset& gamma, std::uint32_t q) {
  return {{"k", beta.k()}, {"n", beta.n()}, {"beta", beta.to_string()}, {"gamma", gamma.to_string()}, {"q", q}};
}

}  // namespace

ClaimReport verify_positroid_divisor(const KSubset& beta, const KSubset& gamma, int t, std::uint32_t q,
                                     PointCache& cache, std::span<const std::uint32_t> nonempty_primes) {
  const SubsetFamily positroid = p_set(beta, gamma, t);
  if (positroid.empty()) {
    throw DomainError("p_set is empty for " + pair_label(beta, gamma) + " t=" + std::to_string(t));
  }
  ClaimReport report;
  report.claim = "divisor";
  report.parameters = pair_params(beta, gamma, q);
  report.parameters["t"] = t;
  const VarietySpec lhs = divisor_spec(beta, gamma, t);
  const VarietySpec rhs = intersect(positroid_spec(positroid), richardson_spec(beta, gamma, true));
  const auto points = cache.get(beta.k(), beta.n(), q);
  report.checks = points->size();
  if (const auto i = first_difference(*points, lhs, rhs)) {
    report.fail(pair_label(beta, gamma) + " t=" + std::to_string(t) + ": " + describe_point(*points, *i) +
                (lhs.contains(points->plucker(*i)) ? " is in the divisor only" : " is in X_{P_t} only"));
    return report;
  }
  if (count_points(*points, lhs) > 0) return report;
  for (std::uint32_t p : nonempty_primes) {
    if (p == q) continue;
    try {
      if (count_points(lhs, p, cache) > 0) return report;
    } catch (const BudgetExceeded&) {
      continue;
    }
  }
  report.flag("no F_q point on the divisor for " + pair_label(beta, gamma) + " t=" + std::to_string(t));
  return report;
}

ClaimReport verify_complement(const KSubset& beta, const KSubset& gamma, std::uint32_t q, PointCache& cache,
                              CoverBound bound) {
  ClaimReport report;
  report.claim = "complement";
  report.parameters = pair_params(beta, gamma, q);
  report.parameters["bound"] = bound == CoverBound::inclusive ? "inclusive" : "strict";
  const VarietySpec w = w_spec(beta, gamma);
  const VarietySpec closed = richardson_spec(beta, gamma, false);
  std::vector<VarietySpec> boundary;
  for (const auto& m : sigma_sets(beta, gamma, bound).all()) boundary.push_back(positroid_spec(m));
  const auto points = cache.get(beta.k(), beta.n(), q);
  report.checks = points->size();
  const auto in_rhs = [&](std::span<const std::uint32_t> p) {
    if (!closed.contains(p)) return false;
    return std::none_of(boundary.begin(), boundary.end(), [&](const VarietySpec& s) { return s.contains(p); });
  };
  for (std::size_t i = 0; i < points->size(); ++i) {
    const auto p = points->plucker(i);
    const bool left = w.contains(p);
    if (left != in_rhs(p)) {
      report.fail(pair_label(beta, gamma) + ": " + describe_point(*points, i) +
                  (left ? " is in W but on a boundary positroid" : " avoids every boundary positroid but is not in W"));
      break;
    }
  }
  return report;
}

ClaimReport verify_shifted_schubert(const KSubset& beta, const KSubset& gamma, int t) {
  ClaimReport report;
  report.claim = "shifted-schubert";
  report.parameters = pair_params(beta, gamma, 0);
  report.parameters.erase("q");
  report.parameters["t"] = t;
  const int k = beta.k();
  const int n = beta.n();
  const SubsetFamily shifted_target = i_set(beta, gamma, t);
  const SubsetFamily ps = p_set(beta, gamma, t);
  if (ps.empty()) {
    throw DomainError("epsilon undefined for " + pair_label(beta, gamma) + " t=" + std::to_string(t));
  }
  report.checks = 2;
  if (!(ps == shifted_target.intersect(interval(beta, gamma)))) {
    report.fail(pair_label(beta, gamma) + " t=" + std::to_string(t) + ": P_t differs from I_t meet [beta,gamma]");
    return report;
  }
  const KSubset eps = epsilon(beta, gamma, t);
  SubsetFamily shifted(k, n);
  for (const auto& a : enumerate_subsets(k, n)) {
    if (subset_leq(eps, a)) shifted.insert(cyclic_shift(a, gamma[t - 1]));
  }
  if (!(shifted == shifted_target)) {
    report.fail(pair_label(beta, gamma) + " t=" + std::to_string(t) + ": shift of {alpha >= " + eps.to_string() +
                "} differs from I_t");
  }
  return report;
}

ClaimReport verify_w_count(const KSubset& beta, const KSubset& gamma, std::uint32_t q, PointCache& cache) {
  ClaimReport report;
  report.claim = "w-count";
  report.parameters = pair_params(beta, gamma, q);
  const YShape shape(beta, gamma);
  const std::uint64_t expected = y_point_count(shape, q);
  const std::uint64_t actual = count_points(w_spec(beta, gamma), q, cache);
  report.checks = 1;
  report.parameters["expected"] = expected;
  report.parameters["counted"] = actual;
  if (expected != actual) {
    report.fail(pair_label(beta, gamma) + " q=" + std::to_string(q) + ": counted " + std::to_string(actual) +
                ", expected " + std::to_string(expected));
  }
  return report;
}

std::string CountPolynomial::to_string() const {
  if (degree < 0) return "0";
  std::string out;
  for (int d = degree; d >= 0; --d) {
    const mpq_class& c = coefficients[d];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const mpq_class magnitude = abs(c);
    if (d == 0 || magnitude != 1) out += magnitude.get_str() + (d > 0 ? "*" : "");
    if (d > 0) out += d == 1 ? "q" : "q^" + std::to_string(d);
  }
  return out;
}

CountPolynomial interpolate_polynomial(std::span<const std::pair<std::uint64_t, std::uint64_t>> samples) {
  if (samples.size() < 2) throw InvalidParameters("interpolation needs at least two samples");
  const std::size_t m = samples.size();
  std::vector<mpq_class> xs(m), dd(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = mpq_class(mpz_class(std::to_string(samples[i].first)));
    dd[i] = mpq_class(mpz_class(std::to_string(samples[i].second)));
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) throw InvalidParameters("interpolation samples repeat a point");
    }
  }
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Horner expansion of the Newton form into monomial coefficients.
  std::vector<mpq_class> coeffs(m, 0);
  for (std::size_t i = m; i-- > 0;) {
    std::vector<mpq_class> next(m, 0);
    for (std::size_t d = 0; d + 1 < m; ++d) {
      next[d + 1] += coeffs[d];
      next[d] -= coeffs[d] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  CountPolynomial poly;
  poly.coefficients = coeffs;
  for (std::size_t d = 0; d < m; ++d) {
    if (coeffs[d] != 0) poly.degree = static_cast<int>(d);
  }
  poly.coefficients.resize(static_cast<std::size_t>(std::max(poly.degree + 1, 0)));
  poly.determined = static_cast<std::size_t>(poly.degree + 1) < m;
  poly.samples.assign(samples.begin(), samples.end());
  return poly;
}

CountPolynomial interpolate_count_polynomial(const VarietySpec& spec, std::span<const std::uint32_t> primes,
                                             PointCache& cache) {
  if (primes.size() < 2) throw InvalidParameters("interpolation needs at least two primes");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  for (std::uint32_t q : primes) samples.emplace_back(q, count_points(spec, q, cache));
  return interpolate_polynomial(samples);
}

}  // namespace rvar
