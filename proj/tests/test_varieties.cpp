#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <set>

#include "doctest.h"
#include "rvar/errors.hpp"
#include "rvar/grassmannian.hpp"
#include "rvar/variety.hpp"
#include "rvar/verify.hpp"

using namespace rvar;

namespace {

KSubset S(std::initializer_list<int> e, int n) { return KSubset(e, n); }

mpz_class gaussian_oracle(int n, int k, unsigned long q) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (int i = 0; i < k; ++i) {
    mpz_class a;
    mpz_class b;
    mpz_ui_pow_ui(a.get_mpz_t(), q, n - i);
    mpz_ui_pow_ui(b.get_mpz_t(), q, i + 1);
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("gaussian_binomial") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  CHECK(gaussian_binomial(6, 3, 2) == 1395);
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(3, 4, 2) == 0);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (unsigned long q : {2ul, 3ul, 5ul, 7ul}) {
        CHECK(mpz_class(std::to_string(gaussian_binomial(n, k, q))) == gaussian_oracle(n, k, q));
      }
    }
  }
  CHECK(gaussian_binomial(60, 30, 1000) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("enumeration matches the serial reference") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (std::uint32_t q : {2u, 3u}) {
        const auto a = enumerate_grassmannian(k, n, q);
        const auto b = enumerate_grassmannian_serial(k, n, q);
        REQUIRE(a.size() == gaussian_binomial(n, k, q));
        REQUIRE(a.size() == b.size());
        bool same = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          const auto ea = a.echelon(i);
          const auto eb = b.echelon(i);
          const auto pa = a.plucker(i);
          const auto pb = b.plucker(i);
          same = same && std::equal(ea.begin(), ea.end(), eb.begin()) && std::equal(pa.begin(), pa.end(), pb.begin());
        }
        CHECK(same);
      }
    }
  }
}

TEST_CASE("enumerated points are distinct valid points") {
  const auto points = enumerate_grassmannian(2, 4, 3);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto p = points.plucker_vector(i);
    CHECK_FALSE(p.is_zero());
    CHECK(verify_plucker_relations(p));
    CHECK(maximal_minors(points.matrix(i)) == p);
    const auto e = points.echelon(i);
    seen.emplace(e.begin(), e.end());
  }
  CHECK(seen.size() == points.size());
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(enumerate_grassmannian(2, 4, 2, 10), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_grassmannian_serial(2, 4, 2, 10), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_grassmannian(3, 6, 5), BudgetExceeded);
  PointCache small(10);
  CHECK_THROWS_AS(small.get(2, 4, 2), BudgetExceeded);
  PointCache cache;
  CHECK(cache.get(2, 4, 2) == cache.get(2, 4, 2));
}

TEST_CASE("filter and count match the serial reference") {
  const auto points = enumerate_grassmannian(3, 6, 2);
  for (const auto& beta : enumerate_subsets(3, 6)) {
    for (const auto& gamma : enumerate_subsets(3, 6)) {
      if (!subset_leq(beta, gamma)) continue;
      for (bool open : {false, true}) {
        const auto spec = richardson_spec(beta, gamma, open);
        const auto fast = filter_points(points, spec);
        CHECK(fast == filter_points_serial(points, spec));
        CHECK(count_points(points, spec) == fast.size());
        CHECK(count_points_serial(points, spec) == fast.size());
      }
    }
  }
}

TEST_CASE("named varieties") {
  PointCache cache;
  CHECK(count_points(grassmannian_spec(2, 4), 2, cache) == 35);
  // a Richardson variety with beta = gamma is a single coordinate point
  for (std::uint32_t q : {2u, 3u, 5u}) CHECK(count_points(richardson_spec(S({2, 4}, 4), S({2, 4}, 4), false), q, cache) == 1);
  // the positroid variety of an interval is the closed Richardson variety
  const auto points = enumerate_grassmannian(2, 5, 3);
  for (const auto& beta : enumerate_subsets(2, 5)) {
    for (const auto& gamma : enumerate_subsets(2, 5)) {
      if (!subset_leq(beta, gamma)) continue;
      CHECK_FALSE(
          first_difference(points, positroid_spec(interval(beta, gamma)), richardson_spec(beta, gamma, false)).has_value());
    }
  }
  CHECK_THROWS_AS(intersect(divisor_spec(S({1, 2}, 4), S({3, 4}, 4), 1), w_spec(S({1, 2}, 4), S({3, 4}, 4))),
                  InvalidParameters);
  CHECK(describe_point(points, 0).rfind("F_3 point #0 [[", 0) == 0);
}

TEST_CASE("open Richardson varieties partition the Grassmannian") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto points = enumerate_grassmannian(k, n, 2);
      std::uint64_t total = 0;
      for (const auto& beta : enumerate_subsets(k, n)) {
        for (const auto& gamma : enumerate_subsets(k, n)) {
          if (subset_leq(beta, gamma)) total += count_points(points, richardson_spec(beta, gamma, true));
        }
      }
      CHECK(total == points.size());
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto cell = richardson_cell(points, i);
        CHECK(membership(points, i, richardson_spec(cell.beta, cell.gamma, true)));
      }
    }
  }
}

TEST_CASE("positroid divisor") {
  PointCache cache;
  const auto report = verify_positroid_divisor(S({1, 2}, 4), S({3, 4}, 4), 1, 3, cache);
  CHECK(report.pass);
  CHECK(report.flags.empty());
  CHECK(report.checks > 0);
  CHECK_THROWS_AS(verify_positroid_divisor(S({1, 2}, 4), S({1, 4}, 4), 1, 3, cache), DomainError);

  // replacing delta_t by another member of the interval must be detected
  const KSubset beta = S({1, 2}, 4);
  const KSubset gamma = S({3, 4}, 4);
  const auto points = enumerate_grassmannian(2, 4, 2);
  const auto rhs = intersect(positroid_spec(p_set(beta, gamma, 1)), richardson_spec(beta, gamma, true));
  CHECK_FALSE(first_difference(points, divisor_spec(beta, gamma, 1), rhs).has_value());
  SubsetFamily vanish(2, 4);
  vanish.insert(S({1, 3}, 4));
  SubsetFamily keep(2, 4);
  keep.insert(beta);
  keep.insert(gamma);
  CHECK(first_difference(points, VarietySpec(vanish, keep), rhs).has_value());
}

TEST_CASE("complement of W") {
  PointCache cache;
  CHECK(verify_complement(S({1, 2}, 4), S({3, 4}, 4), 2, cache).pass);
  CHECK(verify_complement(S({1, 3, 5}, 6), S({2, 4, 6}, 6), 2, cache).pass);
  // dropping the endpoint covers loses the boundary when beta is covered by gamma
  CHECK(verify_complement(S({1}, 2), S({2}, 2), 2, cache).pass);
  const auto strict = verify_complement(S({1}, 2), S({2}, 2), 2, cache, CoverBound::strict);
  CHECK_FALSE(strict.pass);
  CHECK_FALSE(strict.witness.empty());
}

TEST_CASE("shifted Schubert description") {
  CHECK(verify_shifted_schubert(S({1, 2}, 4), S({3, 4}, 4), 1).pass);
  CHECK(verify_shifted_schubert(S({1, 2, 3}, 6), S({4, 5, 6}, 6), 2).pass);
  CHECK_THROWS_AS(verify_shifted_schubert(S({1, 2}, 4), S({1, 4}, 4), 1), DomainError);
}

TEST_CASE("W point counts") {
  PointCache cache;
  for (std::uint32_t q : {2u, 3u, 5u}) {
    CHECK(verify_w_count(S({1, 2}, 4), S({3, 4}, 4), q, cache).pass);
    CHECK(verify_w_count(S({1, 3}, 5), S({3, 5}, 5), q, cache).pass);
  }
}

TEST_CASE("interpolation") {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> squares{{2, 4}, {3, 9}, {5, 25}, {7, 49}};
  const auto p = interpolate_polynomial(squares);
  CHECK(p.degree == 2);
  CHECK(p.determined);
  CHECK(p.coefficients[2] == 1);
  CHECK(p.coefficients[0] == 0);
  CHECK(p.to_string() == "q^2");
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> one{{2, 4}};
  CHECK_THROWS_AS(interpolate_polynomial(one), InvalidParameters);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> repeat{{2, 4}, {2, 4}};
  CHECK_THROWS_AS(interpolate_polynomial(repeat), InvalidParameters);

  PointCache cache;
  const std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  const auto open = interpolate_count_polynomial(richardson_spec(S({1, 2}, 4), S({3, 4}, 4), true), primes, cache);
  CHECK(open.degree == 4);
  CHECK(open.determined);
  const auto divisor = interpolate_count_polynomial(divisor_spec(S({1, 2}, 4), S({3, 4}, 4), 1), primes, cache);
  CHECK(divisor.degree == 3);
  CHECK(divisor.determined);
  const std::vector<std::uint32_t> single{2};
  CHECK_THROWS_AS(interpolate_count_polynomial(grassmannian_spec(2, 4), single, cache), InvalidParameters);
}
