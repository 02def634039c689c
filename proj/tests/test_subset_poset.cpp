#include <algorithm>
#include <random>

#include "doctest.h"
#include "rvar/errors.hpp"
#include "rvar/subset.hpp"

using namespace rvar;

namespace {

KSubset S(std::initializer_list<int> e, int n) { return KSubset(e, n); }

SubsetFamily family(int k, int n, std::initializer_list<KSubset> members) {
  SubsetFamily f(k, n);
  for (const auto& m : members) f.insert(m);
  return f;
}

// Order-theoretic covering: a < b with nothing strictly between.
bool covers_oracle(const KSubset& a, const KSubset& b) {
  if (a == b || !subset_leq(a, b)) return false;
  for (const auto& c : enumerate_subsets(a.k(), a.n())) {
    if (c != a && c != b && subset_leq(a, c) && subset_leq(c, b)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("KSubset construction and parsing") {
  const KSubset a = S({1, 3}, 4);
  CHECK(a.k() == 2);
  CHECK(a[0] == 1);
  CHECK(a[1] == 3);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.to_string() == "{1,3}");
  CHECK(KSubset::parse("{ 3, 1 }", 4) == a);
  CHECK_THROWS_AS(S({1, 1}, 4), InvalidParameters);
  CHECK_THROWS_AS(S({0, 2}, 4), InvalidParameters);
  CHECK_THROWS_AS(S({2, 5}, 4), InvalidParameters);
  CHECK_THROWS_AS(KSubset::parse("{1,", 4), ParseError);
  CHECK_THROWS_AS(KSubset::parse("1,2", 4), ParseError);
  CHECK(KSubset::from_mask(0b1010, 4) == S({2, 4}, 4));
  CHECK(a.exchange(3, 4) == S({1, 4}, 4));
}

TEST_CASE("enumerate_subsets is lexicographic with binomial size") {
  const auto& one = enumerate_subsets(1, 2);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == S({1}, 2));
  CHECK(one[1] == S({2}, 2));
  const std::vector<KSubset> expected{S({1, 2}, 4), S({1, 3}, 4), S({1, 4}, 4),
                                      S({2, 3}, 4), S({2, 4}, 4), S({3, 4}, 4)};
  CHECK(enumerate_subsets(2, 4) == expected);
  CHECK(enumerate_subsets(3, 6).size() == 20);
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto& all = enumerate_subsets(k, n);
      CHECK(all.size() == binomial(n, k));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (std::size_t i = 0; i < all.size(); ++i) CHECK(lex_index(all[i]) == i);
    }
  }
  CHECK_THROWS_AS(enumerate_subsets(3, 2), InvalidParameters);
  CHECK_THROWS_AS(enumerate_subsets(0, 2), InvalidParameters);
}

TEST_CASE("subset_leq") {
  CHECK(subset_leq(S({1, 2}, 4), S({3, 4}, 4)));
  CHECK_FALSE(subset_leq(S({1, 4}, 4), S({2, 3}, 4)));
  for (const auto& a : enumerate_subsets(2, 5)) CHECK(subset_leq(a, a));
  CHECK_THROWS_AS(subset_leq(S({1, 2}, 4), S({1, 2}, 5)), InvalidParameters);
}

TEST_CASE("interval") {
  CHECK(interval(S({1, 2}, 4), S({3, 4}, 4)).size() == 6);
  CHECK(interval(S({2, 3}, 4), S({2, 3}, 4)) == family(2, 4, {S({2, 3}, 4)}));
  CHECK(interval(S({1, 3}, 4), S({2, 4}, 4)) ==
        family(2, 4, {S({1, 3}, 4), S({1, 4}, 4), S({2, 3}, 4), S({2, 4}, 4)}));
  CHECK_THROWS_AS(interval(S({1, 4}, 4), S({2, 3}, 4)), EmptyInterval);
  for (const auto& beta : enumerate_subsets(3, 6)) {
    for (const auto& gamma : enumerate_subsets(3, 6)) {
      if (!subset_leq(beta, gamma)) continue;
      std::size_t brute = 0;
      for (const auto& a : enumerate_subsets(3, 6)) brute += subset_leq(beta, a) && subset_leq(a, gamma);
      CHECK(interval(beta, gamma).size() == brute);
    }
  }
}

TEST_CASE("covers agrees with the order-theoretic definition") {
  CHECK(covers(S({1, 2}, 4), S({1, 3}, 4)));
  CHECK_FALSE(covers(S({1, 2}, 4), S({3, 4}, 4)));
  CHECK_FALSE(covers(S({1, 2}, 4), S({1, 2}, 4)));
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& a : enumerate_subsets(k, n)) {
        for (const auto& b : enumerate_subsets(k, n)) CHECK(covers(a, b) == covers_oracle(a, b));
      }
    }
  }
}

TEST_CASE("delta") {
  const KSubset beta = S({1, 2}, 4);
  const KSubset gamma = S({3, 4}, 4);
  CHECK(delta(beta, gamma, 0) == gamma);
  CHECK(delta(beta, gamma, 2) == beta);
  CHECK(delta(beta, gamma, 1) == S({1, 4}, 4));
  CHECK_THROWS_AS(delta(beta, gamma, 3), InvalidParameters);
  CHECK_THROWS_AS(delta(beta, gamma, -1), InvalidParameters);
  for (const auto& b : enumerate_subsets(3, 6)) {
    for (const auto& g : enumerate_subsets(3, 6)) {
      if (!subset_leq(b, g)) continue;
      for (int t = 0; t <= 3; ++t) CHECK(in_interval(delta(b, g, t), b, g));
      for (int t = 1; t < 3; ++t) {
        CHECK_FALSE(p_set(b, g, t).contains(delta(b, g, t)));
        CHECK(p_bar_set(b, g, t).contains(delta(b, g, t)));
      }
    }
  }
}

TEST_CASE("p_set, p_bar_set and i_set") {
  const KSubset beta = S({1, 2}, 4);
  const KSubset gamma = S({3, 4}, 4);
  const auto all_but_14 =
      family(2, 4, {S({1, 2}, 4), S({1, 3}, 4), S({2, 3}, 4), S({2, 4}, 4), S({3, 4}, 4)});
  CHECK(p_set(beta, gamma, 1) == all_but_14);
  CHECK(p_bar_set(beta, gamma, 1) == family(2, 4, {S({1, 4}, 4)}));
  CHECK(i_set(beta, gamma, 1) == all_but_14);
  CHECK(p_set(S({1, 2}, 4), S({1, 4}, 4), 1).empty());
  CHECK_THROWS_AS(p_set(beta, gamma, 0), InvalidParameters);
  CHECK_THROWS_AS(p_set(beta, gamma, 2), InvalidParameters);
  for (int n = 2; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      for (const auto& b : enumerate_subsets(k, n)) {
        for (const auto& g : enumerate_subsets(k, n)) {
          if (!subset_leq(b, g)) continue;
          for (int t = 1; t < k; ++t) {
            const auto ps = p_set(b, g, t);
            CHECK(ps == i_set(b, g, t).intersect(interval(b, g)));
            CHECK(ps.unite(p_bar_set(b, g, t)) == interval(b, g));
            CHECK(ps.intersect(p_bar_set(b, g, t)).empty());
            CHECK(ps.empty() == (b[t] > g[t - 1]));
          }
        }
      }
    }
  }
}

TEST_CASE("cyclic_shift adds j modulo n") {
  CHECK(cyclic_shift(S({1, 2}, 4), 0) == S({1, 2}, 4));
  CHECK(cyclic_shift(S({3, 4}, 4), 1) == S({1, 4}, 4));
  CHECK(cyclic_shift(S({1, 2}, 4), -1) == S({1, 4}, 4));
  for (const auto& a : enumerate_subsets(3, 6)) {
    CHECK(cyclic_shift(a, 6) == a);
    CHECK(cyclic_shift(cyclic_shift(a, 2), 4) == a);
  }
  // bijection on S(3,6)
  SubsetFamily image(3, 6);
  for (const auto& a : enumerate_subsets(3, 6)) image.insert(cyclic_shift(a, 5));
  CHECK(image.size() == 20);
}

TEST_CASE("epsilon") {
  CHECK(epsilon(S({1, 2}, 4), S({3, 4}, 4), 1) == S({1, 3}, 4));
  CHECK_THROWS_AS(epsilon(S({1, 2}, 4), S({1, 4}, 4), 1), InvalidParameters);
  // The last element n - gamma(t) + beta(t+1) is always at least k + 1, so
  // epsilon is a valid k-subset whenever P_t is nonempty.
  int cases = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int k = 2; k < n; ++k) {
      for (const auto& b : enumerate_subsets(k, n)) {
        for (const auto& g : enumerate_subsets(k, n)) {
          if (!subset_leq(b, g)) continue;
          for (int t = 1; t < k; ++t) {
            if (p_set(b, g, t).empty()) continue;
            ++cases;
            const int last = n - g[t - 1] + b[t];
            CHECK(last >= k + 1);
            CHECK(last <= n);
            CHECK(epsilon(b, g, t)[k - 1] == last);
          }
        }
      }
    }
  }
  CHECK(cases > 0);
}

TEST_CASE("sigma_sets") {
  const KSubset beta = S({1, 2}, 4);
  const KSubset gamma = S({3, 4}, 4);
  const SigmaSets same = sigma_sets(beta, beta);
  CHECK(same.sigma0.empty());
  CHECK(same.sigma1.empty());
  CHECK(same.sigma2.empty());

  const SigmaSets s = sigma_sets(beta, gamma);
  REQUIRE(s.sigma0.size() == 1);
  CHECK(s.sigma0[0] == p_set(beta, gamma, 1));
  std::size_t up_covers = 0;
  for (const auto& b : enumerate_subsets(2, 4)) up_covers += covers_oracle(beta, b) && subset_leq(b, gamma);
  CHECK(s.sigma1.size() == up_covers);
  REQUIRE(s.sigma1.size() == 1);
  CHECK(s.sigma1[0] == interval(S({1, 3}, 4), gamma));
  REQUIRE(s.sigma2.size() == 1);
  CHECK(s.sigma2[0] == interval(beta, S({2, 4}, 4)));

  // beta covered by gamma: inclusive keeps the endpoint intervals, strict drops them.
  const SigmaSets cover = sigma_sets(S({1}, 2), S({2}, 2));
  CHECK(cover.sigma1.size() == 1);
  CHECK(cover.sigma2.size() == 1);
  const SigmaSets strict = sigma_sets(S({1}, 2), S({2}, 2), CoverBound::strict);
  CHECK(strict.sigma1.empty());
  CHECK(strict.sigma2.empty());

  for (const auto& b : enumerate_subsets(3, 6)) {
    for (const auto& g : enumerate_subsets(3, 6)) {
      if (!subset_leq(b, g)) continue;
      for (const auto& m : sigma_sets(b, g).all()) CHECK(m.is_subfamily_of(interval(b, g)));
    }
  }
}

TEST_CASE("subset_rank") {
  CHECK(subset_rank(KSubset::initial(3, 7)) == 0);
  CHECK(subset_rank(KSubset::terminal(3, 7)) == 12);
  const KSubset beta = S({2, 5, 6, 10}, 14);
  const KSubset gamma = S({6, 8, 11, 12}, 14);
  CHECK(subset_rank(gamma) - subset_rank(beta) == 14);
}

TEST_CASE("SubsetFamily set operations") {
  const auto a = family(2, 4, {S({1, 2}, 4), S({1, 3}, 4)});
  const auto b = family(2, 4, {S({1, 3}, 4), S({3, 4}, 4)});
  CHECK(a.intersect(b) == family(2, 4, {S({1, 3}, 4)}));
  CHECK(a.unite(b).size() == 3);
  CHECK(a.complement().size() == 4);
  CHECK(a.is_subfamily_of(a.unite(b)));
  SubsetFamily f(2, 4);
  CHECK(f.insert(S({1, 2}, 4)));
  CHECK_FALSE(f.insert(S({1, 2}, 4)));
  CHECK_THROWS_AS(f.insert(S({1, 2}, 5)), InvalidParameters);
}
