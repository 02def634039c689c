#include <random>

#include "doctest.h"
#include "rvar/errors.hpp"
#include "rvar/field.hpp"
#include "rvar/matrix.hpp"
#include "rvar/parameterization.hpp"
#include "rvar/plucker.hpp"

using namespace rvar;

namespace {

KSubset S(std::initializer_list<int> e, int n) { return KSubset(e, n); }

Matrix<RationalField> Q(std::initializer_list<std::initializer_list<long>> rows) {
  const RationalField f;
  const int r = static_cast<int>(rows.size());
  const int c = static_cast<int>(rows.begin()->size());
  Matrix<RationalField> m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

Matrix<RationalField> random_matrix(int k, int n, std::mt19937_64& rng) {
  const RationalField f;
  Matrix<RationalField> m(f, k, n);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = random_element(f, rng, false);
  }
  return m;
}

}  // namespace

TEST_CASE("fields") {
  const RationalField q;
  CHECK(q.parse("-3/6") == mpq_class(-1, 2));
  CHECK(q.format(mpq_class(4, -6)) == "-2/3");
  CHECK_THROWS_AS(q.inv(q.zero()), DivisionByZero);
  CHECK_THROWS(q.parse("1/0"));
  CHECK_THROWS(q.parse("x"));

  const PrimeField f7(7);
  CHECK(f7.mul(3, 5) == 1);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.from_int(-1) == 6);
  CHECK(f7.from_rational(mpq_class(1, 2)) == 4);
  CHECK_THROWS_AS(f7.inv(0), DivisionByZero);
  CHECK_THROWS_AS(PrimeField(4), InvalidParameters);
  CHECK_THROWS_AS(PrimeField(2147483659u), InvalidParameters);
  for (std::uint32_t p : {2u, 3u, 5u, 13u, 2147483647u}) {
    const PrimeField f(p);
    for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 50); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("determinant and inverse") {
  CHECK(determinant(Q({{2, 1}, {4, 5}})) == 6);
  CHECK(determinant(Q({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(Q({{1, 2}, {2, 4}})) == 0);
  const auto m = Q({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(multiply(inverse(m), m) == Matrix<RationalField>::identity(RationalField{}, 3));
  CHECK_THROWS_AS(inverse(Q({{1, 2}, {2, 4}})), DomainError);
}

TEST_CASE("matrix text format") {
  const RationalField q;
  const auto m = parse_matrix(q, "# comment\n1 -1/2\n\n0 3/4\n");
  CHECK(m.rows() == 2);
  CHECK(m(0, 1) == mpq_class(-1, 2));
  CHECK(format_matrix(m) == "1 -1/2\n0 3/4\n");
  CHECK(format_matrix(parse_matrix(q, format_matrix(m))) == format_matrix(m));
  try {
    parse_matrix(q, "1 2\n3 x\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_matrix(q, "1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix(PrimeField(5), "7\n"), ParseError);
}

TEST_CASE("maximal minors") {
  const RationalField q;
  const auto gamma_identity = Q({{0, 1, 0, 0}, {0, 0, 0, 1}});
  CHECK(maximal_minors(gamma_identity)[S({2, 4}, 4)] == 1);
  const auto m = Q({{1, 0, 2, 3}, {0, 1, 5, 7}});
  CHECK(maximal_minors(m)[S({3, 4}, 4)] == 2 * 7 - 3 * 5);
  CHECK(maximal_minors(Q({{1, 2, 3}, {2, 4, 6}})).is_zero());

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_matrix(3, 6, rng);
    const auto p = maximal_minors(a);
    const auto swapped = maximal_minors(a.transposed_rows(0, 2));
    for (const auto& s : enumerate_subsets(3, 6)) CHECK(swapped[s] == -p[s]);
    const auto g = random_matrix(3, 3, rng);
    const auto scaled = maximal_minors(multiply(g, a));
    const mpq_class d = determinant(g);
    for (const auto& s : enumerate_subsets(3, 6)) CHECK(scaled[s] == d * p[s]);
  }
}

TEST_CASE("Plucker relations on minors") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = maximal_minors(random_matrix(2, 4, rng));
    CHECK(p[S({1, 3}, 4)] * p[S({2, 4}, 4)] - p[S({1, 2}, 4)] * p[S({3, 4}, 4)] - p[S({1, 4}, 4)] * p[S({2, 3}, 4)] ==
          0);
    CHECK(verify_plucker_relations(p));
  }
  auto p = maximal_minors(Q({{1, 0, 2, 3}, {0, 1, 5, 7}}));
  p[S({1, 3}, 4)] += 1;
  CHECK_FALSE(verify_plucker_relations(p));
  CHECK(find_violated_relation(p).has_value());
}

TEST_CASE("ldu") {
  const RationalField q;
  const auto id = ldu(Matrix<RationalField>::identity(q, 3));
  CHECK(id.lower == Matrix<RationalField>::identity(q, 3));
  CHECK(id.diagonal == Matrix<RationalField>::identity(q, 3));
  CHECK(id.upper == Matrix<RationalField>::identity(q, 3));

  const auto f = ldu(Q({{2, 1}, {4, 5}}));
  CHECK(f.lower == Q({{1, 0}, {2, 1}}));
  CHECK(f.diagonal == Q({{2, 0}, {0, 3}}));
  Matrix<RationalField> u = Q({{1, 0}, {0, 1}});
  u(0, 1) = mpq_class(1, 2);
  CHECK(f.upper == u);

  try {
    ldu(Q({{0, 1}, {1, 0}}));
    FAIL("expected a decomposition error");
  } catch (const DecompositionError& e) {
    CHECK(e.index() == 1);
  }
  try {
    ldu(Q({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
    FAIL("expected a decomposition error");
  } catch (const DecompositionError& e) {
    CHECK(e.index() == 2);
  }

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto s = random_matrix(4, 4, rng);
    try {
      const auto d = ldu(s);
      CHECK(multiply(multiply(d.lower, d.diagonal), d.upper) == s);
    } catch (const DecompositionError&) {
    }
  }
}

TEST_CASE("YShape counts") {
  const YShape fig(S({2, 5, 6, 10}, 14), S({6, 8, 11, 12}, 14));
  CHECK(fig.free_count() == 10);
  CHECK(fig.unit_count() == 4);
  CHECK(fig.free_count() + fig.unit_count() == subset_rank(S({6, 8, 11, 12}, 14)) - subset_rank(S({2, 5, 6, 10}, 14)));
  const YShape small(S({1, 2}, 4), S({3, 4}, 4));
  CHECK(small.free_count() == 2);
  CHECK(small.unit_count() == 2);
  CHECK(y_point_count(small, 2) == 4);
  CHECK(y_point_count(small, 3) == 36);
  CHECK(y_point_count(fig, 3) == 59049ull * 16);
}

TEST_CASE("y_shape_check") {
  const KSubset beta = S({2, 5, 6, 10}, 14);
  const KSubset gamma = S({6, 8, 11, 12}, 14);
  const RationalField q;
  Matrix<RationalField> m(q, 4, 14);
  for (int i = 0; i < 4; ++i) {
    m(i, beta[i] - 1) = 1;
    m(i, gamma[i] - 1) = 1;
  }
  CHECK(y_shape_check(m, beta, gamma));
  auto zero_unit = m;
  zero_unit(0, beta[0] - 1) = 0;
  CHECK_FALSE(y_shape_check(zero_unit, beta, gamma));
  auto left = m;
  left(1, 0) = 3;
  CHECK_FALSE(y_shape_check(left, beta, gamma));
  auto not_one = m;
  not_one(2, gamma[2] - 1) = 2;
  CHECK_FALSE(y_shape_check(not_one, beta, gamma));
}

TEST_CASE("sample_y") {
  const KSubset beta = S({1, 2, 4}, 6);
  const KSubset gamma = S({3, 5, 6}, 6);
  const PrimeField f2(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = sample_y(beta, gamma, f2, seed);
    CHECK(y_shape_check(m, beta, gamma));
    for (int i = 0; i < 3; ++i) CHECK(m(i, beta[i] - 1) == 1);
  }
  const RationalField q;
  CHECK(sample_y(beta, gamma, q, 9) == sample_y(beta, gamma, q, 9));
  std::uint64_t visited = 0;
  for_each_y(beta, gamma, PrimeField(3), [&](const Matrix<PrimeField>& m) {
    CHECK(y_shape_check(m, beta, gamma));
    ++visited;
  });
  CHECK(visited == y_point_count(YShape(beta, gamma), 3));
}

TEST_CASE("phi and psi on a 4x14 band shape") {
  const KSubset beta = S({2, 5, 6, 10}, 14);
  const KSubset gamma = S({6, 8, 11, 12}, 14);
  const RationalField q;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto m = sample_y(beta, gamma, q, seed);
    const auto w = phi(m, beta, gamma);
    CHECK(w_membership(w, beta, gamma));
    CHECK(psi(w, beta, gamma) == m);
    CHECK(determinant(m.columns(gamma)) == 1);
  }
}

TEST_CASE("phi and psi round trips") {
  const RationalField q;
  const KSubset beta = S({1, 2}, 4);
  const KSubset gamma = S({3, 4}, 4);
  // M with M_gamma = I is fixed by phi
  Matrix<RationalField> m(q, 2, 4);
  m(0, 0) = 5;
  m(0, 2) = 1;
  m(1, 1) = 2;
  m(1, 3) = 1;
  CHECK(phi(m, beta, gamma) == m);

  const PrimeField f5(5);
  for (int k : {2, 3}) {
    const int n = 2 * k;
    for (const auto& b : enumerate_subsets(k, n)) {
      for (const auto& g : enumerate_subsets(k, n)) {
        if (!subset_leq(b, g)) continue;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
          const auto mf = sample_y(b, g, f5, seed);
          const auto wf = phi(mf, b, g);
          CHECK(w_membership(wf, b, g));
          CHECK(psi(wf, b, g) == mf);
          CHECK(phi(psi(wf, b, g), b, g) == wf);
          const auto mq = sample_y(b, g, q, seed);
          CHECK(psi(phi(mq, b, g), b, g) == mq);
        }
      }
    }
  }
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (const auto& b : enumerate_subsets(2, 4)) {
      for (const auto& g : enumerate_subsets(2, 4)) {
        if (!subset_leq(b, g)) continue;
        for_each_y(b, g, f, [&](const Matrix<PrimeField>& y) {
          const auto w = phi(y, b, g);
          CHECK(w_membership(w, b, g));
          CHECK(psi(w, b, g) == y);
        });
      }
    }
  }
}

TEST_CASE("phi and psi reject bad input") {
  const RationalField q;
  const KSubset beta = S({1, 2}, 4);
  const KSubset gamma = S({3, 4}, 4);
  Matrix<RationalField> bad(q, 2, 4);
  CHECK_THROWS_AS(phi(bad, beta, gamma), ShapeError);
  CHECK_THROWS_AS(psi(bad, beta, gamma), ShapeError);
  // N_gamma = I but Delta_{delta_1} = Delta_{1,4} = 0: the leading 1x1 minor of N_beta vanishes
  const auto n = Q({{0, 1, 1, 0}, {1, 0, 0, 1}});
  CHECK_FALSE(w_membership(n, beta, gamma));
  CHECK_THROWS_AS(psi(n, beta, gamma), DecompositionError);
  // identity in the gamma columns, zero elsewhere: Delta_beta = 0
  const auto id_gamma = Q({{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(w_membership(id_gamma, beta, gamma));
  // a nonzero minor outside [beta, gamma]
  const KSubset b2 = S({1, 3}, 4);
  const KSubset g2 = S({2, 4}, 4);
  const auto outside = Q({{0, 1, 0, 0}, {1, 0, 0, 1}});
  CHECK_FALSE(w_membership(outside, b2, g2));
}

TEST_CASE("entries left of beta vanish through their minors") {
  const RationalField q;
  for (const auto& b : enumerate_subsets(3, 6)) {
    for (const auto& g : enumerate_subsets(3, 6)) {
      if (!subset_leq(b, g)) continue;
      const auto m = psi(phi(sample_y(b, g, q, 17), b, g), b, g);
      for (int i = 0; i < 3; ++i) {
        for (int j = 1; j < b[i]; ++j) {
          if (b.contains(j)) continue;
          CHECK(entry_from_minor(m, b, i, j) == 0);
        }
      }
    }
  }
}
