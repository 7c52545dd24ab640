#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "novikov/algebra/exact_algebra.hpp"
#include "novikov/algebra/modp_kernels.hpp"
#include "oracles.hpp"

using namespace novikov::algebra;
using testutil::det;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c, Integer(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// gcd of all k x k minors, k = 1..min(r, c).
std::vector<Integer> determinantal_divisors(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols(), n = std::min(r, c);
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + k, true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + k, true);
      do {
        IntMatrix sub(k, k, Integer(0));
        std::size_t ii = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (!rs[i]) continue;
          std::size_t jj = 0;
          for (std::size_t j = 0; j < c; ++j)
            if (cs[j]) sub(ii, jj++) = a(i, j);
          ++ii;
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(abs(det(sub))).get_mpz_t());
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    out.push_back(g);
  }
  return out;
}

bool is_diagonal_embedding(const IntMatrix& m, const std::vector<Integer>& diag) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Integer want = (i == j && i < diag.size()) ? diag[i] : Integer(0);
      if (m(i, j) != want) return false;
    }
  return true;
}

MultiPoly random_poly(std::mt19937_64& rng, std::size_t s) {
  std::uniform_int_distribution<int> coef(-5, 5), ex(-2, 3), count(0, 4);
  MultiPoly p(s);
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Exponent e(s);
    for (auto& x : e) x = ex(rng);
    p += MultiPoly::monomial(s, coef(rng), e);
  }
  return p;
}

Rational random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 20);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational q(a, den(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("snf examples") {
  CHECK(smith_normal_form(int_matrix(1, 1, {{0}})).diagonal == std::vector<Integer>{0});
  CHECK(smith_normal_form(int_matrix(2, 2, {{1, 0}, {0, 1}})).diagonal == std::vector<Integer>{1, 1});
  CHECK(smith_normal_form(int_matrix(2, 2, {{2, 0}, {0, 3}})).diagonal == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(IntMatrix(0, 3)).diagonal.empty());
}

TEST_CASE("snf soundness on 200 random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng), 9);
    const auto s = smith_normal_form(a);
    CHECK(is_diagonal_embedding(multiply(multiply(s.left, a), s.right), s.diagonal));
    CHECK(abs(det(s.left)) == 1);
    CHECK(abs(det(s.right)) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      if (s.diagonal[i] == 0) {
        CHECK(s.diagonal[i + 1] == 0);
      } else {
        CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      }
    }
    CHECK(s.rank() == field_rank(a));
  }
}

TEST_CASE("snf matches determinantal divisors") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng), 6);
    const auto s = smith_normal_form(a);
    const auto dk = determinantal_divisors(a);
    Integer prod = 1;
    for (std::size_t k = 0; k < dk.size(); ++k) {
      prod *= s.diagonal[k];
      CHECK(abs(prod) == dk[k]);
    }
  }
}

TEST_CASE("snf matches elementary reduction on 200 random matrices") {
  std::mt19937_64 rng(18);
  std::uniform_int_distribution<int> dim(1, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, dim(rng), dim(rng), trial % 2 ? 3 : 40);
    auto diag = smith_normal_form(a).diagonal;
    for (auto& d : diag) d = abs(d);
    CHECK(diag == testutil::elementary_invariant_factors(a));
  }
}

TEST_CASE("field ranks") {
  CHECK(field_rank(IntMatrix::identity(3, 0, 1)) == 3);
  CHECK(field_rank_mod_p(int_matrix(1, 1, {{2}}), 2) == 0);
  std::mt19937_64 rng(13);
  const std::uint32_t primes[] = {2, 3, 5, 7, 32749, 65521, 2147483647u};
  for (int trial = 0; trial < 150; ++trial) {
    const auto a = random_matrix(rng, 4, 6, 30);
    const auto s = smith_normal_form(a);
    CHECK(field_rank(a) == s.rank());
    for (auto p : primes) {
      std::size_t expect = 0;
      for (const auto& d : s.diagonal)
        if (d % p != 0) ++expect;
      CHECK(field_rank_mod_p(a, p) == expect);
    }
  }
}

TEST_CASE("rank at ideals") {
  const auto t = MultiPoly::variable(1, 0);
  const auto one = MultiPoly::constant(1, 1);
  PolyMatrix m(1, 1, 1);
  m.set(0, 0, t - one);
  CHECK(rank_at_ideal(m, EvaluationAt{{Rational(2)}}) == 1);
  CHECK(rank_at_ideal(m, EvaluationAt{{Rational(1)}}) == 0);
  PolyMatrix mt(1, 1, 1);
  mt.set(0, 0, t);
  CHECK(rank_at_ideal(mt, ReductionIp{5}) == 0);
  CHECK_THROWS_AS(rank_at_ideal(m, EvaluationAt{{Rational(1), Rational(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(rank_at_ideal(m, EvaluationAt{{Rational(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(rank_at_ideal(m, ReductionIp{4}), std::invalid_argument);
  CHECK_THROWS(rank_at_ideal(m, GenericPoint{}));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = 1 + trial % 3;
    const auto f = random_poly(rng, s), g = random_poly(rng, s);
    std::vector<Rational> a;
    for (std::size_t i = 0; i < s; ++i) a.push_back(random_nonzero(rng));
    CHECK((f * g).evaluate(a) == f.evaluate(a) * g.evaluate(a));
    CHECK((f + g).evaluate(a) == f.evaluate(a) + g.evaluate(a));
    CHECK((f - g).evaluate(a) == f.evaluate(a) - g.evaluate(a));
  }
}

TEST_CASE("rank semicontinuity") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    PolyMatrix m(3, 3, 1);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m.set(i, j, random_poly(rng, 1));
    auto rank_at = [&](const Rational& a) { return rank_at_ideal(m, EvaluationAt{{a}}); };
    std::size_t best = 0;
    for (int k = 0; k < 20; ++k) best = std::max(best, rank_at(random_nonzero(rng)));
    CHECK(rank_at(random_nonzero(rng)) <= best);
    CHECK(rank_at(Rational(1)) <= best);
  }
}

TEST_CASE("laurent polynomials") {
  const auto t = MultiPoly::variable(1, 0);
  const auto inv = MultiPoly::monomial(1, 1, {-1});
  CHECK((t * inv) == MultiPoly::constant(1, 1));
  CHECK(inv.has_negative_exponents());
  CHECK(inv.shifted({1}) == MultiPoly::constant(1, 1));
  CHECK((t - t).is_zero());
  CHECK_THROWS_AS(t + MultiPoly::variable(2, 0), std::invalid_argument);
  CHECK((t.scaled(3) + MultiPoly::constant(1, 7)).reduce_at_zero_mod(5) == 2);
}

TEST_CASE("avx2 kernel matches scalar kernel") {
  namespace k = novikov::algebra::kernels;
  if (!k::cpu_has_avx2()) {
    MESSAGE("no AVX2 on this CPU; scalar path only");
    CHECK_THROWS(k::set_isa(k::Isa::Avx2));
    return;
  }
  std::mt19937_64 rng(16);
  const std::uint32_t primes[] = {2, 3, 7, 251, 32749};
  for (auto p : primes)
    for (std::size_t len : {0, 1, 7, 8, 9, 31, 64, 257}) {
      std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
      std::vector<std::uint32_t> row(len), pivot(len);
      for (auto& x : row) x = d(rng);
      for (auto& x : pivot) x = d(rng);
      const auto factor = d(rng);
      auto a = row, b = row;
      k::axpy_mod_scalar(a, pivot, factor, p);
      k::axpy_mod_avx2(b, pivot, factor, p);
      CHECK(a == b);
    }
}

TEST_CASE("mod-p ranks agree under both dispatch paths") {
  namespace k = novikov::algebra::kernels;
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = random_matrix(rng, 12, 20, 1000);
    for (std::uint32_t p : {3u, 101u, 32749u, 65521u}) {
      k::set_isa(k::Isa::Scalar);
      const auto scalar = field_rank_mod_p(a, p);
      if (k::cpu_has_avx2()) {
        k::set_isa(k::Isa::Avx2);
        CHECK(field_rank_mod_p(a, p) == scalar);
      }
      std::size_t expect = 0;
      for (const auto& d : smith_normal_form(a).diagonal)
        if (d % p != 0) ++expect;
      CHECK(scalar == expect);
    }
  }
  k::reset_isa();
}
