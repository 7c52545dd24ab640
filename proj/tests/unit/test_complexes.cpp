#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "novikov/algebra/exact_algebra.hpp"
#include "novikov/complexes/filtration.hpp"
#include "oracles.hpp"

using namespace novikov::complexes;
using novikov::algebra::EvaluationAt;
using novikov::algebra::field_rank;
using novikov::algebra::int_matrix;
using novikov::algebra::Integer;
using novikov::algebra::IntMatrix;
using novikov::algebra::MultiPoly;
using novikov::algebra::PolyMatrix;
using novikov::algebra::Rational;
using novikov::algebra::ReductionIp;

namespace {

const PrimeIdealSpec kQ = EvaluationAt{{}};

std::vector<std::size_t> bettis(const std::vector<HomologyGroup>& h) {
  std::vector<std::size_t> b;
  for (const auto& g : h) b.push_back(g.betti);
  return b;
}

FreeChainComplex circle() { return FreeChainComplex::from_integers({1, 1}, {int_matrix(1, 1, {{0}})}); }
FreeChainComplex rp2() {
  return FreeChainComplex::from_integers({1, 1, 1}, {int_matrix(1, 1, {{0}}), int_matrix(1, 1, {{2}})});
}

}  // namespace

TEST_CASE("verify_complex examples") {
  CHECK(verify_complex(circle()));
  const auto bad = FreeChainComplex::from_integers({1, 1, 1}, {int_matrix(1, 1, {{1}}), int_matrix(1, 1, {{1}})});
  CHECK_FALSE(verify_complex(bad));
  try {
    check_complex(bad);
    FAIL("expected ComplexError");
  } catch (const ComplexError& e) {
    CHECK(e.kind() == ComplexError::Kind::NonzeroComposite);
  }
  const auto shape = FreeChainComplex::from_integers({1, 2}, {int_matrix(1, 1, {{1}})});
  try {
    check_complex(shape);
    FAIL("expected ComplexError");
  } catch (const ComplexError& e) {
    CHECK(e.kind() == ComplexError::Kind::Shape);
  }
}

TEST_CASE("d∘d gate on random complexes") {
  std::mt19937_64 rng(21);
  int rejected = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = testutil::random_simplicial(rng, 6, 3, 4);
    auto cell = testutil::cellular(k);
    CHECK(verify_complex(testutil::to_complex(cell)));
    // Flip one nonzero entry of some d_j with a nonzero d_{j+1}.
    for (std::size_t j = 0; j + 1 < cell.d.size(); ++j) {
      auto& m = cell.d[j];
      bool changed = false;
      for (std::size_t r = 0; r < m.rows() && !changed; ++r)
        for (std::size_t c = 0; c < m.cols() && !changed; ++c)
          if (m(r, c) != 0) {
            m(r, c) = -m(r, c);
            changed = true;
          }
      if (changed && !verify_complex(testutil::to_complex(cell))) ++rejected;
      break;
    }
  }
  CHECK(rejected > 50);
}

TEST_CASE("homology examples") {
  CHECK(bettis(homology(circle(), Coefficients::integers())) == std::vector<std::size_t>{1, 1});
  const auto h = homology(rp2(), Coefficients::integers());
  CHECK(bettis(h) == std::vector<std::size_t>{1, 0, 0});
  CHECK(h[1].torsion == std::vector<Integer>{2});
  CHECK(h[0].torsion.empty());
  CHECK(bettis(homology(rp2(), Coefficients::mod_p(2))) == std::vector<std::size_t>{1, 1, 1});
  CHECK(bettis(homology(rp2(), Coefficients::mod_p(3))) == std::vector<std::size_t>{1, 0, 0});
  CHECK(bettis(homology(rp2(), Coefficients::rationals())) == std::vector<std::size_t>{1, 0, 0});
}

TEST_CASE("euler invariance across ideals") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto c = testutil::random_p1_complex(rng);
    std::int64_t chi = 0;
    for (std::size_t j = 0; j < c.length(); ++j) chi += (j % 2 ? -1 : 1) * std::int64_t(c.rank(j));
    CHECK(poincare_at(c, EvaluationAt{{Rational(3)}}).at_minus_one() == chi);
    CHECK(poincare_at(c, EvaluationAt{{Rational(-1, 2)}}).at_minus_one() == chi);
    CHECK(poincare_at(c, ReductionIp{2}).at_minus_one() == chi);
    CHECK(poincare_at(c, ReductionIp{7}).at_minus_one() == chi);
  }
}

TEST_CASE("mapping cone examples") {
  const auto c = circle();
  ChainMap id{c, c, {PolyMatrix::from_integers(IntMatrix::identity(1, 0, 1)),
                     PolyMatrix::from_integers(IntMatrix::identity(1, 0, 1))}};
  CHECK(bettis(homology(mapping_cone(id), Coefficients::integers())) == std::vector<std::size_t>{0, 0, 0});

  const auto pt = FreeChainComplex::from_integers({1}, {});
  ChainMap zero{pt, pt, {PolyMatrix::from_integers(int_matrix(1, 1, {{0}}))}};
  CHECK(bettis(homology(mapping_cone(zero), Coefficients::integers())) == std::vector<std::size_t>{1, 1});

  // Boundary circle of a disk: v, e with d e = 0; the disk adds a 2-cell f, d f = e.
  const auto disk = FreeChainComplex::from_integers({1, 1, 1}, {int_matrix(1, 1, {{0}}), int_matrix(1, 1, {{1}})});
  const auto cone = mapping_cone(inclusion(disk, {{0}, {0}, {}}));
  CHECK(verify_complex(cone));
  auto b = bettis(homology(cone, Coefficients::integers()));
  b.resize(3);
  CHECK(b == std::vector<std::size_t>{0, 0, 1});

  ChainMap scaled{c, c, {PolyMatrix::from_integers(int_matrix(1, 1, {{1}})), PolyMatrix::from_integers(int_matrix(1, 1, {{2}}))}};
  const auto interval = FreeChainComplex::from_integers({2, 1}, {int_matrix(2, 1, {{-1}, {1}})});
  ChainMap not_chain{interval, interval,
                     {PolyMatrix::from_integers(int_matrix(2, 2, {{1, 0}, {0, 0}})),
                      PolyMatrix::from_integers(int_matrix(1, 1, {{1}}))}};
  CHECK_THROWS_AS(check_chain_map(not_chain), ComplexError);
  CHECK_NOTHROW(check_chain_map(scaled));  // circle has d = 0
}

TEST_CASE("cone of an inclusion matches the quotient on 100 random pairs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = testutil::random_simplicial(rng, 6, 3, 4);
    const auto cell = testutil::cellular(k);
    const auto c = testutil::to_complex(cell);
    const auto order = testutil::random_linear_extension(rng, k);
    const std::size_t cut = rng() % (order.size() + 1);
    const auto sub = testutil::selection(cell, {order.begin(), order.begin() + cut});
    CHECK_NOTHROW(check_subcomplex(c, sub));
    const auto cone = mapping_cone(inclusion(c, sub));
    CHECK(verify_complex(cone));
    const auto rel = homology(quotient(c, full_selection(c), sub), Coefficients::integers());
    const auto hc = homology(cone, Coefficients::integers());
    for (std::size_t j = 0; j < std::max(rel.size(), hc.size()); ++j) {
      const HomologyGroup empty{};
      const auto& a = j < rel.size() ? rel[j] : empty;
      const auto& b = j < hc.size() ? hc[j] : empty;
      CHECK(a.betti == b.betti);
      CHECK(a.torsion == b.torsion);
    }
    const auto qb = testutil::relative_betti(cell, full_selection(c), sub);
    for (std::size_t j = 0; j < qb.size(); ++j) CHECK(qb[j] == (j < rel.size() ? rel[j].betti : 0));
  }
}

TEST_CASE("filtration identity examples") {
  const auto c = circle();
  const auto f = filtration_polynomials(c, skeletal_filtration(c), kQ);
  Polynomial sum;
  for (const auto& p : f.relative) sum += p.poly();
  CHECK(sum == Polynomial({1, 1}));
  CHECK(f.total.poly() == Polynomial({1, 1}));
  CHECK(f.connecting_sum.poly().is_zero());

  const auto r = filtration_polynomials(rp2(), skeletal_filtration(rp2()), kQ);
  Polynomial rs;
  for (const auto& p : r.relative) rs += p.poly();
  CHECK(rs == Polynomial({1, 1, 1}));
  CHECK(r.total.poly() == Polynomial({1}));
  CHECK(Polynomial::one_plus_t() * r.connecting_sum.poly() == Polynomial({0, 1, 1}));

  FiltrationSpec trivial{{{{}, {}}, full_selection(c)}};
  const auto t = filtration_polynomials(c, trivial, kQ);
  CHECK(t.relative.size() == 1);
  CHECK(t.relative[0] == t.total);
  CHECK(t.connecting_sum.poly().is_zero());

  FiltrationSpec not_closed{{{{}, {}, {0}}, full_selection(rp2())}};
  CHECK_THROWS_AS(check_filtration(rp2(), not_closed), ComplexError);
  FiltrationSpec short_top{{{{}, {}, {}}, {{0}, {}, {}}}};
  CHECK_THROWS_AS(check_filtration(rp2(), short_top), ComplexError);
}

TEST_CASE("filtration identity on 100 random filtered complexes over Q") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = testutil::random_simplicial(rng, 6, 3, 4);
    const auto cell = testutil::cellular(k);
    const auto c = testutil::to_complex(cell);
    const auto order = testutil::random_linear_extension(rng, k);
    std::vector<std::size_t> cuts;
    const std::size_t levels = 2 + rng() % 4;
    for (std::size_t i = 0; i + 1 < levels; ++i) cuts.push_back(rng() % (order.size() + 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(order.size());
    FiltrationSpec spec;
    for (auto cut : cuts) spec.levels.push_back(testutil::selection(cell, {order.begin(), order.begin() + cut}));
    const auto f = filtration_polynomials(c, spec, kQ);
    REQUIRE(f.relative.size() == spec.levels.size() - 1);
    Polynomial lhs;
    for (std::size_t i = 0; i < f.relative.size(); ++i) {
      lhs += f.relative[i].poly();
      CHECK(f.relative[i] == PoincarePolynomial::from_counts(testutil::relative_betti(cell, spec.levels[i + 1], spec.levels[i])));
    }
    CHECK(f.total == PoincarePolynomial::from_counts(testutil::relative_betti(cell, spec.levels.back(), spec.levels.front())));
    CHECK(lhs == f.total.poly() + Polynomial::one_plus_t() * f.connecting_sum.poly());
    CHECK(f.connecting_sum.poly().is_nonnegative());
  }
}

TEST_CASE("prime comparison examples") {
  PolyMatrix dt(1, 1, 1);
  dt.set(0, 0, MultiPoly::variable(1, 0));
  const FreeChainComplex c(1, {1, 1}, {dt});
  const auto r = prime_comparison(c, EvaluationAt{{Rational(2)}}, ReductionIp{5});
  CHECK(r.poly_p.poly().is_zero());
  CHECK(r.poly_q.poly() == Polynomial({1, 1}));
  CHECK(r.torsion == std::vector<std::size_t>{1, 0});

  const auto id = FreeChainComplex::from_integers({1, 1}, {int_matrix(1, 1, {{1}})});
  const auto ri = prime_comparison(id, EvaluationAt{{}}, ReductionIp{3});
  CHECK(ri.poly_p.poly().is_zero());
  CHECK(ri.poly_q.poly().is_zero());
  CHECK(ri.qpoly.poly().is_zero());

  const auto zero = FreeChainComplex::from_integers({1, 1}, {int_matrix(1, 1, {{0}})});
  const auto rz = prime_comparison(zero, EvaluationAt{{}}, ReductionIp{3});
  CHECK(rz.poly_p.poly() == Polynomial({1, 1}));
  CHECK(rz.qpoly.poly().is_zero());

  // Reversed roles break containment: rank over Z_5 at t = 0 is 0 < 1.
  try {
    prime_comparison(c, ReductionIp{5}, EvaluationAt{{Rational(2)}});
    FAIL("expected Containment");
  } catch (const ComplexError& e) {
    CHECK(e.kind() == ComplexError::Kind::Containment);
    CHECK(e.degree() == 0);
  }
}

TEST_CASE("prime comparison identity for valid pairs over P_1") {
  std::mt19937_64 rng(25);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = testutil::random_p1_complex(rng);
    REQUIRE(verify_complex(c));
    const std::uint32_t p = primes[trial % 4];
    // I_a lies in I_p when a = p m: f(pm) = 0 forces p | f(0).
    const Rational a(long(p) * (1 + long(rng() % 3)));
    const auto r = prime_comparison(c, EvaluationAt{{a}}, ReductionIp{p});
    CHECK(r.poly_q.poly() == r.poly_p.poly() + Polynomial::one_plus_t() * r.qpoly.poly());
    CHECK(r.qpoly.poly().is_nonnegative());
  }
}
