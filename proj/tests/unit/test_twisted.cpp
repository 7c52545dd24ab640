#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "novikov/algebra/exact_algebra.hpp"
#include "novikov/complexes/filtration.hpp"
#include "novikov/twisted/builtin_complexes.hpp"
#include "novikov/twisted/novikov.hpp"
#include "random_complexes.hpp"

using namespace novikov::twisted;
using novikov::algebra::EvaluationAt;
using novikov::algebra::int_matrix;
using novikov::algebra::MultiPoly;
using novikov::algebra::Rational;
using novikov::algebra::rank_at_ideal;
using novikov::complexes::Coefficients;
using novikov::complexes::homology;
using Dims = std::vector<std::size_t>;

namespace {

const MultiPoly t = MultiPoly::variable(1, 0);
const MultiPoly one = MultiPoly::constant(1, 1);

TwistedComplex twisted_of(const std::string& name) { return build_twisted(*builtin::by_name(name)); }

std::string cell_id(const testutil::Simplex& s) {
  std::string id = "s";
  for (int v : s) id += "_" + std::to_string(v);
  return id;
}

// Simplicial complex twisted by the coboundary of a vertex height h: a face
// that drops the base vertex picks up h(v1) - h(v0).
WeightedCWComplex gauge_twisted(const std::set<testutil::Simplex>& k, const std::vector<int>& h) {
  WeightedCWComplex x;
  x.name = "gauge";
  x.s = 1;
  for (const auto& s : k) {
    Cell c{cell_id(s), s.size() - 1, {}};
    if (s.size() > 1)
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        auto f = s;
        f.erase(f.begin() + drop);
        const int w = drop == 0 ? h[s[1]] - h[s[0]] : 0;
        c.boundary.push_back({cell_id(f), drop % 2 == 0 ? 1 : -1, {w}});
      }
    x.cells.push_back(c);
  }
  return x;
}

Dims rational_betti(const std::set<testutil::Simplex>& k) {
  Dims b;
  for (const auto& g : homology(testutil::to_complex(testutil::cellular(k)), Coefficients::rationals()))
    b.push_back(g.betti);
  return b;
}

Dims laurent_dims(const TwistedComplex& d, const Point& a) {
  const auto& c = d.laurent;
  Dims out(c.length());
  for (std::size_t j = 0; j < c.length(); ++j) {
    const auto lower = j == 0 ? 0 : rank_at_ideal(c.boundary(j), EvaluationAt{a});
    const auto upper = rank_at_ideal(c.boundary(j + 1), EvaluationAt{a});
    out[j] = c.rank(j) - lower - upper;
  }
  return out;
}

}  // namespace

TEST_CASE("twisted circle is [t - 1]") {
  const auto d = twisted_of("s1_twisted");
  CHECK(d.complex.boundary(1)(0, 0) == t - one);
  CHECK(novikov::complexes::verify_complex(d.complex));
}

TEST_CASE("twisted torus") {
  const auto d = twisted_of("t2_twisted");
  CHECK(d.complex.boundary(1)(0, 0) == t - one);
  CHECK(d.complex.boundary(1)(0, 1).is_zero());
  CHECK(d.complex.boundary(2)(0, 0).is_zero());
  CHECK(d.complex.boundary(2)(1, 0) == t - one);
  CHECK(novikov::complexes::verify_complex(d.complex));
}

TEST_CASE("zero weights give the cellular complex") {
  for (const std::string name : {"s1", "t2", "s2", "rp2"}) {
    const auto d = twisted_of(name);
    CHECK(d.s == 0);
    CHECK(d.complex.is_constant());
  }
  const auto rp2 = twisted_of("rp2");
  CHECK(rp2.complex.boundary(2).constant_part() == int_matrix(1, 1, {{2}}));
  CHECK(reduced_homology_mod_p(rp2, 2) == Dims{1, 1, 1});
  CHECK(reduced_homology_mod_p(rp2, 3) == Dims{1, 0, 0});
}

TEST_CASE("evaluated homology") {
  const auto s1 = twisted_of("s1_twisted");
  CHECK(evaluated_homology(s1, {Rational(2)}) == Dims{0, 0});
  CHECK(evaluated_homology(s1, {Rational(1)}) == Dims{1, 1});
  CHECK(evaluated_homology(twisted_of("t2_twisted"), {Rational(3)}) == Dims{0, 0, 0});
  CHECK(evaluated_homology(twisted_of("t2_twisted"), {Rational(1)}) == Dims{1, 2, 1});
  CHECK_THROWS_AS(evaluated_homology(s1, {Rational(0)}), std::invalid_argument);
}

TEST_CASE("reduction mod p at t = 0") {
  CHECK(reduced_homology_mod_p(twisted_of("s1_twisted"), 5) == Dims{0, 0});
  CHECK(reduced_homology_mod_p(twisted_of("d_t"), 3) == Dims{1, 1});
}

TEST_CASE("novikov numbers") {
  const auto s1 = novikov_numbers(twisted_of("s1_twisted"), 20, 7);
  CHECK(s1.b == Dims{0, 0});
  REQUIRE(s1.jumps.size() == 2);
  CHECK(s1.jumps[0].point == Point{Rational(1)});
  CHECK(novikov_numbers(twisted_of("t2_twisted"), 20, 7).b == Dims{0, 0, 0});
  CHECK(novikov_numbers(twisted_of("t2"), 20, 7).b == Dims{1, 2, 1});
  CHECK(novikov_numbers(twisted_of("rp2"), 20, 7).b == Dims{1, 0, 0});
  CHECK(novikov_numbers(twisted_of("d_t"), 20, 7).b == Dims{0, 0});

  const auto again = novikov_numbers(twisted_of("s1_twisted"), 20, 7);
  CHECK(again.points == s1.points);
  CHECK(again.dims == s1.dims);
}

TEST_CASE("torsion numbers") {
  CHECK(torsion_numbers(twisted_of("d_t"), {Rational(2)}, 5) == Dims{1, 0});
  CHECK(torsion_numbers(twisted_of("s1"), {}, 3) == Dims{0, 0});
  CHECK(torsion_numbers(twisted_of("s1_twisted"), {Rational(2)}, 7) == Dims{0, 0});
  CHECK(torsion_numbers(twisted_of("rp2"), {}, 2) == Dims{0, 1, 0});
  CHECK_THROWS_AS(torsion_numbers(twisted_of("d_t"), {Rational(2)}, 4), std::invalid_argument);
}

TEST_CASE("weights that break d^2 = 0 are rejected") {
  auto x = *builtin::by_name("t2_twisted");
  for (auto& c : x.cells)
    if (c.id == "f") c.boundary[0].weight = {1};
  CHECK_THROWS_AS(build_twisted(x), TwistError);
}

TEST_CASE("rank-2 local system on the circle") {
  auto x = *builtin::by_name("s1_twisted");
  const auto d = build_twisted(x, builtin::circle_swap_system());
  CHECK(d.k == 2);
  CHECK(d.cell_counts() == Dims{1, 1});
  CHECK(evaluated_homology(d, {Rational(1)}) == Dims{1, 1});
  CHECK(evaluated_homology(d, {Rational(-1)}) == Dims{1, 1});
  CHECK(evaluated_homology(d, {Rational(2)}) == Dims{0, 0});
  CHECK(novikov_numbers(d, 20, 3).b == Dims{0, 0});

  const auto untwisted = build_twisted(*builtin::by_name("s1"), builtin::circle_swap_system());
  CHECK(evaluated_homology(untwisted, {}) == Dims{1, 1});

  LocalSystem singular = builtin::circle_swap_system();
  singular.monodromy["e"] = int_matrix(2, 2, {{1, 1}, {1, 1}});
  CHECK_THROWS_AS(build_twisted(x, singular), std::invalid_argument);
}

TEST_CASE("local system on the torus must respect the face relation") {
  const auto x = *builtin::by_name("t2");
  LocalSystem e;
  e.k = 2;
  e.monodromy["e1"] = int_matrix(2, 2, {{1, 1}, {0, 1}});
  e.monodromy["e2"] = int_matrix(2, 2, {{1, 0}, {1, 1}});
  e.attaching_words["f"] = {{"e1", 1}, {"e2", 1}, {"e1", -1}, {"e2", -1}};
  CHECK_THROWS_AS(build_twisted(x, e), std::invalid_argument);
  e.monodromy["e2"] = int_matrix(2, 2, {{1, 2}, {0, 1}});
  const auto d = build_twisted(x, e);
  CHECK(novikov::complexes::verify_complex(d.complex));
}

TEST_CASE("gauge-twisted random complexes") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> height(-2, 2), num(1, 30);
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = testutil::random_simplicial(rng, 6, 2, 4);
    std::vector<int> h(6);
    for (auto& v : h) v = height(rng);
    const auto d = build_twisted(gauge_twisted(k, h));
    REQUIRE(novikov::complexes::verify_complex(d.complex));
    for (const auto& m : d.complex.boundaries())
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) CHECK_FALSE(m(r, c).has_negative_exponents());

    // A coboundary twist is gauge-equivalent to the trivial one.
    const auto betti = rational_betti(k);
    const Point a{Rational(num(rng), num(rng))};
    CHECK(evaluated_homology(d, a) == betti);
    CHECK(laurent_dims(d, a) == betti);

    const auto nr = novikov_numbers(d, 5, trial);
    CHECK(nr.b == betti);
    CHECK(nr.jumps.empty());
  }
}

TEST_CASE("jump direction and euler constancy") {
  std::mt19937_64 rng(32);
  for (const std::string name : {"s1_twisted", "t2_twisted", "d_t"}) {
    const auto d = twisted_of(name);
    const auto nr = novikov_numbers(d, 30, 5);
    const auto chi = euler_characteristic(d);
    for (std::size_t i = 0; i < nr.points.size(); ++i) {
      std::int64_t e = 0;
      for (std::size_t j = 0; j < nr.dims[i].size(); ++j) {
        CHECK(nr.dims[i][j] >= nr.b[j]);
        e += (j % 2 ? -1 : 1) * std::int64_t(nr.dims[i][j]);
      }
      CHECK(e == chi);
    }
    for (const auto& j : nr.jumps) CHECK(j.dim > nr.b[j.degree]);
    // Monomial clearing leaves evaluated ranks unchanged.
    for (int k = 0; k < 10; ++k) {
      const int num = int(rng() % 9) - 4;
      if (num == 0) continue;
      const Point a{Rational(num, 1 + int(rng() % 5))};
      CHECK(laurent_dims(d, a) == evaluated_homology(d, a));
    }
  }
}
