#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "novikov/complexes/chain_complex.hpp"
#include "novikov/conley/conley_index.hpp"

using namespace novikov::conley;
using novikov::complexes::Polynomial;

namespace {

PoincarePolynomial poly(std::vector<std::int64_t> c) { return PoincarePolynomial(Polynomial(std::move(c))); }

// Reduced homology of RP^2 over a field from its cell structure, written out
// independently of the library: one cell per degree, d_2 = 2, d_1 = 0.
std::vector<std::int64_t> rp2_reduced(Coefficients f) {
  const bool two_vanishes = f.kind == Coefficients::Kind::ModP && f.p == 2;
  return two_vanishes ? std::vector<std::int64_t>{0, 1, 1} : std::vector<std::int64_t>{0, 0, 0};
}

}  // namespace

TEST_CASE("index polynomial examples") {
  const auto q = Coefficients::rationals();
  CHECK(index_poincare(HyperbolicFixedPoint{2}, q) == poly({0, 0, 1}));
  CHECK(index_poincare(HyperbolicFixedPoint{2}, Coefficients::mod_p(5)) == poly({0, 0, 1}));
  CHECK(index_poincare(PeriodicOrbit{1, true}, q) == poly({0, 1, 1}));
  CHECK(index_poincare(PeriodicOrbit{2, false}, Coefficients::mod_p(2)) == poly({0, 1, 1, 1}));
  CHECK(index_poincare(PeriodicOrbit{2, false}, Coefficients::mod_p(3)) == poly({0, 1}));
  CHECK(index_poincare(CriticalManifold{1, poly({1, 1}), "circle"}, q) == poly({0, 1, 1}));
}

TEST_CASE("projective plane from cells") {
  CHECK(projective_plane_poincare(Coefficients::mod_p(2)) == poly({1, 1, 1}));
  CHECK(projective_plane_poincare(Coefficients::mod_p(3)) == poly({1}));
  CHECK(projective_plane_poincare(Coefficients::rationals()) == poly({1}));
}

TEST_CASE("invalid descriptors") {
  CHECK_THROWS_AS(validate(PeriodicOrbit{0, false}), std::invalid_argument);
  CHECK_THROWS_AS(validate(HyperbolicFixedPoint{-1}), std::invalid_argument);
  CHECK_THROWS_AS(index_poincare(PeriodicOrbit{0, false}, Coefficients::rationals()), std::invalid_argument);
  CHECK_NOTHROW(validate(PeriodicOrbit{0, true}));
  CHECK_THROWS(index_poincare(HyperbolicFixedPoint{1}, Coefficients::integers()));
}

TEST_CASE("sums") {
  const auto q = Coefficients::rationals();
  CHECK(sum_index_poincare({}, q).poly().is_zero());
  CHECK(sum_index_poincare({HyperbolicFixedPoint{0}, HyperbolicFixedPoint{2}}, q) == poly({1, 0, 1}));

  // c_j fixed points of index j and a_j orbits whose unstable manifold has
  // dimension j (Conley index k = j - 1) give mu_j = c_j + a_j + a_{j+1}.
  const std::vector<int> c{1, 0, 2, 1}, a{0, 2, 1, 3};
  std::vector<InvariantSetDescriptor> ds;
  for (int j = 0; j < 4; ++j) {
    for (int i = 0; i < c[j]; ++i) ds.push_back(HyperbolicFixedPoint{j});
    for (int i = 0; i < a[j]; ++i) ds.push_back(PeriodicOrbit{j - 1, true});
  }
  const auto p = sum_index_poincare(ds, q);
  for (std::size_t j = 0; j < 4; ++j) {
    const int mu = c[j] + a[j] + (j + 1 < 4 ? a[j + 1] : 0);
    CHECK(p.coeff(j) == mu);
  }
}

TEST_CASE("describe") {
  CHECK(describe(PeriodicOrbit{1, false}) == "orbit k=1 unorientable");
  CHECK(describe(HyperbolicFixedPoint{3}) == "fixed point k=3");
}

TEST_CASE("random descriptor families") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<int> kind(0, 3), k(0, 5), count(0, 8);
  const Coefficients fields[] = {Coefficients::rationals(), Coefficients::mod_p(2), Coefficients::mod_p(3),
                                 Coefficients::mod_p(7)};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<InvariantSetDescriptor> ds;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
      const int kk = k(rng);
      switch (kind(rng)) {
        case 0:
          ds.push_back(HyperbolicFixedPoint{kk});
          break;
        case 1:
          ds.push_back(PeriodicOrbit{kk, true});
          break;
        case 2:
          ds.push_back(PeriodicOrbit{kk + 1, false});
          break;
        default:
          ds.push_back(CriticalManifold{kk, poly({1, std::int64_t(kk % 3), 1}), "z"});
      }
    }
    for (const auto& f : fields) {
      Polynomial want;
      for (const auto& d : ds) {
        const auto p = index_poincare(d, f);
        CHECK(p.poly().is_nonnegative());
        want += p.poly();
        if (const auto* o = std::get_if<PeriodicOrbit>(&d)) {
          if (o->orientable) {
            CHECK(p.at_minus_one() == 0);
            CHECK(p == index_poincare(d, Coefficients::rationals()));
          } else {
            auto rp2 = rp2_reduced(f);
            rp2[0] += 1;
            CHECK(p.poly() == Polynomial::monomial(o->k - 1) * Polynomial(rp2));
          }
        }
        if (std::holds_alternative<HyperbolicFixedPoint>(d)) CHECK(p == index_poincare(d, Coefficients::rationals()));
      }
      CHECK(sum_index_poincare(ds, f).poly() == want);
    }
  }
}
