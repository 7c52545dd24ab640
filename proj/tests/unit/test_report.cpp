#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "novikov/complexes/chain_complex.hpp"
#include "novikov/report/morse_report.hpp"
#include "novikov/twisted/builtin_complexes.hpp"

using namespace novikov::report;
using novikov::algebra::Rational;
using novikov::conley::HyperbolicFixedPoint;
using novikov::conley::InvariantSetDescriptor;
using novikov::conley::PeriodicOrbit;
using novikov::twisted::NovikovReport;
using Dims = std::vector<std::size_t>;

namespace {

novikov::twisted::TwistedComplex complex_of(const std::string& name) {
  return novikov::twisted::build_twisted(*novikov::twisted::builtin::by_name(name));
}

NovikovReport with_b(Dims b) {
  NovikovReport nr;
  nr.b = std::move(b);
  return nr;
}

std::vector<InvariantSetDescriptor> fixed_points(const Dims& c) {
  std::vector<InvariantSetDescriptor> ds;
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < c[j]; ++i) ds.push_back(HyperbolicFixedPoint{int(j)});
  return ds;
}

}  // namespace

TEST_CASE("main equality examples") {
  const auto s2 = main_equality_check(fixed_points({1, 0, 1}), complex_of("s2"), {}, 7);
  CHECK(s2.holds);
  CHECK(s2.hypothesis_declared);
  CHECK(s2.lhs == Polynomial({1, 0, 1}));
  CHECK(s2.rhs == Polynomial({1, 0, 1}));
  CHECK(s2.q_polys.at(0).is_zero());

  const auto circle = main_equality_check(fixed_points({1, 1}), complex_of("s1_twisted"), {Rational(2)}, 7);
  CHECK(circle.holds);
  CHECK(circle.rhs.is_zero());
  CHECK(circle.q_polys.at(0) == Polynomial({1}));

  const auto torus = main_equality_check(fixed_points({1, 2, 1}), complex_of("t2"), {}, 7);
  CHECK(torus.holds);
  CHECK(torus.q_polys.at(0).is_zero());
}

TEST_CASE("main equality failures") {
  // One minimum on S^2: L - R = -t^2 is not divisible by 1 + t.
  const auto odd = main_equality_check(fixed_points({1}), complex_of("s2"), {}, 7);
  CHECK_FALSE(odd.holds);
  REQUIRE(odd.witness);

  // Nothing on S^1: L - R = -(1 + t), quotient -1.
  const auto neg = main_equality_check({}, complex_of("s1"), {}, 5);
  CHECK_FALSE(neg.holds);
  CHECK(neg.witness == std::size_t(0));

  CHECK_THROWS_AS(main_equality_check(fixed_points({1, 1}), complex_of("s1_twisted"), {Rational(2)}, 4),
                  std::invalid_argument);
}

TEST_CASE("euler check") {
  const auto s2 = euler_check(fixed_points({1, 0, 1}), complex_of("s2"));
  CHECK(s2.holds);
  CHECK(s2.chi == 2);
  CHECK(euler_check(fixed_points({1, 2, 1}), complex_of("t2")).holds);
  CHECK(euler_check(fixed_points({1, 1}), complex_of("s1_twisted")).holds);
  CHECK(euler_check({PeriodicOrbit{0, true}, PeriodicOrbit{3, true}}, complex_of("t2")).holds);
  CHECK_FALSE(euler_check(fixed_points({1}), complex_of("t2")).holds);
}

TEST_CASE("novikov inequality examples") {
  CHECK(novikov_inequality_check({1, 1}, with_b({0, 0}), {0, 0}).holds);
  CHECK(novikov_inequality_check({0, 0}, with_b({0, 0}), {}).holds);
  const auto bad = novikov_inequality_check({0, 1}, with_b({1, 1}), {});
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness == std::size_t(0));
  // q_0 = 1 needs a zero in degrees 0 and 1.
  const auto q = novikov_inequality_check({1, 0}, with_b({0, 0}), {1});
  CHECK_FALSE(q.holds);
  CHECK(q.witness == std::size_t(1));
}

TEST_CASE("morse-smale examples") {
  CHECK(morse_smale_check({1, 1}, {0, 0}, with_b({0, 0})).holds);
  CHECK(morse_smale_check({}, {0, 1, 0, 1}, with_b({0, 0, 0, 0})).holds);
  const auto bad = morse_smale_check({}, {1, 0}, with_b({0, 2}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.witness == std::size_t(1));
  CHECK(bad.lhs == Polynomial({1}));
}

TEST_CASE("vanishing check") {
  novikov::flows::CertReport cert;
  cert.fixed_point_free = true;
  const auto ok = vanishing_check(cert, with_b({0, 0, 0}));
  CHECK(ok.holds);
  CHECK(ok.status == VanishingStatus::Consistent);
  const auto bad = vanishing_check(cert, with_b({1, 1}));
  CHECK_FALSE(bad.holds);
  CHECK(bad.status == VanishingStatus::Contradiction);
  CHECK(to_string(bad.status) == "CONTRADICTION");
  cert.verdict = novikov::flows::Verdict::Refuted;
  CHECK(vanishing_check(cert, with_b({1, 1})).status == VanishingStatus::Uncertified);
  cert.fixed_point_free = false;
  CHECK_THROWS_AS(vanishing_check(cert, with_b({0})), std::invalid_argument);
}

TEST_CASE("trivial classes give the classical morse inequalities") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::size_t> cnt(0, 3);
  for (const std::string name : {"s1", "t2", "s2", "rp2"}) {
    const auto d = complex_of(name);
    Dims betti;
    for (const auto& h : novikov::complexes::homology(d.complex, novikov::complexes::Coefficients::rationals()))
      betti.push_back(h.betti);
    const auto nr = novikov::twisted::novikov_numbers(d, 3, 1);
    CHECK(nr.b == betti);
    for (int trial = 0; trial < 50; ++trial) {
      Dims c(betti.size());
      for (auto& x : c) x = cnt(rng);
      bool want = true;
      std::int64_t sc = 0, sb = 0;
      for (std::size_t j = 0; j < c.size(); ++j) {
        want = want && c[j] >= betti[j];
        sc = std::int64_t(c[j]) - sc;
        sb = std::int64_t(betti[j]) - sb;
        want = want && sc >= sb;
      }
      CHECK(novikov_inequality_check(c, nr, {}).holds == want);
    }
  }
}

TEST_CASE("verdicts are reproducible") {
  const auto d = complex_of("t2_twisted");
  const auto a = novikov::twisted::novikov_numbers(d, 10, 3), b = novikov::twisted::novikov_numbers(d, 10, 3);
  const auto va = novikov_inequality_check({1, 2, 1}, a, {}), vb = novikov_inequality_check({1, 2, 1}, b, {});
  CHECK(va.holds == vb.holds);
  CHECK(va.lhs == vb.lhs);
  CHECK(va.rhs == vb.rhs);
}
