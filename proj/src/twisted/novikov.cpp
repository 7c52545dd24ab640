#include "novikov/twisted/novikov.hpp"

#include <algorithm>
#include <random>

#include "novikov/complexes/filtration.hpp"

namespace novikov::twisted {

using algebra::EvaluationAt;
using algebra::ReductionIp;

std::vector<std::size_t> evaluated_homology(const TwistedComplex& d, const Point& a) {
  return complexes::betti_at(d.complex, EvaluationAt{a});
}

std::vector<std::size_t> reduced_homology_mod_p(const TwistedComplex& d, std::uint32_t p) {
  return complexes::betti_at(d.complex, ReductionIp{p});
}

NovikovReport novikov_numbers(const TwistedComplex& d, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  NovikovReport r;
  r.seed = seed;
  r.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> draw(1, 10000);

  r.points.push_back(Point(d.s, Rational(1)));
  for (std::size_t i = 0; i < trials; ++i) {
    Point p(d.s);
    for (auto& x : p) {
      long num = draw(rng);
      long den = draw(rng);
      x = Rational(num, den);
      x.canonicalize();
    }
    r.points.push_back(std::move(p));
  }
  for (const auto& p : r.points) r.dims.push_back(evaluated_homology(d, p));

  r.b = r.dims.front();
  for (const auto& dims : r.dims)
    for (std::size_t j = 0; j < r.b.size(); ++j) r.b[j] = std::min(r.b[j], dims[j]);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    bool generic = true;
    for (std::size_t j = 0; j < r.b.size(); ++j)
      if (r.dims[i][j] > r.b[j]) {
        generic = false;
        r.jumps.push_back({r.points[i], j, r.dims[i][j]});
      }
    if (generic) r.witnesses.push_back(r.points[i]);
  }
  return r;
}

std::vector<std::size_t> torsion_numbers(const TwistedComplex& d, const Point& a, std::uint32_t p) {
  return complexes::prime_comparison(d.complex, EvaluationAt{a}, ReductionIp{p}).torsion;
}

std::int64_t euler_characteristic(const TwistedComplex& d) {
  std::int64_t chi = 0;
  for (std::size_t j = 0; j < d.basis.size(); ++j)
    chi += (j % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(d.basis[j].size());
  return chi;
}

}  // namespace novikov::twisted
