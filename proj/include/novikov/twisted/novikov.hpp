#pragma once

#include <cstdint>
#include <vector>

#include "novikov/algebra/multipoly.hpp"
#include "novikov/twisted/twisted_complex.hpp"

namespace novikov::twisted {

using algebra::Rational;
using Point = std::vector<Rational>;

/// dim over Q of H_j of D evaluated at t = a.
std::vector<std::size_t> evaluated_homology(const TwistedComplex& d, const Point& a);
/// dim over Z_p of H_j(Z_p (x) D) with t := 0.
std::vector<std::size_t> reduced_homology_mod_p(const TwistedComplex& d, std::uint32_t p);

struct Jump {
  Point point;
  std::size_t degree = 0;
  std::size_t dim = 0;
};

struct NovikovReport {
  std::vector<std::size_t> b;
  /// Points where every degree attains b.
  std::vector<Point> witnesses;
  std::vector<Jump> jumps;
  /// Every evaluated point with its dims, in sampling order.
  std::vector<Point> points;
  std::vector<std::vector<std::size_t>> dims;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
};

/// Always evaluates (1, ..., 1) first, then `trials` random points with
/// numerators and denominators uniform in [1, 10^4]. b is the per-degree
/// minimum.
NovikovReport novikov_numbers(const TwistedComplex& d, std::size_t trials, std::uint64_t seed);

/// q_j = rank_Q d_{j+1}(a) - rank_{Z_p} d_{j+1}(t := 0). Throws
/// complexes::ComplexError(Containment) when some q_j would be negative.
std::vector<std::size_t> torsion_numbers(const TwistedComplex& d, const Point& a, std::uint32_t p);

/// Alternating sum of free ranks divided by k (the Euler characteristic of X).
std::int64_t euler_characteristic(const TwistedComplex& d);

}  // namespace novikov::twisted
