#pragma once

#include <vector>

#include "novikov/complexes/chain_complex.hpp"
#include "novikov/complexes/poincare.hpp"

namespace novikov::complexes {

/// levels[0] = C_{n+1} (smallest) ... levels[n+1] = C_0 = C. Each level is a
/// per-degree list of basis indices.
struct FiltrationSpec {
  std::vector<BasisSelection> levels;
};

/// Throws ComplexError(InvalidFiltration) for a level not closed under the
/// boundary, non-nested levels, or a top level that is not all of C.
void check_filtration(const FreeChainComplex& c, const FiltrationSpec& f);

/// Skeletal filtration: level i holds every basis element of degree < i,
/// from the empty level up to C.
FiltrationSpec skeletal_filtration(const FreeChainComplex& c);

/// Poincare polynomial of C over the residue field of the ideal.
PoincarePolynomial poincare_at(const FreeChainComplex& c, const PrimeIdealSpec& ideal);

struct FiltrationPolynomials {
  /// p(C_j, C_{j-1}; t) for j = n+1 down to 1, i.e. in level order
  /// levels[1]/levels[0], levels[2]/levels[1], ...
  std::vector<PoincarePolynomial> relative;
  /// p(C_{n+1}, C; t)
  PoincarePolynomial total;
  /// connecting[i] is q(C_{n+1}, C_j, C_{j-1}; t) for j = n - i, i.e. one
  /// entry per interior level, in level order starting at levels[1].
  std::vector<PoincarePolynomial> connecting;
  /// Sum of connecting polynomials.
  PoincarePolynomial connecting_sum;
};

/// Relative polynomials, total polynomial and connecting ranks; the identity
///   sum relative = total + (1 + t) sum q
/// is checked exactly. A negative solved rank throws ComplexError(NonExact).
FiltrationPolynomials filtration_polynomials(const FreeChainComplex& c, const FiltrationSpec& f,
                                             const PrimeIdealSpec& ideal);

struct PrimeComparison {
  PoincarePolynomial poly_p;
  PoincarePolynomial poly_q;
  /// T_j(P, Q) for j = 0..top.
  std::vector<std::size_t> torsion;
  /// Q(P, Q; t) = sum T_j t^j
  PoincarePolynomial qpoly;
};

/// Throws ComplexError(Containment) at the first degree with T_j < 0.
PrimeComparison prime_comparison(const FreeChainComplex& c, const PrimeIdealSpec& p,
                                 const PrimeIdealSpec& q);

}  // namespace novikov::complexes
