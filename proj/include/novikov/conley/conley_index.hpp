#pragma once

#include <string>
#include <variant>
#include <vector>

#include "novikov/complexes/chain_complex.hpp"
#include "novikov/complexes/poincare.hpp"

namespace novikov::conley {

using complexes::Coefficients;
using complexes::PoincarePolynomial;

struct HyperbolicFixedPoint {
  int k = 0;
};

struct PeriodicOrbit {
  int k = 0;
  bool orientable = true;
};

/// Bott-type critical manifold Z of index k; z_poincare is the Poincare
/// polynomial of H_*(Z) with the orientation twist, supplied by the caller.
struct CriticalManifold {
  int k = 0;
  PoincarePolynomial z_poincare;
  std::string label;
};

using InvariantSetDescriptor = std::variant<HyperbolicFixedPoint, PeriodicOrbit, CriticalManifold>;

/// Throws std::invalid_argument for k < 0 or an unorientable orbit with k = 0.
void validate(const InvariantSetDescriptor& d);

/// Unreduced homology of the projective plane over a field, from its cellular
/// complex (ranks 1, 1, 1; d_1 = 0, d_2 = [2]).
PoincarePolynomial projective_plane_poincare(Coefficients field);

/// Poincare polynomial of the Conley index homology over Q or Z_p:
/// t^k, t^k + t^(k+1), t^(k-1) p(RP^2), or t^k p(Z).
PoincarePolynomial index_poincare(const InvariantSetDescriptor& d, Coefficients field);

/// Coefficientwise sum over a disjoint family.
PoincarePolynomial sum_index_poincare(const std::vector<InvariantSetDescriptor>& ds, Coefficients field);

/// Short description used in reports, e.g. "orbit k=1 unorientable".
std::string describe(const InvariantSetDescriptor& d);

}  // namespace novikov::conley
