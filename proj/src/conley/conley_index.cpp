#include "novikov/conley/conley_index.hpp"

#include <stdexcept>

namespace novikov::conley {

namespace {

using complexes::Polynomial;

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

void require_field(Coefficients field) {
  if (field.kind == Coefficients::Kind::Integers)
    throw std::invalid_argument("index homology needs a field: Q or Z_p");
}

}  // namespace

void validate(const InvariantSetDescriptor& d) {
  std::visit(Overload{[](const HyperbolicFixedPoint& f) {
                        if (f.k < 0) throw std::invalid_argument("fixed point index must be >= 0");
                      },
                      [](const PeriodicOrbit& o) {
                        if (o.k < 0) throw std::invalid_argument("orbit index must be >= 0");
                        if (!o.orientable && o.k == 0)
                          throw std::invalid_argument("an unorientable orbit needs index k >= 1");
                      },
                      [](const CriticalManifold& z) {
                        if (z.k < 0) throw std::invalid_argument("critical manifold index must be >= 0");
                      }},
             d);
}

PoincarePolynomial projective_plane_poincare(Coefficients field) {
  require_field(field);
  const auto rp2 = complexes::FreeChainComplex::from_integers(
      {1, 1, 1}, {algebra::int_matrix(1, 1, {{0}}), algebra::int_matrix(1, 1, {{2}})});
  std::vector<std::size_t> betti;
  for (const auto& h : complexes::homology(rp2, field)) betti.push_back(h.betti);
  return PoincarePolynomial::from_counts(betti);
}

PoincarePolynomial index_poincare(const InvariantSetDescriptor& d, Coefficients field) {
  require_field(field);
  validate(d);
  return std::visit(
      Overload{[](const HyperbolicFixedPoint& f) { return PoincarePolynomial(Polynomial::monomial(f.k)); },
               [&](const PeriodicOrbit& o) {
                 if (o.orientable)
                   return PoincarePolynomial(Polynomial::monomial(o.k) + Polynomial::monomial(o.k + 1));
                 return PoincarePolynomial(Polynomial::monomial(o.k - 1) * projective_plane_poincare(field).poly());
               },
               [](const CriticalManifold& z) {
                 return PoincarePolynomial(Polynomial::monomial(z.k) * z.z_poincare.poly());
               }},
      d);
}

PoincarePolynomial sum_index_poincare(const std::vector<InvariantSetDescriptor>& ds, Coefficients field) {
  require_field(field);
  PoincarePolynomial total;
  for (const auto& d : ds) total = total + index_poincare(d, field);
  return total;
}

std::string describe(const InvariantSetDescriptor& d) {
  return std::visit(Overload{[](const HyperbolicFixedPoint& f) { return "fixed point k=" + std::to_string(f.k); },
                             [](const PeriodicOrbit& o) {
                               return "orbit k=" + std::to_string(o.k) + (o.orientable ? " orientable" : " unorientable");
                             },
                             [](const CriticalManifold& z) {
                               return "critical manifold " + z.label + " k=" + std::to_string(z.k);
                             }},
                    d);
}

}  // namespace novikov::conley
