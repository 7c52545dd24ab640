#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "novikov/algebra/exact_algebra.hpp"
#include "novikov/algebra/matrix.hpp"

namespace novikov::complexes {

using algebra::IntMatrix;
using algebra::PolyMatrix;
using algebra::PrimeIdealSpec;

/// Error raised by the complexes layer. `degree` is the offending degree when
/// one is known.
class ComplexError : public std::invalid_argument {
 public:
  enum class Kind { Shape, NonzeroComposite, NotChainMap, InvalidFiltration, NonExact, Containment };
  ComplexError(Kind kind, std::size_t degree, const std::string& what)
      : std::invalid_argument(what), kind_(kind), degree_(degree) {}
  Kind kind() const { return kind_; }
  std::size_t degree() const { return degree_; }

 private:
  Kind kind_;
  std::size_t degree_;
};

/// Free chain complex over P_s (s = num_vars; s = 0 is the integers).
/// Degrees run 0..top(); boundary(j) maps degree j to degree j - 1.
class FreeChainComplex {
 public:
  FreeChainComplex() = default;
  /// `boundaries[i]` is d_{i+1}. Shapes are not checked here; see check_complex.
  FreeChainComplex(std::size_t num_vars, std::vector<std::size_t> ranks,
                   std::vector<PolyMatrix> boundaries);
  static FreeChainComplex from_integers(std::vector<std::size_t> ranks,
                                        const std::vector<IntMatrix>& boundaries);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t rank(std::size_t j) const { return j < ranks_.size() ? ranks_[j] : 0; }
  /// Number of degrees (top degree + 1).
  std::size_t length() const { return ranks_.size(); }
  /// d_j for any j >= 0; zero matrices outside 1..top.
  PolyMatrix boundary(std::size_t j) const;
  const std::vector<PolyMatrix>& boundaries() const { return d_; }
  bool is_constant() const;

 private:
  std::size_t num_vars_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<PolyMatrix> d_;  // d_[i] = d_{i+1}
};

/// Throws ComplexError (Shape or NonzeroComposite).
void check_complex(const FreeChainComplex& c);
bool verify_complex(const FreeChainComplex& c);

/// Coefficients for homology of a constant complex.
struct Coefficients {
  enum class Kind { Integers, Rationals, ModP };
  Kind kind = Kind::Integers;
  std::uint32_t p = 0;

  static Coefficients integers() { return {Kind::Integers, 0}; }
  static Coefficients rationals() { return {Kind::Rationals, 0}; }
  static Coefficients mod_p(std::uint32_t p) { return {Kind::ModP, p}; }
  std::string to_string() const;
};

struct HomologyGroup {
  std::size_t betti = 0;
  /// SNF divisors > 1 of d_{j+1}; empty over fields.
  std::vector<algebra::Integer> torsion;
};

/// Homology of a complex with constant entries.
std::vector<HomologyGroup> homology(const FreeChainComplex& c, Coefficients coeffs);

/// Betti numbers over the residue field of a prime ideal.
std::vector<std::size_t> betti_at(const FreeChainComplex& c, const PrimeIdealSpec& ideal);
/// rank d_j over the residue field, j = 0..length().
std::vector<std::size_t> boundary_ranks_at(const FreeChainComplex& c, const PrimeIdealSpec& ideal);

/// f_q : source_q -> target_q, maps[q] of shape target.rank(q) x source.rank(q).
struct ChainMap {
  FreeChainComplex source;
  FreeChainComplex target;
  std::vector<PolyMatrix> maps;

  PolyMatrix at(std::size_t q) const;
};

/// Throws ComplexError(NotChainMap) if d_N f != f d_R in some degree.
void check_chain_map(const ChainMap& f);

/// Cone degree q is source_{q-1} (+) target_q, d = [[-d_R, 0], [f, d_N]].
FreeChainComplex mapping_cone(const ChainMap& f);

/// Per-degree basis indices.
using BasisSelection = std::vector<std::vector<std::size_t>>;

/// Throws ComplexError(InvalidFiltration) unless the selection is closed
/// under the boundary.
void check_subcomplex(const FreeChainComplex& c, const BasisSelection& sub);
/// Complex spanned by the selected basis elements.
FreeChainComplex restrict_to(const FreeChainComplex& c, const BasisSelection& keep);
/// big / small for basis-aligned subcomplexes small ⊂ big of c.
FreeChainComplex quotient(const FreeChainComplex& c, const BasisSelection& big,
                          const BasisSelection& small);
BasisSelection full_selection(const FreeChainComplex& c);
/// Inclusion of a subcomplex as a chain map.
ChainMap inclusion(const FreeChainComplex& c, const BasisSelection& sub);

}  // namespace novikov::complexes
