#pragma once

#include <optional>
#include <string>
#include <vector>

#include "novikov/complexes/chain_complex.hpp"
#include "novikov/twisted/weighted_cw.hpp"

namespace novikov::twisted {

using complexes::FreeChainComplex;

/// The complex D_* over P_s. Basis element i of degree j is copy (i % k) of
/// cell basis[j][i / k].
struct TwistedComplex {
  std::string name;
  std::size_t s = 0;
  std::size_t k = 1;
  /// Normalized complex: only nonnegative exponents.
  FreeChainComplex complex;
  /// Same complex before the monomial rescaling (Laurent entries).
  FreeChainComplex laurent;
  /// Cell ids per degree.
  std::vector<std::vector<std::string>> basis;
  /// shifts[j][i]: basis element i of degree j was replaced by t^shift times itself.
  std::vector<std::vector<algebra::Exponent>> shifts;

  /// Cell counts per degree (free ranks divided by k).
  std::vector<std::size_t> cell_counts() const;
};

/// Raised for weights that do not square to zero and for a local system that
/// does not match the given boundary data.
class TwistError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

TwistedComplex build_twisted(const WeightedCWComplex& x, const std::optional<LocalSystem>& e = std::nullopt);

/// Rescales basis elements by monomials, bottom degree first, so that every
/// entry has nonnegative exponents. Ranks at evaluation points are unchanged.
FreeChainComplex normalize_exponents(const FreeChainComplex& c,
                                     std::vector<std::vector<algebra::Exponent>>* shifts = nullptr);

}  // namespace novikov::twisted
