#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/conley/conley_index.hpp"
#include "novikov/flows/certify.hpp"
#include "novikov/twisted/novikov.hpp"

namespace novikov::report {

using complexes::PoincarePolynomial;
using complexes::Polynomial;

struct MorseVerdict {
  std::string identity_name;
  /// Signed polynomials: the checks compare them coefficientwise.
  Polynomial lhs;
  Polynomial rhs;
  std::vector<Polynomial> q_polys;
  bool holds = true;
  std::optional<std::size_t> witness;
  std::string detail;
  /// The main equality is only meaningful when the isolated pi-invariant set
  /// equals the pi-nonwandering set; that is taken as given, not checked.
  bool hypothesis_declared = false;
};

/// L = sum of index polynomials over Z_p, R = Poincare polynomial of D at a.
/// Holds iff L - R = (1 + t) Q with Q >= 0. Throws ComplexError(Containment)
/// if (a, p) is not a valid pairing for D.
MorseVerdict main_equality_check(const std::vector<conley::InvariantSetDescriptor>& ds,
                                 const twisted::TwistedComplex& d, const twisted::Point& a, std::uint32_t p);

struct EulerResult {
  std::int64_t index_sum = 0;
  std::int64_t chi = 0;
  bool holds = true;
};

/// Sum of index polynomials at t = -1 against the Euler characteristic of X.
EulerResult euler_check(const std::vector<conley::InvariantSetDescriptor>& ds, const twisted::TwistedComplex& d);

/// c_j >= b_j + q_j + q_{j-1} in every degree, and the alternating sums of c
/// dominate those of b. An empty q counts as zero.
MorseVerdict novikov_inequality_check(const std::vector<std::size_t>& c, const twisted::NovikovReport& nr,
                                      const std::vector<std::size_t>& q);

/// mu_j = c_j + a_j + a_{j+1} against b, degreewise and in alternating sums.
MorseVerdict morse_smale_check(const std::vector<std::size_t>& c, const std::vector<std::size_t>& orbits,
                               const twisted::NovikovReport& nr);

enum class VanishingStatus { Consistent, Contradiction, Uncertified };

struct VanishingResult {
  bool holds = true;  // every b_i is zero
  VanishingStatus status = VanishingStatus::Consistent;
};

std::string to_string(VanishingStatus s);

/// Throws std::invalid_argument unless the certificate is for a flow without
/// fixed points.
VanishingResult vanishing_check(const flows::CertReport& cert, const twisted::NovikovReport& nr);

}  // namespace novikov::report
