#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "novikov/algebra/matrix.hpp"

namespace novikov::algebra {

/// left * A * right is the diagonal embedding of `diagonal`, with
/// diagonal[i] | diagonal[i+1] and both transforms unimodular.
struct SnfResult {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;

  std::size_t rank() const;
};

/// Smith normal form; the pivot is the nonzero entry of least absolute value.
SnfResult smith_normal_form(const IntMatrix& a);

/// Row rank over Q, fraction-free elimination.
std::size_t field_rank(const RatMatrix& m);
std::size_t field_rank(const IntMatrix& m);
/// Row rank over Z_p of the entrywise reduction of m.
std::size_t field_rank_mod_p(const IntMatrix& m, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Evaluation at a point of (Q^*)^s: the ideal of polynomials vanishing at a.
struct EvaluationAt {
  std::vector<Rational> point;
};
/// <p> + <t_1, ..., t_s>.
struct ReductionIp {
  std::uint32_t p = 2;
};
/// Placeholder for the generic point; ranks there come from a sampling search.
struct GenericPoint {};

using PrimeIdealSpec = std::variant<EvaluationAt, ReductionIp, GenericPoint>;

/// Throws std::invalid_argument for a zero coordinate or a non-prime p.
void validate_ideal(const PrimeIdealSpec& ideal);

/// Rank of M over the residue field of the ideal. GenericPoint is rejected;
/// the generic rank is a search, not a single evaluation.
std::size_t rank_at_ideal(const PolyMatrix& m, const PrimeIdealSpec& ideal);

RatMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point);

}  // namespace novikov::algebra
