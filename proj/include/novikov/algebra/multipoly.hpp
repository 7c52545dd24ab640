#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace novikov::algebra {

using Integer = mpz_class;
using Rational = mpq_class;

/// Signed exponent vector; Laurent monomials use negative entries.
using Exponent = std::vector<int>;

/// Sparse multivariate Laurent polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

  static MultiPoly constant(std::size_t num_vars, const Integer& c);
  static MultiPoly monomial(std::size_t num_vars, const Integer& c, Exponent e);
  /// t_i
  static MultiPoly variable(std::size_t num_vars, std::size_t i);

  std::size_t num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Exponent, Integer>& terms() const { return terms_; }

  /// Coefficient of t^0.
  Integer constant_term() const;
  bool has_negative_exponents() const;
  /// Per-variable minimum exponent over all terms (zeros for the zero polynomial).
  Exponent min_exponents() const;
  /// Multiply by the monomial t^shift.
  MultiPoly shifted(const Exponent& shift) const;

  /// Evaluate at a point of (Q^*)^s. Throws std::invalid_argument on a length
  /// mismatch or a zero coordinate paired with a negative exponent.
  Rational evaluate(std::span<const Rational> point) const;
  /// Image in Z_p under t_i := 0; requires nonnegative exponents.
  std::uint64_t reduce_at_zero_mod(std::uint32_t p) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const;
  MultiPoly scaled(const Integer& c) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, e.g. "t1^2 - 3*t2 + 1".
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Integer& c);
  void check_compatible(const MultiPoly& other) const;

  std::size_t num_vars_ = 0;
  std::map<Exponent, Integer> terms_;
};

}  // namespace novikov::algebra
