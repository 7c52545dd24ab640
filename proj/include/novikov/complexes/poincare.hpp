#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace novikov::complexes {

/// Integer polynomial in one variable, coefficients indexed by degree, trailing
/// zeros trimmed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);

  static Polynomial monomial(std::size_t degree, std::int64_t c = 1);
  /// 1 + t
  static Polynomial one_plus_t();

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t coeff(std::size_t degree) const {
    return degree < coeffs_.size() ? coeffs_[degree] : 0;
  }
  /// Highest degree + 1; 0 for the zero polynomial.
  std::size_t length() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_nonnegative() const;

  std::int64_t evaluate(std::int64_t t) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Synthetic division by (1 + t); the remainder equals the value at t = -1.
  struct Division;
  Division divide_by_one_plus_t() const;

  /// "1 + 2t + t^2" style; `var` names the indeterminate.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

struct Polynomial::Division {
  Polynomial quotient;
  std::int64_t remainder = 0;
};

/// Poincare polynomial: all coefficients nonnegative.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  /// Throws std::invalid_argument on a negative coefficient.
  explicit PoincarePolynomial(Polynomial p);
  static PoincarePolynomial from_counts(const std::vector<std::size_t>& counts);

  const Polynomial& poly() const { return poly_; }
  const std::vector<std::int64_t>& coeffs() const { return poly_.coeffs(); }
  std::int64_t coeff(std::size_t degree) const { return poly_.coeff(degree); }
  std::int64_t at_minus_one() const { return poly_.evaluate(-1); }
  std::string to_string() const { return poly_.to_string(); }

  friend PoincarePolynomial operator+(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    return PoincarePolynomial(a.poly_ + b.poly_);
  }
  friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) = default;

 private:
  Polynomial poly_;
};

}  // namespace novikov::complexes
