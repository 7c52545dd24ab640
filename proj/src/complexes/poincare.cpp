#include "novikov/complexes/poincare.hpp"

#include <sstream>
#include <stdexcept>

namespace novikov::complexes {

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, std::int64_t c) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_plus_t() { return Polynomial({1, 1}); }

bool Polynomial::is_nonnegative() const {
  for (auto c : coeffs_)
    if (c < 0) return false;
  return true;
}

std::int64_t Polynomial::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial::Division Polynomial::divide_by_one_plus_t() const {
  Division d;
  if (coeffs_.empty()) return d;
  // Work from the top: p = (1 + t) q + r.
  const std::size_t n = coeffs_.size();
  std::vector<std::int64_t> q(n > 1 ? n - 1 : 0, 0);
  std::int64_t carry = 0;
  for (std::size_t k = n; k-- > 1;) {
    q[k - 1] = coeffs_[k] - carry;
    carry = q[k - 1];
  }
  d.remainder = coeffs_[0] - carry;
  d.quotient = Polynomial(std::move(q));
  return d;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePolynomial::PoincarePolynomial(Polynomial p) : poly_(std::move(p)) {
  if (!poly_.is_nonnegative()) {
    throw std::invalid_argument("Poincare polynomial with negative coefficient: " + poly_.to_string());
  }
}

PoincarePolynomial PoincarePolynomial::from_counts(const std::vector<std::size_t>& counts) {
  std::vector<std::int64_t> c(counts.begin(), counts.end());
  return PoincarePolynomial(Polynomial(std::move(c)));
}

}  // namespace novikov::complexes
