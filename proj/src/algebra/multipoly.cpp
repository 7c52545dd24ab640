#include "novikov/algebra/multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace novikov::algebra {

MultiPoly MultiPoly::constant(std::size_t num_vars, const Integer& c) {
  return monomial(num_vars, c, Exponent(num_vars, 0));
}

MultiPoly MultiPoly::monomial(std::size_t num_vars, const Integer& c, Exponent e) {
  if (e.size() != num_vars) {
    throw std::invalid_argument("monomial exponent length does not match variable count");
  }
  MultiPoly p(num_vars);
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw std::out_of_range("variable index out of range");
  Exponent e(num_vars, 0);
  e[i] = 1;
  return monomial(num_vars, 1, std::move(e));
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (int x : terms_.begin()->first)
    if (x != 0) return false;
  return true;
}

Integer MultiPoly::constant_term() const {
  auto it = terms_.find(Exponent(num_vars_, 0));
  return it == terms_.end() ? Integer(0) : it->second;
}

bool MultiPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return true;
  return false;
}

Exponent MultiPoly::min_exponents() const {
  Exponent m(num_vars_, 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < num_vars_; ++i)
      m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

MultiPoly MultiPoly::shifted(const Exponent& shift) const {
  if (shift.size() != num_vars_) throw std::invalid_argument("shift length mismatch");
  MultiPoly out(num_vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (std::size_t i = 0; i < num_vars_; ++i) f[i] += shift[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

namespace {

Rational rational_power(const Rational& base, int exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw std::invalid_argument("negative power of zero");
    return Rational(0);
  }
  unsigned long n = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), n);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), n);
  Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

}  // namespace

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) {
    throw std::invalid_argument("evaluation point has " + std::to_string(point.size()) +
                                " coordinates, polynomial has " + std::to_string(num_vars_) +
                                " variables");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < num_vars_; ++i) term *= rational_power(point[i], e[i]);
    sum += term;
  }
  return sum;
}

std::uint64_t MultiPoly::reduce_at_zero_mod(std::uint32_t p) const {
  if (has_negative_exponents()) {
    throw std::invalid_argument("reduction at t = 0 needs nonnegative exponents");
  }
  Integer c = constant_term();
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), p);
  return r.get_ui();
}

void MultiPoly::add_term(const Exponent& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& other) const {
  if (num_vars_ != other.num_vars_) {
    throw std::invalid_argument("polynomials over different variable counts");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  check_compatible(other);
  MultiPoly out(num_vars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      Exponent e = ea;
      for (std::size_t i = 0; i < num_vars_; ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly MultiPoly::scaled(const Integer& c) const {
  MultiPoly out(num_vars_);
  if (c == 0) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (e[i] == 0) continue;
      if (has_var) mono << "*";
      mono << (num_vars_ == 1 ? std::string("t") : "t" + std::to_string(i + 1));
      if (e[i] != 1) mono << "^" << e[i];
      has_var = true;
    }
    if (!has_var) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace novikov::algebra
