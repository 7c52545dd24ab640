#include "novikov/report/morse_report.hpp"

#include <algorithm>
#include <stdexcept>

namespace novikov::report {

namespace {

Polynomial from_counts(const std::vector<std::size_t>& v) {
  std::vector<std::int64_t> c(v.begin(), v.end());
  return Polynomial(c);
}

std::int64_t at(const std::vector<std::size_t>& v, std::size_t j) {
  return j < v.size() ? static_cast<std::int64_t>(v[j]) : 0;
}

// Alternating sums sum_{i <= j} (-1)^(j - i) x_i must dominate those of b.
std::optional<std::size_t> alternating_failure(const std::vector<std::int64_t>& x, const std::vector<std::size_t>& b,
                                               std::size_t len) {
  std::int64_t sx = 0, sb = 0;
  for (std::size_t j = 0; j < len; ++j) {
    sx = (j < x.size() ? x[j] : 0) - sx;
    sb = at(b, j) - sb;
    if (sx < sb) return j;
  }
  return std::nullopt;
}

}  // namespace

MorseVerdict main_equality_check(const std::vector<conley::InvariantSetDescriptor>& ds,
                                 const twisted::TwistedComplex& d, const twisted::Point& a, std::uint32_t p) {
  twisted::torsion_numbers(d, a, p);
  MorseVerdict v;
  v.identity_name = "main_equality";
  v.hypothesis_declared = true;
  v.lhs = conley::sum_index_poincare(ds, complexes::Coefficients::mod_p(p)).poly();
  v.rhs = from_counts(twisted::evaluated_homology(d, a));
  const auto div = (v.lhs - v.rhs).divide_by_one_plus_t();
  v.q_polys = {div.quotient};
  if (div.remainder != 0) {
    v.holds = false;
    v.witness = std::max(v.lhs.length(), v.rhs.length()) - 1;
    v.detail = "L - R is not divisible by 1 + t: (L - R)(-1) = " + std::to_string(div.remainder);
    return v;
  }
  for (std::size_t j = 0; j < div.quotient.length(); ++j)
    if (div.quotient.coeff(j) < 0) {
      v.holds = false;
      v.witness = j;
      v.detail = "quotient coefficient of t^" + std::to_string(j) + " is " + std::to_string(div.quotient.coeff(j));
      return v;
    }
  return v;
}

EulerResult euler_check(const std::vector<conley::InvariantSetDescriptor>& ds, const twisted::TwistedComplex& d) {
  EulerResult r;
  r.index_sum = conley::sum_index_poincare(ds, complexes::Coefficients::rationals()).at_minus_one();
  r.chi = twisted::euler_characteristic(d);
  r.holds = r.index_sum == r.chi;
  return r;
}

MorseVerdict novikov_inequality_check(const std::vector<std::size_t>& c, const twisted::NovikovReport& nr,
                                      const std::vector<std::size_t>& q) {
  MorseVerdict v;
  v.identity_name = "novikov_inequalities";
  v.lhs = from_counts(c);
  v.rhs = from_counts(nr.b);
  v.q_polys = {from_counts(q)};
  const std::size_t len = std::max({c.size(), nr.b.size(), q.size() + 1});
  for (std::size_t j = 0; j < len; ++j) {
    const std::int64_t need = at(nr.b, j) + at(q, j) + (j > 0 ? at(q, j - 1) : 0);
    if (at(c, j) < need) {
      v.holds = false;
      v.witness = j;
      v.detail = "c_" + std::to_string(j) + " = " + std::to_string(at(c, j)) + " < b + q_j + q_{j-1} = " +
                 std::to_string(need);
      return v;
    }
  }
  std::vector<std::int64_t> cs(c.begin(), c.end());
  if (auto j = alternating_failure(cs, nr.b, len)) {
    v.holds = false;
    v.witness = *j;
    v.detail = "alternating sum of c falls below that of b at degree " + std::to_string(*j);
  }
  return v;
}

MorseVerdict morse_smale_check(const std::vector<std::size_t>& c, const std::vector<std::size_t>& orbits,
                               const twisted::NovikovReport& nr) {
  MorseVerdict v;
  v.identity_name = "morse_smale_inequalities";
  const std::size_t len = std::max({c.size(), orbits.size(), nr.b.size()});
  std::vector<std::int64_t> mu(len);
  for (std::size_t j = 0; j < len; ++j) mu[j] = at(c, j) + at(orbits, j) + at(orbits, j + 1);
  v.lhs = Polynomial(mu);
  v.rhs = from_counts(nr.b);
  for (std::size_t j = 0; j < len; ++j)
    if (mu[j] < at(nr.b, j)) {
      v.holds = false;
      v.witness = j;
      v.detail = "mu_" + std::to_string(j) + " = " + std::to_string(mu[j]) + " < b_" + std::to_string(j) + " = " +
                 std::to_string(at(nr.b, j));
      return v;
    }
  if (auto j = alternating_failure(mu, nr.b, len)) {
    v.holds = false;
    v.witness = *j;
    v.detail = "alternating sum of mu falls below that of b at degree " + std::to_string(*j);
  }
  return v;
}

std::string to_string(VanishingStatus s) {
  switch (s) {
    case VanishingStatus::Consistent:
      return "CONSISTENT";
    case VanishingStatus::Contradiction:
      return "CONTRADICTION";
    default:
      return "UNCERTIFIED";
  }
}

VanishingResult vanishing_check(const flows::CertReport& cert, const twisted::NovikovReport& nr) {
  if (!cert.fixed_point_free) throw std::invalid_argument("vanishing check needs a flow without fixed points");
  VanishingResult r;
  r.holds = std::all_of(nr.b.begin(), nr.b.end(), [](std::size_t b) { return b == 0; });
  if (cert.verdict != flows::Verdict::CertifiedOnSamples)
    r.status = VanishingStatus::Uncertified;
  else
    r.status = r.holds ? VanishingStatus::Consistent : VanishingStatus::Contradiction;
  return r;
}

}  // namespace novikov::report
