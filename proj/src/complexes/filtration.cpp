#include "novikov/complexes/filtration.hpp"

#include <algorithm>

namespace novikov::complexes {

namespace {

PoincarePolynomial relative_poly(const FreeChainComplex& c, const BasisSelection& big,
                                 const BasisSelection& small, const PrimeIdealSpec& ideal) {
  return poincare_at(quotient(c, big, small), ideal);
}

// Solve e = (1 + t) q coefficientwise: d_l = e_l - d_{l-1}.
PoincarePolynomial solve_connecting(const Polynomial& e, std::size_t triple) {
  std::vector<std::int64_t> d(e.length(), 0);
  std::int64_t prev = 0;
  for (std::size_t l = 0; l < e.length(); ++l) {
    d[l] = e.coeff(l) - prev;
    if (d[l] < 0)
      throw ComplexError(ComplexError::Kind::NonExact, l,
                         "connecting rank d_" + std::to_string(l) + " of triple " + std::to_string(triple) +
                             " solves to " + std::to_string(d[l]));
    prev = d[l];
  }
  Polynomial q(std::move(d));
  if (!(q * Polynomial::one_plus_t() == e))
    throw ComplexError(ComplexError::Kind::NonExact, e.length(),
                       "triple " + std::to_string(triple) + ": " + e.to_string() +
                           " is not divisible by 1 + t");
  return PoincarePolynomial(std::move(q));
}

}  // namespace

void check_filtration(const FreeChainComplex& c, const FiltrationSpec& f) {
  if (f.levels.empty())
    throw ComplexError(ComplexError::Kind::InvalidFiltration, 0, "filtration has no levels");
  for (std::size_t i = 0; i < f.levels.size(); ++i) {
    check_subcomplex(c, f.levels[i]);
    if (i == 0) continue;
    for (std::size_t j = 0; j < c.length(); ++j) {
      const auto& lo = j < f.levels[i - 1].size() ? f.levels[i - 1][j] : std::vector<std::size_t>{};
      const auto& hi = j < f.levels[i].size() ? f.levels[i][j] : std::vector<std::size_t>{};
      if (!std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
        throw ComplexError(ComplexError::Kind::InvalidFiltration, j,
                           "level " + std::to_string(i - 1) + " is not contained in level " +
                               std::to_string(i) + " in degree " + std::to_string(j));
    }
  }
  const auto& top = f.levels.back();
  for (std::size_t j = 0; j < c.length(); ++j) {
    std::size_t have = j < top.size() ? top[j].size() : 0;
    if (have != c.rank(j))
      throw ComplexError(ComplexError::Kind::InvalidFiltration, j, "largest level must be the whole complex");
  }
}

FiltrationSpec skeletal_filtration(const FreeChainComplex& c) {
  FiltrationSpec f;
  const BasisSelection all = full_selection(c);
  for (std::size_t i = 0; i <= c.length(); ++i) {
    BasisSelection level(c.length());
    for (std::size_t j = 0; j < i && j < c.length(); ++j) level[j] = all[j];
    f.levels.push_back(std::move(level));
  }
  return f;
}

PoincarePolynomial poincare_at(const FreeChainComplex& c, const PrimeIdealSpec& ideal) {
  return PoincarePolynomial::from_counts(betti_at(c, ideal));
}

FiltrationPolynomials filtration_polynomials(const FreeChainComplex& c, const FiltrationSpec& f,
                                             const PrimeIdealSpec& ideal) {
  check_complex(c);
  check_filtration(c, f);
  const auto& lv = f.levels;
  const std::size_t count = lv.size();  // n + 2
  FiltrationPolynomials out;

  Polynomial sum_relative;
  for (std::size_t i = 1; i < count; ++i) {
    out.relative.push_back(relative_poly(c, lv[i], lv[i - 1], ideal));
    sum_relative += out.relative.back().poly();
  }
  out.total = relative_poly(c, lv.back(), lv.front(), ideal);

  // Triples (C_{n+1}, C_j, C_{j-1}) for j = n..1, i.e. (lv[0], lv[i], lv[i+1])
  // for i = 1..count-2.
  Polynomial sum_q;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    Polynomial e = relative_poly(c, lv[i + 1], lv[i], ideal).poly() -
                   relative_poly(c, lv[i + 1], lv[0], ideal).poly() +
                   relative_poly(c, lv[i], lv[0], ideal).poly();
    out.connecting.push_back(solve_connecting(e, i));
    sum_q += out.connecting.back().poly();
  }
  out.connecting_sum = PoincarePolynomial(sum_q);

  if (!(sum_relative == out.total.poly() + Polynomial::one_plus_t() * sum_q))
    throw ComplexError(ComplexError::Kind::NonExact, 0,
                       "filtration identity fails: " + sum_relative.to_string() + " vs " +
                           (out.total.poly() + Polynomial::one_plus_t() * sum_q).to_string());
  return out;
}

PrimeComparison prime_comparison(const FreeChainComplex& c, const PrimeIdealSpec& p,
                                 const PrimeIdealSpec& q) {
  check_complex(c);
  const auto rp = boundary_ranks_at(c, p);
  const auto rq = boundary_ranks_at(c, q);
  PrimeComparison out;
  out.poly_p = poincare_at(c, p);
  out.poly_q = poincare_at(c, q);
  std::vector<std::int64_t> t(c.length(), 0);
  for (std::size_t j = 0; j < c.length(); ++j) {
    std::int64_t diff = static_cast<std::int64_t>(rp[j + 1]) - static_cast<std::int64_t>(rq[j + 1]);
    if (diff < 0)
      throw ComplexError(ComplexError::Kind::Containment, j,
                         "T_" + std::to_string(j) + " = " + std::to_string(diff) +
                             " < 0: the first ideal is not contained in the second");
    t[j] = diff;
    out.torsion.push_back(static_cast<std::size_t>(diff));
  }
  out.qpoly = PoincarePolynomial(Polynomial(t));
  if (!(out.poly_q.poly() == out.poly_p.poly() + Polynomial::one_plus_t() * out.qpoly.poly()))
    throw ComplexError(ComplexError::Kind::Containment, 0, "comparison identity fails");
  return out;
}

}  // namespace novikov::complexes
