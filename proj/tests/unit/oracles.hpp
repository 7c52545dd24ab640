#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "novikov/algebra/exact_algebra.hpp"
#include "novikov/complexes/chain_complex.hpp"
#include "random_complexes.hpp"

namespace testutil {

using novikov::algebra::MultiPoly;
using novikov::algebra::PolyMatrix;

/// Bareiss determinant, independent of the library's code paths.
inline Integer det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Invariant factors by textbook elementary reduction: bring the smallest
/// entry to the corner, clear its row and column by division, fold in any
/// entry it does not divide, recurse.
inline std::vector<Integer> elementary_invariant_factors(IntMatrix m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    while (true) {
      std::size_t pi = r, pj = c;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (m(i, j) != 0 && (pi == r || abs(m(i, j)) < abs(m(pi, pj)))) pi = i, pj = j;
      if (pi == r) {
        out.resize(std::min(r, c), Integer(0));
        return out;
      }
      for (std::size_t j = 0; j < c; ++j) std::swap(m(t, j), m(pi, j));
      for (std::size_t i = 0; i < r; ++i) std::swap(m(i, t), m(i, pj));
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const Integer q = m(i, t) / m(t, t);
        for (std::size_t j = t; j < c; ++j) m(i, j) -= q * m(t, j);
        clean = clean && m(i, t) == 0;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const Integer q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < r; ++i) m(i, j) -= q * m(i, t);
        clean = clean && m(t, j) == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (m(i, j) % m(t, t) != 0) {
            for (std::size_t k = t; k < c; ++k) m(t, k) += m(i, k);
            divides = false;
          }
      if (divides) break;
    }
    out.push_back(abs(m(t, t)));
  }
  return out;
}

/// Betti numbers over Q of tau / mu from submatrix ranks.
inline std::vector<std::size_t> relative_betti(const Cellular& c, const BasisSelection& tau, const BasisSelection& mu) {
  const std::size_t n = c.cells.size();
  std::vector<std::vector<std::size_t>> keep(n);
  for (std::size_t j = 0; j < n; ++j)
    for (auto i : tau[j])
      if (!std::binary_search(mu[j].begin(), mu[j].end(), i)) keep[j].push_back(i);
  std::vector<std::size_t> rk(n + 1, 0);
  for (std::size_t j = 1; j < n; ++j) {
    IntMatrix m(keep[j - 1].size(), keep[j].size(), Integer(0));
    for (std::size_t r = 0; r < keep[j - 1].size(); ++r)
      for (std::size_t s = 0; s < keep[j].size(); ++s) m(r, s) = c.d[j - 1](keep[j - 1][r], keep[j][s]);
    rk[j] = novikov::algebra::field_rank(m);
  }
  std::vector<std::size_t> b(n);
  for (std::size_t j = 0; j < n; ++j) b[j] = keep[j].size() - rk[j] - rk[j + 1];
  return b;
}

/// Random complex over P_1: elementary pieces x -> f y plus free generators,
/// conjugated by unimodular integer changes of basis.
inline FreeChainComplex random_p1_complex(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), ex(0, 2), small(0, 2);
  const std::size_t top = 1 + rng() % 3;
  std::vector<std::size_t> ranks(top + 1, 0);
  struct Piece {
    std::size_t deg, src, dst;
    MultiPoly f;
  };
  std::vector<Piece> pieces;
  for (std::size_t j = 1; j <= top; ++j) {
    const int count = small(rng) + 1;
    for (int i = 0; i < count; ++i) {
      MultiPoly f(1);
      for (int k = 0; k < 2; ++k) f += MultiPoly::monomial(1, coef(rng), {ex(rng)});
      pieces.push_back({j, ranks[j]++, ranks[j - 1]++, f});
    }
  }
  for (auto& r : ranks) r += small(rng);
  std::vector<PolyMatrix> d;
  for (std::size_t j = 1; j <= top; ++j) d.emplace_back(ranks[j - 1], ranks[j], 1);
  for (const auto& p : pieces) d[p.deg - 1].set(p.dst, p.src, p.f);

  // U_j and its inverse from random elementary operations.
  std::vector<IntMatrix> u, uinv;
  for (std::size_t j = 0; j <= top; ++j) {
    IntMatrix a = IntMatrix::identity(ranks[j], 0, 1), b = a;
    if (ranks[j] >= 2)
      for (int step = 0; step < 6; ++step) {
        const std::size_t x = rng() % ranks[j], y = rng() % ranks[j];
        if (x == y) continue;
        const int c = coef(rng);
        for (std::size_t k = 0; k < ranks[j]; ++k) a(x, k) += c * a(y, k);  // E a
        for (std::size_t k = 0; k < ranks[j]; ++k) b(k, y) -= c * b(k, x);  // b E^-1
      }
    u.push_back(a);
    uinv.push_back(b);
  }
  for (std::size_t j = 1; j <= top; ++j)
    d[j - 1] = novikov::algebra::multiply(
        novikov::algebra::multiply(PolyMatrix::from_integers(u[j - 1], 1), d[j - 1]), PolyMatrix::from_integers(uinv[j], 1));
  return FreeChainComplex(1, ranks, d);
}

}  // namespace testutil
