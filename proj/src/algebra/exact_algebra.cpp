#include "novikov/algebra/exact_algebra.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "novikov/algebra/modp_kernels.hpp"

namespace novikov::algebra {

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [](const Integer& d) { return d != 0; }));
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// row[target] += q * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(target, c) += q * m(source, c);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, target) += q * m(r, source);
}

// Smallest nonzero |entry| in the trailing block starting at (t, t).
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(m, Integer(0), Integer(1));
  IntMatrix right = IntMatrix::identity(n, Integer(0), Integer(1));

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    auto pivot = min_pivot(a, t);
    if (!pivot) break;
    swap_rows(a, t, pivot->first);
    swap_rows(left, t, pivot->first);
    swap_cols(a, t, pivot->second);
    swap_cols(right, t, pivot->second);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row(a, i, t, -q);
        add_row(left, i, t, -q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        add_col(a, j, t, -q);
        add_col(right, j, t, -q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder is smaller than the pivot; move the new minimum of row t
        // and column t into position and sweep again.
        std::size_t bi = t, bj = t;
        Integer best = abs(a(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) { best = abs(a(i, t)); bi = i; bj = t; }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) { best = abs(a(t, j)); bi = t; bj = j; }
        swap_rows(a, t, bi);
        swap_rows(left, t, bi);
        swap_cols(a, t, bj);
        swap_cols(right, t, bj);
        continue;
      }
      // Row and column cleared; enforce divisibility of the trailing block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < m && !offender; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            offender = i;
            break;
          }
      if (!offender) break;
      add_row(a, t, *offender, Integer(1));
      add_row(left, t, *offender, Integer(1));
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) left(t, c) = -left(t, c);
    }
  }

  SnfResult out;
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(a(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

std::size_t field_rank(const RatMatrix& input) {
  RatMatrix m = input;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(rank, k));
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(rank, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

std::size_t field_rank(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return field_rank(r);
}

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

std::size_t field_rank_mod_p(const IntMatrix& input, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  const std::size_t rows = input.rows(), cols = input.cols();
  std::vector<std::vector<std::uint32_t>> m(rows, std::vector<std::uint32_t>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), input(i, j).get_mpz_t(), p);
      m[i][j] = static_cast<std::uint32_t>(r.get_ui());
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint32_t inv = inverse_mod(m[rank][c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      std::uint32_t ratio = static_cast<std::uint32_t>(static_cast<std::uint64_t>(m[r][c]) * inv % p);
      kernels::axpy_mod(m[r], m[rank], p - ratio, p);
    }
    ++rank;
  }
  return rank;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void validate_ideal(const PrimeIdealSpec& ideal) {
  if (const auto* ev = std::get_if<EvaluationAt>(&ideal)) {
    for (std::size_t i = 0; i < ev->point.size(); ++i)
      if (ev->point[i] == 0)
        throw std::invalid_argument("evaluation point coordinate " + std::to_string(i) + " is zero");
  } else if (const auto* red = std::get_if<ReductionIp>(&ideal)) {
    if (!is_prime(red->p)) throw std::invalid_argument(std::to_string(red->p) + " is not prime");
  }
}

RatMatrix evaluate(const PolyMatrix& m, std::span<const Rational> point) {
  RatMatrix out(m.rows(), m.cols(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).evaluate(point);
  return out;
}

std::size_t rank_at_ideal(const PolyMatrix& m, const PrimeIdealSpec& ideal) {
  validate_ideal(ideal);
  if (const auto* ev = std::get_if<EvaluationAt>(&ideal)) {
    if (ev->point.size() != m.num_vars()) {
      throw std::invalid_argument("evaluation point has " + std::to_string(ev->point.size()) +
                                  " coordinates but the matrix has " +
                                  std::to_string(m.num_vars()) + " variables");
    }
    return field_rank(evaluate(m, ev->point));
  }
  if (const auto* red = std::get_if<ReductionIp>(&ideal)) {
    IntMatrix z(m.rows(), m.cols(), Integer(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) z(r, c) = m(r, c).constant_term();
    if (m.num_vars() > 0) {
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          if (m(r, c).has_negative_exponents())
            throw std::invalid_argument("reduction at <p, t> needs nonnegative exponents");
    }
    return field_rank_mod_p(z, red->p);
  }
  throw std::invalid_argument("generic rank is computed by a sampling search, not rank_at_ideal");
}

}  // namespace novikov::algebra
