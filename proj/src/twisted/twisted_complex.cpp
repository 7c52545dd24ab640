#include "novikov/twisted/twisted_complex.hpp"

#include <algorithm>
#include <map>

namespace novikov::twisted {

using algebra::Exponent;
using algebra::MultiPoly;
using algebra::PolyMatrix;
using algebra::RatMatrix;
using algebra::Rational;

namespace {

IntMatrix identity(std::size_t k) { return IntMatrix::identity(k, Integer(0), Integer(1)); }

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw TwistError("monodromy matrix is singular");
    for (std::size_t k = 0; k < 2 * n; ++k) std::swap(a(piv, k), a(c, k));
    Rational inv = 1 / a(c, c);
    for (std::size_t k = 0; k < 2 * n; ++k) a(c, k) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = 0; k < 2 * n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  IntMatrix out(n, n, Integer(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, n + j).get_den() != 1) throw TwistError("monodromy inverse is not integral");
      out(i, j) = a(i, n + j).get_num();
    }
  return out;
}

Exponent add(Exponent a, const Exponent& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign * b[i];
  return a;
}

// Deck weight of an edge: weight on the +1 end minus weight on the -1 end.
Exponent edge_weight(const Cell& edge, std::size_t s) {
  Exponent head(s, 0), tail(s, 0);
  int plus = 0, minus = 0;
  for (const auto& t : edge.boundary) {
    if (t.coef == 1) {
      head = t.weight;
      ++plus;
    } else if (t.coef == -1) {
      tail = t.weight;
      ++minus;
    } else {
      throw TwistError("1-cell '" + edge.id + "' needs incidences +1 and -1 to carry a local system");
    }
  }
  if (plus == 0 && minus == 0) return Exponent(s, 0);
  if (plus != 1 || minus != 1)
    throw TwistError("1-cell '" + edge.id + "' needs exactly one +1 and one -1 end to carry a local system");
  return add(head, tail, -1);
}

struct Block {
  Integer coef;
  Exponent weight;
  IntMatrix mat;
};

// Places coef * t^weight * mat at block (row, col).
void place(PolyMatrix& d, std::size_t row, std::size_t col, std::size_t k, std::size_t s, const Block& b) {
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Integer v = b.coef * b.mat(i, j);
      if (v == 0) continue;
      d.add_to(row * k + i, col * k + j, MultiPoly::monomial(s, v, b.weight));
    }
}

std::map<std::string, MultiPoly> collapse(const std::vector<BoundaryTerm>& terms, std::size_t s) {
  std::map<std::string, MultiPoly> out;
  for (const auto& t : terms) {
    auto [it, _] = out.try_emplace(t.cell, MultiPoly(s));
    it->second += MultiPoly::monomial(s, t.coef, t.weight);
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<std::size_t> TwistedComplex::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& b : basis) out.push_back(b.size());
  return out;
}

FreeChainComplex normalize_exponents(const FreeChainComplex& c, std::vector<std::vector<Exponent>>* shifts_out) {
  const std::size_t s = c.num_vars();
  std::vector<std::vector<Exponent>> shifts(c.length());
  if (c.length() > 0) shifts[0].assign(c.rank(0), Exponent(s, 0));
  std::vector<PolyMatrix> d;
  for (std::size_t j = 1; j < c.length(); ++j) {
    const PolyMatrix& in = c.boundaries()[j - 1];
    PolyMatrix m(in.rows(), in.cols(), s);
    for (std::size_t r = 0; r < in.rows(); ++r) {
      Exponent neg(s, 0);
      for (std::size_t v = 0; v < s; ++v) neg[v] = -shifts[j - 1][r][v];
      for (std::size_t col = 0; col < in.cols(); ++col)
        if (!in(r, col).is_zero()) m.set(r, col, in(r, col).shifted(neg));
    }
    shifts[j].assign(in.cols(), Exponent(s, 0));
    for (std::size_t col = 0; col < in.cols(); ++col) {
      Exponent lift(s, 0);
      for (std::size_t r = 0; r < in.rows(); ++r) {
        if (m(r, col).is_zero()) continue;
        Exponent lo = m(r, col).min_exponents();
        for (std::size_t v = 0; v < s; ++v) lift[v] = std::max(lift[v], -lo[v]);
      }
      shifts[j][col] = lift;
      for (std::size_t r = 0; r < in.rows(); ++r)
        if (!m(r, col).is_zero()) m.set(r, col, m(r, col).shifted(lift));
    }
    d.push_back(std::move(m));
  }
  if (shifts_out) *shifts_out = std::move(shifts);
  return FreeChainComplex(s, c.ranks(), std::move(d));
}

TwistedComplex build_twisted(const WeightedCWComplex& x, const std::optional<LocalSystem>& e) {
  if (e) validate(x, *e);
  else validate(x);
  const std::size_t s = x.s;
  const std::size_t k = e ? e->k : 1;
  const std::size_t top = x.top_dim();

  TwistedComplex out;
  out.name = x.name;
  out.s = s;
  out.k = k;
  out.basis.resize(top + 1);
  std::map<std::string, std::size_t> index;
  for (std::size_t j = 0; j <= top; ++j)
    for (const Cell* c : x.cells_of_dim(j)) {
      index[c->id] = out.basis[j].size();
      out.basis[j].push_back(c->id);
    }

  std::vector<std::size_t> ranks(top + 1);
  for (std::size_t j = 0; j <= top; ++j) ranks[j] = out.basis[j].size() * k;

  std::map<std::string, IntMatrix> rho, rho_inv;
  std::map<std::string, Exponent> alpha;
  if (e) {
    for (const Cell* edge : x.cells_of_dim(1)) {
      rho[edge->id] = e->monodromy.at(edge->id);
      rho_inv[edge->id] = inverse_unimodular(rho[edge->id]);
      alpha[edge->id] = edge_weight(*edge, s);
    }
  }

  std::vector<PolyMatrix> d;
  for (std::size_t j = 1; j <= top; ++j) {
    PolyMatrix m(ranks[j - 1], ranks[j], s);
    for (const Cell* cell : x.cells_of_dim(j)) {
      const std::size_t col = index.at(cell->id);
      if (!e) {
        for (const auto& t : cell->boundary)
          place(m, index.at(t.cell), col, k, s, Block{t.coef, t.weight, identity(k)});
        continue;
      }
      if (j == 1) {
        for (const auto& t : cell->boundary)
          place(m, index.at(t.cell), col, k, s,
                Block{t.coef, t.weight, t.coef > 0 ? rho.at(cell->id) : identity(k)});
        continue;
      }
      // j == 2: Fox derivative of the attaching word. R is the
      // anti-homomorphism R(l_1 ... l_n) = rho(l_n) ... rho(l_1).
      const auto& word = e->attaching_words.at(cell->id);
      Exponent prefix_w(s, 0);
      IntMatrix prefix_r = identity(k);
      std::vector<BoundaryTerm> scalar;
      for (const auto& l : word) {
        if (l.sign > 0) {
          place(m, index.at(l.edge), col, k, s, Block{Integer(1), prefix_w, prefix_r});
          scalar.push_back({l.edge, Integer(1), prefix_w});
          prefix_w = add(prefix_w, alpha.at(l.edge));
          prefix_r = algebra::multiply(rho.at(l.edge), prefix_r);
        } else {
          prefix_w = add(prefix_w, alpha.at(l.edge), -1);
          prefix_r = algebra::multiply(rho_inv.at(l.edge), prefix_r);
          place(m, index.at(l.edge), col, k, s, Block{Integer(-1), prefix_w, prefix_r});
          scalar.push_back({l.edge, Integer(-1), prefix_w});
        }
      }
      if (!(prefix_r == identity(k)))
        throw TwistError("incompatible local system: monodromy around '" + cell->id + "' is not the identity");
      if (collapse(scalar, s) != collapse(cell->boundary, s))
        throw TwistError("incompatible local system: attaching word of '" + cell->id +
                         "' does not match its boundary terms");
    }
    d.push_back(std::move(m));
  }

  out.laurent = FreeChainComplex(s, ranks, std::move(d));
  try {
    complexes::check_complex(out.laurent);
  } catch (const complexes::ComplexError& err) {
    throw TwistError("inconsistent weights: " + std::string(err.what()));
  }
  std::vector<std::vector<Exponent>> cell_shifts;
  out.complex = normalize_exponents(out.laurent, &cell_shifts);
  out.shifts = std::move(cell_shifts);
  complexes::check_complex(out.complex);
  return out;
}

}  // namespace novikov::twisted
