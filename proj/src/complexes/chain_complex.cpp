#include "novikov/complexes/chain_complex.hpp"

#include <algorithm>

namespace novikov::complexes {

using algebra::Integer;
using algebra::MultiPoly;

namespace {

std::string shape(const PolyMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

bool sorted_unique(const std::vector<std::size_t>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  PolyMatrix out(rows.size(), cols.size(), m.num_vars());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, j, m(rows[i], cols[j]));
  return out;
}

const std::vector<std::size_t>& level_at(const BasisSelection& s, std::size_t j) {
  static const std::vector<std::size_t> empty;
  return j < s.size() ? s[j] : empty;
}

}  // namespace

FreeChainComplex::FreeChainComplex(std::size_t num_vars, std::vector<std::size_t> ranks,
                                   std::vector<PolyMatrix> boundaries)
    : num_vars_(num_vars), ranks_(std::move(ranks)), d_(std::move(boundaries)) {
  if (ranks_.empty()) {
    if (!d_.empty()) throw ComplexError(ComplexError::Kind::Shape, 0, "boundaries given for an empty complex");
    return;
  }
  if (d_.size() + 1 != ranks_.size()) {
    throw ComplexError(ComplexError::Kind::Shape, d_.size(),
                       "expected " + std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                           std::to_string(d_.size()));
  }
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (d_[i].num_vars() != num_vars_)
      throw ComplexError(ComplexError::Kind::Shape, i + 1,
                         "d_" + std::to_string(i + 1) + " has the wrong variable count");
}

FreeChainComplex FreeChainComplex::from_integers(std::vector<std::size_t> ranks,
                                                 const std::vector<IntMatrix>& boundaries) {
  std::vector<PolyMatrix> d;
  d.reserve(boundaries.size());
  for (const auto& m : boundaries) d.push_back(PolyMatrix::from_integers(m, 0));
  return FreeChainComplex(0, std::move(ranks), std::move(d));
}

PolyMatrix FreeChainComplex::boundary(std::size_t j) const {
  if (j >= 1 && j <= d_.size()) return d_[j - 1];
  const std::size_t rows = j == 0 ? 0 : rank(j - 1);
  return PolyMatrix(rows, rank(j), num_vars_);
}

bool FreeChainComplex::is_constant() const {
  return std::all_of(d_.begin(), d_.end(), [](const PolyMatrix& m) { return m.is_constant(); });
}

void check_complex(const FreeChainComplex& c) {
  for (std::size_t j = 1; j < c.length(); ++j) {
    const PolyMatrix& d = c.boundaries()[j - 1];
    if (d.rows() != c.rank(j - 1) || d.cols() != c.rank(j)) {
      throw ComplexError(ComplexError::Kind::Shape, j,
                         "d_" + std::to_string(j) + " has shape " + shape(d) + ", expected " +
                             std::to_string(c.rank(j - 1)) + "x" + std::to_string(c.rank(j)));
    }
  }
  for (std::size_t j = 1; j + 1 < c.length(); ++j) {
    if (!multiply(c.boundaries()[j - 1], c.boundaries()[j]).is_zero()) {
      throw ComplexError(ComplexError::Kind::NonzeroComposite, j + 1,
                         "d_" + std::to_string(j) + " d_" + std::to_string(j + 1) + " is not zero");
    }
  }
}

bool verify_complex(const FreeChainComplex& c) {
  try {
    check_complex(c);
    return true;
  } catch (const ComplexError&) {
    return false;
  }
}

std::string Coefficients::to_string() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::ModP: return "Z_" + std::to_string(p);
  }
  return "?";
}

std::vector<HomologyGroup> homology(const FreeChainComplex& c, Coefficients coeffs) {
  check_complex(c);
  if (!c.is_constant()) throw std::invalid_argument("homology needs constant entries; use betti_at");
  if (coeffs.kind == Coefficients::Kind::ModP && !algebra::is_prime(coeffs.p))
    throw std::invalid_argument(std::to_string(coeffs.p) + " is not prime");

  const std::size_t n = c.length();
  std::vector<std::size_t> rk(n + 1, 0);
  std::vector<std::vector<Integer>> torsion(n + 1);
  for (std::size_t j = 1; j < n; ++j) {
    IntMatrix d = c.boundaries()[j - 1].constant_part();
    switch (coeffs.kind) {
      case Coefficients::Kind::Integers: {
        auto snf = algebra::smith_normal_form(d);
        rk[j] = snf.rank();
        for (const auto& x : snf.diagonal)
          if (x > 1) torsion[j - 1].push_back(x);
        break;
      }
      case Coefficients::Kind::Rationals: rk[j] = algebra::field_rank(d); break;
      case Coefficients::Kind::ModP: rk[j] = algebra::field_rank_mod_p(d, coeffs.p); break;
    }
  }
  std::vector<HomologyGroup> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j].betti = c.rank(j) - rk[j] - rk[j + 1];
    out[j].torsion = std::move(torsion[j]);
  }
  return out;
}

std::vector<std::size_t> boundary_ranks_at(const FreeChainComplex& c, const PrimeIdealSpec& ideal) {
  std::vector<std::size_t> rk(c.length() + 1, 0);
  for (std::size_t j = 1; j < c.length(); ++j)
    rk[j] = algebra::rank_at_ideal(c.boundaries()[j - 1], ideal);
  return rk;
}

std::vector<std::size_t> betti_at(const FreeChainComplex& c, const PrimeIdealSpec& ideal) {
  check_complex(c);
  auto rk = boundary_ranks_at(c, ideal);
  std::vector<std::size_t> out(c.length());
  for (std::size_t j = 0; j < c.length(); ++j) out[j] = c.rank(j) - rk[j] - rk[j + 1];
  return out;
}

PolyMatrix ChainMap::at(std::size_t q) const {
  if (q < maps.size()) return maps[q];
  return PolyMatrix(target.rank(q), source.rank(q), target.num_vars());
}

void check_chain_map(const ChainMap& f) {
  check_complex(f.source);
  check_complex(f.target);
  if (f.source.num_vars() != f.target.num_vars())
    throw ComplexError(ComplexError::Kind::NotChainMap, 0, "source and target have different rings");
  const std::size_t n = std::max(f.source.length(), f.target.length());
  for (std::size_t q = 0; q < n; ++q) {
    PolyMatrix fq = f.at(q);
    if (fq.rows() != f.target.rank(q) || fq.cols() != f.source.rank(q) ||
        fq.num_vars() != f.target.num_vars())
      throw ComplexError(ComplexError::Kind::Shape, q, "f_" + std::to_string(q) + " has shape " + shape(fq));
  }
  for (std::size_t q = 1; q < n; ++q) {
    PolyMatrix lhs = multiply(f.target.boundary(q), f.at(q));
    PolyMatrix rhs = multiply(f.at(q - 1), f.source.boundary(q));
    if (!(lhs == rhs))
      throw ComplexError(ComplexError::Kind::NotChainMap, q,
                         "d f != f d in degree " + std::to_string(q));
  }
}

FreeChainComplex mapping_cone(const ChainMap& f) {
  check_chain_map(f);
  const FreeChainComplex& r = f.source;
  const FreeChainComplex& nn = f.target;
  const std::size_t s = nn.num_vars();
  const std::size_t len = std::max(r.length() + 1, nn.length());
  auto cone_rank = [&](std::size_t q) { return (q >= 1 ? r.rank(q - 1) : 0) + nn.rank(q); };

  std::vector<std::size_t> ranks(len);
  for (std::size_t q = 0; q < len; ++q) ranks[q] = cone_rank(q);

  std::vector<PolyMatrix> d;
  for (std::size_t q = 1; q < len; ++q) {
    // Rows: R_{q-2} (+) N_{q-1}; columns: R_{q-1} (+) N_q.
    const std::size_t r_rows = q >= 2 ? r.rank(q - 2) : 0;
    const std::size_t r_cols = r.rank(q - 1);
    PolyMatrix m(ranks[q - 1], ranks[q], s);
    if (q >= 2) {
      PolyMatrix dr = r.boundary(q - 1);
      for (std::size_t i = 0; i < r_rows; ++i)
        for (std::size_t j = 0; j < r_cols; ++j) m.set(i, j, -dr(i, j));
    }
    PolyMatrix fq = f.at(q - 1);
    for (std::size_t i = 0; i < nn.rank(q - 1); ++i)
      for (std::size_t j = 0; j < r_cols; ++j) m.set(r_rows + i, j, fq(i, j));
    PolyMatrix dn = nn.boundary(q);
    for (std::size_t i = 0; i < nn.rank(q - 1); ++i)
      for (std::size_t j = 0; j < nn.rank(q); ++j) m.set(r_rows + i, r_cols + j, dn(i, j));
    d.push_back(std::move(m));
  }
  FreeChainComplex cone(s, std::move(ranks), std::move(d));
  check_complex(cone);
  return cone;
}

void check_subcomplex(const FreeChainComplex& c, const BasisSelection& sub) {
  if (sub.size() > c.length())
    throw ComplexError(ComplexError::Kind::InvalidFiltration, sub.size() - 1, "selection has too many degrees");
  for (std::size_t j = 0; j < sub.size(); ++j) {
    if (!sorted_unique(sub[j]))
      throw ComplexError(ComplexError::Kind::InvalidFiltration, j, "selection indices must be increasing");
    for (auto i : sub[j])
      if (i >= c.rank(j))
        throw ComplexError(ComplexError::Kind::InvalidFiltration, j,
                           "basis index " + std::to_string(i) + " out of range in degree " + std::to_string(j));
  }
  for (std::size_t j = 1; j < sub.size(); ++j) {
    const PolyMatrix d = c.boundary(j);
    std::vector<bool> in(c.rank(j - 1), false);
    for (auto i : level_at(sub, j - 1)) in[i] = true;
    for (auto col : sub[j])
      for (std::size_t row = 0; row < d.rows(); ++row)
        if (!in[row] && !d(row, col).is_zero())
          throw ComplexError(ComplexError::Kind::InvalidFiltration, j,
                             "boundary of basis element " + std::to_string(col) + " in degree " +
                                 std::to_string(j) + " leaves the subcomplex");
  }
}

FreeChainComplex restrict_to(const FreeChainComplex& c, const BasisSelection& keep) {
  const std::size_t n = c.length();
  std::vector<std::size_t> ranks(n);
  for (std::size_t j = 0; j < n; ++j) ranks[j] = level_at(keep, j).size();
  std::vector<PolyMatrix> d;
  for (std::size_t j = 1; j < n; ++j)
    d.push_back(submatrix(c.boundaries()[j - 1], level_at(keep, j - 1), level_at(keep, j)));
  return FreeChainComplex(c.num_vars(), std::move(ranks), std::move(d));
}

FreeChainComplex quotient(const FreeChainComplex& c, const BasisSelection& big,
                          const BasisSelection& small) {
  const std::size_t n = c.length();
  BasisSelection keep(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = level_at(big, j);
    const auto& s = level_at(small, j);
    if (!std::includes(b.begin(), b.end(), s.begin(), s.end()))
      throw ComplexError(ComplexError::Kind::InvalidFiltration, j,
                         "levels are not nested in degree " + std::to_string(j));
    std::set_difference(b.begin(), b.end(), s.begin(), s.end(), std::back_inserter(keep[j]));
  }
  return restrict_to(c, keep);
}

BasisSelection full_selection(const FreeChainComplex& c) {
  BasisSelection all(c.length());
  for (std::size_t j = 0; j < c.length(); ++j) {
    all[j].resize(c.rank(j));
    for (std::size_t i = 0; i < c.rank(j); ++i) all[j][i] = i;
  }
  return all;
}

ChainMap inclusion(const FreeChainComplex& c, const BasisSelection& sub) {
  check_subcomplex(c, sub);
  ChainMap f;
  f.source = restrict_to(c, sub);
  f.target = c;
  for (std::size_t q = 0; q < c.length(); ++q) {
    const auto& idx = level_at(sub, q);
    PolyMatrix m(c.rank(q), idx.size(), c.num_vars());
    for (std::size_t k = 0; k < idx.size(); ++k)
      m.set(idx[k], k, MultiPoly::constant(c.num_vars(), Integer(1)));
    f.maps.push_back(std::move(m));
  }
  return f;
}

}  // namespace novikov::complexes
