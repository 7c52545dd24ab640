#include "novikov/twisted/weighted_cw.hpp"

#include <set>
#include <stdexcept>

namespace novikov::twisted {

std::size_t WeightedCWComplex::top_dim() const {
  std::size_t top = 0;
  for (const auto& c : cells) top = std::max(top, c.dim);
  return top;
}

std::vector<const Cell*> WeightedCWComplex::cells_of_dim(std::size_t j) const {
  std::vector<const Cell*> out;
  for (const auto& c : cells)
    if (c.dim == j) out.push_back(&c);
  return out;
}

const Cell* WeightedCWComplex::find(const std::string& id) const {
  for (const auto& c : cells)
    if (c.id == id) return &c;
  return nullptr;
}

void validate(const WeightedCWComplex& x) {
  if (x.cells.empty()) throw std::invalid_argument("complex '" + x.name + "' has no cells");
  std::set<std::string> seen;
  for (const auto& c : x.cells)
    if (!seen.insert(c.id).second) throw std::invalid_argument("duplicate cell id '" + c.id + "'");
  for (const auto& c : x.cells) {
    if (c.dim == 0 && !c.boundary.empty())
      throw std::invalid_argument("0-cell '" + c.id + "' has boundary terms");
    for (const auto& t : c.boundary) {
      const Cell* target = x.find(t.cell);
      if (!target)
        throw std::invalid_argument("cell '" + c.id + "' refers to unknown cell '" + t.cell + "'");
      if (target->dim + 1 != c.dim)
        throw std::invalid_argument("boundary of '" + c.id + "' (dim " + std::to_string(c.dim) +
                                    ") contains '" + t.cell + "' of dim " + std::to_string(target->dim));
      if (t.weight.size() != x.s)
        throw std::invalid_argument("term '" + t.cell + "' in the boundary of '" + c.id + "' has weight of length " +
                                    std::to_string(t.weight.size()) + ", expected " + std::to_string(x.s));
    }
  }
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

void validate(const WeightedCWComplex& x, const LocalSystem& e) {
  validate(x);
  if (e.k == 0) throw std::invalid_argument("local system rank must be positive");
  if (x.top_dim() >= 3) throw std::invalid_argument("local systems are supported up to dimension 2");
  for (const Cell* edge : x.cells_of_dim(1)) {
    auto it = e.monodromy.find(edge->id);
    if (it == e.monodromy.end()) throw std::invalid_argument("no monodromy for 1-cell '" + edge->id + "'");
    const IntMatrix& m = it->second;
    if (m.rows() != e.k || m.cols() != e.k)
      throw std::invalid_argument("monodromy of '" + edge->id + "' is not " + std::to_string(e.k) + "x" +
                                  std::to_string(e.k));
    Integer det = determinant(m);
    if (det != 1 && det != -1)
      throw std::invalid_argument("monodromy of '" + edge->id + "' is not invertible over Z (det " +
                                  det.get_str() + ")");
  }
  for (const auto& [id, _] : e.monodromy) {
    const Cell* c = x.find(id);
    if (!c || c->dim != 1) throw std::invalid_argument("monodromy given for '" + id + "', which is not a 1-cell");
  }
  for (const Cell* face : x.cells_of_dim(2)) {
    auto it = e.attaching_words.find(face->id);
    if (it == e.attaching_words.end())
      throw std::invalid_argument("no attaching word for 2-cell '" + face->id + "'");
    for (const auto& l : it->second) {
      const Cell* c = x.find(l.edge);
      if (!c || c->dim != 1)
        throw std::invalid_argument("attaching word of '" + face->id + "' uses '" + l.edge + "', not a 1-cell");
      if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("attaching word of '" + face->id + "' has a letter with sign " +
                                    std::to_string(l.sign));
    }
  }
}

}  // namespace novikov::twisted
