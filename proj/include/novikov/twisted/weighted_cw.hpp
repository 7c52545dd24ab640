#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novikov/algebra/matrix.hpp"

namespace novikov::twisted {

using algebra::Integer;
using algebra::IntMatrix;

struct BoundaryTerm {
  std::string cell;
  Integer coef;
  /// Length s; the deck translation t^weight attached to this term.
  std::vector<int> weight;
};

struct Cell {
  std::string id;
  std::size_t dim = 0;
  std::vector<BoundaryTerm> boundary;
};

/// Finite CW complex with integer incidences carrying Z^s weights.
struct WeightedCWComplex {
  std::string name;
  std::size_t s = 0;
  std::vector<Cell> cells;

  std::size_t top_dim() const;
  /// Cells of dimension j, in input order.
  std::vector<const Cell*> cells_of_dim(std::size_t j) const;
  const Cell* find(const std::string& id) const;
};

struct Letter {
  std::string edge;
  int sign = 1;  // +1 or -1
};

/// Rank-k local system: one invertible integer matrix per 1-cell and an
/// explicit attaching word per 2-cell.
struct LocalSystem {
  std::size_t k = 1;
  std::map<std::string, IntMatrix> monodromy;
  std::map<std::string, std::vector<Letter>> attaching_words;
};

/// Throws std::invalid_argument with a message naming the offending cell.
void validate(const WeightedCWComplex& x);
void validate(const WeightedCWComplex& x, const LocalSystem& e);

/// Determinant by fraction-free elimination.
Integer determinant(const IntMatrix& m);

}  // namespace novikov::twisted
