#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "novikov/flows/flow_model.hpp"

namespace novikov::flows {

/// Open arc |theta - center| < half_width (mod 2*pi); half_width >= pi is the
/// whole circle.
struct Arc {
  double center = 0;
  double half_width = kPi;

  bool full() const { return half_width >= kPi; }
  bool contains(double theta) const;
  /// Distance from theta to the arc's complement (infinite for a full arc).
  double depth(double theta) const;
};

/// Piecewise constant in the local coordinate u = wrap(theta - center):
/// values[i] / denominator on the i-th interval between breaks.
/// closed_right[i] puts break i in the interval to its right.
struct StepPrimitive {
  std::vector<double> breaks;
  std::vector<std::int64_t> values;
  std::vector<bool> closed_right;
};

/// slope * u + cos_coef * cos(theta) + sin_coef * sin(theta) + offset.
struct SmoothPrimitive {
  double slope = 0;
  double cos_coef = 0;
  double sin_coef = 0;
  double offset = 0;
};

/// monostate is the zero function.
using Primitive1D = std::variant<std::monostate, StepPrimitive, SmoothPrimitive>;

/// A cocycle value split into an exact part (numerator over the
/// representation's step denominator) and a floating part.
struct Gain {
  std::int64_t steps = 0;
  double smooth = 0;

  Gain& operator+=(const Gain& o) {
    steps += o.steps;
    smooth += o.smooth;
    return *this;
  }
  Gain& operator-=(const Gain& o) {
    steps -= o.steps;
    smooth -= o.smooth;
    return *this;
  }
  friend Gain operator+(Gain a, const Gain& b) { return a += b; }
  friend Gain operator-(Gain a, const Gain& b) { return a -= b; }
  Gain operator-() const { return {-steps, -smooth}; }
  friend bool operator==(const Gain&, const Gain&) = default;
};

struct Chart {
  std::vector<Arc> region;
  /// One primitive per coordinate; beta is their sum.
  std::vector<Primitive1D> beta;
};

/// Cover of S^1 or T^m by product charts with bounded local primitives.
class CocycleRep {
 public:
  CocycleRep() = default;
  /// Throws std::invalid_argument on malformed charts or a cover with holes.
  CocycleRep(std::size_t dim, std::vector<Chart> charts, std::int64_t step_denominator = 1,
             std::vector<int> weights = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Chart>& charts() const { return charts_; }
  std::int64_t step_denominator() const { return den_; }
  /// Class tag: coordinates of [alpha] in the integral basis of the matching
  /// WeightedCWComplex.
  const std::vector<int>& weights() const { return weights_; }

  double value(const Gain& g) const { return double(g.steps) / double(den_) + g.smooth; }

  bool chart_contains(std::size_t chart, const Vec& x) const;
  /// Index of the first chart containing every given point.
  std::optional<std::size_t> common_chart(const Vec& x, const Vec& y) const;
  Gain beta(std::size_t chart, const Vec& x) const;
  /// beta(y) - beta(x) in the first chart containing both; nullopt if none.
  std::optional<Gain> pair_gain(const Vec& x, const Vec& y) const;
  /// beta(y) - beta(x) in a given chart; nullopt if it misses a point.
  std::optional<Gain> pair_gain_in(std::size_t chart, const Vec& x, const Vec& y) const;

  /// Largest |beta| over all charts (M_alpha).
  double bound() const { return bound_; }
  /// Lower bound for the sup-norm Lebesgue radius: any two points closer than
  /// this share a chart.
  double lebesgue_radius() const { return lebesgue_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Chart> charts_;
  std::int64_t den_ = 1;
  std::vector<int> weights_;
  double bound_ = 0;
  double lebesgue_ = 0;
};

}  // namespace novikov::flows
