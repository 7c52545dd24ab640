#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

namespace novikov::flows {

using Vec = std::vector<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Representative of x modulo 2*pi in [-pi, pi).
inline double wrap_signed(double x) {
  double r = std::fmod(x + kPi, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r - kPi;
}

/// Representative in [0, 2*pi).
inline double wrap_positive(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  return r;
}

/// Sup-norm distance on the torus.
double torus_distance(const Vec& a, const Vec& b);

/// dx/dt = omega.
struct ConstantField {
  Vec omega;
};

/// d(theta)/dt = c0 + sum_k a_k cos(k theta) + b_k sin(k theta), k = 1, 2, ...
struct FourierCircleField {
  double c0 = 0;
  Vec a;
  Vec b;
};

/// Dual field of the closed 1-form (kappa + sin theta) d theta, perturbed by
/// epsilon * g(theta) * cos(2 theta) * V with g a smooth cutoff vanishing
/// within delta of the zeros.
struct PerturbedOneFormField {
  double kappa = 0.5;
  double epsilon = 0.5;
  double delta = 0.2;
};

using VectorField = std::variant<ConstantField, FourierCircleField, PerturbedOneFormField>;

struct FixedPoint {
  Vec location;
  /// Hyperbolic index (dimension of the unstable manifold); -1 if degenerate.
  int index = 0;
  std::string descriptor;
};

/// Flow on the circle (dim 1) or the flat torus T^m. Points are stored as
/// lifts to R^m.
struct FlowModel {
  std::string name;
  std::size_t dim = 1;
  VectorField field;
  std::vector<FixedPoint> fixed_points;
  /// Upper bound on |V| (sup norm); it bounds the distance moved per unit time.
  double speed_bound = 1;
  /// -1 runs the flow backwards.
  double time_sign = 1;

  Vec velocity(const Vec& x) const;
  bool fixed_point_free() const { return fixed_points.empty(); }
};

/// Same flow with time reversed.
FlowModel reversed(FlowModel m);

/// Throws std::invalid_argument when a declared fixed point has |V| > 1e-12,
/// the dimension does not match the field, or the speed bound is not positive.
void validate(const FlowModel& m);

}  // namespace novikov::flows
