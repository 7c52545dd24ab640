#include "novikov/flows/flow_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace novikov::flows {

namespace {

// 0 for s <= 0, 1 for s >= 1, C^1 in between.
double smoothstep(double s) {
  if (s <= 0) return 0;
  if (s >= 1) return 1;
  return s * s * (3 - 2 * s);
}

double one_form(const PerturbedOneFormField& f, double theta) { return f.kappa + std::sin(theta); }

// Distance from theta to the nearest zero of kappa + sin theta (requires |kappa| < 1).
double distance_to_zero(const PerturbedOneFormField& f, double theta) {
  const double z1 = -std::asin(f.kappa);
  const double z2 = kPi - z1;
  return std::min(std::abs(wrap_signed(theta - z1)), std::abs(wrap_signed(theta - z2)));
}

}  // namespace

double torus_distance(const Vec& a, const Vec& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(wrap_signed(a[i] - b[i])));
  return d;
}

Vec FlowModel::velocity(const Vec& x) const {
  Vec v = std::visit(
      [&](const auto& f) -> Vec {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ConstantField>) {
          return f.omega;
        } else if constexpr (std::is_same_v<F, FourierCircleField>) {
          double s = f.c0;
          for (std::size_t k = 0; k < f.a.size(); ++k) s += f.a[k] * std::cos(double(k + 1) * x[0]);
          for (std::size_t k = 0; k < f.b.size(); ++k) s += f.b[k] * std::sin(double(k + 1) * x[0]);
          return {s};
        } else {
          const double base = one_form(f, x[0]);
          const double cut = smoothstep((distance_to_zero(f, x[0]) - f.delta) / f.delta);
          return {base * (1 + f.epsilon * cut * std::cos(2 * x[0]))};
        }
      },
      field);
  if (time_sign < 0)
    for (auto& c : v) c = -c;
  return v;
}

FlowModel reversed(FlowModel m) {
  m.time_sign = -m.time_sign;
  m.name += "_reversed";
  for (auto& p : m.fixed_points)
    if (p.index >= 0) p.index = static_cast<int>(m.dim) - p.index;
  return m;
}

void validate(const FlowModel& m) {
  if (m.dim == 0) throw std::invalid_argument("flow dimension must be positive");
  if (!(m.speed_bound > 0)) throw std::invalid_argument("speed bound must be positive");
  if (const auto* c = std::get_if<ConstantField>(&m.field)) {
    if (c->omega.size() != m.dim) throw std::invalid_argument("omega has the wrong length");
  } else if (m.dim != 1) {
    throw std::invalid_argument("circle fields need dim 1");
  }
  if (const auto* p = std::get_if<PerturbedOneFormField>(&m.field)) {
    if (!(std::abs(p->kappa) < 1)) throw std::invalid_argument("kappa must satisfy |kappa| < 1");
    if (!(p->epsilon >= 0 && p->epsilon < 1)) throw std::invalid_argument("epsilon must lie in [0, 1)");
    if (!(p->delta > 0)) throw std::invalid_argument("delta must be positive");
  }
  for (const auto& fp : m.fixed_points) {
    if (fp.location.size() != m.dim) throw std::invalid_argument("fixed point has the wrong dimension");
    Vec v = m.velocity(fp.location);
    for (double c : v)
      if (std::abs(c) > 1e-12)
        throw std::invalid_argument("declared fixed point is not a zero of the field (|V| = " +
                                    std::to_string(std::abs(c)) + ")");
  }
}

}  // namespace novikov::flows
