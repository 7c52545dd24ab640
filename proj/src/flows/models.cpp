#include "novikov/flows/models.hpp"

#include <stdexcept>

namespace novikov::flows::models {

namespace {

Chart circle_chart(double center, double half_width, Primitive1D beta = std::monostate{}) {
  return {{Arc{center, half_width}}, {std::move(beta)}};
}

StepPrimitive step_at_zero(std::int64_t left, std::int64_t right, bool closed_right) {
  return {{0.0}, {left, right}, {closed_right}};
}

}  // namespace

BuiltinModel circle_two_fixed() {
  const double r = kPi / 16;
  BuiltinModel b;
  b.model.name = "circle_two_fixed";
  b.model.field = FourierCircleField{0, {-1}, {}};
  b.model.fixed_points = {{{kPi / 2}, 1, "repeller"}, {{3 * kPi / 2}, 0, "attractor"}};
  b.model.speed_bound = 1;
  b.rep = CocycleRep(1,
                     {circle_chart(kPi / 2, 2 * r), circle_chart(3 * kPi / 2, 2 * r),
                      circle_chart(kPi, kPi / 2 - r, step_at_zero(0, 1, true)),
                      circle_chart(0, kPi / 2 - r, step_at_zero(2, 0, false))},
                     1, {1});
  b.params = {r, 1, 0, 1};
  b.plan.T_max = 40;
  return b;
}

BuiltinModel circle_three_fixed() {
  BuiltinModel b;
  b.model.name = "circle_three_fixed";
  b.model.field = FourierCircleField{1, {0, 0, -1}, {}};
  for (int i = 0; i < 3; ++i) b.model.fixed_points.push_back({{2 * kPi * i / 3}, -1, "degenerate"});
  b.model.speed_bound = 2;
  std::vector<Chart> charts;
  for (int i = 0; i < 3; ++i) charts.push_back(circle_chart(kPi / 3 + 2 * kPi * i / 3, kPi / 2, step_at_zero(0, 1, true)));
  b.rep = CocycleRep(1, std::move(charts), 3, {1});
  b.params = {0.1, 1.0 / 3, 0, 1};
  b.plan.T_max = 120;
  return b;
}

BuiltinModel torus_irrational() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  BuiltinModel b;
  b.model.name = "torus_irrational";
  b.model.dim = 2;
  b.model.field = ConstantField{{1, phi}};
  b.model.speed_bound = phi;
  const Arc full{0, kPi};
  b.rep = CocycleRep(2,
                     {{{Arc{0, 5 * kPi / 8}, full}, {step_at_zero(0, 1, true), std::monostate{}}},
                      {{Arc{kPi, 5 * kPi / 8}, full}, {}}},
                     1, {1, 0});
  b.params = {0.1, 1, 0, 4 * kPi};
  b.plan.T_max = 30;
  b.grid = 32;
  return b;
}

BuiltinModel gradient_morse() {
  BuiltinModel b;
  b.model.name = "gradient_morse";
  b.model.field = FourierCircleField{0, {}, {1}};
  b.model.fixed_points = {{{0}, 1, "maximum of -f"}, {{kPi}, 0, "minimum of -f"}};
  b.model.speed_bound = 1;
  const SmoothPrimitive f{0, -1, 0, 0};
  b.rep = CocycleRep(1, {circle_chart(kPi / 2, 3 * kPi / 4, f), circle_chart(3 * kPi / 2, 3 * kPi / 4, f)}, 1, {0});
  b.params = {0.5, 1, 0.5, 1};
  b.plan.T_max = 40;
  return b;
}

BuiltinModel perturbed_one_form() {
  const PerturbedOneFormField field{0.5, 0.5, 0.2};
  BuiltinModel b;
  b.model.name = "perturbed_one_form";
  b.model.field = field;
  b.model.fixed_points = {{{7 * kPi / 6}, 0, "attractor"}, {{11 * kPi / 6}, 1, "repeller"}};
  b.model.speed_bound = (1 + field.kappa) * (1 + field.epsilon);
  std::vector<Chart> charts;
  for (int i = 0; i < 3; ++i)
    charts.push_back(circle_chart(2 * kPi * i / 3, kPi / 2, SmoothPrimitive{field.kappa, -1, 0, 0}));
  b.rep = CocycleRep(1, std::move(charts), 1, {1});
  b.params = {0.3, 0.5, 0.5, 2};
  b.plan.T_max = 40;
  return b;
}

CocycleRep circle_alpha() {
  return CocycleRep(1, {circle_chart(0, 5 * kPi / 8, step_at_zero(0, 1, true)), circle_chart(kPi, 5 * kPi / 8)}, 1, {1});
}

std::vector<std::string> names() {
  return {"circle_two_fixed", "circle_three_fixed", "torus_irrational", "gradient_morse", "perturbed_one_form"};
}

BuiltinModel by_name(const std::string& name) {
  if (name == "circle_two_fixed") return circle_two_fixed();
  if (name == "circle_three_fixed") return circle_three_fixed();
  if (name == "torus_irrational") return torus_irrational();
  if (name == "gradient_morse") return gradient_morse();
  if (name == "perturbed_one_form") return perturbed_one_form();
  throw std::invalid_argument("unknown model '" + name + "'");
}

}  // namespace novikov::flows::models
