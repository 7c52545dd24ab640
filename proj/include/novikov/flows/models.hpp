#pragma once

#include <string>
#include <vector>

#include "novikov/flows/certify.hpp"
#include "novikov/flows/cocycle.hpp"
#include "novikov/flows/flow_model.hpp"

namespace novikov::flows {

/// A registry entry: flow, cocycle representative and default parameters.
struct BuiltinModel {
  FlowModel model;
  CocycleRep rep;
  AlphaFlowParams params;
  SamplingPlan plan;
  /// Chain-graph defaults: nodes per axis and flow time per edge.
  std::size_t grid = 720;
  double T_edge = 0.5;
};

namespace models {

/// V = -cos(theta): repeller at pi/2, attractor at 3pi/2; four-chart cocycle
/// with loop value 1 (clockwise).
BuiltinModel circle_two_fixed();
/// V = 1 - cos(3 theta): degenerate fixed points at 0, 2pi/3, 4pi/3, all
/// motion anticlockwise.
BuiltinModel circle_three_fixed();
/// omega = (1, golden ratio) on T^2 with the pulled-back two-chart cocycle of
/// the first factor.
BuiltinModel torus_irrational();
/// V = sin(theta), the gradient of f = -cos(theta) with beta = f on two charts.
BuiltinModel gradient_morse();
/// Dual field of (kappa + sin theta) d theta with a cutoff perturbation.
BuiltinModel perturbed_one_form();

/// Two charts |theta| < 5pi/8 and |theta - pi| < 5pi/8; beta steps from 0 to 1
/// at theta = 0 on the first. Loop value 1 anticlockwise.
CocycleRep circle_alpha();

std::vector<std::string> names();
/// Throws std::invalid_argument for an unknown name.
BuiltinModel by_name(const std::string& name);

}  // namespace models

}  // namespace novikov::flows
