#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/flows/cocycle.hpp"
#include "novikov/flows/flow_model.hpp"

namespace novikov::flows {

struct AlphaFlowParams {
  double r = 0.1;
  double rho = 1;
  double lambda = 0;
  double T0 = 1;
};

/// Throws std::invalid_argument unless r, rho, T0 > 0 and 0 <= lambda < 1.
void validate(const AlphaFlowParams& p);

struct SamplingPlan {
  std::size_t seeds = 200;
  std::uint64_t rng_seed = 1;
  /// Longest integration time in each direction.
  double T_max = 60;
  double dt = 0.01;
  /// Grid points per axis when sampling a fixed-point ball.
  std::size_t ball_samples = 64;
  /// Fewer trajectory checks than this raises LOW_COVERAGE.
  std::size_t min_checks = 100;
};

enum class Verdict { CertifiedOnSamples, Refuted };

struct ConditionReport {
  int id = 0;
  bool checked = false;
  bool holds = true;
  std::size_t checks = 0;
  /// Worst observed quantity: oscillation for (2), least integral for (3)/(4).
  std::optional<double> extreme;
};

struct CertWitness {
  int condition = 0;
  Vec point;
  double t_begin = 0;
  double t_end = 0;
  double value = 0;
  std::string detail;
};

struct CertReport {
  Verdict verdict = Verdict::CertifiedOnSamples;
  std::vector<ConditionReport> conditions;  // ids 1..4
  std::optional<CertWitness> witness;
  bool low_coverage = false;
  bool fixed_point_free = false;
  /// Trajectories classified as Gamma_1, Gamma_2, Gamma_3.
  std::size_t gamma_counts[3] = {0, 0, 0};
  std::size_t seeds_in_balls = 0;
};

std::string to_string(Verdict v);

/// Sample-based check of the alpha-flow conditions. A REFUTED verdict comes
/// with the first failing witness.
CertReport certify_alpha_flow(const FlowModel& m, const CocycleRep& rep, const AlphaFlowParams& params,
                              const SamplingPlan& plan);

}  // namespace novikov::flows
