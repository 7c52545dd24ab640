#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "novikov/flows/cocycle.hpp"
#include "novikov/flows/flow_model.hpp"

namespace novikov::flows {

struct Sample {
  double t = 0;
  Vec x;
};

/// Time-ordered samples (decreasing times for a backward run).
struct Trajectory {
  std::vector<Sample> samples;
  double dt = 0;

  const Vec& start() const { return samples.front().x; }
  const Vec& end() const { return samples.back().x; }
};

/// Thrown when a step or a jump leaves every chart.
class ChartError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One RK4 step of size h (h may be negative).
Vec rk4_step(const FlowModel& m, const Vec& x, double h);

/// Fixed-step RK4 over [0, T] (T < 0 runs backwards); the step is T / ceil(|T| / dt).
/// With a cocycle, dt * speed_bound must not exceed its Lebesgue radius.
Trajectory integrate_flow(const FlowModel& m, const Vec& x0, double T, double dt,
                          const CocycleRep* rep = nullptr);

/// Throws std::invalid_argument if dt violates the chart precondition.
void check_step(const FlowModel& m, const CocycleRep& rep, double dt);

/// Sum of chart-wise primitive differences over consecutive samples.
Gain integrate_cocycle(const CocycleRep& rep, const std::vector<Vec>& curve);
Gain integrate_cocycle(const CocycleRep& rep, const Trajectory& tr);

struct ChainSegment {
  Vec start;
  double time = 0;
};

/// (U, T)-chain: segments of duration >= min_time joined by jumps. jump_charts[i]
/// names the chart holding (end of segment i, start of segment i+1); -1 lets
/// the integrator pick the first chart that holds the pair.
struct ChainPath {
  std::vector<ChainSegment> segments;
  std::vector<int> jump_charts;
  double min_time = 0;
};

/// Integral of the cocycle along a chain: segment integrals plus jump gains.
Gain integrate_chain(const FlowModel& m, const CocycleRep& rep, const ChainPath& chain, double dt);

/// Concatenated curve of a chain (segments joined at the jumps).
std::vector<Vec> chain_curve(const FlowModel& m, const ChainPath& chain, double dt);

}  // namespace novikov::flows
