#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/flows/cocycle.hpp"
#include "novikov/flows/flow_model.hpp"

namespace novikov::flows {

struct GraphEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Gain gain;
};

/// Grid cells of T^m (n per axis) with flow and jump edges. Node i has
/// multi-index (i % n, (i / n) % n, ...); cell k on an axis is [k h, (k+1) h).
struct ChainGraph {
  std::size_t dim = 1;
  std::size_t n = 0;
  double T_edge = 0;
  std::vector<Vec> centers;
  std::vector<GraphEdge> flow_edges;
  std::vector<GraphEdge> jump_edges;
  std::int64_t step_denominator = 1;

  std::size_t size() const { return centers.size(); }
  double cell_width() const { return kTwoPi / double(n); }
  double value(const Gain& g) const { return double(g.steps) / double(step_denominator) + g.smooth; }
  /// Node whose cell contains x.
  std::size_t node_of(const Vec& x) const;
};

/// Flow edges run from each node to every cell meeting the bounding box of the
/// time-T_edge images of its corners and center; the gain is the cocycle along
/// the center trajectory plus the jump from its endpoint to the target center.
/// Jump edges join axis neighbours. Throws std::invalid_argument when the grid
/// is too coarse for the charts or T_edge <= 0.
ChainGraph build_chain_graph(const FlowModel& m, const CocycleRep& rep, std::size_t n_per_axis, double T_edge,
                             double dt = 0.01);

/// One chain step: a flow edge, optionally followed by one jump edge.
std::vector<GraphEdge> step_edges(const ChainGraph& g);

struct CycleWitness {
  std::vector<std::size_t> nodes;  // closed: front() == back()
  Gain gain;
  double value = 0;
  /// Times the cycle is traversed to reach the threshold.
  std::size_t repetitions = 1;
};

struct Detection {
  bool gradient_like = true;
  std::optional<CycleWitness> cycle;
  /// Largest |cycle gain| seen; 0 when every cycle has zero gain.
  double max_cycle_gain = 0;
  /// Largest |gain| over all step paths (only when gradient_like).
  double path_gain_bound = 0;
  double threshold = 0.5;
};

std::string verdict_name(const Detection& d);

/// Searches the step graph for a cycle of nonzero gain.
Detection detect_gradient_like(const ChainGraph& g, double gain_threshold = 0.5);

struct RecurrentComponent {
  std::vector<std::size_t> nodes;
  /// False for a fixed-point cell that is not inside a recurrent class.
  bool recurrent = true;
};

struct ComponentReport {
  std::vector<RecurrentComponent> components;
  /// (lower, upper): the upper component reaches the lower one.
  std::vector<std::pair<std::size_t, std::size_t>> order;
};

/// Strongly connected classes of the step graph with an internal edge, plus
/// cells holding declared fixed points that no such class contains.
ComponentReport chain_recurrent_components(const ChainGraph& g, const FlowModel& m);

struct PiMorseEntry {
  std::string kind;  // "component" or "fixed_point"
  std::size_t index = 0;
  std::size_t size = 0;
  double internal_gain = 0;
  bool pi_stable = true;
};

struct PiMorseReport {
  std::vector<PiMorseEntry> entries;
  std::size_t stable_count = 0;
};

/// Internal cycle gains of each recurrent component and of each fixed point.
PiMorseReport pi_morse_report(const ChainGraph& g, const FlowModel& m, double tolerance = 1e-7);

}  // namespace novikov::flows
