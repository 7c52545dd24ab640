#include "novikov/flows/certify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "novikov/flows/integrate.hpp"

namespace novikov::flows {

namespace {

constexpr double kTol = 1e-9;

std::optional<std::size_t> ball_of(const FlowModel& m, const Vec& x, double r) {
  for (std::size_t i = 0; i < m.fixed_points.size(); ++i)
    if (torus_distance(x, m.fixed_points[i].location) < r) return i;
  return std::nullopt;
}

// Integrates until the point enters a ball or |t| reaches T_max.
struct Run {
  std::vector<Sample> samples;
  bool hit = false;
};

Run run_until_ball(const FlowModel& m, const Vec& x0, double sign, const AlphaFlowParams& p,
                   const SamplingPlan& plan) {
  Run run;
  run.samples.push_back({0.0, x0});
  Vec x = x0;
  const std::size_t steps = static_cast<std::size_t>(std::ceil(plan.T_max / plan.dt));
  for (std::size_t i = 1; i <= steps; ++i) {
    x = rk4_step(m, x, sign * plan.dt);
    run.samples.push_back({sign * plan.dt * double(i), x});
    if (ball_of(m, x, p.r)) {
      run.hit = true;
      break;
    }
  }
  return run;
}

void fail(CertReport& rep, ConditionReport& c, CertWitness w) {
  c.holds = false;
  if (!rep.witness) rep.witness = std::move(w);
}

void note_min(ConditionReport& c, double v) { c.extreme = c.extreme ? std::min(*c.extreme, v) : v; }

}  // namespace

void validate(const AlphaFlowParams& p) {
  if (!(p.r > 0)) throw std::invalid_argument("r must be positive");
  if (!(p.rho > 0)) throw std::invalid_argument("rho must be positive");
  if (!(p.T0 > 0)) throw std::invalid_argument("T0 must be positive");
  if (!(p.lambda >= 0 && p.lambda < 1)) throw std::invalid_argument("lambda must lie in [0, 1)");
}

std::string to_string(Verdict v) { return v == Verdict::CertifiedOnSamples ? "CERTIFIED_ON_SAMPLES" : "REFUTED"; }

CertReport certify_alpha_flow(const FlowModel& m, const CocycleRep& rep, const AlphaFlowParams& params,
                              const SamplingPlan& plan) {
  validate(m);
  validate(params);
  if (rep.dim() != m.dim) throw std::invalid_argument("cocycle and flow live on different spaces");
  if (plan.seeds == 0) throw std::invalid_argument("the plan needs at least one seed");
  check_step(m, rep, plan.dt);

  CertReport out;
  out.fixed_point_free = m.fixed_point_free();
  for (int id = 1; id <= 4; ++id) out.conditions.push_back({id, false, true, 0, std::nullopt});
  auto& c1 = out.conditions[0];
  auto& c2 = out.conditions[1];
  auto& c3 = out.conditions[2];
  auto& c4 = out.conditions[3];
  const double threshold = params.rho * (1 - kTol);

  if (!out.fixed_point_free) {
    c1.checked = c2.checked = c3.checked = true;
    const std::size_t n = std::max<std::size_t>(plan.ball_samples, 2);
    std::size_t per_ball = 1;
    for (std::size_t d = 0; d < m.dim; ++d) per_ball *= n;
    for (std::size_t i = 0; i < m.fixed_points.size(); ++i) {
      const Vec& p = m.fixed_points[i].location;
      double lo = 0, hi = 0;
      for (std::size_t idx = 0; idx < per_ball; ++idx) {
        Vec x = p;
        std::size_t rest = idx;
        bool at_center = true;
        for (std::size_t d = 0; d < m.dim; ++d) {
          const double off = params.r * (2 * double(rest % n) / double(n - 1) - 1) * (1 - 1e-9);
          rest /= n;
          x[d] += off;
          if (std::abs(off) > params.r / double(n)) at_center = false;
        }
        // (1): no other zero of the field in the ball.
        ++c1.checks;
        if (!at_center) {
          Vec v = m.velocity(x);
          double speed = 0;
          for (double c : v) speed = std::max(speed, std::abs(c));
          if (speed <= 1e-12)
            fail(out, c1, {1, x, 0, 0, speed, "second zero of the field in the ball around fixed point " +
                                                  std::to_string(i)});
        }
        if (auto j = ball_of(m, x, params.r); j && *j != i)
          fail(out, c1, {1, x, 0, 0, 0, "balls around fixed points " + std::to_string(i) + " and " +
                                            std::to_string(*j) + " overlap"});
        // (2): oscillation of the local primitive over the ball.
        ++c2.checks;
        auto g = rep.pair_gain(p, x);
        if (!g) {
          fail(out, c2, {2, x, 0, 0, 0, "ball around fixed point " + std::to_string(i) + " is not inside one chart"});
          continue;
        }
        const double v = rep.value(*g);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      const double osc = hi - lo;
      c2.extreme = c2.extreme ? std::max(*c2.extreme, osc) : osc;
      if (osc > params.lambda * params.rho + kTol)
        fail(out, c2, {2, p, 0, 0, osc, "oscillation " + std::to_string(osc) + " exceeds lambda * rho around fixed point " +
                                            std::to_string(i)});
    }
  }
  c4.checked = true;

  std::mt19937_64 rng(plan.rng_seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (std::size_t s = 0; s < plan.seeds; ++s) {
    Vec x0(m.dim);
    for (auto& c : x0) c = angle(rng);
    if (ball_of(m, x0, params.r)) {
      ++out.seeds_in_balls;
      continue;
    }
    Run fwd = run_until_ball(m, x0, 1.0, params, plan);
    Run bwd = run_until_ball(m, x0, -1.0, params, plan);
    std::vector<Sample> path(bwd.samples.rbegin(), bwd.samples.rend());
    path.insert(path.end(), fwd.samples.begin() + 1, fwd.samples.end());

    std::vector<Gain> cum(path.size());
    for (std::size_t i = 1; i < path.size(); ++i) {
      auto g = rep.pair_gain(path[i - 1].x, path[i].x);
      if (!g) throw ChartError("trajectory step leaves every chart near t = " + std::to_string(path[i].t));
      cum[i] = cum[i - 1] + *g;
    }

    if (fwd.hit && bwd.hit) {
      ++out.gamma_counts[0];
      ++c3.checks;
      const double v = rep.value(cum.back());
      note_min(c3, v);
      if (v < threshold)
        fail(out, c3, {3, x0, path.front().t, path.back().t, v,
                       "trajectory between fixed-point balls integrates to " + std::to_string(v)});
      continue;
    }
    ++out.gamma_counts[(fwd.hit || bwd.hit) ? 1 : 2];
    const std::size_t k = static_cast<std::size_t>(std::ceil(params.T0 / plan.dt - 1e-9));
    for (std::size_t i = 0; i + k < path.size(); ++i) {
      ++c4.checks;
      const double v = rep.value(cum[i + k] - cum[i]);
      note_min(c4, v);
      if (v < threshold) {
        fail(out, c4, {4, path[i].x, path[i].t, path[i + k].t, v,
                       "window of duration T0 integrates to " + std::to_string(v)});
        break;
      }
    }
  }

  for (const auto& c : out.conditions)
    if (!c.holds) out.verdict = Verdict::Refuted;
  out.low_coverage = c3.checks + c4.checks < plan.min_checks;
  return out;
}

}  // namespace novikov::flows
