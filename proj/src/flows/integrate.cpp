#include "novikov/flows/integrate.hpp"

#include <cmath>

namespace novikov::flows {

namespace {

Vec axpy(const Vec& x, double a, const Vec& y) {
  Vec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += a * y[i];
  return r;
}

std::string point_string(const Vec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + std::to_string(x[i]);
  return s + ")";
}

}  // namespace

Vec rk4_step(const FlowModel& m, const Vec& x, double h) {
  const Vec k1 = m.velocity(x);
  const Vec k2 = m.velocity(axpy(x, h / 2, k1));
  const Vec k3 = m.velocity(axpy(x, h / 2, k2));
  const Vec k4 = m.velocity(axpy(x, h, k3));
  Vec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

void check_step(const FlowModel& m, const CocycleRep& rep, double dt) {
  if (dt * m.speed_bound > rep.lebesgue_radius())
    throw std::invalid_argument("step " + std::to_string(dt) + " moves up to " +
                                std::to_string(dt * m.speed_bound) + ", beyond the cover's Lebesgue radius " +
                                std::to_string(rep.lebesgue_radius()));
}

Trajectory integrate_flow(const FlowModel& m, const Vec& x0, double T, double dt, const CocycleRep* rep) {
  if (!(dt > 0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive and finite");
  if (!std::isfinite(T)) throw std::invalid_argument("T must be finite");
  if (x0.size() != m.dim) throw std::invalid_argument("initial point has the wrong dimension");
  if (rep) check_step(m, *rep, dt);
  const std::size_t n = static_cast<std::size_t>(std::ceil(std::abs(T) / dt - 1e-12));
  Trajectory tr;
  tr.dt = n == 0 ? 0 : T / double(n);
  tr.samples.reserve(n + 1);
  tr.samples.push_back({0.0, x0});
  Vec x = x0;
  for (std::size_t i = 1; i <= n; ++i) {
    x = rk4_step(m, x, tr.dt);
    tr.samples.push_back({tr.dt * double(i), x});
  }
  return tr;
}

Gain integrate_cocycle(const CocycleRep& rep, const std::vector<Vec>& curve) {
  Gain total;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    auto g = rep.pair_gain(curve[i], curve[i + 1]);
    if (!g)
      throw ChartError("no chart contains the pair " + point_string(curve[i]) + ", " + point_string(curve[i + 1]));
    total += *g;
  }
  return total;
}

Gain integrate_cocycle(const CocycleRep& rep, const Trajectory& tr) {
  Gain total;
  for (std::size_t i = 0; i + 1 < tr.samples.size(); ++i) {
    auto g = rep.pair_gain(tr.samples[i].x, tr.samples[i + 1].x);
    if (!g)
      throw ChartError("no chart contains the samples at t = " + std::to_string(tr.samples[i].t) + " and t = " +
                       std::to_string(tr.samples[i + 1].t));
    total += *g;
  }
  return total;
}

Gain integrate_chain(const FlowModel& m, const CocycleRep& rep, const ChainPath& chain, double dt) {
  if (chain.segments.empty()) return {};
  if (chain.jump_charts.size() + 1 != chain.segments.size() && !chain.jump_charts.empty())
    throw std::invalid_argument("a chain with n segments needs n - 1 jump charts");
  Gain total;
  Vec prev_end;
  for (std::size_t i = 0; i < chain.segments.size(); ++i) {
    const auto& seg = chain.segments[i];
    if (seg.time < chain.min_time)
      throw std::invalid_argument("segment " + std::to_string(i) + " is shorter than the chain time");
    if (i > 0) {
      const int c = chain.jump_charts.empty() ? -1 : chain.jump_charts[i - 1];
      std::optional<Gain> g;
      if (c >= 0) {
        if (static_cast<std::size_t>(c) >= rep.charts().size())
          throw std::invalid_argument("jump " + std::to_string(i - 1) + " names a missing chart");
        g = rep.pair_gain_in(static_cast<std::size_t>(c), prev_end, seg.start);
      } else {
        g = rep.pair_gain(prev_end, seg.start);
      }
      if (!g) throw ChartError("jump " + std::to_string(i - 1) + " does not lie in one chart");
      total += *g;
    }
    Trajectory tr = integrate_flow(m, seg.start, seg.time, dt, &rep);
    total += integrate_cocycle(rep, tr);
    prev_end = tr.end();
  }
  return total;
}

std::vector<Vec> chain_curve(const FlowModel& m, const ChainPath& chain, double dt) {
  std::vector<Vec> out;
  for (const auto& seg : chain.segments) {
    Trajectory tr = integrate_flow(m, seg.start, seg.time, dt);
    for (auto& s : tr.samples) out.push_back(std::move(s.x));
  }
  return out;
}

}  // namespace novikov::flows
