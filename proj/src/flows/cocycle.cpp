#include "novikov/flows/cocycle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace novikov::flows {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Gain eval_primitive(const Primitive1D& p, double u, double theta) {
  if (const auto* s = std::get_if<StepPrimitive>(&p)) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < s->breaks.size(); ++i)
      if (u > s->breaks[i] || (u == s->breaks[i] && s->closed_right[i])) idx = i + 1;
    return {s->values[idx], 0.0};
  }
  if (const auto* f = std::get_if<SmoothPrimitive>(&p))
    return {0, f->slope * u + f->cos_coef * std::cos(theta) + f->sin_coef * std::sin(theta) + f->offset};
  return {};
}

double primitive_bound(const Primitive1D& p, const Arc& arc, std::int64_t den) {
  if (const auto* s = std::get_if<StepPrimitive>(&p)) {
    std::int64_t m = 0;
    for (auto v : s->values) m = std::max(m, v < 0 ? -v : v);
    return double(m) / double(den);
  }
  if (const auto* f = std::get_if<SmoothPrimitive>(&p))
    return std::abs(f->slope) * std::min(arc.half_width, kPi) + std::hypot(f->cos_coef, f->sin_coef) +
           std::abs(f->offset);
  return 0;
}

void check_primitive(const Primitive1D& p, std::size_t chart, std::size_t d) {
  const auto* s = std::get_if<StepPrimitive>(&p);
  if (!s) return;
  const std::string where = "chart " + std::to_string(chart) + " coordinate " + std::to_string(d);
  if (s->values.size() != s->breaks.size() + 1)
    throw std::invalid_argument(where + ": a step primitive needs one more value than breaks");
  if (s->closed_right.size() != s->breaks.size())
    throw std::invalid_argument(where + ": closed_right needs one flag per break");
  if (!std::is_sorted(s->breaks.begin(), s->breaks.end()))
    throw std::invalid_argument(where + ": breaks must be increasing");
}

}  // namespace

bool Arc::contains(double theta) const { return full() || std::abs(wrap_signed(theta - center)) < half_width; }

double Arc::depth(double theta) const {
  if (full()) return kInf;
  return half_width - std::abs(wrap_signed(theta - center));
}

CocycleRep::CocycleRep(std::size_t dim, std::vector<Chart> charts, std::int64_t step_denominator,
                       std::vector<int> weights)
    : dim_(dim), charts_(std::move(charts)), den_(step_denominator), weights_(std::move(weights)) {
  if (dim_ == 0) throw std::invalid_argument("cocycle dimension must be positive");
  if (den_ <= 0) throw std::invalid_argument("step denominator must be positive");
  if (charts_.empty()) throw std::invalid_argument("cocycle has no charts");
  for (std::size_t c = 0; c < charts_.size(); ++c) {
    auto& ch = charts_[c];
    if (ch.region.size() != dim_)
      throw std::invalid_argument("chart " + std::to_string(c) + " has " + std::to_string(ch.region.size()) +
                                  " arcs, expected " + std::to_string(dim_));
    if (ch.beta.empty()) ch.beta.assign(dim_, std::monostate{});
    if (ch.beta.size() != dim_)
      throw std::invalid_argument("chart " + std::to_string(c) + " needs one primitive per coordinate");
    double b = 0;
    for (std::size_t d = 0; d < dim_; ++d) {
      if (!(ch.region[d].half_width > 0))
        throw std::invalid_argument("chart " + std::to_string(c) + " has an empty arc");
      if (ch.region[d].full()) {
        const auto* sm = std::get_if<SmoothPrimitive>(&ch.beta[d]);
        if (std::holds_alternative<StepPrimitive>(ch.beta[d]) || (sm && sm->slope != 0))
          throw std::invalid_argument("chart " + std::to_string(c) + " coordinate " + std::to_string(d) +
                                      ": a full circle needs a periodic primitive");
      }
      check_primitive(ch.beta[d], c, d);
      b += primitive_bound(ch.beta[d], ch.region[d], den_);
    }
    bound_ = std::max(bound_, b);
  }

  // Sample the space: the depth function is 1-Lipschitz, so the minimum over a
  // grid of spacing h, less h / 2, bounds the Lebesgue radius from below.
  std::size_t n = 16;
  while (true) {
    double total = 1;
    for (std::size_t d = 0; d < dim_; ++d) total *= double(n * 2);
    if (total > 70000) break;
    n *= 2;
  }
  const double h = kTwoPi / double(n);
  std::size_t total = 1;
  for (std::size_t d = 0; d < dim_; ++d) total *= n;
  double worst = kInf;
  Vec x(dim_);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t d = 0; d < dim_; ++d) {
      x[d] = double(rest % n) * h;
      rest /= n;
    }
    double best = -kInf;
    for (const auto& ch : charts_) {
      double depth = kInf;
      for (std::size_t d = 0; d < dim_; ++d) depth = std::min(depth, ch.region[d].depth(x[d]));
      best = std::max(best, depth);
    }
    worst = std::min(worst, best);
  }
  lebesgue_ = std::min(worst, kPi) - h / 2;
  if (!(lebesgue_ > 0)) throw std::invalid_argument("charts do not cover the space");

  // Primitives of overlapping charts may differ only by a locally constant
  // amount: check along grid edges inside pairwise overlaps.
  for (std::size_t i = 0; i < charts_.size(); ++i)
    for (std::size_t j = i + 1; j < charts_.size(); ++j)
      for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        for (std::size_t d = 0; d < dim_; ++d) {
          x[d] = double(rest % n) * h + h / 3;
          rest /= n;
        }
        for (std::size_t d = 0; d < dim_; ++d) {
          Vec y = x;
          y[d] += h;
          auto gi = pair_gain_in(i, x, y);
          auto gj = pair_gain_in(j, x, y);
          if (!gi || !gj) continue;
          Gain diff = *gi - *gj;
          if (diff.steps != 0 || std::abs(diff.smooth) > 1e-9 * (1 + bound_))
            throw std::invalid_argument("charts " + std::to_string(i) + " and " + std::to_string(j) +
                                        " have primitives that do not differ by a constant near x = " +
                                        std::to_string(x[0]));
        }
      }
}

bool CocycleRep::chart_contains(std::size_t chart, const Vec& x) const {
  const auto& ch = charts_[chart];
  for (std::size_t d = 0; d < dim_; ++d)
    if (!ch.region[d].contains(x[d])) return false;
  return true;
}

std::optional<std::size_t> CocycleRep::common_chart(const Vec& x, const Vec& y) const {
  for (std::size_t c = 0; c < charts_.size(); ++c)
    if (pair_gain_in(c, x, y)) return c;
  return std::nullopt;
}

Gain CocycleRep::beta(std::size_t chart, const Vec& x) const {
  const auto& ch = charts_[chart];
  Gain g;
  for (std::size_t d = 0; d < dim_; ++d) {
    const double u = wrap_signed(x[d] - ch.region[d].center);
    g += eval_primitive(ch.beta[d], u, ch.region[d].center + u);
  }
  return g;
}

std::optional<Gain> CocycleRep::pair_gain_in(std::size_t chart, const Vec& x, const Vec& y) const {
  // The chart must contain the short segment from x to y; the endpoint's
  // local coordinate is reached along that segment.
  const auto& ch = charts_[chart];
  Gain g;
  for (std::size_t d = 0; d < dim_; ++d) {
    const Arc& arc = ch.region[d];
    const double ux = wrap_signed(x[d] - arc.center);
    // Proper arcs: take y's own coordinate so neighbouring segments agree
    // exactly at a shared sample.
    const double uy = arc.full() ? ux + wrap_signed(y[d] - x[d]) : wrap_signed(y[d] - arc.center);
    if (!arc.full() && (std::abs(ux) >= arc.half_width || std::abs(uy) >= arc.half_width)) return std::nullopt;
    g += eval_primitive(ch.beta[d], uy, arc.center + uy);
    g -= eval_primitive(ch.beta[d], ux, arc.center + ux);
  }
  return g;
}

std::optional<Gain> CocycleRep::pair_gain(const Vec& x, const Vec& y) const {
  for (std::size_t c = 0; c < charts_.size(); ++c)
    if (auto g = pair_gain_in(c, x, y)) return g;
  return std::nullopt;
}

}  // namespace novikov::flows
