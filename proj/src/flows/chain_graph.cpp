#include "novikov/flows/chain_graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <stdexcept>

#include "novikov/flows/integrate.hpp"

namespace novikov::flows {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> multi_index(std::size_t node, std::size_t n, std::size_t dim) {
  std::vector<std::size_t> k(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    k[d] = node % n;
    node /= n;
  }
  return k;
}

std::size_t linear_index(const std::vector<std::size_t>& k, std::size_t n) {
  std::size_t node = 0;
  for (std::size_t d = k.size(); d-- > 0;) node = node * n + k[d];
  return node;
}

std::size_t wrap_index(long long k, std::size_t n) {
  const long long m = static_cast<long long>(n);
  return static_cast<std::size_t>(((k % m) + m) % m);
}

// Step graph with its strongly connected classes.
struct Analysis {
  std::vector<GraphEdge> edges;
  std::vector<std::vector<std::size_t>> out, in;  // edge ids
  std::vector<std::size_t> comp;                 // node -> class
  std::vector<std::vector<std::size_t>> members;  // class -> nodes
  std::vector<bool> internal;                     // class has an internal edge
};

Analysis analyze(const ChainGraph& g) {
  Analysis a;
  a.edges = step_edges(g);
  const std::size_t N = g.size();
  a.out.assign(N, {});
  a.in.assign(N, {});
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    a.out[a.edges[e].from].push_back(e);
    a.in[a.edges[e].to].push_back(e);
  }

  // Kosaraju: finishing order on the graph, then sweeps on the reverse.
  std::vector<std::size_t> order;
  order.reserve(N);
  std::vector<bool> seen(N, false);
  for (std::size_t s = 0; s < N; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = true;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < a.out[v].size()) {
        const std::size_t w = a.edges[a.out[v][i++]].to;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back({w, 0});
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  a.comp.assign(N, none);
  for (std::size_t idx = N; idx-- > 0;) {
    const std::size_t s = order[idx];
    if (a.comp[s] != none) continue;
    const std::size_t c = a.members.size();
    a.members.push_back({});
    std::vector<std::size_t> stack{s};
    a.comp[s] = c;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      a.members[c].push_back(v);
      for (std::size_t e : a.in[v]) {
        const std::size_t w = a.edges[e].from;
        if (a.comp[w] == none) {
          a.comp[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(a.members[c].begin(), a.members[c].end());
  }
  a.internal.assign(a.members.size(), false);
  for (const auto& e : a.edges)
    if (a.comp[e.from] == a.comp[e.to]) a.internal[a.comp[e.from]] = true;
  return a;
}

bool mismatch(const Gain& d, double tol) { return d.steps != 0 || std::abs(d.smooth) > tol; }

// Gain potential of one class from out- and in-trees at its smallest node.
// Returns a cycle of nonzero gain if the class has one.
struct Potential {
  std::map<std::size_t, Gain> phi;  // root -> v along the out-tree
  std::optional<CycleWitness> cycle;
};

Potential class_potential(const ChainGraph& g, const Analysis& a, std::size_t c, double tol) {
  Potential p;
  const std::size_t root = a.members[c].front();
  std::map<std::size_t, std::size_t> out_parent, in_next;  // node -> edge id
  std::map<std::size_t, Gain> psi;                          // v -> root along the in-tree
  p.phi[root] = {};
  psi[root] = {};
  std::queue<std::size_t> q;
  q.push(root);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t e : a.out[v]) {
      const auto& ed = a.edges[e];
      if (a.comp[ed.to] != c || p.phi.count(ed.to)) continue;
      p.phi[ed.to] = p.phi[v] + ed.gain;
      out_parent[ed.to] = e;
      q.push(ed.to);
    }
  }
  q.push(root);
  while (!q.empty()) {
    const std::size_t v = q.front();
    q.pop();
    for (std::size_t e : a.in[v]) {
      const auto& ed = a.edges[e];
      if (a.comp[ed.from] != c || psi.count(ed.from)) continue;
      psi[ed.from] = ed.gain + psi[v];
      in_next[ed.from] = e;
      q.push(ed.from);
    }
  }

  auto out_path = [&](std::size_t v) {
    std::vector<std::size_t> path{v};
    while (v != root) {
      v = a.edges[out_parent.at(v)].from;
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  auto in_path = [&](std::size_t v) {
    std::vector<std::size_t> path{v};
    while (v != root) {
      v = a.edges[in_next.at(v)].to;
      path.push_back(v);
    }
    return path;
  };

  for (std::size_t v : a.members[c])
    for (std::size_t e : a.out[v]) {
      const auto& ed = a.edges[e];
      if (a.comp[ed.to] != c) continue;
      if (!mismatch(p.phi[ed.from] + ed.gain - p.phi[ed.to], tol)) continue;
      // Two cycles through the root whose gains differ by the mismatch.
      CycleWitness c1, c2;
      c1.nodes = out_path(ed.from);
      for (std::size_t w : in_path(ed.to)) c1.nodes.push_back(w);
      c1.gain = p.phi[ed.from] + ed.gain + psi[ed.to];
      c2.nodes = out_path(ed.to);
      auto back = in_path(ed.to);
      c2.nodes.insert(c2.nodes.end(), back.begin() + 1, back.end());
      c2.gain = p.phi[ed.to] + psi[ed.to];
      c1.value = g.value(c1.gain);
      c2.value = g.value(c2.gain);
      p.cycle = std::abs(c1.value) >= std::abs(c2.value) ? c1 : c2;
      return p;
    }
  return p;
}

double edge_tolerance(const ChainGraph& g, double tol) { return tol * double(1 + g.size()); }

}  // namespace

std::size_t ChainGraph::node_of(const Vec& x) const {
  std::vector<std::size_t> k(dim);
  for (std::size_t d = 0; d < dim; ++d)
    k[d] = std::min(n - 1, static_cast<std::size_t>(wrap_positive(x[d]) / cell_width()));
  return linear_index(k, n);
}

ChainGraph build_chain_graph(const FlowModel& m, const CocycleRep& rep, std::size_t n_per_axis, double T_edge,
                             double dt) {
  validate(m);
  if (rep.dim() != m.dim) throw std::invalid_argument("cocycle and flow live on different spaces");
  if (n_per_axis < 3) throw std::invalid_argument("grid needs at least 3 cells per axis");
  if (!(T_edge > 0) || !std::isfinite(T_edge)) throw std::invalid_argument("T_edge must be positive");
  ChainGraph g;
  g.dim = m.dim;
  g.n = n_per_axis;
  g.T_edge = T_edge;
  g.step_denominator = rep.step_denominator();
  const double h = g.cell_width();
  if (h >= rep.lebesgue_radius())
    throw std::invalid_argument("grid spacing " + std::to_string(h) + " is too coarse for the cover (Lebesgue radius " +
                                std::to_string(rep.lebesgue_radius()) + ")");
  std::size_t N = 1;
  for (std::size_t d = 0; d < g.dim; ++d) {
    if (N > 4000000 / n_per_axis) throw std::invalid_argument("grid is too large");
    N *= n_per_axis;
  }
  g.centers.resize(N);
  for (std::size_t v = 0; v < N; ++v) {
    auto k = multi_index(v, g.n, g.dim);
    g.centers[v].resize(g.dim);
    for (std::size_t d = 0; d < g.dim; ++d) g.centers[v][d] = (double(k[d]) + 0.5) * h;
  }

  auto pair = [&](const Vec& x, const Vec& y) {
    auto gain = rep.pair_gain(x, y);
    if (!gain) throw std::invalid_argument("grid is too coarse: a graph step leaves every chart");
    return *gain;
  };

  const std::size_t corners = std::size_t{1} << g.dim;
  for (std::size_t u = 0; u < N; ++u) {
    const Trajectory tr = integrate_flow(m, g.centers[u], T_edge, dt, &rep);
    const Gain along = integrate_cocycle(rep, tr);
    const Vec& y = tr.end();
    Vec lo = y, hi = y;
    for (std::size_t c = 0; c < corners; ++c) {
      Vec x = g.centers[u];
      for (std::size_t d = 0; d < g.dim; ++d) x[d] += ((c >> d) & 1 ? 0.5 : -0.5) * h;
      const Vec z = integrate_flow(m, x, T_edge, dt).end();
      for (std::size_t d = 0; d < g.dim; ++d) {
        const double lift = y[d] + wrap_signed(z[d] - y[d]);
        lo[d] = std::min(lo[d], lift);
        hi[d] = std::max(hi[d], lift);
      }
    }
    // Target cells per axis, then their product.
    std::vector<std::vector<std::size_t>> axis(g.dim);
    for (std::size_t d = 0; d < g.dim; ++d) {
      const long long k0 = static_cast<long long>(std::floor(lo[d] / h));
      const long long k1 = static_cast<long long>(std::floor(hi[d] / h));
      if (k1 - k0 + 1 >= static_cast<long long>(g.n)) {
        for (std::size_t k = 0; k < g.n; ++k) axis[d].push_back(k);
      } else {
        for (long long k = k0; k <= k1; ++k) axis[d].push_back(wrap_index(k, g.n));
      }
    }
    std::vector<std::size_t> pick(g.dim, 0), k(g.dim);
    while (true) {
      for (std::size_t d = 0; d < g.dim; ++d) k[d] = axis[d][pick[d]];
      const std::size_t v = linear_index(k, g.n);
      g.flow_edges.push_back({u, v, along + pair(y, g.centers[v])});
      std::size_t d = 0;
      while (d < g.dim && ++pick[d] == axis[d].size()) pick[d++] = 0;
      if (d == g.dim) break;
    }

    auto ku = multi_index(u, g.n, g.dim);
    for (std::size_t d = 0; d < g.dim; ++d)
      for (long long step : {-1LL, 1LL}) {
        auto kw = ku;
        kw[d] = wrap_index(static_cast<long long>(ku[d]) + step, g.n);
        const std::size_t w = linear_index(kw, g.n);
        g.jump_edges.push_back({u, w, pair(g.centers[u], g.centers[w])});
      }
  }
  return g;
}

std::vector<GraphEdge> step_edges(const ChainGraph& g) {
  std::vector<std::vector<std::size_t>> jumps(g.size());
  for (std::size_t e = 0; e < g.jump_edges.size(); ++e) jumps[g.jump_edges[e].from].push_back(e);
  std::vector<GraphEdge> out;
  out.reserve(g.flow_edges.size() * (1 + 2 * g.dim));
  for (const auto& f : g.flow_edges) {
    out.push_back(f);
    for (std::size_t e : jumps[f.to]) {
      const auto& j = g.jump_edges[e];
      out.push_back({f.from, j.to, f.gain + j.gain});
    }
  }
  return out;
}

std::string verdict_name(const Detection& d) { return d.gradient_like ? "GRADIENT_LIKE_EVIDENCE" : "NOT_GRADIENT_LIKE"; }

Detection detect_gradient_like(const ChainGraph& g, double gain_threshold) {
  if (!(gain_threshold > 0)) throw std::invalid_argument("gain threshold must be positive");
  Detection det;
  det.threshold = gain_threshold;
  const Analysis a = analyze(g);
  const double tol = edge_tolerance(g, 1e-9);

  std::vector<Potential> pots(a.members.size());
  for (std::size_t c = 0; c < a.members.size(); ++c) {
    if (!a.internal[c]) {
      pots[c].phi[a.members[c].front()] = {};
      continue;
    }
    pots[c] = class_potential(g, a, c, tol);
    if (pots[c].cycle && std::abs(pots[c].cycle->value) > det.max_cycle_gain) {
      det.max_cycle_gain = std::abs(pots[c].cycle->value);
      det.cycle = pots[c].cycle;
    }
  }
  if (det.cycle) {
    det.gradient_like = false;
    auto& cyc = *det.cycle;
    cyc.repetitions = static_cast<std::size_t>(std::ceil(gain_threshold / std::abs(cyc.value) - 1e-12));
    cyc.repetitions = std::max<std::size_t>(cyc.repetitions, 1);
    return det;
  }

  // Every class has a consistent potential phi; a path entering class C and
  // ending at v gains K(C) + phi(v). Classes are processed in topological order.
  const std::size_t C = a.members.size();
  std::vector<std::size_t> indeg(C, 0);
  std::vector<std::vector<std::size_t>> cross(C);  // edge ids leaving a class
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    const auto& ed = a.edges[e];
    if (a.comp[ed.from] == a.comp[ed.to]) continue;
    cross[a.comp[ed.from]].push_back(e);
    ++indeg[a.comp[ed.to]];
  }
  auto phi = [&](std::size_t v) { return g.value(pots[a.comp[v]].phi.at(v)); };
  std::vector<double> kmax(C, -kInf), kmin(C, kInf);
  for (std::size_t c = 0; c < C; ++c)
    for (std::size_t v : a.members[c]) {
      kmax[c] = std::max(kmax[c], -phi(v));
      kmin[c] = std::min(kmin[c], -phi(v));
    }
  std::queue<std::size_t> ready;
  for (std::size_t c = 0; c < C; ++c)
    if (indeg[c] == 0) ready.push(c);
  double best = 0;
  while (!ready.empty()) {
    const std::size_t c = ready.front();
    ready.pop();
    for (std::size_t v : a.members[c]) {
      best = std::max(best, std::abs(kmax[c] + phi(v)));
      best = std::max(best, std::abs(kmin[c] + phi(v)));
    }
    for (std::size_t e : cross[c]) {
      const auto& ed = a.edges[e];
      const std::size_t d = a.comp[ed.to];
      const double step = phi(ed.from) + g.value(ed.gain) - phi(ed.to);
      kmax[d] = std::max(kmax[d], kmax[c] + step);
      kmin[d] = std::min(kmin[d], kmin[c] + step);
      if (--indeg[d] == 0) ready.push(d);
    }
  }
  det.path_gain_bound = best;
  return det;
}

namespace {

// Recurrent cells grouped by grid adjacency: classes that only grid
// resolution separates end up in one cluster.
struct Cluster {
  std::vector<std::size_t> nodes;
  std::vector<std::size_t> classes;
  bool recurrent = true;
};

std::vector<Cluster> clusters(const ChainGraph& g, const FlowModel& m, const Analysis& a) {
  const std::size_t N = g.size();
  std::vector<std::size_t> parent(N);
  for (std::size_t v = 0; v < N; ++v) parent[v] = v;
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto recurrent = [&](std::size_t v) { return bool(a.internal[a.comp[v]]); };
  for (const auto& j : g.jump_edges)
    if (recurrent(j.from) && recurrent(j.to)) parent[find(j.from)] = find(j.to);
  for (const auto& e : a.edges)
    if (a.comp[e.from] == a.comp[e.to]) parent[find(e.from)] = find(e.to);

  std::vector<Cluster> out;
  std::map<std::size_t, std::size_t> id;
  for (std::size_t v = 0; v < N; ++v) {
    if (!recurrent(v)) continue;
    auto [it, fresh] = id.emplace(find(v), out.size());
    if (fresh) out.push_back({});
    auto& c = out[it->second];
    c.nodes.push_back(v);
    if (std::find(c.classes.begin(), c.classes.end(), a.comp[v]) == c.classes.end()) c.classes.push_back(a.comp[v]);
  }
  for (const auto& fp : m.fixed_points) {
    const std::size_t v = g.node_of(fp.location);
    if (recurrent(v)) continue;
    bool listed = false;
    for (const auto& c : out) listed = listed || c.nodes.front() == v;
    if (!listed) out.push_back({{v}, {a.comp[v]}, false});
  }
  return out;
}

}  // namespace

ComponentReport chain_recurrent_components(const ChainGraph& g, const FlowModel& m) {
  const Analysis a = analyze(g);
  const auto cl = clusters(g, m, a);
  ComponentReport rep;
  for (const auto& c : cl) rep.components.push_back({c.nodes, c.recurrent});

  std::vector<std::vector<std::size_t>> succ(a.members.size());
  for (const auto& e : a.edges)
    if (a.comp[e.from] != a.comp[e.to]) succ[a.comp[e.from]].push_back(a.comp[e.to]);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    std::vector<bool> reach(a.members.size(), false);
    std::vector<std::size_t> stack = cl[i].classes;
    for (std::size_t c : stack) reach[c] = true;
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      for (std::size_t d : succ[c])
        if (!reach[d]) {
          reach[d] = true;
          stack.push_back(d);
        }
    }
    for (std::size_t j = 0; j < cl.size(); ++j) {
      if (j == i) continue;
      bool hit = false;
      for (std::size_t c : cl[j].classes) hit = hit || reach[c];
      if (hit) rep.order.push_back({j, i});
    }
  }
  std::sort(rep.order.begin(), rep.order.end());
  return rep;
}

PiMorseReport pi_morse_report(const ChainGraph& g, const FlowModel& m, double tolerance) {
  const Analysis a = analyze(g);
  const double tol = edge_tolerance(g, 1e-9);
  PiMorseReport rep;
  const auto cl = clusters(g, m, a);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (!cl[i].recurrent) continue;
    PiMorseEntry e;
    e.kind = "component";
    e.index = i;
    e.size = cl[i].nodes.size();
    for (std::size_t c : cl[i].classes) {
      const Potential p = class_potential(g, a, c, tol);
      if (p.cycle) e.internal_gain = std::max(e.internal_gain, std::abs(p.cycle->value));
    }
    e.pi_stable = e.internal_gain <= tolerance;
    rep.entries.push_back(e);
  }
  // A fixed point's own chains stay in its cell: only its loops count.
  for (std::size_t i = 0; i < m.fixed_points.size(); ++i) {
    const std::size_t v = g.node_of(m.fixed_points[i].location);
    PiMorseEntry e;
    e.kind = "fixed_point";
    e.index = i;
    e.size = 1;
    for (std::size_t id : a.out[v])
      if (a.edges[id].to == v) e.internal_gain = std::max(e.internal_gain, std::abs(g.value(a.edges[id].gain)));
    e.pi_stable = e.internal_gain <= tolerance;
    rep.entries.push_back(e);
  }
  for (const auto& e : rep.entries)
    if (e.pi_stable) ++rep.stable_count;
  return rep;
}

}  // namespace novikov::flows
