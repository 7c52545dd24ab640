#include "novikov/cli/run.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <unistd.h>

#include "novikov/cli/json_io.hpp"
#include "novikov/complexes/filtration.hpp"
#include "novikov/flows/integrate.hpp"
#include "novikov/twisted/builtin_complexes.hpp"
#include "novikov/twisted/twisted_complex.hpp"

namespace novikov::cli {

namespace {

constexpr const char* kBuiltin = "builtin:";

struct Options {
  std::string format = "json";
  std::string output;
  std::optional<std::uint64_t> seed;

  std::string complex, descriptors, model, flow;
  std::string field = "Z";
  std::string a;
  std::uint32_t p = 0;
  std::size_t trials = 20;
  std::string counts, orbits;

  std::optional<double> r, rho, lambda, T0, T_max, dt;
  std::optional<std::size_t> seeds;
  std::optional<std::size_t> grid;
  std::optional<double> T_edge;
  double threshold = 0.5;
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::uint64_t resolve_seed(const Options& o, std::uint64_t fallback) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("NOVIKOV_LAB_SEED")) {
    const std::string s = env;
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      throw InputError("NOVIKOV_LAB_SEED must be a nonnegative integer, got '" + s + "'");
    return std::stoull(s);
  }
  return fallback;
}

ComplexInput load_complex(const std::string& source) {
  if (starts_with(source, kBuiltin)) {
    const std::string name = source.substr(std::string(kBuiltin).size());
    auto x = twisted::builtin::by_name(name);
    if (!x) throw InputError("unknown built-in complex '" + name + "'");
    return {*x, std::nullopt};
  }
  return parse_complex(read_json_file(source));
}

twisted::TwistedComplex load_twisted(const std::string& source) {
  const auto in = load_complex(source);
  return twisted::build_twisted(in.complex, in.local_system);
}

std::vector<conley::InvariantSetDescriptor> builtin_descriptors(const std::string& name) {
  using conley::HyperbolicFixedPoint;
  if (name == "s2_height") return {HyperbolicFixedPoint{0}, HyperbolicFixedPoint{2}};
  if (name == "t2_morse")
    return {HyperbolicFixedPoint{0}, HyperbolicFixedPoint{1}, HyperbolicFixedPoint{1}, HyperbolicFixedPoint{2}};
  if (name == "circle_two_fixed") return {HyperbolicFixedPoint{0}, HyperbolicFixedPoint{1}};
  throw InputError("unknown built-in descriptor list '" + name + "' (s2_height, t2_morse, circle_two_fixed)");
}

std::vector<conley::InvariantSetDescriptor> load_descriptors(const std::string& source) {
  if (starts_with(source, kBuiltin)) return builtin_descriptors(source.substr(std::string(kBuiltin).size()));
  return parse_descriptors(read_json_file(source));
}

flows::BuiltinModel load_flow(const Options& o) {
  if (o.model.empty() == o.flow.empty()) throw InputError("give exactly one of --model and --flow");
  flows::BuiltinModel b;
  if (!o.model.empty()) {
    try {
      b = flows::models::by_name(o.model);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  } else {
    b = parse_flow(read_json_file(o.flow));
  }
  if (o.r) b.params.r = *o.r;
  if (o.rho) b.params.rho = *o.rho;
  if (o.lambda) b.params.lambda = *o.lambda;
  if (o.T0) b.params.T0 = *o.T0;
  if (o.T_max) b.plan.T_max = *o.T_max;
  if (o.dt) b.plan.dt = *o.dt;
  if (o.seeds) b.plan.seeds = *o.seeds;
  if (o.grid) b.grid = *o.grid;
  if (o.T_edge) b.T_edge = *o.T_edge;
  b.plan.rng_seed = resolve_seed(o, b.plan.rng_seed);
  flows::validate(b.params);
  return b;
}

// Untwisted complexes live over Z: no coordinates.
twisted::Point point_for(const twisted::TwistedComplex& d, const std::string& text) {
  if (d.s == 0) {
    if (!text.empty()) throw InputError("complex '" + d.name + "' has no weights; omit --a");
    return {};
  }
  if (text.empty()) throw InputError("complex '" + d.name + "' has weights; --a is required");
  const auto a = parse_point(text);
  if (a.size() != d.s)
    throw InputError("--a has " + std::to_string(a.size()) + " coordinates, complex '" + d.name + "' has " +
                     std::to_string(d.s) + " variables");
  return a;
}

Json header(const std::string& command) { return Json{{"schema_version", kSchemaVersion}, {"command", command}}; }

std::string poly_line(const std::string& name, const complexes::Polynomial& p) { return name + " = " + p.to_string(); }

struct Outcome {
  Json report;
  std::string text;
  int code = kExitOk;
};

Outcome cmd_homology(const Options& o) {
  const auto d = load_twisted(o.complex);
  Outcome out{header("homology"), "", kExitOk};
  out.report["complex"] = d.name;
  std::ostringstream t;
  if (!o.a.empty()) {
    if (o.field != "Q") throw InputError("--a evaluates over Q; pass --field Q");
    const auto a = point_for(d, o.a);
    const auto dims = twisted::evaluated_homology(d, a);
    out.report["field"] = "Q";
    out.report["point"] = point_json(a);
    out.report["dims"] = dims;
    t << "H_*(" << d.name << "; Q) at a = " << point_string(a) << ": dims " << join(dims) << "\n";
    t << poly_line("p(t)", complexes::PoincarePolynomial::from_counts(dims).poly()) << "\n";
    out.text = t.str();
    return out;
  }
  complexes::Coefficients field;
  if (o.field == "Z")
    field = complexes::Coefficients::integers();
  else if (o.field == "Q")
    field = complexes::Coefficients::rationals();
  else if (!o.field.empty() && o.field.find_first_not_of("0123456789") == std::string::npos && o.field.size() < 10)
    field = complexes::Coefficients::mod_p(static_cast<std::uint32_t>(std::stoul(o.field)));
  else
    throw InputError("--field must be Z, Q or a prime");
  if (field.kind == complexes::Coefficients::Kind::ModP && !algebra::is_prime(field.p))
    throw InputError("--field " + o.field + " is not prime");
  for (const auto& m : d.complex.boundaries())
    if (!m.is_constant())
      throw InputError("complex '" + d.name + "' has nonzero weights; use novikov, or --field Q with --a");
  std::vector<algebra::IntMatrix> ints;
  for (const auto& m : d.complex.boundaries()) ints.push_back(m.constant_part());
  const auto c = complexes::FreeChainComplex::from_integers(d.complex.ranks(), ints);
  const auto h = complexes::homology(c, field);
  out.report["field"] = field.to_string();
  out.report["homology"] = to_json(h);
  std::vector<std::size_t> betti;
  for (const auto& g : h) betti.push_back(g.betti);
  t << "H_*(" << d.name << "; " << field.to_string() << "): betti " << join(betti) << "\n";
  for (std::size_t j = 0; j < h.size(); ++j)
    for (const auto& tor : h[j].torsion) t << "  torsion in degree " << j << ": Z/" << tor.get_str() << "\n";
  t << poly_line("p(t)", complexes::PoincarePolynomial::from_counts(betti).poly()) << "\n";
  out.text = t.str();
  return out;
}

Outcome cmd_novikov(const Options& o) {
  const auto d = load_twisted(o.complex);
  if (o.trials == 0) throw InputError("--trials must be at least 1");
  const auto nr = twisted::novikov_numbers(d, o.trials, resolve_seed(o, 1));
  Outcome out{header("novikov"), "", kExitOk};
  out.report["complex"] = d.name;
  out.report["novikov"] = to_json(nr);
  std::ostringstream t;
  t << "Novikov numbers of " << d.name << ": b = " << join(nr.b) << "\n";
  t << "  " << nr.points.size() << " points, " << nr.witnesses.size() << " generic, seed " << nr.seed << "\n";
  for (const auto& j : nr.jumps)
    t << "  jump at a = " << point_string(j.point) << ": degree " << j.degree << " dim " << j.dim << "\n";
  out.text = t.str();
  return out;
}

Outcome cmd_torsion(const Options& o) {
  const auto d = load_twisted(o.complex);
  const auto a = point_for(d, o.a);
  const auto q = twisted::torsion_numbers(d, a, o.p);
  const auto cmp = complexes::prime_comparison(d.complex, algebra::EvaluationAt{a}, algebra::ReductionIp{o.p});
  Outcome out{header("torsion"), "", kExitOk};
  out.report["complex"] = d.name;
  out.report["point"] = point_json(a);
  out.report["p"] = o.p;
  out.report["q"] = q;
  out.report["poly_a"] = to_json(cmp.poly_p.poly());
  out.report["poly_p"] = to_json(cmp.poly_q.poly());
  out.report["qpoly"] = to_json(cmp.qpoly.poly());
  std::ostringstream t;
  t << "torsion numbers of " << d.name << " at a = " << point_string(a) << ", p = " << o.p << ": q = " << join(q)
    << "\n";
  t << poly_line("p(t; a)", cmp.poly_p.poly()) << "\n" << poly_line("p(t; p)", cmp.poly_q.poly()) << "\n";
  t << "p(t; p) = p(t; a) + (1 + t)(" << cmp.qpoly.to_string() << ")\n";
  out.text = t.str();
  return out;
}

std::string cert_text(const flows::BuiltinModel& b, const flows::CertReport& r) {
  std::ostringstream t;
  t << b.model.name << ": " << flows::to_string(r.verdict) << (r.low_coverage ? " LOW_COVERAGE" : "") << "\n";
  for (const auto& c : r.conditions) {
    t << "  (" << c.id << ") ";
    if (!c.checked)
      t << "skipped\n";
    else
      t << (c.holds ? "holds" : "FAILS") << " on " << c.checks << " checks\n";
  }
  if (r.witness) t << "  witness: " << r.witness->detail << "\n";
  return t.str();
}

Outcome cmd_certify(const Options& o) {
  const auto b = load_flow(o);
  const auto r = flows::certify_alpha_flow(b.model, b.rep, b.params, b.plan);
  Outcome out{header("flow-certify"), cert_text(b, r),
              r.verdict == flows::Verdict::CertifiedOnSamples ? kExitOk : kExitVerdict};
  out.report["model"] = b.model.name;
  out.report["params"] = Json{{"r", b.params.r}, {"rho", b.params.rho}, {"lambda", b.params.lambda}, {"T0", b.params.T0}};
  out.report["plan"] = Json{{"seeds", b.plan.seeds}, {"rng_seed", b.plan.rng_seed}, {"T_max", b.plan.T_max},
                            {"dt", b.plan.dt}};
  out.report["certificate"] = to_json(r);
  return out;
}

Outcome cmd_detect(const Options& o) {
  const auto b = load_flow(o);
  const auto g = flows::build_chain_graph(b.model, b.rep, b.grid, b.T_edge);
  const auto d = flows::detect_gradient_like(g, o.threshold);
  Outcome out{header("flow-detect"), "", kExitOk};
  out.report["model"] = b.model.name;
  out.report["grid"] = b.grid;
  out.report["T_edge"] = b.T_edge;
  out.report["nodes"] = g.size();
  out.report["detection"] = to_json(d);
  std::ostringstream t;
  t << b.model.name << " on " << g.size() << " nodes: " << flows::verdict_name(d) << "\n";
  if (d.cycle)
    t << "  cycle of " << d.cycle->nodes.size() - 1 << " steps with gain " << d.cycle->value << "\n";
  else
    t << "  every cycle has gain 0; path gains bounded by " << d.path_gain_bound << "\n";
  out.text = t.str();
  return out;
}

Outcome cmd_graph(const Options& o) {
  const auto b = load_flow(o);
  const auto g = flows::build_chain_graph(b.model, b.rep, b.grid, b.T_edge);
  const auto comps = flows::chain_recurrent_components(g, b.model);
  const auto pm = flows::pi_morse_report(g, b.model);
  Outcome out{header("chain-graph"), "", kExitOk};
  out.report["model"] = b.model.name;
  out.report["grid"] = b.grid;
  out.report["T_edge"] = b.T_edge;
  out.report["nodes"] = g.size();
  out.report["flow_edges"] = g.flow_edges.size();
  out.report["jump_edges"] = g.jump_edges.size();
  out.report["recurrence"] = to_json(comps);
  out.report["pi_morse"] = to_json(pm);
  std::ostringstream t;
  t << b.model.name << ": " << g.size() << " nodes, " << g.flow_edges.size() << " flow edges, " << g.jump_edges.size()
    << " jump edges\n";
  t << "  " << comps.components.size() << " chain recurrent components\n";
  for (const auto& [lo, hi] : comps.order) t << "  component " << lo << " < component " << hi << "\n";
  for (const auto& e : pm.entries)
    t << "  " << e.kind << " " << e.index << ": internal gain " << e.internal_gain
      << (e.pi_stable ? " (pi-stable)" : " (not pi-stable)") << "\n";
  out.text = t.str();
  return out;
}

std::string verdict_text(const report::MorseVerdict& v) {
  std::ostringstream t;
  t << v.identity_name << ": " << (v.holds ? "holds" : "FAILS") << "\n";
  if (!v.holds && v.witness) t << "  first failure at degree " << *v.witness << ": " << v.detail << "\n";
  return t.str();
}

Outcome cmd_main(const Options& o) {
  const auto ds = load_descriptors(o.descriptors);
  const auto d = load_twisted(o.complex);
  const auto a = point_for(d, o.a);
  const auto v = report::main_equality_check(ds, d, a, o.p);
  Outcome out{header("report-main"), "", v.holds ? kExitOk : kExitVerdict};
  out.report["complex"] = d.name;
  out.report["point"] = point_json(a);
  out.report["p"] = o.p;
  out.report["verdict"] = to_json(v);
  std::ostringstream t;
  t << poly_line("p(h;t)", v.lhs) << "\n" << poly_line("p(X;t,a)", v.rhs) << "\n";
  if (!v.q_polys.empty()) t << "p(h;t) - p(X;t,a) = (1 + t)(" << v.q_polys.front().to_string() << ")\n";
  t << verdict_text(v);
  out.text = t.str();
  return out;
}

Outcome cmd_euler(const Options& o) {
  const auto ds = load_descriptors(o.descriptors);
  const auto d = load_twisted(o.complex);
  const auto r = report::euler_check(ds, d);
  Outcome out{header("report-euler"), "", r.holds ? kExitOk : kExitVerdict};
  out.report["complex"] = d.name;
  out.report["index_sum"] = r.index_sum;
  out.report["euler_characteristic"] = r.chi;
  out.report["holds"] = r.holds;
  out.text = "sum p(h;-1) = " + std::to_string(r.index_sum) + ", chi = " + std::to_string(r.chi) +
             (r.holds ? ": holds\n" : ": FAILS\n");
  return out;
}

Outcome cmd_novikov_ineq(const Options& o) {
  const auto d = load_twisted(o.complex);
  if (o.counts.empty()) throw InputError("report-novikov needs --counts");
  const auto c = parse_counts(o.counts);
  const auto nr = twisted::novikov_numbers(d, o.trials, resolve_seed(o, 1));
  std::vector<std::size_t> q;
  if (!o.a.empty() || o.p != 0) {
    if (o.p == 0) throw InputError("torsion numbers need --p");
    q = twisted::torsion_numbers(d, point_for(d, o.a), o.p);
  }
  const auto v = report::novikov_inequality_check(c, nr, q);
  Outcome out{header("report-novikov"), verdict_text(v), v.holds ? kExitOk : kExitVerdict};
  out.report["complex"] = d.name;
  out.report["b"] = nr.b;
  out.report["verdict"] = to_json(v);
  return out;
}

Outcome cmd_morse_smale(const Options& o) {
  const auto d = load_twisted(o.complex);
  const auto c = o.counts.empty() ? std::vector<std::size_t>{} : parse_counts(o.counts);
  const auto a = o.orbits.empty() ? std::vector<std::size_t>{} : parse_counts(o.orbits);
  const auto nr = twisted::novikov_numbers(d, o.trials, resolve_seed(o, 1));
  const auto v = report::morse_smale_check(c, a, nr);
  Outcome out{header("report-morse-smale"), verdict_text(v), v.holds ? kExitOk : kExitVerdict};
  out.report["complex"] = d.name;
  out.report["b"] = nr.b;
  out.report["verdict"] = to_json(v);
  return out;
}

Outcome cmd_vanishing(const Options& o) {
  const auto b = load_flow(o);
  const auto d = load_twisted(o.complex);
  const auto cert = flows::certify_alpha_flow(b.model, b.rep, b.params, b.plan);
  const auto nr = twisted::novikov_numbers(d, o.trials, resolve_seed(o, 1));
  const auto r = report::vanishing_check(cert, nr);
  Outcome out{header("report-vanishing"), "",
              r.status == report::VanishingStatus::Contradiction ? kExitVerdict : kExitOk};
  out.report["model"] = b.model.name;
  out.report["complex"] = d.name;
  out.report["certificate"] = to_json(cert);
  out.report["b"] = nr.b;
  out.report["holds"] = r.holds;
  out.report["status"] = report::to_string(r.status);
  out.text = b.model.name + " (" + flows::to_string(cert.verdict) + ") vs " + d.name + ": b = " + join(nr.b) + ", " +
             report::to_string(r.status) + "\n";
  return out;
}

void write_atomically(const std::string& path, const std::string& data) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError(path + ": cannot write output");
    f << data;
    if (!f.flush()) throw InputError(path + ": write failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError(path + ": " + ec.message());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Novikov-Morse workbench: twisted homology, Novikov numbers, flows and cocycles"};
  app.name("novikov_lab");
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output, "write the report here instead of stdout");
    sub->add_option("--seed", o.seed, "random seed (default: NOVIKOV_LAB_SEED, then 1)");
  };
  auto complex_opt = [&](CLI::App* sub) {
    return sub->add_option("--complex", o.complex, "complex JSON file or builtin:<name>")->required();
  };
  auto flow_opts = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "built-in flow model");
    sub->add_option("--flow", o.flow, "flow JSON file");
  };
  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "nodes per axis")->check(CLI::Range(3, 100000));
    sub->add_option("--T", o.T_edge, "flow time per edge")->check(CLI::PositiveNumber);
  };

  auto* homology = app.add_subcommand("homology", "homology over Z, Q or Z_p");
  common(homology);
  complex_opt(homology);
  homology->add_option("--field", o.field, "Z, Q or a prime");
  homology->add_option("--a", o.a, "evaluate weights at this point (with --field Q)");

  auto* novikov = app.add_subcommand("novikov", "Novikov numbers by generic evaluation");
  common(novikov);
  complex_opt(novikov);
  novikov->add_option("--trials", o.trials, "random evaluation points")->check(CLI::Range(1, 100000));

  auto* torsion = app.add_subcommand("torsion", "torsion numbers for an (a, p) pair");
  common(torsion);
  complex_opt(torsion);
  torsion->add_option("--a", o.a, "evaluation point, e.g. 2 or 2,3/2 (omit without weights)");
  torsion->add_option("--p", o.p, "prime")->required();

  auto* certify = app.add_subcommand("flow-certify", "sample-based alpha-flow certificate");
  common(certify);
  flow_opts(certify);
  certify->add_option("--r", o.r, "fixed-point ball radius");
  certify->add_option("--rho", o.rho, "required gain");
  certify->add_option("--lambda", o.lambda, "oscillation factor in [0, 1)");
  certify->add_option("--T0", o.T0, "window length");
  certify->add_option("--seeds", o.seeds, "trajectory seeds")->check(CLI::Range(1, 1000000));
  certify->add_option("--T-max", o.T_max, "integration horizon")->check(CLI::PositiveNumber);
  certify->add_option("--dt", o.dt, "RK4 step")->check(CLI::PositiveNumber);

  auto* detect = app.add_subcommand("flow-detect", "gradient-like detection on a chain graph");
  common(detect);
  flow_opts(detect);
  graph_opts(detect);
  detect->add_option("--threshold", o.threshold, "cycle gain threshold")->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand("chain-graph", "chain recurrent components and pi-Morse report");
  common(graph);
  flow_opts(graph);
  graph_opts(graph);

  auto* main_eq = app.add_subcommand("report-main", "main equality against index polynomials");
  common(main_eq);
  complex_opt(main_eq);
  main_eq->add_option("--descriptors", o.descriptors, "descriptor JSON file or builtin:<name>")->required();
  main_eq->add_option("--a", o.a, "evaluation point (omit without weights)");
  main_eq->add_option("--p", o.p, "prime")->required();

  auto* euler = app.add_subcommand("report-euler", "Euler-Poincare formula");
  common(euler);
  complex_opt(euler);
  euler->add_option("--descriptors", o.descriptors, "descriptor JSON file or builtin:<name>")->required();

  auto* nov = app.add_subcommand("report-novikov", "Novikov inequalities with torsion refinement");
  common(nov);
  complex_opt(nov);
  nov->add_option("--counts", o.counts, "zeros per index, e.g. 1,2,1")->required();
  nov->add_option("--a", o.a, "evaluation point for torsion numbers");
  nov->add_option("--p", o.p, "prime for torsion numbers");
  nov->add_option("--trials", o.trials, "random evaluation points")->check(CLI::Range(1, 100000));

  auto* ms = app.add_subcommand("report-morse-smale", "inequalities with periodic orbits");
  common(ms);
  complex_opt(ms);
  ms->add_option("--counts", o.counts, "fixed points per index");
  ms->add_option("--orbits", o.orbits, "closed orbits per index");
  ms->add_option("--trials", o.trials, "random evaluation points")->check(CLI::Range(1, 100000));

  auto* van = app.add_subcommand("report-vanishing", "vanishing of Novikov numbers for a carrier flow");
  common(van);
  flow_opts(van);
  complex_opt(van);
  van->add_option("--trials", o.trials, "random evaluation points")->check(CLI::Range(1, 100000));

  std::vector<std::string> argv_store{"novikov_lab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Outcome res;
    if (homology->parsed())
      res = cmd_homology(o);
    else if (novikov->parsed())
      res = cmd_novikov(o);
    else if (torsion->parsed())
      res = cmd_torsion(o);
    else if (certify->parsed())
      res = cmd_certify(o);
    else if (detect->parsed())
      res = cmd_detect(o);
    else if (graph->parsed())
      res = cmd_graph(o);
    else if (main_eq->parsed())
      res = cmd_main(o);
    else if (euler->parsed())
      res = cmd_euler(o);
    else if (nov->parsed())
      res = cmd_novikov_ineq(o);
    else if (ms->parsed())
      res = cmd_morse_smale(o);
    else
      res = cmd_vanishing(o);
    res.report["exit_code"] = res.code;
    const std::string data = o.format == "json" ? res.report.dump(2) + "\n" : res.text;
    if (o.output.empty())
      out << data;
    else
      write_atomically(o.output, data);
    return res.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace novikov::cli
