#include "novikov/cli/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace novikov::cli {

namespace {

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

// A JSON value together with its pointer, so errors can say where they are.
class Node {
 public:
  Node(const Json& j, std::string ptr) : j_(&j), ptr_(std::move(ptr)) {}

  const Json& json() const { return *j_; }
  const std::string& ptr() const { return ptr_; }

  [[noreturn]] void fail(const std::string& msg) const { throw SchemaError(ptr_, msg); }

  void expect_object(const std::set<std::string>& allowed) const {
    if (!j_->is_object()) fail("expected an object");
    for (auto it = j_->begin(); it != j_->end(); ++it)
      if (!allowed.count(it.key())) Node(it.value(), ptr_ + "/" + escape_pointer(it.key())).fail("unknown key");
  }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }

  Node key(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    if (!j_->contains(key)) Node(*j_, ptr_ + "/" + escape_pointer(key)).fail("required key is missing");
    return {j_->at(key), ptr_ + "/" + escape_pointer(key)};
  }

  std::optional<Node> opt(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return Node(j_->at(key), ptr_ + "/" + escape_pointer(key));
  }

  std::vector<Node> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], ptr_ + "/" + std::to_string(i));
    return out;
  }

  std::vector<std::pair<std::string, Node>> members() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = j_->begin(); it != j_->end(); ++it)
      out.push_back({it.key(), Node(it.value(), ptr_ + "/" + escape_pointer(it.key()))});
    return out;
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }

  long long integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long long>();
  }

  std::size_t natural() const {
    const long long v = integer();
    if (v < 0) fail("expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  algebra::Integer big_integer() const {
    if (j_->is_number_integer()) return algebra::Integer(std::to_string(j_->get<long long>()));
    if (j_->is_string()) {
      static const std::regex re("-?[0-9]+");
      const auto s = j_->get<std::string>();
      if (std::regex_match(s, re)) return algebra::Integer(s);
    }
    fail("expected an integer");
  }

  // A number, or a string such as "pi", "-3pi/2" or "5*pi/8".
  double angle() const {
    if (j_->is_number()) {
      const double v = j_->get<double>();
      if (!std::isfinite(v)) fail("expected a finite number");
      return v;
    }
    if (j_->is_string()) {
      static const std::regex re(R"(^\s*(-?)([0-9]*\.?[0-9]*)\s*\*?\s*pi\s*(?:/\s*([0-9]*\.?[0-9]+))?\s*$)");
      std::smatch m;
      const auto s = j_->get<std::string>();
      if (std::regex_match(s, m, re)) {
        double v = m[2].length() ? std::stod(m[2]) : 1.0;
        if (m[3].matched) v /= std::stod(m[3]);
        return (m[1].length() ? -v : v) * flows::kPi;
      }
    }
    fail("expected a number or a multiple of pi such as \"3pi/2\"");
  }

  double number() const { return angle(); }

 private:
  const Json* j_;
  std::string ptr_;
};

std::vector<int> int_vector(const Node& n) {
  std::vector<int> out;
  for (const auto& item : n.items()) {
    const long long v = item.integer();
    if (v < -1000000 || v > 1000000) item.fail("weight out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

flows::Primitive1D parse_primitive(const Node& n) {
  const std::string type = n.key("type").str();
  if (type == "zero") {
    n.expect_object({"type"});
    return std::monostate{};
  }
  if (type == "step") {
    n.expect_object({"type", "breaks", "values", "closed_right"});
    flows::StepPrimitive s;
    for (const auto& b : n.key("breaks").items()) s.breaks.push_back(b.angle());
    for (const auto& v : n.key("values").items()) s.values.push_back(v.integer());
    if (auto c = n.opt("closed_right"))
      for (const auto& b : c->items()) s.closed_right.push_back(b.boolean());
    else
      s.closed_right.assign(s.breaks.size(), true);
    return s;
  }
  if (type == "smooth") {
    n.expect_object({"type", "slope", "cos", "sin", "offset"});
    flows::SmoothPrimitive s;
    if (auto v = n.opt("slope")) s.slope = v->number();
    if (auto v = n.opt("cos")) s.cos_coef = v->number();
    if (auto v = n.opt("sin")) s.sin_coef = v->number();
    if (auto v = n.opt("offset")) s.offset = v->number();
    return s;
  }
  n.key("type").fail("unknown primitive type '" + type + "' (zero, step or smooth)");
}

flows::CocycleRep parse_cocycle(const Node& n, std::size_t dim) {
  n.expect_object({"charts", "step_denominator", "weights", "bound"});
  std::vector<flows::Chart> charts;
  for (const auto& c : n.key("charts").items()) {
    c.expect_object({"region", "beta"});
    flows::Chart chart;
    for (const auto& arc : c.key("region").items()) {
      arc.expect_object({"center", "half_width"});
      chart.region.push_back({arc.key("center").angle(), arc.key("half_width").angle()});
    }
    if (auto beta = c.opt("beta"))
      for (const auto& p : beta->items()) chart.beta.push_back(parse_primitive(p));
    charts.push_back(std::move(chart));
  }
  std::int64_t den = 1;
  if (auto d = n.opt("step_denominator")) {
    den = d->integer();
    if (den <= 0) d->fail("step denominator must be positive");
  }
  std::vector<int> weights;
  if (auto w = n.opt("weights")) weights = int_vector(*w);
  flows::CocycleRep rep;
  try {
    rep = flows::CocycleRep(dim, std::move(charts), den, weights);
  } catch (const std::invalid_argument& e) {
    n.fail(e.what());
  }
  if (auto b = n.opt("bound"))
    if (b->number() < rep.bound() - 1e-12)
      b->fail("declared bound " + std::to_string(b->number()) + " is below the primitives' maximum " +
              std::to_string(rep.bound()));
  return rep;
}

Json integer_json(const algebra::Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json vec_json(const flows::Vec& x) {
  Json out = Json::array();
  for (double c : x) out.push_back(c);
  return out;
}

}  // namespace

Json point_json(const twisted::Point& a) {
  Json out = Json::array();
  for (const auto& c : a) out.push_back(c.get_str());
  return out;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("; last read"); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON (" + msg +
                     ")");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void check_version(const Json& j) {
  const Node root(j, "");
  if (!j.is_object()) root.fail("expected an object");
  const Node v = root.key("schema_version");
  if (v.integer() != kSchemaVersion)
    v.fail("unsupported schema_version " + std::to_string(v.integer()) + " (expected " +
           std::to_string(kSchemaVersion) + ")");
}

ComplexInput parse_complex(const Json& j) {
  check_version(j);
  const Node root(j, "");
  root.expect_object({"schema_version", "name", "s", "cells", "boundary", "local_system"});
  ComplexInput in;
  auto& x = in.complex;
  x.name = root.has("name") ? root.key("name").str() : "complex";
  x.s = root.key("s").natural();
  if (x.s > 16) root.key("s").fail("at most 16 variables are supported");

  std::map<std::string, std::size_t> index;
  for (const auto& c : root.key("cells").items()) {
    c.expect_object({"id", "dim"});
    twisted::Cell cell;
    cell.id = c.key("id").str();
    cell.dim = c.key("dim").natural();
    if (cell.dim > 32) c.key("dim").fail("dimension too large");
    if (!index.emplace(cell.id, x.cells.size()).second) c.key("id").fail("duplicate cell id '" + cell.id + "'");
    x.cells.push_back(std::move(cell));
  }
  std::set<std::string> seen;
  if (auto b = root.opt("boundary"))
    for (const auto& entry : b->items()) {
      entry.expect_object({"of", "terms"});
      const std::string of = entry.key("of").str();
      auto it = index.find(of);
      if (it == index.end()) entry.key("of").fail("unknown cell '" + of + "'");
      if (!seen.insert(of).second) entry.key("of").fail("boundary of '" + of + "' given twice");
      auto& cell = x.cells[it->second];
      for (const auto& t : entry.key("terms").items()) {
        t.expect_object({"cell", "coef", "weight"});
        twisted::BoundaryTerm term;
        term.cell = t.key("cell").str();
        auto target = index.find(term.cell);
        if (target == index.end()) t.key("cell").fail("unknown cell '" + term.cell + "'");
        if (x.cells[target->second].dim + 1 != cell.dim)
          t.key("cell").fail("boundary term must have dimension " + std::to_string(cell.dim) + " - 1");
        term.coef = t.key("coef").big_integer();
        if (auto w = t.opt("weight")) {
          term.weight = int_vector(*w);
          if (term.weight.size() != x.s)
            w->fail("weight has length " + std::to_string(term.weight.size()) + ", expected s = " + std::to_string(x.s));
        } else {
          term.weight.assign(x.s, 0);
        }
        cell.boundary.push_back(std::move(term));
      }
    }

  if (auto ls = root.opt("local_system")) {
    ls->expect_object({"k", "monodromy", "attaching_words"});
    twisted::LocalSystem e;
    e.k = ls->key("k").natural();
    if (e.k == 0 || e.k > 16) ls->key("k").fail("k must lie in 1..16");
    if (auto mono = ls->opt("monodromy"))
      for (const auto& [edge, m] : mono->members()) {
        if (!index.count(edge)) m.fail("unknown edge '" + edge + "'");
        const auto rows = m.items();
        if (rows.size() != e.k) m.fail("expected a " + std::to_string(e.k) + " x " + std::to_string(e.k) + " matrix");
        algebra::IntMatrix mat(e.k, e.k, algebra::Integer(0));
        for (std::size_t r = 0; r < e.k; ++r) {
          const auto cols = rows[r].items();
          if (cols.size() != e.k) rows[r].fail("expected " + std::to_string(e.k) + " entries");
          for (std::size_t c = 0; c < e.k; ++c) mat(r, c) = cols[c].big_integer();
        }
        e.monodromy[edge] = std::move(mat);
      }
    if (auto words = ls->opt("attaching_words"))
      for (const auto& [face, w] : words->members()) {
        if (!index.count(face)) w.fail("unknown cell '" + face + "'");
        std::vector<twisted::Letter> letters;
        for (const auto& l : w.items()) {
          std::string s = l.str();
          int sign = 1;
          if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            sign = s[0] == '-' ? -1 : 1;
            s = s.substr(1);
          }
          if (!index.count(s)) l.fail("unknown edge '" + s + "'");
          letters.push_back({s, sign});
        }
        e.attaching_words[face] = std::move(letters);
      }
    in.local_system = std::move(e);
  }

  try {
    twisted::validate(x);
    if (in.local_system) twisted::validate(x, *in.local_system);
  } catch (const std::invalid_argument& e) {
    root.fail(e.what());
  }
  return in;
}

std::vector<conley::InvariantSetDescriptor> parse_descriptors(const Json& j) {
  check_version(j);
  const Node root(j, "");
  root.expect_object({"schema_version", "name", "descriptors"});
  std::vector<conley::InvariantSetDescriptor> out;
  for (const auto& d : root.key("descriptors").items()) {
    const std::string type = d.key("type").str();
    const long long k = d.key("k").integer();
    if (k < 0 || k > 64) d.key("k").fail("index must lie in 0..64");
    conley::InvariantSetDescriptor desc;
    if (type == "fixed_point") {
      d.expect_object({"type", "k"});
      desc = conley::HyperbolicFixedPoint{int(k)};
    } else if (type == "orbit") {
      d.expect_object({"type", "k", "orientable"});
      desc = conley::PeriodicOrbit{int(k), d.has("orientable") ? d.key("orientable").boolean() : true};
    } else if (type == "critical_manifold") {
      d.expect_object({"type", "k", "z_poincare", "label"});
      std::vector<std::size_t> z;
      for (const auto& c : d.key("z_poincare").items()) z.push_back(c.natural());
      desc = conley::CriticalManifold{int(k), complexes::PoincarePolynomial::from_counts(z),
                                      d.has("label") ? d.key("label").str() : "Z"};
    } else {
      d.key("type").fail("unknown descriptor type '" + type + "' (fixed_point, orbit or critical_manifold)");
    }
    try {
      conley::validate(desc);
    } catch (const std::invalid_argument& e) {
      d.fail(e.what());
    }
    out.push_back(std::move(desc));
  }
  return out;
}

flows::BuiltinModel parse_flow(const Json& j) {
  check_version(j);
  const Node root(j, "");
  root.expect_object({"schema_version", "model", "reverse", "params", "plan", "graph", "cocycle"});
  const Node name = root.key("model");
  flows::BuiltinModel b;
  try {
    b = flows::models::by_name(name.str());
  } catch (const std::invalid_argument& e) {
    name.fail(e.what());
  }
  if (auto r = root.opt("reverse"); r && r->boolean()) b.model = flows::reversed(b.model);
  if (auto p = root.opt("params")) {
    p->expect_object({"r", "rho", "lambda", "T0"});
    if (auto v = p->opt("r")) b.params.r = v->number();
    if (auto v = p->opt("rho")) b.params.rho = v->number();
    if (auto v = p->opt("lambda")) b.params.lambda = v->number();
    if (auto v = p->opt("T0")) b.params.T0 = v->number();
    try {
      flows::validate(b.params);
    } catch (const std::invalid_argument& e) {
      p->fail(e.what());
    }
  }
  if (auto p = root.opt("plan")) {
    p->expect_object({"seeds", "rng_seed", "T_max", "dt", "ball_samples", "min_checks"});
    if (auto v = p->opt("seeds")) b.plan.seeds = v->natural();
    if (auto v = p->opt("rng_seed")) b.plan.rng_seed = v->natural();
    if (auto v = p->opt("T_max")) b.plan.T_max = v->number();
    if (auto v = p->opt("dt")) b.plan.dt = v->number();
    if (auto v = p->opt("ball_samples")) b.plan.ball_samples = v->natural();
    if (auto v = p->opt("min_checks")) b.plan.min_checks = v->natural();
    if (b.plan.seeds == 0 || b.plan.seeds > 1000000) p->fail("seeds must lie in 1..10^6");
    if (!(b.plan.T_max > 0) || b.plan.T_max > 1e4) p->fail("T_max must lie in (0, 10^4]");
    if (!(b.plan.dt > 0) || b.plan.dt > 1) p->fail("dt must lie in (0, 1]");
    if (b.plan.ball_samples < 2 || b.plan.ball_samples > 4096) p->fail("ball_samples must lie in 2..4096");
  }
  if (auto g = root.opt("graph")) {
    g->expect_object({"grid", "T_edge"});
    if (auto v = g->opt("grid")) b.grid = v->natural();
    if (auto v = g->opt("T_edge")) b.T_edge = v->number();
  }
  if (auto c = root.opt("cocycle")) b.rep = parse_cocycle(*c, b.model.dim);
  return b;
}

twisted::Point parse_point(const std::string& text) {
  twisted::Point a;
  std::stringstream ss(text);
  std::string item;
  static const std::regex re(R"(\s*(-?[0-9]+(/[0-9]+)?)\s*)");
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, re)) throw InputError("bad rational '" + item + "' in point '" + text + "'");
    algebra::Rational q(m[1].str());
    if (q.get_den() == 0) throw InputError("zero denominator in '" + item + "'");
    q.canonicalize();
    if (q == 0) throw InputError("evaluation points must be nonzero");
    a.push_back(q);
  }
  if (a.empty()) throw InputError("empty evaluation point");
  return a;
}

std::vector<std::size_t> parse_counts(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  static const std::regex re(R"(\s*([0-9]+)\s*)");
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, re)) throw InputError("bad count '" + item + "' in '" + text + "'");
    out.push_back(std::stoul(m[1].str()));
  }
  return out;
}

std::string point_string(const twisted::Point& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? ", " : "") + a[i].get_str();
  return s + ")";
}

Json to_json(const complexes::Polynomial& p) {
  return Json{{"coeffs", p.coeffs()}, {"text", p.to_string()}};
}

Json to_json(const std::vector<complexes::HomologyGroup>& h) {
  Json out = Json::array();
  for (std::size_t j = 0; j < h.size(); ++j) {
    Json torsion = Json::array();
    for (const auto& t : h[j].torsion) torsion.push_back(integer_json(t));
    out.push_back(Json{{"degree", j}, {"betti", h[j].betti}, {"torsion", torsion}});
  }
  return out;
}

Json to_json(const twisted::NovikovReport& r) {
  Json witnesses = Json::array(), jumps = Json::array(), samples = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(point_json(w));
  for (const auto& jmp : r.jumps)
    jumps.push_back(Json{{"point", point_json(jmp.point)}, {"degree", jmp.degree}, {"dim", jmp.dim}});
  for (std::size_t i = 0; i < r.points.size(); ++i)
    samples.push_back(Json{{"point", point_json(r.points[i])}, {"dims", r.dims[i]}});
  return Json{{"b", r.b},           {"seed", r.seed},   {"trials", r.trials},
              {"witnesses", witnesses}, {"jumps", jumps}, {"samples", samples}};
}

Json to_json(const flows::CertReport& r) {
  Json conditions = Json::array();
  for (const auto& c : r.conditions)
    conditions.push_back(Json{{"id", c.id},
                              {"checked", c.checked},
                              {"holds", c.holds},
                              {"checks", c.checks},
                              {"extreme", optional_number(c.extreme)}});
  Json witness = nullptr;
  if (r.witness)
    witness = Json{{"condition", r.witness->condition}, {"point", vec_json(r.witness->point)},
                   {"t_begin", r.witness->t_begin},     {"t_end", r.witness->t_end},
                   {"value", r.witness->value},         {"detail", r.witness->detail}};
  return Json{{"verdict", flows::to_string(r.verdict)},
              {"low_coverage", r.low_coverage},
              {"fixed_point_free", r.fixed_point_free},
              {"gamma_counts", {r.gamma_counts[0], r.gamma_counts[1], r.gamma_counts[2]}},
              {"seeds_in_balls", r.seeds_in_balls},
              {"conditions", conditions},
              {"witness", witness}};
}

Json to_json(const flows::Detection& d) {
  Json cycle = nullptr;
  if (d.cycle)
    cycle = Json{{"nodes", d.cycle->nodes},
                 {"gain", d.cycle->value},
                 {"gain_steps", d.cycle->gain.steps},
                 {"repetitions", d.cycle->repetitions}};
  return Json{{"verdict", flows::verdict_name(d)},
              {"threshold", d.threshold},
              {"max_cycle_gain", d.max_cycle_gain},
              {"path_gain_bound", d.gradient_like ? Json(d.path_gain_bound) : Json(nullptr)},
              {"cycle", cycle}};
}

Json to_json(const flows::ComponentReport& r) {
  Json comps = Json::array(), order = Json::array();
  for (const auto& c : r.components)
    comps.push_back(Json{{"size", c.nodes.size()}, {"recurrent", c.recurrent}, {"nodes", c.nodes}});
  for (const auto& [lo, hi] : r.order) order.push_back({lo, hi});
  return Json{{"components", comps}, {"order", order}};
}

Json to_json(const flows::PiMorseReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back(Json{{"kind", e.kind},
                           {"index", e.index},
                           {"size", e.size},
                           {"internal_gain", e.internal_gain},
                           {"pi_stable", e.pi_stable}});
  return Json{{"entries", entries}, {"stable_count", r.stable_count}};
}

Json to_json(const report::MorseVerdict& v) {
  Json q = Json::array();
  for (const auto& p : v.q_polys) q.push_back(to_json(p));
  return Json{{"identity", v.identity_name},
              {"lhs", to_json(v.lhs)},
              {"rhs", to_json(v.rhs)},
              {"q", q},
              {"holds", v.holds},
              {"witness_degree", v.witness ? Json(*v.witness) : Json(nullptr)},
              {"detail", v.detail},
              {"hypothesis_declared", v.hypothesis_declared}};
}

}  // namespace novikov::cli
