// Copyright 2026 The zfcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zfc/errors.hpp"
#include "zfc/exact.hpp"
#include "zfc/ext.hpp"
#include "zfc/fptas.hpp"
#include "zfc/generators.hpp"
#include "zfc/graph_io.hpp"
#include "zfc/ldc.hpp"
#include "zfc/rc.hpp"
#include "zfc/ssm.hpp"

namespace zfc::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string graph;
  std::string out;
  std::string format = "json";
  std::optional<std::string> beta;
  std::optional<std::string> lambda;
  double epsilon = 1e-3;
  std::optional<std::size_t> k;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  bool unsafe = false;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--graph", c.graph, "graph JSON file");
  app->add_option("--beta", c.beta, "edge activity B (overrides the file)");
  app->add_option("--lambda", c.lambda, "vertex field RE[,IM] (overrides the file)");
  app->add_option("--epsilon", c.epsilon, "relative error target")->check(CLI::PositiveNumber);
  app->add_option("--k", c.k, "fixed truncation degree");
  app->add_option("--seed", c.seed, "random seed");
  app->add_option("--out", c.out, "output path (default stdout)");
  app->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app->add_option("--threads", c.threads, "worker cap (0 = all cores)");
  app->add_flag("--unsafe", c.unsafe, "allow parameters outside the certified region");
}

double parse_double(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    double x = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw ArgumentError(std::string("--") + what + ": not a number: " + s);
  }
}

std::pair<std::string, std::string> split_complex(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {s, "0"};
  return {s.substr(0, comma), s.substr(comma + 1)};
}

Complex parse_complex(const std::string& s) {
  auto [re, im] = split_complex(s);
  return {parse_double(re, "lambda"), parse_double(im, "lambda")};
}

GraphFile load_graph(const Common& c) {
  if (c.graph.empty()) throw ArgumentError("--graph is required for this command");
  return read_graph_file(c.graph);
}

IsingParams ising_params(const Common& c, const GraphFile& f) {
  IsingParams p = f.params(2.0, 0.5);
  if (c.beta) p.beta.assign(f.graph.edge_count(), parse_double(*c.beta, "beta"));
  if (c.lambda) p.lambda.assign(f.graph.vertex_count(), parse_complex(*c.lambda));
  return p;
}

template <class T>
T uniform_value(const std::vector<T>& xs, T fallback, const char* what) {
  if (xs.empty()) return fallback;
  for (const T& x : xs)
    if (x != xs.front()) throw ArgumentError(std::string("approx needs a uniform ") + what);
  return xs.front();
}

class Output {
 public:
  Output(const Common& c, std::ostream& out) : out_(out) {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw ArgumentError("cannot open output file: " + c.out);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : out_; }
  void json_doc(const json& j) { stream() << j.dump(2) << '\n'; }

 private:
  std::ostream& out_;
  std::ofstream file_;
};

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// ---------------------------------------------------------------- exact

int cmd_exact(const Common& c, bool poly, std::ostream& out) {
  GraphFile f = load_graph(c);
  IsingParams p = ising_params(c, f);
  Complex z = exact_Z(f.graph, p);
  json j{{"Z", complex_to_json(z)}};
  if (poly) {
    RationalIsingParams rp;
    for (std::size_t e = 0; e < f.graph.edge_count(); ++e)
      rp.beta.push_back(c.beta ? parse_rational(*c.beta) : rational_from_double(p.beta[e]));
    for (std::size_t v = 0; v < f.graph.vertex_count(); ++v) {
      if (p.lambda[v].imag() != 0) throw ArgumentError("--poly needs a real lambda");
      rp.lambda.push_back(c.lambda ? parse_rational(split_complex(*c.lambda).first)
                                   : rational_from_double(p.lambda[v].real()));
    }
    json coeffs = json::array();
    RationalPoly zp = exact_Z_poly(f.graph, rp);
    for (const auto& a : zp.coeffs()) coeffs.push_back(a.get_str());
    j["poly"] = coeffs;
  }
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << "re,im\n" << num(z.real()) << ',' << num(z.imag()) << '\n';
  } else {
    o.json_doc(j);
  }
  return kOk;
}

// ---------------------------------------------------------------- approx

int cmd_approx(const Common& c, std::size_t k_max, std::ostream& out) {
  GraphFile f = load_graph(c);
  IsingParams p = ising_params(c, f);
  double beta = uniform_value(p.beta, 2.0, "beta");
  Complex lambda = uniform_value(p.lambda, Complex(0.5), "lambda");
  FptasOptions opt;
  opt.k_override = c.k;
  opt.k_max = k_max;
  opt.unsafe = c.unsafe;
  opt.retain_ratios = false;
  auto t0 = std::chrono::steady_clock::now();
  ApproxResult r = approx_Z(f.graph, beta, lambda, c.epsilon, opt);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << "re,im,k_used,max_precision_bits,wall_time_s\n"
               << num(r.z_estimate.real()) << ',' << num(r.z_estimate.imag()) << ',' << r.k_used << ','
               << r.max_precision_bits << ',' << wall << '\n';
    return kOk;
  }
  json diag = json::array();
  for (const auto& s : r.diagnostics)
    diag.push_back({{"k", s.k},
                    {"edges_checked", s.edges_checked},
                    {"worst_edge", s.worst_edge},
                    {"worst_relative_change", s.worst_relative_change},
                    {"stable", s.stable}});
  o.json_doc({{"Z", complex_to_json(r.z_estimate)},
              {"k_used", r.k_used},
              {"epsilon", c.epsilon},
              {"max_precision_bits", r.max_precision_bits},
              {"wall_time_s", wall},
              {"diagnostics", diag}});
  return kOk;
}

// ---------------------------------------------------------------- ldc

int cmd_ldc(const Common& c, const std::string& lemma, std::size_t max_n, std::size_t instances, std::ostream& out) {
  std::vector<Graph> graphs;
  if (!c.graph.empty()) {
    graphs.push_back(load_graph(c).graph);
  } else {
    for (std::size_t n = 1; n <= max_n; ++n)
      for (auto& g : all_graphs(n)) graphs.push_back(std::move(g));
  }
  std::vector<LdcLemma> lemmas;
  if (lemma == "product" || lemma == "all") lemmas.push_back(LdcLemma::kProduct);
  if (lemma == "edge" || lemma == "all") lemmas.push_back(LdcLemma::kEdge);
  if (lemma == "vertex" || lemma == "all") lemmas.push_back(LdcLemma::kVertex);
  LdcSuiteOptions opt;
  opt.instances_per_graph = instances;
  opt.seed = c.seed;
  opt.threads = c.threads;
  std::vector<LdcSuiteSummary> results;
  bool pass = true;
  for (LdcLemma l : lemmas) {
    results.push_back(run_ldc_suite(l, graphs, opt));
    pass = pass && results.back().pass();
  }
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << "lemma,instances,failures,tight,pass\n";
    for (const auto& s : results)
      o.stream() << s.lemma << ',' << s.instances << ',' << s.failures << ',' << s.tight << ','
                 << (s.pass() ? "true" : "false") << '\n';
  } else {
    json arr = json::array();
    for (const auto& s : results) arr.push_back(to_json(s));
    o.json_doc({{"graphs", graphs.size()}, {"suites", arr}, {"pass", pass}});
  }
  return pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- ssm

struct SsmArgs {
  std::string family = "path";
  std::string model = "ising-edge";
  std::optional<std::size_t> size;
  std::size_t d_max = 8;
  std::string mixed_factor = "2";
  double vertex_scale = 0.5;
};

int cmd_ssm(const Common& c, const SsmArgs& a, std::ostream& out) {
  SsmSpec s;
  s.family = parse_family(a.family);
  s.model = parse_model(a.model);
  s.size = a.size ? *a.size : s.family == SsmFamily::kLadder ? 10 : s.family == SsmFamily::kBinaryTree ? 4 : 20;
  s.beta = c.beta ? parse_double(*c.beta, "beta") : 2.0;
  s.lambda = c.lambda ? parse_complex(*c.lambda) : Complex(0.5);
  s.d_max = a.d_max;
  s.mixed_factor = a.mixed_factor == "inf" ? Extended<double>::infinity()
                                           : Extended<double>(parse_double(a.mixed_factor, "mixed-factor"));
  s.vertex_scale = a.vertex_scale;
  s.unsafe = c.unsafe;
  s.threads = c.threads;
  DecayTable t = ssm_scan(s);
  json fit = nullptr;
  bool decaying = true;
  try {
    DecayFit f = fit_decay(t);
    fit = to_json(f);
    decaying = f.decaying;
  } catch (const InsufficientDataError&) {
    // Too few rows above the noise floor; nothing to fit.
  }
  bool mono = nonincreasing(t);
  bool pass = mono && decaying;
  Output o(c, out);
  if (c.format == "csv") {
    o.stream() << to_csv(t) << "# fit " << json{{"fit", fit}, {"nonincreasing", mono}, {"pass", pass}}.dump() << '\n';
  } else {
    o.json_doc({{"table", to_json(t)}, {"fit", fit}, {"nonincreasing", mono}, {"pass", pass}});
  }
  return pass ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- rc

struct RcArgs {
  std::string mode = "sweep";
  std::optional<double> p;
  std::size_t l_min = 3, l_max = 8;
  std::size_t seeds = 50;
  std::uint64_t step_cap = 10000000;
  std::uint64_t steps = 1000000;
  std::uint64_t burn_in = 10000;
  std::optional<EdgeId> edge;
  std::vector<EdgeId> pin_in, pin_out;
};

double rc_lambda(const Common& c) {
  if (!c.lambda) return 1.0;
  Complex l = parse_complex(*c.lambda);
  if (l.imag() != 0) throw DomainError("rc needs a real lambda in [0, 1]");
  return l.real();
}

RCParams rc_params(const Common& c, const RcArgs& a, const GraphFile& f) {
  RCParams rp;
  if (a.p) {
    rp.p.assign(f.graph.edge_count(), *a.p);
  } else if (c.beta) {
    rp.p.assign(f.graph.edge_count(), 1 - 1 / parse_double(*c.beta, "beta"));
  } else if (f.beta) {
    for (double b : *f.beta) rp.p.push_back(1 - 1 / b);
  } else {
    rp.p.assign(f.graph.edge_count(), 0.5);
  }
  if (c.lambda || !f.lambda) {
    rp.lambda.assign(f.graph.vertex_count(), rc_lambda(c));
  } else {
    for (Complex l : *f.lambda) {
      if (l.imag() != 0) throw DomainError("rc needs real lambda values");
      rp.lambda.push_back(l.real());
    }
  }
  rp.validate(f.graph);
  return rp;
}

int cmd_rc(const Common& c, const RcArgs& a, std::ostream& out) {
  if (a.mode == "sweep") {
    double p = a.p ? *a.p : c.beta ? 1 - 1 / parse_double(*c.beta, "beta") : 0.5;
    double lambda = rc_lambda(c);
    if (!(p >= 0 && p < 1) || !(lambda >= 0 && lambda <= 1))
      throw DomainError("sweep needs p in [0, 1) and lambda in [0, 1]");
    if (a.l_min < 1 || a.l_max < a.l_min) throw ArgumentError("bad ladder range");
    std::vector<std::size_t> rungs;
    for (std::size_t L = a.l_min; L <= a.l_max; ++L) rungs.push_back(L);
    auto rows = ladder_coalescence(rungs, p, lambda, a.seeds, c.seed, a.step_cap, c.threads);
    double cfit = fit_mlogm_constant(rows);
    bool nondecreasing = true, bounded = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      double m = static_cast<double>(rows[i].edges);
      if (i > 0 && rows[i].median_steps < rows[i - 1].median_steps) nondecreasing = false;
      if (rows[i].median_steps > 1.5 * cfit * m * std::log(m)) bounded = false;
    }
    bool pass = nondecreasing && bounded;
    json summary{{"c_fit", cfit}, {"nondecreasing", nondecreasing}, {"bounded", bounded}, {"pass", pass}};
    Output o(c, out);
    if (c.format == "csv") {
      o.stream() << "rungs,edges,median_steps,coalesced,runs\n";
      for (const auto& r : rows)
        o.stream() << r.rungs << ',' << r.edges << ',' << num(r.median_steps) << ',' << r.coalesced << ','
                   << r.runs << '\n';
      o.stream() << "# fit " << summary.dump() << '\n';
    } else {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"rungs", r.rungs},
                       {"edges", r.edges},
                       {"median_steps", r.median_steps},
                       {"coalesced", r.coalesced},
                       {"runs", r.runs}});
      summary["rows"] = arr;
      summary["p"] = p;
      summary["lambda"] = lambda;
      summary["seed"] = c.seed;
      o.json_doc(summary);
    }
    return pass ? kOk : kCheckFailed;
  }

  GraphFile f = load_graph(c);
  RCParams rp = rc_params(c, a, f);
  Output o(c, out);
  if (a.mode == "coupling") {
    CouplingTrace t = coupling_time(f.graph, rp, c.seed, a.step_cap);
    o.json_doc(to_json(t, f.graph, rp));
    return kOk;
  }
  if (a.mode == "stationarity") {
    auto exact = rc_distribution(f.graph, rp);
    auto emp = glauber_histogram(f.graph, rp, c.seed, a.steps, a.burn_in);
    double tv = total_variation(exact, emp);
    bool pass = tv <= 0.02;
    if (c.format == "csv") {
      o.stream() << "config,exact,empirical\n";
      for (std::size_t i = 0; i < exact.size(); ++i) o.stream() << i << ',' << num(exact[i]) << ',' << num(emp[i]) << '\n';
      o.stream() << "# tv " << num(tv) << '\n';
    } else {
      o.json_doc({{"graph", graph_to_json(f.graph)},
                  {"params", {{"p", rp.p}, {"lambda", rp.lambda}}},
                  {"seed", c.seed},
                  {"steps", a.steps},
                  {"burn_in", a.burn_in},
                  {"tv", tv},
                  {"pass", pass},
                  {"histogram", {{"exact", exact}, {"empirical", emp}}}});
    }
    return pass ? kOk : kCheckFailed;
  }
  if (a.mode == "marginal") {
    if (!a.edge) throw ArgumentError("--edge is required for marginal");
    EdgePinning cond;
    for (EdgeId e : a.pin_in) cond[e] = true;
    for (EdgeId e : a.pin_out) cond[e] = false;
    double direct = rc_edge_marginal(f.graph, rp, *a.edge, cond, RcRoute::kDirect);
    double via = rc_edge_marginal(f.graph, rp, *a.edge, cond, RcRoute::kViaIsing);
    bool pass = std::abs(direct - via) <= 1e-10;
    o.json_doc({{"edge", *a.edge}, {"direct", direct}, {"via_ising", via}, {"pass", pass}});
    return pass ? kOk : kCheckFailed;
  }
  throw ArgumentError("unknown rc mode: " + a.mode);
}

// ---------------------------------------------------------------- ext

struct ExtArgs {
  std::string model = "hyper";
  std::string hypergraph;
  unsigned q = 2;
  std::string preset = "even-subgraph";
  std::string param = "1/2";
  std::string w = "2";
  bool suite = false;
  std::size_t max_n = 6;
  std::size_t exhaustive_n = 4;
  std::size_t random_per_n = 2000;
};

json poly_json(const RationalPoly& p) {
  json arr = json::array();
  for (const auto& a : p.coeffs()) arr.push_back(a.get_str());
  return arr;
}

std::vector<Graph> graphs_up_to(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (auto& g : all_graphs(i)) out.push_back(std::move(g));
  return out;
}

int cmd_ext(const Common& c, const ExtArgs& a, std::ostream& out) {
  Output o(c, out);
  if (a.suite) {
    LdcSuiteSummary s;
    if (a.model == "hyper") {
      HyperSuiteOptions opt;
      opt.exhaustive_n = a.exhaustive_n;
      opt.max_n = a.max_n;
      opt.random_per_n = a.random_per_n;
      opt.seed = c.seed;
      opt.threads = c.threads;
      s = hyper_ldc_suite(opt);
    } else if (a.model == "potts") {
      s = potts_ldc_suite(graphs_up_to(a.max_n), a.q, c.threads);
    } else if (a.model == "holant") {
      if (a.preset != "even-subgraph") throw ArgumentError("the holant suite uses the even-subgraph preset");
      s = holant_ldc_suite(graphs_up_to(a.max_n), parse_rational(a.param), c.threads);
    } else {
      throw ArgumentError("unknown ext model: " + a.model);
    }
    if (c.format == "csv") {
      o.stream() << "lemma,instances,failures,tight,pass\n"
                 << s.lemma << ',' << s.instances << ',' << s.failures << ',' << s.tight << ','
                 << (s.pass() ? "true" : "false") << '\n';
    } else {
      o.json_doc(to_json(s));
    }
    return s.pass() ? kOk : kCheckFailed;
  }
  Rational lambda = c.lambda ? parse_rational(split_complex(*c.lambda).first) : Rational(1, 2);
  if (c.lambda && split_complex(*c.lambda).second != "0") throw ArgumentError("ext needs a real lambda");
  if (a.model == "hyper") {
    if (a.hypergraph.empty()) throw ArgumentError("--hypergraph is required");
    std::ifstream in(a.hypergraph);
    if (!in) throw ArgumentError("cannot open hypergraph file: " + a.hypergraph);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw ArgumentError("cannot parse " + a.hypergraph + ": " + e.what());
    }
    Hypergraph h = hypergraph_from_json(j);
    RationalPoly z = hyper_Z(h);
    o.json_doc({{"poly", poly_json(z)}, {"lambda", lambda.get_str()}, {"Z", z.eval(lambda).get_str()}});
    return kOk;
  }
  GraphFile f = load_graph(c);
  if (a.model == "potts") {
    Rational w = parse_rational(a.w);
    o.json_doc({{"poly_z", poly_json(potts_Z(f.graph, a.q))},
                {"q", a.q},
                {"w", w.get_str()},
                {"Z_tutte", potts_Z_value(f.graph, a.q, w, true).get_str()},
                {"Z_spin", potts_Z_value(f.graph, a.q, w, false).get_str()}});
    return kOk;
  }
  if (a.model == "holant") {
    HolantInstance inst = holant_preset(a.preset, f.graph, parse_rational(a.param), lambda);
    o.json_doc({{"preset", a.preset},
                {"param", a.param},
                {"edge_activity", lambda.get_str()},
                {"poly", poly_json(holant_Z(inst))},
                {"Z", holant_Z_value(inst).get_str()}});
    return kOk;
  }
  throw ArgumentError("unknown ext model: " + a.model);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"zfc: Ising partition functions, exact oracles and verification suites"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  Common c;

  auto* exact = app.add_subcommand("exact", "exact partition function by enumeration");
  add_common(exact, c);
  bool poly = false;
  exact->add_flag("--poly", poly, "also print the coefficients in the scaling variable z");

  auto* approx = app.add_subcommand("approx", "truncated-series approximation");
  add_common(approx, c);
  std::size_t k_max = 96;
  approx->add_option("--k-max", k_max, "largest truncation degree tried");

  auto* ldc = app.add_subcommand("ldc", "exact divisibility suites for the Ising lemmas");
  add_common(ldc, c);
  std::string lemma = "all";
  std::size_t ldc_max_n = 7, instances = 8;
  ldc->add_option("--lemma", lemma)->check(CLI::IsMember({"product", "edge", "vertex", "all"}));
  ldc->add_option("--max-n", ldc_max_n, "largest graph order in the corpus");
  ldc->add_option("--instances", instances, "random instances per graph");

  auto* ssm = app.add_subcommand("ssm", "decay scan with the exact oracle");
  add_common(ssm, c);
  SsmArgs sa;
  ssm->add_option("--family", sa.family)->check(CLI::IsMember({"path", "cycle", "ladder", "binary-tree"}));
  ssm->add_option("--model", sa.model)->check(CLI::IsMember({"ising-edge", "ising-vertex", "rc-edge"}));
  ssm->add_option("--size", sa.size, "vertices (path, cycle), rungs (ladder) or depth (tree)");
  ssm->add_option("--d-max", sa.d_max, "largest distance in the table");
  ssm->add_option("--mixed-factor", sa.mixed_factor, "mixed boundary multiplies beta by this (or inf)");
  ssm->add_option("--vertex-scale", sa.vertex_scale, "lambda factor on the mixed vertex boundary");

  auto* rc = app.add_subcommand("rc", "random cluster model: coupling, stationarity, marginals");
  add_common(rc, c);
  RcArgs ra;
  rc->add_option("--mode", ra.mode)->check(CLI::IsMember({"sweep", "coupling", "stationarity", "marginal"}));
  rc->add_option("--p", ra.p, "edge probability (default 1 - 1/beta, else 1/2)");
  rc->add_option("--l-min", ra.l_min, "smallest ladder length in a sweep");
  rc->add_option("--l-max", ra.l_max, "largest ladder length in a sweep");
  rc->add_option("--seeds", ra.seeds, "coupled runs per ladder");
  rc->add_option("--step-cap", ra.step_cap, "steps before a coupling gives up");
  rc->add_option("--steps", ra.steps, "chain steps for stationarity");
  rc->add_option("--burn-in", ra.burn_in, "discarded initial steps");
  rc->add_option("--edge", ra.edge, "edge for the marginal");
  rc->add_option("--pin-in", ra.pin_in, "edges conditioned in")->delimiter(',');
  rc->add_option("--pin-out", ra.pin_out, "edges conditioned out")->delimiter(',');

  auto* ext = app.add_subcommand("ext", "hypergraph, Potts and Holant oracles and suites");
  add_common(ext, c);
  ExtArgs ea;
  ext->add_option("--model", ea.model)->check(CLI::IsMember({"hyper", "potts", "holant"}));
  ext->add_option("--hypergraph", ea.hypergraph, "hypergraph JSON file");
  ext->add_option("--q", ea.q, "number of Potts colours")->check(CLI::PositiveNumber);
  ext->add_option("--preset", ea.preset)->check(CLI::IsMember({"even-subgraph", "line-ising"}));
  ext->add_option("--param", ea.param, "rho or beta of the preset");
  ext->add_option("--w", ea.w, "Potts edge weight w");
  ext->add_flag("--suite", ea.suite, "run the divisibility suite instead");
  ext->add_option("--max-n", ea.max_n, "largest order in a suite");
  ext->add_option("--exhaustive-n", ea.exhaustive_n, "hypergraph orders enumerated exhaustively");
  ext->add_option("--random-per-n", ea.random_per_n, "sampled hypergraphs per larger order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*exact) return cmd_exact(c, poly, out);
    if (*approx) return cmd_approx(c, k_max, out);
    if (*ldc) return cmd_ldc(c, lemma, ldc_max_n, instances, out);
    if (*ssm) return cmd_ssm(c, sa, out);
    if (*rc) return cmd_rc(c, ra, out);
    if (*ext) return cmd_ext(c, ea, out);
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  }
  return kUsage;
}

}  // namespace zfc::cli
