#include "zfc/ssm.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <iomanip>
#include <sstream>

#include "zfc/errors.hpp"
#include "zfc/exact.hpp"
#include "zfc/generators.hpp"
#include "zfc/parallel.hpp"
#include "zfc/rc.hpp"

namespace zfc {

SsmFamily parse_family(const std::string& name) {
  if (name == "path") return SsmFamily::kPath;
  if (name == "cycle") return SsmFamily::kCycle;
  if (name == "ladder") return SsmFamily::kLadder;
  if (name == "binary-tree") return SsmFamily::kBinaryTree;
  throw ArgumentError("unknown family: " + name);
}

SsmModel parse_model(const std::string& name) {
  if (name == "ising-edge") return SsmModel::kIsingEdge;
  if (name == "ising-vertex") return SsmModel::kIsingVertex;
  if (name == "rc-edge") return SsmModel::kRcEdge;
  throw ArgumentError("unknown model: " + name);
}

std::string family_name(SsmFamily f) {
  switch (f) {
    case SsmFamily::kPath: return "path";
    case SsmFamily::kCycle: return "cycle";
    case SsmFamily::kLadder: return "ladder";
    case SsmFamily::kBinaryTree: return "binary-tree";
  }
  return "?";
}

std::string model_name(SsmModel m) {
  switch (m) {
    case SsmModel::kIsingEdge: return "ising-edge";
    case SsmModel::kIsingVertex: return "ising-vertex";
    case SsmModel::kRcEdge: return "rc-edge";
  }
  return "?";
}

Graph family_graph(SsmFamily f, std::size_t size) {
  switch (f) {
    case SsmFamily::kPath: return path_graph(size);
    case SsmFamily::kCycle: return cycle_graph(size);
    case SsmFamily::kLadder: return ladder_graph(size);
    case SsmFamily::kBinaryTree: return binary_tree(size);
  }
  throw ArgumentError("bad family");
}

namespace {

enum Action : int { kZero = 0, kMixed = 1 };
using Side = std::vector<std::pair<std::size_t, Action>>;

void validate(const SsmSpec& s) {
  if (s.d_max == 0) throw ArgumentError("ssm_scan: d_max must be >= 1");
  if (!(s.beta >= 1)) throw DomainError("ssm_scan: beta must be >= 1");
  if (s.model == SsmModel::kRcEdge) {
    if (s.lambda.imag() != 0 || s.lambda.real() < 0 || s.lambda.real() > 1)
      throw DomainError("ssm_scan: rc-edge needs real lambda in [0, 1]");
    if (s.beta == std::numeric_limits<double>::infinity()) throw DomainError("ssm_scan: beta must be finite");
    return;
  }
  if (s.unsafe) return;
  if (!(std::abs(s.lambda) < 1)) throw DomainError("ssm_scan: |lambda| must be < 1 (use unsafe to override)");
  if (s.model == SsmModel::kIsingEdge && (s.mixed_factor.is_infinite() || s.mixed_factor.value() < 1))
    throw DomainError("ssm_scan: mixed factor must be finite and >= 1 (use unsafe to override)");
  if (s.model == SsmModel::kIsingVertex && (s.vertex_scale < 0 || s.vertex_scale >= 1))
    throw DomainError("ssm_scan: vertex scale must lie in [0, 1)");
}

Complex probe_ratio(const Graph& g, const SsmSpec& s, const Side& side) {
  switch (s.model) {
    case SsmModel::kIsingEdge: {
      IsingParams p = IsingParams::uniform(g, s.beta, s.lambda);
      PartialEvaluation pe;
      for (auto [f, a] : side) {
        if (a == kZero) pe.edges.emplace(f, 1.0);
        else if (s.mixed_factor.is_infinite()) pe.edges.emplace(f, Extended<double>::infinity());
        else pe.edges.emplace(f, s.mixed_factor.value() * s.beta);
      }
      return exact_edge_ratio(g, p, 0, pe, 1.0);
    }
    case SsmModel::kIsingVertex: {
      IsingParams p = IsingParams::uniform(g, s.beta, s.lambda);
      PartialEvaluation pe;
      for (auto [u, a] : side) pe.fields[u] = a == kZero ? Complex(0) : s.vertex_scale * s.lambda;
      Complex den = exact_Z(g, p, pe);
      if (den == 0.0) throw NumericError("ssm_scan: Z vanishes");
      pe.fields[0] = 0;
      return exact_Z(g, p, pe) / den;
    }
    case SsmModel::kRcEdge: {
      RCParams rp = RCParams::uniform(g, 1 - 1 / s.beta, s.lambda.real());
      EdgePinning cond;
      for (auto [f, a] : side) cond[f] = a == kMixed;
      return rc_edge_marginal(g, rp, 0, cond, RcRoute::kDirect);
    }
  }
  return 0;
}

std::string complex_tag(Complex z) {
  std::ostringstream os;
  os << std::setprecision(6) << z.real();
  if (z.imag() != 0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
  return os.str();
}

}  // namespace

DecayTable ssm_scan(const SsmSpec& spec) {
  validate(spec);
  Graph g = family_graph(spec.family, spec.size);
  bool vertex = spec.model == SsmModel::kIsingVertex;
  if (!vertex && g.edge_count() == 0) throw ArgumentError("ssm_scan: graph has no edges");

  // Distance of every boundary element from the probe.
  std::vector<std::pair<std::size_t, Distance>> elems;
  if (vertex) {
    for (VertexId u = 1; u < g.vertex_count(); ++u) elems.emplace_back(u, vertex_distance(g, 0, u));
  } else {
    for (EdgeId f = 1; f < g.edge_count(); ++f) elems.emplace_back(f, edge_distance(g, 0, f));
  }

  std::vector<Side> sides{Side{}};
  std::vector<std::size_t> single_index;
  for (auto [x, d] : elems) {
    single_index.push_back(sides.size());
    sides.push_back({{x, kZero}});
  }
  std::vector<std::pair<std::size_t, std::size_t>> bulk;  // (all-zero, mixed) side indices per t
  std::size_t last_t = 0;
  for (std::size_t t = 1; t <= spec.d_max; ++t) {
    Side zero, mixed;
    for (auto [x, d] : elems) {
      if (d == kInfinite || d < t) continue;
      zero.emplace_back(x, kZero);
      mixed.emplace_back(x, kMixed);
    }
    if (zero.empty()) break;
    last_t = t;
    bulk.emplace_back(sides.size(), sides.size() + 1);
    sides.push_back(std::move(zero));
    sides.push_back(std::move(mixed));
  }

  auto ratios = parallel_map<Complex>(sides.size(), spec.threads,
                                      [&](std::size_t i) { return probe_ratio(g, spec, sides[i]); });

  DecayTable table;
  table.model_tag = model_name(spec.model) + "/" + family_name(spec.family) + "-" + std::to_string(spec.size);
  std::ostringstream tag;
  tag << "beta=" << spec.beta << " lambda=" << complex_tag(spec.lambda);
  table.parameter_tag = tag.str();
  for (std::size_t t = 1; t <= last_t; ++t) {
    DecayRow row;
    row.distance = t;
    auto take = [&](Complex a, Complex b) {
      row.max_abs_diff = std::max(row.max_abs_diff, std::abs(a - b));
      ++row.instance_count;
    };
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (elems[i].second != kInfinite && elems[i].second >= t) take(ratios[single_index[i]], ratios[0]);
    auto [z, m] = bulk[t - 1];
    take(ratios[z], ratios[0]);
    take(ratios[z], ratios[m]);
    table.rows.push_back(row);
  }
  return table;
}

DecayFit fit_decay(const DecayTable& table, double noise_floor) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : table.rows)
    if (r.max_abs_diff > noise_floor) pts.emplace_back(static_cast<double>(r.distance), std::log(r.max_abs_diff));
  if (pts.size() < 3)
    throw InsufficientDataError("fit_decay: " + std::to_string(pts.size()) + " rows above the noise floor, need 3");
  Eigen::MatrixXd x(pts.size(), 2);
  Eigen::VectorXd y(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    x(static_cast<Eigen::Index>(i), 0) = 1;
    x(static_cast<Eigen::Index>(i), 1) = pts[i].first;
    y(static_cast<Eigen::Index>(i)) = pts[i].second;
  }
  Eigen::Vector2d coef = x.colPivHouseholderQr().solve(y);
  Eigen::VectorXd resid = y - x * coef;
  double ss_res = resid.squaredNorm();
  double ss_tot = (y.array() - y.mean()).square().sum();
  DecayFit fit;
  fit.log_C = coef(0);
  fit.rate_r = std::exp(-coef(1));
  fit.r_squared = ss_tot > 0 ? 1 - ss_res / ss_tot : 1;
  fit.rows_used = pts.size();
  fit.decaying = coef(1) < -1e-12;
  return fit;
}

bool nonincreasing(const DecayTable& table, double noise_floor) {
  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    double cur = table.rows[i].max_abs_diff;
    if (cur <= noise_floor) continue;
    if (cur > table.rows[i - 1].max_abs_diff * (1 + 1e-9)) return false;
  }
  return true;
}

std::string to_csv(const DecayTable& table) {
  std::ostringstream os;
  os << "distance,max_abs_diff,instance_count\n" << std::setprecision(17);
  for (const auto& r : table.rows) os << r.distance << ',' << r.max_abs_diff << ',' << r.instance_count << '\n';
  return os.str();
}

nlohmann::json to_json(const DecayTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows)
    rows.push_back({{"distance", r.distance}, {"max_abs_diff", r.max_abs_diff}, {"instance_count", r.instance_count}});
  return {{"model_tag", table.model_tag}, {"parameter_tag", table.parameter_tag}, {"rows", rows}};
}

nlohmann::json to_json(const DecayFit& fit) {
  return {{"log_C", fit.log_C},
          {"rate_r", fit.rate_r},
          {"r_squared", fit.r_squared},
          {"rows_used", fit.rows_used},
          {"decaying", fit.decaying}};
}

}  // namespace zfc
