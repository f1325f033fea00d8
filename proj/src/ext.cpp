#include "zfc/ext.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "zfc/errors.hpp"
#include "zfc/exact.hpp"
#include "zfc/generators.hpp"
#include "zfc/graph_io.hpp"
#include "zfc/parallel.hpp"

namespace zfc {

// ---------------------------------------------------------------- hypergraphs

Hypergraph::Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges) : n_(n) {
  for (auto& e : edges) {
    if (e.empty()) throw ArgumentError("hypergraph: empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.back() >= n) throw ArgumentError("hypergraph: vertex id out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    return Hypergraph(j.at("vertex_count").get<std::size_t>(),
                      j.at("edges").get<std::vector<std::vector<VertexId>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("hypergraph json: ") + e.what());
  }
}

nlohmann::json to_json(const Hypergraph& h) { return {{"vertex_count", h.vertex_count()}, {"edges", h.edges()}}; }

namespace {

void check_vertex(const Hypergraph& h, VertexId v, const char* what) {
  if (v >= h.vertex_count()) throw ArgumentError(std::string(what) + ": bad vertex id");
}

// Old ids to new ids after removing the marked vertices.
std::vector<VertexId> compact(std::size_t n, const std::vector<char>& removed) {
  std::vector<VertexId> map(n, kInfinite);
  VertexId next = 0;
  for (VertexId x = 0; x < n; ++x)
    if (!removed[x]) map[x] = next++;
  return map;
}

std::vector<std::uint64_t> edge_masks(const Hypergraph& h) {
  std::vector<std::uint64_t> m;
  for (const auto& e : h.edges()) {
    std::uint64_t b = 0;
    for (VertexId x : e) b |= std::uint64_t{1} << x;
    m.push_back(b);
  }
  return m;
}

void check_hyper_cap(const Hypergraph& h) {
  std::size_t cap = std::min<std::size_t>(enumeration_cap(), 62);
  if (h.vertex_count() > cap)
    throw ResourceError("enumeration cap exceeded: " + std::to_string(h.vertex_count()) + " vertices > cap " +
                        std::to_string(cap));
}

std::pair<std::uint64_t, std::uint64_t> pin_masks(const Hypergraph& h, const Pinning& pin) {
  std::uint64_t plus = 0, minus = 0;
  for (const auto& [v, s] : pin.spins()) {
    check_vertex(h, v, "pin");
    (s == Spin::kPlus ? plus : minus) |= std::uint64_t{1} << v;
  }
  return {plus, minus};
}

bool independent(std::uint64_t set, const std::vector<std::uint64_t>& masks) {
  for (std::uint64_t e : masks)
    if ((set & e) == e) return false;
  return true;
}

// Calls f(mask) for every independent set containing `plus` and avoiding `minus`.
template <class F>
void for_each_independent(const Hypergraph& h, std::uint64_t plus, std::uint64_t minus, F&& f) {
  auto masks = edge_masks(h);
  std::uint64_t all = h.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << h.vertex_count()) - 1;
  std::uint64_t free = all & ~plus & ~minus;
  // Enumerate subsets of `free` in increasing order.
  std::uint64_t sub = 0;
  while (true) {
    std::uint64_t set = sub | plus;
    if (independent(set, masks)) f(set);
    if (sub == free) break;
    sub = (sub - free) & free;
  }
}

RationalPoly count_poly(const std::vector<long long>& counts) {
  std::vector<Rational> c;
  for (long long x : counts) c.emplace_back(static_cast<long>(x));
  return RationalPoly(std::move(c));
}

}  // namespace

Hypergraph hyper_ops(const Hypergraph& h, VertexId v, DeletionKind kind) {
  check_vertex(h, v, "hyper_ops");
  std::vector<char> removed(h.vertex_count());
  removed[v] = 1;
  auto map = compact(h.vertex_count(), removed);
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : h.edges()) {
    bool has = std::binary_search(e.begin(), e.end(), v);
    if (has && kind == DeletionKind::kTotal) continue;
    std::vector<VertexId> ne;
    for (VertexId x : e)
      if (x != v) ne.push_back(map[x]);
    if (!ne.empty()) edges.push_back(std::move(ne));
  }
  return Hypergraph(h.vertex_count() - 1, std::move(edges));
}

RationalPoly hyper_Z(const Hypergraph& h, const Pinning& pin) {
  check_hyper_cap(h);
  auto [plus, minus] = pin_masks(h, pin);
  if (!independent(plus, edge_masks(h))) throw ArgumentError("hyper_Z: pin is not feasible");
  std::vector<long long> counts(h.vertex_count() + 1);
  for_each_independent(h, plus, minus, [&](std::uint64_t s) { ++counts[std::popcount(s)]; });
  return count_poly(counts);
}

Rational hyper_marginal(const Hypergraph& h, VertexId v, const Rational& lambda, const Pinning& pin) {
  check_vertex(h, v, "hyper_marginal");
  if (pin.contains(v)) throw ArgumentError("hyper_marginal: vertex is pinned");
  Rational z = hyper_Z(h, pin).eval(lambda);
  if (z == 0) throw NumericError("hyper_marginal: Z vanishes");
  auto [plus, minus] = pin_masks(h, pin.with(v, Spin::kPlus));
  if (!independent(plus, edge_masks(h))) return 0;
  return hyper_Z(h, pin.with(v, Spin::kPlus)).eval(lambda) / z;
}

std::pair<Hypergraph, std::vector<VertexId>> hyper_condition(const Hypergraph& h, const Pinning& pin) {
  auto [plus, minus] = pin_masks(h, pin);
  if (!independent(plus, edge_masks(h))) throw ArgumentError("hyper_condition: pin is not feasible");
  std::vector<char> removed(h.vertex_count());
  for (const auto& [v, _] : pin.spins()) removed[v] = 1;
  auto map = compact(h.vertex_count(), removed);
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : h.edges()) {
    if (std::any_of(e.begin(), e.end(), [&](VertexId x) { return (minus >> x) & 1; })) continue;
    std::vector<VertexId> ne;
    for (VertexId x : e)
      if (!((plus >> x) & 1)) ne.push_back(map[x]);
    if (!ne.empty()) edges.push_back(std::move(ne));
  }
  return {Hypergraph(h.vertex_count() - pin.size(), std::move(edges)), map};
}

Distance hyper_distance(const Hypergraph& h, VertexId u, VertexId v) {
  check_vertex(h, u, "hyper_distance");
  check_vertex(h, v, "hyper_distance");
  std::vector<Distance> d(h.vertex_count(), kInfinite);
  std::vector<std::vector<std::size_t>> member(h.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i)
    for (VertexId x : h.edges()[i]) member[x].push_back(i);
  std::vector<VertexId> queue{u};
  d[u] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId x = queue[i];
    for (std::size_t e : member[x])
      for (VertexId y : h.edges()[e])
        if (d[y] == kInfinite) {
          d[y] = d[x] + 1;
          queue.push_back(y);
        }
  }
  return d[v];
}

LdcReport hyper_ldc(const Hypergraph& h, const Pinning& pin, VertexId u, VertexId v) {
  check_hyper_cap(h);
  check_vertex(h, u, "hyper_ldc");
  check_vertex(h, v, "hyper_ldc");
  if (u == v) throw ArgumentError("hyper_ldc: u == v");
  if (pin.contains(u) || pin.contains(v)) throw ArgumentError("hyper_ldc: u or v is pinned");
  auto [plus, minus] = pin_masks(h, pin);
  if (!independent(plus, edge_masks(h))) throw ArgumentError("hyper_ldc: pin is not feasible");
  // counts[a][b][k]: sets with u in (a), v in (b), size k.
  std::array<std::array<std::vector<long long>, 2>, 2> counts;
  for (auto& row : counts)
    for (auto& c : row) c.assign(h.vertex_count() + 1, 0);
  for_each_independent(h, plus, minus,
                       [&](std::uint64_t s) { ++counts[(s >> u) & 1][(s >> v) & 1][std::popcount(s)]; });
  LdcReport r = product_difference(count_poly(counts[1][1]), count_poly(counts[0][0]), count_poly(counts[1][0]),
                                   count_poly(counts[0][1]), order_after(hyper_distance(h, u, v), 1));
  r.lemma = "hypergraph";
  nlohmann::json pj = nlohmann::json::object();
  for (const auto& [x, s] : pin.spins()) pj[std::to_string(x)] = std::string(1, spin_char(s));
  r.instance = {{"hypergraph", to_json(h)}, {"pin", pj}, {"u", u}, {"v", v}};
  return r;
}

// ----------------------------------------------------------------- thresholds

namespace {
Rational rpow(long base, unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
  return Rational(r);
}
}  // namespace

Rational lambda_s(unsigned delta) {
  if (delta < 1) throw ArgumentError("lambda_s: degree must be >= 1");
  Rational r = rpow(delta - 1, delta - 1) / rpow(delta, delta);
  r.canonicalize();
  return r;
}

Rational lambda_c(unsigned delta) {
  if (delta < 3) throw ArgumentError("lambda_c: degree must be >= 3");
  Rational r = rpow(delta - 1, delta - 1) / rpow(delta - 2, delta);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------- Potts

namespace {

class ComponentCounter {
 public:
  explicit ComponentCounter(std::size_t n) : parent_(n), size_(n, 1), count_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      undo_.push_back(kNone);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --count_;
    undo_.push_back(b);
  }
  void rollback() {
    std::size_t b = undo_.back();
    undo_.pop_back();
    if (b == kNone) return;
    std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    ++count_;
  }
  std::size_t count() const { return count_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_, size_, undo_;
  std::size_t count_;
};

void check_edge_cap(std::size_t m) {
  std::size_t cap = enumeration_cap(kEdgeCap);
  if (m > cap)
    throw ResourceError("enumeration cap exceeded: " + std::to_string(m) + " edges > cap " + std::to_string(cap));
}

}  // namespace

RationalPoly potts_Z(const Graph& g, unsigned q) {
  if (q == 0) throw ArgumentError("potts_Z: q must be positive");
  check_edge_cap(g.edge_count());
  std::size_t n = g.vertex_count(), m = g.edge_count();
  // counts[k][c]: subsets with k edges and c components.
  std::vector<std::vector<long long>> counts(m + 1, std::vector<long long>(n + 1));
  ComponentCounter cc(n);
  auto rec = [&](auto&& self, EdgeId e, std::size_t k) -> void {
    if (e == m) {
      ++counts[k][cc.count()];
      return;
    }
    self(self, e + 1, k);
    cc.unite(g.edge(e).u, g.edge(e).v);
    self(self, e + 1, k + 1);
    cc.rollback();
  };
  rec(rec, 0, 0);
  std::vector<Rational> qp(n + 1);
  for (std::size_t c = 0; c <= n; ++c) qp[c] = rpow(q, static_cast<unsigned>(c));
  std::vector<Rational> coeff(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    for (std::size_t c = 0; c <= n; ++c)
      if (counts[k][c]) coeff[k] += qp[c] * Rational(static_cast<long>(counts[k][c]));
  return RationalPoly(std::move(coeff));
}

Rational potts_Z_value(const Graph& g, unsigned q, const Rational& w, bool as_tutte) {
  if (as_tutte) return potts_Z(g, q).eval(w - 1);
  if (q == 0) throw ArgumentError("potts_Z_value: q must be positive");
  std::size_t n = g.vertex_count();
  double states = std::pow(static_cast<double>(q), static_cast<double>(n));
  if (states > std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(enumeration_cap(), 62))))
    throw ResourceError("potts_Z_value: q^n exceeds the enumeration cap");
  std::vector<long long> mono_count(g.edge_count() + 1);
  std::vector<unsigned> colour(n);
  while (true) {
    std::size_t mono = 0;
    for (const Edge& e : g.edges()) mono += colour[e.u] == colour[e.v];
    ++mono_count[mono];
    std::size_t i = 0;
    while (i < n && ++colour[i] == q) colour[i++] = 0;
    if (i == n) break;
  }
  Rational z = 0, wp = 1;
  for (long long c : mono_count) {
    z += wp * Rational(static_cast<long>(c));
    wp *= w;
  }
  return z;
}

LdcReport potts_ldc(const Graph& g, unsigned q, EdgeId e1, EdgeId e2) {
  if (e1 >= g.edge_count() || e2 >= g.edge_count()) throw ArgumentError("potts_ldc: bad edge id");
  if (e1 == e2) throw ArgumentError("potts_ldc: e1 == e2");
  LdcReport r = product_difference(potts_Z(delete_edges(g, {e1}), q), potts_Z(delete_edges(g, {e2}), q),
                                   potts_Z(g, q), potts_Z(delete_edges(g, {e1, e2}), q),
                                   edge_distance(g, e1, e2));
  r.lemma = "potts";
  r.instance = {{"graph", graph_to_json(g)}, {"q", q}, {"e1", e1}, {"e2", e2}};
  return r;
}

// --------------------------------------------------------------------- Holant

void HolantInstance::validate() const {
  if (local_fn.size() != graph.vertex_count()) throw ArgumentError("holant: one local function per vertex");
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    if (local_fn[v].size() != graph.degree(v) + 1)
      throw ArgumentError("holant: table length for vertex " + std::to_string(v) + " must be degree + 1");
  if (edge_activity < 0) throw ArgumentError("holant: edge activity must be >= 0");
}

HolantInstance holant_even_subgraph(const Graph& g, const Rational& rho, const Rational& activity) {
  HolantInstance inst{g, {}, activity};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<Rational> f;
    for (std::size_t k = 0; k <= g.degree(v); ++k) f.push_back(k % 2 == 0 ? Rational(1) : rho);
    inst.local_fn.push_back(std::move(f));
  }
  return inst;
}

HolantInstance holant_line_ising(const Graph& g, const Rational& beta, const Rational& activity) {
  HolantInstance inst{g, {}, activity};
  auto choose2 = [](std::size_t k) { return k < 2 ? 0 : k * (k - 1) / 2; };
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::size_t d = g.degree(v);
    std::vector<Rational> f;
    for (std::size_t k = 0; k <= d; ++k) {
      Rational x = 1;
      for (std::size_t i = 0; i < choose2(k) + choose2(d - k); ++i) x *= beta;
      f.push_back(x);
    }
    inst.local_fn.push_back(std::move(f));
  }
  return inst;
}

HolantInstance holant_preset(const std::string& name, const Graph& g, const Rational& param,
                             const Rational& activity) {
  if (name == "even-subgraph") return holant_even_subgraph(g, param, activity);
  if (name == "line-ising") return holant_line_ising(g, param, activity);
  throw ArgumentError("unknown holant preset: " + name);
}

namespace {

// Calls f(mask, weight) for every edge assignment consistent with the pin with nonzero vertex product.
template <class F>
void for_each_assignment(const HolantInstance& inst, const EdgePinning& pin, F&& f) {
  inst.validate();
  const Graph& g = inst.graph;
  for (const auto& [e, _] : pin)
    if (e >= g.edge_count()) throw ArgumentError("holant: bad pinned edge id");
  check_edge_cap(g.edge_count() - pin.size());
  std::vector<std::size_t> load(g.vertex_count());
  auto rec = [&](auto&& self, EdgeId e, std::uint64_t mask) -> void {
    if (e == g.edge_count()) {
      Rational w = 1;
      for (VertexId v = 0; v < g.vertex_count() && w != 0; ++v) w *= inst.local_fn[v][load[v]];
      if (w != 0) f(mask, w);
      return;
    }
    auto it = pin.find(e);
    if (it == pin.end() || !it->second) self(self, e + 1, mask);
    if (it == pin.end() || it->second) {
      ++load[g.edge(e).u];
      ++load[g.edge(e).v];
      self(self, e + 1, mask | (std::uint64_t{1} << e));
      --load[g.edge(e).u];
      --load[g.edge(e).v];
    }
  };
  if (g.edge_count() > 63) throw ResourceError("holant: more than 63 edges");
  rec(rec, 0, 0);
}

}  // namespace

RationalPoly holant_Z(const HolantInstance& inst, const EdgePinning& pin) {
  std::vector<Rational> c(inst.graph.edge_count() + 1);
  for_each_assignment(inst, pin, [&](std::uint64_t mask, const Rational& w) { c[std::popcount(mask)] += w; });
  return RationalPoly(std::move(c));
}

Rational holant_Z_value(const HolantInstance& inst, const EdgePinning& pin) {
  return holant_Z(inst, pin).eval(inst.edge_activity);
}

LdcReport holant_ldc(const HolantInstance& inst, const EdgePinning& pin, EdgeId e1, EdgeId e2) {
  const Graph& g = inst.graph;
  if (e1 >= g.edge_count() || e2 >= g.edge_count()) throw ArgumentError("holant_ldc: bad edge id");
  if (e1 == e2) throw ArgumentError("holant_ldc: e1 == e2");
  if (pin.count(e1) || pin.count(e2)) throw ArgumentError("holant_ldc: e1 or e2 is pinned");
  std::array<std::array<std::vector<Rational>, 2>, 2> c;
  for (auto& row : c)
    for (auto& x : row) x.assign(g.edge_count() + 1, 0);
  for_each_assignment(inst, pin, [&](std::uint64_t mask, const Rational& w) {
    c[(mask >> e1) & 1][(mask >> e2) & 1][std::popcount(mask)] += w;
  });
  LdcReport r = product_difference(RationalPoly(c[1][1]), RationalPoly(c[0][0]), RationalPoly(c[1][0]),
                                   RationalPoly(c[0][1]), order_after(edge_distance(g, e1, e2), 2));
  r.lemma = "holant";
  nlohmann::json pj = nlohmann::json::object();
  for (const auto& [e, in] : pin) pj[std::to_string(e)] = in ? 1 : 0;
  r.instance = {{"graph", graph_to_json(g)}, {"pin", pj}, {"e1", e1}, {"e2", e2}};
  return r;
}

// --------------------------------------------------------------------- suites

namespace {

LdcSuiteSummary reduce(const std::string& lemma, std::vector<std::vector<LdcReport>>& parts) {
  LdcSuiteSummary s;
  s.lemma = lemma;
  for (auto& reports : parts) {
    for (auto& r : reports) {
      ++s.instances;
      if (r.tight()) {
        ++s.tight;
        if (!s.tight_example) s.tight_example = r;
      }
      if (!r.pass) {
        ++s.failures;
        if (s.failing.size() < 5) s.failing.push_back(std::move(r));
      }
    }
  }
  return s;
}

std::vector<std::vector<VertexId>> candidate_edges(std::size_t n) {
  std::vector<std::vector<VertexId>> out;
  for (VertexId a = 0; a < n; ++a) {
    out.push_back({a});
    for (VertexId b = a + 1; b < n; ++b) {
      out.push_back({a, b});
      for (VertexId c = b + 1; c < n; ++c) out.push_back({a, b, c});
    }
  }
  return out;
}

// Random feasible pin on vertices other than u and v.
Pinning random_pin(const Hypergraph& h, VertexId u, VertexId v, Rng& rng) {
  Pinning pin;
  auto masks = edge_masks(h);
  std::uint64_t plus = 0;
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    if (x == u || x == v || uniform01(rng) < 0.5) continue;
    if (uniform01(rng) < 0.5 && independent(plus | (std::uint64_t{1} << x), masks)) {
      plus |= std::uint64_t{1} << x;
      pin.set(x, Spin::kPlus);
    } else {
      pin.set(x, Spin::kMinus);
    }
  }
  return pin;
}

std::vector<LdcReport> hyper_instances(const Hypergraph& h, Rng& rng, bool all_pairs) {
  std::vector<LdcReport> out;
  std::size_t n = h.vertex_count();
  auto run = [&](VertexId u, VertexId v) {
    out.push_back(hyper_ldc(h, {}, u, v));
    out.push_back(hyper_ldc(h, random_pin(h, u, v, rng), u, v));
  };
  if (all_pairs) {
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) run(u, v);
  } else {
    VertexId u = uniform_index(rng, n), v = uniform_index(rng, n - 1);
    if (v >= u) ++v;
    run(u, v);
  }
  return out;
}

}  // namespace

LdcSuiteSummary hyper_ldc_suite(const HyperSuiteOptions& opt) {
  struct Job {
    std::size_t n;
    std::uint64_t subset;  // exhaustive: bitmask over candidate edges; random: index
    bool exhaustive;
  };
  std::vector<Job> jobs;
  for (std::size_t n = 2; n <= opt.exhaustive_n; ++n) {
    std::size_t c = candidate_edges(n).size();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c); ++s) jobs.push_back({n, s, true});
  }
  for (std::size_t n = std::max<std::size_t>(opt.exhaustive_n + 1, 2); n <= opt.max_n; ++n)
    for (std::uint64_t i = 0; i < opt.random_per_n; ++i) jobs.push_back({n, i, false});
  auto parts = parallel_map<std::vector<LdcReport>>(jobs.size(), opt.threads, [&](std::size_t i) {
    const Job& job = jobs[i];
    auto cand = candidate_edges(job.n);
    std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(job.n), job.subset, std::uint64_t{job.exhaustive}};
    Rng rng(seq);
    std::vector<std::vector<VertexId>> edges;
    if (job.exhaustive) {
      for (std::size_t k = 0; k < cand.size(); ++k)
        if ((job.subset >> k) & 1) edges.push_back(cand[k]);
    } else {
      double density = uniform_real(rng, 0.05, 0.5);
      for (const auto& e : cand)
        if (uniform01(rng) < density * (e.size() == 1 ? 0.2 : 1.0)) edges.push_back(e);
    }
    return hyper_instances(Hypergraph(job.n, edges), rng, job.exhaustive);
  });
  return reduce("hypergraph", parts);
}

LdcSuiteSummary potts_ldc_suite(const std::vector<Graph>& graphs, unsigned q, std::size_t threads) {
  auto parts = parallel_map<std::vector<LdcReport>>(graphs.size(), threads, [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    std::size_t m = g.edge_count();
    std::vector<LdcReport> out;
    if (m < 2) return out;
    RationalPoly z = potts_Z(g, q);
    std::vector<RationalPoly> single;
    for (EdgeId e = 0; e < m; ++e) single.push_back(potts_Z(delete_edges(g, {e}), q));
    for (EdgeId a = 0; a < m; ++a) {
      for (EdgeId b = a + 1; b < m; ++b) {
        LdcReport r = product_difference(single[a], single[b], z, potts_Z(delete_edges(g, {a, b}), q),
                                         edge_distance(g, a, b));
        r.lemma = "potts";
        r.instance = {{"graph", graph_to_json(g)}, {"q", q}, {"e1", a}, {"e2", b}};
        out.push_back(std::move(r));
      }
    }
    return out;
  });
  return reduce("potts", parts);
}

LdcSuiteSummary holant_ldc_suite(const std::vector<Graph>& graphs, const Rational& rho, std::size_t threads) {
  auto parts = parallel_map<std::vector<LdcReport>>(graphs.size(), threads, [&](std::size_t gi) {
    const Graph& g = graphs[gi];
    std::size_t m = g.edge_count();
    std::vector<LdcReport> out;
    if (m < 2) return out;
    HolantInstance inst = holant_even_subgraph(g, rho);
    std::vector<std::pair<std::uint64_t, Rational>> table;
    for_each_assignment(inst, {}, [&](std::uint64_t mask, const Rational& w) { table.emplace_back(mask, w); });
    for (EdgeId a = 0; a < m; ++a) {
      for (EdgeId b = a + 1; b < m; ++b) {
        std::array<std::array<std::vector<Rational>, 2>, 2> c;
        for (auto& row : c)
          for (auto& x : row) x.assign(m + 1, 0);
        for (const auto& [mask, w] : table) c[(mask >> a) & 1][(mask >> b) & 1][std::popcount(mask)] += w;
        LdcReport r = product_difference(RationalPoly(c[1][1]), RationalPoly(c[0][0]), RationalPoly(c[1][0]),
                                         RationalPoly(c[0][1]), order_after(edge_distance(g, a, b), 2));
        r.lemma = "holant";
        r.instance = {{"graph", graph_to_json(g)}, {"rho", rho.get_str()}, {"e1", a}, {"e2", b}};
        out.push_back(std::move(r));
      }
    }
    return out;
  });
  return reduce("holant", parts);
}

}  // namespace zfc
