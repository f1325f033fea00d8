#include "zfc/exact.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

namespace zfc {

std::size_t enumeration_cap(std::size_t fallback) {
  if (const char* env = std::getenv("ZFC_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw ArgumentError(std::string("ZFC_CAP is not an integer: ") + env);
    }
  }
  return fallback;
}

namespace {

void check_cap(std::size_t n) {
  std::size_t cap = enumeration_cap();
  if (n > cap)
    throw ResourceError("enumeration cap exceeded: " + std::to_string(n) + " vertices > cap " + std::to_string(cap));
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// The graph after contracting infinite edges, with each vertex class
// ("group") carrying the product of its members' fields.
template <class Field>
struct Contracted {
  struct Link {
    std::size_t other;  // earlier group
    Field beta;
  };
  bool feasible = true;
  Field constant{1};                        // betas of edges inside a group
  std::vector<Field> field;                 // per group
  std::vector<std::size_t> size;            // member count per group
  std::vector<int> forced;                  // 0 free, +1, -1
  std::vector<std::vector<Link>> back;      // links to lower-numbered groups
};

template <class Real, class Field>
Contracted<Field> contract(const Graph& g, const IsingParamsT<Real, Field>& p, const PartialEvaluationT<Real, Field>& pe,
                           const Pinning& pin) {
  p.validate(g);
  pin.validate(g);
  check_cap(g.vertex_count());
  for (const auto& [e, _] : pe.edges)
    if (e >= g.edge_count()) throw ArgumentError("override on missing edge " + std::to_string(e));
  for (const auto& [v, _] : pe.fields)
    if (v >= g.vertex_count()) throw ArgumentError("override on missing vertex " + std::to_string(v));

  const std::size_t n = g.vertex_count();
  UnionFind uf(n);
  for (const auto& [e, x] : pe.edges)
    if (x.is_infinite()) uf.unite(g.edge(e).u, g.edge(e).v);

  std::vector<std::size_t> gid(n, SIZE_MAX);
  Contracted<Field> c;
  for (VertexId v = 0; v < n; ++v) {
    std::size_t r = uf.find(v);
    if (gid[r] == SIZE_MAX) {
      gid[r] = c.field.size();
      c.field.emplace_back(1);
      c.size.push_back(0);
      c.forced.push_back(0);
    }
    std::size_t k = gid[v] = gid[r];
    auto it = pe.fields.find(v);
    c.field[k] *= (it != pe.fields.end()) ? it->second : p.lambda[v];
    c.size[k] += 1;
    if (auto s = pin.get(v)) {
      int want = *s == Spin::kPlus ? 1 : -1;
      if (c.forced[k] == -want) c.feasible = false;
      c.forced[k] = want;
    }
  }
  c.back.resize(c.field.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto it = pe.edges.find(e);
    if (it != pe.edges.end() && it->second.is_infinite()) continue;
    Field b = Field(it != pe.edges.end() ? it->second.value() : p.beta[e]);
    std::size_t a = gid[g.edge(e).u], bb = gid[g.edge(e).v];
    if (a == bb) {
      c.constant *= b;
    } else {
      if (a < bb) std::swap(a, bb);
      c.back[a].push_back({bb, b});
    }
  }
  return c;
}

// Depth-first walk over group spins carrying the prefix weight. Avoids the
// divisions a Gray-code update would need when some field is zero.
template <class Field, class Visit>
void enumerate(const Contracted<Field>& c, Visit&& visit) {
  const std::size_t G = c.field.size();
  std::vector<int> spin(G, 0);
  auto rec = [&](auto&& self, std::size_t k, const Field& w, std::size_t plus) -> void {
    if (k == G) {
      visit(w, plus);
      return;
    }
    for (int s : {-1, 1}) {
      if (c.forced[k] != 0 && c.forced[k] != s) continue;
      spin[k] = s;
      Field x = w;
      if (s == 1) x *= c.field[k];
      for (const auto& l : c.back[k])
        if (spin[l.other] == s) x *= l.beta;
      self(self, k + 1, x, plus + (s == 1 ? c.size[k] : 0));
    }
  };
  rec(rec, 0, c.constant, 0);
}

}  // namespace

Complex exact_Z(const Graph& g, const IsingParams& p, const PartialEvaluation& pe, const Pinning& pin) {
  auto c = contract(g, p, pe, pin);
  if (!c.feasible) return 0.0;
  Complex z = 0.0;
  enumerate(c, [&](const Complex& w, std::size_t) { z += w; });
  return z;
}

RationalPoly exact_Z_poly(const Graph& g, const RationalIsingParams& p, const RationalEvaluation& pe,
                          const Pinning& pin) {
  auto c = contract(g, p, pe, pin);
  if (!c.feasible) return {};
  std::vector<Rational> coeff(g.vertex_count() + 1);
  enumerate(c, [&](const Rational& w, std::size_t plus) { coeff[plus] += w; });
  return RationalPoly(std::move(coeff));
}

Complex exact_edge_ratio(const Graph& g, const IsingParams& p, EdgeId e, const PartialEvaluation& pe,
                         Extended<double> replacement) {
  if (e >= g.edge_count()) throw ArgumentError("exact_edge_ratio: bad edge id");
  if (pe.edges.count(e)) throw ArgumentError("exact_edge_ratio: edge already overridden");
  Complex den = exact_Z(g, p, pe, {});
  if (den == 0.0) throw NumericError("exact_edge_ratio: Z vanishes");
  PartialEvaluation num_pe = pe;
  num_pe.edges.emplace(e, replacement);
  return exact_Z(g, p, num_pe, {}) / den;
}

Complex exact_marginal_ratio(const Graph& g, const IsingParams& p, VertexId v, const Pinning& pin) {
  if (v >= g.vertex_count()) throw ArgumentError("exact_marginal_ratio: bad vertex id");
  if (pin.contains(v)) throw ArgumentError("exact_marginal_ratio: vertex is pinned");
  Complex den = exact_Z(g, p, {}, pin.with(v, Spin::kMinus));
  if (den == 0.0) throw NumericError("exact_marginal_ratio: Z^- vanishes");
  return exact_Z(g, p, {}, pin.with(v, Spin::kPlus)) / den;
}

}  // namespace zfc
