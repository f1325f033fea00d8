#include "zfc/sawtree.hpp"

namespace zfc {

std::size_t SawNode::size() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.size();
  return s;
}

namespace {

struct Builder {
  const Graph& g;
  const Pinning& pin;
  std::size_t limit;
  std::vector<int> pos;
  std::vector<VertexId> path;

  SawNode grow(VertexId w, VertexId parent, std::size_t depth) {
    SawNode node;
    node.original_vertex = w;
    node.depth = depth;
    node.limit = limit;
    if (depth == limit) {
      node.frontier = true;
      return node;
    }
    path.push_back(w);
    pos[w] = static_cast<int>(path.size()) - 1;
    for (const auto& inc : g.incident(w)) {
      VertexId x = inc.neighbor;
      if (x == parent) continue;
      if (pos[x] >= 0) {
        SawNode leaf;
        leaf.original_vertex = x;
        leaf.depth = depth + 1;
        leaf.limit = limit;
        leaf.pin = w > path[static_cast<std::size_t>(pos[x]) + 1] ? SawPin::kPlus : SawPin::kMinus;
        node.children.push_back(std::move(leaf));
      } else if (auto s = pin.get(x)) {
        SawNode leaf;
        leaf.original_vertex = x;
        leaf.depth = depth + 1;
        leaf.limit = limit;
        leaf.pin = *s == Spin::kPlus ? SawPin::kPlus : SawPin::kMinus;
        node.children.push_back(std::move(leaf));
      } else {
        node.children.push_back(grow(x, w, depth + 1));
      }
    }
    path.pop_back();
    pos[w] = -1;
    return node;
  }
};

}  // namespace

SawNode build_saw_tree(const Graph& g, VertexId root, const Pinning& pin, std::size_t depth) {
  if (root >= g.vertex_count()) throw ArgumentError("build_saw_tree: bad root");
  pin.validate(g);
  if (pin.contains(root)) throw ArgumentError("build_saw_tree: root is pinned");
  Builder b{g, pin, depth, std::vector<int>(g.vertex_count(), -1), {}};
  return b.grow(root, SIZE_MAX, 0);
}

Complex ratio_value(const SawNode& node, double beta, Complex lambda) {
  if (node.pin != SawPin::kFree) throw ArgumentError("ratio_value on a pinned node");
  if (node.frontier) return 0.0;
  Complex r = lambda;
  for (const auto& c : node.children) {
    if (c.pin == SawPin::kPlus) r *= beta;
    else if (c.pin == SawPin::kMinus) r /= beta;
    else {
      Complex x = ratio_value(c, beta, lambda);
      r *= (beta * x + 1.0) / (x + beta);
    }
  }
  return r;
}

}  // namespace zfc
