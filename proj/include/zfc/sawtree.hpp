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

#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "zfc/graph.hpp"
#include "zfc/series.hpp"

namespace zfc {

enum class SawPin : std::uint8_t { kFree, kPlus, kMinus };

/**
 * @brief Node of a depth-truncated self-avoiding-walk tree.
 *
 * `frontier` marks a free node cut off by the depth limit; its ratio is
 * unknown and contributes the zero series. `limit` is the build depth.
 */
struct SawNode {
  VertexId original_vertex = 0;
  SawPin pin = SawPin::kFree;
  std::size_t depth = 0;
  std::size_t limit = 0;
  bool frontier = false;
  std::vector<SawNode> children;

  std::size_t size() const;
};

/// Materializes the SAW tree of `g` at `root` down to `depth`.
/// A walk that closes a cycle at x ends in a leaf pinned + when the closing
/// neighbour of x has larger id than the neighbour the walk left x through.
SawNode build_saw_tree(const Graph& g, VertexId root, const Pinning& pin, std::size_t depth);

/// Value of the (finite) tree recursion at a numeric field lambda.
Complex ratio_value(const SawNode& node, double beta, Complex lambda);

namespace detail {

// Sums one child's factor into the running numerator and denominator.
template <class S>
struct FactorProduct {
  TruncatedSeries<S> num, den;
  int pin_power = 0;  // net power of beta from pinned children
  bool any_free = false;
  explicit FactorProduct(std::size_t bound) : num(TruncatedSeries<S>::constant(bound, S(1))), den(num) {}

  void pinned(SawPin p) { pin_power += p == SawPin::kPlus ? 1 : -1; }
  void free_child(const TruncatedSeries<S>& r, const S& beta) {
    auto a = add_constant(scale(r, beta), S(1));
    auto b = add_constant(r, beta);
    if (any_free) {
      num = mul(num, a);
      den = mul(den, b);
    } else {
      num = std::move(a);
      den = std::move(b);
      any_free = true;
    }
  }
  // z * beta^pin_power * num/den at one degree higher.
  TruncatedSeries<S> finish(const S& beta, std::size_t bound, DivisionMethod method) const {
    TruncatedSeries<S> out(bound);
    S c(1);
    for (int i = 0; i < std::abs(pin_power); ++i) c *= beta;
    if (pin_power < 0) c = S(1) / c;
    TruncatedSeries<S> q = any_free ? div(num, den, "child-factor denominator", method) : num;
    for (std::size_t j = 0; j + 1 <= bound; ++j) out[j + 1] = c * q[j];
    return out;
  }
};

template <class S>
TruncatedSeries<S> ratio_series_rec(const SawNode& node, const S& beta, std::size_t k, DivisionMethod method) {
  if (node.pin != SawPin::kFree) throw ArgumentError("ratio_series on a pinned node");
  if (k == 0 || node.frontier) return TruncatedSeries<S>(k);
  if (node.depth + k > node.limit)
    throw ArgumentError("ratio_series: insufficient build depth (need " + std::to_string(node.depth + k) +
                        ", built " + std::to_string(node.limit) + ")");
  FactorProduct<S> fp(k - 1);
  for (const auto& c : node.children) {
    if (c.pin != SawPin::kFree) fp.pinned(c.pin);
    else fp.free_child(ratio_series_rec(c, beta, k - 1, method), beta);
  }
  return fp.finish(beta, k, method);
}

}  // namespace detail

/// R^{[k]} of the subtree at `node` as a series in the uniform field.
template <class S>
TruncatedSeries<S> ratio_series(const SawNode& node, const S& beta, std::size_t k,
                                DivisionMethod method = DivisionMethod::kAuto) {
  return detail::ratio_series_rec(node, beta, k, method);
}

struct SawOptions {
  bool memoize = true;
  /// Memo entries kept before the table is flushed.
  std::size_t memo_limit = 200000;
  /// Subtrees with remaining bound below this are not memoized.
  std::size_t memo_min_bound = 3;
  DivisionMethod division = DivisionMethod::kSubstitution;
};

/**
 * @brief Lazy SAW-tree series evaluator.
 *
 * Walks the tree along the current path without storing it. Subtrees are
 * memoized on (vertex, parent, bound, visited set, cycle-closing pins at the
 * boundary of the visited set), which fully determines a subtree.
 * Also records the largest coefficient magnitude seen, used to pick the
 * working precision.
 */
template <class S>
class SawSeriesEvaluator {
 public:
  SawSeriesEvaluator(const Graph& g, const Pinning& pin, const S& beta, SawOptions opt = {})
      : g_(g), beta_(beta), opt_(opt), pos_(g.vertex_count(), -1), pinned_(g.vertex_count(), 0) {
    pin.validate(g);
    for (const auto& [v, s] : pin.spins()) pinned_[v] = s == Spin::kPlus ? 1 : -1;
  }

  /// R^{pin}_{G,root} truncated at degree k.
  TruncatedSeries<S> ratio(VertexId root, std::size_t k) {
    if (root >= g_.vertex_count()) throw ArgumentError("ratio: bad root");
    if (pinned_[root]) throw ArgumentError("ratio: root is pinned");
    path_.clear();
    return visit(root, SIZE_MAX, k);
  }

  double envelope_log2() const { return envelope_; }
  std::size_t nodes_visited() const { return nodes_; }
  std::size_t memo_hits() const { return hits_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (auto x : k) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  void note(const TruncatedSeries<S>& s) {
    for (std::size_t i = 0; i <= s.degree_bound(); ++i) envelope_ = std::max(envelope_, log2_abs(s[i]));
  }

  // Pin of the leaf created when the walk at w steps back onto path_[i].
  SawPin closing_pin(VertexId w, std::size_t i) const {
    return w > path_[i + 1] ? SawPin::kPlus : SawPin::kMinus;
  }

  std::vector<std::uint64_t> make_key(VertexId w, VertexId parent, std::size_t b) const {
    const std::size_t n = g_.vertex_count();
    std::vector<std::uint64_t> key{w, parent, b};
    std::size_t words = (n + 63) / 64;
    std::size_t base = key.size();
    key.resize(base + words, 0);
    for (VertexId v : path_) key[base + v / 64] |= std::uint64_t{1} << (v % 64);
    // Pins on edges from unvisited vertices (and w) into the visited set.
    std::uint64_t acc = 0;
    int nbits = 0;
    auto push = [&](bool bit) {
      acc |= std::uint64_t{bit} << nbits;
      if (++nbits == 64) {
        key.push_back(acc);
        acc = 0;
        nbits = 0;
      }
    };
    for (VertexId x = 0; x < n; ++x) {
      if (pos_[x] >= 0 && x != w) continue;
      for (const auto& inc : g_.incident(x)) {
        int i = pos_[inc.neighbor];
        if (i < 0 || inc.neighbor == w) continue;
        if (x == w && inc.neighbor == parent) continue;
        push(x > path_[static_cast<std::size_t>(i) + 1]);
      }
    }
    key.push_back(acc);
    return key;
  }

  TruncatedSeries<S> visit(VertexId w, VertexId parent, std::size_t b) {
    ++nodes_;
    if (b == 0) return TruncatedSeries<S>(0);
    path_.push_back(w);
    pos_[w] = static_cast<int>(path_.size()) - 1;

    std::vector<std::uint64_t> key;
    bool use_memo = opt_.memoize && b >= opt_.memo_min_bound;
    if (use_memo) {
      // path_ includes w here; the key uses the visited set including w.
      key = make_key(w, parent, b);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++hits_;
        path_.pop_back();
        pos_[w] = -1;
        return it->second;
      }
    }

    detail::FactorProduct<S> fp(b - 1);
    for (const auto& inc : g_.incident(w)) {
      VertexId x = inc.neighbor;
      if (x == parent) continue;
      if (pos_[x] >= 0) {
        fp.pinned(closing_pin(w, static_cast<std::size_t>(pos_[x])));
      } else if (pinned_[x]) {
        fp.pinned(pinned_[x] > 0 ? SawPin::kPlus : SawPin::kMinus);
      } else {
        auto r = visit(x, w, b - 1);
        fp.free_child(r, beta_);
      }
    }
    if (fp.any_free) {
      note(fp.num);
      note(fp.den);
    }
    auto out = fp.finish(beta_, b, opt_.division);
    note(out);

    path_.pop_back();
    pos_[w] = -1;
    if (use_memo) {
      if (memo_.size() >= opt_.memo_limit) memo_.clear();
      memo_.emplace(std::move(key), out);
    }
    return out;
  }

  const Graph& g_;
  S beta_;
  SawOptions opt_;
  std::vector<int> pos_;
  std::vector<int> pinned_;
  std::vector<VertexId> path_;
  std::unordered_map<std::vector<std::uint64_t>, TruncatedSeries<S>, KeyHash> memo_;
  double envelope_ = -INFINITY;
  std::size_t nodes_ = 0;
  std::size_t hits_ = 0;
};

}  // namespace zfc
