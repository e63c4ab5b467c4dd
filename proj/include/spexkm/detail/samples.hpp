#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "spexkm/graph.hpp"

namespace spexkm::detail {

/// Calls fn for every nonincreasing partition of n into at most max_parts parts.
inline void for_each_partition(int n, int max_parts, const std::function<void(const PartSizes&)>& fn) {
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      fn(PartSizes(current));
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
}

/// Random part sizes (2 to 5 parts, each 1..12) with some pair differing by >= 2.
inline PartSizes random_unbalanced_parts(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> count(2, 5);
  std::uniform_int_distribution<int> size(1, 12);
  for (;;) {
    std::vector<int> parts(static_cast<std::size_t>(count(rng)));
    for (auto& p : parts) p = size(rng);
    const auto [lo, hi] = std::minmax_element(parts.begin(), parts.end());
    if (*hi - *lo >= 2) return PartSizes(std::move(parts));
  }
}

/// A graph with two disjoint independent classes S, T of twins and no S-T edges,
/// made by cloning two nonadjacent vertices x, y of a random base graph.
struct CloneInstance {
  Graph graph;
  VertexSet s;
  VertexSet t;
};

inline CloneInstance random_clone_instance(std::mt19937_64& rng, int max_order = 12) {
  std::uniform_int_distribution<int> base_order(2, 8);
  std::uniform_int_distribution<int> clones(1, 3);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    const int m = base_order(rng);
    const int cs = clones(rng);
    const int ct = clones(rng);
    const int n = m - 2 + cs + ct;
    if (n > max_order) continue;
    Graph base(m);
    for (int u = 0; u < m; ++u)
      for (int v = u + 1; v < m; ++v)
        if (coin(rng)) base.add_edge(u, v);
    // x = m-2, y = m-1 must be nonadjacent
    base.remove_edge(m - 2, m - 1);
    CloneInstance out{Graph(n), VertexSet(n), VertexSet(n)};
    const int others = m - 2;
    for (int u = 0; u < others; ++u)
      for (int v = u + 1; v < others; ++v)
        if (base.has_edge(u, v)) out.graph.add_edge(u, v);
    for (int c = 0; c < cs; ++c) {
      const int vertex = others + c;
      out.s.insert(vertex);
      for (int u = 0; u < others; ++u)
        if (base.has_edge(u, m - 2)) out.graph.add_edge(vertex, u);
    }
    for (int c = 0; c < ct; ++c) {
      const int vertex = others + cs + c;
      out.t.insert(vertex);
      for (int u = 0; u < others; ++u)
        if (base.has_edge(u, m - 1)) out.graph.add_edge(vertex, u);
    }
    return out;
  }
}

}  // namespace spexkm::detail
