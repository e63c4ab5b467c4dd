#include "spexkm/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>
#include <string>

#include "spexkm/detail/blossom.hpp"
#include "spexkm/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spexkm {

namespace {

struct GraphAdjacency {
  const Graph& g;
  int order() const { return g.order(); }
  template <typename F>
  void for_each_neighbor(int v, F f) const {
    const auto r = g.row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        f(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }
};

using Words = std::vector<std::uint64_t>;

int popcount(const Words& w) {
  int c = 0;
  for (auto x : w) c += std::popcount(x);
  return c;
}

// Greedy colouring of the candidate set; the colour count bounds any clique in it.
int colour_bound(const Graph& g, const Words& cand) {
  Words uncoloured = cand;
  int colours = 0;
  Words cls(cand.size());
  while (popcount(uncoloured) > 0) {
    ++colours;
    cls = uncoloured;
    for (std::size_t w = 0; w < cls.size(); ++w) {
      while (cls[w]) {
        const int v = static_cast<int>(w * 64 + std::countr_zero(cls[w]));
        const auto r = g.row(v);
        uncoloured[w] &= ~(std::uint64_t{1} << (v & 63));
        cls[w] &= ~(std::uint64_t{1} << (v & 63));
        for (std::size_t i = 0; i < cls.size(); ++i) cls[i] &= ~r[i];
      }
    }
  }
  return colours;
}

bool extend_clique(const Graph& g, Words cand, int need) {
  if (need == 0) return true;
  if (popcount(cand) < need) return false;
  if (need > 2 && colour_bound(g, cand) < need) return false;
  for (std::size_t w = 0; w < cand.size(); ++w) {
    while (cand[w]) {
      const int v = static_cast<int>(w * 64 + std::countr_zero(cand[w]));
      cand[w] &= cand[w] - 1;
      if (popcount(cand) + 1 < need) return false;
      const auto r = g.row(v);
      Words next(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & r[i];
      if (extend_clique(g, std::move(next), need - 1)) return true;
    }
  }
  return false;
}

// Barrier search on graphs of order <= 24 with 32-bit adjacency masks.
struct MaskGraph {
  int n = 0;
  std::uint32_t adj[kTutteBergeMaxOrder] = {};

  explicit MaskGraph(const Graph& g) : n(g.order()) {
    if (n > kTutteBergeMaxOrder)
      throw CapacityError("tutte_berge: order " + std::to_string(n) + " exceeds " +
                          std::to_string(kTutteBergeMaxOrder));
    for (int v = 0; v < n; ++v)
      for (int u = 0; u < n; ++u)
        if (g.has_edge(u, v)) adj[v] |= std::uint32_t{1} << u;
  }

  std::uint32_t full() const { return n == 32 ? ~0U : ((std::uint32_t{1} << n) - 1); }

  // Value of barrier `b`, or -1 if some component of G - b is even.
  int barrier_value(std::uint32_t b) const {
    std::uint32_t rest = full() & ~b;
    int components = 0;
    const int remaining = std::popcount(rest);
    while (rest) {
      std::uint32_t comp = rest & (~rest + 1);
      std::uint32_t frontier = comp;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t fresh = adj[v] & rest & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      if ((std::popcount(comp) & 1) == 0) return -1;
      rest &= ~comp;
      ++components;
    }
    return std::popcount(b) + (remaining - components) / 2;
  }
};

// Lexicographic order on sorted member lists.
bool lex_less(std::uint32_t a, std::uint32_t b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct Best {
  int value = std::numeric_limits<int>::max();
  std::uint32_t barrier = 0;

  void offer(int v, std::uint32_t b) {
    if (v < 0) return;
    if (v < value || (v == value && lex_less(b, barrier))) {
      value = v;
      barrier = b;
    }
  }
};

TutteBergeWitness make_witness(const Graph& g, std::uint32_t barrier) {
  TutteBergeWitness w;
  VertexSet removed(g.order());
  for (int v = 0; v < g.order(); ++v)
    if ((barrier >> v) & 1U) {
      w.barrier.push_back(v);
      removed.insert(v);
    }
  // components of G - B, in order of smallest member
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (removed.contains(s) || label[s] >= 0) continue;
    int size = 0;
    std::vector<Vertex> stack{s};
    label[s] = s;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      ++size;
      g.neighbors(v).for_each([&](Vertex u) {
        if (!removed.contains(u) && label[u] < 0) {
          label[u] = s;
          stack.push_back(u);
        }
      });
    }
    w.odd_component_sizes.push_back(size);
  }
  w.value = w.recomputed_value();
  return w;
}

}  // namespace

int TutteBergeWitness::recomputed_value() const {
  int v = static_cast<int>(barrier.size());
  for (int a : odd_component_sizes) v += (a - 1) / 2;
  return v;
}

int matching_number(const Graph& g) {
  std::vector<int> mate;
  detail::Blossom<GraphAdjacency> blossom;
  return blossom.maximum(GraphAdjacency{g}, mate);
}

std::vector<int> maximum_matching(const Graph& g) {
  std::vector<int> mate;
  detail::Blossom<GraphAdjacency> blossom;
  blossom.maximum(GraphAdjacency{g}, mate);
  return mate;
}

bool has_clique(const Graph& g, int r) {
  if (r < 1) throw DomainError("has_clique: r must be >= 1");
  if (r > g.order()) return false;
  Words all(g.words_per_row(), 0);
  for (int v = 0; v < g.order(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
  return extend_clique(g, std::move(all), r);
}

bool is_family_free(const Graph& g, int k, int s) {
  if (k < 1) throw DomainError("is_family_free: k must be >= 1");
  if (s < 0) throw DomainError("is_family_free: s must be >= 0");
  return !has_clique(g, k + 1) && matching_number(g) <= s;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  VertexSet unseen = VertexSet::full(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!unseen.contains(s)) continue;
    VertexSet comp(g.order());
    comp.insert(s);
    unseen.erase(s);
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      VertexSet fresh = g.neighbors(v);
      fresh &= unseen;
      fresh.for_each([&](Vertex u) { stack.push_back(u); });
      unseen -= fresh;
      comp |= fresh;
    }
    out.push_back(comp.members());
  }
  return out;
}

TutteBergeWitness tutte_berge_min_serial(const Graph& g) {
  const MaskGraph mg(g);
  Best best;
  const std::uint64_t limit = std::uint64_t{1} << mg.n;
  for (std::uint64_t b = 0; b < limit; ++b) best.offer(mg.barrier_value(static_cast<std::uint32_t>(b)), static_cast<std::uint32_t>(b));
  return make_witness(g, best.barrier);
}

TutteBergeWitness tutte_berge_min(const Graph& g) {
  const MaskGraph mg(g);
  if (mg.n <= 12) return tutte_berge_min_serial(g);
  const int top_bits = std::min(mg.n, 8);
  const int low_bits = mg.n - top_bits;
  const long long chunks = 1LL << top_bits;
  std::vector<Best> per_chunk(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (long long c = 0; c < chunks; ++c) {
    Best local;
    const std::uint32_t hi = static_cast<std::uint32_t>(c) << low_bits;
    for (std::uint32_t lo = 0; lo < (std::uint32_t{1} << low_bits); ++lo) local.offer(mg.barrier_value(hi | lo), hi | lo);
    per_chunk[static_cast<std::size_t>(c)] = local;
  }
  Best best;
  for (const auto& b : per_chunk)
    if (b.value != std::numeric_limits<int>::max()) best.offer(b.value, b.barrier);
  return make_witness(g, best.barrier);
}

std::vector<int> tutte_berge_values(const Graph& g) {
  const MaskGraph mg(g);
  std::set<int> values;
  const std::uint64_t limit = std::uint64_t{1} << mg.n;
  for (std::uint64_t b = 0; b < limit; ++b) {
    const int v = mg.barrier_value(static_cast<std::uint32_t>(b));
    if (v >= 0) values.insert(v);
  }
  return {values.begin(), values.end()};
}

}  // namespace spexkm
