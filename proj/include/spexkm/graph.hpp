#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace spexkm {

/// Hard limit on the order of a materialized Graph.
inline constexpr int kMaxVertices = 4096;

using Vertex = int;

/// Subset of {0, ..., universe-1} stored as a packed bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet of(int universe, std::initializer_list<Vertex> members);
  static VertexSet from(int universe, std::span<const Vertex> members);
  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const noexcept;
  bool empty() const noexcept;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  /// Members in increasing order.
  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        fn(static_cast<Vertex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  friend class Graph;

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense simple undirected graph; adjacency rows are bitsets.
class Graph {
 public:
  Graph() = default;
  /// Empty graph on n vertices. Throws CapacityError if n > kMaxVertices.
  explicit Graph(int n);

  int order() const noexcept { return n_; }
  long long edge_count() const noexcept;

  bool has_edge(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  int degree(Vertex v) const;
  VertexSet neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const;
  std::size_t words_per_row() const noexcept { return words_; }

  /// Throws std::logic_error if symmetry or loop-freeness is broken.
  void check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Sizes (n_1, ..., n_k) of a complete multipartite graph, kept nonincreasing.
/// The empty sequence denotes the graph of order 0.
class PartSizes {
 public:
  PartSizes() = default;
  explicit PartSizes(std::vector<int> parts);
  PartSizes(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int count() const noexcept { return static_cast<int>(parts_.size()); }
  long long order() const noexcept;
  int operator[](std::size_t i) const { return parts_[i]; }

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const PartSizes&, const PartSizes&) = default;

 private:
  std::vector<int> parts_;
};

Graph empty_graph(int n);
Graph complete_graph(int n);

/// K_{n_1,...,n_k}; vertices are grouped consecutively by part in canonical order.
Graph complete_multipartite(const PartSizes& parts);

/// Part sizes of the Turán graph T_k(n). For k >= n this is n singletons.
PartSizes turan_parts(int n, int k);

/// Part sizes of G_k(n,s) = T_{k-1}(s) v K̄_{n-s}.
PartSizes gkns_parts(int n, int k, int s);

Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// K_{b_1,...,b_{k-1}} v (K̄_a ∪ K_{a1}). Layout: the parts of b_parts in
/// order, then the a independent vertices, then the a1 clique vertices.
Graph join_family(const PartSizes& b_parts, int a, int a1);

/// Vertex blocks B_1, ..., B_{k-1}, Ã, A_1 of join_family(b_parts, a, a1).
/// Ã is omitted when a == 0.
std::vector<std::vector<Vertex>> join_family_blocks(const PartSizes& b_parts, int a, int a1);

/// G_{u->v}: u loses its edges and is joined to N(v). Requires u != v, uv not an edge.
Graph switch_vertex(const Graph& g, Vertex u, Vertex v);

/// G_{S->T} for disjoint independent sets S, T with uniform neighborhoods and
/// no S-T edges. All hypotheses are checked.
Graph switch_sets(const Graph& g, const VertexSet& s, const VertexSet& t);

/// Makes v a clone of the class `target`, whose members must share one
/// neighborhood N; v ends up adjacent to exactly N \ {v}.
Graph shift_vertex(const Graph& g, Vertex v, const VertexSet& target);

/// Part sizes if g is complete multipartite (non-adjacency is an equivalence
/// relation), std::nullopt otherwise.
std::optional<PartSizes> multipartite_parts(const Graph& g);

}  // namespace spexkm
