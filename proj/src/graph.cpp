#include "spexkm/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "spexkm/errors.hpp"

namespace spexkm {

namespace {

std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

void check_order(long long n) {
  if (n < 0) throw DomainError("negative vertex count");
  if (n > kMaxVertices)
    throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(kMaxVertices));
}

}  // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(int universe) : universe_(universe), words_(words_for(universe), 0) {
  if (universe < 0) throw DomainError("negative universe");
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1U;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

int VertexSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) throw DomainError("union with a larger universe");
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(int n) {
  check_order(n);
  n_ = n;
  words_ = words_for(n);
  bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

long long Graph::edge_count() const noexcept {
  long long twice = 0;
  for (auto w : bits_) twice += std::popcount(w);
  return twice / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
}

int Graph::degree(Vertex v) const {
  int d = 0;
  for (auto w : row(v)) d += std::popcount(w);
  return d;
}

VertexSet Graph::neighbors(Vertex v) const {
  const auto r = row(v);
  VertexSet s(n_);
  std::copy(r.begin(), r.end(), s.words_.begin());
  return s;
}

std::span<const std::uint64_t> Graph::row(Vertex v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
}

void Graph::check_invariants() const {
  if (bits_.size() != static_cast<std::size_t>(n_) * words_) throw std::logic_error("row storage mismatch");
  for (Vertex u = 0; u < n_; ++u) {
    if (has_edge(u, u)) throw std::logic_error("loop at vertex " + std::to_string(u));
    const auto r = row(u);
    // padding bits beyond n must stay clear
    if (n_ % 64 != 0 && (r[words_ - 1] >> (n_ % 64)) != 0) throw std::logic_error("stray padding bit");
    for (Vertex v = u + 1; v < n_; ++v)
      if (has_edge(u, v) != has_edge(v, u))
        throw std::logic_error("asymmetric adjacency at " + std::to_string(u) + "," + std::to_string(v));
  }
}

// ---------------------------------------------------------------- PartSizes

PartSizes::PartSizes(std::vector<int> parts) : parts_(std::move(parts)) {
  long long total = 0;
  for (int p : parts_) {
    if (p < 1) throw DomainError("part sizes must be positive");
    total += p;
  }
  if (total > 1'000'000'000LL) throw CapacityError("part sizes sum too large");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

PartSizes::PartSizes(std::initializer_list<int> parts) : PartSizes(std::vector<int>(parts)) {}

long long PartSizes::order() const noexcept {
  long long total = 0;
  for (int p : parts_) total += p;
  return total;
}

// ------------------------------------------------------------- constructions

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_multipartite(const PartSizes& parts) {
  check_order(parts.order());
  const int n = static_cast<int>(parts.order());
  std::vector<int> part_of;
  part_of.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < parts.count(); ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), i);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

PartSizes turan_parts(int n, int k) {
  if (k < 1) throw DomainError("turan_parts: k must be >= 1");
  if (n < 0) throw DomainError("turan_parts: n must be >= 0");
  if (k >= n) return PartSizes(std::vector<int>(static_cast<std::size_t>(n), 1));
  std::vector<int> parts(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++parts[i];
  return PartSizes(std::move(parts));
}

PartSizes gkns_parts(int n, int k, int s) {
  if (k < 2) throw DomainError("gkns_parts: k must be >= 2");
  if (s < 0 || s > n || n - s < 1) throw DomainError("gkns_parts: need 0 <= s < n");
  std::vector<int> parts{n - s};
  for (int p : turan_parts(s, k - 1)) parts.push_back(p);
  return PartSizes(std::move(parts));
}

namespace {

Graph union_of(const Graph& g, const Graph& h, bool cross) {
  check_order(static_cast<long long>(g.order()) + h.order());
  const int off = g.order();
  Graph out(off + h.order());
  for (Vertex u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](Vertex v) {
      if (u < v) out.add_edge(u, v);
    });
  for (Vertex u = 0; u < h.order(); ++u)
    h.neighbors(u).for_each([&](Vertex v) {
      if (u < v) out.add_edge(off + u, off + v);
    });
  if (cross)
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, off + v);
  return out;
}

}  // namespace

Graph join(const Graph& g, const Graph& h) { return union_of(g, h, true); }

Graph disjoint_union(const Graph& g, const Graph& h) { return union_of(g, h, false); }

Graph join_family(const PartSizes& b_parts, int a, int a1) {
  if (a < 0 || a1 < 1) throw DomainError("join_family: need a >= 0 and a1 >= 1");
  check_order(b_parts.order() + a + a1);
  return join(complete_multipartite(b_parts), disjoint_union(empty_graph(a), complete_graph(a1)));
}

std::vector<std::vector<Vertex>> join_family_blocks(const PartSizes& b_parts, int a, int a1) {
  if (a < 0 || a1 < 1) throw DomainError("join_family_blocks: need a >= 0 and a1 >= 1");
  std::vector<std::vector<Vertex>> blocks;
  Vertex next = 0;
  auto take = [&](int size) {
    std::vector<Vertex> block(static_cast<std::size_t>(size));
    for (auto& v : block) v = next++;
    blocks.push_back(std::move(block));
  };
  for (int b : b_parts) take(b);
  if (a > 0) take(a);
  take(a1);
  return blocks;
}

Graph switch_vertex(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw DomainError("switch: u and v must differ");
  if (g.has_edge(u, v)) throw DomainError("switch: u and v must be non-adjacent");
  Graph out = g;
  g.neighbors(u).for_each([&](Vertex w) { out.remove_edge(u, w); });
  g.neighbors(v).for_each([&](Vertex w) { out.add_edge(u, w); });
  return out;
}

namespace {

// Common neighborhood of every member of `set`, or throws if members differ.
VertexSet uniform_neighborhood(const Graph& g, const VertexSet& set, const char* what) {
  const auto members = set.members();
  if (members.empty()) throw DomainError(std::string(what) + ": vertex set is empty");
  VertexSet hood = g.neighbors(members.front());
  for (Vertex v : members)
    if (g.neighbors(v) != hood)
      throw DomainError(std::string(what) + ": vertex " + std::to_string(v) + " has a different neighborhood");
  return hood;
}

}  // namespace

Graph switch_sets(const Graph& g, const VertexSet& s, const VertexSet& t) {
  if (s.universe() != g.order() || t.universe() != g.order())
    throw DomainError("switch_sets: vertex sets must range over the graph's vertices");
  if (s.intersects(t)) throw DomainError("switch_sets: S and T must be disjoint");
  const VertexSet ns = uniform_neighborhood(g, s, "switch_sets(S)");
  const VertexSet nt = uniform_neighborhood(g, t, "switch_sets(T)");
  // uniform neighborhoods plus S ∩ N(S) = ∅ gives independence
  if (ns.intersects(s)) throw DomainError("switch_sets: S is not independent");
  if (nt.intersects(t)) throw DomainError("switch_sets: T is not independent");
  if (ns.intersects(t)) throw DomainError("switch_sets: edges between S and T");
  Graph out = g;
  s.for_each([&](Vertex u) {
    ns.for_each([&](Vertex w) { out.remove_edge(u, w); });
    nt.for_each([&](Vertex w) { out.add_edge(u, w); });
  });
  return out;
}

Graph shift_vertex(const Graph& g, Vertex v, const VertexSet& target) {
  if (target.universe() != g.order()) throw DomainError("shift_vertex: target must range over the graph's vertices");
  if (target.contains(v)) throw DomainError("shift_vertex: v already belongs to the target class");
  VertexSet hood = uniform_neighborhood(g, target, "shift_vertex");
  hood.erase(v);
  Graph out = g;
  g.neighbors(v).for_each([&](Vertex w) { out.remove_edge(v, w); });
  hood.for_each([&](Vertex w) { out.add_edge(v, w); });
  return out;
}

std::optional<PartSizes> multipartite_parts(const Graph& g) {
  const int n = g.order();
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  std::vector<int> sizes;
  for (Vertex v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    VertexSet cls = VertexSet::full(n);
    cls -= g.neighbors(v);
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    bool ok = true;
    cls.for_each([&](Vertex u) {
      if (part[u] >= 0) ok = false;
      part[u] = id;
      ++sizes.back();
    });
    if (!ok) return std::nullopt;
  }
  // every vertex must see exactly the vertices outside its own class
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u = v + 1; u < n; ++u)
      if (g.has_edge(u, v) == (part[u] == part[v])) return std::nullopt;
  return PartSizes(std::move(sizes));
}

}  // namespace spexkm
