#include "spexkm/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "spexkm/detail/blossom.hpp"
#include "spexkm/errors.hpp"
#include "spexkm/graph.hpp"
#include "spexkm/graph6.hpp"
#include "spexkm/invariants.hpp"
#include "spexkm/spectral.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spexkm {

namespace {

using Mask = std::uint16_t;
static_assert(sizeof(Mask) * 8 >= kOracleHardCap);

struct Problem {
  int n = 0;
  int k = 0;  // 0: no clique constraint
  int s = 0;
  Objective objective = Objective::Edges;
  std::vector<std::pair<int, int>> edges;  // graph6 order
};

struct Node {
  std::array<Mask, kOracleHardCap> adj{};
  std::array<int, kOracleHardCap> mate{};
  int matched = 0;  // size of the stored matching, a lower bound on ν
  int bound = 0;    // upper bound on ν
  int edges = 0;
  int depth = 0;
};

struct MaskAdjacency {
  int n;
  const Mask* adj;
  int order() const { return n; }
  template <typename F>
  void for_each_neighbor(int v, F f) const {
    unsigned bits = adj[v];
    while (bits) {
      f(std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
};

bool contains_clique(const Node& node, unsigned cand, int need) {
  if (need <= 0) return true;
  if (std::popcount(cand) < need) return false;
  while (cand) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (std::popcount(cand) + 1 < need) return false;
    if (contains_clique(node, cand & node.adj[v], need - 1)) return true;
  }
  return false;
}

Graph to_graph(const Problem& p, const Node& node) {
  Graph g(p.n);
  for (int v = 0; v < p.n; ++v) {
    unsigned bits = node.adj[v];
    while (bits) {
      const int u = std::countr_zero(bits);
      bits &= bits - 1;
      if (u > v) g.add_edge(u, v);
    }
  }
  return g;
}

// Witness pool ordered by graph6 text, keeping values so ties can be re-filtered.
struct Pool {
  double best = -std::numeric_limits<double>::infinity();
  double floor = -std::numeric_limits<double>::infinity();  // known feasible value, prunes only
  std::map<std::string, double> witnesses;
  long long examined = 0;

  double bar() const { return std::max(best, floor); }

  double slack(Objective obj) const { return obj == Objective::Spectral ? kSpectralTieTolerance : 0.5; }

  void offer(Objective obj, double value, const std::string& g6) {
    const double eps = slack(obj);
    if (value > best + eps) {
      best = value;
      witnesses.clear();
    } else if (value < best - eps) {
      return;
    } else if (value > best) {
      best = value;
      std::erase_if(witnesses, [&](const auto& w) { return w.second < best - eps; });
    }
    witnesses.emplace(g6, value);
    if (witnesses.size() > kWitnessCap) witnesses.erase(std::prev(witnesses.end()));
  }
};

class Searcher {
 public:
  explicit Searcher(const Problem& p) : p_(p) {}

  // Adds edge `e` to `node` if the result stays feasible.
  bool include(Node& node, int e) {
    const auto [u, v] = p_.edges[static_cast<std::size_t>(e)];
    if (p_.k > 0) {
      // K_{k+1} appears iff the common neighbourhood holds a K_{k-1}
      if (p_.k == 1) return false;
      if (contains_clique(node, static_cast<unsigned>(node.adj[u] & node.adj[v]), p_.k - 1)) return false;
    }
    node.adj[u] |= static_cast<Mask>(1U << v);
    node.adj[v] |= static_cast<Mask>(1U << u);
    ++node.edges;
    if (node.mate[u] == -1 && node.mate[v] == -1) {
      node.mate[u] = v;
      node.mate[v] = u;
      ++node.matched;
    }
    node.bound = std::min(node.bound + 1, p_.n / 2);
    if (node.matched > p_.s) return false;
    if (node.bound > p_.s) tighten(node);
    return node.matched <= p_.s;
  }

  // Makes the stored matching maximum.
  void tighten(Node& node) {
    const MaskAdjacency adj{p_.n, node.adj.data()};
    node.matched = blossom_.grow(adj, std::span<int>(node.mate.data(), static_cast<std::size_t>(p_.n)));
    node.bound = node.matched;
  }

  bool edge_maximal(Node node) {
    if (node.bound > node.matched) tighten(node);
    const int nu = node.matched;
    for (const auto& [u, v] : p_.edges) {
      if ((node.adj[u] >> v) & 1U) continue;
      if (p_.k > 0 && (p_.k == 1 || contains_clique(node, static_cast<unsigned>(node.adj[u] & node.adj[v]), p_.k - 1)))
        continue;  // blocked by the clique constraint
      if (nu < p_.s) return false;
      Node probe = node;
      probe.adj[u] |= static_cast<Mask>(1U << v);
      probe.adj[v] |= static_cast<Mask>(1U << u);
      if (probe.mate[u] == -1 && probe.mate[v] == -1) continue;  // ν would reach s+1
      tighten(probe);
      if (probe.matched <= p_.s) return false;
    }
    return true;
  }

  void leaf(const Node& node, Pool& pool) {
    if (p_.objective == Objective::Edges) {
      if (node.edges < pool.bar() - 0.5) return;
      pool.offer(p_.objective, node.edges, graph6_encode(to_graph(p_, node)));
      return;
    }
    if (!edge_maximal(node)) return;
    const Graph g = to_graph(p_, node);
    pool.offer(p_.objective, spectral_radius_dense(g).lambda, graph6_encode(g));
  }

  void dfs(Node& node, Pool& pool) {
    ++pool.examined;
    const int m = static_cast<int>(p_.edges.size());
    if (node.depth == m) {
      leaf(node, pool);
      return;
    }
    if (p_.objective == Objective::Edges && node.edges + (m - node.depth) < pool.bar() - 0.5) return;
    const int e = node.depth;
    Node with = node;
    ++with.depth;
    if (include(with, e)) dfs(with, pool);
    ++node.depth;
    dfs(node, pool);
    --node.depth;
  }

  // Edge count of the include-first greedy leaf: feasible, so a safe floor.
  int greedy_edges(Node node) {
    const int m = static_cast<int>(p_.edges.size());
    for (; node.depth < m; ++node.depth) {
      Node with = node;
      if (include(with, node.depth)) node = with;
    }
    return node.edges;
  }

  // Feasible prefixes after `depth` decisions, in DFS order.
  void collect(Node& node, int depth, std::vector<Node>& out, long long& examined) {
    if (node.depth == depth) {
      out.push_back(node);
      return;
    }
    ++examined;
    Node with = node;
    ++with.depth;
    if (include(with, node.depth)) collect(with, depth, out, examined);
    ++node.depth;
    collect(node, depth, out, examined);
    --node.depth;
  }

 private:
  const Problem& p_;
  detail::Blossom<MaskAdjacency> blossom_;
};

Problem make_problem(int n, int k, int s, Objective objective, const SearchOptions& options,
                     std::vector<std::string>& warnings) {
  if (n < 1) throw DomainError("oracle: n must be >= 1");
  if (k < 0) throw DomainError("oracle: k must be >= 1");
  if (s < 0) throw DomainError("oracle: s must be >= 0");
  if (n > kOracleHardCap)
    throw CapacityError("oracle: n = " + std::to_string(n) + " exceeds the hard cap " + std::to_string(kOracleHardCap));
  const int cap = objective == Objective::Spectral ? kOracleSpectralCap : kOracleEdgesCap;
  if (n > cap) {
    if (!options.allow_large)
      throw CapacityError("oracle: n = " + std::to_string(n) + " exceeds the default cap " + std::to_string(cap) +
                          " for this objective");
    warnings.push_back("n = " + std::to_string(n) + " exceeds the default cap " + std::to_string(cap) +
                       "; the search may take very long");
  }
  Problem p{n, k, s, objective, {}};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) p.edges.emplace_back(i, j);
  return p;
}

// Edge count of the best standard construction that is verifiably feasible.
double construction_floor(const Problem& p) {
  std::vector<Graph> candidates;
  auto padded = [&](const PartSizes& parts) {
    return disjoint_union(complete_multipartite(parts), empty_graph(p.n - static_cast<int>(parts.order())));
  };
  const int core = std::min(p.n, 2 * p.s + 1);
  if (p.k == 0) {
    candidates.push_back(padded(turan_parts(core, core)));
    if (p.s >= 1 && p.n > p.s) candidates.push_back(padded(gkns_parts(p.n, p.s + 1, p.s)));
  } else {
    candidates.push_back(padded(turan_parts(core, p.k)));
    if (p.k >= 2 && p.s >= 1 && p.n > p.s) candidates.push_back(padded(gkns_parts(p.n, p.k, p.s)));
  }
  double best = 0;
  for (const auto& g : candidates) {
    const bool free = (p.k == 0 || !has_clique(g, p.k + 1)) && matching_number(g) <= p.s;
    if (free) best = std::max(best, static_cast<double>(g.edge_count()));
  }
  return best;
}

Node root(const Problem& p) {
  Node node;
  node.mate.fill(-1);
  (void)p;
  return node;
}

void finish(const Problem& p, const Pool& pool, SearchReport& report) {
  report.best_value = pool.best;
  const double eps = pool.slack(p.objective);
  for (const auto& [g6, value] : pool.witnesses)
    if (value >= pool.best - eps) report.witnesses.push_back(g6);
  // every emitted witness is re-verified from its graph6 text
  for (const auto& g6 : report.witnesses) {
    const Graph g = graph6_decode(g6);
    const bool free = (p.k == 0 || !has_clique(g, p.k + 1)) && matching_number(g) <= p.s;
    const double value =
        p.objective == Objective::Edges ? static_cast<double>(g.edge_count()) : spectral_radius_dense(g).lambda;
    if (!free || std::abs(value - pool.best) > eps)
      throw std::logic_error("oracle: witness " + g6 + " failed re-verification");
  }
}

SearchReport run_parallel(Problem p, const SearchOptions& options, SearchReport report) {
  const auto start = std::chrono::steady_clock::now();
  const int m = static_cast<int>(p.edges.size());
  const int split = std::clamp(options.split_depth, 0, m);

  std::vector<Node> prefixes;
  long long examined = 0;
  double floor = -std::numeric_limits<double>::infinity();
  {
    Searcher searcher(p);
    Node r = root(p);
    searcher.collect(r, split, prefixes, examined);
    // subtrees do not share an incumbent, so give them all the same start
    if (p.objective == Objective::Edges)
      floor = std::max<double>(searcher.greedy_edges(root(p)), construction_floor(p));
  }

  std::vector<Pool> pools(prefixes.size());
  for (auto& pool : pools) pool.floor = floor;
  const long long count = static_cast<long long>(prefixes.size());
#ifdef _OPENMP
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
  {
    Searcher searcher(p);
#pragma omp for schedule(dynamic)
    for (long long i = 0; i < count; ++i) {
      Node node = prefixes[static_cast<std::size_t>(i)];
      searcher.dfs(node, pools[static_cast<std::size_t>(i)]);
    }
  }

  Pool merged;
  merged.examined = examined;
  for (const auto& pool : pools) {
    merged.examined += pool.examined;
    for (const auto& [g6, value] : pool.witnesses) merged.offer(p.objective, value, g6);
  }
  if (merged.best == -std::numeric_limits<double>::infinity()) merged.best = 0;  // unreachable: K̄_n is feasible
  report.examined = merged.examined;
  finish(p, merged, report);
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

SearchReport base_report(int n, int k, int s, Objective objective) {
  SearchReport r;
  r.n = n;
  r.k = k;
  r.s = s;
  r.objective = objective;
  return r;
}

}  // namespace

const char* objective_name(Objective objective) {
  return objective == Objective::Edges ? "edges" : "spectral";
}

SearchReport enumerate_extremal(int n, int k, int s, Objective objective, const SearchOptions& options) {
  if (k < 1) throw DomainError("enumerate_extremal: k must be >= 1");
  SearchReport report = base_report(n, k, s, objective);
  Problem p = make_problem(n, k, s, objective, options, report.warnings);
  return run_parallel(std::move(p), options, std::move(report));
}

SearchReport enumerate_matching_extremal(int n, int s, Objective objective, const SearchOptions& options) {
  SearchReport report = base_report(n, 0, s, objective);
  Problem p = make_problem(n, 0, s, objective, options, report.warnings);
  return run_parallel(std::move(p), options, std::move(report));
}

SearchReport enumerate_extremal_serial(int n, int k, int s, Objective objective, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SearchReport report = base_report(n, k, s, objective);
  const Problem p = make_problem(n, k, s, objective, options, report.warnings);
  Searcher searcher(p);
  Pool pool;
  Node r = root(p);
  searcher.dfs(r, pool);
  report.examined = pool.examined;
  finish(p, pool, report);
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace spexkm
