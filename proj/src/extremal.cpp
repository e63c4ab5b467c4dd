#include "spexkm/extremal.hpp"

#include <algorithm>
#include <string>

#include "spexkm/errors.hpp"
#include "spexkm/spectral.hpp"

namespace spexkm {

namespace {

std::string str(long long v) { return std::to_string(v); }

ExtremalWitness clique_plus_isolated(int clique, int n) {
  const int isolated = std::max(0, n - clique);
  std::string name = "K_" + str(clique);
  if (isolated > 0) name += " ∪ K̄_" + str(isolated);
  return {name, PartSizes(std::vector<int>(static_cast<std::size_t>(clique), 1)), isolated};
}

// K_s v K̄_{n-s}
PartSizes clique_join_independent(int n, int s) {
  std::vector<int> parts(static_cast<std::size_t>(s), 1);
  if (n - s > 0) parts.push_back(n - s);
  return PartSizes(std::move(parts));
}

}  // namespace

long long multipartite_edges(const PartSizes& parts) {
  const long long n = parts.order();
  long long squares = 0;
  for (int p : parts) squares += static_cast<long long>(p) * p;
  return (n * n - squares) / 2;
}

long long edges_turan(int n, int k) { return multipartite_edges(turan_parts(n, k)); }

long long edges_gkns(int n, int k, int s) { return multipartite_edges(gkns_parts(n, k, s)); }

ExtremalValue ex_alon_frankl(int n, int k, int s) {
  if (s < 0) throw DomainError("ex_alon_frankl: s must be >= 0");
  const long long turan = edges_turan(2 * s + 1, k);
  const long long gkns = edges_gkns(n, k, s);
  ExtremalValue out;
  out.integral = true;
  out.value = static_cast<double>(std::max(turan, gkns));
  out.regime = (n >= 2 * s + 1 && k >= 2) ? "theorem" : "outside-theorem";
  if (turan >= gkns) {
    const int isolated = std::max(0, n - (2 * s + 1));
    std::string name = "T_" + str(k) + "(" + str(2 * s + 1) + ")";
    if (isolated > 0) name += " ∪ K̄_" + str(isolated);
    out.witnesses.push_back({name, turan_parts(2 * s + 1, k), isolated});
  }
  if (gkns >= turan)
    out.witnesses.push_back({"G_" + str(k) + "(" + str(n) + "," + str(s) + ")", gkns_parts(n, k, s), 0});
  return out;
}

ExtremalValue ex_erdos_gallai(int n, int s) {
  if (s < 0 || n < 0) throw DomainError("ex_erdos_gallai: need n, s >= 0");
  ExtremalValue out;
  out.integral = true;
  out.regime = n >= 2 * s + 1 ? "theorem" : "outside-theorem";
  if (s == 0) {
    out.value = 0;
    out.witnesses.push_back({"K̄_" + str(n), std::nullopt, n});
    return out;
  }
  const long long join_edges = static_cast<long long>(s) * (s - 1) / 2 + static_cast<long long>(s) * (n - s);
  const long long clique_edges = static_cast<long long>(2 * s + 1) * (2 * s) / 2;
  out.value = static_cast<double>(std::max(join_edges, clique_edges));
  if (join_edges >= clique_edges)
    out.witnesses.push_back({"K_" + str(s) + " v K̄_" + str(n - s), clique_join_independent(n, s), 0});
  if (clique_edges >= join_edges) out.witnesses.push_back(clique_plus_isolated(2 * s + 1, n));
  return out;
}

ExtremalValue spex_matching(int n, int s) {
  if (n < 1 || s < 1) throw DomainError("spex_matching: need n >= 1 and s >= 1");
  ExtremalValue out;
  if (n <= 2 * s + 1) {
    out.value = n - 1;
    out.regime = n < 2 * s ? "n<2s (every graph is M_{s+1}-free)" : "n in {2s,2s+1}";
    out.witnesses.push_back(clique_plus_isolated(n, n));
    return out;
  }
  const double clique = 2.0 * s;
  if (n < 3 * s + 2) {
    out.value = clique;
    out.regime = "2s+2<=n<3s+2";
    out.witnesses.push_back(clique_plus_isolated(2 * s + 1, n));
    return out;
  }
  const PartSizes join = clique_join_independent(n, s);
  const double join_lambda = multipartite_lambda(join);
  const ExtremalWitness join_witness{"K_" + str(s) + " v K̄_" + str(n - s), join, 0};
  if (n == 3 * s + 2) {
    out.value = std::max(join_lambda, clique);
    out.regime = "n=3s+2";
    out.witnesses.push_back(join_witness);
    out.witnesses.push_back(clique_plus_isolated(2 * s + 1, n));
    return out;
  }
  out.value = join_lambda;
  out.regime = "n>3s+2";
  out.witnesses.push_back(join_witness);
  return out;
}

double spex_turan(int n, int k) { return multipartite_lambda(turan_parts(n, k)); }

long long spex_main_bound(int s) { return 4LL * s * s + 9LL * s; }

ExtremalValue spex_main(int n, int k, int s) {
  if (k < 2) throw DomainError("spex_main: k must be >= 2");
  const PartSizes parts = gkns_parts(n, k, s);
  ExtremalValue out;
  out.value = multipartite_lambda(parts);
  out.witnesses.push_back({"G_" + str(k) + "(" + str(n) + "," + str(s) + ")", parts, 0});
  if (n >= spex_main_bound(s)) {
    out.regime = "theorem";
  } else {
    out.regime = "conjectural-small-n";
    out.competitor = spex_turan(std::min(n, 2 * s + 1), k);
  }
  return out;
}

PartSizes balance_move(const PartSizes& parts, int i, int j) {
  if (i < 0 || j < 0 || i >= parts.count() || j >= parts.count() || i == j)
    throw DomainError("balance_move: part indices out of range");
  if (parts[i] - parts[j] < 2) throw DomainError("balance_move: need n_i - n_j >= 2");
  std::vector<int> moved(parts.begin(), parts.end());
  --moved[i];
  ++moved[j];
  return PartSizes(std::move(moved));
}

std::optional<int> crossover_threshold(int k, int s, int n_max) {
  if (k < 2 || s < 1) throw DomainError("crossover_threshold: need k >= 2 and s >= 1");
  if (n_max < 2 * s + 1) throw DomainError("crossover_threshold: n_max must be >= 2s+1");
  const double target = spex_turan(2 * s + 1, k) - 1e-12;
  auto crossed = [&](int n) { return multipartite_lambda(gkns_parts(n, k, s)) >= target; };
  if (!crossed(n_max)) return std::nullopt;
  // λ(G_k(n,s)) is nondecreasing in n
  int lo = 2 * s + 1;
  int hi = n_max;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (crossed(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace spexkm
