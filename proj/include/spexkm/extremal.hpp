#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spexkm/graph.hpp"

namespace spexkm {

/// A graph attaining an extremal value, by name and (when it is complete
/// multipartite plus isolated vertices) by part sizes.
struct ExtremalWitness {
  std::string family;           // e.g. "G_3(10,3)", "T_2(5) ∪ K̄_1"
  std::optional<PartSizes> parts;
  int isolated = 0;             // extra isolated vertices beside `parts`
};

struct ExtremalValue {
  double value = 0.0;
  bool integral = false;  // value is an exact edge count
  std::vector<ExtremalWitness> witnesses;
  std::string regime;
  std::optional<double> competitor;  // spex_main small-n rival λ(T_k(min(n, 2s+1)))
};

/// sum_{i<j} n_i n_j.
long long multipartite_edges(const PartSizes& parts);

long long edges_turan(int n, int k);
long long edges_gkns(int n, int k, int s);

/// max{|T_k(2s+1)|, |G_k(n,s)|}; regime "theorem" iff n >= 2s+1 and k >= 2.
ExtremalValue ex_alon_frankl(int n, int k, int s);

/// max{|E(K_s v K̄_{n-s})|, C(2s+1, 2)}.
ExtremalValue ex_erdos_gallai(int n, int s);

/// Piecewise spectral extremum for M_{s+1}-free graphs on n vertices.
ExtremalValue spex_matching(int n, int s);

/// λ(T_k(n)).
double spex_turan(int n, int k);

/// λ(G_k(n,s)); regime "theorem" when n >= 4s^2 + 9s, else "conjectural-small-n"
/// with the competitor λ(T_k(min(n, 2s+1))).
ExtremalValue spex_main(int n, int k, int s);

/// Lower bound 4s^2 + 9s of the main spectral theorem.
long long spex_main_bound(int s);

/// Moves one vertex from part i to part j (indices into the canonical order).
/// Requires parts[i] - parts[j] >= 2.
PartSizes balance_move(const PartSizes& parts, int i, int j);

/// Smallest n in [2s+1, n_max] with λ(G_k(n,s)) >= λ(T_k(2s+1)) - 1e-12.
std::optional<int> crossover_threshold(int k, int s, int n_max);

}  // namespace spexkm
